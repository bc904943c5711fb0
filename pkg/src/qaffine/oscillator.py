"""Truncated Fock realization of the q-oscillator algebra and the Borel
homomorphisms built on it.

Conventions: D|n> = n|n>, the raising operator sends |n> to |n+1> (cut at
the top), and a|n> = (1 - q^(2n))|n-1>.  Then a'a = 1 - q^(2D) holds on
every state and a a' = 1 - q^2 q^(2D) on all states below the top one.
The one- and two-copy homomorphism families into the Borel halves carry
free parameters (rho, mu_i, nu_i); the defaults reproduce the specific
specializations whose assembled forms are transcribed in the reference
module.
"""

from fractions import Fraction

from .scalars import QScalar, q_power
from .linalg import OpMatrix, kron
from .qgroup import GeneratorImage

__all__ = [
    "FockRep", "fock_rep", "chi_images", "psi_images", "osc_automorphism",
    "two_copy_automorphism", "tau_matrix", "gamma_scaling", "OscParams",
]

ONE = QScalar.ONE


class FockRep:
    """Matrices of a, a-dagger and q^(cD) on the d-state Fock space."""

    __slots__ = ("dim",)

    def __init__(self, dim):
        if dim < 2:
            raise ValueError("Fock dimension must be at least 2")
        self.dim = dim

    def raising(self):
        return OpMatrix(self.dim, {(n + 1, n): ONE for n in range(self.dim - 1)},
                        ONE)

    def lowering(self):
        return OpMatrix(self.dim,
                        {(n - 1, n): ONE - q_power(2 * n)
                         for n in range(1, self.dim)}, ONE)

    def number(self):
        return OpMatrix.diagonal([QScalar.from_int(n) for n in range(self.dim)],
                                 ONE)

    def q_number_power(self, c):
        """q^(cD) for c integer or sixth-integer."""
        c = Fraction(c)
        return OpMatrix.diagonal([q_power(c * n) for n in range(self.dim)], ONE)


def fock_rep(d):
    return FockRep(d)


class OscParams:
    """Free parameters of an oscillator-side Borel homomorphism."""

    __slots__ = ("rho", "mu", "nu")

    def __init__(self, rho, mu, nu):
        self.rho = rho
        self.mu = tuple(mu)
        self.nu = tuple(nu)
        if any(not m for m in self.mu):
            raise ValueError("mu parameters must be invertible")


def _c_inv():
    # 1/(q - q^-1)
    return (q_power(1) - q_power(-1)).inverse()


def _a1_defaults(side):
    c = q_power(1) - q_power(-1)
    if side == "chi":
        return OscParams((c * c).inverse(), [c], [Fraction(0)])
    return OscParams((c * c).inverse(), [c.inverse()], [Fraction(0)])


def _a2_defaults(side, family):
    c = q_power(1) - q_power(-1)
    rho = (c * c * c).inverse()
    if family == 2:
        rho = -rho
    if side == "chi":
        mu = [c, c]
    else:
        mu = [c.inverse(), c.inverse()]
    return OscParams(rho, mu, [Fraction(0)] * 3)


def chi_images(algebra, s, s1, s2=0, d=12, family=1, params=None,
               zeta_scale=1):
    """Positive-Borel homomorphism on one (rank 1) or two (rank 2) copies.

    For the rank-2 algebra `family` selects between the two inequivalent
    solutions of the Serre relations.
    """
    if algebra == "a1":
        params = params or _a1_defaults("chi")
        f = FockRep(d)
        a = f.lowering()
        ad = f.raising()
        rho, (mu,), (nu,) = params.rho, params.mu, params.nu
        e0 = a.scale(rho * mu) * f.q_number_power(nu)
        e1 = f.q_number_power(-nu) * ad.scale(mu.inverse())
        h = [tuple(-2 * n for n in range(d)), tuple(2 * n for n in range(d))]
        img = GeneratorImage("a1", d, h, [e0, e1], [None, None],
                             _scaled_exps("a1", s, s1, s2, zeta_scale),
                             safe_window=d - 1, copies=1, copy_dim=d)
        return img
    if algebra != "a2":
        raise ValueError("unsupported algebra label: %r" % (algebra,))
    params = params or _a2_defaults("chi", family)
    rho, (mu1, mu2), (nu1, nu2, nu3) = params.rho, params.mu, params.nu
    f = FockRep(d)
    eye = OpMatrix.identity(d, ONE)
    a1, a1d = kron(f.lowering(), eye), kron(f.raising(), eye)
    a2, a2d = kron(eye, f.lowering()), kron(eye, f.raising())

    def qq(c1, c2):
        return kron(f.q_number_power(c1), f.q_number_power(c2))

    if family == 1:
        e0 = (a1 * a2).scale(rho * mu1 * mu2) * qq(nu1 + nu2 - 1, nu2 + nu3 - 2)
        e2 = qq(-(nu2 - 1), -nu3) * a2d.scale(mu2.inverse())
    else:
        e0 = (a1 * a2).scale(rho * mu1 * mu2) * qq(nu1 + nu2 - 1, nu2 + nu3)
        e2 = qq(-(nu2 + 1), -nu3) * a2d.scale(mu2.inverse())
    e1 = qq(-nu1, -nu2) * a1d.scale(mu1.inverse())
    h = _two_copy_h(d)
    return GeneratorImage("a2", d * d, h, [e0, e1, e2], [None, None, None],
                          _scaled_exps("a2", s, s1, s2, zeta_scale),
                          safe_window=d - 1, copies=2, copy_dim=d)


def psi_images(algebra, s, s1, s2=0, d=12, family=1, params=None,
               zeta_scale=1):
    """Negative-Borel homomorphism; mirrors chi_images on the f side."""
    if algebra == "a1":
        params = params or _a1_defaults("psi")
        f = FockRep(d)
        a = f.lowering()
        ad = f.raising()
        rho, (mu,), (nu,) = params.rho, params.mu, params.nu
        f0 = f.q_number_power(-nu) * ad.scale(rho * mu.inverse())
        f1 = a.scale(mu) * f.q_number_power(nu)
        h = [tuple(-2 * n for n in range(d)), tuple(2 * n for n in range(d))]
        return GeneratorImage("a1", d, h, [None, None], [f0, f1],
                              _scaled_exps("a1", s, s1, s2, zeta_scale),
                              safe_window=d - 1, copies=1, copy_dim=d)
    if algebra != "a2":
        raise ValueError("unsupported algebra label: %r" % (algebra,))
    params = params or _a2_defaults("psi", family)
    rho, (mu1, mu2), (nu1, nu2, nu3) = params.rho, params.mu, params.nu
    f = FockRep(d)
    eye = OpMatrix.identity(d, ONE)
    a1, a1d = kron(f.lowering(), eye), kron(f.raising(), eye)
    a2, a2d = kron(eye, f.lowering()), kron(eye, f.raising())

    def qq(c1, c2):
        return kron(f.q_number_power(c1), f.q_number_power(c2))

    scale0 = rho * mu1.inverse() * mu2.inverse()
    if family == 1:
        f0 = qq(-(nu1 + nu2 + 1), -(nu2 + nu3 + 2)) * (a1d * a2d).scale(scale0)
        f2 = a2.scale(mu2) * qq(nu2 + 1, nu3)
    else:
        f0 = qq(-(nu1 + nu2 + 1), -(nu2 + nu3)) * (a1d * a2d).scale(scale0)
        f2 = a2.scale(mu2) * qq(nu2 - 1, nu3)
    f1 = a1.scale(mu1) * qq(nu1, nu2)
    h = _two_copy_h(d)
    return GeneratorImage("a2", d * d, h, [None, None, None], [f0, f1, f2],
                          _scaled_exps("a2", s, s1, s2, zeta_scale),
                          safe_window=d - 1, copies=2, copy_dim=d)


def _scaled_exps(algebra, s, s1, s2, zeta_scale):
    if algebra == "a1":
        base = (s - s1, s1)
    else:
        base = (s - s1 - s2, s1, s2)
    return tuple(zeta_scale * x for x in base)


def _two_copy_h(d):
    # h_0 = -D1 - D2, h_1 = 2 D1 - D2, h_2 = -D1 + 2 D2
    h0, h1, h2 = [], [], []
    for n1 in range(d):
        for n2 in range(d):
            h0.append(-n1 - n2)
            h1.append(2 * n1 - n2)
            h2.append(-n1 + 2 * n2)
    return [tuple(h0), tuple(h1), tuple(h2)]


# -- automorphisms and the anti-involution -----------------------------------

def osc_automorphism(d, kappa, xi, one=ONE):
    """Conjugating diagonal realizing a -> kappa a q^(xi D) on d states.

    kappa is any invertible scalar of the target kind (a power of q, or a
    monomial in the spectral variable on the rational backend); xi must be
    a sixth-integer.  Returns (S, S^-1) with S diagonal.
    """
    if not kappa:
        raise ValueError("kappa must be invertible")
    xi = Fraction(xi)
    diag = []
    inv = []
    kap_pow = one
    kap_inv = one
    kappa_inverse = one / kappa
    for n in range(d):
        tri = Fraction(n * (n + 1), 2)
        qpart = _q_power_like(-xi * tri, one)
        diag.append(kap_inv * qpart)
        inv.append(kap_pow * _q_power_like(xi * tri, one))
        kap_pow = kap_pow * kappa
        kap_inv = kap_inv * kappa_inverse
    s = OpMatrix.diagonal(diag, one)
    s_inv = OpMatrix.diagonal(inv, one)
    return s, s_inv


def _q_power_like(c, one):
    qp = q_power(c)
    if isinstance(one, QScalar):
        return qp
    # lift the Q(t) monomial into the coefficient field of `one`
    lift = one
    return _scale_like(lift, qp)


def _scale_like(one, q):
    # works for ZetaRational-like values exposing .scale
    return one.scale(q)


def two_copy_automorphism(d, kappas, xis, one=ONE):
    """Five-parameter family on two copies: a_i picks up kappa_i and the
    exponents (xi1 D1 + xi2 D2, xi2 D1 + xi3 D2).  Returns (S, S^-1)."""
    k1, k2 = kappas
    xi1, xi2, xi3 = (Fraction(x) for x in xis)
    if not k1 or not k2:
        raise ValueError("kappa must be invertible")
    diag = []
    inv = []
    k1_inv = one / k1
    k2_inv = one / k2
    for n1 in range(d):
        for n2 in range(d):
            expo = (xi1 * Fraction(n1 * (n1 + 1), 2) + xi2 * n1 * n2
                    + xi3 * Fraction(n2 * (n2 + 1), 2))
            base = _pow_like(k1_inv, n1, one) * _pow_like(k2_inv, n2, one)
            diag.append(base * _q_power_like(-expo, one))
            baseinv = _pow_like(k1, n1, one) * _pow_like(k2, n2, one)
            inv.append(baseinv * _q_power_like(expo, one))
    return OpMatrix.diagonal(diag, one), OpMatrix.diagonal(inv, one)


def _pow_like(x, n, one):
    out = one
    for _ in range(n):
        out = out * x
    return out


def tau_metric(d):
    """Diagonal g with g_n = prod_{k<=n} (1 - q^(2k)); conjugated transpose
    by g realizes the anti-involution swapping a and a-dagger."""
    diag = []
    acc = ONE
    for n in range(d):
        if n > 0:
            acc = acc * (ONE - q_power(2 * n))
        diag.append(acc)
    return OpMatrix.diagonal(diag, ONE)


def tau_matrix(m, d, copies=1):
    """Anti-involution on matrices over the (copies)-fold Fock space;
    works for any scalar kind by lifting the metric into it."""
    g = tau_metric(d)
    for _ in range(copies - 1):
        g = kron(g, tau_metric(d))
    g_diag = [g.entry(i, i) for i in range(g.dim)]
    one = m.one
    if not isinstance(one, QScalar):
        lift = lambda v: one.scale(v)
        gm = OpMatrix.diagonal([lift(v) for v in g_diag], one)
        gm_inv = OpMatrix.diagonal([lift(v.inverse()) for v in g_diag], one)
    else:
        gm = g
        gm_inv = OpMatrix.diagonal([v.inverse() for v in g_diag], one)
    return gm_inv * m.transpose() * gm


def gamma_scaling(copies, d, s_exponents):
    """Exponent table of the spectral gauge map: entry (row, col) of a
    number-conserving operator picks up zeta^(sum_i s_i (row_i - col_i))."""
    def exponent(row, col):
        out = 0
        r, c = row, col
        for i in range(copies - 1, -1, -1):
            out += s_exponents[i] * ((r % d) - (c % d))
            r //= d
            c //= d
        return out
    return exponent
