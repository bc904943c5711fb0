"""Ordered-product construction of R-matrices and L-operators.

Given a pair of leg homomorphisms the engine builds the images of all root
vectors up to the delta cutoff by the standard recursion (q-commutators for
the real directions, a graded logarithm for the imaginary ones), then
multiplies the factors in normal order:

    prefix block (real roots below delta) . imaginary exponential .
    suffix block (real roots above delta) . Cartan factor

All arithmetic is exact truncated series in the ratio of the two spectral
parameters; the left leg carries positive powers and the right leg the
matching negative ones, so only the ratio survives.  Oscillator legs are
built on an internally padded Fock space so that every reported matrix
element is free of truncation noise.
"""

from fractions import Fraction

from .scalars import QScalar, q_power, qint, qnum_base
from .series import ZetaSeries, series_exp
from .linalg import OpMatrix, kron
from .rootsys import extend_cartan, finite_cartan, positive_roots
from .qgroup import GeneratorImage, ScaledOp, phi_zeta, dynkin_twist
from .oscillator import chi_images, psi_images

__all__ = ["EngineParams", "EngineError", "RootVectorTable",
           "build_root_vectors", "assemble", "u_matrices",
           "check_normalization_constants"]

ONE = QScalar.ONE
C_FACTOR = q_power(1) - q_power(-1)          # q - q^-1
INV2 = qint(2).inverse()                      # 1/[2]_q


class EngineError(RuntimeError):
    pass


class EngineParams:
    """Everything one assembly needs.

    `left` is "phi" or "chi", `right` is "phi" or "psi"; `twist` (a node
    permutation) applies to the oscillator leg; `zeta_offset` evaluates the
    left leg at zeta^(offset+1) and the right leg at zeta^offset, which
    must not change the result.
    """

    def __init__(self, algebra, s, s1, s2=0, order=8, left="phi",
                 right="phi", family=1, twist=None, fock_dim=None,
                 zeta_offset=0, fock_pad=None, osc_params=None):
        if s < 1:
            raise EngineError("the series engine needs s >= 1")
        exps = (s - s1, s1) if algebra == "a1" else (s - s1 - s2, s1, s2)
        if any(x < 0 for x in exps):
            raise EngineError("node exponents must be non-negative, got %s"
                              % (exps,))
        if left not in ("phi", "chi") or right not in ("phi", "psi"):
            raise EngineError("left must be phi|chi and right phi|psi")
        self.algebra = algebra
        self.s, self.s1, self.s2 = s, s1, s2
        self.order = order
        self.left = left
        self.right = right
        self.family = family
        self.twist = twist
        self.fock_dim = fock_dim if fock_dim is not None else order + 4
        self.zeta_offset = zeta_offset
        self.osc_params = osc_params
        # truncation noise sits in a band at the top of the internal Fock
        # space; climbing paths from reported states stay below it once the
        # pad clears the band width (delta cutoff plus a few ladder steps)
        self._fock_pad = fock_pad if fock_pad is not None else self.m_max + 6

    @property
    def m_max(self):
        return self.order // self.s

    @property
    def fock_pad(self):
        return self._fock_pad

    def exps(self):
        if self.algebra == "a1":
            return (self.s - self.s1, self.s1)
        return (self.s - self.s1 - self.s2, self.s1, self.s2)


def _leg_images(params, which):
    a = params.zeta_offset
    scale = a + 1 if which == "left" else a
    kind = params.left if which == "left" else params.right
    if kind == "phi":
        return phi_zeta(params.algebra, params.s, params.s1, params.s2,
                        zeta_scale=scale)
    d_int = params.fock_dim + params.fock_pad
    if kind == "chi":
        img = chi_images(params.algebra, params.s, params.s1, params.s2,
                         d=d_int, family=params.family, zeta_scale=scale,
                         params=params.osc_params)
    else:
        img = psi_images(params.algebra, params.s, params.s1, params.s2,
                         d=d_int, family=params.family, zeta_scale=scale,
                         params=params.osc_params)
    if params.twist is not None:
        img = dynkin_twist(img, params.twist)
    return img


class RootVectorTable:
    """Images of the root vectors for one leg and one Borel side."""

    __slots__ = ("side", "real", "imag", "image", "m_max")

    def __init__(self, side, real, imag, image, m_max):
        self.side = side      # "e" or "f"
        self.real = real      # (finite_part, m) -> ScaledOp
        self.imag = imag      # (simple_index, m) -> ScaledOp
        self.image = image
        self.m_max = m_max

    def real_op(self, root):
        return self.real.get((root.finite_part, root.delta_mult))

    def imag_op(self, i, m):
        return self.imag.get((i, m))


def _finite_positive_parts(algebra):
    if algebra == "a1":
        return [(1,)]
    return [(1, 0), (1, 1), (0, 1)]


def build_root_vectors(image, side, m_max):
    """Run the recursion for one leg; `side` picks the Borel half."""
    algebra = image.algebra
    real = {}
    if side == "e":
        op = image.e_op
        sgn = 1
    else:
        op = image.f_op
        sgn = -1

    if algebra == "a1":
        real[((1,), 0)] = op(1)
        real[((-1,), 1)] = op(0)
    else:
        ea, eb, e0 = op(1), op(2), op(0)
        real[((1, 0), 0)] = ea
        real[((0, 1), 0)] = eb
        real[((-1, -1), 1)] = e0
        if side == "e":
            real[((1, 1), 0)] = ea.q_commutator(eb, -1)
            real[((-1, 0), 1)] = eb.q_commutator(e0, -1)
            real[((0, -1), 1)] = ea.q_commutator(e0, -1)
        else:
            real[((1, 1), 0)] = eb.q_commutator(ea, 1)
            real[((-1, 0), 1)] = e0.q_commutator(eb, 1)
            real[((0, -1), 1)] = e0.q_commutator(ea, 1)

    prime_delta = {}
    primes = {}
    for gamma in _finite_positive_parts(algebra):
        minus = tuple(-g for g in gamma)
        if side == "e":
            prime_delta[gamma] = real[(gamma, 0)].q_commutator(
                real[(minus, 1)], -2)
        else:
            prime_delta[gamma] = real[(minus, 1)].q_commutator(
                real[(gamma, 0)], 2)
        for m in range(1, m_max + 1):
            if side == "e":
                real[(gamma, m)] = real[(gamma, m - 1)].q_commutator(
                    prime_delta[gamma], 0).scale(INV2)
                real[(minus, m + 1)] = prime_delta[gamma].q_commutator(
                    real[(minus, m)], 0).scale(INV2)
            else:
                real[(gamma, m)] = prime_delta[gamma].q_commutator(
                    real[(gamma, m - 1)], 0).scale(INV2)
                real[(minus, m + 1)] = real[(minus, m)].q_commutator(
                    prime_delta[gamma], 0).scale(INV2)
        for m in range(1, m_max + 1):
            if side == "e":
                primes[(gamma, m)] = real[(gamma, m - 1)].q_commutator(
                    real[(minus, 1)], -2)
            else:
                primes[(gamma, m)] = real[(minus, 1)].q_commutator(
                    real[(gamma, m - 1)], 2)

    # imaginary root vectors through the graded logarithm, one family per
    # finite simple root; the m-th component always carries the m-th power
    # of the leg's total delta weight
    imag = {}
    simples = [(1,)] if algebra == "a1" else [(1, 0), (0, 1)]
    c_inv = C_FACTOR.inverse()
    zstep = sgn * sum(image.exps)
    for i, gamma in enumerate(simples):
        comps = {}
        for m in range(1, m_max + 1):
            sop = primes[(gamma, m)]
            if sop.mat and sop.zexp != m * zstep:
                raise EngineError("inhomogeneous zeta grading in the "
                                  "imaginary family at level %d" % m)
            comps[m] = sop.mat.scale(C_FACTOR if side == "e" else -C_FACTOR)
        logs = _graded_log(comps, m_max)
        for m in range(1, m_max + 1):
            mat = logs.get(m)
            if mat is None or not mat:
                imag[(i, m)] = None
                continue
            mat = mat.scale(c_inv if side == "e" else -c_inv)
            imag[(i, m)] = ScaledOp(m * zstep, mat)
    return RootVectorTable(side, real, imag, image, m_max)


def _graded_log(comps, m_max):
    """log(1 + X) for X = sum_m comps[m] y^m, graded-truncated at m_max."""
    out = {}
    power = dict(comps)
    k = 1
    while power and k <= m_max:
        c = QScalar.from_fraction(Fraction(1, k) if k % 2 else Fraction(-1, k))
        for m, mat in power.items():
            add = mat.scale(c)
            out[m] = out[m] + add if m in out else add
        nxt = {}
        for ma, a in power.items():
            for mb, b in comps.items():
                m = ma + mb
                if m > m_max:
                    continue
                p = a * b
                if not p:
                    continue
                nxt[m] = nxt[m] + p if m in nxt else p
        power = {m: v for m, v in nxt.items() if v}
        k += 1
    return out


def u_matrices(algebra, m_max):
    """Per-level inverse coupling matrices of the imaginary block."""
    fin = finite_cartan(algebra)
    r = fin.rank
    out = {}
    for m in range(1, m_max + 1):
        t = [[qint(m * fin.matrix[i][j]).scale(Fraction(1, m))
              if (i == j or m % 2 == 0) else
              qint(m * fin.matrix[i][j]).scale(Fraction(-1, m))
              for j in range(r)] for i in range(r)]
        if r == 1:
            out[m] = [[t[0][0].inverse()]]
        else:
            det = t[0][0] * t[1][1] - t[0][1] * t[1][0]
            det_inv = det.inverse()
            out[m] = [[t[1][1] * det_inv, (-t[0][1]) * det_inv],
                      [(-t[1][0]) * det_inv, t[0][0] * det_inv]]
    return out


def _series_matrix(terms, dim, order):
    """OpMatrix over ZetaSeries from [(zexp, QScalar-matrix)] terms."""
    entries = {}
    for zexp, mat in terms:
        if zexp > order:
            continue
        for ij, v in mat.entries.items():
            entries.setdefault(ij, {})[zexp] = \
                entries.get(ij, {}).get(zexp, QScalar.ZERO) + v
    one = ZetaSeries.one(order)
    out = {ij: ZetaSeries(cs, order) for ij, cs in entries.items()}
    return OpMatrix(dim, out, one)


def _identity_series(dim, order):
    return OpMatrix.identity(dim, ZetaSeries.one(order))


def _q_exponential_factor(e_op, f_op, pairing, order, dim_l, dim_r):
    """exp_{q^-pairing-norm}((q - q^-1) e x f) as a series matrix.

    The (q - q^-1) factor is folded into the left tensor slot before the
    Kronecker product so the leg normalizations cancel early and the term
    matrices stay denominator-free.
    """
    x = kron(e_op.mat.scale(C_FACTOR), f_op.mat)
    k = e_op.zexp + f_op.zexp
    dim = dim_l * dim_r
    terms = []
    xn = x
    n = 1
    fact = ONE
    while xn and n <= dim * dim:
        fact = fact * qnum_base(n, -6 * pairing)
        terms.append((n * k, xn if fact.is_one() else
                      xn.scale(fact.inverse())))
        if n * k > order and k > 0:
            break
        n += 1
        xn = xn * x
    else:
        if xn:
            raise EngineError("q-exponential argument failed to nilpotate "
                              "within dim^2 terms")
    # identity part omitted: the caller multiplies acc by (1 + N) as
    # acc + acc * N, which skips convolving every entry with 1
    return _series_matrix(terms, dim, order)


def _imaginary_factor(left_table, right_table, params, dim_l, dim_r, order):
    """Returns (scalar prefactor series, matrix factor).

    The exponential of the diagonal argument is split as
    exp(a_00) * diag(exp(a_ii - a_00)); the common scalar multiplies the
    assembled product once at the very end, and the per-state ratios come
    out with polynomial coefficients, which keeps the hot products cheap.
    """
    algebra = params.algebra
    um = u_matrices(algebra, params.m_max)
    rank = finite_cartan(algebra).rank
    terms = []
    for m in range(1, params.m_max + 1):
        for i in range(rank):
            e = left_table.imag_op(i, m)
            if e is None or not e.mat:
                continue
            for j in range(rank):
                f = right_table.imag_op(j, m)
                if f is None or not f.mat:
                    continue
                coeff = C_FACTOR * um[m][i][j]
                terms.append((e.zexp + f.zexp,
                              kron(e.mat.scale(coeff), f.mat)))
    dim = dim_l * dim_r
    one = ZetaSeries.one(order)
    if not terms:
        return one, _identity_series(dim, order)
    arg = _series_matrix(terms, dim, order)
    if not arg.is_diagonal():
        return one, _matrix_series_exp(arg, dim, order)
    zero = ZetaSeries.zero(order)
    a0 = arg.entries.get((0, 0), zero)
    prefactor = series_exp(a0)
    cache = {}
    out = {}
    for i in range(dim):
        v = arg.entries.get((i, i), zero)
        diff = v - a0
        got = cache.get(diff)
        if got is None:
            got = cache[diff] = series_exp(diff)
        out[(i, i)] = got
    return prefactor, OpMatrix(dim, out, one)


def _matrix_series_exp(arg, dim, order):
    acc = _identity_series(dim, order)
    term = _identity_series(dim, order)
    k = 1
    while True:
        term = term * arg
        if not term:
            break
        acc = acc + term.map_values(
            lambda s: s.scale(QScalar.from_fraction(Fraction(1, _fact(k)))))
        k += 1
    return acc


def _fact(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _k_factor(left_image, right_image, params, order):
    fin = finite_cartan(params.algebra)
    r = fin.rank
    binv = fin.finite_inverse
    dim_l, dim_r = left_image.dim, right_image.dim
    hl = [left_image.h_diags[i + 1] for i in range(r)]
    hr = [right_image.h_diags[j + 1] for j in range(r)]
    entries = {}
    one = ZetaSeries.one(order)
    for x in range(dim_l):
        for y in range(dim_r):
            expo = Fraction(0)
            for i in range(r):
                for j in range(r):
                    expo += binv[i][j] * hl[i][x] * hr[j][y]
            idx = x * dim_r + y
            entries[(idx, idx)] = ZetaSeries.const(q_power(expo), order)
    return OpMatrix(dim_l * dim_r, entries, one)


def check_normalization_constants(params):
    """In the faithful evaluation leg, [e_gamma, f_gamma] must equal the
    standard Cartan combination with unit constant for every real root."""
    img = phi_zeta(params.algebra, params.s, params.s1, params.s2)
    etab = build_root_vectors(img, "e", params.m_max)
    ftab = build_root_vectors(img, "f", params.m_max)
    aff = extend_cartan(finite_cartan(params.algebra))
    roots = positive_roots(aff, params.m_max)
    denom_inv = C_FACTOR.inverse()
    for root in roots:
        if root.kind == "imaginary":
            continue
        e = etab.real_op(root)
        f = ftab.real_op(root)
        if e is None or f is None:
            continue
        lhs = e.mat.commutator(f.mat)
        ks = root.simple_coefficients(params.algebra)
        hvals = [sum(k * img.h_diags[i][x] for i, k in enumerate(ks))
                 for x in range(img.dim)]
        rhs = OpMatrix.diagonal(
            [(q_power(v) - q_power(-v)) * denom_inv for v in hvals], ONE)
        if lhs != rhs or e.zexp + f.zexp != 0:
            raise EngineError(
                "normalization constant differs from 1 at root %r" % (root,))
    return True


def assemble(params, grouped_real_order=False, split_prefactor=False):
    """Full ordered product as an OpMatrix over ZetaSeries.

    The flattening puts the left leg slowest.  With `grouped_real_order`
    the commuting real factors are regrouped family by family, which must
    not change the product.  With `split_prefactor` the scalar exponential
    common to all entries is returned separately as (prefactor, matrix);
    the full product is prefactor * matrix entrywise.
    """
    check_normalization_constants(params)
    left = _leg_images(params, "left")
    right = _leg_images(params, "right")
    order = params.order
    etab = build_root_vectors(left, "e", params.m_max)
    ftab = build_root_vectors(right, "f", params.m_max)
    aff = extend_cartan(finite_cartan(params.algebra))
    roots = positive_roots(aff, params.m_max)
    if grouped_real_order:
        roots = _group_families(roots, params.algebra)
    dim_l, dim_r = left.dim, right.dim
    acc = _identity_series(dim_l * dim_r, order)
    prefactor = ZetaSeries.one(order)
    imag_done = False
    for root in roots:
        if root.kind == "imaginary":
            if not imag_done:
                prefactor, factor = _imaginary_factor(etab, ftab, params,
                                                      dim_l, dim_r, order)
                acc = acc * factor
                imag_done = True
            continue
        e = etab.real_op(root)
        f = ftab.real_op(root)
        if e is None or f is None or not e.mat or not f.mat:
            continue
        if e.zexp + f.zexp > order:
            continue
        n_part = _q_exponential_factor(e, f, 2, order, dim_l, dim_r)
        if n_part:
            acc = acc + acc * n_part
    if not imag_done:
        prefactor, factor = _imaginary_factor(etab, ftab, params, dim_l,
                                              dim_r, order)
        acc = acc * factor
    acc = acc * _k_factor(left, right, params, order)
    acc = _restrict_output(acc, params, left, right)
    if split_prefactor:
        return prefactor, acc
    if prefactor != ZetaSeries.one(order):
        acc = acc.map_values(lambda s: s * prefactor)
    return acc


def _group_families(roots, algebra):
    """Regroup the interleaved real blocks family by family."""
    plus = [r for r in roots if r.kind == "real_plus"]
    imag = [r for r in roots if r.kind == "imaginary"]
    minus = [r for r in roots if r.kind == "real_minus"]
    if algebra == "a1":
        return plus + imag + minus
    order_plus = [(1, 0), (1, 1), (0, 1)]
    order_minus = [(0, -1), (-1, 0), (-1, -1)]
    plus_g = [r for g in order_plus for r in plus if r.finite_part == g]
    minus_g = [r for g in order_minus for r in minus if r.finite_part == g]
    return plus_g + imag + minus_g


def _restrict_output(mat, params, left, right):
    d_out = params.fock_dim
    d_int = d_out + params.fock_pad

    def leg_map(image, kind):
        if kind == "phi":
            return None
        # oscillator leg: keep states with every copy index below d_out
        copies = image.copies
        keep = {}
        for idx in range(image.dim):
            coords = []
            i = idx
            for _ in range(copies):
                coords.append(i % d_int)
                i //= d_int
            coords.reverse()
            if all(c < d_out for c in coords):
                new = 0
                for c in coords:
                    new = new * d_out + c
                keep[idx] = new
        return keep, d_out ** copies

    lmap = leg_map(left, params.left)
    rmap = leg_map(right, params.right)
    if lmap is None and rmap is None:
        return mat
    dim_l_new, lm = (left.dim, None) if lmap is None else (lmap[1], lmap[0])
    dim_r_new, rm = (right.dim, None) if rmap is None else (rmap[1], rmap[0])
    dim_r_old = right.dim
    out = {}
    for (r, c), v in mat.entries.items():
        l1, r1 = divmod(r, dim_r_old)
        l2, r2 = divmod(c, dim_r_old)
        if lm is not None:
            if l1 not in lm or l2 not in lm:
                continue
            l1, l2 = lm[l1], lm[l2]
        if rm is not None:
            if r1 not in rm or r2 not in rm:
                continue
            r1, r2 = rm[r1], rm[r2]
        out[(l1 * dim_r_new + r1, l2 * dim_r_new + r2)] = v
    return OpMatrix(dim_l_new * dim_r_new, out, mat.one, _clean=True)
