"""Closed-form reference matrices, parameterized by the spectral exponents.

Every printed R-matrix and L-operator is transcribed here over the exact
rational backend.  The transcendental scalar in front of each object (a
power of q times an exponential of lambda-function combinations) is kept
as a structured tag; rational scalar pieces are folded into the entries,
so the stored matrix times the tag is the honest object.  Where the source
derivation lists the individual ordered factors, those are stored too:
their product must reproduce the assembled display, and they drive exact
inversion.

Also here: the constant exchange matrices of the spectral-linear
decomposition, the decomposition itself, and the exponent scan that finds
where an L-operator becomes linear in the spectral variable.
"""

from fractions import Fraction

from .scalars import QScalar, q_power
from .series import ZetaSeries, series_exp, lambda_level
from .rational import ZetaRational
from .linalg import OpMatrix, Grid, kron
from .oscillator import FockRep, two_copy_automorphism

__all__ = [
    "PrefactorTag", "ReferenceObject", "reference_matrix", "list_variants",
    "r0_matrix", "r0_hat_matrix", "decompose_L", "scan_linear_exponents",
    "grid_inverse", "op_inverse",
]

ONE = QScalar.ONE
ZR_ONE = ZetaRational.const(ONE)
C = q_power(1) - q_power(-1)


class PrefactorTag:
    """q-power times exp of a signed sum of lambda functions.

    Each term is (level, scale_t_exponent, argument_zeta_exponent, sign),
    standing for sign * lambda_level(t^scale * zeta^arg).
    """

    __slots__ = ("t_power", "terms")

    def __init__(self, t_power=0, terms=()):
        merged = {}
        for (n, sc, arg, sg) in terms:
            key = (n, sc, arg)
            merged[key] = merged.get(key, 0) + sg
        self.t_power = t_power
        self.terms = tuple(sorted((n, sc, arg, sg)
                                  for (n, sc, arg), sg in merged.items() if sg))

    def __mul__(self, other):
        return PrefactorTag(self.t_power + other.t_power,
                            self.terms + other.terms)

    def inverse(self):
        return PrefactorTag(-self.t_power,
                            tuple((n, sc, arg, -sg)
                                  for (n, sc, arg, sg) in self.terms))

    def subs_zeta_power(self, k):
        return PrefactorTag(self.t_power,
                            tuple((n, sc, arg * k, sg)
                                  for (n, sc, arg, sg) in self.terms))

    def is_trivial(self):
        return self.t_power == 0 and not self.terms

    def to_series(self, order):
        if any(arg < 1 for (_, _, arg, _) in self.terms):
            raise ValueError("tag with non-positive argument exponents has "
                             "no expansion about zero")
        total = ZetaSeries.zero(order)
        for (n, sc, arg, sg) in self.terms:
            lam = lambda_level(n, QScalar({sc: Fraction(1)}), arg, order)
            for _ in range(abs(sg)):
                total = total + lam if sg > 0 else total - lam
        out = series_exp(total)
        if self.t_power:
            out = out.scale(QScalar({self.t_power: Fraction(1)}))
        return out

    def __eq__(self, other):
        if not isinstance(other, PrefactorTag):
            return NotImplemented
        return self.t_power == other.t_power and self.terms == other.terms

    def __repr__(self):
        return "PrefactorTag(t^%d, %s)" % (self.t_power, list(self.terms))


class ReferenceObject:
    """A transcribed closed form: tag * matrix, plus optional factors."""

    __slots__ = ("kind", "algebra", "variant", "exps", "tag", "matrix",
                 "l_type", "fock_dim", "copies", "factors")

    def __init__(self, kind, algebra, variant, exps, tag, matrix,
                 l_type=None, fock_dim=None, copies=0, factors=None):
        self.kind = kind
        self.algebra = algebra
        self.variant = variant
        self.exps = exps
        self.tag = tag
        self.matrix = matrix
        self.l_type = l_type
        self.fock_dim = fock_dim
        self.copies = copies
        self.factors = factors

    @property
    def leg_dim(self):
        return 2 if self.algebra == "a1" else 3

    def expand(self, order, include_tag=True):
        """Flattened series matrix; L-operators flatten with the oscillator
        leg slowest for hat type and fastest for check type."""
        if self.kind == "r":
            flat = self.matrix.map_values(lambda v: v.to_series(order),
                                          ZetaSeries.one(order))
        else:
            grid = self.matrix.map_values(lambda v: v.to_series(order),
                                          ZetaSeries.one(order))
            flat = grid.flatten(op_leg_first=(self.l_type == "hat"))
        if include_tag and not self.tag.is_trivial():
            pref = self.tag.to_series(order)
            flat = flat.map_values(lambda s: (s * pref).truncate(order))
        return flat

    def __repr__(self):
        return "ReferenceObject(%s, %s, %s, exps=%s)" % (
            self.kind, self.algebra, self.variant, (self.exps,))


# -- scalar builders ---------------------------------------------------------

def _mono(k, c=None):
    return ZetaRational.monomial(k, c if c is not None else ONE)


def _rat(num, den=None):
    return ZetaRational(num, den if den is not None else {0: ONE}, ONE)


def _zmat(mat, k=0):
    """Lift a QScalar matrix into zeta-rational values times zeta^k."""
    return mat.map_values(lambda v: _mono(k, v), ZR_ONE)


def _eye_z(dim):
    return OpMatrix.identity(dim, ZR_ONE)


# -- R-matrices --------------------------------------------------------------

def _r_a1(s, s1):
    den = {0: ONE, s: -q_power(-2)}
    g_diag = _rat({0: q_power(-1), s: -q_power(-1)}, den)
    g_lo = _rat({s1: ONE - q_power(-2)}, den)
    g_hi = _rat({s - s1: ONE - q_power(-2)}, den)
    e = lambda a, b: OpMatrix.unit(2, a, b, ONE)
    mat = (kron(_zmat(e(1, 1)), _zmat(e(1, 1)))
           + kron(_zmat(e(2, 2)), _zmat(e(2, 2)))
           + kron(_zmat(e(1, 1)), _zmat(e(2, 2))).scale(g_diag)
           + kron(_zmat(e(2, 2)), _zmat(e(1, 1))).scale(g_diag)
           + kron(_zmat(e(1, 2)), _zmat(e(2, 1))).scale(g_lo)
           + kron(_zmat(e(2, 1)), _zmat(e(1, 2))).scale(g_hi))
    tag = PrefactorTag(3, ((2, 6, s, 1), (2, -6, s, -1)))
    return ReferenceObject("r", "a1", "plain", (s, s1), tag, mat)


def _r_a2(s, s1, s2):
    den = {0: ONE, s: -q_power(-2)}
    g_diag = _rat({0: q_power(-1), s: -q_power(-1)}, den)
    cc = ONE - q_power(-2)
    e = lambda a, b: OpMatrix.unit(3, a, b, ONE)
    mat = OpMatrix.zero(9, ZR_ONE)
    for a in range(1, 4):
        mat = mat + kron(_zmat(e(a, a)), _zmat(e(a, a)))
        for b in range(1, 4):
            if a != b:
                mat = mat + kron(_zmat(e(a, a)), _zmat(e(b, b))).scale(g_diag)
    weights = {(1, 2): s1, (1, 3): s1 + s2, (2, 3): s2,
               (2, 1): s - s1, (3, 1): s - s1 - s2, (3, 2): s - s2}
    for (a, b), w in weights.items():
        mat = mat + kron(_zmat(e(a, b)), _zmat(e(b, a))).scale(
            _rat({w: cc}, den))
    tag = PrefactorTag(4, ((3, 12, s, 1), (3, -12, s, -1)))
    return ReferenceObject("r", "a2", "plain", (s, s1, s2), tag, mat)


# -- single-copy oscillator building blocks ----------------------------------

class _Osc1:
    def __init__(self, d):
        f = FockRep(d)
        self.d = d
        self.a = f.lowering()
        self.ad = f.raising()
        self.qd = f.q_number_power
        self.eye = OpMatrix.identity(d, ONE)

    def geom_inv(self, coeffs, s):
        """Diagonal (1 - coeffs[n] * zeta^s)^-1 as a rational Fock matrix."""
        return OpMatrix.diagonal(
            [_rat({0: ONE}, {0: ONE, s: -c}) if c else ZR_ONE.one_like()
             for c in coeffs], ZR_ONE)


class _Osc2:
    def __init__(self, d):
        f = FockRep(d)
        eye = OpMatrix.identity(d, ONE)
        self.d = d
        self.a1 = kron(f.lowering(), eye)
        self.a2 = kron(eye, f.lowering())
        self.a1d = kron(f.raising(), eye)
        self.a2d = kron(eye, f.raising())
        self.eye = kron(eye, eye)
        self._f = f

    def qq(self, c1, c2):
        return kron(self._f.q_number_power(c1), self._f.q_number_power(c2))

    def diag_values(self, fn):
        d = self.d
        return [fn(n1, n2) for n1 in range(d) for n2 in range(d)]

    def geom_inv(self, fn, s):
        return OpMatrix.diagonal(
            [_rat({0: ONE}, {0: ONE, s: -c}) if c else ZR_ONE.one_like()
             for c in self.diag_values(fn)], ZR_ONE)


def _grid(n, entries, op_dim):
    return Grid(n, {k: v for k, v in entries.items() if v}, op_dim, ZR_ONE)


# -- rank-1 L-operators ------------------------------------------------------

def _l_a1(variant, s, s1, d):
    o = _Osc1(d)
    tag = PrefactorTag(0, ((2, -6, s, 1),))
    qD = o.qd(1)
    qmD = o.qd(-1)
    if variant == "hat":
        entries = {
            (0, 0): _zmat(qD),
            (0, 1): _zmat(o.a * qmD, s - s1),
            (1, 0): _zmat(o.ad * qD, s1),
            (1, 1): _zmat(qmD) + _zmat(qD, s).scale(-ZR_ONE),
        }
        factors = [
            _grid(2, {(0, 0): _eye_z(d), (1, 1): _eye_z(d),
                      (1, 0): _zmat(o.ad, s1)}, d),
            _grid(2, {(0, 0): _eye_z(d),
                      (1, 1): _zmat(o.eye) - _zmat(o.eye, s)}, d),
            _grid(2, {(0, 0): _eye_z(d), (1, 1): _eye_z(d),
                      (0, 1): _zmat(o.a, s - s1)}, d),
            _grid(2, {(0, 0): _zmat(qD), (1, 1): _zmat(qmD)}, d),
        ]
        l_type = "hat"
    elif variant == "hat-twisted":
        entries = {
            (0, 0): _zmat(qmD) + _zmat(qD, s).scale(-ZR_ONE),
            (0, 1): _zmat(o.ad * qD, s - s1),
            (1, 0): _zmat(o.a * qmD, s1),
            (1, 1): _zmat(qD),
        }
        factors = None
        l_type = "hat"
    elif variant == "check":
        entries = {
            (0, 0): _zmat(qD),
            (0, 1): _zmat(o.a * qmD, s1),
            (1, 0): _zmat(o.ad * qD, s - s1),
            (1, 1): _zmat(qmD) + _zmat(qD, s).scale(-ZR_ONE),
        }
        geom = o.geom_inv([q_power(2 * n) for n in range(d)], s)
        geom_up = o.geom_inv([q_power(2 * n + 2) for n in range(d)], s)
        one_minus = ZR_ONE - _mono(s)
        factors = [
            _grid(2, {(0, 0): _eye_z(d), (1, 1): _eye_z(d),
                      (0, 1): _zmat(o.a, s1) * geom}, d),
            _grid(2, {(0, 0): geom_up.scale(one_minus),
                      (1, 1): _zmat(o.eye) - _zmat(o.qd(2), s)}, d),
            _grid(2, {(0, 0): _eye_z(d), (1, 1): _eye_z(d),
                      (1, 0): geom * _zmat(o.ad, s - s1)}, d),
            _grid(2, {(0, 0): _zmat(qD), (1, 1): _zmat(qmD)}, d),
        ]
        l_type = "check"
    elif variant == "check-twisted":
        entries = {
            (0, 0): _zmat(qmD) + _zmat(qD, s).scale(-ZR_ONE),
            (0, 1): _zmat(o.ad * qD, s1),
            (1, 0): _zmat(o.a * qmD, s - s1),
            (1, 1): _zmat(qD),
        }
        factors = None
        l_type = "check"
    else:
        raise ValueError("unknown rank-1 variant %r" % (variant,))
    mat = _grid(2, entries, d)
    return ReferenceObject("l", "a1", variant, (s, s1), tag, mat,
                           l_type=l_type, fock_dim=d, copies=1,
                           factors=factors)


# -- rank-2 L-operators ------------------------------------------------------

def _l_a2(variant, s, s1, s2, d):
    o = _Osc2(d)
    qq = o.qq
    a1, a2, a1d, a2d = o.a1, o.a2, o.a1d, o.a2d
    if variant == "hat-1":
        tag = PrefactorTag(0, ((3, -12, s, 1),))
        entries = {
            (0, 0): _zmat(qq(1, 0)),
            (0, 1): _zmat(a1 * qq(-1, -1), s - s1).scale(
                ZetaRational.const(q_power(-2))),
            (0, 2): _zmat(a1 * a2 * qq(-1, -3), s - s1 - s2),
            (1, 0): _zmat(a1d * qq(1, 0), s1),
            (1, 1): _zmat(qq(-1, 1)) + _zmat(qq(1, -1), s).scale(
                ZetaRational.const(-q_power(-2))),
            (1, 2): _zmat(a2 * qq(1, -3), s - s2).scale(-ZR_ONE.one_like()),
            (2, 1): _zmat(a2d * qq(0, 1), s2),
            (2, 2): _zmat(qq(0, -1)),
        }
        geom_b = o.geom_inv(lambda n1, n2: q_power(-2 - 2 * n2), s)
        geom_d = o.geom_inv(lambda n1, n2: q_power(-2 * n2), s)
        one_z = _eye_z(d * d)
        factors = [
            _grid(3, {(0, 0): one_z, (1, 1): one_z, (2, 2): one_z,
                      (1, 0): _zmat(a1d, s1)}, d * d),
            _grid(3, {(0, 0): one_z, (1, 1): one_z, (2, 2): one_z,
                      (2, 1): _zmat(a2d * qq(1, 0)) * geom_b * _mono_mat(
                          d * d, s2)}, d * d),
            _grid(3, {(0, 0): one_z,
                      (1, 1): one_z - _zmat(qq(0, -2), s).scale(
                          ZetaRational.const(q_power(-2))),
                      (2, 2): geom_d.scale(ZR_ONE - _mono(s))}, d * d),
            _grid(3, {(0, 0): one_z, (1, 1): one_z, (2, 2): one_z,
                      (1, 2): (_zmat(a2 * qq(-1, -2)) * geom_d
                               * _mono_mat(d * d, s - s2)).scale(
                                   -ZR_ONE.one_like())}, d * d),
            _grid(3, {(0, 0): one_z, (1, 1): one_z, (2, 2): one_z,
                      (0, 1): _zmat(a1 * qq(0, -2), s - s1).scale(
                          ZetaRational.const(q_power(-2)))}, d * d),
            _grid(3, {(0, 0): one_z, (1, 1): one_z, (2, 2): one_z,
                      (0, 2): _zmat(a1 * a2 * qq(-1, -2), s - s1 - s2)},
                  d * d),
            _grid(3, {(0, 0): _zmat(qq(1, 0)), (1, 1): _zmat(qq(-1, 1)),
                      (2, 2): _zmat(qq(0, -1))}, d * d),
        ]
        l_type = "hat"
    elif variant == "hat-2":
        tag = PrefactorTag(0, ((3, 12, s, -1),))
        den = ZR_ONE - _mono(s)
        entries = {
            (0, 0): _zmat(qq(1, 0)) + _zmat(qq(-1, 0), s).scale(
                ZetaRational.const(-q_power(-2))),
            (0, 1): _zmat(a1 * qq(-3, 1), s - s1).scale(-ZR_ONE.one_like()),
            (0, 2): _zmat(a1 * a2 * qq(-1, -1),
                          s - s1 - s2).scale(-ZR_ONE.one_like()),
            (1, 0): _zmat(a1d * qq(1, 0), s1),
            (1, 1): _zmat(qq(-1, 1)),
            (1, 2): _zmat(a2 * qq(1, -1), s - s2),
            (2, 0): _zmat(a1d * a2d, s1 + s2).scale(
                ZetaRational.const(q_power(-1))),
            (2, 1): _zmat(a2d * qq(-2, 1), s2),
            (2, 2): _zmat(qq(0, -1)) + _zmat(qq(0, 1), s).scale(
                -ZR_ONE.one_like()),
        }
        entries = {k: v.map_values(lambda r: r / den, ZR_ONE)
                   for k, v in entries.items()}
        factors = None
        l_type = "hat"
    elif variant == "check-1":
        tag = PrefactorTag(0, ((3, -12, s, 1),))
        entries = {
            (0, 0): _zmat(qq(1, 0)),
            (0, 1): _zmat(a1 * qq(-1, 1), s1),
            (1, 0): _zmat(a1d * qq(1, -2), s - s1).scale(
                ZetaRational.const(q_power(-2))),
            (1, 1): _zmat(qq(-1, 1)) + _zmat(qq(1, -1), s).scale(
                ZetaRational.const(-q_power(-2))),
            (1, 2): _zmat(a2 * qq(1, -1), s2),
            (2, 0): _zmat(a1d * a2d * qq(0, -2), s - s1 - s2).scale(
                ZetaRational.const(q_power(-3))),
            (2, 1): _zmat(a2d * qq(0, -1), s - s2).scale(
                ZetaRational.const(-q_power(-2))),
            (2, 2): _zmat(qq(0, -1)),
        }
        geom = o.geom_inv(lambda n1, n2: q_power(2 * n1), s)
        geom_up = o.geom_inv(lambda n1, n2: q_power(2 * n1 + 2), s)
        one_z = _eye_z(d * d)
        factors = [
            _grid(3, {(0, 0): one_z, (1, 1): one_z, (2, 2): one_z,
                      (0, 1): _zmat(a1, s1) * geom}, d * d),
            _grid(3, {(0, 0): one_z, (1, 1): one_z, (2, 2): one_z,
                      (0, 2): (_zmat(a1 * a2 * qq(1, 0), s1 + s2)
                               * geom).scale(-ZR_ONE.one_like())}, d * d),
            _grid(3, {(0, 0): one_z, (1, 1): one_z, (2, 2): one_z,
                      (1, 2): _zmat(a2 * qq(1, 0), s2)}, d * d),
            _grid(3, {(0, 0): geom_up.scale(ZR_ONE - _mono(s)),
                      (1, 1): one_z - _zmat(qq(2, 0), s),
                      (2, 2): one_z}, d * d),
            _grid(3, {(0, 0): one_z, (1, 1): one_z, (2, 2): one_z,
                      (2, 1): _zmat(a2d * qq(1, -2), s - s2).scale(
                          ZetaRational.const(-q_power(-2)))}, d * d),
            _grid(3, {(0, 0): one_z, (1, 1): one_z, (2, 2): one_z,
                      (1, 0): _zmat(a1d, s - s1) * geom_up}, d * d),
            _grid(3, {(0, 0): one_z, (1, 1): one_z, (2, 2): one_z,
                      (2, 0): (_zmat(a1d * a2d * qq(-1, -2), s - s1 - s2)
                               * geom_up).scale(
                                   ZetaRational.const(q_power(-3)))}, d * d),
            _grid(3, {(0, 0): _zmat(qq(1, 0)), (1, 1): _zmat(qq(-1, 1)),
                      (2, 2): _zmat(qq(0, -1))}, d * d),
        ]
        l_type = "check"
    elif variant == "check-2":
        tag = PrefactorTag(0, ((3, 12, s, -1),))
        den = ZR_ONE - _mono(s)
        entries = {
            (0, 0): _zmat(qq(1, 0)) + _zmat(qq(-1, 0), s).scale(
                ZetaRational.const(-q_power(-2))),
            (0, 1): _zmat(a1 * qq(-1, 1), s1),
            (0, 2): _zmat(a1 * a2 * qq(-1, -1), s1 + s2),
            (1, 0): _zmat(a1d * qq(-1, 0), s - s1).scale(
                ZetaRational.const(-q_power(-2))),
            (1, 1): _zmat(qq(-1, 1)),
            (1, 2): _zmat(a2 * qq(-1, -1), s2),
            (2, 0): _zmat(a1d * a2d, s - s1 - s2).scale(
                ZetaRational.const(-q_power(-1))),
            (2, 1): _zmat(a2d * qq(0, 1), s - s2),
            (2, 2): _zmat(qq(0, -1)) + _zmat(qq(0, 1), s).scale(
                -ZR_ONE.one_like()),
        }
        entries = {k: v.map_values(lambda r: r / den, ZR_ONE)
                   for k, v in entries.items()}
        factors = None
        l_type = "check"
    elif variant == "check-inv":
        tag = PrefactorTag(0, ((3, -12, -s, -1),))
        den = ZR_ONE - _mono(s)
        entries = {
            (0, 0): _zmat(qq(1, 0)).scale(ZetaRational.const(q_power(2)))
                + _zmat(qq(-1, 0), s).scale(-ZR_ONE.one_like()),
            (0, 1): _zmat(a1 * qq(1, 0), s1),
            (0, 2): _zmat(a1 * a2, s1 + s2).scale(
                ZetaRational.const(q_power(-1))),
            (1, 0): _zmat(a1d * qq(-1, -1), s - s1),
            (1, 1): _zmat(qq(1, -1), s).scale(-ZR_ONE.one_like()),
            (1, 2): _zmat(a2 * qq(0, -1), s2).scale(-ZR_ONE.one_like()),
            (2, 0): _zmat(a1d * a2d * qq(-1, -1),
                          s - s1 - s2).scale(-ZR_ONE.one_like()),
            (2, 1): _zmat(a2d * qq(1, -1), s - s2),
            (2, 2): _zmat(qq(0, -1)) + _zmat(qq(0, 1), s).scale(
                -ZR_ONE.one_like()),
        }
        entries = {k: v.map_values(lambda r: r / den, ZR_ONE)
                   for k, v in entries.items()}
        factors = None
        l_type = "check"
    else:
        raise ValueError("unknown rank-2 variant %r" % (variant,))
    mat = _grid(3, entries, d * d)
    return ReferenceObject("l", "a2", variant, (s, s1, s2), tag, mat,
                           l_type=l_type, fock_dim=d, copies=2,
                           factors=factors)


def _mono_mat(dim, k):
    if k == 0:
        return _eye_z(dim)
    return OpMatrix.identity(dim, ZR_ONE).scale(_mono(k))


_A1_L_VARIANTS = ("hat", "hat-twisted", "check", "check-twisted")
_A2_L_VARIANTS = ("hat-1", "hat-2", "check-1", "check-2", "check-inv",
                  "hat-2-inv")


def list_variants():
    out = [("r", "a1", "plain"), ("r", "a2", "plain")]
    out += [("l", "a1", v) for v in _A1_L_VARIANTS]
    out += [("l", "a2", v) for v in _A2_L_VARIANTS]
    return out


def reference_matrix(kind, algebra, variant="plain", s=1, s1=0, s2=0, d=12):
    """Closed-form object for the given kind/algebra/variant and exponents."""
    if kind == "r" and variant == "plain":
        if algebra == "a1":
            return _r_a1(s, s1)
        if algebra == "a2":
            return _r_a2(s, s1, s2)
    if kind == "l" and algebra == "a1" and variant in _A1_L_VARIANTS:
        return _l_a1(variant, s, s1, d)
    if kind == "l" and algebra == "a2" and variant in _A2_L_VARIANTS:
        if variant == "hat-2-inv":
            base = _l_a2("hat-2", s, s1, s2, d)
            inv = grid_inverse(base.matrix)
            inv = inv.map_values(lambda v: v.subs_power(-1), ZR_ONE)
            return ReferenceObject("l", "a2", variant, (s, s1, s2),
                                   PrefactorTag(), inv, l_type="check",
                                   fock_dim=d, copies=2, factors=None)
        return _l_a2(variant, s, s1, s2, d)
    raise ValueError("unsupported combination %r; supported: %s"
                     % ((kind, algebra, variant), list_variants()))


# -- exchange constants of the linear decomposition --------------------------

def r0_matrix(n):
    e = lambda a, b: OpMatrix.unit(n, a, b, ONE)
    out = OpMatrix.zero(n * n, ONE)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            coeff = q_power(1) if a == b else ONE
            out = out + kron(e(a, a), e(b, b)).scale(coeff)
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            out = out + kron(e(a, b), e(b, a)).scale(C)
    return out


def r0_hat_matrix(n):
    e = lambda a, b: OpMatrix.unit(n, a, b, ONE)
    out = OpMatrix.zero(n * n, ONE)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            coeff = q_power(1) if a == b else ONE
            out = out + kron(e(a, b), e(b, a)).scale(coeff)
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            out = out + kron(e(a, a), e(b, b)).scale(C)
    return out


# -- inversion over the Fock-valued rational ring -----------------------------

def op_inverse(m):
    """Inverse of a Fock-valued matrix over the rational scalar field.

    Handles diagonal matrices directly and otherwise splits off the
    diagonal and sums the finite ladder series; raises if the off-diagonal
    part fails to nilpotate.
    """
    dim = m.dim
    one = m.one
    diag = {(i, i): m.entries[(i, i)] for i in range(dim)
            if (i, i) in m.entries}
    if len(diag) < dim:
        raise ValueError("matrix has vanishing diagonal entries; "
                         "cannot invert")
    d_inv = OpMatrix(dim, {(i, i): diag[(i, i)].inverse()
                           for i in range(dim)}, one, _clean=True)
    n_part = OpMatrix(dim, {ij: v for ij, v in m.entries.items()
                            if ij[0] != ij[1]}, one, _clean=True)
    if not n_part:
        return d_inv
    x = d_inv * n_part
    acc = OpMatrix.identity(dim, one)
    term = OpMatrix.identity(dim, one)
    for _ in range(dim + 1):
        term = term * x
        if not term:
            return acc * d_inv
        acc = acc - term if _ % 2 == 0 else acc + term
    raise ValueError("off-diagonal part failed to nilpotate; "
                     "matrix not invertible by ladder series")


def grid_inverse(g):
    """Inverse of an operator-valued grid by noncommutative elimination."""
    n = g.n
    one = g.one
    dim = g.op_dim
    eye = OpMatrix.identity(dim, one)
    zero = OpMatrix.zero(dim, one)
    a = [[g.entry(i, j) for j in range(n)] for i in range(n)]
    b = [[eye if i == j else zero for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = None
        piv_inv = None
        for r in range(col, n):
            if not a[r][col]:
                continue
            try:
                piv_inv = op_inverse(a[r][col])
                piv = r
                break
            except ValueError:
                continue
        if piv is None:
            raise ValueError("grid has no invertible pivot in column %d"
                             % col)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
        a[col] = [piv_inv * x for x in a[col]]
        b[col] = [piv_inv * x for x in b[col]]
        for r in range(n):
            if r == col or not a[r][col]:
                continue
            f = a[r][col]
            a[r] = [a[r][k] - f * a[col][k] for k in range(n)]
            b[r] = [b[r][k] - f * b[col][k] for k in range(n)]
    entries = {}
    for i in range(n):
        for j in range(n):
            if b[i][j]:
                entries[(i, j)] = b[i][j]
    return Grid(n, entries, dim, one, _clean=True)


def apply_two_copy_normalization(grid, d):
    """The oscillator-pair rescaling a_i -> q^-1 a_i q^(2 D_i), realized by
    conjugation on the truncated Fock pair, applied entrywise."""
    kappa = ZetaRational.const(q_power(-1))
    s, s_inv = two_copy_automorphism(d, (kappa, kappa), (2, 0, 2),
                                     one=ZR_ONE)
    return grid.map_ops(lambda m: s * m * s_inv)


# -- spectral-linear decomposition -------------------------------------------

def _entry_degrees(grid):
    degs = set()
    for m in grid.entries.values():
        for v in m.entries.values():
            if not v.is_polynomial():
                return None
            degs.update(v.num.keys())
    return degs


def scan_linear_exponents(kind_variant, algebra, s_range, s1_range,
                          s2_range=(0,), d=4):
    """All exponent tuples in the grid making the prefactor-stripped
    operator linear in zeta after one overall power shift."""
    out = []
    for s in s_range:
        if s == 0:
            continue
        for s1 in s1_range:
            for s2 in s2_range:
                try:
                    ref = reference_matrix("l", algebra, kind_variant,
                                           s, s1, s2, d)
                except (ValueError, ZeroDivisionError):
                    continue
                degs = _entry_degrees(ref.matrix)
                if not degs:
                    continue
                if len(degs) == 2 and max(degs) - min(degs) == 2:
                    out.append(((s, s1, s2) if algebra == "a2" else (s, s1),
                                (max(degs) + min(degs)) // 2))
    return out


def decompose_L(ref, invert):
    """Split tag-stripped L = zeta^c (zeta L_plus - zeta^-1 L_minus).

    The plus part comes out upper-triangular and the minus part lower-
    triangular on the matrix leg; `invert` names the non-degenerate one
    ("minus" for hat type, "plus" for check type) and the projector is its
    inverse times the other.  Returns (L_plus, L_minus, Pi, c); raises if
    the entries are not linear in zeta after the overall shift, naming the
    offending entry.
    """
    degs = _entry_degrees(ref.matrix)
    if degs is None or len(degs) > 2 or (len(degs) == 2
                                         and max(degs) - min(degs) != 2):
        raise ValueError("operator entries are not zeta-linear at exponents "
                         "%s" % (ref.exps,))
    c = (max(degs) + min(degs)) // 2
    hi, lo = c + 1, c - 1
    n = ref.matrix.n
    dim = ref.matrix.op_dim
    plus_entries = {}
    minus_entries = {}
    for ab, m in ref.matrix.entries.items():
        for ij, v in m.entries.items():
            for deg, qc in v.num.items():
                if deg == hi:
                    plus_entries.setdefault(ab, {})[ij] = qc
                elif deg == lo:
                    minus_entries.setdefault(ab, {})[ij] = -qc
                else:
                    raise ValueError("entry %s has stray degree %d"
                                     % ((ab, ij), deg))
    lplus = Grid(n, {ab: OpMatrix(dim, e, ONE)
                     for ab, e in plus_entries.items()}, dim, ONE)
    lminus = Grid(n, {ab: OpMatrix(dim, e, ONE)
                      for ab, e in minus_entries.items()}, dim, ONE)
    upper = lambda g: all(a <= b for (a, b) in g.entries)
    lower = lambda g: all(a >= b for (a, b) in g.entries)
    if not (upper(lplus) and lower(lminus)):
        raise ValueError("triangularity does not match: expected upper "
                         "plus-part and lower minus-part")
    if invert == "minus":
        pi = grid_inverse(lminus) * lplus
    elif invert == "plus":
        pi = grid_inverse(lplus) * lminus
    else:
        raise ValueError("invert must be 'plus' or 'minus'")
    return lplus, lminus, pi, c
