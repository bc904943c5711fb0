"""Exact coefficient field Q(t), with the deformation parameter q = t^6.

Working over Q(t) lets every fractional power of q that the constructions
need (q^(1/2) = t^3, q^(1/3) = t^2, q^(2/3) = t^4, q^(1/6) = t) live in a
single field without extension towers.  A QScalar is a reduced ratio of two
Laurent polynomials in t with rational coefficients, kept in a canonical
form so equality is plain syntactic comparison.
"""

from fractions import Fraction

try:                                      # fast exact rationals when present
    from gmpy2 import mpq as _RAT
except ImportError:                       # pragma: no cover
    _RAT = Fraction

__all__ = [
    "QScalar", "q_power", "t_power", "qint", "qint_factorial", "qbinom",
    "qnum", "qnum_factorial", "parse_qscalar",
]

_F0 = _RAT(0)
_F1 = _RAT(1)


# -- Laurent polynomials in t as {exponent: Fraction} dicts -----------------

def _p_add(a, b):
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, _F0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _p_neg(a):
    return {k: -c for k, c in a.items()}


def _p_mul(a, b):
    if not a or not b:
        return {}
    if len(a) == 1:
        (ka, ca), = a.items()
        return {ka + k: ca * c for k, c in b.items()}
    if len(b) == 1:
        (kb, cb), = b.items()
        return {k + kb: c * cb for k, c in a.items()}
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            s = out.get(k, _F0) + ca * cb
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _p_scale(a, c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def _p_shift(a, n):
    if n == 0:
        return dict(a)
    return {k + n: c for k, c in a.items()}


def _p_divmod(a, b):
    # ordinary polynomial division; a, b have only non-negative exponents
    q = {}
    r = dict(a)
    db = max(b)
    lb = b[db]
    while r:
        dr = max(r)
        if dr < db:
            break
        c = r[dr] / lb
        k = dr - db
        q[k] = c
        for kb, cb in b.items():
            kk = kb + k
            s = r.get(kk, _F0) - cb * c
            if s:
                r[kk] = s
            else:
                r.pop(kk, None)
    return q, r


def _p_monic(a):
    lc = a[max(a)]
    if lc == 1:
        return a
    return {k: c / lc for k, c in a.items()}


def _int_clear(a):
    d = 1
    for c in a.values():
        cd = c.denominator
        d = d * cd // _igcd(d, cd)
    return {k: int(c * d) for k, c in a.items()}


def _igcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _int_primitive(a):
    g = 0
    for c in a.values():
        g = _igcd(g, c)
        if g == 1:
            return a
    return {k: c // g for k, c in a.items()}


def _int_pseudo_rem(a, b):
    db = max(b)
    lb = b[db]
    r = a
    while r:
        dr = max(r)
        if dr < db:
            break
        lr = r[dr]
        new = {}
        for k, c in r.items():
            if k != dr:
                new[k] = c * lb
        for k, c in b.items():
            if k == db:
                continue
            kk = k + dr - db
            s = new.get(kk, 0) - c * lr
            if s:
                new[kk] = s
            else:
                new.pop(kk, None)
        r = new
    return r


_GCD_CACHE = {}
_GCD_CACHE_LIMIT = 1 << 16


def _p_gcd(a, b):
    # monic gcd of ordinary polynomials over Q, computed as a primitive
    # pseudo-remainder sequence over the integers (naive Fraction Euclid
    # swells badly and dominates profiles); memoized because the same
    # denominators recur constantly
    if len(a) == 1 or len(b) == 1:
        return {0: _F1}
    key = (tuple(sorted(a.items())), tuple(sorted(b.items())))
    hit = _GCD_CACHE.get(key)
    if hit is not None:
        return hit
    ia = _int_primitive(_int_clear(a))
    ib = _int_primitive(_int_clear(b))
    if max(ia) < max(ib):
        ia, ib = ib, ia
    while ib:
        r = _int_pseudo_rem(ia, ib)
        ia, ib = ib, (_int_primitive(r) if r else {})
    if max(ia) == 0:
        out = {0: _F1}
    else:
        out = _p_monic({k: _RAT(c) for k, c in ia.items()})
    if len(_GCD_CACHE) < _GCD_CACHE_LIMIT:
        _GCD_CACHE[key] = out
    return out


_ONE_POLY = {0: _F1}


def _reduce_pair(num, den):
    """Strip gcd(poly-part-of-num, den); num Laurent, den canonical poly."""
    if den == _ONE_POLY or not num:
        return num, den
    sn = min(num)
    pn = _p_shift(num, -sn)
    g = _p_gcd(pn, den)
    if g == _ONE_POLY:
        return num, den
    pn, _ = _p_divmod(pn, g)
    den, _ = _p_divmod(den, g)
    return _p_shift(pn, sn), den


class QScalar:
    """Element of Q(t) in canonical form.

    Canonical means: the denominator is an ordinary polynomial with nonzero
    constant term and leading coefficient 1, gcd(num, den) = 1, and zero is
    ({}, {0: 1}).  The numerator may carry negative t-exponents.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _canonical=False):
        if den is None:
            den = _ONE_POLY
        if _canonical:
            self.num = num
            self.den = den
            return
        self.num, self.den = _normalize(num, den)

    # -- constructors --------------------------------------------------

    @staticmethod
    def from_int(n):
        if n == 0:
            return ZERO
        return QScalar({0: Fraction(n)}, _ONE_POLY, _canonical=True)

    @staticmethod
    def from_fraction(f):
        f = _RAT(f)
        if not f:
            return ZERO
        return QScalar({0: f}, _ONE_POLY, _canonical=True)

    # -- predicates ----------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def is_one(self):
        return self.num == _ONE_POLY and self.den == _ONE_POLY

    def is_monomial(self):
        return len(self.num) == 1 and self.den == _ONE_POLY

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QScalar):
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den is _ONE_POLY and other.den is _ONE_POLY:
            return QScalar(_p_add(self.num, other.num), _ONE_POLY)
        if self.den == other.den:
            return QScalar(_p_add(self.num, other.num), self.den)
        g = _p_gcd(self.den, other.den)
        if g == _ONE_POLY:
            # coprime denominators: the sum is already reduced
            num = _p_add(_p_mul(self.num, other.den), _p_mul(other.num, self.den))
            if not num:
                return ZERO
            return QScalar(num, _p_mul(self.den, other.den), _canonical=True)
        da, _ = _p_divmod(self.den, g)
        db, _ = _p_divmod(other.den, g)
        num = _p_add(_p_mul(self.num, db), _p_mul(other.num, da))
        return QScalar(num, _p_mul(self.den, db))

    def __sub__(self, other):
        if not isinstance(other, QScalar):
            return NotImplemented
        return self.__add__(QScalar(_p_neg(other.num), other.den, _canonical=True))

    def __neg__(self):
        return QScalar(_p_neg(self.num), self.den, _canonical=True)

    def __mul__(self, other):
        if not isinstance(other, QScalar):
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        if self.den is _ONE_POLY and other.den is _ONE_POLY:
            return QScalar(_p_mul(self.num, other.num), _ONE_POLY, _canonical=True)
        # cross-cancel: both operands are reduced, so after stripping
        # gcd(num_a, den_b) and gcd(num_b, den_a) the product is reduced
        na, db = _reduce_pair(self.num, other.den)
        nb, da = _reduce_pair(other.num, self.den)
        den = da if db == _ONE_POLY else (db if da == _ONE_POLY else _p_mul(da, db))
        if den == _ONE_POLY:
            den = _ONE_POLY
        return QScalar(_p_mul(na, nb), den, _canonical=True)

    def __truediv__(self, other):
        if not isinstance(other, QScalar):
            return NotImplemented
        return self.__mul__(other.inverse())

    def inverse(self):
        # swapping a reduced pair stays reduced; only re-normalize the unit
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(t)")
        sn = min(self.num)
        pn = _p_shift(self.num, -sn)
        lc = pn[max(pn)]
        if lc != 1:
            pn = {k: c / lc for k, c in pn.items()}
        num = {k - sn: c / lc for k, c in self.den.items()} if lc != 1 \
            else _p_shift(self.den, -sn)
        if pn == _ONE_POLY:
            pn = _ONE_POLY
        return QScalar(num, pn, _canonical=True)

    def __pow__(self, n):
        if n == 0:
            return ONE
        if n < 0:
            return self.inverse() ** (-n)
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def scale(self, f):
        f = _RAT(f)
        if not f or not self.num:
            return ZERO
        return QScalar(_p_scale(self.num, f), self.den, _canonical=True)

    # -- substitutions ---------------------------------------------------

    def subs_t_inverse(self):
        """The bar involution t -> t^-1 (hence q -> q^-1)."""
        return QScalar({-k: c for k, c in self.num.items()},
                       {-k: c for k, c in self.den.items()})

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, QScalar):
            if other == 0:
                return not self.num
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((frozenset(self.num.items()), frozenset(self.den.items())))

    # -- printing ----------------------------------------------------------

    def __str__(self):
        return "(%s)/(%s)" % (_poly_str(self.num), _poly_str(self.den))

    def __repr__(self):
        return "QScalar(%s)" % self


def _normalize(num, den):
    num = {k: c for k, c in num.items() if c}
    den = {k: c for k, c in den.items() if c}
    if not den:
        raise ZeroDivisionError("zero denominator in Q(t)")
    if not num:
        return {}, _ONE_POLY
    if den == _ONE_POLY:
        return num, _ONE_POLY
    # strip the monomial content so both parts are ordinary polynomials;
    # any gcd factor has nonzero constant term, so pd keeps minimal degree 0
    sn = min(num)
    sd = min(den)
    pn = _p_shift(num, -sn)
    pd = _p_shift(den, -sd)
    g = _p_gcd(pn, pd)
    if g != _ONE_POLY:
        pn, _ = _p_divmod(pn, g)
        pd, _ = _p_divmod(pd, g)
    lc = pd[max(pd)]
    if lc != 1:
        pn = {k: c / lc for k, c in pn.items()}
        pd = {k: c / lc for k, c in pd.items()}
    if pd == _ONE_POLY:
        pd = _ONE_POLY
    return _p_shift(pn, sn - sd), pd


def _poly_str(p):
    if not p:
        return "0"
    parts = []
    for k in sorted(p):
        c = p[k]
        if k == 0:
            parts.append(str(c))
        elif c == 1:
            parts.append("t^%d" % k)
        elif c == -1:
            parts.append("-t^%d" % k)
        else:
            parts.append("%s*t^%d" % (c, k))
    out = " + ".join(parts)
    return out.replace("+ -", "- ")


ZERO = QScalar({}, _ONE_POLY, _canonical=True)
ONE = QScalar(_ONE_POLY, _ONE_POLY, _canonical=True)

QScalar.ZERO = ZERO
QScalar.ONE = ONE


def t_power(k):
    """The monomial t^k."""
    return QScalar({k: _F1}, _ONE_POLY, _canonical=True)


def q_power(k):
    """q^k for k integer or Fraction with denominator dividing 6."""
    e = _RAT(k) * 6
    if e.denominator != 1:
        raise ValueError("q^(%s) does not live in Q(t) with q = t^6" % (k,))
    return t_power(int(e))


# -- q-numbers ---------------------------------------------------------------

def qint(n):
    """The symmetric q-integer (q^n - q^-n)/(q - q^-1)."""
    if n == 0:
        return ZERO
    sign = 1 if n > 0 else -1
    m = abs(n)
    # q^(m-1) + q^(m-3) + ... + q^(1-m)
    p = {6 * (m - 1 - 2 * i): _F1 for i in range(m)}
    out = QScalar(p, _ONE_POLY, _canonical=True)
    return out if sign > 0 else -out


def qint_base(n, base_t_exp):
    """[n] evaluated at q -> t^base_t_exp, still inside Q(t)."""
    if n == 0:
        return ZERO
    sign = 1 if n > 0 else -1
    m = abs(n)
    p = {}
    for i in range(m):
        k = base_t_exp * (m - 1 - 2 * i)
        p[k] = p.get(k, _F0) + _F1
    p = {k: c for k, c in p.items() if c}
    out = QScalar(p)
    return out if sign > 0 else -out


def qint_factorial(n):
    out = ONE
    for k in range(1, n + 1):
        out = out * qint(k)
    return out


def qbinom(n, m):
    if m < 0 or m > n:
        return ZERO
    return qint_factorial(n) / (qint_factorial(m) * qint_factorial(n - m))


def qnum(n):
    """The second deformation (n)_q = (q^n - 1)/(q - 1) used by exp_q."""
    if n == 0:
        return ZERO
    # 1 + q + ... + q^(n-1)
    return QScalar({6 * i: _F1 for i in range(n)}, _ONE_POLY, _canonical=True)


def qnum_base(n, base_t_exp):
    if n == 0:
        return ZERO
    p = {}
    for i in range(n):
        k = base_t_exp * i
        p[k] = p.get(k, _F0) + _F1
    return QScalar({k: c for k, c in p.items() if c})


def qnum_factorial_base(n, base_t_exp):
    out = ONE
    for k in range(1, n + 1):
        out = out * qnum_base(k, base_t_exp)
    return out


def qnum_factorial(n):
    return qnum_factorial_base(n, 6)


# -- parsing of the canonical string form ------------------------------------

def _parse_poly(s):
    s = s.strip()
    if s == "0":
        return {}
    s = s.replace("- ", "+ -").replace("-t^", "-1*t^")
    out = {}
    for term in s.split("+"):
        term = term.strip()
        if not term:
            continue
        if "t^" in term:
            if "*" in term:
                cs, ts = term.split("*")
                c = _RAT(cs)
            else:
                c = _F1
                ts = term
            k = int(ts[2:])
        else:
            c = _RAT(term)
            k = 0
        out[k] = out.get(k, _F0) + c
    return {k: c for k, c in out.items() if c}


def parse_qscalar(s):
    """Inverse of str(QScalar); round-trips bit-exactly."""
    s = s.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError("malformed scalar string: %r" % s)
    depth = 0
    split = -1
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0 and i + 1 < len(s) and s[i + 1] == "/":
                split = i
                break
    if split < 0:
        raise ValueError("malformed scalar string: %r" % s)
    num = _parse_poly(s[1:split])
    den = _parse_poly(s[split + 3:-1])
    return QScalar(num, den)
