"""Exact coefficient arithmetic for the q-deformed superalgebra kernel.

A Scalar is a finite sum of terms

    (rational function in s) * L^l * prod_i sqrt{n_i}

where s = q^(1/2), L is a formal symbol for ln q (transcendental over the
rational-function field: no relation between L and s is ever applied), and
sqrt{n} is a formal square root of the K-bracket {n}.  Squaring a radical
folds it back into the rational-function part, so radical keys only ever
carry odd multiplicity.

Everything is exact: rational functions live as GCD-reduced primitive
integer polynomials with a single Fraction carrying scale and sign, so the
inner loops stay in machine-integer arithmetic.  Scalars are immutable by
convention; no operation mutates its arguments.
"""

from __future__ import annotations

import math
from fractions import Fraction

from mpmath import mp, mpf

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# Laurent polynomials in s, represented as {exponent: Fraction} with zero
# coefficients dropped.


def _ladd(p, r):
    out = dict(p)
    for e, c in r.items():
        nc = out.get(e, 0) + c
        if nc:
            out[e] = nc
        else:
            out.pop(e, None)
    return out


def _imul(p, r):
    """Product of integer-coefficient Laurent dicts."""
    if not p or not r:
        return {}
    if len(p) > len(r):
        p, r = r, p
    ritems = list(r.items())
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in ritems:
            e = e1 + e2
            v = out.get(e)
            out[e] = c1 * c2 if v is None else v + c1 * c2
    return {e: c for e, c in out.items() if c}


def _icontent(vals):
    g = 0
    for v in vals:
        g = math.gcd(g, v)
        if g == 1:
            return 1
    return g


def _lshift(p, k):
    return {e + k: c for e, c in p.items()}


def _to_dense(p):
    # non-negative exponents assumed
    if not p:
        return []
    d = max(p)
    out = [_ZERO] * (d + 1)
    for e, c in p.items():
        out[e] = c
    return out


def _to_idense(p, mn):
    """Dense integer list of dict p shifted so exponent mn lands at index 0."""
    out = [0] * (max(p) - mn + 1)
    for e, v in p.items():
        out[e - mn] = v
    return out


def _from_dense(v):
    return {e: c for e, c in enumerate(v) if c}


def _pdivmod(a, b):
    """Dense polynomial division with remainder over Fractions."""
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [_ZERO] * max(len(a) - db, 0)
    while len(a) - 1 >= db and any(a):
        da = len(a) - 1
        if not a[-1]:
            a.pop()
            continue
        f = a[-1] / lead
        q[da - db] = f
        for i in range(db + 1):
            a[da - db + i] -= f * b[i]
        a.pop()
    while a and not a[-1]:
        a.pop()
    return q, a


def _int_primitive(p):
    g = 0
    for c in p:
        g = math.gcd(g, abs(c))
        if g == 1:
            return p
    if g > 1:
        return [c // g for c in p]
    return p


def _ipseudo_rem(a, b):
    """Pseudo-remainder of integer polys: rem of lead(b)^k * a by b."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db:
        if a[-1] == 0:
            a.pop()
            continue
        top = a.pop()
        da = len(a)
        for i in range(da):
            a[i] *= lb
        for i in range(db):
            a[da - db + i] -= top * b[i]
    while a and a[-1] == 0:
        a.pop()
    return a


def _int_pgcd(A, B):
    """Primitive gcd of primitive integer polys, by a primitive PRS
    (rational-coefficient remainder sequences explode; integer contents
    stay cheap to strip)."""
    if len(B) > len(A):
        A, B = B, A
    while B:
        A, B = B, _int_primitive(_ipseudo_rem(A, B))
    return A


def _int_clear(p):
    """Common denominator m and the primitive integer core of a dense
    Fraction poly: p = (g/m) * core."""
    m = 1
    for c in p:
        if c:
            m = m * c.denominator // math.gcd(m, c.denominator)
    ints = [int(c * m) for c in p]
    g = 0
    for c in ints:
        g = math.gcd(g, abs(c))
        if g == 1:
            break
    if g > 1:
        ints = [c // g for c in ints]
    return Fraction(g, m), ints


def _iexact_div(a, b):
    """Exact quotient of integer polys, or None when division leaves a
    remainder (primitive divisor of a primitive poly has integer quotient)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db:
        if a[-1] == 0:
            a.pop()
            continue
        if a[-1] % lb:
            return None
        f = a[-1] // lb
        q[len(a) - 1 - db] = f
        for i in range(db + 1):
            a[len(a) - 1 - db + i] -= f * b[i]
        a.pop()
    if any(a):
        return None
    return q


def _poly_divides(num, den):
    """Exact-divide dense num by dense den, or None."""
    q, r = _pdivmod(num, den)
    if any(r):
        return None
    return q


# ---------------------------------------------------------------------------
# Rational functions: triples (c, num, den) with one Fraction c carrying the
# whole rational scale and sign, and num/den integer Laurent dicts that are
# primitive and coprime.  den has minimum exponent 0; the lowest coefficient
# of each of num and den is positive.  That form is unique, so triples of
# equal functions compare equal, and the inner arithmetic never touches a
# Fraction.  The dicts are shared, never mutated.

_D_ONE = {0: 1}
_R_ZERO = (_ZERO, {}, _D_ONE)
_R_ONE = (_ONE, _D_ONE, _D_ONE)


def _rcanon(c, num, den):
    """Canonical triple from integer dicts; gcd-reduces num against den."""
    if not num or not c:
        return _R_ZERO
    dmin = min(den)
    if dmin:
        num = _lshift(num, -dmin)
        den = _lshift(den, -dmin)
    nmin = min(num)
    ndense = _to_idense(num, nmin)
    ddense = _to_idense(den, 0)
    gn = _icontent(ndense)
    gd = _icontent(ddense)
    if gn > 1:
        ndense = [v // gn for v in ndense]
    if gd > 1:
        ddense = [v // gd for v in ddense]
    if len(ndense) > 1 and len(ddense) > 1:
        g = _int_pgcd(ndense, ddense)
        if len(g) > 1:
            ndense = _iexact_div(ndense, g)
            ddense = _iexact_div(ddense, g)
    sign = 1
    if ddense[0] < 0:
        ddense = [-v for v in ddense]
        sign = -1
    if ndense[0] < 0:
        ndense = [-v for v in ndense]
        sign = -sign
    return (
        c * Fraction(sign * gn, gd),
        {e + nmin: v for e, v in enumerate(ndense) if v},
        {e: v for e, v in enumerate(ddense) if v},
    )


def _radd(a, b):
    c1, n1, d1 = a
    c2, n2, d2 = b
    if not n1:
        return b
    if not n2:
        return a
    s1 = c1.numerator * c2.denominator
    s2 = c2.numerator * c1.denominator
    c = Fraction(1, c1.denominator * c2.denominator)
    if d1 == d2:
        num = {e: s1 * v for e, v in n1.items()}
        for e, v in n2.items():
            w = num.get(e, 0) + s2 * v
            if w:
                num[e] = w
            else:
                num.pop(e, None)
        return _rcanon(c, num, d1)
    num = _ladd(
        {e: s1 * v for e, v in _imul(n1, d2).items()},
        {e: s2 * v for e, v in _imul(n2, d1).items()},
    )
    return _rcanon(c, num, _imul(d1, d2))


def _rmul(a, b):
    c1, n1, d1 = a
    c2, n2, d2 = b
    if not n1 or not n2:
        return _R_ZERO
    c = c1 * c2
    # multiplying by c*s^e keeps the other factor canonical as it stands
    if d2 == _D_ONE and len(n2) == 1:
        e2 = next(iter(n2))
        return (c, _lshift(n1, e2), d1) if e2 else (c, n1, d1)
    if d1 == _D_ONE and len(n1) == 1:
        e1 = next(iter(n1))
        return (c, _lshift(n2, e1), d2) if e1 else (c, n2, d2)
    if d1 == _D_ONE and d2 == _D_ONE:
        # a product of primitive polys is primitive, and the lowest
        # coefficient is the product of two positive lowest coefficients
        return (c, _imul(n1, n2), _D_ONE)
    # each factor is reduced, so only the cross gcds can cancel; reducing
    # them first keeps the polynomial products gcd-free
    n1min = min(n1)
    n2min = min(n2)
    A = _to_idense(n1, n1min)
    B = _to_idense(d2, 0)
    if len(A) > 1 and len(B) > 1:
        g = _int_pgcd(A, B)
        if len(g) > 1:
            A = _iexact_div(A, g)
            B = _iexact_div(B, g)
    C = _to_idense(n2, n2min)
    D = _to_idense(d1, 0)
    if len(C) > 1 and len(D) > 1:
        g = _int_pgcd(C, D)
        if len(g) > 1:
            C = _iexact_div(C, g)
            D = _iexact_div(D, g)
    num = _imul(
        {e + n1min: v for e, v in enumerate(A) if v},
        {e + n2min: v for e, v in enumerate(C) if v},
    )
    den = _imul(
        {e: v for e, v in enumerate(B) if v},
        {e: v for e, v in enumerate(D) if v},
    )
    if den[0] < 0:
        den = {e: -v for e, v in den.items()}
        c = -c
    if num[min(num)] < 0:
        num = {e: -v for e, v in num.items()}
        c = -c
    return (c, num, den)


def _rneg(a):
    return (-a[0], a[1], a[2])


def _rinv(a):
    c, num, den = a
    if not num:
        raise ZeroDivisionError("division by zero scalar")
    sh = min(num)
    # swapping reduced num and den gives a form that is already canonical
    return (1 / c, _lshift(den, -sh), _lshift(num, -sh) if sh else num)


def _rnorm(num, den):
    """Canonical triple from Fraction-coefficient Laurent dicts (constructor
    path; the arithmetic above stays in integer triples throughout)."""
    if not num:
        return _R_ZERO
    if not den:
        raise ZeroDivisionError("zero denominator")
    nmin = min(num)
    dmin = min(den)
    cn, nint = _int_clear(_to_dense(_lshift(num, -nmin)))
    cd, dint = _int_clear(_to_dense(_lshift(den, -dmin)))
    return _rcanon(
        cn / cd,
        {e + nmin - dmin: v for e, v in enumerate(nint) if v},
        {e: v for e, v in enumerate(dint) if v},
    )


# ---------------------------------------------------------------------------
# Scalar proper.  terms: {(l_deg, frozenset radicals): ratf}


class Scalar:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    # -- constructors

    @staticmethod
    def zero():
        return Scalar({})

    @staticmethod
    def one():
        return Scalar({(0, frozenset()): _R_ONE})

    @staticmethod
    def from_fraction(fr):
        fr = Fraction(fr)
        if not fr:
            return Scalar.zero()
        return Scalar({(0, frozenset()): (fr, _D_ONE, _D_ONE)})

    @staticmethod
    def from_int(i):
        return Scalar.from_fraction(Fraction(i))

    # -- ring ops

    def __add__(self, other):
        out = dict(self.terms)
        for k, r in other.terms.items():
            if k in out:
                s = _radd(out[k], r)
                if s[1]:
                    out[k] = s
                else:
                    del out[k]
            else:
                out[k] = r
        return Scalar(out)

    def __neg__(self):
        return Scalar({k: _rneg(r) for k, r in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_fraction(other)
        out = {}
        for (l1, rad1), r1 in self.terms.items():
            for (l2, rad2), r2 in other.terms.items():
                r = _rmul(r1, r2)
                for n in rad1 & rad2:
                    r = _rmul(r, _kbr_ratf(n))
                key = (l1 + l2, rad1 ^ rad2)
                if key in out:
                    s = _radd(out[key], r)
                    if s[1]:
                        out[key] = s
                    else:
                        del out[key]
                else:
                    if r[1]:
                        out[key] = r
        return Scalar(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = Scalar.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inv(self):
        """Inverse of a single-term, L-free scalar (radicals allowed)."""
        if len(self.terms) != 1:
            raise ValueError("inverse requires a single-term scalar")
        (l, rad), r = next(iter(self.terms.items()))
        if l != 0:
            raise ValueError("cannot invert a scalar carrying ln q")
        rr = _rinv(r)
        for n in rad:
            rr = _rmul(rr, _rinv(_kbr_ratf(n)))
        return Scalar({(0, rad): rr})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * Scalar.from_fraction(Fraction(1, 1) / Fraction(other))
        return self * other.inv()

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = Scalar.from_int(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(self.key())

    def key(self):
        """Canonical hashable form (used for equality-sensitive containers)."""
        items = []
        for (l, rad), (c, num, den) in sorted(
            self.terms.items(), key=lambda kv: (kv[0][0], sorted(kv[0][1]))
        ):
            items.append(
                (
                    l,
                    tuple(sorted(rad)),
                    (c.numerator, c.denominator),
                    tuple(sorted(num.items())),
                    tuple(sorted(den.items())),
                )
            )
        return tuple(items)

    def __repr__(self):
        if self.is_zero():
            return "0"
        bits = []
        for (l, rad), r in sorted(
            self.terms.items(), key=lambda kv: (kv[0][0], sorted(kv[0][1]))
        ):
            num, den = _eff_pair(r)
            f = _fmt_lpoly(num)
            if den != {0: _ONE}:
                f = "(%s)/(%s)" % (f, _fmt_lpoly(den))
            if l:
                f += "*L^%d" % l
            for n in sorted(rad):
                f += "*r{%d}" % n
            bits.append(f)
        return " + ".join(bits)


def _eff_pair(r):
    """The (num, den) Fraction dicts of a triple, with the denominator
    normalized to lowest coefficient 1 (the display form)."""
    c, num, den = r
    d0 = den.get(0, 1)
    sc = c / d0
    return (
        {e: sc * v for e, v in num.items()},
        {e: Fraction(v, d0) for e, v in den.items()},
    )


def _fmt_lpoly(p):
    bits = []
    for e in sorted(p):
        c = p[e]
        if e == 0:
            bits.append(str(c))
        elif e == 1:
            bits.append("%s*s" % c)
        else:
            bits.append("%s*s^%d" % (c, e))
    return " + ".join(bits) if bits else "0"


# ---------------------------------------------------------------------------
# Basic building blocks.


def qh(k):
    """q^(k/2) as a Scalar, k any integer (all exponents here are half-integers)."""
    return Scalar({(0, frozenset()): (_ONE, {k: 1}, _D_ONE)})


def lam(r=1):
    """L^r, the formal r-th power of ln q."""
    if r < 0:
        raise ValueError("negative power of ln q")
    return Scalar({(r, frozenset()): _R_ONE})


_kbr_cache = {}


def _kbr_ratf(n):
    """{n} = (q^(-n/2) - (-1)^n q^(n/2)) / (q^(-1/2) + q^(1/2)) as a ratf."""
    r = _kbr_cache.get(n)
    if r is None:
        num = _ladd({-n: _ONE}, {n: _ONE if n % 2 else -_ONE})
        r = _rnorm(num, {-1: _ONE, 1: _ONE})
        _kbr_cache[n] = r
    return r


def _qnum_ratf(n):
    """[n] = (q^n - q^(-n)) / (q - q^(-1)) as a ratf."""
    return _rnorm(_ladd({2 * n: _ONE}, {-2 * n: -_ONE}), {2: _ONE, -2: -_ONE})


def _mk(ratf):
    if not ratf[1]:
        return Scalar.zero()
    return Scalar({(0, frozenset()): ratf})


def bracket(kind, n, k=None):
    """Deformed integers and their factorials.

    kind is one of 'qnum', 'super', 'super_inv', 'kbr', 'bra', 'sbinom',
    'sigma', or any of the first five with a '_fact' suffix.  'sbinom'
    takes the second index through k.
    """
    if kind.endswith("_fact"):
        base = kind[:-5]
        if n < 0:
            raise ValueError("negative factorial index")
        out = Scalar.one()
        for j in range(1, n + 1):
            out = out * bracket(base, j)
        return out
    if kind == "qnum":
        return _mk(_qnum_ratf(n))
    if kind == "super":
        num = _ladd({0: _ONE}, {2 * n: _ONE if n % 2 else -_ONE})
        return _mk(_rnorm(num, {0: _ONE, 2: _ONE}))
    if kind == "super_inv":
        num = _ladd({0: _ONE}, {-2 * n: _ONE if n % 2 else -_ONE})
        return _mk(_rnorm(num, {0: _ONE, -2: _ONE}))
    if kind == "kbr":
        return _mk(_kbr_ratf(n))
    if kind == "bra":
        # the K-bracket at q -> 1/q; this normalization is pinned by the
        # requirement that the duality pairing return exact Kronecker deltas
        num = _ladd({n: _ONE}, {-n: _ONE if n % 2 else -_ONE})
        return _mk(_rnorm(num, {-1: _ONE, 1: _ONE}))
    if kind == "sbinom":
        if k is None or not (0 <= k <= n):
            raise ValueError("sbinom needs 0 <= k <= n")
        return bracket("super_fact", n) / (
            bracket("super_fact", k) * bracket("super_fact", n - k)
        )
    if kind == "sigma":
        if n < 1:
            raise ValueError("sigma index must be >= 1")
        out = Scalar.one()
        for kk in range(1, n):
            acc = Scalar.zero()
            for ll in range(kk):
                t = bracket("qnum", kk - ll)
                acc = acc + (t if ll % 2 == 0 else -t)
            out = out * acc
        return out
    raise ValueError("unknown bracket kind %r" % kind)


def _single_ratf(x):
    """The lone ratf triple of a radical-free, L-free scalar."""
    if x.is_zero():
        return _R_ZERO
    if len(x.terms) != 1 or next(iter(x.terms)) != (0, frozenset()):
        raise ValueError("scalar is not a plain rational function")
    return x.terms[(0, frozenset())]


def sqrt_kbracket(n):
    """Formal square root of {n}; n = 1 gives 1, two copies fold to {n}."""
    if n <= 0:
        raise ValueError("sqrt of a non-positive K-bracket index")
    if n == 1:
        return Scalar.one()
    return Scalar({(0, frozenset([n])): _R_ONE})


def sqrt_kbracket_power(n, e):
    """sqrt({n}^e) for any integer e, e.g. {2}^(-3/2) = {2}^(-2) sqrt{2}."""
    half, rem = divmod(e, 2)
    out = bracket("kbr", n) ** half if half >= 0 else bracket("kbr", n).inv() ** (-half)
    if rem:
        out = out * sqrt_kbracket(n)
    return out


def sqrt_kfact_ratio(a, b):
    """sqrt({a}!/{b}!) with radical folding, a, b >= 0."""
    if a < 0 or b < 0:
        raise ValueError("negative factorial index")
    out = Scalar.one()
    if a >= b:
        for j in range(b + 1, a + 1):
            out = out * sqrt_kbracket(j)
    else:
        for j in range(a + 1, b + 1):
            out = out * sqrt_kbracket_power(j, -1)
    return out


# ---------------------------------------------------------------------------
# Square roots of plain rational functions (CGC normalization).


def _fraction_sqrt(fr):
    if fr < 0:
        return None
    pn, pd = fr.numerator, fr.denominator
    rn, rd = math.isqrt(pn), math.isqrt(pd)
    if rn * rn != pn or rd * rd != pd:
        return None
    return Fraction(rn, rd)


def _poly_sqrt(p):
    """Square root of a dense polynomial with Fraction coefficients, or None."""
    if not p:
        return []
    d = len(p) - 1
    if d % 2:
        return None
    lead = _fraction_sqrt(p[-1])
    if lead is None or lead == 0:
        return None
    h = d // 2
    q = [_ZERO] * (h + 1)
    q[h] = lead
    rem = list(p)
    for i in range(h - 1, -1, -1):
        # coefficient of s^(i+h) in q^2 must match p[i+h]
        acc = _ZERO
        for j in range(i + 1, h + 1):
            jj = i + h - j
            if 0 <= jj <= h:
                acc += q[j] * q[jj]
        q[i] = (p[i + h] - acc) / (2 * lead)
    # verify
    chk = [_ZERO] * (d + 1)
    for i in range(h + 1):
        for j in range(h + 1):
            chk[i + j] += q[i] * q[j]
    if chk != list(p) + [_ZERO] * (d + 1 - len(p)):
        return None
    return q


_cyclo_cache = {}


def _cyclotomic(d):
    """Dense cyclotomic polynomial Phi_d(s), ascending Fraction coefficients."""
    p = _cyclo_cache.get(d)
    if p is None:
        p = [-_ONE] + [_ZERO] * (d - 1) + [_ONE]
        for e in range(1, d):
            if d % e == 0:
                p = _poly_divides(p, _cyclotomic(e))
        _cyclo_cache[d] = p
    return p


def _cyclo_factor(p):
    """Split a Laurent poly dict into cyclotomic exponents and a leftover.

    Returns ({d: multiplicity}, leftover_dense) after shifting the minimum
    exponent away; factors beyond the degree-based trial bound stay in the
    leftover, where the caller's perfect-square check still guards them.
    """
    dense = _to_dense(_lshift(p, -min(p)))
    expo = {}
    deg = len(dense) - 1
    for d in range(1, 4 * deg + 17):
        if len(dense) <= 1:
            break
        phi = _cyclotomic(d)
        if len(phi) - 1 > len(dense) - 1:
            continue
        while True:
            qq = _poly_divides(dense, phi)
            if qq is None:
                break
            dense = qq
            expo[d] = expo.get(d, 0) + 1
    return expo, dense


def _kbr_parity_set(n):
    """Indices of the cyclotomic factors appearing in {n} to an odd power."""
    if n % 2:
        ds = {d for d in range(1, 4 * n + 1) if 4 * n % d == 0 and 2 * n % d}
    else:
        ds = {d for d in range(1, 2 * n + 1) if 2 * n % d == 0}
    ds.discard(4)
    return ds


def _radical_subset(target, n_cap):
    """A set of bracket indices whose combined odd cyclotomic factors hit
    exactly the target set, found by GF(2) elimination; None when the
    target is outside the span."""
    bit_of = {}

    def mask(ds):
        m = 0
        for d in ds:
            if d not in bit_of:
                bit_of[d] = len(bit_of)
            m |= 1 << bit_of[d]
        return m

    basis = {}

    def reduce(vec, combo):
        while vec:
            hb = vec.bit_length() - 1
            if hb not in basis:
                return vec, combo, hb
            bv, bc = basis[hb]
            vec ^= bv
            combo ^= bc
        return 0, combo, None

    cands = list(range(2, n_cap + 1))
    for i, n in enumerate(cands):
        vec, combo, hb = reduce(mask(_kbr_parity_set(n)), 1 << i)
        if hb is not None:
            basis[hb] = (vec, combo)
    tv, tc, _ = reduce(mask(target), 0)
    if tv:
        return None
    return [n for i, n in enumerate(cands) if tc >> i & 1]


def sqrt_rational(x, n_max=None):
    """Write a plain rational-function Scalar as (ratf) * prod sqrt{n} exactly.

    Factors numerator and denominator into cyclotomic polynomials, solves
    for the set of K-brackets carrying the odd part (so composite shapes
    like {4}/{2} are recognized), and square-roots the even remainder.
    Of the two roots, returns the one positive at q = 1/2.  Raises
    ValueError when x is not of that shape -- a loud failure, never an
    approximation.
    """
    c, num, den = _single_ratf(x)
    if not num:
        return Scalar.zero()
    en, _ = _cyclo_factor(num)
    ed, _ = _cyclo_factor(den)
    parity = {d for d in set(en) | set(ed) if (en.get(d, 0) + ed.get(d, 0)) % 2}
    rad = []
    if parity:
        cap = n_max if n_max is not None else max(2 * max(parity), 8)
        rad = _radical_subset(parity, cap)
        if rad is None:
            raise ValueError("scalar is not a representable perfect square")
    y = x
    for n in rad:
        y = y * bracket("kbr", n).inv()
    cy, num, den = _single_ratf(y)
    nshift = min(num)
    if nshift % 2:
        raise ValueError("square root leaves a dangling half-power of q^(1/2)")
    rc = _fraction_sqrt(cy)
    sq_n = _poly_sqrt(_to_dense(_lshift(num, -nshift)))
    sq_d = _poly_sqrt(_to_dense(den))
    if rc is None or sq_n is None or sq_d is None:
        raise ValueError("scalar is not a representable perfect square")
    res = Scalar(
        {
            (0, frozenset()): _rnorm(
                {e + nshift // 2: rc * v for e, v in enumerate(sq_n) if v},
                _from_dense(sq_d),
            )
        }
    )
    for n in rad:
        res = res * sqrt_kbracket(n)
    if eval_numeric(res, Fraction(1, 2)) < 0:
        res = -res
    return res


# ---------------------------------------------------------------------------
# Numeric evaluation and the q -> 1 limit.


def eval_numeric(x, q_val, dps=60):
    """Evaluate at a rational q in (0,1) with mpmath at the given precision."""
    q_val = Fraction(q_val)
    if not (0 < q_val < 1):
        raise ValueError("q must lie strictly inside (0,1)")
    with mp.workdps(dps):
        qn = mpf(q_val.numerator) / mpf(q_val.denominator)
        s = mp.sqrt(qn)
        logq = mp.log(qn)
        total = mpf(0)
        for (l, rad), (c, num, den) in x.terms.items():
            val = _leval(num, s) / _leval(den, s)
            val *= mpf(c.numerator) / mpf(c.denominator)
            if l:
                val *= logq**l
            for n in rad:
                kc, kn, kd = _kbr_ratf(n)
                kval = mpf(kc.numerator) / mpf(kc.denominator)
                val *= mp.sqrt(kval * _leval(kn, s) / _leval(kd, s))
            total += val
        return total


def _leval(p, s):
    total = mpf(0)
    for e, c in p.items():
        total += (mpf(c.numerator) / mpf(c.denominator)) * s**e
    return total


def limit_q1(x, pole_order=0):
    """lim_{q->1} x/(1-q)^pole_order for an L-free, radical-free Scalar.

    The factor (1-q) = (1-s)(1+s) in the s variable; the (1-s) zero is
    stripped exactly the requested number of times.  Raises on a residual
    pole.  Returns a Fraction.
    """
    if pole_order < 0:
        raise ValueError("pole_order must be >= 0")
    c, num, den = _single_ratf(x)
    if not num:
        return Fraction(0)
    one_minus_s = [_ONE, -_ONE]

    def strip(p):
        sh = min(p)
        dense = _to_dense(_lshift(p, -sh))
        k = 0
        while True:
            qq = _poly_divides(dense, one_minus_s)
            if qq is None:
                break
            dense = qq
            k += 1
        return k, dense, sh

    kn, dn, shn = strip(num)
    kd, dd, shd = strip(den)
    order = kn - kd - pole_order
    if order < 0:
        raise ValueError("residual pole at q = 1")

    def at1(dense):
        return sum(dense, _ZERO)

    if order > 0:
        return Fraction(0)
    val = c * at1(dn) / at1(dd)
    # the stripped (1+s) halves of each (1-q) contribute 2^pole_order
    val /= Fraction(2) ** pole_order
    return val


# ---------------------------------------------------------------------------
# Canonical JSON form.


def scalar_to_json(x):
    """Deterministic JSON-ready rendering: a sorted list of term objects."""
    out = []
    for (l, rad), r in sorted(
        x.terms.items(), key=lambda kv: (kv[0][0], sorted(kv[0][1]))
    ):
        num, den = _eff_pair(r)
        out.append(
            {
                "num": [[str(num[e]), e] for e in sorted(num)],
                "den": [[str(den[e]), e] for e in sorted(den)],
                "l": l,
                "rad": sorted(rad),
            }
        )
    return out


ZERO = Scalar.zero()
ONE = Scalar.one()
