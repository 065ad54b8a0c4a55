"""The quantum superalgebra U_q[osp(1/2)].

Elements are finite Scalar-linear combinations of normal-ordered monomials

    V+^a  H^b  g^m  V-^d        (g = q^H, m any integer)

stored as {(a, b, m, d): Scalar}.  The parity of a monomial is (a+d) mod 2.
Multiplication reorders with

    [H, V+-] = +-(1/2) V+-,   g V+- g^(-1) = q^(+-1/2) V+-,
    {V+, V-} = -(g^2 - g^(-2))/(q - q^(-1)),

the anticommutator being the only rule that generates new terms; the
V- V+^a reduction is memoized since everything funnels through it.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .scalar import ONE, Scalar, lam, qh

UMono = tuple  # (a, b, m, d)

U_ONE_MONO = (0, 0, 0, 0)


def umono_parity(mono):
    return (mono[0] + mono[3]) % 2


class UElement:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms or {}

    @staticmethod
    def zero():
        return UElement({})

    @staticmethod
    def one():
        return UElement({U_ONE_MONO: ONE})

    @staticmethod
    def monomial(a=0, b=0, m=0, d=0, coeff=None):
        if min(a, b, d) < 0:
            raise ValueError("negative generator power")
        return UElement({(a, b, m, d): coeff if coeff is not None else ONE})

    def __add__(self, other):
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(mono, None)
            else:
                out[mono] = s
        return UElement(out)

    def __neg__(self):
        return UElement({mono: -c for mono, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if isinstance(c, (int, Fraction)):
            c = Scalar.from_fraction(c)
        if c.is_zero():
            return UElement.zero()
        return UElement({mono: cc * c for mono, cc in self.terms.items()})

    def __mul__(self, other):
        out = UElement.zero()
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out = out + _mono_mul(m1, m2).scale(c1 * c2)
        return out

    def __pow__(self, n):
        out = UElement.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, UElement) and (self - other).terms == {}

    def __hash__(self):
        raise TypeError("UElement is not hashable")

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms):
            a, b, m, d = mono
            name = "".join(
                s
                for s, p in (
                    ("V+^%d" % a, a),
                    ("H^%d" % b, b),
                    ("g^%d" % m, m),
                    ("V-^%d" % d, d),
                )
                if p
            ) or "1"
            bits.append("(%r)%s" % (self.terms[mono], name))
        return " + ".join(bits)


# generators
def u_H():
    return UElement.monomial(b=1)


def u_Vp():
    return UElement.monomial(a=1)


def u_Vm():
    return UElement.monomial(d=1)


def u_g(m=1):
    return UElement.monomial(m=m)


def u_E(k, l, m):
    """The PBW monomial V+^k H^l V-^m."""
    return UElement.monomial(a=k, b=l, d=m)


# ---------------------------------------------------------------------------
# Multiplication.

_w_cache = {}


def _w(a):
    """V- V+^a in normal order."""
    out = _w_cache.get(a)
    if out is not None:
        return out
    if a == 0:
        out = UElement.monomial(d=1)
    else:
        prev = _w(a - 1)
        out = UElement.zero()
        for (al, be, mu, de), c in prev.terms.items():
            out = out + UElement({(al + 1, be, mu, de): -c})
        denom = qh(2) - qh(-2)
        out = out + UElement.monomial(a=a - 1, m=2, coeff=-(qh(2 * (a - 1))) / denom)
        out = out + UElement.monomial(a=a - 1, m=-2, coeff=qh(-2 * (a - 1)) / denom)
    _w_cache[a] = out
    return out


_vmvp_cache = {}


def _vmvp(d, a):
    """V-^d V+^a in normal order; every product reduction funnels through here."""
    key = (d, a)
    out = _vmvp_cache.get(key)
    if out is not None:
        return out
    if d == 0:
        out = UElement.monomial(a=a)
    elif a == 0:
        out = UElement.monomial(d=d)
    else:
        out = UElement.zero()
        for (al, _be, mu, de), c in _w(a).terms.items():
            left = _vmvp(d - 1, al)
            for (a2, _b2, m2, d2), c2 in left.terms.items():
                # right-multiply by g^mu V-^de: slide g^mu past V-^d2
                out = out + UElement(
                    {(a2, 0, m2 + mu, d2 + de): c * c2 * qh(d2 * mu)}
                )
    _vmvp_cache[key] = out
    return out


def _shifted_h_power(shift, b):
    """(H + shift)^b as {h_power: Fraction}."""
    return {
        i: comb(b, i) * shift ** (b - i) for i in range(b + 1)
    }


def _mono_mul(m1, m2):
    a1, b1, mm1, d1 = m1
    a2, b2, mm2, d2 = m2
    out = {}
    core = _vmvp(d1, a2)
    for (al, _be, mu, de), c in core.terms.items():
        base = c * qh(al * mm1 + de * mm2)
        hp1 = _shifted_h_power(Fraction(al, 2), b1)
        hp2 = _shifted_h_power(Fraction(de, 2), b2)
        for i, f1 in hp1.items():
            for j, f2 in hp2.items():
                mono = (a1 + al, i + j, mm1 + mu + mm2, de + d2)
                c_new = base * (f1 * f2)
                prev = out.get(mono)
                s = c_new if prev is None else prev + c_new
                if s.is_zero():
                    out.pop(mono, None)
                else:
                    out[mono] = s
    return UElement(out)


def u_mul(a, b):
    return a * b


# ---------------------------------------------------------------------------
# Graded tensor square.


class UTensor:
    """Finite sum of u (x) v with Scalar coefficients and the graded product
    (a (x) b)(c (x) d) = (-1)^(p(b)p(c)) ac (x) bd."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms or {}

    @staticmethod
    def one():
        return UTensor({(U_ONE_MONO, U_ONE_MONO): ONE})

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return UTensor(out)

    def __neg__(self):
        return UTensor({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if isinstance(c, (int, Fraction)):
            c = Scalar.from_fraction(c)
        if c.is_zero():
            return UTensor({})
        return UTensor({k: cc * c for k, cc in self.terms.items()})

    def __mul__(self, other):
        out = UTensor({})
        for (x1, x2), c1 in self.terms.items():
            for (y1, y2), c2 in other.terms.items():
                sign = -1 if (umono_parity(x2) * umono_parity(y1)) % 2 else 1
                left = _mono_mul(x1, y1)
                right = _mono_mul(x2, y2)
                coeff = c1 * c2 if sign == 1 else -(c1 * c2)
                for lm, lc in left.terms.items():
                    for rm, rc in right.terms.items():
                        key = (lm, rm)
                        add = lc * rc * coeff
                        prev = out.terms.get(key)
                        s = add if prev is None else prev + add
                        if s.is_zero():
                            out.terms.pop(key, None)
                        else:
                            out.terms[key] = s
        return out

    def __pow__(self, n):
        out = UTensor.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, UTensor) and (self - other).terms == {}

    def __hash__(self):
        raise TypeError("UTensor is not hashable")

    def is_zero(self):
        return not self.terms


_delta_gen_pow = {}


def _delta_power(gen, n):
    key = (gen, n)
    out = _delta_gen_pow.get(key)
    if out is not None:
        return out
    if n == 0:
        out = UTensor.one()
    elif n == 1:
        if gen == "Vp":
            out = UTensor(
                {((1, 0, 0, 0), (0, 0, -1, 0)): ONE, ((0, 0, 1, 0), (1, 0, 0, 0)): ONE}
            )
        elif gen == "Vm":
            out = UTensor(
                {((0, 0, 0, 1), (0, 0, -1, 0)): ONE, ((0, 0, 1, 0), (0, 0, 0, 1)): ONE}
            )
        elif gen == "H":
            out = UTensor(
                {((0, 1, 0, 0), U_ONE_MONO): ONE, (U_ONE_MONO, (0, 1, 0, 0)): ONE}
            )
        else:
            raise ValueError(gen)
    else:
        out = _delta_power(gen, n - 1) * _delta_power(gen, 1)
    _delta_gen_pow[key] = out
    return out


_delta_mono_cache = {}


def u_coproduct(el):
    """Delta extended multiplicatively over the graded tensor square."""
    out = UTensor({})
    for mono, c in el.terms.items():
        dm = _delta_mono_cache.get(mono)
        if dm is None:
            a, b, m, d = mono
            dm = _delta_power("Vp", a) * _delta_power("H", b)
            if m:
                dm = dm * UTensor({((0, 0, m, 0), (0, 0, m, 0)): ONE})
            dm = dm * _delta_power("Vm", d)
            _delta_mono_cache[mono] = dm
        out = out + dm.scale(c)
    return out


def u_counit(el):
    out = Scalar.zero()
    for (a, b, _m, d), c in el.terms.items():
        if a == 0 and b == 0 and d == 0:
            out = out + c
    return out


def u_antipode(el):
    """Graded anti-automorphism: S(H) = -H, S(V+-) = -q^(-+1/2) V+-, S(g) = 1/g."""
    out = UElement.zero()
    for (a, b, m, d), c in el.terms.items():
        n_odd = a + d
        sign = -1 if (n_odd * (n_odd - 1) // 2) % 2 else 1
        coeff = c * qh(d - a) * Fraction((-1) ** (a + b + d) * sign)
        # reversed word V-^d g^(-m) H^b V+^a, then normal order
        word = _mono_mul((0, 0, 0, d), (0, b, -m, 0))
        word = word * UElement.monomial(a=a)
        out = out + word.scale(coeff)
    return out


def u_counit_antipode(el):
    return u_counit(el), u_antipode(el)


# ---------------------------------------------------------------------------
# Closed-form coproduct of PBW monomials and basis-coefficient extraction.


def expand_Delta_E(k, l, m):
    """The triple-sum closed form of Delta(V+^k H^l V-^m)."""
    if min(k, l, m) < 0:
        raise ValueError("negative index")
    from .scalar import bracket

    out = UTensor({})
    for a in range(k + 1):
        for b in range(l + 1):
            for c in range(m + 1):
                coeff = (
                    bracket("sbinom", k, a)
                    * bracket("sbinom", m, c)
                    * Fraction(comb(l, b))
                    * qh(-a * (k - a) - c * (m - c))
                )
                if ((m - c) * (a + c)) % 2:
                    coeff = -coeff
                left = (k - a, l - b, a + c, m - c)
                right = (a, b, -(k + m - a - c), c)
                prev = out.terms.get((left, right))
                s = coeff if prev is None else prev + coeff
                if s.is_zero():
                    out.terms.pop((left, right), None)
                else:
                    out.terms[(left, right)] = s
    return out


def e_basis_coeff(el, target):
    """Coefficient of E_{prt} = V+^p H^r V-^t in el, with every g^j expanded
    as its H-exponential series to the requested H-degree."""
    p, r, t = target
    out = Scalar.zero()
    for (a, b, j, d), c in el.terms.items():
        if a != p or d != t or b > r:
            continue
        n = r - b
        out = out + c * lam(n) * Fraction(j**n, factorial(n)) if n else out + c
    return out


def tensor_e_coeff(ut, target1, target2):
    """e_basis_coeff applied to both legs of a tensor square."""
    out = Scalar.zero()
    for (m1, m2), c in ut.terms.items():
        c1 = e_basis_coeff(UElement({m1: ONE}), target1)
        if c1.is_zero():
            continue
        c2 = e_basis_coeff(UElement({m2: ONE}), target2)
        if c2.is_zero():
            continue
        out = out + c * c1 * c2
    return out


def tensor3_from_left(ut):
    """(Delta (x) id) applied to a tensor square; keys become mono triples."""
    out = {}
    for (m1, m2), c in ut.terms.items():
        for (n1, n2), c2 in u_coproduct(UElement({m1: ONE})).terms.items():
            key = (n1, n2, m2)
            s = out.get(key)
            add = c * c2
            s = add if s is None else s + add
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return out


def tensor3_from_right(ut):
    """(id (x) Delta) applied to a tensor square."""
    out = {}
    for (m1, m2), c in ut.terms.items():
        for (n1, n2), c2 in u_coproduct(UElement({m2: ONE})).terms.items():
            key = (m1, n1, n2)
            s = out.get(key)
            add = c * c2
            s = add if s is None else s + add
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return out


def umono_to_json(mono):
    a, b, m, d = mono
    return {"vplus": a, "h": b, "g": m, "vminus": d}
