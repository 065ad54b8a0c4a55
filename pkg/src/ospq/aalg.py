"""The dual quantum supergroup algebra A = OSp_q(1/2).

Elements are Scalar-linear combinations of normal-ordered monomials

    x^a  z^b  k^m  y^c          (k = e^(z/2), m any integer)

stored as {(a, b, m, c): Scalar}.  Parity is (a+c) mod 2 and the (a, c)
bidegree is additive under multiplication, which makes total x,y-degree
the natural truncation grading: z and k are never truncated.

Multiplication is a single closed form.  Moving the second factor's x
block through the first factor's y/k/z blocks gives

    (x^a1 z^b1 k^m1 y^c1)(x^a2 z^b2 k^m2 y^c2)
      = (-1)^(c1 a2) q^(m1 a2 - c1 m2)
        x^(a1+a2) (z + 2 a2 L)^b1 (z - 2 c1 L)^b2 k^(m1+m2) y^(c1+c2),

with L = ln q, after which the z-binomials are expanded.

The coproduct and antipode of z's exponential k are infinite series; they
are generated from BCH-factorized exponentials of y^m (x) x^m (resp.
x^m k^(-m) y^m) blocks, each of which is computed with the algebra's own
multiplication so no sign bookkeeping is duplicated here.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .scalar import ONE, Scalar, bracket, lam, qh

AMono = tuple  # (a, b, m, c)

A_ONE_MONO = (0, 0, 0, 0)


def amono_parity(mono):
    return (mono[0] + mono[3]) % 2


def amono_bidegree(mono):
    return mono[0] + mono[3]


class AElement:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms or {}

    @staticmethod
    def zero():
        return AElement({})

    @staticmethod
    def one():
        return AElement({A_ONE_MONO: ONE})

    @staticmethod
    def monomial(a=0, b=0, m=0, c=0, coeff=None):
        if min(a, b, c) < 0:
            raise ValueError("negative generator power")
        return AElement({(a, b, m, c): coeff if coeff is not None else ONE})

    def __add__(self, other):
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(mono, None)
            else:
                out[mono] = s
        return AElement(out)

    def __neg__(self):
        return AElement({mono: -c for mono, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if isinstance(c, (int, Fraction)):
            c = Scalar.from_fraction(c)
        if c.is_zero():
            return AElement.zero()
        return AElement({mono: cc * c for mono, cc in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                _accumulate_mono_product(out, m1, m2, c1 * c2)
        return AElement({k: v for k, v in out.items() if not v.is_zero()})

    def __pow__(self, n):
        out = AElement.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, AElement) and (self - other).terms == {}

    def __hash__(self):
        raise TypeError("AElement is not hashable")

    def is_zero(self):
        return not self.terms

    def truncate(self, n_max):
        return AElement(
            {m: c for m, c in self.terms.items() if amono_bidegree(m) <= n_max}
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms):
            a, b, m, c = mono
            name = "".join(
                s
                for s, p in (
                    ("x^%d" % a, a),
                    ("z^%d" % b, b),
                    ("k^%d" % m, m),
                    ("y^%d" % c, c),
                )
                if p
            ) or "1"
            bits.append("(%r)%s" % (self.terms[mono], name))
        return " + ".join(bits)


def _z_shift_poly(b, alpha):
    """(z + alpha*L)^b as {z_power: Scalar}."""
    if alpha == 0:
        return {b: ONE}
    out = {}
    for i in range(b + 1):
        c = Fraction(comb(b, i) * alpha ** (b - i))
        out[i] = lam(b - i) * c if b - i else Scalar.from_fraction(c)
    return out


def _accumulate_mono_product(out, m1, m2, coeff):
    a1, b1, k1, c1 = m1
    a2, b2, k2, c2 = m2
    if (c1 * a2) % 2:
        coeff = -coeff
    qexp = k1 * a2 - c1 * k2
    if qexp:
        coeff = coeff * qh(2 * qexp)
    p1 = _z_shift_poly(b1, 2 * a2)
    p2 = _z_shift_poly(b2, -2 * c1)
    for i, s1 in p1.items():
        for j, s2 in p2.items():
            mono = (a1 + a2, i + j, k1 + k2, c1 + c2)
            add = coeff * s1 * s2
            prev = out.get(mono)
            out[mono] = add if prev is None else prev + add


# generators
def a_x():
    return AElement.monomial(a=1)


def a_y():
    return AElement.monomial(c=1)


def a_z():
    return AElement.monomial(b=1)


def a_k(m=1):
    return AElement.monomial(m=m)


def a_mul(a, b):
    return a * b


# ---------------------------------------------------------------------------
# Dual basis.


def dual_basis(n, r, s):
    """e^{nrs} = x^n/{n}! (z+(n-s)L)^r/r! y^s/<s>!, fully expanded."""
    if min(n, r, s) < 0:
        raise ValueError("negative index")
    norm = (
        bracket("kbr_fact", n) * bracket("bra_fact", s) * Fraction(factorial(r))
    ).inv()
    zpoly = _z_shift_poly(r, n - s)
    return AElement({(n, i, 0, s): c * norm for i, c in zpoly.items()})


def to_dual_basis(el):
    """Exact expansion over e^{nrs}; rejects k-carrying elements."""
    for mono in el.terms:
        if mono[2] != 0:
            raise ValueError("element has k-powers and lies outside the dual span")
    out = {}
    work = dict(el.terms)
    while work:
        # strip leading z-powers first: e^{nbs} = x^n z^b y^s / norm + lower b
        mono = max(work, key=lambda m: m[1])
        n, b, _k, s = mono
        c = work[mono]
        coeff = c * bracket("kbr_fact", n) * bracket("bra_fact", s) * Fraction(
            factorial(b)
        )
        out[(n, b, s)] = coeff
        for m2, c2 in dual_basis(n, b, s).terms.items():
            prev = work.get(m2)
            snew = (prev if prev is not None else Scalar.zero()) - coeff * c2
            if snew.is_zero():
                work.pop(m2, None)
            else:
                work[m2] = snew
    return out


# ---------------------------------------------------------------------------
# Graded tensor square with per-leg truncation.


class ATensor:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms or {}

    @staticmethod
    def one():
        return ATensor({(A_ONE_MONO, A_ONE_MONO): ONE})

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return ATensor(out)

    def __neg__(self):
        return ATensor({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if isinstance(c, (int, Fraction)):
            c = Scalar.from_fraction(c)
        if c.is_zero():
            return ATensor({})
        return ATensor({k: cc * c for k, cc in self.terms.items()})

    def mul_trunc(self, other, n_max):
        out = {}
        for (x1, x2), c1 in self.terms.items():
            for (y1, y2), c2 in other.terms.items():
                if (
                    amono_bidegree(x1) + amono_bidegree(y1) > n_max
                    or amono_bidegree(x2) + amono_bidegree(y2) > n_max
                ):
                    continue
                coeff = c1 * c2
                if (amono_parity(x2) * amono_parity(y1)) % 2:
                    coeff = -coeff
                left = {}
                _accumulate_mono_product(left, x1, y1, ONE)
                right = {}
                _accumulate_mono_product(right, x2, y2, ONE)
                for lm, lc in left.items():
                    for rm, rc in right.items():
                        key = (lm, rm)
                        add = coeff * lc * rc
                        prev = out.get(key)
                        s = add if prev is None else prev + add
                        if s.is_zero():
                            out.pop(key, None)
                        else:
                            out[key] = s
        return ATensor(out)

    def __eq__(self, other):
        return isinstance(other, ATensor) and (self - other).terms == {}

    def __hash__(self):
        raise TypeError("ATensor is not hashable")

    def is_zero(self):
        return not self.terms


def _tensor_of(left, right):
    """left (x) right for plain AElements (no sign; used to seed series)."""
    out = {}
    for m1, c1 in left.terms.items():
        for m2, c2 in right.terms.items():
            out[(m1, m2)] = c1 * c2
    return ATensor(out)


def _u_coef():
    return (ONE + qh(-2)) / (qh(2) - qh(-2))


def _v_coef():
    return (qh(1) + qh(-1)) / (qh(2) - qh(-2))


def _w_coef():
    return (qh(2) + ONE) / (qh(2) - qh(-2))


def _sigma_tilde(m):
    """(-1)^(m(m+1)/2) v^(m-1) / <m>; the L-free seed of the k-exponentials."""
    s = _v_coef() ** (m - 1) / bracket("bra", m)
    if (m * (m + 1) // 2) % 2:
        s = -s
    return s


_delta_gen_cache = {}


def _delta_generator(gen, n_max):
    """Truncated coproducts of x, z, y per the resummed series."""
    key = (gen, n_max)
    out = _delta_gen_cache.get(key)
    if out is not None:
        return out
    terms = {}
    if gen == "x":
        terms[((1, 0, 0, 0), A_ONE_MONO)] = ONE
        u = _u_coef()
        for m in range(0, n_max):
            if m + 1 > n_max:
                break
            c = u**m
            if (m * (m - 1) // 2) % 2:
                c = -c
            terms[((0, 0, 1, m), (m + 1, 0, 0, 0))] = c
    elif gen == "y":
        terms[(A_ONE_MONO, (0, 0, 0, 1))] = ONE
        w = _w_coef()
        # sign exponent m(m+1)/2, not m(m-1)/2: forced by the sigma-factored
        # series and by {Delta(x), Delta(y)} = 0 at bidegree (2,2)
        for m in range(0, n_max):
            c = w**m
            if (m * (m + 1) // 2) % 2:
                c = -c
            terms[((0, 0, 0, m + 1), (m, 0, 1, 0))] = c
    elif gen == "z":
        terms[((0, 1, 0, 0), A_ONE_MONO)] = ONE
        terms[(A_ONE_MONO, (0, 1, 0, 0))] = ONE
        pref = lam() * 4 / (qh(2) - qh(-2))
        for m in range(1, n_max + 1):
            terms[((0, 0, 0, m), (m, 0, 0, 0))] = pref * _sigma_tilde(m)
    else:
        raise ValueError(gen)
    out = ATensor(terms)
    _delta_gen_cache[key] = out
    return out


_delta_k_cache = {}


def _delta_k(j, n_max):
    """Delta(k^j) = (k^j (x) 1) prod_m exp(sigma~_m [jm]/m y^m (x) x^m) (1 (x) k^j)."""
    key = (j, n_max)
    out = _delta_k_cache.get(key)
    if out is not None:
        return out
    out = ATensor({((0, 0, j, 0), A_ONE_MONO): ONE})
    for m in range(1, n_max + 1):
        d = _sigma_tilde(m) * bracket("qnum", j * m) / Fraction(m)
        if d.is_zero():
            continue
        block = _tensor_of(AElement.monomial(c=m), AElement.monomial(a=m))
        factor = ATensor.one()
        powers = ATensor.one()
        t = 1
        dp = ONE
        while m * t <= n_max:
            powers = powers.mul_trunc(block, n_max)
            dp = dp * d / Fraction(t)
            factor = factor + powers.scale(dp)
            t += 1
        out = out.mul_trunc(factor, n_max)
    out = out.mul_trunc(ATensor({(A_ONE_MONO, (0, 0, j, 0)): ONE}), n_max)
    _delta_k_cache[key] = out
    return out


_delta_pow_cache = {}


def _delta_gen_power(gen, n, n_max):
    key = (gen, n, n_max)
    out = _delta_pow_cache.get(key)
    if out is not None:
        return out
    if n == 0:
        out = ATensor.one()
    else:
        out = _delta_gen_power(gen, n - 1, n_max).mul_trunc(
            _delta_generator(gen, n_max), n_max
        )
    _delta_pow_cache[key] = out
    return out


def a_coproduct_trunc(el, n_max):
    """Delta as a graded algebra map, truncated to bidegree n_max per leg."""
    out = ATensor({})
    for (a, b, m, c), coeff in el.terms.items():
        dm = _delta_gen_power("x", a, n_max)
        dm = dm.mul_trunc(_delta_gen_power("z", b, n_max), n_max)
        if m:
            dm = dm.mul_trunc(_delta_k(m, n_max), n_max)
        dm = dm.mul_trunc(_delta_gen_power("y", c, n_max), n_max)
        out = out + dm.scale(coeff)
    return out


def a_counit(el):
    out = Scalar.zero()
    for (a, b, _m, c), coeff in el.terms.items():
        if a == 0 and b == 0 and c == 0:
            out = out + coeff
    return out


_antipode_gen_cache = {}


def _antipode_generator(gen, n_max):
    key = (gen, n_max)
    out = _antipode_gen_cache.get(key)
    if out is not None:
        return out
    acc = AElement.zero()
    # each series carries the opposite triangular sign from its coproduct:
    # solving mul(S (x) id)Delta = eta.counit order by order forces these
    if gen == "x":
        u = _u_coef()
        for m in range(0, n_max):
            if 2 * m + 1 > n_max:
                break
            c = -qh(-2) * u**m
            if (m * (m + 1) // 2) % 2:
                c = -c
            acc = acc + AElement.monomial(a=m + 1, m=-(m + 1), c=m, coeff=c)
    elif gen == "y":
        w = _w_coef()
        for m in range(0, n_max):
            if 2 * m + 1 > n_max:
                break
            c = -qh(2) * w**m
            if (m * (m - 1) // 2) % 2:
                c = -c
            acc = acc + AElement.monomial(a=m, m=-(m + 1), c=m + 1, coeff=c)
    elif gen == "z":
        acc = AElement.monomial(b=1, coeff=-ONE)
        pref = lam() * 4 / (qh(2) - qh(-2))
        for m in range(1, n_max // 2 + 1):
            c = pref * _sigma_tilde(m)
            if m % 2:
                c = -c
            acc = acc + AElement.monomial(a=m, m=-m, c=m, coeff=c)
    else:
        raise ValueError(gen)
    _antipode_gen_cache[key] = acc
    return acc


_antipode_k_cache = {}


def _antipode_k(j, n_max):
    """S(k^j) = k^(-j) prod_m exp(sigma~_m (q^(2jm)-1)/(m(q-1/q)) x^m k^(-m) y^m)."""
    key = (j, n_max)
    out = _antipode_k_cache.get(key)
    if out is not None:
        return out
    out = AElement.monomial(m=-j)
    for m in range(1, n_max // 2 + 1):
        t = _sigma_tilde(m) * (qh(4 * j * m) - ONE) / ((qh(2) - qh(-2)) * Fraction(m))
        if m % 2:
            t = -t
        if t.is_zero():
            continue
        block = AElement.monomial(a=m, m=-m, c=m)
        factor = AElement.one()
        powers = AElement.one()
        tt = 1
        tp = ONE
        while 2 * m * tt <= n_max:
            powers = (powers * block).truncate(n_max)
            tp = tp * t / Fraction(tt)
            factor = factor + powers.scale(tp)
            tt += 1
        out = (out * factor).truncate(n_max)
    _antipode_k_cache[key] = out
    return out


def a_antipode_trunc(el, n_max):
    """Graded anti-automorphism, truncated to bidegree n_max."""
    out = AElement.zero()
    for (a, b, m, c), coeff in el.terms.items():
        n_odd = a + c
        if ((n_odd * (n_odd - 1) // 2) % 2) == 1:
            coeff = -coeff
        word = AElement.one()
        for _ in range(c):
            word = (word * _antipode_generator("y", n_max)).truncate(n_max)
        if m:
            word = (word * _antipode_k(m, n_max)).truncate(n_max)
        for _ in range(b):
            word = (word * _antipode_generator("z", n_max)).truncate(n_max)
        for _ in range(a):
            word = (word * _antipode_generator("x", n_max)).truncate(n_max)
        out = out + word.scale(coeff)
    return out


def a_counit_antipode_trunc(el, n_max):
    return a_counit(el), a_antipode_trunc(el, n_max)


def tensor3_from_left_a(at, n_max):
    out = {}
    for (m1, m2), c in at.terms.items():
        for (n1, n2), c2 in a_coproduct_trunc(AElement({m1: ONE}), n_max).terms.items():
            key = (n1, n2, m2)
            add = c * c2
            s = out.get(key)
            s = add if s is None else s + add
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return out


def tensor3_from_right_a(at, n_max):
    out = {}
    for (m1, m2), c in at.terms.items():
        for (n1, n2), c2 in a_coproduct_trunc(AElement({m2: ONE}), n_max).terms.items():
            key = (m1, n1, n2)
            add = c * c2
            s = out.get(key)
            s = add if s is None else s + add
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return out


def amono_to_json(mono):
    a, b, m, c = mono
    return {"x": a, "z": b, "k": m, "y": c}
