"""U-algebra: normal ordering, Hopf maps, closed-form coproduct expansion."""

import itertools
import random

from ospq.scalar import ONE, Scalar, qh
from ospq.ualg import (
    UElement,
    UTensor,
    e_basis_coeff,
    expand_Delta_E,
    tensor3_from_left,
    tensor3_from_right,
    u_E,
    u_H,
    u_Vm,
    u_Vp,
    u_antipode,
    u_coproduct,
    u_counit,
    u_g,
    umono_parity,
)


def test_anticommutator_rule():
    lhs = u_Vm() * u_Vp()
    denom = qh(2) - qh(-2)
    expected = (
        UElement.monomial(a=1, d=1, coeff=-ONE)
        + UElement.monomial(m=2, coeff=-(ONE / denom))
        + UElement.monomial(m=-2, coeff=ONE / denom)
    )
    assert lhs == expected


def test_h_vplus_rule():
    from fractions import Fraction

    lhs = u_H() * u_Vp()
    expected = UElement.monomial(a=1, b=1) + UElement.monomial(
        a=1, coeff=Scalar.from_fraction(Fraction(1, 2))
    )
    assert lhs == expected


def test_vplus_squared_trivial():
    assert u_Vp() * u_Vp() == UElement.monomial(a=2)


def test_g_conjugation():
    # g V+ = q^(1/2) V+ g; V- g = q^(1/2) g V-
    assert u_g() * u_Vp() == UElement.monomial(a=1, m=1, coeff=qh(1))
    assert u_Vm() * u_g() == UElement.monomial(d=1, m=1, coeff=qh(1))
    assert u_g(1) * u_g(-1) == UElement.one()


def test_anticommutator_closes():
    # {V+, V-} = -(g^2 - g^(-2))/(q - q^(-1)) exactly
    acomm = u_Vp() * u_Vm() + u_Vm() * u_Vp()
    denom = qh(2) - qh(-2)
    expected = UElement.monomial(m=2, coeff=-(ONE / denom)) + UElement.monomial(
        m=-2, coeff=ONE / denom
    )
    assert acomm == expected


def _random_monos(count, bound, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        out.append(
            (
                rng.randint(0, bound),
                rng.randint(0, bound),
                rng.randint(-bound, bound),
                rng.randint(0, bound),
            )
        )
    return out


def test_associativity_on_monomials():
    monos = _random_monos(12, 2, seed=7)
    for m1, m2, m3 in zip(monos, monos[4:], monos[8:]):
        x, y, z = (UElement({m: ONE}) for m in (m1, m2, m3))
        assert (x * y) * z == x * (y * z)


def test_parity_additive():
    monos = _random_monos(10, 2, seed=3)
    for m1, m2 in zip(monos, monos[5:]):
        prod = UElement({m1: ONE}) * UElement({m2: ONE})
        want = (umono_parity(m1) + umono_parity(m2)) % 2
        for mono in prod.terms:
            assert umono_parity(mono) == want


def test_coproduct_generators():
    assert u_coproduct(u_H()) == UTensor(
        {((0, 1, 0, 0), (0, 0, 0, 0)): ONE, ((0, 0, 0, 0), (0, 1, 0, 0)): ONE}
    )
    assert u_coproduct(u_Vp()) == UTensor(
        {((1, 0, 0, 0), (0, 0, -1, 0)): ONE, ((0, 0, 1, 0), (1, 0, 0, 0)): ONE}
    )
    assert u_coproduct(UElement.one()) == UTensor.one()


def test_coproduct_is_algebra_map():
    # exhaustive on low degree, randomized above it
    small = [
        (a, b, m, d)
        for a, b, m, d in itertools.product((0, 1), (0, 1), (-1, 0, 1), (0, 1))
        if a + b + abs(m) + d <= 2
    ]
    pairs = list(itertools.product(small, small))
    rng = random.Random(11)
    big = _random_monos(6, 2, seed=5)
    pairs += [(m1, m2) for m1 in big[:3] for m2 in big[3:]]
    for m1, m2 in rng.sample(pairs, min(len(pairs), 120)):
        x, y = UElement({m1: ONE}), UElement({m2: ONE})
        assert u_coproduct(x * y) == u_coproduct(x) * u_coproduct(y)


def test_coassociativity():
    elements = [u_H(), u_Vp(), u_Vm(), u_g()]
    elements += [
        u_E(k, l, m)
        for k, l, m in itertools.product(range(3), repeat=3)
        if k + l + m <= 3
    ]
    for el in elements:
        d = u_coproduct(el)
        assert tensor3_from_left(d) == tensor3_from_right(d)


def test_counit():
    assert u_counit(UElement.one()) == ONE
    assert u_counit(u_H()).is_zero()
    assert u_counit(u_Vp()).is_zero()
    assert u_counit(u_g(3)) == ONE
    # counit axiom (eps (x) id) Delta = id on a nontrivial element
    el = u_E(1, 1, 1) + u_g(2)
    d = u_coproduct(el)
    left = UElement.zero()
    for (m1, m2), c in d.terms.items():
        left = left + UElement({m2: c * u_counit(UElement({m1: ONE}))})
    assert left == el


def test_antipode_on_generators():
    assert u_antipode(u_H()) == UElement.monomial(b=1, coeff=-ONE)
    assert u_antipode(u_Vp()) == UElement.monomial(a=1, coeff=-qh(-1))
    assert u_antipode(u_Vm()) == UElement.monomial(d=1, coeff=-qh(1))
    assert u_antipode(u_g()) == u_g(-1)


def test_antipode_axiom():
    # mu (S (x) id) Delta = eta eps on generators and a few monomials
    for el in [u_H(), u_Vp(), u_Vm(), u_g(), u_E(1, 0, 1), u_E(2, 1, 0)]:
        d = u_coproduct(el)
        acc = UElement.zero()
        for (m1, m2), c in d.terms.items():
            acc = acc + (u_antipode(UElement({m1: ONE})) * UElement({m2: ONE})).scale(c)
        expected = UElement.one().scale(u_counit(el))
        assert acc == expected


def test_antipode_is_graded_antihomomorphism():
    monos = _random_monos(8, 2, seed=13)
    for m1, m2 in zip(monos, monos[4:]):
        x, y = UElement({m1: ONE}), UElement({m2: ONE})
        sign = -1 if umono_parity(m1) * umono_parity(m2) % 2 else 1
        lhs = u_antipode(x * y)
        rhs = (u_antipode(y) * u_antipode(x)).scale(sign)
        assert lhs == rhs


def test_expand_delta_matches_generic():
    for k, l, m in itertools.product(range(5), repeat=3):
        if k + l + m > 4:
            continue
        assert expand_Delta_E(k, l, m) == u_coproduct(u_E(k, l, m))


def test_e_basis_coeff_examples():
    from fractions import Fraction

    assert e_basis_coeff(u_E(1, 0, 0) * u_E(0, 1, 0), (1, 1, 0)) == ONE
    assert e_basis_coeff(u_E(0, 1, 0) * u_E(1, 0, 0), (1, 0, 0)) == Scalar.from_fraction(
        Fraction(1, 2)
    )
    assert e_basis_coeff(UElement.one() * UElement.one(), (0, 0, 0)) == ONE


def test_e_basis_coeff_g_expansion():
    from ospq.scalar import lam

    # g^3 contributes (3 L)^r / r! at H-degree r
    el = u_g(3)
    assert e_basis_coeff(el, (0, 0, 0)) == ONE
    assert e_basis_coeff(el, (0, 1, 0)) == lam() * 3
    from fractions import Fraction

    assert e_basis_coeff(el, (0, 2, 0)) == lam(2) * Fraction(9, 2)
