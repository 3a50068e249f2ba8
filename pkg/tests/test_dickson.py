"""Bracket and invariant identities, checked pointwise."""

import itertools
import random

import pytest

from fpt import dickson, fmp, gf
from fpt.dickson import (
    bracket,
    bracket_F,
    invariant_I0,
    invariant_I1,
    nu,
    nu_code,
    verify_appendix_recursion,
)
from fpt.errors import DependentPair, Fp2OrbitDenominator


def rand_elems(field, rng, count):
    for _ in range(count):
        yield field.from_code(rng.randrange(field.q))


def test_bracket_alternating_and_antisymmetric():
    rng = random.Random(1)
    F = gf.make_field(3, 4)
    for x, y in zip(rand_elems(F, rng, 50), rand_elems(F, rng, 50)):
        assert bracket(0, 1, x, x).is_zero()
        assert bracket(0, 1, x, y) == -bracket(1, 0, x, y)
        assert bracket(2, 3, x, y) == -bracket(3, 2, x, y)


def test_bracket_p_power_shift():
    rng = random.Random(2)
    for (p, m) in [(2, 6), (3, 4), (5, 3)]:
        F = gf.make_field(p, m)
        for x, y in zip(rand_elems(F, rng, 30), rand_elems(F, rng, 30)):
            for (i, j) in ((0, 1), (0, 2), (1, 3)):
                assert bracket(i, j, x, y) ** p == bracket(i + 1, j + 1, x, y)


def test_bracket_cocycle_normalized_second_argument():
    # the telescoping sum [i,l] = [i,j] + [j,k] + [k,l] holds whenever the
    # second argument lies in the prime field (the pencil-normalized form)
    rng = random.Random(3)
    for (p, m) in [(2, 6), (3, 4)]:
        F = gf.make_field(p, m)
        for _ in range(120):
            x = F.from_code(rng.randrange(F.q))
            y = F.elem(rng.randrange(1, p))
            i = rng.randrange(2)
            j = i + 1 + rng.randrange(2)
            k = j + rng.randrange(2)
            l = k + 1 + rng.randrange(2)
            total = bracket(i, j, x, y) + bracket(j, k, x, y) + bracket(k, l, x, y)
            assert bracket(i, l, x, y) == total


def test_bracket_plucker_identity():
    rng = random.Random(4)
    for (p, m) in [(2, 5), (3, 4), (5, 3)]:
        F = gf.make_field(p, m)
        for x, y in zip(rand_elems(F, rng, 40), rand_elems(F, rng, 40)):
            idx = sorted(rng.sample(range(5), 4))
            i, j, k, l = idx
            lhs = (
                bracket(i, j, x, y) * bracket(k, l, x, y)
                - bracket(i, k, x, y) * bracket(j, l, x, y)
                + bracket(i, l, x, y) * bracket(j, k, x, y)
            )
            assert lhs.is_zero()


def test_bracket_prime_field_bilinearity():
    rng = random.Random(5)
    F = gf.make_field(3, 4)
    for _ in range(60):
        x = F.from_code(rng.randrange(F.q))
        x2 = F.from_code(rng.randrange(F.q))
        y = F.from_code(rng.randrange(F.q))
        c = rng.randrange(3)
        ce = F.elem(c)
        assert bracket(0, 2, x + x2, y) == bracket(0, 2, x, y) + bracket(0, 2, x2, y)
        assert bracket(0, 2, ce * x, y) == ce * bracket(0, 2, x, y)
        assert bracket(1, 2, x, ce * y) == ce * bracket(1, 2, x, y)


def test_bracket_divisibility_pointwise():
    # [0,j](x,y) = 0 forces [0,kj](x,y) = 0
    for (p, m) in [(2, 6), (3, 4)]:
        F = gf.make_field(p, m)
        for x in range(F.q):
            for y in (1, 2 % F.q):
                for j, k in ((1, 2), (1, 3), (2, 2)):
                    if j * k > m:
                        continue
                    if dickson.bracket_code(F, 0, j, x, y) == 0:
                        assert dickson.bracket_code(F, 0, j * k, x, y) == 0


def test_invariants_on_line():
    # I_1(x,1) = I_0(x,1) + 1, and I_0 never vanishes off the prime field
    for (p, m) in [(3, 2), (3, 4), (2, 6), (5, 2)]:
        F = gf.make_field(p, m)
        one = F.one()
        for x in gf.enumerate_elements(F):
            if gf.frobenius(x) == x:
                continue
            i0 = invariant_I0(x, one)
            assert not i0.is_zero()
            assert invariant_I1(x, one) == i0 + one


def test_invariants_reject_dependent_pairs():
    F = gf.make_field(3, 3)
    x = F.gen()
    with pytest.raises(DependentPair):
        invariant_I0(x, x + x)
    with pytest.raises(DependentPair):
        nu(F.elem(2), F.one())


def test_invariant_scaling_weights():
    rng = random.Random(6)
    for (p, m) in [(3, 4), (2, 6)]:
        F = gf.make_field(p, m)
        for _ in range(40):
            x = F.from_code(rng.randrange(F.q))
            y = F.from_code(rng.randrange(F.q))
            lam = F.from_code(rng.randrange(1, F.q))
            try:
                i0 = invariant_I0(x, y)
            except DependentPair:
                continue
            assert invariant_I0(lam * x, lam * y) == lam ** ((p + 1) * (p - 1)) * i0
            i1 = invariant_I1(x, y)
            assert invariant_I1(lam * x, lam * y) == lam ** (p * (p - 1)) * i1
            assert nu(lam * x, lam * y) == nu(x, y)


def test_invariant_frobenius_compatibility():
    rng = random.Random(7)
    F = gf.make_field(3, 4)
    for _ in range(40):
        x = F.from_code(rng.randrange(F.q))
        y = F.from_code(rng.randrange(F.q))
        try:
            i0 = invariant_I0(x, y)
        except DependentPair:
            continue
        fx, fy = gf.frobenius(x), gf.frobenius(y)
        assert invariant_I0(fx, fy) == i0**3
        assert invariant_I1(fx, fy) == invariant_I1(x, y) ** 3


def test_nu_zero_exactly_on_quadratic_subfield():
    F = gf.make_field(3, 4)
    one = F.one()
    for x in gf.enumerate_elements(F):
        if gf.frobenius(x) == x:
            continue
        val = nu(x, one)
        in_quadratic = gf.subfield_membership(x, 2)
        assert val.is_zero() == in_quadratic


def test_nu_is_minus_one_on_cubic_subfield():
    for p in (2, 3, 5):
        F = gf.make_field(p, 3)
        one = F.one()
        minus_one = -one
        for x in gf.enumerate_elements(F):
            if gf.frobenius(x) == x:
                continue
            assert nu(x, one) == minus_one


def test_nu_bracket_quotient_form():
    # -[0,2][1,3] / ([0,1][2,3]) agrees with -I_1^(p+1)/I_0^p everywhere
    rng = random.Random(8)
    for (p, m) in [(2, 6), (3, 4), (5, 3)]:
        F = gf.make_field(p, m)
        for _ in range(120):
            x, y = rng.randrange(F.q), rng.randrange(F.q)
            if dickson.bracket_code(F, 0, 1, x, y) == 0:
                continue
            num = F.mul_code(
                dickson.bracket_code(F, 0, 2, x, y), dickson.bracket_code(F, 1, 3, x, y)
            )
            den = F.mul_code(
                dickson.bracket_code(F, 0, 1, x, y), dickson.bracket_code(F, 2, 3, x, y)
            )
            assert nu_code(F, x, y) == F.neg_code(F.mul_code(num, F.inv_code(den)))


def test_nu_is_a_class_function_of_the_plane():
    # all (p^2-1)(p^2-p) ordered bases of every plane of F_81 share one nu
    from fpt.planes import enumerate_planes

    F = gf.make_field(3, 4)
    p = 3
    changes = [
        (a, b, c, d)
        for a, b, c, d in itertools.product(range(p), repeat=4)
        if (a * d - b * c) % p
    ]
    assert len(changes) == (p * p - 1) * (p * p - p)
    for pl in enumerate_planes(F):
        x, y = pl.u, pl.v
        base_val = nu_code(F, x, y)
        for a, b, c, d in changes:
            u = F.add_code(F.mul_code(a, x), F.mul_code(c, y))
            v = F.add_code(F.mul_code(b, x), F.mul_code(d, y))
            assert nu_code(F, u, v) == base_val


def test_bracket_F_base_cases():
    rng = random.Random(10)
    F = gf.make_field(3, 4)
    one = F.one()
    for _ in range(30):
        x = F.from_code(rng.randrange(F.q))
        if gf.frobenius(x) == x:
            continue
        assert bracket_F(1, x, one) == one
        assert bracket_F(2, x, one) == one
        assert bracket_F(3, x, one) == nu(x, one) + one


def test_bracket_F_even_rejects_quadratic_orbit():
    F = gf.make_field(3, 4)
    quad = next(
        x for x in gf.enumerate_elements(F)
        if gf.subfield_membership(x, 2) and gf.frobenius(x) != x
    )
    with pytest.raises(Fp2OrbitDenominator):
        bracket_F(4, quad, F.one())


def test_bracket_F_matches_family_polynomial():
    # F_m(x, 1) = family_m(nu(x,1)) for x outside the quadratic subfield
    F = gf.make_field(3, 5)  # odd degree: no quadratic subfield to dodge
    cache = {}
    fmp.build_recursive(5, 3, cache)
    one = F.one()
    for x in gf.enumerate_elements(F):
        if gf.frobenius(x) == x:
            continue
        nux = nu_code(F, x.code, 1)
        for m in range(2, 6):
            lhs = bracket_F(m, x, one).code
            rhs = fmp.eval_support_in_field(cache[m], F, nux)
            assert lhs == rhs


def test_verify_appendix_recursion_small_fields():
    r = verify_appendix_recursion(3, gf.make_field(3, 3))
    assert r.passed and r.points_checked == 24
    r = verify_appendix_recursion(4, gf.make_field(3, 4))
    assert r.passed and r.points_checked == 81 - 9
    r = verify_appendix_recursion(5, gf.make_field(3, 5))
    assert r.passed and r.points_checked == 3**5 - 3
    js = r.to_json()
    assert js["failures"] == [] and js["m"] == 5
