import json
import random

import pytest

from tambara.burnside import (
    BurnsideElement,
    GhostVector,
    NotInGhostImage,
    element_from_json,
    element_to_json,
    from_t,
    from_vector,
    ghost,
    ghost_from_json,
    ghost_to_json,
    to_vector,
    unghost,
)
from tambara.gsets import fixed_points, realize
from tambara.lattice import divisors


def B(level, coeffs):
    return BurnsideElement(level, coeffs)


def random_element(rng, level, bound=10, density=0.7):
    coeffs = {
        k: rng.randint(-bound, bound)
        for k in divisors(level)
        if rng.random() < density
    }
    return BurnsideElement(level, coeffs)


# --- construction and ring structure ---------------------------------------


def test_from_t_examples():
    assert from_t(6, 3) == B(6, {2: 1})  # C_6/C_2 has 3 points
    assert from_t(6, 1) == BurnsideElement.unit(6)
    assert from_t(12, 12) == B(12, {1: 1})  # free orbit


def test_from_t_rejects_nondivisor_order():
    with pytest.raises(ValueError):
        from_t(6, 4)


def test_canonical_sparse_form():
    assert B(6, {2: 0, 3: 1}).coeffs == {3: 1}
    assert B(6, {}) == BurnsideElement.zero(6)
    with pytest.raises(ValueError):
        B(6, {4: 1})  # 4 does not divide 6


def test_add_neg_examples():
    x = B(6, {2: 1})
    assert x + x == B(6, {2: 2})
    assert x + (-x) == BurnsideElement.zero(6)
    assert not (x - x)
    free = B(6, {1: 1})
    assert (free - B(6, {3: 1})) + B(6, {3: 1}) == free


def test_add_rejects_level_mismatch():
    with pytest.raises(ValueError):
        B(6, {2: 1}) + B(12, {2: 1})


def test_mul_t_rule_examples():
    # t_2 * t_3 = t_6 at level 6: C_6/C_3 x C_6/C_2 = C_6/e
    assert from_t(6, 2) * from_t(6, 3) == from_t(6, 6)
    x = B(6, {1: 2, 3: -1})
    assert x * BurnsideElement.unit(6) == x
    # C_2/e x C_2/e = 2 C_2/e
    assert B(2, {1: 1}) * B(2, {1: 1}) == B(2, {1: 2})


def test_scalar_multiplication():
    x = B(6, {2: 1})
    assert 3 * x == B(6, {2: 3}) == x * 3
    assert 0 * x == BurnsideElement.zero(6)


def test_t_rule_gcd_lcm_generic():
    # t_a * t_b = gcd(a,b) t_lcm(a,b) for every pair of orders at level 36
    from math import gcd

    level = 36
    for a in divisors(level):
        for b in divisors(level):
            lcm = a * b // gcd(a, b)
            assert from_t(level, a) * from_t(level, b) == gcd(a, b) * from_t(level, lcm)


# --- marks and the ghost embedding ------------------------------------------


def test_mark_examples():
    x = B(6, {2: 1})  # C_6/C_2
    assert x.mark(2) == 3
    assert x.mark(3) == 0
    for i in divisors(12):
        assert BurnsideElement.unit(12).mark(i) == 1
    with pytest.raises(ValueError):
        x.mark(4)


def test_mark_mod_examples():
    assert B(2, {2: 2}).mark_mod(1, 2) == 0
    assert B(6, {2: 1}).mark_mod(2, 3) == 0
    x = B(6, {2: 1, 1: -2})
    for i in divisors(6):
        assert x.mark_mod(i, 0) == x.mark(i)
    with pytest.raises(ValueError):
        x.mark_mod(1, 6)


def test_ghost_example_against_oracle():
    # ghost(C_6/C_2) = (3, 3, 0, 0): fixed points of the 3-element C_6-set
    x = B(6, {2: 1})
    v = ghost(x)
    assert v.as_tuple() == (3, 3, 0, 0)
    s = realize(x)
    for i in divisors(6):
        assert v.values[i] == fixed_points(s, i)


def test_ghost_of_unit_is_all_ones():
    for h in (1, 2, 6, 12):
        assert ghost(BurnsideElement.unit(h)).as_tuple() == tuple(
            1 for _ in divisors(h)
        )


def test_ghost_virtual_element_by_linearity():
    # 2 C_2/C_2 - C_2/e: marks by oracle counting on each realizable part
    pos, neg = B(2, {2: 2}), B(2, {1: 1})
    expected = tuple(
        fixed_points(realize(pos), i) - fixed_points(realize(neg), i)
        for i in divisors(2)
    )
    assert ghost(pos - neg).as_tuple() == expected == (0, 2)


def test_mark_agrees_with_fixed_point_oracle_on_transitives():
    for h in range(1, 13):
        for k in divisors(h):
            x = BurnsideElement.transitive(h, k)
            s = realize(x)
            for i in divisors(h):
                assert x.mark(i) == fixed_points(s, i)


def test_unghost_examples():
    assert unghost(GhostVector(6, {1: 3, 2: 3, 3: 0, 6: 0})) == B(6, {2: 1})
    for h in (1, 4, 12):
        ones = GhostVector(h, {i: 1 for i in divisors(h)})
        assert unghost(ones) == BurnsideElement.unit(h)


def test_unghost_integrality_failure():
    with pytest.raises(NotInGhostImage) as err:
        unghost(GhostVector(2, {1: 1, 2: 0}))
    assert err.value.divisor == 1


def test_ghost_vector_validates_keys():
    with pytest.raises(ValueError):
        GhostVector(6, {1: 1, 2: 1})


def test_ghost_is_ring_homomorphism_fuzz():
    rng = random.Random(20260809)
    for _ in range(300):
        n = rng.randint(1, 30)
        h = rng.choice(divisors(n))
        x = random_element(rng, h)
        y = random_element(rng, h)
        gx, gy = ghost(x), ghost(y)
        assert ghost(x + y) == gx.pointwise_add(gy)
        assert ghost(x * y) == gx.pointwise_mul(gy)
        assert unghost(ghost(x)) == x


def test_mul_equals_unghost_of_pointwise_product():
    rng = random.Random(7)
    for _ in range(200):
        h = rng.choice(divisors(rng.randint(1, 30)))
        x = random_element(rng, h, bound=5)
        y = random_element(rng, h, bound=5)
        assert x * y == unghost(ghost(x).pointwise_mul(ghost(y)))


def test_ghost_of_unghost_when_defined():
    rng = random.Random(99)
    hits = 0
    for _ in range(400):
        h = rng.choice(divisors(rng.randint(1, 24)))
        v = GhostVector(h, {i: rng.randint(-12, 12) for i in divisors(h)})
        try:
            x = unghost(v)
        except NotInGhostImage:
            continue
        hits += 1
        assert ghost(x) == v
    assert hits > 0


# --- vectors and JSON --------------------------------------------------------


def test_vector_roundtrip():
    x = B(12, {1: -2, 6: 5})
    assert from_vector(12, to_vector(x)) == x
    assert to_vector(x) == [-2, 0, 0, 0, 5, 0]
    with pytest.raises(ValueError):
        from_vector(12, [1, 2])


def test_element_json_roundtrip():
    x = B(12, {12: 2, 3: -1})
    doc = element_to_json(x)
    assert doc == {"level": 12, "coeffs": {"3": -1, "12": 2}}
    assert element_from_json(json.loads(json.dumps(doc))) == x
    with pytest.raises(ValueError):
        element_from_json({"coeffs": {}})


def test_ghost_json_roundtrip():
    v = ghost(B(6, {2: 1}))
    doc = ghost_to_json(v)
    assert doc == {"level": 6, "marks": {"1": 3, "2": 3, "3": 0, "6": 0}}
    assert ghost_from_json(json.loads(json.dumps(doc))) == v


def test_str_and_repr_are_stable():
    x = B(6, {2: 1, 6: -3})
    assert str(x) == "-3*C6/C6 + C6/C2"
    assert str(BurnsideElement.zero(3)) == "0"
    assert "level=6" in repr(x)
