"""Cyclotomic integers, quaternions and group rings."""

import cmath
import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grouporth.cyclotomic import CyclotomicInt, cyclo_zero_test, cyclotomic_polynomial, poly_divmod
from grouporth.groupring import GroupRingVector, ring_convolve
from grouporth.groups import GroupError, make_group
from grouporth.quaternion import ONE, I, J, K, Quaternion, quat_mul

# -- cyclotomic --------------------------------------------------------------

KNOWN_PHI = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    6: (1, -1, 1),
    12: (1, 0, -1, 0, 1),
}


@pytest.mark.parametrize("q,phi", sorted(KNOWN_PHI.items()))
def test_cyclotomic_polynomial_known(q, phi):
    assert cyclotomic_polynomial(q) == phi


def test_cyclotomic_degree_is_totient():
    from math import gcd

    for q in range(1, 40):
        assert len(cyclotomic_polynomial(q)) - 1 == sum(gcd(k, q) == 1 for k in range(1, q + 1))


def test_poly_divmod_needs_monic():
    with pytest.raises(ValueError):
        poly_divmod([1, 2, 3], [1, 2])


@pytest.mark.parametrize(
    "q,coeffs,zero",
    [(3, (1, 1, 1), True), (6, (1, 0, 0, 1, 0, 0), True), (6, (2, 0, 0, 1, 0, 0), False), (4, (1, 0, 1, 0), True)],
)
def test_zero_examples(q, coeffs, zero):
    assert cyclo_zero_test(CyclotomicInt(q, coeffs)) is zero


def _float_value(x: CyclotomicInt) -> complex:
    return sum(c * cmath.exp(2j * cmath.pi * k / x.q) for k, c in enumerate(x.coeffs))


def test_zero_test_matches_floats_10k():
    rng = random.Random(20240611)
    disagreements = 0
    for t in range(10_000):
        q = (2, 3, 4, 5, 6, 12)[t % 6]
        if t % 3 == 0:
            # bias towards zeros: random multiples of Phi_q padded to length q
            phi = cyclotomic_polynomial(q)
            mult = [rng.randint(-3, 3) for _ in range(q - len(phi) + 1)]
            coeffs = [0] * q
            for i, a in enumerate(mult):
                for j, b in enumerate(phi):
                    coeffs[i + j] += a * b
            coeffs = [max(-10, min(10, c)) for c in coeffs]
        else:
            coeffs = [rng.randint(-10, 10) for _ in range(q)]
        x = CyclotomicInt(q, tuple(coeffs))
        disagreements += cyclo_zero_test(x) != (abs(_float_value(x)) < 1e-9)
    assert disagreements == 0


cyc = st.sampled_from([2, 3, 4, 6, 12]).flatmap(
    lambda q: st.tuples(*[st.lists(st.integers(-5, 5), min_size=q, max_size=q) for _ in range(2)]).map(
        lambda ab: (CyclotomicInt(q, tuple(ab[0])), CyclotomicInt(q, tuple(ab[1])))
    )
)


@given(cyc)
def test_cyclotomic_ring_ops_match_complex(pair):
    x, y = pair
    assert abs(complex(x * y) - complex(x) * complex(y)) < 1e-6
    assert abs(complex(x + y) - (complex(x) + complex(y))) < 1e-9
    assert abs(complex(x.conj()) - complex(x).conjugate()) < 1e-9
    assert (x - x).is_zero()


def test_as_integer():
    assert CyclotomicInt(3, (0, 1, 1)).as_integer() == -1
    assert CyclotomicInt(6, (0, 1, 0, 0, 0, 0)).as_integer() is None


# -- quaternions ---------------------------------------------------------------


def test_quaternion_table():
    assert I * J == K and J * K == I and K * I == J
    assert I * I == J * J == K * K == I * J * K == -ONE
    assert quat_mul(I, J) == K


def test_conjugation_examples():
    assert I.conj() == Quaternion(0, -1)
    assert quat_mul(ONE, I, conjugate_y=True) + quat_mul(K, J, conjugate_y=True) == Quaternion(0)


quats = st.builds(Quaternion, *[st.integers(-20, 20)] * 4)


@given(quats, quats)
@settings(max_examples=1000)
def test_conj_antihomomorphism(x, y):
    assert (x * y).conj() == y.conj() * x.conj()


@given(quats, quats, quats)
def test_quaternion_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(quats)
def test_norm_multiplicative_with_conj(x):
    assert x * x.conj() == Quaternion(x.norm2())


def test_coerce():
    assert Quaternion.coerce(2 + 3j) == Quaternion(2, 3)
    assert Quaternion.coerce(Fraction(1, 2)).a == Fraction(1, 2)


# -- group rings ----------------------------------------------------------------------

GROUPS = ["z2", "z3", "z5", "klein", "s3-a2b3", "s3-a3b2", "q8", "z13", "roots6"]


def vec(G):
    return st.lists(st.integers(0, 5), min_size=G.order, max_size=G.order).map(lambda c: GroupRingVector(G, tuple(c)))


@given(st.sampled_from(GROUPS).flatmap(lambda n: st.tuples(*[vec(make_group(n))] * 3)))
@settings(max_examples=150)
def test_convolution_associative(triple):
    x, y, z = triple
    assert (x * y) * z == x * (y * z)


@given(st.sampled_from(GROUPS).flatmap(lambda n: vec(make_group(n))))
def test_delta_identity_is_unit(x):
    e = GroupRingVector.delta(x.group, 0)
    assert e * x == x == x * e


@pytest.mark.parametrize("name", GROUPS)
def test_delta_product(name):
    G = make_group(name)
    for g, h in itertools.product(range(G.order), repeat=2):
        assert GroupRingVector.delta(G, g) * GroupRingVector.delta(G, h) == GroupRingVector.delta(G, G.mul(g, h))


def test_autocorrelation_z2_shift_zero():
    G = make_group("z2")
    x = GroupRingVector.from_elements(G, ["0", "1"])
    total = GroupRingVector.zero(G)
    for g in (0, 1):
        total = total + ring_convolve(GroupRingVector.delta(G, g), GroupRingVector.delta(G, g), invert_y=True)
    assert total == 2 * GroupRingVector.delta(G, 0)
    assert x.total() == 2


def test_cubic_residue_square_with_brute_force():
    Z13 = make_group("z13")
    C0, C1, C2 = [1, 5, 8, 12], [2, 3, 10, 11], [4, 6, 7, 9]
    ind = lambda C: GroupRingVector.from_elements(Z13, C)  # noqa: E731
    got = ring_convolve(ind(C0), ind(C0))
    expected = ind(C1) + 2 * ind(C2) + 4 * GroupRingVector.delta(Z13, 0)
    assert got == expected
    brute = [0] * 13
    for a, b in itertools.product(C0, C0):
        brute[(a + b) % 13] += 1
    assert tuple(brute) == got.counts


def test_mixed_groups_rejected():
    with pytest.raises(GroupError):
        ring_convolve(GroupRingVector.zero(make_group("z3")), GroupRingVector.zero(make_group("roots3")))


def test_str_and_uniform():
    G = make_group("klein")
    x = GroupRingVector(G, (2, 2, 2, 2))
    assert x.is_uniform()
    assert str(x) == "2e + 2a + 2b + 2ab"
    assert str(GroupRingVector.zero(G)) == "0"
