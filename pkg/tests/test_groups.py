import pytest
from hypothesis import given
from hypothesis import strategies as st

from grouporth.groups import (
    WILDCARD,
    ZERO,
    Group,
    GroupElement,
    GroupError,
    group_op,
    make_group,
    parse_element,
)

SMALL_GROUPS = (
    [f"z{n}" for n in range(1, 25)]
    + [f"roots{n}" for n in range(1, 25)]
    + ["z2xz2", "z2xz3", "z3xz3", "z2xz2xz2", "z2xz4", "z4xz4", "z2xz2xz3", "z2xz2xz2xz3"]
    + ["s3-a2b3", "s3-a3b2", "q8"]
)


@pytest.mark.parametrize("name", SMALL_GROUPS)
def test_axioms_full_table(name):
    G = make_group(name)
    assert G.order <= 24
    G.check_axioms()
    assert G.tokens[0] in ("0", "1", "e")


@pytest.mark.parametrize("name", SMALL_GROUPS)
def test_tokens_round_trip(name):
    G = make_group(name)
    assert len(set(G.tokens)) == G.order
    for g in range(G.order):
        assert G.parse(G.format(g)) == g


def test_make_group_examples():
    Z6 = make_group("cyclic:6")
    assert Z6.order == 6 and Z6.tokens[0] == "0"
    K = make_group("product:2,2")
    assert K.tokens == ("e", "a", "b", "ab")
    assert make_group("klein") == K
    Q = make_group("q8")
    assert Q.order == 8 and set(Q.tokens) == {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}
    assert make_group(kind="cyclic", n=6) == Z6


@pytest.mark.parametrize("bad", ["z0", "z-3", "roots0", "dihedral8", "s3-a4b2", ""])
def test_make_group_rejects(bad):
    with pytest.raises(GroupError):
        make_group(bad)


def test_group_op_examples():
    Z6 = make_group("z6")
    assert group_op(Z6.element("4"), Z6.element("5")).token == "3"
    K = make_group("klein")
    assert (K.element("a") * K.element("ab")).token == "b"
    S = make_group("s3-a2b3")
    assert (S.element("b") * S.element("a")).token == "ab2"
    assert S.element("ab").inverse().token == "ab"
    assert S.element("b").inverse().token == "b2"


def test_group_op_mixed_groups():
    with pytest.raises(GroupError):
        group_op(make_group("z6").element("1"), make_group("z3").element("1"))


def test_s3_presentations_differ_on_ab2():
    # a3b2 has b of order 2 so "ab2" collapses to a
    assert make_group("s3-a2b3").parse("ab2") != make_group("s3-a2b3").parse("a")
    assert make_group("s3-a3b2").parse("ab2") == make_group("s3-a3b2").parse("a")
    assert not make_group("s3-a3b2").is_abelian


def test_roots6_sign_notation():
    G = make_group("roots6")
    expected = {"1": 0, "-w^2": 1, "w": 2, "-1": 3, "w^2": 4, "-w": 5}
    for tok, k in expected.items():
        assert G.parse(tok) == k
        assert G.format(k) == tok


def test_roots6_against_complex_numbers():
    import cmath

    G = make_group("roots6")
    zeta = cmath.exp(2j * cmath.pi / 6)
    omega = cmath.exp(2j * cmath.pi / 3)
    values = {"1": 1, "-w^2": -omega**2, "w": omega, "-1": -1, "w^2": omega**2, "-w": -omega}
    for tok, val in values.items():
        assert abs(zeta ** G.parse(tok) - val) < 1e-12


def test_minus_sign_rejected_for_odd_roots():
    with pytest.raises(GroupError):
        make_group("roots3").parse("-w")
    assert make_group("roots3").parse("w^2") == 2


def test_parse_markers():
    G = make_group("z6")
    assert parse_element(".", G) == ZERO
    assert parse_element("*", G) == WILDCARD
    assert isinstance(parse_element("3", G), GroupElement)


@pytest.mark.parametrize("tok", ["q", "6", "-1", "1.5", "a"])
def test_cyclic_rejects_unknown(tok):
    with pytest.raises(GroupError):
        make_group("z6").parse(tok)


def test_identity_first():
    for name in SMALL_GROUPS:
        G = make_group(name)
        assert all(G.mul(0, g) == g == G.mul(g, 0) for g in range(G.order))


@given(st.sampled_from(SMALL_GROUPS), st.data())
def test_inverse_property(name, data):
    G = make_group(name)
    g = data.draw(st.integers(0, G.order - 1))
    assert G.mul(g, G.inv(g)) == 0 == G.mul(G.inv(g), g)


def test_group_is_hashable_value():
    assert Group("cyclic", (5,)) == make_group("z5")
    assert len({make_group("z5"), make_group("cyclic:5")}) == 1
