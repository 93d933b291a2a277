import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grouporth.gmatrix import (
    GMatrix,
    MatrixError,
    adjoint,
    all_identity,
    back_circulant,
    block_grid,
    circulant,
    embed,
    kronecker_compose,
    primitive_root,
    residue_class_matrix,
    residue_classes,
)
from grouporth.groups import WILDCARD, ZERO, make_group


def matrices(group, max_dim=5, zeros=False):
    G = make_group(group)
    lo = ZERO if zeros else 0
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(lo, G.order - 1), min_size=c, max_size=c), min_size=r, max_size=r
            ).map(lambda rows: GMatrix(G, rows))
        )
    )


def test_shape_and_tokens():
    M = GMatrix.from_tokens("roots6", [["1", "w"], ["-1", "."]])
    assert M.shape == (2, 2)
    assert M.has_zeros and not M.has_wildcards
    assert M.tokens() == [["1", "w"], ["-1", "."]]


@pytest.mark.parametrize("rows", [[], [[]], [[0, 1], [0]], [[0, 7]]])
def test_malformed_rejected(rows):
    with pytest.raises(MatrixError):
        GMatrix(make_group("z3"), rows)


@given(st.lists(st.integers(0, 4), min_size=1, max_size=9))
def test_circulant_rows_are_shifts(row):
    C = circulant("z5", row)
    n = len(row)
    for i in range(n):
        assert list(C.entries[i]) == row[n - i:] + row[:n - i]
    B = back_circulant("z5", row)
    for i in range(n):
        assert list(B.entries[i]) == row[i:] + row[:i]


def test_circulant_empty():
    with pytest.raises(MatrixError):
        circulant("z3", [])
    with pytest.raises(MatrixError):
        back_circulant("z3", [])


def test_block_grid():
    A = all_identity("z2", 2)
    B = circulant("z2", [0, 1])
    M = block_grid([[A, B], [B, A]])
    assert M.shape == (4, 4)
    assert M.entries[2] == (0, 1, 0, 0)
    with pytest.raises(MatrixError):
        block_grid([[A, all_identity("z2", 3)]])
    with pytest.raises(MatrixError):
        block_grid([[A, all_identity("z3", 2)]])


@given(matrices("z6", 4), matrices("z6", 4))
@settings(max_examples=60)
def test_kronecker_matches_direct_loop(A, B):
    K = kronecker_compose(A, B)
    G = A.group
    for i1, i2, j1, j2 in itertools.product(range(A.rows), range(B.rows), range(A.cols), range(B.cols)):
        assert K[i1 * B.rows + i2, j1 * B.cols + j2] == G.mul(A[i1, j1], B[i2, j2])


def test_kronecker_embeds_cyclic_orders():
    A = GMatrix.from_tokens("roots2", [["1", "1"], ["1", "-1"]])
    B = circulant("roots3", ["1", "w", "w"])
    K = kronecker_compose(A, B)
    assert K.group == make_group("roots6")
    assert K.shape == (6, 6)
    assert K[3, 3] == 3  # -1 in roots6


def test_kronecker_rejects():
    with pytest.raises(MatrixError):
        kronecker_compose(all_identity("klein", 2), all_identity("z3", 2))
    with pytest.raises(MatrixError):
        kronecker_compose(GMatrix(make_group("z2"), [[0, ZERO]]), all_identity("z2", 1))


def test_embed():
    M = GMatrix(make_group("roots2"), [[0, 1, ZERO]])
    assert embed(M, "roots6").entries == ((0, 3, ZERO),)
    with pytest.raises(MatrixError):
        embed(M, "roots3")
    with pytest.raises(MatrixError):
        embed(M, "klein")


@given(st.sampled_from(["z5", "roots6", "q8", "s3-a2b3", "klein"]).flatmap(lambda g: matrices(g, zeros=True)))
def test_adjoint_is_involution(M):
    assert adjoint(adjoint(M)) == M
    assert adjoint(M, "plain") == M.transpose()


def test_adjoint_kind_checks():
    with pytest.raises(MatrixError):
        adjoint(all_identity("klein", 2), "complex-conjugate")
    with pytest.raises(MatrixError):
        adjoint(all_identity("z3", 2), "quaternion-conjugate")
    with pytest.raises(MatrixError):
        adjoint(all_identity("z3", 2), "bogus")
    assert adjoint(circulant("roots4", ["1", "i"]), "complex-conjugate").entries == ((0, 3), (3, 0))


def test_scale_and_permute():
    M = circulant("z3", [0, 1, 2])
    assert M.scale_row(0, 1).entries[0] == (1, 2, 0)
    assert M.permute_rows([2, 1, 0]).entries[0] == M.entries[2]
    assert M.permute_cols([1, 0, 2]).entries[0] == (1, 0, 2)


def test_flatten():
    M = GMatrix(make_group("z2"), [[0, ZERO], [ZERO, 1]])
    assert M.flatten().tolist() == [[1, 0], [0, 1]]
    with pytest.raises(MatrixError):
        GMatrix(make_group("z2"), [[WILDCARD]]).flatten()


def test_cubic_residues_mod_13():
    assert primitive_root(13) == 2
    assert residue_classes(13) == [[1, 5, 8, 12], [2, 3, 10, 11], [4, 6, 7, 9]]


@pytest.mark.parametrize("p", [7, 13, 19, 31, 37])
def test_residue_classes_partition(p):
    classes = residue_classes(p)
    assert sorted(sum(classes, [])) == list(range(1, p))
    cubes = {pow(x, 3, p) for x in range(1, p)}
    assert set(classes[0]) == cubes


def test_residue_classes_errors():
    with pytest.raises(ValueError):
        residue_classes(12)
    with pytest.raises(ValueError):
        residue_classes(11)


def test_residue_class_matrix_zero_class():
    M = residue_class_matrix(13, {"I": "0", "C0": "1"}, "z3")
    assert M[0, 0] == 0 and M[0, 1] == 1 and M[0, 2] == ZERO
