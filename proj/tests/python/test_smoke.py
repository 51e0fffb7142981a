import pytest

import ceswb


def test_framed_matrix_and_involution():
    b = ceswb.framed_matrix(3)
    assert b[0] == [0, -1, 0, 1, 0, 0]
    once = ceswb.mutate(b, 3, 2)
    assert once != b
    assert ceswb.mutate(once, 3, 2) == b


def test_mutate_path_a3():
    out = ceswb.mutate_path(3, [1, 3])
    assert out["cmatrix"] == [[-1, 0, 0], [1, 1, 0], [0, 0, -1]]
    assert out["diagram"] == [(1, 0), (0, 2), (3, 2)]


@pytest.mark.parametrize("n, catalan", [(1, 2), (2, 5), (3, 14), (4, 42)])
def test_cmatrix_counts(n, catalan):
    cs = ceswb.cmatrices(n)
    assert len(cs) == catalan
    assert all(ceswb.is_cmatrix(c) for c in cs)


def test_classify_rejects():
    assert not ceswb.is_cmatrix([[1, 1], [0, 1]])
    assert not ceswb.is_cmatrix([[1, 0, 0], [0, 1, 0], [1, 1, 1]])


def test_permutations_a4():
    c = ceswb.mutate_path(4, [2, 3])["cmatrix"]
    perms = dict(ceswb.permutations(c))
    assert set(perms) == {"(243)", "(12)(34)", "(34)"}
    assert perms["(243)"] == [(1, 3), (2, 3), (1, 4), (0, 1)]
    for seq in perms.values():
        assert ceswb.is_exceptional_sequence(4, seq)


def test_counts():
    assert [ceswb.count_ces(n) for n in range(1, 6)] == [1, 3, 16, 125, 1296]
    assert ceswb.count_maximal_nc_chains(4) == 125
    assert ceswb.tree_leaf_distribution(3) == {2: 12, 3: 4}


def test_hom_ext():
    assert ceswb.hom_dim(2, (0, 1), (0, 2)) == 1
    assert ceswb.hom_dim(2, (0, 2), (0, 1)) == 0
    assert ceswb.ext_dim(2, (0, 1), (1, 2)) + ceswb.ext_dim(2, (1, 2), (0, 1)) == 1


def test_verify():
    gates = ceswb.verify(3)
    assert len(gates) == 11
    assert all(passed for _, passed, _ in gates)


def test_errors():
    with pytest.raises(ValueError):
        ceswb.mutate_path(2, [3])
    with pytest.raises(ValueError):
        ceswb.hom_dim(2, (1, 1), (0, 1))
    with pytest.raises(RuntimeError):
        ceswb.count_ces(8, bound=6)
