import pytest

from bmwgram import cellmod as CM
from bmwgram.bmw import DELTA, basis_size
from bmwgram.coeff import LaurentPoly, ParamSpec
from bmwgram.combin import partitions
from bmwgram.hecke import specht_gram, specht_rank

L = LaurentPoly


def test_cell_dims_examples():
    dims = {(c.f, c.lam): d for c, d in CM.cell_dims(3).items()}
    assert dims == {(0, (3,)): 1, (0, (2, 1)): 2, (0, (1, 1, 1)): 1,
                    (1, (1,)): 3}
    dims5 = {(c.f, c.lam): d for c, d in CM.cell_dims(5).items()}
    assert dims5[(1, (3,))] == 10
    assert dims5[(2, (1,))] == 15


def test_dimension_identity():
    for n in range(1, 7):
        dims = CM.cell_dims(n)
        assert sum(d * d for d in dims.values()) == basis_size(n)


def test_gram_small_cells():
    g = CM.gram_matrix(CM.CellIndex(2, 0, (2,)))
    assert g.entries[0][0] == L.one() + L.q(2)
    g = CM.gram_matrix(CM.CellIndex(2, 1, ()))
    assert g.entries[0][0] == DELTA


def test_gram_n3_determinant():
    g = CM.gram_matrix(CM.CellIndex(3, 1, (1,)))
    assert g.dim() == 3
    for sub in ((1, -1), (-1, 1)):
        det = CM.gram_det(g.substitute_r(*sub))
        assert det.normalize_unit()[1] == (L.q(4) + L.one()).unit_core()


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_gram_symmetry(n):
    for f in range(n // 2 + 1):
        for lam in partitions(n - 2 * f):
            g = CM.gram_matrix(CM.CellIndex(n, f, lam))
            for a in range(g.dim()):
                for b in range(g.dim()):
                    assert g.entries[a][b] == g.entries[b][a]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_f0_reduction_to_specht(n):
    for lam in partitions(n):
        g = CM.gram_matrix(CM.CellIndex(n, 0, lam))
        assert g.entries == specht_gram(lam, n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_inflation_backend(n):
    for f in range(1, n // 2 + 1):
        for lam in partitions(n - 2 * f):
            cell = CM.CellIndex(n, f, lam)
            assert CM.gram_matrix(cell).entries == \
                CM.gram_via_inflation(cell).entries


def test_top_cell_vanishing():
    for n in (2, 4):
        g = CM.gram_matrix(CM.CellIndex(n, n // 2, ()))
        for sub in ((1, -1), (-1, 1)):
            assert CM.gram_det(g.substitute_r(*sub)).is_zero()


def test_specialization_commutes_with_det():
    from bmwgram.exactla import gf_det
    for n, f, lam in ((2, 1, ()), (3, 1, (1,)), (4, 1, (2,))):
        g = CM.gram_matrix(CM.CellIndex(n, f, lam))
        det = CM.gram_det(g)
        for p, q0, r0 in ((5, 2, 3), (7, 3, 2), (11, 2, 5)):
            rows = [[e.specialize(p, q0, r0) for e in row] for row in g.entries]
            assert det.specialize(p, q0, r0) == gf_det(rows, p)


def test_gram_rank_examples():
    assert CM.gram_rank(CM.CellIndex(3, 1, (1,)), ParamSpec.concrete(5, 2, 3)) == 3
    spec = ParamSpec.concrete(5, 2, 3)   # r0 = q0^{-1}
    assert CM.gram_rank(CM.CellIndex(2, 1, ()), spec) == 0
    for n in (2, 3, 4):
        for lam in partitions(n):
            assert CM.gram_rank(CM.CellIndex(n, 0, lam), spec) == \
                specht_rank(lam, spec)


def test_matrix_json_roundtrip():
    g = CM.gram_matrix(CM.CellIndex(3, 1, (1,)))
    data = g.to_json()
    g2 = CM.GramMatrix.from_json(data)
    assert g2.entries == g.entries
    assert g2.cell == g.cell


def test_symbolic_det_guard():
    class Fake:
        def dim(self):
            return CM.SYMBOLIC_DET_LIMIT + 1
    with pytest.raises(ValueError):
        CM.gram_det(Fake())


@pytest.mark.parametrize("n", [2, 3, 4])
def test_central_element_scalar(n):
    z = CM.central_element(n)
    for f in range(n // 2 + 1):
        for lam in partitions(n - 2 * f):
            cell = CM.CellIndex(n, f, lam)
            twisted = CM.central_twisted_gram(cell, z)
            gram = CM.gram_matrix(cell)
            sigma = CM.central_scalar(cell)
            for a in range(gram.dim()):
                for b in range(gram.dim()):
                    assert twisted.entries[a][b] == sigma * gram.entries[a][b]
