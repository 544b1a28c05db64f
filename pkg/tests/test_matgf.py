import random

import pytest

from hullforge import MatrixGF
from hullforge.errors import (DimensionMismatch, IndexOutOfRange,
                              NotSquareMatrix)

from helpers import (EX31_ROWS, EX41_ROWS, F4, F5, F7, F8, F9,
                     lemma_nonsingular_instance, lemma_rank_deficient_instance,
                     random_matrix)

EX41_GRAM = [[2, 0, 2], [0, 1, 0], [2, 0, 0]]


def test_rref_identity_and_zero():
    ident = MatrixGF.identity(F5, 3)
    r, pivots, rank = ident.rref()
    assert r == ident and pivots == (0, 1, 2) and rank == 3
    zero = MatrixGF.zeros(F5, 2, 4)
    r, pivots, rank = zero.rref()
    assert r == zero and pivots == () and rank == 0


def test_rref_golden_example_already_standard():
    m = MatrixGF(F5, EX31_ROWS)
    r, pivots, rank = m.rref()
    assert rank == 3 and pivots == (0, 1, 2)
    assert r == m


def test_det_examples():
    assert MatrixGF.identity(F7, 4).det().value == 1
    gram = MatrixGF(F5, EX41_GRAM)
    assert gram.det().value == 1
    singular = MatrixGF(F5, [[1, 2, 3], [1, 2, 3], [0, 1, 4]])
    assert singular.det().value == 0
    with pytest.raises(NotSquareMatrix):
        MatrixGF.zeros(F5, 2, 3).det()
    assert MatrixGF(F5, [], ncols=0).det().value == 1  # 0x0 convention


def test_gram_computed_from_golden_generators():
    assert MatrixGF(F5, EX31_ROWS).gram() == MatrixGF.zeros(F5, 3, 3)
    assert MatrixGF(F5, EX41_ROWS).gram() == MatrixGF(F5, EX41_GRAM)


def test_gram_scaled_doubled_identity():
    g = MatrixGF(F7, [[1, 0, 1, 0], [0, 1, 0, 1]])  # [I_2 : I_2]
    assert g.gram_scaled([1, 1, 1, 1]) == MatrixGF(F7, [[2, 0], [0, 2]])


def test_kernel_basis():
    assert MatrixGF.identity(F5, 3).kernel_basis().nrows == 0
    z = MatrixGF.zeros(F5, 3, 3)
    assert z.kernel_basis() == MatrixGF.identity(F5, 3)
    gram = MatrixGF(F5, EX31_ROWS).gram()
    assert gram.kernel_basis() == MatrixGF.identity(F5, 3)


def test_kernel_rows_annihilate():
    rng = random.Random(7)
    for spec in (F4, F5, F9):
        for _ in range(20):
            m = random_matrix(rng, spec, rng.randint(1, 5), rng.randint(1, 5))
            kb = m.kernel_basis()
            assert kb.nrows + m.rank() == m.nrows
            if kb.nrows:
                assert kb @ m == MatrixGF.zeros(spec, kb.nrows, m.ncols)
                assert kb.rank() == kb.nrows


def test_minor_complement_conventions():
    m = random_matrix(random.Random(1), F5, 3, 3)
    assert m.minor_complement([]) == m
    full = m.minor_complement([1, 2, 3])
    assert full.nrows == 0 and full.det().value == 1
    sub = m.minor_complement([2])
    assert sub.nrows == 2
    assert sub.row_values(0) == (m.row_values(0)[0], m.row_values(0)[2])
    assert sub.row_values(1) == (m.row_values(2)[0], m.row_values(2)[2])
    with pytest.raises(IndexOutOfRange):
        m.minor_complement([4])
    with pytest.raises(NotSquareMatrix):
        MatrixGF.zeros(F5, 2, 3).minor_complement([1])


def test_det_diag_shift_basics():
    k = 4
    zero = MatrixGF.zeros(F5, k, k)
    assert zero.det_diag_shift([1] * k).value == 1
    ident2 = MatrixGF.identity(F4, 3)
    assert ident2.det_diag_shift([1, 1, 1]).value == 0  # I + I = 0 in char 2
    with pytest.raises(DimensionMismatch):
        zero.det_diag_shift([1] * (k - 1))


def test_rank_transpose_and_det_rank_link():
    rng = random.Random(11)
    for spec in (F4, F5, F7, F8, F9):
        for _ in range(20):
            m = random_matrix(rng, spec, rng.randint(1, 5), rng.randint(1, 5))
            assert m.rank() == m.transpose().rank()
            assert m.rref()[0].rank() == m.rank()
            if m.is_square:
                assert (m.det().value != 0) == (m.rank() == m.nrows)


def test_matmul_shapes_and_transpose():
    a = MatrixGF(F5, [[1, 2], [3, 4], [0, 1]])
    b = MatrixGF(F5, [[1, 0, 2], [2, 1, 0]])
    prod = a @ b
    assert (prod.nrows, prod.ncols) == (3, 3)
    assert prod.transpose() == b.transpose() @ a.transpose()
    with pytest.raises(DimensionMismatch):
        b @ b


def _product(spec, values):
    acc = 1
    for v in values:
        acc = spec.mul(acc, v)
    return acc


@pytest.mark.parametrize("spec", (F4, F5, F7, F9), ids=str)
def test_rank_deficient_diag_shift_identity(spec):
    """det(M + diag(u)) = (prod u) det(M_J) whenever all complement minors
    of order <= t vanish and u has weight <= t+1 (checked via rank-deficit
    construction)."""
    rng = random.Random(spec.q * 17)
    for _ in range(40):
        k = rng.randint(2, 5)
        t = rng.randint(0, k - 1)
        M, u, J = lemma_rank_deficient_instance(rng, spec, k, t)
        lhs = M.det_diag_shift(u).value
        prod = _product(spec, [u[i - 1] for i in J])
        rhs = spec.mul(prod, M.det_minor_complement(J).value)
        assert lhs == rhs


@pytest.mark.parametrize("spec", (F4, F5, F7, F9), ids=str)
def test_nonsingular_diag_shift_identity(spec):
    """det(M + diag(u)) = det(M) + (prod u) det(M_J) for nonsingular M with
    vanishing proper inner minors on the support."""
    rng = random.Random(spec.q * 31)
    for _ in range(40):
        k = rng.randint(2, 5)
        j = rng.randint(1, k)
        M, u, J = lemma_nonsingular_instance(rng, spec, k, j)
        lhs = M.det_diag_shift(u).value
        prod = _product(spec, [u[i - 1] for i in J])
        rhs = spec.add(M.det().value,
                       spec.mul(prod, M.det_minor_complement(J).value))
        assert lhs == rhs
