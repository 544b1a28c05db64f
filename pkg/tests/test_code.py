import random

import pytest

from hullforge import LinearCode, MatrixGF, MonomialTransform
from hullforge.errors import (BudgetExceeded, DimensionMismatch, ZeroCode,
                              ZeroScale)

from helpers import (EX31_ROWS, EX31_SCALINGS, EX41_ROWS, F4, F5, F7, F8, F9,
                     SMALL_FIELDS, ex31, ex41, random_code,
                     random_nonzero_vector, random_permutation)


def test_from_matrix_golden_parameters():
    c31 = ex31()
    assert (c31.n, c31.k) == (7, 3)
    c41 = ex41()
    assert (c41.n, c41.k) == (6, 3)


def test_from_matrix_collapses_dependent_rows():
    code = LinearCode(F5, [[1, 2, 3, 4], [0, 1, 4, 1], [1, 3, 2, 0]])
    # row3 = row1 + row2
    assert code.k == 2
    with pytest.raises(ZeroCode):
        LinearCode(F5, [[0, 0, 0]])


def test_standard_form():
    c31 = ex31()
    std, t = c31.standard_form()
    assert std == c31 and t.is_identity

    # zero first column forces the pivots away from the leading positions
    gappy = LinearCode(F5, [[0, 0, 1, 2], [0, 1, 0, 3]])
    std, t = gappy.standard_form()
    first = [list(std.G.row_values(i)[:2]) for i in range(2)]
    assert first == [[1, 0], [0, 1]]
    assert not t.is_identity
    assert gappy.apply(t) == std
    assert std.hull().h == gappy.hull().h


def test_standard_form_preserves_hull_on_random_codes():
    rng = random.Random(42)
    for _ in range(100):
        spec = rng.choice(SMALL_FIELDS)
        n = rng.randint(2, 7)
        k = rng.randint(1, min(4, n))
        code = random_code(rng, spec, n, k)
        std, t = code.standard_form()
        assert code.apply(t) == std
        assert std.hull().h == code.hull().h == code.hull_oracle()


def test_dual_standard_construction():
    code = LinearCode(F5, [[1, 0, 2, 3], [0, 1, 4, 1]])  # [I : P]
    dual = code.dual()
    # row space of [-P^T : I]
    expected = LinearCode(F5, [[3, 1, 1, 0], [2, 4, 0, 1]])
    assert dual == expected
    prod = dual.G @ code.G.transpose()
    assert prod == MatrixGF.zeros(F5, 2, 2)


def test_dual_contains_self_orthogonal_code():
    c31 = ex31()
    dual = c31.dual()
    assert (dual.n, dual.k) == (7, 4)
    for i in range(c31.k):
        assert dual.contains(c31.G.row_values(i))


def test_dual_involution_and_full_space():
    rng = random.Random(3)
    for _ in range(30):
        spec = rng.choice(SMALL_FIELDS)
        n = rng.randint(2, 6)
        k = rng.randint(1, n - 1)
        code = random_code(rng, spec, n, k)
        assert code.dual().dual() == code
    full = LinearCode(F5, MatrixGF.identity(F5, 3))
    with pytest.raises(ZeroCode):
        full.dual()
    assert full.hull().h == 0  # dual-side rank handled as the empty matrix


def test_hull_golden_examples():
    rep = ex31().hull()
    assert rep.h == 3 and rep.rank_gram == 0 and rep.rank_dual_gram == 1
    assert rep.hull_basis.nrows == 3
    assert ex41().hull().h == 0
    ident = LinearCode(F7, MatrixGF.identity(F7, 4))
    assert ident.hull().h == 0


def test_hull_basis_rows_live_in_code_and_dual():
    rng = random.Random(5)
    for _ in range(40):
        spec = rng.choice(SMALL_FIELDS)
        n = rng.randint(2, 7)
        k = rng.randint(1, n - 1)
        code = random_code(rng, spec, n, k)
        rep = code.hull()
        dual = code.dual()
        for i in range(rep.hull_basis.nrows):
            row = rep.hull_basis.row_values(i)
            assert code.contains(row) and dual.contains(row)
        assert rep.hull_basis.rank() == rep.h


def test_hull_equals_dual_hull_with_same_basis_space():
    rng = random.Random(9)
    for _ in range(40):
        spec = rng.choice(SMALL_FIELDS)
        n = rng.randint(2, 7)
        k = rng.randint(1, n - 1)
        code = random_code(rng, spec, n, k)
        dual = code.dual()
        rep, drep = code.hull(), dual.hull()
        assert rep.h == drep.h
        for i in range(rep.hull_basis.nrows):
            stacked = MatrixGF(spec,
                               drep.hull_basis.rows_values()
                               + (rep.hull_basis.row_values(i),), ncols=n)
            assert stacked.rank() == rep.h


def test_predicates():
    assert ex31().is_self_orthogonal() and not ex31().is_lcd()
    assert not ex31().is_self_dual()
    assert ex41().is_lcd() and not ex41().is_self_orthogonal()
    ident = LinearCode(F5, MatrixGF.identity(F5, 3))
    assert ident.is_lcd() and not ident.is_self_orthogonal()
    selfdual = LinearCode(F5, [[1, 0, 2, 0], [0, 1, 0, 2]])
    assert selfdual.is_self_dual()


def test_min_distance_examples():
    assert ex31().min_distance() == 2
    assert LinearCode(F5, MatrixGF.identity(F5, 3)).min_distance() == 1
    rep = LinearCode(F7, [[1] * 6])
    assert rep.min_distance() == 6
    with pytest.raises(BudgetExceeded):
        ex31().min_distance(budget=10)


def test_hull_oracle_examples():
    assert ex31().hull_oracle() == 3  # all 125 codewords self-orthogonal
    assert LinearCode(F5, MatrixGF.identity(F5, 2)).hull_oracle() == 0
    assert ex41().hull_oracle() == 0
    with pytest.raises(BudgetExceeded):
        ex31().hull_oracle(budget=100)


def test_apply_identity_and_golden_scalings():
    c31 = ex31()
    assert c31.apply(MonomialTransform.identity(7)) == c31
    for i, a in EX31_SCALINGS.items():
        assert c31.apply(MonomialTransform.scaling(a)).hull().h == i
    with pytest.raises(ZeroScale):
        MonomialTransform.scaling((0, 1, 1, 1, 1, 1, 1))
    with pytest.raises(DimensionMismatch):
        c31.apply(MonomialTransform.identity(5))


def test_apply_composition_law():
    rng = random.Random(17)
    for _ in range(60):
        spec = rng.choice(SMALL_FIELDS)
        n = rng.randint(2, 6)
        k = rng.randint(1, n)
        code = random_code(rng, spec, n, k)
        t1 = MonomialTransform(random_permutation(rng, n),
                               random_nonzero_vector(rng, spec, n))
        t2 = MonomialTransform(random_permutation(rng, n),
                               random_nonzero_vector(rng, spec, n))
        assert code.apply(t1).apply(t2) == code.apply(t1.then(t2, spec))


def test_monomial_transforms_preserve_parameters():
    rng = random.Random(23)
    for _ in range(40):
        spec = rng.choice(SMALL_FIELDS)
        n = rng.randint(2, 6)
        k = rng.randint(1, min(3, n))
        code = random_code(rng, spec, n, k)
        t = MonomialTransform(random_permutation(rng, n),
                              random_nonzero_vector(rng, spec, n))
        moved = code.apply(t)
        assert (moved.n, moved.k) == (code.n, code.k)
        assert moved.min_distance() == code.min_distance()


def test_permutation_invariance_of_hull():
    rng = random.Random(29)
    for _ in range(40):
        spec = rng.choice(SMALL_FIELDS)
        n = rng.randint(2, 7)
        k = rng.randint(1, n)
        code = random_code(rng, spec, n, k)
        t = MonomialTransform.permutation(random_permutation(rng, n))
        assert code.apply(t).hull().h == code.hull().h


def test_hull_depends_only_on_squared_scaling():
    rng = random.Random(31)
    for _ in range(60):
        spec = rng.choice(SMALL_FIELDS)
        n = rng.randint(2, 6)
        k = rng.randint(1, n)
        code = random_code(rng, spec, n, k)
        a = random_nonzero_vector(rng, spec, n)
        u = tuple(spec.mul(v, v) for v in a)
        scaled = code.apply(MonomialTransform.scaling(a))
        assert scaled.hull().h == code.k - code.G.gram_scaled(u).rank()


def test_single_coordinate_scaling_moves_hull_by_at_most_one():
    rng = random.Random(37)
    for _ in range(120):
        spec = rng.choice((F4, F5, F7, F8, F9))
        n = rng.randint(2, 6)
        k = rng.randint(1, n)
        code = random_code(rng, spec, n, k)
        std, _ = code.standard_form()
        h = std.hull().h
        a = [1] * n
        a[rng.randrange(n)] = rng.randrange(2, spec.q)
        scaled = std.apply(MonomialTransform.scaling(a))
        assert abs(scaled.hull().h - h) <= 1


def test_rank_formula_matches_oracle():
    rng = random.Random(41)
    for _ in range(60):
        spec = rng.choice(SMALL_FIELDS)
        n = rng.randint(1, 8)
        k = rng.randint(1, min(4, n))
        code = random_code(rng, spec, n, k)
        rep = code.hull()
        assert rep.h == code.hull_oracle()
        assert rep.h == code.k - rep.rank_gram
        assert rep.h == (code.n - code.k) - rep.rank_dual_gram
