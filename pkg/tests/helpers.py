"""Shared fixtures: golden matrices, random code samplers, and builders
for the determinant-lemma test instances."""

from __future__ import annotations

import random
from itertools import combinations

from hullforge import FieldSpec, LinearCode, MatrixGF
from hullforge.errors import ZeroCode

F2 = FieldSpec(2)
F3 = FieldSpec(3)
F4 = FieldSpec(2, 2)
F5 = FieldSpec(5)
F7 = FieldSpec(7)
F8 = FieldSpec(2, 3)
F9 = FieldSpec(3, 2)

SMALL_FIELDS = (F2, F3, F4, F5, F7, F8, F9)

# the F5 [7,3,2] self-orthogonal golden example
EX31_ROWS = [
    [1, 0, 0, 0, 0, 2, 0],
    [0, 1, 0, 2, 2, 0, 4],
    [0, 0, 1, 1, 3, 0, 3],
]
EX31_SCALINGS = {
    0: (2, 2, 2, 1, 1, 1, 1),
    1: (2, 2, 1, 1, 1, 1, 1),
    2: (2, 1, 1, 1, 1, 1, 1),
    3: (1, 1, 1, 1, 1, 1, 1),
}

# the F5 [6,3] pure LCD golden example
EX41_ROWS = [
    [1, 0, 0, 0, 0, 4],
    [0, 1, 0, 2, 4, 0],
    [0, 0, 1, 0, 0, 3],
]


def ex31() -> LinearCode:
    return LinearCode(F5, EX31_ROWS)


def ex41() -> LinearCode:
    return LinearCode(F5, EX41_ROWS)


def random_code(rng: random.Random, spec: FieldSpec, n: int, k: int) -> LinearCode:
    """A random [n, k] code (retries until the rows are independent)."""
    assert 1 <= k <= n
    while True:
        rows = [[rng.randrange(spec.q) for _ in range(n)] for _ in range(k)]
        try:
            code = LinearCode(spec, rows)
        except ZeroCode:
            continue
        if code.k == k:
            return code


def random_lcd_code(rng: random.Random, spec: FieldSpec, n: int, k: int) -> LinearCode:
    while True:
        code = random_code(rng, spec, n, k)
        if code.is_lcd():
            return code


def _dot(spec, x, y):
    acc = 0
    for a, b in zip(x, y):
        if a and b:
            acc = spec.add(acc, spec.mul(a, b))
    return acc


def random_self_orthogonal(rng: random.Random, spec: FieldSpec, n: int,
                           k: int) -> LinearCode:
    """Random self-orthogonal [n, k] code by repeatedly extending with an
    isotropic vector from the orthogonal complement of the rows so far."""
    assert 2 * k <= n, "self-orthogonal needs k <= n - k"
    for _ in range(400):
        rows: list[list[int]] = []
        while len(rows) < k:
            v = _isotropic_extension(rng, spec, n, rows)
            if v is None:
                break
            rows.append(v)
        if len(rows) == k:
            code = LinearCode(spec, rows)
            assert code.k == k and code.is_self_orthogonal()
            return code
    raise RuntimeError(f"no self-orthogonal [{n},{k}] code found over {spec}")


def _isotropic_extension(rng, spec, n, rows):
    if rows:
        mat = MatrixGF(spec, rows)
        basis = mat.transpose().kernel_basis().rows_values()
        cur_rank = mat.rank()
    else:
        basis = MatrixGF.identity(spec, n).rows_values()
        cur_rank = 0
    if not basis:
        return None
    for _ in range(300):
        v = [0] * n
        for b in basis:
            c = rng.randrange(spec.q)
            if c:
                for j in range(n):
                    if b[j]:
                        v[j] = spec.add(v[j], spec.mul(c, b[j]))
        if not any(v) or _dot(spec, v, v) != 0:
            continue
        if MatrixGF(spec, rows + [v]).rank() == cur_rank + 1:
            return v
    return None


def random_permutation(rng: random.Random, n: int) -> tuple[int, ...]:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return tuple(images)


def random_nonzero_vector(rng: random.Random, spec: FieldSpec, n: int):
    return tuple(rng.randrange(1, spec.q) for _ in range(n))


def mat_inverse(M: MatrixGF) -> MatrixGF:
    """Inverse of a nonsingular square matrix via an augmented RREF."""
    k = M.nrows
    aug = MatrixGF(M.spec,
                   [list(M.row_values(i)) + [1 if j == i else 0 for j in range(k)]
                    for i in range(k)])
    red, _, rank = aug.rref()
    assert rank == k, "matrix is singular"
    return MatrixGF(M.spec, [red.row_values(i)[k:] for i in range(k)])


def random_matrix(rng, spec, rows, cols):
    return MatrixGF(spec, [[rng.randrange(spec.q) for _ in range(cols)]
                           for _ in range(rows)])


def lemma_rank_deficient_instance(rng: random.Random, spec: FieldSpec,
                                  k: int, t: int):
    """(M, u, J) with rank(M) <= k-t-1 (so every complement minor of order
    <= t vanishes) and u of weight <= t+1 supported on J."""
    r = k - t - 1
    if r == 0:
        M = MatrixGF.zeros(spec, k, k)
    else:
        M = random_matrix(rng, spec, r, k).transpose() @ random_matrix(rng, spec, r, k)
    j = rng.randint(1, t + 1)
    J = tuple(sorted(rng.sample(range(1, k + 1), j)))
    u = [0] * k
    for i in J:
        u[i - 1] = rng.randrange(1, spec.q)
    return M, tuple(u), J


def lemma_nonsingular_instance(rng: random.Random, spec: FieldSpec,
                               k: int, j: int):
    """(M, u, J) with M nonsingular, |J| = j, and every proper nonempty
    complement minor inside J vanishing.

    j = 1 needs no structure (any nonsingular M); larger supports use a
    Schur complement whose block on J is a scaled cyclic shift, which has
    every proper principal minor zero but nonzero determinant.
    """
    while True:
        if j == 1:
            M = random_matrix(rng, spec, k, k)
            if M.det().value == 0:
                continue
            perm = list(range(k))
        else:
            S = [[0] * j for _ in range(j)]
            for i in range(j):
                S[i][(i + 1) % j] = rng.randrange(1, spec.q)
            w = k - j
            if w == 0:
                block = MatrixGF(spec, S)
            else:
                while True:
                    W = random_matrix(rng, spec, w, w)
                    if W.det().value != 0:
                        break
                Y = random_matrix(rng, spec, j, w)
                Z = random_matrix(rng, spec, w, j)
                X = MatrixGF(spec, S).add(Y @ mat_inverse(W) @ Z)
                top = [list(X.row_values(i)) + list(Y.row_values(i))
                       for i in range(j)]
                bottom = [list(Z.row_values(i)) + list(W.row_values(i))
                          for i in range(w)]
                block = MatrixGF(spec, top + bottom)
            perm = list(range(k))
            rng.shuffle(perm)
            M = MatrixGF(spec, [[block.row_values(perm.index(a))[perm.index(b)]
                                 for b in range(k)] for a in range(k)])
        J = (tuple(sorted(p + 1 for p in perm[:j])) if j > 1
             else (rng.randint(1, k),))
        if M.det().value == 0:
            continue
        ok = all(M.det_minor_complement(I).value == 0
                 for size in range(1, j)
                 for I in combinations(J, size))
        if not ok:
            continue
        u = [0] * k
        for i in J:
            u[i - 1] = rng.randrange(1, spec.q)
        return M, tuple(u), J
