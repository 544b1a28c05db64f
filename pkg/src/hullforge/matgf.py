"""Dense exact linear algebra over GF(q).

Matrices are immutable tuples of integer-encoded rows tied to a
FieldSpec.  Everything is exact field arithmetic: reduced row echelon
form, rank, determinant, left kernel, principal-complement minors, the
diagonal-shift determinant (det(M + diag(u)) evaluated directly, the
oracle against which the determinant expansion identities are machine
checked) and the scaled Gram product G diag(u) G^T.

Index conventions: row/column accessors are 0-based like the rest of
Python; the minor operations take 1-based index sets, matching the way
reports and file formats count coordinates.
"""

from __future__ import annotations

from .errors import DimensionMismatch, IndexOutOfRange, NotSquareMatrix, SpecMismatch
from .gf import FieldElement, FieldSpec


class MatrixGF:
    """A rows x cols matrix over one FieldSpec, immutable after construction."""

    __slots__ = ("spec", "nrows", "ncols", "_rows")

    def __init__(self, spec: FieldSpec, rows, ncols: int | None = None):
        data = []
        for r in rows:
            data.append(tuple(
                v.value if isinstance(v, FieldElement) else spec._check(int(v))
                for v in r))
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise DimensionMismatch("ragged rows")
            if ncols is not None and ncols != width:
                raise DimensionMismatch(
                    f"ncols={ncols} disagrees with row length {width}")
            ncols = width
        elif ncols is None:
            raise DimensionMismatch("empty matrix needs an explicit ncols")
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "_rows", tuple(data))

    def __setattr__(self, name, value):
        raise AttributeError("MatrixGF is immutable")

    @classmethod
    def zeros(cls, spec: FieldSpec, nrows: int, ncols: int) -> "MatrixGF":
        return cls(spec, [[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, spec: FieldSpec, k: int) -> "MatrixGF":
        return cls(spec, [[1 if i == j else 0 for j in range(k)] for i in range(k)])

    # -- access ---------------------------------------------------------------

    def row_values(self, i: int) -> tuple[int, ...]:
        return self._rows[i]

    def rows_values(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.spec, self._rows[i][j])

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __eq__(self, other):
        return (isinstance(other, MatrixGF) and self.spec == other.spec
                and self.ncols == other.ncols and self._rows == other._rows)

    def __hash__(self):
        return hash((self.spec, self.ncols, self._rows))

    def __repr__(self):
        return f"MatrixGF({self.nrows}x{self.ncols} over {self.spec})"

    def __str__(self):
        return "\n".join(" ".join(str(v) for v in r) for r in self._rows)

    def _same_spec(self, other: "MatrixGF"):
        if self.spec != other.spec:
            raise SpecMismatch("matrices over different fields")

    # -- basic algebra ----------------------------------------------------------

    def transpose(self) -> "MatrixGF":
        return MatrixGF(self.spec,
                        [tuple(r[j] for r in self._rows) for j in range(self.ncols)],
                        ncols=self.nrows)

    def add(self, other: "MatrixGF") -> "MatrixGF":
        self._same_spec(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("shape mismatch in add")
        f = self.spec.add
        return MatrixGF(self.spec,
                        [tuple(f(a, b) for a, b in zip(ra, rb))
                         for ra, rb in zip(self._rows, other._rows)],
                        ncols=self.ncols)

    def __matmul__(self, other: "MatrixGF") -> "MatrixGF":
        self._same_spec(other)
        if self.ncols != other.nrows:
            raise DimensionMismatch(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        spec = self.spec
        mulf, addf = spec.mul, spec.add
        bt = [tuple(r[j] for r in other._rows) for j in range(other.ncols)]
        out = []
        for ra in self._rows:
            row = []
            for col in bt:
                acc = 0
                for a, b in zip(ra, col):
                    if a and b:
                        acc = addf(acc, mulf(a, b))
                row.append(acc)
            out.append(tuple(row))
        return MatrixGF(spec, out, ncols=other.ncols)

    def scale_columns(self, u) -> "MatrixGF":
        """G -> G diag(u)."""
        u = _vector_values(self.spec, u, self.ncols)
        mulf = self.spec.mul
        return MatrixGF(self.spec,
                        [tuple(mulf(v, s) for v, s in zip(r, u)) for r in self._rows],
                        ncols=self.ncols)

    def gram_scaled(self, u) -> "MatrixGF":
        """G diag(u) G^T; with u all-ones this is the plain Gram matrix."""
        u = _vector_values(self.spec, u, self.ncols)
        spec = self.spec
        mulf, addf = spec.mul, spec.add
        k = self.nrows
        rows = self._rows
        out = [[0] * k for _ in range(k)]
        for i in range(k):
            ri = rows[i]
            for j in range(i, k):
                rj = rows[j]
                acc = 0
                for t in range(self.ncols):
                    a = ri[t]
                    if a:
                        b = rj[t]
                        if b:
                            acc = addf(acc, mulf(mulf(a, u[t]), b))
                out[i][j] = acc
                out[j][i] = acc
        return MatrixGF(spec, out, ncols=k)

    def gram(self) -> "MatrixGF":
        return self.gram_scaled([1] * self.ncols)

    # -- elimination ------------------------------------------------------------

    def rref(self) -> tuple["MatrixGF", tuple[int, ...], int]:
        """(R, pivot columns, rank) with R the reduced row echelon form."""
        spec = self.spec
        mulf, addf, negf, invf = spec.mul, spec.add, spec.neg, spec.inv
        rows = [list(r) for r in self._rows]
        nrows, ncols = self.nrows, self.ncols
        pivots = []
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            piv = next((i for i in range(r, nrows) if rows[i][c]), None)
            if piv is None:
                continue
            if piv != r:
                rows[r], rows[piv] = rows[piv], rows[r]
            s = invf(rows[r][c])
            if s != 1:
                rows[r] = [mulf(s, v) for v in rows[r]]
            for i in range(nrows):
                if i != r and rows[i][c]:
                    f = negf(rows[i][c])
                    rr = rows[r]
                    rows[i] = [addf(v, mulf(f, w)) for v, w in zip(rows[i], rr)]
            pivots.append(c)
            r += 1
        return MatrixGF(spec, rows, ncols=ncols), tuple(pivots), r

    def rank(self) -> int:
        return self.rref()[2]

    def det(self) -> FieldElement:
        """Exact determinant by fraction-free-enough Gaussian elimination
        (exact inverses make pivot choice a non-issue)."""
        if not self.is_square:
            raise NotSquareMatrix(f"det of {self.nrows}x{self.ncols} matrix")
        spec = self.spec
        k = self.nrows
        if k == 0:
            return FieldElement(spec, 1)
        rows = [list(r) for r in self._rows]
        mulf, addf, negf, invf = spec.mul, spec.add, spec.neg, spec.inv
        det = 1
        for c in range(k):
            piv = next((i for i in range(c, k) if rows[i][c]), None)
            if piv is None:
                return FieldElement(spec, 0)
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                det = negf(det)
            pv = rows[c][c]
            det = mulf(det, pv)
            pinv = invf(pv)
            for i in range(c + 1, k):
                if rows[i][c]:
                    f = negf(mulf(rows[i][c], pinv))
                    rc = rows[c]
                    rows[i] = [addf(v, mulf(f, w)) for v, w in zip(rows[i], rc)]
        return FieldElement(spec, det)

    def kernel_basis(self) -> "MatrixGF":
        """Rows form a basis of the left kernel {y : yA = 0}; row count is
        nrows - rank."""
        rt, pivots, rank = self.transpose().rref()
        free = [j for j in range(self.nrows) if j not in set(pivots)]
        negf = self.spec.neg
        basis = []
        for f in free:
            y = [0] * self.nrows
            y[f] = 1
            for i, pc in enumerate(pivots):
                y[pc] = negf(rt.row_values(i)[f])
            basis.append(y)
        return MatrixGF(self.spec, basis, ncols=self.nrows)

    # -- minors and diagonal shifts ----------------------------------------------

    def _minor_indices(self, indices) -> tuple[int, ...]:
        if not self.is_square:
            raise NotSquareMatrix("minor of a non-square matrix")
        idx = sorted(set(int(i) for i in indices))
        for i in idx:
            if not 1 <= i <= self.nrows:
                raise IndexOutOfRange(
                    f"index {i} outside 1..{self.nrows}")
        return tuple(idx)

    def minor_complement(self, indices) -> "MatrixGF":
        """Delete the 1-based rows/columns in `indices` (both at once).

        The empty set returns the matrix itself; deleting every index
        leaves the 0x0 matrix, whose determinant is 1 by convention.
        """
        drop = set(self._minor_indices(indices))
        keep = [i for i in range(self.nrows) if i + 1 not in drop]
        return MatrixGF(self.spec,
                        [tuple(self._rows[i][j] for j in keep) for i in keep],
                        ncols=len(keep))

    def det_minor_complement(self, indices) -> FieldElement:
        return self.minor_complement(indices).det()

    def det_diag_shift(self, u) -> FieldElement:
        """det(M + diag(u)), evaluated directly (never via the expansion
        identities, which are validated against this)."""
        if not self.is_square:
            raise NotSquareMatrix("diag shift of a non-square matrix")
        u = _vector_values(self.spec, u, self.nrows)
        addf = self.spec.add
        shifted = [list(r) for r in self._rows]
        for i, ui in enumerate(u):
            shifted[i][i] = addf(shifted[i][i], ui)
        return MatrixGF(self.spec, shifted, ncols=self.ncols).det()


def _vector_values(spec: FieldSpec, u, length: int) -> tuple[int, ...]:
    vals = tuple(
        v.value if isinstance(v, FieldElement) else spec._check(int(v))
        for v in u)
    if len(vals) != length:
        raise DimensionMismatch(f"vector of length {len(vals)}, expected {length}")
    return vals
