"""Dense matrices over GF(p^e): products, RREF, rank, kernels, Kronecker products.

Matrices are immutable; entries are element indices (see fields.FieldSpec).
Empty shapes (0 x n, n x 0) are legal and arise naturally as generators of
zero codes and parity checks of full-space codes.
"""

from __future__ import annotations

from .errors import Incompatible, InvalidExponent
from .fields import FieldSpec, check_same_field


class MatrixGF:
    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: FieldSpec, data, cols: int | None = None):
        rows = [tuple(int(x) % field.q for x in row) for row in data]
        self.field = field
        self.rows = len(rows)
        if rows:
            self.cols = len(rows[0])
            if any(len(r) != self.cols for r in rows):
                raise Incompatible("ragged rows")
            if cols is not None and cols != self.cols:
                raise Incompatible("cols does not match row width")
        else:
            if cols is None:
                raise Incompatible("empty matrix needs an explicit column count")
            self.cols = cols
        self.data = tuple(rows)

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "MatrixGF":
        return cls(field, [[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "MatrixGF":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def from_entries(cls, field: FieldSpec, rows: int, cols: int, entries) -> "MatrixGF":
        entries = list(entries)
        if len(entries) != rows * cols:
            raise Incompatible(f"expected {rows * cols} entries, got {len(entries)}")
        return cls(field, [entries[i * cols:(i + 1) * cols] for i in range(rows)], cols=cols)

    @classmethod
    def vstack(cls, mats) -> "MatrixGF":
        mats = list(mats)
        field = mats[0].field
        cols = mats[0].cols
        rows = []
        for m in mats:
            check_same_field(field, m.field)
            if m.cols != cols:
                raise Incompatible("vstack width mismatch")
            rows.extend(m.data)
        return cls(field, rows, cols=cols)

    @classmethod
    def hstack(cls, mats) -> "MatrixGF":
        mats = list(mats)
        field = mats[0].field
        nrows = mats[0].rows
        for m in mats:
            check_same_field(field, m.field)
            if m.rows != nrows:
                raise Incompatible("hstack height mismatch")
        rows = [sum((m.data[i] for m in mats), ()) for i in range(nrows)]
        return cls(field, rows, cols=sum(m.cols for m in mats))

    # -- accessors ----------------------------------------------------------------

    @property
    def entries(self) -> tuple[int, ...]:
        return sum(self.data, ())

    def __getitem__(self, rc):
        r, c = rc
        return self.data[r][c]

    def row(self, i: int) -> tuple[int, ...]:
        return self.data[i]

    def __eq__(self, other):
        return (
            isinstance(other, MatrixGF)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"MatrixGF({self.field!r}, {self.rows}x{self.cols}: {body})"

    # -- arithmetic ------------------------------------------------------------------

    def __matmul__(self, other: "MatrixGF") -> "MatrixGF":
        check_same_field(self.field, other.field)
        if self.cols != other.rows:
            raise Incompatible(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        f = self.field
        ot = list(zip(*other.data)) if other.data else [()] * other.cols
        out = []
        for arow in self.data:
            orow = []
            for bcol in ot:
                acc = 0
                for a, b in zip(arow, bcol):
                    if a and b:
                        acc = f.add(acc, f.mul(a, b))
                orow.append(acc)
            out.append(orow)
        return MatrixGF(f, out, cols=other.cols)

    def __add__(self, other: "MatrixGF") -> "MatrixGF":
        check_same_field(self.field, other.field)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise Incompatible("shape mismatch")
        f = self.field
        return MatrixGF(
            f,
            [[f.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
            cols=self.cols,
        )

    def __sub__(self, other: "MatrixGF") -> "MatrixGF":
        check_same_field(self.field, other.field)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise Incompatible("shape mismatch")
        f = self.field
        return MatrixGF(
            f,
            [[f.sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
            cols=self.cols,
        )

    def scaled(self, a: int) -> "MatrixGF":
        f = self.field
        return MatrixGF(f, [[f.mul(a, x) for x in row] for row in self.data], cols=self.cols)

    def transpose(self) -> "MatrixGF":
        if self.rows == 0:
            return MatrixGF(self.field, [()] * self.cols, cols=0)
        if self.cols == 0:
            return MatrixGF(self.field, [], cols=self.rows)
        return MatrixGF(self.field, list(zip(*self.data)), cols=self.rows)

    def frobenius(self, s: int) -> "MatrixGF":
        """Entrywise a -> a^(p^s)."""
        f = self.field
        if not 1 <= s <= f.e:
            raise InvalidExponent(f"Frobenius exponent {s} outside 1..{f.e}")
        return MatrixGF(f, [[f.frobenius(x, s) for x in row] for row in self.data], cols=self.cols)

    def kron(self, other: "MatrixGF") -> "MatrixGF":
        """Kronecker product; block (i, j) equals self[i, j] * other."""
        check_same_field(self.field, other.field)
        f = self.field
        out = []
        for arow in self.data:
            for brow in other.data:
                out.append([f.mul(a, b) for a in arow for b in brow])
        return MatrixGF(f, out, cols=self.cols * other.cols)

    # -- elimination ---------------------------------------------------------------------

    def rref(self) -> tuple["MatrixGF", int, tuple[int, ...]]:
        """Reduced row echelon form.

        Pivots are chosen deterministically: scan columns left to right, take
        the topmost nonzero entry at or below the current pivot row.  Returns
        (R, rank, pivot_columns).
        """
        f = self.field
        m = [list(row) for row in self.data]
        nrows, ncols = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            sel = next((i for i in range(r, nrows) if m[i][c]), None)
            if sel is None:
                continue
            m[r], m[sel] = m[sel], m[r]
            inv = f.inv(m[r][c])
            m[r] = [f.mul(inv, x) for x in m[r]]
            for i in range(nrows):
                if i != r and m[i][c]:
                    factor = m[i][c]
                    m[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return MatrixGF(f, m, cols=ncols), len(pivots), tuple(pivots)

    def rank(self) -> int:
        return self.rref()[1]

    def row_basis(self) -> "MatrixGF":
        """RREF rows spanning the row space (zero rows dropped)."""
        R, rank, _ = self.rref()
        return MatrixGF(self.field, R.data[:rank], cols=self.cols)

    def kernel_basis(self) -> "MatrixGF":
        """Basis of the right null space {x : self @ x^T = 0}, one row per basis vector.

        Has cols - rank rows; a zero-row input yields the full identity.
        """
        f = self.field
        R, rank, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in set(pivots)]
        rows = []
        for fc in free:
            vec = [0] * self.cols
            vec[fc] = 1
            for i, pc in enumerate(pivots):
                vec[pc] = f.neg(R.data[i][fc])
            rows.append(vec)
        return MatrixGF(f, rows, cols=self.cols)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)


def row_space_intersection(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    """Basis (RREF rows) of rowspace(a) ∩ rowspace(b).

    Solves the stacked system x·a + y·b = 0 via the kernel of [a^T | b^T];
    each solution contributes the vector x·a.
    """
    check_same_field(a.field, b.field)
    if a.cols != b.cols:
        raise Incompatible("ambient dimensions differ")
    stacked = MatrixGF.hstack([a.transpose(), b.transpose()])
    ker = stacked.kernel_basis()
    vecs = []
    for row in ker.data:
        x = MatrixGF(a.field, [row[:a.rows]], cols=a.rows)
        vecs.append((x @ a).data[0])
    if not vecs:
        return MatrixGF(a.field, [], cols=a.cols)
    return MatrixGF(a.field, vecs, cols=a.cols).row_basis()


def is_monomial_matrix(m: MatrixGF) -> bool:
    """True iff m is square with exactly one nonzero entry per row and per column."""
    if m.rows != m.cols:
        return False
    seen_cols = set()
    for row in m.data:
        nz = [c for c, x in enumerate(row) if x]
        if len(nz) != 1:
            return False
        seen_cols.add(nz[0])
    return len(seen_cols) == m.rows
