"""Sparse exact matrices over QQ, QQ(i), or GF(p), with rref and kernels.

Elimination is fraction-free (Bareiss) on denominator-cleared rows, with
rational normalisation only at the end, so intermediate entries stay
integral and growth stays polynomial.  All values are immutable after
construction; every operation returns a fresh matrix.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import FieldMismatch, InputError
from .fields import GaussianRational, PrimeField, check_same_field


class ExactMatrix:
    """Sparse matrix with entries in a single exact field."""

    __slots__ = ("rows", "cols", "entries", "field", "_rref")

    def __init__(self, rows, cols, entries, field):
        if rows < 0 or cols < 0:
            raise InputError("negative matrix dimensions")
        self.rows = rows
        self.cols = cols
        clean = {}
        for (r, c), v in entries.items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise InputError(f"entry ({r},{c}) outside {rows}x{cols}")
            if not field.contains(v):
                raise FieldMismatch(f"entry ({r},{c}) not in {field}")
            if v:
                clean[(r, c)] = v
        self.entries = clean
        self.field = field
        self._rref = None

    @classmethod
    def from_rows(cls, field, data):
        rows = len(data)
        cols = len(data[0]) if data else 0
        entries = {}
        for r, row in enumerate(data):
            if len(row) != cols:
                raise InputError("ragged rows")
            for c, v in enumerate(row):
                if isinstance(v, int):
                    v = field.from_int(v)
                if v:
                    entries[(r, c)] = v
        return cls(rows, cols, entries, field)

    @classmethod
    def identity(cls, field, n):
        return cls(n, n, {(i, i): field.one() for i in range(n)}, field)

    @classmethod
    def zero(cls, field, rows, cols):
        return cls(rows, cols, {}, field)

    def entry(self, r, c):
        return self.entries.get((r, c), self.field.zero())

    def items(self):
        """Deterministic (row, col) -> value iteration."""
        for key in sorted(self.entries):
            yield key, self.entries[key]

    def to_rows(self):
        out = [[self.field.zero()] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def transpose(self):
        return ExactMatrix(
            self.cols,
            self.rows,
            {(c, r): v for (r, c), v in self.entries.items()},
            self.field,
        )

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.field == other.field
            and self.entries == other.entries
        )

    def __add__(self, other):
        self._check_shapes(other, same=True)
        entries = dict(self.entries)
        for key, v in other.entries.items():
            s = entries.get(key, self.field.zero()) + v
            if s:
                entries[key] = s
            else:
                entries.pop(key, None)
        return ExactMatrix(self.rows, self.cols, entries, self.field)

    def __neg__(self):
        return ExactMatrix(
            self.rows, self.cols, {k: -v for k, v in self.entries.items()}, self.field
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        if not scalar:
            return ExactMatrix.zero(self.field, self.rows, self.cols)
        return ExactMatrix(
            self.rows,
            self.cols,
            {k: scalar * v for k, v in self.entries.items()},
            self.field,
        )

    def _check_shapes(self, other, same=False):
        check_same_field(self.field, other.field)
        if same and (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("shape mismatch")

    def __matmul__(self, other):
        self._check_shapes(other)
        if self.cols != other.rows:
            raise InputError("inner dimension mismatch")
        by_row = {}
        for (r, k), v in self.entries.items():
            by_row.setdefault(r, []).append((k, v))
        by_col = {}
        for (k, c), v in other.entries.items():
            by_col.setdefault(k, []).append((c, v))
        entries = {}
        for r, terms in by_row.items():
            acc = {}
            for k, v in terms:
                for c, w in by_col.get(k, ()):
                    key = c
                    s = acc.get(key, self.field.zero()) + v * w
                    acc[key] = s
            for c, s in acc.items():
                if s:
                    entries[(r, c)] = s
        return ExactMatrix(self.rows, other.cols, entries, self.field)

    def apply(self, vector):
        """Matrix times a column vector (list of scalars)."""
        if len(vector) != self.cols:
            raise InputError("vector length mismatch")
        out = [self.field.zero()] * self.rows
        for (r, c), v in self.entries.items():
            out[r] = out[r] + v * vector[c]
        return out

    def is_zero(self):
        return not self.entries

    # -- elimination ----------------------------------------------------

    def _cleared_rows(self):
        """Dense rows with denominators cleared (no-op over GF(p))."""
        rows = self.to_rows()
        if isinstance(self.field, PrimeField):
            return rows
        out = []
        for row in rows:
            dens = []
            for v in row:
                if isinstance(v, GaussianRational):
                    dens.append(v.re.denominator)
                    dens.append(v.im.denominator)
                else:
                    dens.append(Fraction(v).denominator)
            m = lcm(*dens) if dens else 1
            out.append([v * m for v in row])
        return out

    def rref(self):
        """Reduced row echelon form and the tuple of pivot columns."""
        if self._rref is not None:
            return self._rref
        work = self._cleared_rows()
        m, n = self.rows, self.cols
        pivots = []
        piv_r = 0
        prev = None
        for c in range(n):
            pr = None
            for r in range(piv_r, m):
                if work[r][c]:
                    pr = r
                    break
            if pr is None:
                continue
            if pr != piv_r:
                work[piv_r], work[pr] = work[pr], work[piv_r]
            piv = work[piv_r][c]
            for r in range(piv_r + 1, m):
                x = work[r][c]
                for j in range(c, n):
                    val = piv * work[r][j] - x * work[piv_r][j]
                    if prev is not None:
                        val = val / prev
                    work[r][j] = val
            prev = piv
            pivots.append(c)
            piv_r += 1
            if piv_r == m:
                break
        # normalise and back-substitute
        for i in range(len(pivots) - 1, -1, -1):
            c = pivots[i]
            piv = work[i][c]
            work[i] = [v / piv for v in work[i]]
            for r in range(i):
                x = work[r][c]
                if x:
                    work[r] = [a - x * b for a, b in zip(work[r], work[i])]
        entries = {}
        for r in range(m):
            for c in range(n):
                if work[r][c]:
                    entries[(r, c)] = work[r][c]
        result = (ExactMatrix(m, n, entries, self.field), tuple(pivots))
        self._rref = result
        return result

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Vectors spanning ker(self); count = cols - rank."""
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for f in free:
            v = [self.field.zero()] * self.cols
            v[f] = self.field.one()
            for i, c in enumerate(pivots):
                v[c] = -red.entry(i, f)
            basis.append(v)
        return basis

    def solve(self, rhs):
        """One solution of self @ x = rhs, or None when inconsistent."""
        if len(rhs) != self.rows:
            raise InputError("rhs length mismatch")
        entries = dict(self.entries)
        for r, v in enumerate(rhs):
            if isinstance(v, int):
                v = self.field.from_int(v)
            if v:
                entries[(r, self.cols)] = v
        aug = ExactMatrix(self.rows, self.cols + 1, entries, self.field)
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [self.field.zero()] * self.cols
        for i, c in enumerate(pivots):
            x[c] = red.entry(i, self.cols)
        return x

    def column_space_rank_with(self, extra_columns):
        """Rank of [self | extra] where extra is a list of column vectors."""
        entries = dict(self.entries)
        for j, col in enumerate(extra_columns):
            for r, v in enumerate(col):
                if v:
                    entries[(r, self.cols + j)] = v
        big = ExactMatrix(
            self.rows, self.cols + len(extra_columns), entries, self.field
        )
        return big.rank()

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols} over {self.field})"


def matrix_from_columns(field, columns, rows=None):
    """Assemble a matrix whose columns are the given vectors."""
    if rows is None:
        rows = len(columns[0]) if columns else 0
    entries = {}
    for c, col in enumerate(columns):
        if len(col) != rows:
            raise InputError("ragged columns")
        for r, v in enumerate(col):
            if v:
                entries[(r, c)] = v
    return ExactMatrix(rows, len(columns), entries, field)


def subspace_dim(field, vectors, length):
    """Dimension of the span of the given coordinate vectors."""
    if not vectors:
        return 0
    return matrix_from_columns(field, vectors, rows=length).rank()


def vector_in_span(field, vectors, target, length):
    """Whether target lies in span(vectors); both as coordinate vectors."""
    mat = matrix_from_columns(field, vectors, rows=length)
    return mat.solve(target) is not None


class SpanBuilder:
    """Incremental echelonised span of coordinate vectors.

    add() reduces the vector against the current echelon rows and keeps
    it when it contributes a new pivot; rank queries are O(1)."""

    __slots__ = ("field", "length", "rows")

    def __init__(self, field, length):
        self.field = field
        self.length = length
        self.rows = {}  # pivot index -> normalised sparse row dict

    @property
    def rank(self):
        return len(self.rows)

    def _reduce(self, vec):
        work = {i: v for i, v in enumerate(vec) if v}
        for pivot in sorted(self.rows):
            c = work.get(pivot)
            if not c:
                continue
            for j, v in self.rows[pivot].items():
                s = work.get(j, self.field.zero()) - c * v
                if s:
                    work[j] = s
                else:
                    work.pop(j, None)
        return work

    def add(self, vec):
        """Insert; returns True when the rank grew."""
        work = self._reduce(vec)
        if not work:
            return False
        pivot = min(work)
        inv = self.field.one() / work[pivot]
        self.rows[pivot] = {j: inv * v for j, v in work.items()}
        return True

    def contains(self, vec):
        return not self._reduce(vec)
