"""Dense matrices with polynomial entries (small, exact, immutable)."""

from __future__ import annotations

from .errors import InputError, RingMismatch
from .polyring import Poly


class PolyMatrix:
    """rows x cols matrix of Poly entries over one ring."""

    __slots__ = ("ring", "rows", "cols", "data")

    def __init__(self, ring, data, rows=None, cols=None):
        self.ring = ring
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        self.rows = rows
        self.cols = cols
        out = []
        for r in range(rows):
            row = []
            for c in range(cols):
                v = data[r][c]
                if isinstance(v, int):
                    v = ring.constant(v)
                if not isinstance(v, Poly):
                    v = ring.constant(v)
                if v.ring != ring:
                    raise RingMismatch("matrix entry from wrong ring")
                row.append(v)
            out.append(row)
        self.data = out

    @classmethod
    def zero(cls, ring, rows, cols):
        z = ring.zero()
        return cls(ring, [[z] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, ring, n, scale=None):
        if scale is None:
            scale = ring.one()
        if isinstance(scale, int):
            scale = ring.constant(scale)
        z = ring.zero()
        return cls(
            ring,
            [[scale if i == j else z for j in range(n)] for i in range(n)],
            n,
            n,
        )

    @classmethod
    def block(cls, ring, grid):
        """Assemble from a grid of PolyMatrix blocks (None = zero block)."""
        row_heights = []
        for brow in grid:
            h = None
            for b in brow:
                if b is not None:
                    h = b.rows
                    break
            if h is None:
                raise InputError("fully-None block row")
            row_heights.append(h)
        col_widths = []
        ncols = len(grid[0])
        for j in range(ncols):
            w = None
            for brow in grid:
                if brow[j] is not None:
                    w = brow[j].cols
                    break
            if w is None:
                raise InputError("fully-None block column")
            col_widths.append(w)
        data = []
        for bi, brow in enumerate(grid):
            for r in range(row_heights[bi]):
                row = []
                for bj, b in enumerate(brow):
                    if b is None:
                        row.extend([ring.zero()] * col_widths[bj])
                    else:
                        if b.rows != row_heights[bi] or b.cols != col_widths[bj]:
                            raise InputError("inconsistent block shapes")
                        row.extend(b.data[r])
                data.append(row)
        return cls(ring, data)

    def entry(self, r, c):
        return self.data[r][c]

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.ring == other.ring
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("shape mismatch")
        return PolyMatrix(
            self.ring,
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.data, other.data)
            ],
            self.rows,
            self.cols,
        )

    def __neg__(self):
        return PolyMatrix(
            self.ring,
            [[-v for v in row] for row in self.data],
            self.rows,
            self.cols,
        )

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise InputError("inner dimension mismatch")
        z = self.ring.zero()
        data = []
        for r in range(self.rows):
            row = []
            for c in range(other.cols):
                acc = z
                for k in range(self.cols):
                    a = self.data[r][k]
                    if a.is_zero():
                        continue
                    b = other.data[k][c]
                    if b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            data.append(row)
        return PolyMatrix(self.ring, data, self.rows, other.cols)

    def scale(self, factor):
        return PolyMatrix(
            self.ring,
            [[v * factor for v in row] for row in self.data],
            self.rows,
            self.cols,
        )

    def map(self, fn, ring=None):
        return PolyMatrix(
            ring or self.ring,
            [[fn(v) for v in row] for row in self.data],
            self.rows,
            self.cols,
        )

    def transpose(self):
        return PolyMatrix(
            self.ring,
            [[self.data[r][c] for r in range(self.rows)] for c in range(self.cols)],
            self.cols,
            self.rows,
        )

    def substitute(self, values):
        return self.map(lambda p: p.substitute(values))

    def embed(self, ring, positions=None):
        return self.map(lambda p: ring.embed(p, positions), ring=ring)

    def is_zero(self, base=None):
        for row in self.data:
            for v in row:
                if base is not None:
                    v = base.reduce(v)
                if not v.is_zero():
                    return False
        return True

    def reduce(self, base):
        return self.map(base.reduce)

    def to_json(self):
        from .polyring import format_poly

        return [[format_poly(v) for v in row] for row in self.data]

    @classmethod
    def from_json(cls, ring, rows):
        from .polyring import parse_poly

        return cls(ring, [[parse_poly(ring, v) for v in row] for row in rows])

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols} over {self.ring!r})"
