"""Dense exact integer matrices.

Entries are arbitrary-precision Python ints; no floating point is used
anywhere in the package's linear algebra. Matrices are immutable by
convention: no public method mutates ``data`` after construction.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class IntMatrix:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence[int]], cols: int | None = None):
        rows = len(data)
        if rows == 0:
            if cols is None:
                cols = 0
            self.data = []
        else:
            width = len(data[0])
            if cols is not None and cols != width:
                raise ValueError(f"declared {cols} columns, rows have {width}")
            cols = width
            out = []
            for r in data:
                if len(r) != cols:
                    raise ValueError("ragged rows")
                out.append([int(x) for x in r])
            self.data = out
        self.rows = rows
        self.cols = cols

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i][i] = 1
        return m

    @classmethod
    def diagonal(cls, entries: Sequence[int], rows: int | None = None,
                 cols: int | None = None) -> "IntMatrix":
        k = len(entries)
        rows = k if rows is None else rows
        cols = k if cols is None else cols
        m = cls.zeros(rows, cols)
        for i, d in enumerate(entries):
            if i < rows and i < cols:
                m.data[i][i] = int(d)
        return m

    @classmethod
    def column(cls, entries: Sequence[int]) -> "IntMatrix":
        return cls([[int(x)] for x in entries], cols=1)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        m = cls.zeros(rows, len(columns))
        for j, col in enumerate(columns):
            if len(col) != rows:
                raise ValueError("column of wrong height")
            for i, x in enumerate(col):
                m.data[i][j] = int(x)
        return m

    @classmethod
    def hstack(cls, parts: Sequence["IntMatrix"]) -> "IntMatrix":
        parts = [p for p in parts]
        if not parts:
            raise ValueError("hstack of nothing")
        rows = parts[0].rows
        if any(p.rows != rows for p in parts):
            raise ValueError("row mismatch in hstack")
        data = [[] for _ in range(rows)]
        for p in parts:
            for i in range(rows):
                data[i].extend(p.data[i])
        total = sum(p.cols for p in parts)
        if rows == 0:
            return cls.zeros(0, total)
        return cls(data, cols=total)

    # -- access -------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, pos: tuple[int, int]) -> int:
        i, j = pos
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i},{j}) outside {self.rows}x{self.cols}")
        return self.data[i][j]

    def row_list(self, i: int) -> list[int]:
        return list(self.data[i])

    def col_list(self, j: int) -> list[int]:
        if not 0 <= j < self.cols:
            raise IndexError(j)
        return [self.data[i][j] for i in range(self.rows)]

    def columns(self) -> Iterable[list[int]]:
        for j in range(self.cols):
            yield self.col_list(j)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def max_abs(self) -> int:
        best = 0
        for row in self.data:
            for x in row:
                a = -x if x < 0 else x
                if a > best:
                    best = a
        return best

    # -- arithmetic ---------------------------------------------------

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = IntMatrix.zeros(self.rows, other.cols)
        for i in range(self.rows):
            srow = self.data[i]
            orow = out.data[i]
            for k in range(self.cols):
                s = srow[k]
                if s:
                    brow = other.data[k]
                    for j in range(other.cols):
                        orow[j] += s * brow[j]
        return out

    def apply(self, vec: Sequence[int]) -> list[int]:
        """Matrix times column vector, returned as a plain list."""
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} vs {self.cols} columns")
        return [sum(r[j] * vec[j] for j in range(self.cols)) for r in self.data]

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
            cols=self.cols,
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
            cols=self.cols,
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-x for x in row] for row in self.data], cols=self.cols)

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix([[c * x for x in row] for row in self.data], cols=self.cols)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self) -> str:
        if self.rows <= 8 and self.cols <= 8:
            body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
            return f"IntMatrix({self.rows}x{self.cols}: [{body}])"
        return f"IntMatrix({self.rows}x{self.cols})"

    # -- exact determinant (Bareiss) -----------------------------------

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(row) for row in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            pivot = a[k][k]
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = pivot
        return sign * a[n - 1][n - 1]
