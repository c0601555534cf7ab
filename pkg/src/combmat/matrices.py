"""Dense exact matrices over the rationals.

Matrices are immutable values and every operation is a pure function, so
instances are safe to share between threads.  Determinants run through
fraction-free (Bareiss) elimination on a denominator-cleared integer copy,
which keeps intermediate values integral; a cofactor-expansion oracle is
kept alongside for cross-checks.  The 180-degree rotation ``reversing`` is
conjugation by the exchange permutation and distributes over the entrywise
(Hadamard) product.

Indices in documentation and error messages are 1-based to match the usual
mathematical convention for minors and cofactors; raw entry access through
``m[i, j]`` is 0-based like the rest of Python.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ParseError, ShapeError, SingularMatrixError
from .rationals import format_rational, parse_rational

Entry = int | Fraction


class Matrix:
    """Immutable rows x cols array of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows_data: Iterable[Sequence[Entry]]):
        grid = tuple(tuple(Fraction(x) for x in row) for row in rows_data)
        rows = len(grid)
        cols = len(grid[0]) if rows else 0
        for i, row in enumerate(grid):
            if len(row) != cols:
                raise ShapeError(
                    f"ragged rows: row {i + 1} has {len(row)} entries, expected {cols}"
                )
        if rows and cols == 0:
            raise ShapeError("rows must be non-empty; only the 0x0 matrix may be empty")
        self.rows = rows
        self.cols = cols
        self.entries = grid

    @classmethod
    def _trusted(cls, grid: tuple[tuple[Fraction, ...], ...], rows: int, cols: int) -> "Matrix":
        # internal fast path: grid must already be a tuple-of-tuples of Fractions
        obj = object.__new__(cls)
        obj.rows = rows
        obj.cols = cols
        obj.entries = grid
        return obj

    # -- constructors --------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        one, zero = Fraction(1), Fraction(0)
        grid = tuple(
            tuple(one if i == j else zero for j in range(n)) for i in range(n)
        )
        return cls._trusted(grid, n, n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        zero = Fraction(0)
        grid = tuple(tuple(zero for _ in range(cols)) for _ in range(rows))
        return cls._trusted(grid, rows, cols)

    @classmethod
    def diagonal(cls, values: Sequence[Entry]) -> "Matrix":
        n = len(values)
        zero = Fraction(0)
        grid = tuple(
            tuple(Fraction(values[i]) if i == j else zero for j in range(n))
            for i in range(n)
        )
        return cls._trusted(grid, n, n)

    @classmethod
    def column(cls, values: Sequence[Entry]) -> "Matrix":
        return cls([[v] for v in values])

    @classmethod
    def exchange(cls, n: int) -> "Matrix":
        """The anti-diagonal permutation matrix of order n."""
        one, zero = Fraction(1), Fraction(0)
        grid = tuple(
            tuple(one if i + j == n - 1 else zero for j in range(n)) for i in range(n)
        )
        return cls._trusted(grid, n, n)

    # -- text / JSON formats -------------------------------------------

    @classmethod
    def from_text(cls, text: str) -> "Matrix":
        """Parse the plain format: a header line "rows cols", then rows of
        whitespace-separated rationals ("p/q" or "p")."""
        lines = text.splitlines()
        idx = 0
        while idx < len(lines) and not lines[idx].strip():
            idx += 1
        if idx == len(lines):
            raise ParseError("empty matrix text", line=1)
        header = lines[idx].split()
        if len(header) != 2:
            raise ParseError(
                f"expected header 'rows cols', got {lines[idx].strip()!r}", line=idx + 1
            )
        try:
            n, m = int(header[0]), int(header[1])
        except ValueError:
            raise ParseError(
                f"expected two integers in header, got {lines[idx].strip()!r}",
                line=idx + 1,
            ) from None
        if n < 0 or m < 0:
            raise ParseError("matrix dimensions must be nonnegative", line=idx + 1)
        if (n == 0) != (m == 0):
            raise ParseError("zero rows require zero cols (and vice versa)", line=idx + 1)
        grid = []
        line_no = idx
        for r in range(n):
            line_no += 1
            if line_no >= len(lines):
                raise ParseError(
                    f"expected {n} rows but the text ends after row {r}", line=line_no + 1
                )
            tokens = lines[line_no].split()
            if len(tokens) != m:
                raise ParseError(
                    f"expected {m} entries in row {r + 1}, got {len(tokens)}",
                    line=line_no + 1,
                )
            grid.append([parse_rational(t, line=line_no + 1) for t in tokens])
        for extra in range(line_no + 1, len(lines)):
            if lines[extra].strip():
                raise ParseError("unexpected content after the last row", line=extra + 1)
        return cls(grid)

    def to_text(self) -> str:
        head = f"{self.rows} {self.cols}"
        body = [" ".join(format_rational(x) for x in row) for row in self.entries]
        return "\n".join([head] + body)

    @classmethod
    def from_json(cls, src: str | dict) -> "Matrix":
        """Parse the JSON format: {"rows": n, "cols": m, "entries": [[str]]}
        with string-encoded rational entries."""
        if isinstance(src, str):
            try:
                obj = json.loads(src)
            except json.JSONDecodeError as e:
                raise ParseError(f"invalid JSON: {e}", line=e.lineno) from None
        else:
            obj = src
        if not isinstance(obj, dict):
            raise ParseError("JSON matrix must be an object")
        try:
            n, m, entries = obj["rows"], obj["cols"], obj["entries"]
        except KeyError as e:
            raise ParseError(f"JSON matrix is missing key {e.args[0]!r}") from None
        if not (isinstance(n, int) and isinstance(m, int)) or n < 0 or m < 0:
            raise ParseError("JSON 'rows'/'cols' must be nonnegative integers")
        if not isinstance(entries, list) or len(entries) != n:
            raise ParseError(f"JSON 'entries' must be a list of {n} rows")
        grid = []
        for i, row in enumerate(entries):
            if not isinstance(row, list) or len(row) != m:
                raise ParseError(f"JSON row {i + 1} must be a list of {m} strings")
            grid.append([parse_rational(str(x)) for x in row])
        return cls(grid)

    def to_json_obj(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[format_rational(x) for x in row] for row in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    # -- dunder plumbing ------------------------------------------------

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        rows = ", ".join(
            "[" + ", ".join(format_rational(x) for x in row) + "]"
            for row in self.entries
        )
        return f"Matrix([{rows}])"

    def __str__(self) -> str:
        return self.to_text()

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._require_same_shape(other, "add")
        grid = tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)
        )
        return Matrix._trusted(grid, self.rows, self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._require_same_shape(other, "subtract")
        grid = tuple(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)
        )
        return Matrix._trusted(grid, self.rows, self.cols)

    def __neg__(self) -> "Matrix":
        grid = tuple(tuple(-x for x in row) for row in self.entries)
        return Matrix._trusted(grid, self.rows, self.cols)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.matmul(other)
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            grid = tuple(tuple(c * x for x in row) for row in self.entries)
            return Matrix._trusted(grid, self.rows, self.cols)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    # -- queries ---------------------------------------------------------

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def row_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(row, Fraction(0)) for row in self.entries)

    def col_sums(self) -> tuple[Fraction, ...]:
        return tuple(
            sum((row[j] for row in self.entries), Fraction(0)) for j in range(self.cols)
        )

    def trace(self) -> Fraction:
        self._require_square("trace")
        return sum((self.entries[i][i] for i in range(self.rows)), Fraction(0))

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    def is_upper_triangular(self) -> bool:
        """True for square matrices with zeros below the diagonal.

        Diagonal matrices count as both upper and lower triangular.
        """
        if not self.is_square:
            return False
        return all(
            self.entries[i][j] == 0
            for i in range(self.rows)
            for j in range(i)
        )

    def is_lower_triangular(self) -> bool:
        if not self.is_square:
            return False
        return all(
            self.entries[i][j] == 0
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def is_triangular(self) -> bool:
        return self.is_upper_triangular() or self.is_lower_triangular()

    def is_diagonal(self) -> bool:
        return self.is_upper_triangular() and self.is_lower_triangular()

    def is_orthogonal(self) -> bool:
        """True iff the matrix times its transpose is the identity (exact)."""
        if not self.is_square:
            return False
        return self.matmul(self.transpose()) == Matrix.identity(self.rows)

    def is_permutation(self) -> bool:
        if not self.is_square:
            return False
        one, zero = Fraction(1), Fraction(0)
        for row in self.entries:
            if any(x != zero and x != one for x in row):
                return False
            if sum(row) != one:
                return False
        return all(s == one for s in self.col_sums())

    # -- operations -------------------------------------------------------

    def transpose(self) -> "Matrix":
        grid = tuple(
            tuple(self.entries[i][j] for i in range(self.rows))
            for j in range(self.cols)
        )
        return Matrix._trusted(grid, self.cols, self.rows)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        bt = other.transpose().entries
        grid = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
            for row in self.entries
        )
        return Matrix._trusted(grid, self.rows, other.cols)

    def hadamard(self, other: "Matrix") -> "Matrix":
        """Entrywise product with a matrix of the same shape."""
        self._require_same_shape(other, "take the entrywise product of")
        grid = tuple(
            tuple(a * b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)
        )
        return Matrix._trusted(grid, self.rows, self.cols)

    def det(self) -> Fraction:
        """Exact determinant via fraction-free elimination.

        Rows are scaled to integers first, so the elimination works on
        integers throughout (Bareiss), bounding intermediate growth.  The
        determinant of the 0x0 matrix is 1 (empty product).
        """
        self._require_square("determinant")
        n = self.rows
        if n == 0:
            return Fraction(1)
        scale = 1
        int_rows = []
        for row in self.entries:
            lcm = math.lcm(*(x.denominator for x in row))
            scale *= lcm
            int_rows.append([x.numerator * (lcm // x.denominator) for x in row])
        return Fraction(_int_bareiss_det(int_rows), scale)

    def inverse(self) -> "Matrix":
        """Exact inverse; adjugate-based for n <= 4, elimination above that.

        Raises SingularMatrixError when the determinant is zero.
        """
        self._require_square("inverse")
        if self.rows <= 4:
            return inverse_adjugate(self)
        return inverse_elimination(self)

    def reversing(self) -> "Matrix":
        """Rotate the matrix by 180 degrees.

        Equals conjugation by the exchange permutation; an involution that
        distributes over the entrywise product.
        """
        self._require_square("reversing")
        n = self.rows
        grid = tuple(
            tuple(self.entries[n - 1 - i][n - 1 - j] for j in range(n))
            for i in range(n)
        )
        return Matrix._trusted(grid, n, n)

    # -- internals ---------------------------------------------------------

    def _require_square(self, op: str) -> None:
        if not self.is_square:
            raise ShapeError(f"{op} requires a square matrix, got {self.rows}x{self.cols}")

    def _require_same_shape(self, other: "Matrix", op: str) -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError(
                f"cannot {op} a {self.rows}x{self.cols} and a {other.rows}x{other.cols} matrix"
            )


@dataclass(frozen=True)
class ReversingPair:
    """The two anti-diagonal permutation matrices of order n.

    Both equal the exchange matrix: each is its own transpose and its own
    inverse, and their product is the identity.  Conjugating by the pair
    rotates a matrix 180 degrees.
    """

    m_rc: Matrix
    m_rr: Matrix


def reversing_pair(n: int) -> ReversingPair:
    ex = Matrix.exchange(n)
    return ReversingPair(m_rc=ex, m_rr=ex)


def _int_bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free elimination determinant of an integer matrix.

    All intermediate divisions are exact by the Sylvester identity; rows
    may be swapped for pivoting (sign tracked).
    """
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def det_cofactor(a: Matrix) -> Fraction:
    """Determinant by recursive first-row cofactor expansion.

    Exponential cost; kept as an independent oracle for the elimination path.
    """
    a._require_square("determinant")

    def rec(grid: list[list[Fraction]]) -> Fraction:
        n = len(grid)
        if n == 0:
            return Fraction(1)
        if n == 1:
            return grid[0][0]
        total = Fraction(0)
        sign = 1
        top = grid[0]
        rest = grid[1:]
        for j in range(n):
            if top[j] != 0:
                sub = [row[:j] + row[j + 1:] for row in rest]
                total += sign * top[j] * rec(sub)
            sign = -sign
        return total

    return rec([list(row) for row in a.entries])


def minor(a: Matrix, i: int, j: int) -> Fraction:
    """Determinant of the submatrix with row i and column j deleted (1-based)."""
    a._require_square("minor")
    n = a.rows
    if n < 2:
        raise ShapeError(f"minors require at least a 2x2 matrix, got {n}x{n}")
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"minor index ({i}, {j}) out of range for a {n}x{n} matrix")
    grid = tuple(
        tuple(row[:j - 1] + row[j:])
        for r, row in enumerate(a.entries)
        if r != i - 1
    )
    return Matrix._trusted(grid, n - 1, n - 1).det()


def cofactor(a: Matrix, i: int, j: int) -> Fraction:
    """Signed minor: (-1)^(i+j) times the (i, j) minor (1-based indices)."""
    m = minor(a, i, j)
    return m if (i + j) % 2 == 0 else -m


def adjugate(a: Matrix) -> Matrix:
    """Transpose of the cofactor matrix; satisfies A·adj(A) = det(A)·I."""
    a._require_square("adjugate")
    n = a.rows
    if n == 0:
        return Matrix.zeros(0, 0)
    if n == 1:
        return Matrix([[1]])
    grid = tuple(
        tuple(cofactor(a, j + 1, i + 1) for j in range(n)) for i in range(n)
    )
    return Matrix._trusted(grid, n, n)


def inverse_adjugate(a: Matrix) -> Matrix:
    """Inverse as adjugate divided by the determinant."""
    d = a.det()
    if d == 0:
        raise SingularMatrixError()
    if a.rows == 0:
        return Matrix.zeros(0, 0)
    return adjugate(a) * (Fraction(1) / d)


def inverse_elimination(a: Matrix) -> Matrix:
    """Inverse by exact Gauss-Jordan elimination over the rationals."""
    a._require_square("inverse")
    n = a.rows
    work = [list(row) for row in a.entries]
    inv = [
        [Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)
    ]
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if work[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            raise SingularMatrixError()
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
        pivot = work[col][col]
        if pivot != 1:
            work[col] = [x / pivot for x in work[col]]
            inv[col] = [x / pivot for x in inv[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return Matrix(inv)
