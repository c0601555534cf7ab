"""Construction and structural identities of the combined matrix A ∘ A^{-T}.

Two independent construction routes are provided: the entrywise product of
A with the transpose of its inverse, and the per-entry cofactor formula
(-1)^(i+j) · a_ij · minor_ij / det A.  Every combined matrix fixes the
all-ones vector, so its rows and columns each sum to 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import SingularMatrixError
from .matrices import Matrix, minor
from .rationals import format_rational


@dataclass(frozen=True)
class CombinedResult:
    """A combined matrix together with its source and the source determinant."""

    source: Matrix
    combined: Matrix
    det_source: Fraction

    def render(self) -> str:
        return f"{self.combined.to_text()}\ndet A = {format_rational(self.det_source)}"


def combined(a: Matrix) -> CombinedResult:
    """Entrywise product of ``a`` with the transpose of its inverse.

    Raises SingularMatrixError when det(a) = 0.
    """
    a._require_square("combined matrix")
    d = a.det()
    if d == 0:
        raise SingularMatrixError()
    c = a.hadamard(a.inverse().transpose())
    return CombinedResult(source=a, combined=c, det_source=d)


def combined_matrix(a: Matrix) -> Matrix:
    """The combined matrix alone, without the bookkeeping wrapper."""
    return combined(a).combined


def combined_via_cofactors(a: Matrix) -> Matrix:
    """Combined matrix from the cofactor formula, entry by entry.

    Entry (i, j) is (-1)^(i+j) · a_ij · minor_ij / det.  Must agree with
    ``combined`` everywhere; the two routes share no inversion code for
    n > 4.
    """
    a._require_square("combined matrix")
    d = a.det()
    if d == 0:
        raise SingularMatrixError()
    n = a.rows
    if n == 0:
        return Matrix.zeros(0, 0)
    if n == 1:
        return Matrix([[1]])
    grid = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            m = minor(a, i, j)
            term = a.entries[i - 1][j - 1] * m / d
            row.append(term if (i + j) % 2 == 0 else -term)
        grid.append(row)
    return Matrix(grid)


def combined_trace(a: Matrix) -> Fraction:
    """Trace of the combined matrix from diagonal minors: Σ a_ii·minor_ii / det."""
    a._require_square("combined trace")
    d = a.det()
    if d == 0:
        raise SingularMatrixError()
    n = a.rows
    if n == 0:
        return Fraction(0)
    if n == 1:
        return Fraction(1)
    total = sum(
        (a.entries[i - 1][i - 1] * minor(a, i, i) for i in range(1, n + 1)),
        Fraction(0),
    )
    return total / d


def fixed_eigenpair_check(c: Matrix) -> int | None:
    """Check that the all-ones vector is fixed: every row sums to 1 exactly.

    Returns None when the check holds, else the 1-based index of the first
    violating row.
    """
    c._require_square("fixed-vector check")
    for i, s in enumerate(c.row_sums()):
        if s != 1:
            return i + 1
    return None


def reversing_commutes(a: Matrix) -> bool:
    """True iff building the combined matrix commutes with the 180-degree rotation."""
    left = combined(a.reversing()).combined
    right = combined(a).combined.reversing()
    return left == right


def orthogonal_shortcut_check(a: Matrix) -> bool:
    """For orthogonal ``a``, verify C(a) equals the entrywise square a ∘ a.

    Returns True when ``a`` is orthogonal (after verifying the identity,
    which cannot fail for exact input) and False when it is not orthogonal;
    no claim is made in the False case.  Singular input raises.
    """
    a._require_square("orthogonality shortcut")
    d = a.det()
    if d == 0:
        raise SingularMatrixError()
    if not a.is_orthogonal():
        return False
    c = a.hadamard(a.inverse().transpose())
    if c != a.hadamard(a):
        raise ArithmeticError(
            "entrywise square failed to reproduce the combined matrix of an orthogonal input"
        )
    return True


def triangular_identity_check(t: Matrix) -> bool:
    """True iff the combined matrix of the triangular input is the identity.

    Raises ValueError for non-triangular input and SingularMatrixError when
    a diagonal entry is zero.
    """
    t._require_square("triangular check")
    if not t.is_triangular():
        raise ValueError("matrix is not triangular")
    return combined(t).combined == Matrix.identity(t.rows)
