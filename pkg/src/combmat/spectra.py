"""Exact spectral data for combined matrices.

Characteristic polynomials are monic, det(λI - M), computed by the
Faddeev-LeVerrier trace recurrence with a symbolic cofactor-expansion
oracle alongside.  Every combined matrix has eigenvalue 1, so its
characteristic polynomial deflates exactly by (λ - 1); the quotient of
degree up to 3 gets a Galois tag describing the symmetry group of its
splitting field over the rationals.  The 2x2 case is also available in
closed form, including the fixed eigenvector basis and exact
diagonalization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from math import gcd, isqrt, lcm
from typing import NamedTuple, Sequence

from .errors import DeflationError, ShapeError, SingularMatrixError
from .intfactor import divisors
from .matrices import Matrix
from .rationals import format_rational, rat_is_square

GALOIS_IDENTITY = "identity"
GALOIS_ORDER_2 = "order_2"
GALOIS_CYCLIC_3 = "cyclic_3"
GALOIS_SYM_3 = "sym_3"
GALOIS_UNDETERMINED = "undetermined"

_GALOIS_ORDERS = {
    GALOIS_IDENTITY: 1,
    GALOIS_ORDER_2: 2,
    GALOIS_CYCLIC_3: 3,
    GALOIS_SYM_3: 6,
}


class Polynomial:
    """Dense univariate polynomial with exact rational coefficients.

    Coefficients are stored in ascending degree order with trailing zeros
    stripped; the zero polynomial has an empty coefficient tuple and
    degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int | Fraction] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def is_monic(self) -> bool:
        return self.lead == 1

    def __call__(self, x: int | Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return Polynomial(
            [a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=Fraction(0))]
        )

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return Polynomial(
            [a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=Fraction(0))]
        )

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def render(self, var: str = "λ") -> str:
        """Human-readable form, highest degree first, e.g. "λ^2 + 4·λ - 5"."""
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = format_rational(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                term = power if mag == 1 else f"{format_rational(mag)}·{power}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def charpoly(m: Matrix) -> Polynomial:
    """Monic characteristic polynomial det(λI - M).

    Computed by the Faddeev-LeVerrier recurrence: M_1 = M, c_k = -tr(M_k)/k,
    M_{k+1} = M·(M_k + c_k·I).  Exact over the rationals.
    """
    m._require_square("characteristic polynomial")
    n = m.rows
    coeffs_desc = [Fraction(1)]
    mk = None
    c = Fraction(0)
    for k in range(1, n + 1):
        mk = m if k == 1 else m.matmul(mk + c * Matrix.identity(n))
        c = -mk.trace() / k
        coeffs_desc.append(c)
    return Polynomial(list(reversed(coeffs_desc)))


def charpoly_cofactor(m: Matrix) -> Polynomial:
    """Characteristic polynomial by symbolic cofactor expansion of λI - M.

    Exponential cost; the independent oracle for ``charpoly``.
    """
    m._require_square("characteristic polynomial")
    n = m.rows
    grid = [
        [
            Polynomial([-m.entries[i][j], 1]) if i == j else Polynomial([-m.entries[i][j]])
            for j in range(n)
        ]
        for i in range(n)
    ]

    def rec(g: list[list[Polynomial]]) -> Polynomial:
        size = len(g)
        if size == 0:
            return Polynomial([1])
        if size == 1:
            return g[0][0]
        total = Polynomial()
        sign = 1
        top = g[0]
        rest = g[1:]
        for j in range(size):
            if not top[j].is_zero:
                sub = [row[:j] + row[j + 1:] for row in rest]
                term = top[j] * rec(sub)
                total = total + term if sign > 0 else total - term
            sign = -sign
        return total

    return rec(grid)


def synthetic_divide(p: Polynomial, root: int | Fraction) -> tuple[Polynomial, Fraction]:
    """Divide by (λ - root); return (quotient, remainder)."""
    if p.is_zero:
        return Polynomial(), Fraction(0)
    desc = list(reversed(p.coeffs))
    out = [desc[0]]
    for c in desc[1:]:
        out.append(c + root * out[-1])
    rem = out.pop()
    return Polynomial(list(reversed(out))), rem


def deflate_at_one(p: Polynomial) -> Polynomial:
    """Exact division by (λ - 1); requires p(1) = 0.

    Raises DeflationError carrying the nonzero value p(1) otherwise — for a
    supposed combined matrix that is the regression signal that the fixed
    all-ones eigenpair was lost.
    """
    q, rem = synthetic_divide(p, Fraction(1))
    if rem != 0:
        raise DeflationError(rem)
    return q


def rational_roots(p: Polynomial) -> list[tuple[Fraction, int]]:
    """All rational roots with multiplicities, sorted ascending by root.

    Denominators are cleared, candidate roots come from divisor pairs of the
    extreme coefficients, and multiplicities are read off by repeated exact
    deflation.  Candidates u/v are prefiltered with the classic divisibility
    tests (u - v) | p(1) and (u + v) | p(-1) before any exact evaluation.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial does not have a root set")
    roots: list[tuple[Fraction, int]] = []
    k = 0
    while p.coeffs[k] == 0:
        k += 1
    if k > 0:
        roots.append((Fraction(0), k))
        p = Polynomial(p.coeffs[k:])
    if p.degree == 0:
        return sorted(roots)
    denom_lcm = lcm(*(c.denominator for c in p.coeffs))
    ints = [c.numerator * (denom_lcm // c.denominator) for c in p.coeffs]
    content = 0
    for v in ints:
        content = gcd(content, v)
    ints = [v // content for v in ints]
    lead, const = ints[-1], ints[0]
    at_one = sum(ints)
    at_minus_one = sum(v if i % 2 == 0 else -v for i, v in enumerate(ints))
    candidates = sorted(
        {
            s * Fraction(num, den)
            for num in divisors(const)
            for den in divisors(lead)
            if gcd(num, den) == 1
            for s in (1, -1)
        }
    )
    for r in candidates:
        diff = r.numerator - r.denominator
        if (at_one % diff != 0) if diff != 0 else (at_one != 0):
            continue
        total = r.numerator + r.denominator
        if (at_minus_one % total != 0) if total != 0 else (at_minus_one != 0):
            continue
        mult = 0
        while not p.is_zero and p(r) == 0:
            p, _ = synthetic_divide(p, r)
            mult += 1
        if mult:
            roots.append((r, mult))
            if p.degree == 0:
                break
    return sorted(roots)


def _floor_shifted_sqrt(a: int, s: int, sign: int, m: int) -> int:
    """floor((a + sign·sqrt(s)) / m) for integers with s >= 0, m > 0, exact."""
    root = isqrt(s)
    t = (a + sign * root) // m

    def ok(t: int) -> bool:
        # t <= (a + sign*sqrt(s)) / m  <=>  m*t - a <= sign*sqrt(s)
        lhs = m * t - a
        if sign > 0:
            return lhs <= 0 or lhs * lhs <= s
        return lhs <= 0 and lhs * lhs >= s

    while not ok(t):
        t -= 1
    while ok(t + 1):
        t += 1
    return t


def _monic_cubic_integer_roots(p: int, q: int, r: int) -> list[int]:
    """Integer roots of y³ + p·y² + q·y + r, by bisection on monotone pieces.

    The derivative's critical points are located exactly with integer square
    roots, so no divisor enumeration of the constant term is needed.
    """

    def g(y: int) -> int:
        return ((y + p) * y + q) * y + r

    bound = 1 + max(abs(p), abs(q), abs(r))
    s = p * p - 3 * q
    if s <= 0:
        intervals = [(-bound, bound, 1)]
    else:
        t1 = _floor_shifted_sqrt(-p, s, -1, 3)
        t2 = _floor_shifted_sqrt(-p, s, 1, 3)
        intervals = [
            (-bound, min(t1, bound), 1),
            (max(t1 + 1, -bound), min(t2, bound), -1),
            (max(t2 + 1, -bound), bound, 1),
        ]
    roots = []
    for lo, hi, direction in intervals:
        if lo > hi:
            continue
        f_lo, f_hi = direction * g(lo), direction * g(hi)
        if f_lo > 0 or f_hi < 0:
            continue
        while lo < hi:
            mid = (lo + hi) // 2
            if direction * g(mid) < 0:
                lo = mid + 1
            else:
                hi = mid
        if g(lo) == 0 and lo not in roots:
            roots.append(lo)
    return roots


def _cubic_rational_root(q3: Polynomial) -> Fraction | None:
    """A rational root of a degree-3 polynomial, or None.

    Clears denominators, substitutes y = lead·λ to get a monic integer
    cubic, and finds integer roots of that by exact bisection.
    """
    denom_lcm = lcm(*(c.denominator for c in q3.coeffs))
    ints = [c.numerator * (denom_lcm // c.denominator) for c in q3.coeffs]
    content = 0
    for v in ints:
        content = gcd(content, v)
    a0, a1, a2, a3 = (v // content for v in ints)
    roots_y = _monic_cubic_integer_roots(a2, a1 * a3, a0 * a3 * a3)
    if not roots_y:
        return None
    return Fraction(roots_y[0], a3)


def _tag_quadratic(q: Polynomial) -> str:
    c, b, a = q.coeffs
    disc = b * b - 4 * a * c
    return GALOIS_IDENTITY if rat_is_square(disc) is not None else GALOIS_ORDER_2


def galois_tag(q: Polynomial) -> str:
    """Symmetry class of the splitting field of a rational polynomial.

    Degree 0/1: identity.  Degree 2: identity when the discriminant is a
    rational square (the polynomial splits over the rationals), else a
    2-element group.  Degree 3: peel off a rational root if one exists and
    classify the quadratic factor; an irreducible cubic is cyclic of order 3
    when its discriminant is a rational square and the full symmetric group
    on 3 letters otherwise.  Higher degrees return ``undetermined``.
    """
    if q.is_zero:
        raise ValueError("cannot classify the zero polynomial")
    d = q.degree
    if d <= 1:
        return GALOIS_IDENTITY
    if d == 2:
        return _tag_quadratic(q)
    if d == 3:
        root = _cubic_rational_root(q)
        if root is not None:
            quad, rem = synthetic_divide(q, root)
            assert rem == 0
            return _tag_quadratic(quad)
        a, b, c, dd = q.coeffs[3], q.coeffs[2], q.coeffs[1], q.coeffs[0]
        disc = (
            18 * a * b * c * dd
            - 4 * b**3 * dd
            + b**2 * c**2
            - 4 * a * c**3
            - 27 * a**2 * dd**2
        )
        return GALOIS_CYCLIC_3 if rat_is_square(disc) is not None else GALOIS_SYM_3
    return GALOIS_UNDETERMINED


def galois_tag_order(tag: str) -> int | None:
    """Group order for a tag; None for ``undetermined``."""
    return _GALOIS_ORDERS.get(tag)


@dataclass(frozen=True)
class EigenReport:
    """Spectral bundle for a matrix with guaranteed eigenvalue 1.

    ``quotient`` is the characteristic polynomial divided by (λ - 1);
    ``eigenvectors_2x2`` carries the fixed (1, 1)/(1, -1) basis and is only
    populated for 2x2 inputs where that basis is exact.
    """

    charpoly: Polynomial
    quotient: Polynomial
    rational_eigenvalues: tuple[tuple[Fraction, int], ...]
    galois_tag: str
    eigenvectors_2x2: tuple[Matrix, Matrix] | None = None


def eigen_report(m: Matrix) -> EigenReport:
    """Build the full spectral report for a matrix that fixes the all-ones vector.

    Raises DeflationError when 1 is not an eigenvalue.
    """
    p = charpoly(m)
    q = deflate_at_one(p)
    roots = tuple(rational_roots(p)) if not p.is_zero else ()
    tag = galois_tag(q) if not q.is_zero else GALOIS_IDENTITY
    vecs = None
    if m.rows == 2:
        lam2 = -q.coeffs[0]
        v1 = Matrix.column([1, 1])
        v2 = Matrix.column([1, -1])
        if m.matmul(v1) == v1 and m.matmul(v2) == lam2 * v2:
            vecs = (v1, v2)
    return EigenReport(
        charpoly=p,
        quotient=q,
        rational_eigenvalues=roots,
        galois_tag=tag,
        eigenvectors_2x2=vecs,
    )


_P_2X2 = Matrix([[1, -1], [1, 1]])
_P_INV_2X2 = Matrix(
    [[Fraction(1, 2), Fraction(1, 2)], [Fraction(-1, 2), Fraction(1, 2)]]
)


@dataclass(frozen=True)
class CombinedEigen2:
    """Closed-form spectral data of a 2x2 combined matrix.

    ``p`` has the eigenvector columns (1,1) and (-1,1), ``d`` is
    diag(1, det C), and ``p_inv`` is the exact inverse of ``p``; the
    product p·d·p_inv reproduces the combined matrix.
    """

    report: EigenReport
    combined: Matrix
    det_combined: Fraction
    p: Matrix
    d: Matrix
    p_inv: Matrix


def _det_2x2(a: Matrix) -> Fraction:
    if a.rows != 2 or a.cols != 2:
        raise ShapeError(f"expected a 2x2 matrix, got {a.rows}x{a.cols}")
    e = a.entries
    return e[0][0] * e[1][1] - e[0][1] * e[1][0]


def combined2_closed_form(a: Matrix) -> CombinedEigen2:
    """Complete closed-form theory of the 2x2 combined matrix.

    Everything is computed from the four entries of ``a`` alone, never
    through the general inversion path, so the result can serve as an
    independent cross-check of that path.
    """
    d = _det_2x2(a)
    if d == 0:
        raise SingularMatrixError()
    e = a.entries
    diag_prod = e[0][0] * e[1][1]
    anti_prod = e[0][1] * e[1][0]
    trace_c = 2 * diag_prod / d
    det_c = (diag_prod + anti_prod) / d
    cp = Polynomial([det_c, -trace_c, 1])
    quotient = deflate_at_one(cp)
    roots = tuple(rational_roots(cp))
    combined_closed = Matrix(
        [[diag_prod / d, -anti_prod / d], [-anti_prod / d, diag_prod / d]]
    )
    report = EigenReport(
        charpoly=cp,
        quotient=quotient,
        rational_eigenvalues=roots,
        galois_tag=galois_tag(quotient),
        eigenvectors_2x2=(Matrix.column([1, 1]), Matrix.column([1, -1])),
    )
    return CombinedEigen2(
        report=report,
        combined=combined_closed,
        det_combined=det_c,
        p=_P_2X2,
        d=Matrix.diagonal([Fraction(1), det_c]),
        p_inv=_P_INV_2X2,
    )


class Sl2ClosedForm(NamedTuple):
    trace: Fraction
    det_combined: Fraction
    charpoly: Polynomial


def sl2_closed_form(a: Matrix) -> Sl2ClosedForm:
    """Closed forms for 2x2 sources with determinant ±1.

    With ε = det A (so 1/ε = ε): trace C = 2 + 2ε·a12·a21, det C = trace - 1,
    and the characteristic polynomial is λ² - trace·λ + det C.
    """
    d = _det_2x2(a)
    if d != 1 and d != -1:
        raise ValueError(f"determinant must be 1 or -1, got {d}")
    e = a.entries
    trace_c = 2 + 2 * d * e[0][1] * e[1][0]
    det_c = trace_c - 1
    return Sl2ClosedForm(
        trace=Fraction(trace_c),
        det_combined=Fraction(det_c),
        charpoly=Polynomial([det_c, -trace_c, 1]),
    )


def matrix_function_2x2(a: Matrix, f1: Fraction, f2: Fraction) -> Matrix:
    """Apply a scalar function to the 2x2 combined matrix through its eigenbasis.

    The caller supplies the exact values f1 at eigenvalue 1 and f2 at
    eigenvalue det C(a); the result is P·diag(f1, f2)·P⁻¹.  With the
    identity values this reproduces the combined matrix itself.
    """
    d = _det_2x2(a)
    if d == 0:
        raise SingularMatrixError()
    return _P_2X2.matmul(Matrix.diagonal([f1, f2])).matmul(_P_INV_2X2)
