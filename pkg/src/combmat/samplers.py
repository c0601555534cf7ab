"""Seeded generators of exact random elements of structured matrix groups.

Each construction certifies membership by how it is built: nonsingular
samples are rejection-tested on the determinant, integer determinant-±1
samples are products of elementary shear matrices, and orthogonal samples
come from the Cayley transform of a rational skew-symmetric matrix (always
defined, always exactly orthogonal).

Randomness is ``random.Random`` (Mersenne Twister) seeded fresh for every
call, so a given SampleSpec always yields the same matrix and concurrent
sampling with distinct specs shares no state.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import SamplingError, ShapeError
from .matrices import Matrix
from .rationals import format_rational

GROUPS = (
    "general_linear",
    "special_linear_integer",
    "upper_triangular",
    "lower_triangular",
    "diagonal",
    "orthogonal",
    "permutation",
)

_MAX_DRAWS = 1000


@dataclass(frozen=True)
class SampleSpec:
    """Recipe for one random group element.

    ``bound`` caps the magnitude of generated numerators/denominators (and
    of shear multipliers), ``steps`` is the product length for the
    elementary-matrix construction (defaults to 2·dim), and ``det_sign``
    selects the determinant sign where the group supports both (integer
    determinant-±1 samples and orthogonal samples); other groups ignore it.
    """

    group: str
    dim: int
    seed: int
    bound: int = 5
    steps: int | None = None
    det_sign: int = 1

    def __post_init__(self):
        if self.group not in GROUPS:
            raise ValueError(f"unknown group {self.group!r}; expected one of {GROUPS}")
        if self.dim < 1:
            raise ValueError(f"dim must be >= 1, got {self.dim}")
        if self.bound < 1:
            raise ValueError(f"bound must be >= 1, got {self.bound}")
        if self.steps is not None and self.steps < 1:
            raise ValueError(f"steps must be >= 1, got {self.steps}")
        if self.det_sign not in (1, -1):
            raise ValueError(f"det_sign must be 1 or -1, got {self.det_sign}")

    @property
    def resolved_steps(self) -> int:
        return self.steps if self.steps is not None else 2 * self.dim


def _rand_int(rng: random.Random, bound: int) -> int:
    return rng.randint(-bound, bound)

def _rand_nonzero_int(rng: random.Random, bound: int) -> int:
    while True:
        v = rng.randint(-bound, bound)
        if v != 0:
            return v

def _rand_rational(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

def _rand_nonzero_rational(rng: random.Random, bound: int) -> Fraction:
    return Fraction(_rand_nonzero_int(rng, bound), rng.randint(1, bound))


def transvection(n: int, i: int, j: int, c: int | Fraction) -> Matrix:
    """Elementary shear: identity plus ``c`` at position (i, j), 0-based, i != j.

    Has determinant 1 for any ``c``.
    """
    if i == j:
        raise ValueError("shear position must be off-diagonal")
    grid = [[Fraction(1) if r == s else Fraction(0) for s in range(n)] for r in range(n)]
    grid[i][j] = Fraction(c)
    return Matrix(grid)


def cayley(s: Matrix) -> Matrix:
    """Cayley transform (I - S)·(I + S)⁻¹ of a skew-symmetric matrix.

    For rational skew-symmetric S the transform is always defined and
    returns an exactly orthogonal matrix of determinant 1.
    """
    if not s.is_square:
        raise ShapeError("Cayley transform requires a square matrix")
    if s.transpose() != -s:
        raise ValueError("matrix is not skew-symmetric")
    eye = Matrix.identity(s.rows)
    return (eye - s).matmul((eye + s).inverse())


def _sample_general_linear(rng: random.Random, spec: SampleSpec) -> Matrix:
    for _ in range(_MAX_DRAWS):
        m = Matrix(
            [
                [_rand_rational(rng, spec.bound) for _ in range(spec.dim)]
                for _ in range(spec.dim)
            ]
        )
        if m.det() != 0:
            return m
    raise SamplingError(
        f"no nonsingular sample within {_MAX_DRAWS} draws (dim={spec.dim}, bound={spec.bound})"
    )


def _sample_special_linear_integer(rng: random.Random, spec: SampleSpec) -> Matrix:
    n = spec.dim
    if n == 1:
        return Matrix([[spec.det_sign]])
    acc = Matrix.identity(n)
    for _ in range(spec.resolved_steps):
        i = rng.randrange(n)
        j = rng.randrange(n - 1)
        if j >= i:
            j += 1
        acc = acc.matmul(transvection(n, i, j, _rand_nonzero_int(rng, spec.bound)))
    if spec.det_sign == -1:
        acc = acc.matmul(Matrix.diagonal([-1] + [1] * (n - 1)))
    return acc


def _sample_triangular(rng: random.Random, spec: SampleSpec, upper: bool) -> Matrix:
    n = spec.dim
    grid = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        grid[i][i] = _rand_nonzero_rational(rng, spec.bound)
        js = range(i + 1, n) if upper else range(i)
        for j in js:
            grid[i][j] = _rand_rational(rng, spec.bound)
    return Matrix(grid)


def _sample_diagonal(rng: random.Random, spec: SampleSpec) -> Matrix:
    return Matrix.diagonal(
        [_rand_nonzero_rational(rng, spec.bound) for _ in range(spec.dim)]
    )


def _sample_orthogonal(rng: random.Random, spec: SampleSpec) -> Matrix:
    n = spec.dim
    grid = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = _rand_rational(rng, spec.bound)
            grid[i][j] = v
            grid[j][i] = -v
    q = cayley(Matrix(grid))
    if spec.det_sign == -1:
        q = Matrix.diagonal([-1] + [1] * (n - 1)).matmul(q)
    return q


def _sample_permutation(rng: random.Random, spec: SampleSpec) -> Matrix:
    n = spec.dim
    perm = list(range(n))
    rng.shuffle(perm)
    grid = [[Fraction(0)] * n for _ in range(n)]
    for i, p in enumerate(perm):
        grid[i][p] = Fraction(1)
    return Matrix(grid)


def sample(spec: SampleSpec) -> Matrix:
    """Draw the deterministic sample described by ``spec``."""
    rng = random.Random(spec.seed)
    if spec.group == "general_linear":
        return _sample_general_linear(rng, spec)
    if spec.group == "special_linear_integer":
        return _sample_special_linear_integer(rng, spec)
    if spec.group == "upper_triangular":
        return _sample_triangular(rng, spec, upper=True)
    if spec.group == "lower_triangular":
        return _sample_triangular(rng, spec, upper=False)
    if spec.group == "diagonal":
        return _sample_diagonal(rng, spec)
    if spec.group == "orthogonal":
        return _sample_orthogonal(rng, spec)
    if spec.group == "permutation":
        return _sample_permutation(rng, spec)
    raise ValueError(f"unknown group {spec.group!r}")


def certify(m: Matrix, group: str) -> str | None:
    """Exact membership test; returns None for members, else the reason.

    Triangular and diagonal membership requires a nonzero diagonal (the
    groups contain invertible elements only).
    """
    if group not in GROUPS:
        raise ValueError(f"unknown group {group!r}; expected one of {GROUPS}")
    if not m.is_square:
        return f"matrix is not square ({m.rows}x{m.cols})"
    if group == "general_linear":
        return "det = 0" if m.det() == 0 else None
    if group == "special_linear_integer":
        if not m.is_integer():
            return "entries are not all integers"
        d = m.det()
        if d != 1 and d != -1:
            return f"det = {format_rational(d)} is not 1 or -1"
        return None
    if group in ("upper_triangular", "lower_triangular", "diagonal"):
        if group == "upper_triangular" and not m.is_upper_triangular():
            return "nonzero entry below the diagonal"
        if group == "lower_triangular" and not m.is_lower_triangular():
            return "nonzero entry above the diagonal"
        if group == "diagonal" and not m.is_diagonal():
            return "nonzero off-diagonal entry"
        for i in range(m.rows):
            if m.entries[i][i] == 0:
                return f"zero diagonal entry at ({i + 1}, {i + 1})"
        return None
    if group == "orthogonal":
        return None if m.is_orthogonal() else "M·Mᵀ is not the identity"
    if group == "permutation":
        if m.is_permutation():
            return None
        return "not a 0/1 matrix with a single 1 in every row and column"
    raise AssertionError("unreachable")
