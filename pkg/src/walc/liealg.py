"""Partition combinatorics for nilpotent orbits of sl(N).

A nilpotent matrix is identified by the partition of its Jordan block sizes.
From the partition we derive the semisimple grading element of an sl(2)-triple
through the nilpotent: each block of size s contributes the eigenvalue chain
(s-1)/2, (s-3)/2, ..., -(s-1)/2.  All grades are half-integers, so they are
stored doubled (as ints) to keep map keys exact.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import CriticalLevelError, DimensionError, ParseError


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive integers; labels a nilpotent orbit of sl(N)."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if not parts:
            raise ValueError("partition must be nonempty")
        if any(x < 1 for x in parts):
            raise ValueError("partition parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing")
        if sum(parts) < 2:
            raise ValueError("sl(N) needs N >= 2")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        try:
            parts = tuple(int(tok) for tok in text.split(","))
            return cls(parts)
        except (ValueError, TypeError) as exc:
            raise ParseError(f"bad partition {text!r}: {exc}") from exc

    @property
    def size(self) -> int:
        """N, the size of the matrices."""
        return sum(self.parts)

    def dual(self) -> "Partition":
        """Transpose of the Young diagram."""
        cols = [0] * self.parts[0]
        for p in self.parts:
            for i in range(p):
                cols[i] += 1
        return Partition(tuple(cols))

    def centralizer_dim(self) -> int:
        """Dimension of the centralizer of the nilpotent in sl(N): sum of squared dual parts, minus 1."""
        return sum(c * c for c in self.dual().parts) - 1

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class DynkinGrading:
    """Eigenvalue data of the grading element attached to a nilpotent orbit.

    ``doubled_eigenvalues`` holds twice the diagonal entries, sorted descending
    (the dominant arrangement).  The weighted labels are the consecutive
    differences of that arrangement, halved; for orbits of sl(N) they land in
    {0, 1/2, 1}.
    """

    doubled_eigenvalues: tuple[int, ...]

    @property
    def eigenvalues(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(e, 2) for e in self.doubled_eigenvalues)

    @property
    def labels(self) -> tuple[Fraction, ...]:
        e = self.doubled_eigenvalues
        return tuple(Fraction(e[i] - e[i + 1], 2) for i in range(len(e) - 1))


@dataclass(frozen=True)
class GradedDims:
    """Dimensions of the graded pieces of sl(N) and of the nilpotent's centralizer.

    Both maps are keyed by doubled degree.  ``dim_g`` covers all degrees;
    ``dim_gf`` only the non-positive ones, via the staircase identity
    dim g^f_j = dim g_j - dim g_{j-1}.
    """

    dim_g: dict[int, int]
    dim_gf: dict[int, int]

    def g(self, j) -> int:
        return self.dim_g.get(_doubled(j), 0)

    def gf(self, j) -> int:
        return self.dim_gf.get(_doubled(j), 0)

    @property
    def gf_total(self) -> int:
        return sum(self.dim_gf.values())


def _doubled(j) -> int:
    d = Fraction(j) * 2
    if d.denominator != 1:
        raise ValueError(f"grade {j} is not a half-integer")
    return int(d)


def dynkin_grading(p: Partition) -> DynkinGrading:
    """Grading element of an sl(2)-triple through the nilpotent of Jordan type p."""
    doubled = []
    for s in p.parts:
        doubled.extend(range(s - 1, -s, -2))
    doubled.sort(reverse=True)
    return DynkinGrading(tuple(doubled))


def _dims_from_doubled(doubled: list[int]) -> dict[int, int]:
    # dim g_j = #{ordered eigenvalue pairs with difference j}, minus 1 at j = 0
    # (the identity matrix is removed from the Cartan of gl(N)).
    cnt = Counter(doubled)
    dims: dict[int, int] = Counter()
    for a, ca in cnt.items():
        for b, cb in cnt.items():
            dims[a - b] += ca * cb
    dims[0] -= 1
    return {d: v for d, v in dims.items() if v}


def graded_dims(g: DynkinGrading) -> GradedDims:
    dim_g = _dims_from_doubled(list(g.doubled_eigenvalues))
    dim_gf = {}
    for d in sorted(dim_g):
        if d > 0:
            continue
        v = dim_g[d] - dim_g.get(d - 2, 0)
        if v:
            dim_gf[d] = v
    return GradedDims(dim_g, dim_gf)


def x_norm(g: DynkinGrading) -> Fraction:
    """Trace-form norm of the grading element: sum of squared eigenvalues."""
    return Fraction(sum(e * e for e in g.doubled_eigenvalues), 4)


def height_and_np(p: Partition, pp: int) -> tuple[int, bool]:
    """Nilpotency height of the orbit and membership in N_pp = {y : ad(y)^(2 pp) = 0}.

    The height is the largest exponent with ad(f)^h != 0, read off the dominant
    grading element as its eigenvalue spread; ad(f)^(2 pp) vanishes exactly when
    2 pp exceeds the height.
    """
    if pp < 1:
        raise ValueError("pp must be a positive integer")
    doubled = dynkin_grading(p).doubled_eigenvalues
    height = doubled[0] - doubled[-1]
    return height, height < 2 * pp


def hook_even_good_grading_dims(m: int, n: int) -> GradedDims:
    """Graded dimensions for the alternative even good grading of a hook nilpotent.

    For the hook (m, 1^n) with m even, the standard grading is half-integral,
    but the nilpotent also admits an even good grading whose eigenvalue list is
    a length-m chain descending by 1 from (m+2n)(m-1)/(2(m+n)), followed by n
    copies of the chain's last entry.  The staircase identity for centralizer
    dimensions applies to any good grading, so the totals must match the
    standard one.
    """
    if m < 1 or n < 0:
        raise ValueError("hook parameters out of range")
    top = Fraction((m + 2 * n) * (m - 1), 2 * (m + n))
    eigs = [top - i for i in range(m)] + [top - (m - 1)] * n
    doubled = []
    for e in eigs:
        d = 2 * e
        # grades are differences of eigenvalues; doubling keeps them integral
        doubled.append(d)
    # differences of this list are integers, so key dims by doubled integer grades
    cnt = Counter(doubled)
    dims: dict[Fraction, int] = Counter()
    for a, ca in cnt.items():
        for b, cb in cnt.items():
            dims[a - b] += ca * cb
    dims[Fraction(0)] -= 1
    dim_g = {}
    for d, v in dims.items():
        if v == 0:
            continue
        if d.denominator != 1:
            raise ValueError("good grading for the hook is not even")
        dim_g[int(d)] = v
    dim_gf = {}
    for d in sorted(dim_g):
        if d > 0:
            continue
        v = dim_g[d] - dim_g.get(d - 2, 0)
        if v:
            dim_gf[d] = v
    return GradedDims(dim_g, dim_gf)


def weight_pairing_sl(n: int) -> list[list[Fraction]]:
    """Gram matrix of the fundamental weights of sl(n): (w_i, w_j) = min(i,j) - ij/n."""
    return [
        [Fraction(min(i, j)) - Fraction(i * j, n) for j in range(1, n)]
        for i in range(1, n)
    ]


def casimir_sl(n: int, weight) -> Fraction:
    """Casimir eigenvalue (lambda, lambda + 2 rho) for sl(n) in fundamental-weight coordinates."""
    if n < 2:
        raise ValueError("casimir_sl needs n >= 2")
    coords = tuple(int(c) for c in weight)
    if len(coords) != n - 1:
        raise DimensionError(f"sl({n}) weights have {n - 1} coordinates, got {len(coords)}")
    gram = weight_pairing_sl(n)
    total = Fraction(0)
    for i, ci in enumerate(coords):
        if ci == 0:
            continue
        for j, cj in enumerate(coords):
            total += ci * (cj + 2) * gram[i][j]
    return total


def sugawara_h(n: int, k: Fraction, weight) -> Fraction:
    """Conformal weight of an sl(n) highest-weight vector at level k: (lambda, lambda+2rho)/(2(k+n))."""
    k = Fraction(k)
    if k == -n:
        raise CriticalLevelError(f"level {k} is critical for sl({n})")
    return casimir_sl(n, weight) / (2 * (k + n))
