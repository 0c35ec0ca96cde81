"""Central charges, strong-generator inventories and affine coset levels.

The W-algebra attached to (sl(N), x, f) is handled through its numerical
shadow only: the central charge as an exact rational function of the level k,
the conformal weights and centralizer-representation labels of a set of strong
generators, and the shifted levels of the affine subalgebra generated by the
weight-one fields.  Two families get the full representation-theoretic
treatment: hooks (m, 1^n), whose weight-one subalgebra is gl(n), and
rectangles (q^m), whose weight-one subalgebra is sl(m).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import CriticalLevelError, UnsupportedFamilyError
from .exact import RF_X, RationalFn
from .liealg import Partition, dynkin_grading, graded_dims, x_norm


class Family(Enum):
    HOOK = "hook"
    RECTANGULAR = "rectangular"
    GENERAL = "general"


@dataclass(frozen=True)
class FamilyParams:
    """A partition together with its recognized family and family parameters.

    Hooks store ``arm`` = m (the long row) and ``legs`` = n (the number of
    trailing 1s); rectangles store ``block`` = q (the common part) and
    ``blocks`` = m (the number of parts).
    """

    partition: Partition
    family: Family
    arm: int | None = None
    legs: int | None = None
    block: int | None = None
    blocks: int | None = None

    @property
    def h_vee(self) -> int:
        """Dual Coxeter number of sl(N), namely N."""
        return self.partition.size

    @classmethod
    def from_partition(cls, p: Partition) -> "FamilyParams":
        parts = p.parts
        if len(parts) >= 2 and all(x == 1 for x in parts[1:]):
            return cls(p, Family.HOOK, arm=parts[0], legs=len(parts) - 1)
        if len(parts) >= 2 and parts[0] >= 2 and all(x == parts[0] for x in parts):
            return cls(p, Family.RECTANGULAR, block=parts[0], blocks=len(parts))
        return cls(p, Family.GENERAL)

    @classmethod
    def hook(cls, m: int, n: int) -> "FamilyParams":
        if m < 1 or n < 1:
            raise ValueError("hook family needs m >= 1 and n >= 1")
        return cls(Partition((m,) + (1,) * n), Family.HOOK, arm=m, legs=n)

    @classmethod
    def rectangular(cls, q: int, m: int) -> "FamilyParams":
        if q < 2 or m < 2:
            raise ValueError("rectangular family needs q >= 2 and m >= 2")
        return cls(Partition((q,) * m), Family.RECTANGULAR, block=q, blocks=m)

    def describe(self) -> str:
        if self.family is Family.HOOK:
            return f"hook (m={self.arm}, n={self.legs})"
        if self.family is Family.RECTANGULAR:
            return f"rectangular (q={self.block}, m={self.blocks})"
        return f"general partition ({self.partition})"


class RepTag(Enum):
    TRIVIAL = "trivial"
    VECTOR = "vector"
    COVECTOR = "covector"
    ADJOINT = "adjoint"
    AFFINE = "affine"
    VIRASORO = "virasoro"


@dataclass(frozen=True)
class RepLabel:
    """How the weight-one subalgebra acts on a generator family, plus its charge.

    The charge is the eigenvalue of the distinguished weight-one field J(0),
    normalized so the charged hook generators carry exactly +1 / -1.
    """

    tag: RepTag
    charge: Fraction = Fraction(0)


@dataclass(frozen=True)
class GeneratorSpec:
    """(conformal weight, representation label, multiplicity) of a strong-generator family."""

    weight: Fraction
    rep: RepLabel
    multiplicity: int


@dataclass(frozen=True)
class CosetLevels:
    """Shifted levels of the affine subalgebra.

    Hooks: k0 is the level of the one-dimensional center (Heisenberg part) and
    k1 the level of the simple part sl(n).  Rectangles: the subalgebra sl(m)
    is simple, so k0 is absent.
    """

    k0: Fraction | None
    k1: Fraction
    coset: str


def central_charge(fp: FamilyParams) -> RationalFn:
    """Central charge of the W-algebra as an exact rational function of the level k.

    Assembled degree by degree from the graded dimensions: the affine Sugawara
    term k dim g/(k + N), the -12 k (x|x) shift, the ghost contribution
    sum_{j>0} dim g_j (12 j^2 - 12 j + 2), and the -dim g_{1/2} / 2 correction.
    """
    p = fp.partition
    grading = dynkin_grading(p)
    dims = graded_dims(grading)
    n_total = p.size
    dim_g = n_total * n_total - 1
    k = RF_X
    ghost = Fraction(0)
    for d2, dim in dims.dim_g.items():
        if d2 > 0:
            j = Fraction(d2, 2)
            ghost += dim * (12 * j * j - 12 * j + 2)
    half_dim = dims.dim_g.get(1, 0)
    return (k * dim_g) / (k + n_total) - k * (12 * x_norm(grading)) - ghost - Fraction(half_dim, 2)


def hook_central_charge_closed(m: int, n: int) -> RationalFn:
    """Closed-form central charge of the hook family, polynomial part expanded in m, n."""
    k = RF_X
    h = m + n
    first = -(k + k * ((1 - h) * h) + h * h) / (k + h)
    second = m * (k - h - m * m * (1 + k + h) + m * (1 + 3 * h))
    return first + second


def rectangular_central_charge_closed(q: int, m: int) -> RationalFn:
    """Closed-form central charge of the rectangular family."""
    k = RF_X
    return (k * (m * (q - q**3) * (k + m * q) + m * m * q * q - 1)) / (k + m * q) - m * m * q * (
        q**3 - 2 * q * q + 1
    )


def hook_coset_charge(m: int, n: int, heisenberg: bool) -> RationalFn:
    """Sugawara central charge of the hook coset gl(n) as a function of k.

    The simple part contributes k1 (n^2-1)/(k1+n) with k1 = k + m - 1; the rank
    one center contributes +1 exactly when its level k0 is nonzero, which is
    the caller's branch choice.
    """
    k = RF_X
    k1 = k + (m - 1)
    charge = (k1 * (n * n - 1)) / (k1 + n)
    if heisenberg:
        charge = charge + 1
    return charge


def rectangular_coset_charge(q: int, m: int) -> RationalFn:
    """Sugawara central charge of the rectangular coset sl(m) as a function of k."""
    k = RF_X
    k1 = q * k + m * q * q - m * q
    return (k1 * (m * m - 1)) / (k1 + m)


def coset_levels(fp: FamilyParams, k: Fraction) -> CosetLevels:
    """Shifted levels of the affine subalgebra at level k."""
    k = Fraction(k)
    if k == -fp.h_vee:
        raise CriticalLevelError(f"level {k} is critical for sl({fp.h_vee})")
    if fp.family is Family.HOOK:
        m, n = fp.arm, fp.legs
        k0 = k + Fraction((m - 1) * (m + n), m)
        k1 = k + (m - 1)
        return CosetLevels(k0, k1, f"gl({n})")
    if fp.family is Family.RECTANGULAR:
        q, m = fp.block, fp.blocks
        k1 = q * k + m * q * q - m * q
        return CosetLevels(None, k1, f"sl({m})")
    raise UnsupportedFamilyError(
        "coset levels are only defined for hook and rectangular nilpotents"
    )


def coset_central_charge(fp: FamilyParams, k: Fraction) -> Fraction:
    """Exact Sugawara central charge of the affine subalgebra at level k."""
    lv = coset_levels(fp, k)
    if fp.family is Family.HOOK:
        n = fp.legs
        charge = Fraction(0)
        if n >= 2:
            if lv.k1 == -n:
                raise CriticalLevelError(f"coset level {lv.k1} is critical for sl({n})")
            charge = lv.k1 * (n * n - 1) / (lv.k1 + n)
        if lv.k0 != 0:
            charge += 1
        return charge
    m = fp.blocks
    if lv.k1 == -m:
        raise CriticalLevelError(f"coset level {lv.k1} is critical for sl({m})")
    return lv.k1 * (m * m - 1) / (lv.k1 + m)


def strong_generators(fp: FamilyParams) -> list[GeneratorSpec]:
    """Strong-generator inventory: one spec per graded piece of the centralizer.

    The multiset of conformal weights always equals {j+1 with multiplicity
    dim g^f_{-j}}.  Hooks and rectangles additionally carry the decomposition
    under the weight-one subalgebra: hooks have n charged generator pairs of
    weight (m+1)/2 transforming as vector/covector of gl(n), rectangles an
    adjoint sl(m) family at every integer weight from 2 to q.
    """
    if fp.family is Family.HOOK:
        m, n = fp.arm, fp.legs
        if m == 1:
            # zero nilpotent: the algebra is the affine vertex algebra of sl(n+1)
            return [GeneratorSpec(Fraction(1), RepLabel(RepTag.AFFINE), (n + 1) ** 2 - 1)]
        specs = [
            GeneratorSpec(Fraction(1), RepLabel(RepTag.AFFINE), n * n),
            GeneratorSpec(Fraction(2), RepLabel(RepTag.VIRASORO), 1),
        ]
        for i in range(3, m + 1):
            specs.append(GeneratorSpec(Fraction(i), RepLabel(RepTag.TRIVIAL), 1))
        w = Fraction(m + 1, 2)
        specs.append(GeneratorSpec(w, RepLabel(RepTag.VECTOR, Fraction(1)), n))
        specs.append(GeneratorSpec(w, RepLabel(RepTag.COVECTOR, Fraction(-1)), n))
        return specs
    if fp.family is Family.RECTANGULAR:
        q, m = fp.block, fp.blocks
        specs = [
            GeneratorSpec(Fraction(1), RepLabel(RepTag.AFFINE), m * m - 1),
            GeneratorSpec(Fraction(2), RepLabel(RepTag.VIRASORO), 1),
        ]
        for i in range(3, q + 1):
            specs.append(GeneratorSpec(Fraction(i), RepLabel(RepTag.TRIVIAL), 1))
        for i in range(2, q + 1):
            specs.append(GeneratorSpec(Fraction(i), RepLabel(RepTag.ADJOINT), m * m - 1))
        return specs
    # general partition: weights and multiplicities from the graded dimensions,
    # labels limited to affine / Virasoro / trivial
    dims = graded_dims(dynkin_grading(fp.partition))
    specs = []
    for d in sorted(dims.dim_gf, reverse=True):
        mult = dims.dim_gf[d]
        weight = 1 + Fraction(-d, 2)
        if d == 0:
            specs.append(GeneratorSpec(weight, RepLabel(RepTag.AFFINE), mult))
        elif d == -2:
            specs.append(GeneratorSpec(weight, RepLabel(RepTag.VIRASORO), 1))
            if mult > 1:
                specs.append(GeneratorSpec(weight, RepLabel(RepTag.TRIVIAL), mult - 1))
        else:
            specs.append(GeneratorSpec(weight, RepLabel(RepTag.TRIVIAL), mult))
    return specs
