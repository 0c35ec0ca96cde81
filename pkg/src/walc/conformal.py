"""Conformal levels, strongly-collapsing verdicts, admissibility and decompositions.

A level k is conformal when the Sugawara conformal vector of the affine
subalgebra equals the W-algebra's own, detected here by exact equality of
central charges.  For hooks the coset charge is genuinely piecewise in k: the
rank-one center contributes +1 to the charge except at the single level where
its shifted level k0 vanishes, so the solver treats the generic branch as a
rational-function equation and tests the k0 = 0 point separately.

At a conformal level, a strong generator can survive the quotient by the
singular conformal vector only if its Sugawara weight C (computed from the
coset levels and the Casimir of its representation label) equals its conformal
weight.  "Strongly collapsing" is certified when no generator outside the
affine part passes that test.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import (
    CriticalLevelError,
    HypothesisError,
    NotConformalError,
    UnsupportedFamilyError,
)
from .exact import ratfn_eval, rational_roots
from .liealg import sugawara_h
from .walgebra import (
    CosetLevels,
    Family,
    FamilyParams,
    RepTag,
    central_charge,
    coset_central_charge,
    coset_levels,
    hook_coset_charge,
    rectangular_coset_charge,
    strong_generators,
)


class Branch(Enum):
    GENERIC = "generic"        # k0 != 0 (hooks); always for rectangles
    DEGENERATE = "degenerate"  # k0 = 0, center drops out of the coset charge


class Status(Enum):
    STRONGLY_COLLAPSING = "strongly-collapsing"
    NOT_STRONGLY_COLLAPSING = "not-strongly-collapsing"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ConformalLevel:
    k: Fraction
    branch: Branch
    tags: tuple[str, ...]  # matching closed forms among H1..H4 / R1..R3


@dataclass(frozen=True)
class Note:
    """An annotation attached to a verdict or report, with a stable citation tag."""

    tag: str
    text: str


@dataclass(frozen=True)
class CValue:
    """Sugawara weight vs conformal weight for one strong-generator family."""

    rep: str
    charge: Fraction
    weight: Fraction
    sugawara: Fraction
    multiplicity: int


@dataclass(frozen=True)
class Verdict:
    family: str
    level: ConformalLevel
    coset: CosetLevels
    central: Fraction
    c_values: tuple[CValue, ...]
    status: Status
    target: str | None
    admissible: "AdmissibleForm"
    notes: tuple[Note, ...]


@dataclass(frozen=True)
class AdmissibleForm:
    """Lowest-terms shift k + N = p'/p and the admissibility data derived from it."""

    p_prime: int
    p: int
    admissible: bool
    d_kw: Fraction | None


@dataclass(frozen=True)
class DecompSummand:
    """One charge sector of the module decomposition of a hook W-algebra."""

    charge: int
    sl_weight: tuple[int, ...]
    heis_label: Fraction
    sl_top_weight: Fraction


@dataclass(frozen=True)
class DecompositionReport:
    family: str
    case: int
    k: Fraction
    coset: CosetLevels | None
    refusal: Note | None
    conditional: bool
    summands: tuple[DecompSummand, ...]
    notes: tuple[Note, ...]


def hook_level_closed_forms(m: int, n: int) -> dict[str, Fraction]:
    """The closed-form conformal levels of the hook family.

    H1 needs n >= 2 and H3 needs m >= 2; the H4 point (where k0 = 0) is also
    restricted to m >= 2, since for m = 1 it degenerates to k = 0 where the
    whole coset is trivial.
    """
    h = m + n
    out: dict[str, Fraction] = {}
    if n >= 2:
        out["H1"] = Fraction(-m * h, m + 1)
    out["H2"] = Fraction(-((m - 1) * h - 1), m)
    if m >= 2:
        out["H3"] = Fraction(-((m - 2) * h + 1), m - 1)
        out["H4"] = Fraction(-(m - 1) * h, m)
    return out


def rectangular_level_closed_forms(q: int, m: int) -> dict[str, Fraction]:
    """The closed-form conformal levels of the rectangular family."""
    return {
        "R1": Fraction(-m * q * q, q + 1),
        "R2": Fraction(-m * q * q + m * q - 1, q),
        "R3": Fraction(-m * q * q + m * q + 1, q),
    }


def level_closed_forms(fp: FamilyParams) -> dict[str, Fraction]:
    if fp.family is Family.HOOK:
        return hook_level_closed_forms(fp.arm, fp.legs)
    if fp.family is Family.RECTANGULAR:
        return rectangular_level_closed_forms(fp.block, fp.blocks)
    raise UnsupportedFamilyError(
        "closed-form conformal levels exist only for hook and rectangular nilpotents"
    )


def _tags_for(fp: FamilyParams, k: Fraction) -> tuple[str, ...]:
    return tuple(sorted(tag for tag, v in level_closed_forms(fp).items() if v == k))


def conformal_levels(fp: FamilyParams) -> list[ConformalLevel]:
    """All rational levels where the affine coset embeds conformally.

    Generic branch: clear denominators in (W charge) - (coset charge) and take
    the rational roots, discarding roots that sit on a pole of either side.
    Hooks then get the isolated k0 = 0 candidate checked against the coset
    charge without the center's +1; for m = 1 that candidate is skipped because
    it collapses to k = 0, where both coset levels vanish and the comparison is
    vacuous.
    """
    charge = central_charge(fp)
    if fp.family is Family.HOOK:
        generic = hook_coset_charge(fp.arm, fp.legs, heisenberg=True)
    elif fp.family is Family.RECTANGULAR:
        generic = rectangular_coset_charge(fp.block, fp.blocks)
    else:
        raise UnsupportedFamilyError(
            "the conformal-level solver supports hook and rectangular nilpotents only"
        )
    levels: list[ConformalLevel] = []
    diff = charge - generic
    for root in sorted(rational_roots(diff.num)):
        if charge.den(root) == 0 or generic.den(root) == 0:
            continue
        if fp.family is Family.HOOK:
            if coset_levels(fp, root).k0 == 0:
                continue  # wrong branch: the center's +1 does not apply here
        levels.append(ConformalLevel(root, Branch.GENERIC, _tags_for(fp, root)))
    if fp.family is Family.HOOK and fp.arm >= 2:
        m, n = fp.arm, fp.legs
        candidate = Fraction(-(m - 1) * (m + n), m)  # the unique solution of k0 = 0
        degenerate = hook_coset_charge(m, n, heisenberg=False)
        if (
            charge.den(candidate) != 0
            and degenerate.den(candidate) != 0
            and ratfn_eval(charge, candidate) == ratfn_eval(degenerate, candidate)
        ):
            levels.append(ConformalLevel(candidate, Branch.DEGENERATE, _tags_for(fp, candidate)))
    levels.sort(key=lambda lv: lv.k)
    return levels


def admissibility(fp: FamilyParams, k: Fraction) -> AdmissibleForm:
    """Admissibility of k for sl(N): k + N = p'/p in lowest terms with p' >= N.

    When admissible, also reports the conformal weight of the generator of the
    image of the maximal ideal, (p' + 1 - N)(p - s) with s the eigenvalue
    spread (largest part minus 1) pairing the highest-root coweight against the
    grading element.
    """
    k = Fraction(k)
    h = fp.h_vee
    if k == -h:
        raise CriticalLevelError(f"level {k} is critical for sl({h})")
    shifted = k + h
    p_prime, p = shifted.numerator, shifted.denominator
    adm = p_prime >= h
    d_kw = None
    if adm:
        spread = fp.partition.parts[0] - 1
        d_kw = Fraction((p_prime + 1 - h) * (p - spread))
    return AdmissibleForm(p_prime, p, adm, d_kw)


def _hook_charged_c(fp: FamilyParams, lv: CosetLevels) -> Fraction:
    """Sugawara weight of the charged hook generators at the given coset levels."""
    m, n = fp.arm, fp.legs
    total = Fraction(0)
    if lv.k0 != 0:
        total += Fraction(m + n, 2 * m * n) / lv.k0
    if n >= 2:
        if lv.k1 == -n:
            raise CriticalLevelError(f"coset level {lv.k1} is critical for sl({n})")
        total += Fraction(n * n - 1) / (2 * n * (lv.k1 + n))
    return total


def _rect_adjoint_c(fp: FamilyParams, lv: CosetLevels) -> Fraction:
    m = fp.blocks
    if lv.k1 == -m:
        raise CriticalLevelError(f"coset level {lv.k1} is critical for sl({m})")
    return Fraction(m) / (lv.k1 + m)


def _format_rat(x: Fraction) -> str:
    return str(x)


def _hook_target(fp: FamilyParams, lv: CosetLevels) -> str:
    parts = []
    if fp.legs >= 2:
        parts.append(f"V_{_format_rat(lv.k1)}(sl({fp.legs}))")
    if lv.k0 != 0:
        parts.append(f"M({_format_rat(lv.k0)})")
    return " (x) ".join(parts) if parts else "the trivial vertex algebra"


def collapse_check(fp: FamilyParams, k: Fraction) -> Verdict:
    """Classify a conformal level as strongly collapsing or not.

    Requires the central charges to match at k (otherwise NotConformalError,
    carrying both values).  The verdict is strongly-collapsing exactly when
    every generator family outside the affine part and the conformal vector
    has Sugawara weight different from its conformal weight; when some pair
    coincides, the known structure results for the charged hook generators
    settle the H1/H2 levels as not strongly collapsing, and everything else is
    reported inconclusive with the relevant annotations.
    """
    k = Fraction(k)
    if fp.family is Family.GENERAL:
        raise UnsupportedFamilyError(
            "collapse analysis supports hook and rectangular nilpotents only"
        )
    w_charge = ratfn_eval(central_charge(fp), k)
    coset_charge = coset_central_charge(fp, k)
    if w_charge != coset_charge:
        raise NotConformalError(k, w_charge, coset_charge)
    lv = coset_levels(fp, k)
    branch = Branch.DEGENERATE if (fp.family is Family.HOOK and lv.k0 == 0) else Branch.GENERIC
    level = ConformalLevel(k, branch, _tags_for(fp, k))
    adm = admissibility(fp, k)

    cvals: list[CValue] = []
    for spec in strong_generators(fp):
        if spec.rep.tag in (RepTag.AFFINE, RepTag.VIRASORO):
            continue
        if spec.rep.tag is RepTag.TRIVIAL:
            c = Fraction(0)
        elif spec.rep.tag in (RepTag.VECTOR, RepTag.COVECTOR):
            c = _hook_charged_c(fp, lv)
        else:
            c = _rect_adjoint_c(fp, lv)
        cvals.append(
            CValue(spec.rep.tag.value, spec.rep.charge, spec.weight, c, spec.multiplicity)
        )

    notes: list[Note] = []
    notes.append(_admissibility_note(fp, adm))

    target: str | None = None
    if cvals and all(cv.sugawara != cv.weight for cv in cvals):
        status = Status.STRONGLY_COLLAPSING
        if fp.family is Family.HOOK:
            target = _hook_target(fp, lv)
            notes.append(
                Note(
                    "hook-strongly-collapsing",
                    "every generator outside the affine part has Sugawara weight different "
                    f"from its conformal weight; the quotient is {target}",
                )
            )
        else:
            target = f"V_{_format_rat(lv.k1)}(sl({fp.blocks}))"
            notes.append(
                Note(
                    "rect-strongly-collapsing",
                    f"the adjoint generator families all drop; the quotient is {target}",
                )
            )
    elif fp.family is Family.HOOK and ({"H1", "H2"} & set(level.tags)):
        status = Status.NOT_STRONGLY_COLLAPSING
        notes.append(
            Note(
                "hook-not-strongly-collapsing",
                "the charged generators are singular-vector-free over the quotient ideal, "
                "so they survive: not strongly collapsing",
            )
        )
    else:
        status = Status.INCONCLUSIVE

    notes.extend(_known_results_notes(fp, level, adm))
    return Verdict(
        family=fp.describe(),
        level=level,
        coset=lv,
        central=w_charge,
        c_values=tuple(cvals),
        status=status,
        target=target,
        admissible=adm,
        notes=tuple(notes),
    )


def _admissibility_note(fp: FamilyParams, adm: AdmissibleForm) -> Note:
    h = fp.h_vee
    if adm.admissible:
        return Note(
            "admissible-level",
            f"k + {h} = {adm.p_prime}/{adm.p} with {adm.p_prime} >= {h}: admissible; "
            f"the reduced maximal-ideal generator has conformal weight {adm.d_kw}",
        )
    return Note(
        "non-admissible-level",
        f"k + {h} = {adm.p_prime}/{adm.p} with {adm.p_prime} < {h}: not admissible",
    )


def _known_results_notes(
    fp: FamilyParams, level: ConformalLevel, adm: AdmissibleForm
) -> list[Note]:
    notes: list[Note] = []
    tags = set(level.tags)
    if fp.family is Family.HOOK:
        m, n = fp.arm, fp.legs
        if m == 1:
            notes.append(
                Note(
                    "hook-affine-case",
                    "the nilpotent is zero, so the algebra is the affine vertex algebra of "
                    f"sl({n + 1}) and this is a conformal level of its gl({n}) subalgebra",
                )
            )
        if tags & {"H1", "H2"}:
            if adm.admissible:
                notes.append(
                    Note(
                        "admissible-non-collapsing",
                        "admissible level: the maximal ideal is generated by the singular "
                        "conformal vector, so the level is not collapsing at all",
                    )
                )
            elif "H1" in tags:
                notes.append(
                    Note(
                        "H1-non-collapsing-conjecture",
                        "conjecturally not collapsing (proved only for admissible levels)",
                    )
                )
        if "H1" in tags and n == 2 and m >= 2:
            notes.append(
                Note(
                    "hook-logarithmic-extension",
                    f"known realization: a logarithmic extension of the level -2+1/{m + 1} "
                    f"gl(2) affine vertex algebra; the level is not collapsing",
                )
            )
        if "H2" in tags and n == 2 and m % 3 == 0:
            p = m // 3
            notes.append(
                Note(
                    "hook-collapsing-not-strongly",
                    f"known collapsing level that is not strongly collapsing: the simple "
                    f"quotient is V_{_format_rat(Fraction(1 - 2 * p, p))}(sl(2)) (x) Heisenberg",
                )
            )
    else:
        m = fp.blocks
        if "R2" in tags and m == 2:
            if fp.block == 2:
                notes.append(
                    Note(
                        "rect-R2-2-2-weyl-orbifold",
                        "known: not collapsing; the simple quotient is an orbifold of the "
                        "rank-two Weyl vertex algebra",
                    )
                )
            else:
                notes.append(
                    Note(
                        "rect-R2-m2-conjecture",
                        "open case: conjecturally not collapsing, expected isomorphic to the "
                        "two-row short-nilpotent algebra at level -5/2",
                    )
                )
        if "R2" in tags and m >= 3:
            notes.append(
                Note(
                    "rect-never-admissible",
                    "this level is never admissible, so the collapse is outside the reach of "
                    "asymptotic-data methods",
                )
            )
    return notes


def h_mu(fp: FamilyParams, case: int) -> Fraction:
    """Conformal weight of a coset-primitive vector of adjoint sl(n)-weight.

    Case 1 evaluates at the H1 level, case 2 at the H2 level.  The closed forms
    are (m+1) + (m+1)/(n-1) and m - m/(n+1); both are recomputed through the
    Sugawara weight of the adjoint at the shifted coset level as a consistency
    check.
    """
    if fp.family is not Family.HOOK:
        raise UnsupportedFamilyError("primitive-vector weights are a hook-family computation")
    m, n = fp.arm, fp.legs
    if case == 1:
        if n < 2:
            raise HypothesisError("case 1 needs n >= 2")
        value = Fraction((m + 1) * n, n - 1)
    elif case == 2:
        if n < 2:
            raise HypothesisError("case 2 needs n >= 2 for the adjoint weight to exist")
        value = Fraction(m * n, n + 1)
    else:
        raise HypothesisError(f"case must be 1 or 2, got {case}")
    key = "H1" if case == 1 else "H2"
    k = hook_level_closed_forms(m, n)[key]
    k1 = coset_levels(fp, k).k1
    adjoint = (2,) if n == 2 else (1,) + (0,) * (n - 3) + (1,)
    recomputed = sugawara_h(n, k1, adjoint)
    if recomputed != value:
        raise AssertionError(
            f"closed form {value} disagrees with Sugawara recomputation {recomputed}"
        )
    return value


def decomposition(fp: FamilyParams, case: int, charge_range: int) -> DecompositionReport:
    """Charge-sector decomposition of a hook W-algebra at the H1 or H2 level.

    Each integer charge sector is an irreducible module for the coset: the
    simple sl(n) part contributes the highest weight l*w_1 (l >= 0) or
    |l|*w_{n-1} (l < 0) at level k1, and the center a rank-one module labelled
    by the charge.  This holds when the sector-mixing weight (m+1)/(n-1)
    (case 1) or m/(n+1) (case 2) is not an integer; otherwise a refusal report
    names what failed.  Heisenberg-factor conformal weights are not emitted:
    their normalization is not pinned down by the rank-one level alone.
    """
    if fp.family is not Family.HOOK:
        raise UnsupportedFamilyError("module decompositions are a hook-family computation")
    if case not in (1, 2):
        raise HypothesisError(f"case must be 1 or 2, got {case}")
    m, n = fp.arm, fp.legs
    if n < 2:
        raise HypothesisError("decomposition needs n >= 2")
    if charge_range < 0:
        raise HypothesisError("charge range must be >= 0")
    key = "H1" if case == 1 else "H2"
    k = hook_level_closed_forms(m, n)[key]
    lv = coset_levels(fp, k)
    adm = admissibility(fp, k)
    notes: list[Note] = [_admissibility_note(fp, adm)]

    num, den = (m + 1, n - 1) if case == 1 else (m, n + 1)
    if num % den == 0:
        if case == 1 and n == 2:
            refusal = Note(
                "hook-logarithmic-extension",
                f"no charge-sector decomposition of this form: the algebra is a logarithmic "
                f"extension of the level -2+1/{m + 1} gl(2) affine vertex algebra and each "
                f"charge sector is an infinite sum of coset modules",
            )
        else:
            refusal = Note(
                "integral-mixing-weight",
                f"hypothesis failed: ({num})/({den}) = {num // den} is an integer, so a "
                f"charge-zero primitive vector of adjoint weight cannot be excluded",
            )
        return DecompositionReport(
            family=fp.describe(),
            case=case,
            k=k,
            coset=lv,
            refusal=refusal,
            conditional=False,
            summands=(),
            notes=tuple(notes),
        )

    if adm.admissible:
        conditional = False
        notes.append(
            Note(
                "admissible-non-collapsing",
                "admissible level: not collapsing, so the decomposition is unconditional",
            )
        )
    else:
        conditional = True
        notes.append(
            Note(
                "conditional-on-non-collapsing",
                "non-admissible level: the decomposition assumes the level is not collapsing, "
                "which is conjectural here",
            )
        )

    summands = []
    for ell in range(-charge_range, charge_range + 1):
        if ell >= 0:
            coords = (ell,) + (0,) * (n - 2)
        else:
            coords = (0,) * (n - 2) + (-ell,)
        top = sugawara_h(n, lv.k1, coords)
        summands.append(DecompSummand(ell, coords, Fraction(ell), top))
    return DecompositionReport(
        family=fp.describe(),
        case=case,
        k=k,
        coset=lv,
        refusal=None,
        conditional=conditional,
        summands=tuple(summands),
        notes=tuple(notes),
    )
