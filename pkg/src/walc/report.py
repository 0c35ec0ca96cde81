"""Report assembly: structured results with citation tags, canonical JSON, text tables.

Reports are plain dicts built from the domain objects.  Every rational value is
serialized as an exact fraction string (never a float), keys are emitted in
sorted order, and re-serializing a parsed report is byte-identical, so reports
double as reproduction logs.
"""

from __future__ import annotations

import json
from dataclasses import asdict, is_dataclass
from enum import Enum
from fractions import Fraction

from .conformal import DecompositionReport, Verdict, conformal_levels
from .exact import ratfn_eval
from .liealg import GradedDims, Partition, dynkin_grading, graded_dims, height_and_np, x_norm
from .walgebra import (
    FamilyParams,
    central_charge,
    coset_levels,
    strong_generators,
)

COMPUTED = "computed"


def jsonable(value):
    """Recursively convert domain values to JSON-safe data (fractions as strings)."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Enum):
        return value.value
    if is_dataclass(value) and not isinstance(value, type):
        return jsonable(asdict(value))
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (str, int, bool)) or value is None:
        return value
    return str(value)


def canonical_json(report: dict) -> str:
    return json.dumps(jsonable(report), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _table(rows: list[list[str]], header: list[str]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(header)),
        "  ".join("-" * w for w in widths),
    ]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
    return "\n".join(lines)


def _dims_rows(dims: GradedDims) -> list[dict]:
    rows = []
    for d in sorted(dims.dim_g, reverse=True):
        if d < 0:
            continue
        rows.append(
            {
                "degree": str(Fraction(d, 2)),
                "dim_g": dims.dim_g[d],
                "dim_gf": dims.dim_gf.get(-d, 0),
            }
        )
    return rows


def _dims_citation(fp: FamilyParams) -> str:
    if fp.family.value == "hook":
        return "hook-dim-table-odd" if fp.arm % 2 == 1 else "hook-dim-table-even"
    if fp.family.value == "rectangular":
        return "rect-dim-table"
    return COMPUTED


def info_report(p: Partition) -> dict:
    fp = FamilyParams.from_partition(p)
    grading = dynkin_grading(p)
    dims = graded_dims(grading)
    height, _ = height_and_np(p, 1)
    min_p = height // 2 + 1
    gens = [
        {
            "weight": spec.weight,
            "rep": spec.rep.tag.value,
            "charge": spec.rep.charge,
            "multiplicity": spec.multiplicity,
            "citation": "hook-generators"
            if fp.family.value == "hook"
            else ("rect-generators" if fp.family.value == "rectangular" else COMPUTED),
        }
        for spec in strong_generators(fp)
    ]
    return {
        "query": {"command": "info", "partition": str(p)},
        "family": fp.describe(),
        "weighted_dynkin_labels": {
            "labels": [str(x) for x in grading.labels],
            "citation": "weighted-dynkin-diagram",
        },
        "grading_element_norm": {"value": x_norm(grading), "citation": COMPUTED},
        "height": {
            "value": height,
            "smallest_vanishing_power_class": min_p,
            "citation": "nilpotency-height",
        },
        "graded_dims": {"rows": _dims_rows(dims), "citation": _dims_citation(fp)},
        "centralizer_dim": {"value": dims.gf_total, "citation": "centralizer-dim-oracle"},
        "strong_generators": gens,
        "central_charge": {
            "value": str(central_charge(fp)),
            "citation": "central-charge-formula",
        },
    }


def info_text(report: dict) -> str:
    out = [f"partition {report['query']['partition']}: {report['family']}"]
    out.append(f"weighted Dynkin labels: ({', '.join(report['weighted_dynkin_labels']['labels'])})")
    out.append(f"(x|x) = {report['grading_element_norm']['value']}")
    h = report["height"]
    out.append(f"height = {h['value']} (lies in the nilpotency class N_{h['smallest_vanishing_power_class']})")
    out.append("")
    rows = [
        [r["degree"], str(r["dim_g"]), str(r["dim_gf"])] for r in report["graded_dims"]["rows"]
    ]
    out.append(_table(rows, ["degree j", "dim g_(-j)", "dim g^f_(-j)"]))
    out.append(f"centralizer dimension = {report['centralizer_dim']['value']}")
    out.append("")
    rows = [
        [str(g["weight"]), g["rep"], str(g["charge"]), str(g["multiplicity"])]
        for g in jsonable(report["strong_generators"])
    ]
    out.append(_table(rows, ["weight", "rep", "charge", "mult"]))
    out.append("")
    out.append(f"central charge c(k) = {report['central_charge']['value']}")
    return "\n".join(out)


def levels_report(fp: FamilyParams) -> dict:
    charge = central_charge(fp)
    rows = []
    for lv in conformal_levels(fp):
        cl = coset_levels(fp, lv.k)
        rows.append(
            {
                "k": lv.k,
                "branch": lv.branch.value,
                "tags": list(lv.tags),
                "central_charge": ratfn_eval(charge, lv.k),
                "k0": cl.k0,
                "k1": cl.k1,
                "citation": "hook-conformal-levels"
                if fp.family.value == "hook"
                else "rect-conformal-levels",
            }
        )
    return {
        "query": {"command": "levels", "family": fp.describe()},
        "coset": coset_levels(fp, Fraction(0)).coset,
        "levels": rows,
    }


def levels_text(report: dict) -> str:
    out = [f"conformal levels for {report['query']['family']} (coset {report['coset']})"]
    rows = [
        [
            str(r["k"]),
            r["branch"],
            ",".join(r["tags"]) or "-",
            str(r["central_charge"]),
            str(r["k0"]) if r["k0"] is not None else "-",
            str(r["k1"]),
        ]
        for r in report["levels"]
    ]
    out.append(_table(rows, ["k", "branch", "tags", "c", "k0", "k1"]))
    return "\n".join(out)


def collapse_report(verdict: Verdict) -> dict:
    return {
        "query": {
            "command": "collapse",
            "family": verdict.family,
            "level": verdict.level.k,
        },
        "branch": verdict.level.branch.value,
        "tags": list(verdict.level.tags),
        "central_charge": verdict.central,
        "coset": {"type": verdict.coset.coset, "k0": verdict.coset.k0, "k1": verdict.coset.k1},
        "comparisons": [
            {
                "rep": cv.rep,
                "charge": cv.charge,
                "conformal_weight": cv.weight,
                "sugawara_weight": cv.sugawara,
                "multiplicity": cv.multiplicity,
                "survives": cv.sugawara == cv.weight,
                "citation": "collapse-criterion",
            }
            for cv in verdict.c_values
        ],
        "status": verdict.status.value,
        "target": verdict.target,
        "admissible": {
            "p_prime": verdict.admissible.p_prime,
            "p": verdict.admissible.p,
            "admissible": verdict.admissible.admissible,
            "ideal_generator_weight": verdict.admissible.d_kw,
            "citation": "admissible-criterion",
        },
        "notes": [{"citation": n.tag, "text": n.text} for n in verdict.notes],
    }


def collapse_text(report: dict) -> str:
    q = report["query"]
    out = [f"collapse analysis for {q['family']} at k = {q['level']}"]
    out.append(
        f"branch {report['branch']}, tags {','.join(report['tags']) or '-'}, "
        f"central charge {report['central_charge']}"
    )
    cs = report["coset"]
    k0 = cs["k0"] if cs["k0"] is not None else "-"
    out.append(f"coset {cs['type']}: k0 = {k0}, k1 = {cs['k1']}")
    if report["comparisons"]:
        rows = [
            [
                c["rep"],
                str(c["conformal_weight"]),
                str(c["sugawara_weight"]),
                "yes" if c["survives"] else "no",
            ]
            for c in jsonable(report["comparisons"])
        ]
        out.append(_table(rows, ["rep", "weight", "Sugawara", "can survive"]))
    out.append(f"status: {report['status']}")
    if report["target"]:
        out.append(f"target: {report['target']}")
    for n in report["notes"]:
        out.append(f"note [{n['citation']}]: {n['text']}")
    return "\n".join(out)


def admissible_report(fp: FamilyParams, k: Fraction, form) -> dict:
    return {
        "query": {"command": "admissible", "family": fp.describe(), "level": k},
        "shift": {"p_prime": form.p_prime, "p": form.p},
        "admissible": form.admissible,
        "ideal_generator_weight": form.d_kw,
        "citation": "admissible-criterion",
    }


def admissible_text(report: dict) -> str:
    q = report["query"]
    s = report["shift"]
    out = [
        f"admissibility for {q['family']} at k = {q['level']}: "
        f"k + N = {s['p_prime']}/{s['p']}",
        f"admissible: {'yes' if report['admissible'] else 'no'}",
    ]
    if report["ideal_generator_weight"] is not None:
        out.append(f"reduced maximal-ideal generator weight: {report['ideal_generator_weight']}")
    return "\n".join(out)


def decompose_report(rep: DecompositionReport) -> dict:
    data = {
        "query": {"command": "decompose", "family": rep.family, "case": rep.case},
        "level": rep.k,
        "coset": {"k0": rep.coset.k0, "k1": rep.coset.k1, "type": rep.coset.coset}
        if rep.coset
        else None,
        "conditional_on_non_collapsing": rep.conditional,
        "notes": [{"citation": n.tag, "text": n.text} for n in rep.notes],
    }
    if rep.refusal is not None:
        data["refusal"] = {"citation": rep.refusal.tag, "text": rep.refusal.text}
        data["summands"] = []
    else:
        data["summands"] = [
            {
                "charge": s.charge,
                "sl_weight": list(s.sl_weight),
                "heisenberg_label": s.heis_label,
                "sl_top_conformal_weight": s.sl_top_weight,
                "citation": "hook-decomposition",
            }
            for s in rep.summands
        ]
    return data


def decompose_text(report: dict) -> str:
    q = report["query"]
    out = [f"decomposition for {q['family']}, case {q['case']}, at k = {report['level']}"]
    if report["coset"]:
        cs = report["coset"]
        out.append(f"coset {cs['type']}: k0 = {cs['k0']}, k1 = {cs['k1']}")
    if "refusal" in report:
        r = report["refusal"]
        out.append(f"refused [{r['citation']}]: {r['text']}")
    else:
        if report["conditional_on_non_collapsing"]:
            out.append("conditional on the level being non-collapsing")
        rows = [
            [
                str(s["charge"]),
                "(" + ",".join(str(c) for c in s["sl_weight"]) + ")",
                str(s["heisenberg_label"]),
                str(s["sl_top_conformal_weight"]),
            ]
            for s in jsonable(report["summands"])
        ]
        out.append(_table(rows, ["charge", "sl weight", "center label", "sl top weight"]))
    for n in report["notes"]:
        out.append(f"note [{n['citation']}]: {n['text']}")
    return "\n".join(out)


def verify_report(results) -> dict:
    return {
        "query": {"command": "verify-paper"},
        "checks": [
            {
                "criterion": r.criterion,
                "section": r.section,
                "name": r.name,
                "passed": r.passed,
                "detail": r.detail,
            }
            for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }


def verify_text(report: dict) -> str:
    out = []
    for c in report["checks"]:
        mark = "PASS" if c["passed"] else "FAIL"
        out.append(f"{mark}  [{c['criterion']:>2}] {c['name']}: {c['detail']}")
    out.append("all checks passed" if report["all_passed"] else "SOME CHECKS FAILED")
    return "\n".join(out)
