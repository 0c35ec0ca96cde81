from fractions import Fraction
from math import gcd

import pytest

from walc.conformal import (
    Branch,
    Status,
    admissibility,
    collapse_check,
    conformal_levels,
    decomposition,
    h_mu,
    hook_level_closed_forms,
    rectangular_level_closed_forms,
)
from walc.errors import (
    CriticalLevelError,
    HypothesisError,
    NotConformalError,
    UnsupportedFamilyError,
)
from walc.liealg import Partition
from walc.walgebra import FamilyParams


def levels_by_k(fp):
    return {lv.k: lv for lv in conformal_levels(fp)}


def test_conformal_levels_hook_3_2():
    found = levels_by_k(FamilyParams.hook(3, 2))
    assert set(found) == {Fraction(-15, 4), Fraction(-3), Fraction(-10, 3)}
    assert found[Fraction(-15, 4)].tags == ("H1",)
    assert found[Fraction(-3)].tags == ("H2", "H3")  # coincident pair at n = m-1
    assert found[Fraction(-10, 3)].tags == ("H4",)
    assert found[Fraction(-10, 3)].branch is Branch.DEGENERATE
    assert found[Fraction(-15, 4)].branch is Branch.GENERIC


def test_conformal_levels_zero_nilpotent():
    # the zero nilpotent gives the affine algebra itself; only the two
    # embedding levels of its maximal reductive subalgebra show up
    for n in range(2, 6):
        found = levels_by_k(FamilyParams.hook(1, n))
        assert set(found) == {Fraction(-(n + 1), 2), Fraction(1)}
        assert found[Fraction(-(n + 1), 2)].tags == ("H1",)
        assert found[Fraction(1)].tags == ("H2",)
    assert set(levels_by_k(FamilyParams.hook(1, 1))) == {Fraction(1)}


def test_conformal_levels_rectangular():
    found = levels_by_k(FamilyParams.rectangular(2, 3))
    assert set(found) == {Fraction(-4), Fraction(-7, 2), Fraction(-5, 2)}
    assert found[Fraction(-4)].tags == ("R1",)
    assert found[Fraction(-7, 2)].tags == ("R2",)
    assert found[Fraction(-5, 2)].tags == ("R3",)


def test_conformal_levels_match_closed_forms_sweep():
    for m in range(1, 7):
        for n in range(1, 7):
            fp = FamilyParams.hook(m, n)
            assert set(levels_by_k(fp)) == set(hook_level_closed_forms(m, n).values()), (m, n)
    for q in range(2, 6):
        for m in range(2, 6):
            fp = FamilyParams.rectangular(q, m)
            expected = set(rectangular_level_closed_forms(q, m).values())
            assert set(levels_by_k(fp)) == expected, (q, m)


def test_conformal_levels_unsupported_family():
    with pytest.raises(UnsupportedFamilyError):
        conformal_levels(FamilyParams.from_partition(Partition((3, 2, 1))))


def test_charges_agree_at_every_returned_level():
    from walc.exact import ratfn_eval
    from walc.walgebra import central_charge, coset_central_charge

    for fp in (FamilyParams.hook(4, 3), FamilyParams.hook(2, 1), FamilyParams.rectangular(3, 4)):
        charge = central_charge(fp)
        for lv in conformal_levels(fp):
            assert ratfn_eval(charge, lv.k) == coset_central_charge(fp, lv.k)


def test_collapse_hook_h3():
    fp = FamilyParams.hook(3, 3)
    k3 = hook_level_closed_forms(3, 3)["H3"]
    assert k3 == Fraction(-7, 2)
    verdict = collapse_check(fp, k3)
    assert verdict.status is Status.STRONGLY_COLLAPSING
    charged = [cv for cv in verdict.c_values if cv.rep in ("vector", "covector")]
    assert all(cv.sugawara == Fraction(14, 9) and cv.weight == 2 for cv in charged)
    assert verdict.target == "V_-3/2(sl(3)) (x) M(1/2)"


def test_collapse_hook_h1_h2_not_strongly():
    fp = FamilyParams.hook(3, 2)
    v1 = collapse_check(fp, Fraction(-15, 4))
    assert v1.status is Status.NOT_STRONGLY_COLLAPSING
    charged = [cv for cv in v1.c_values if cv.rep in ("vector", "covector")]
    assert all(cv.sugawara == cv.weight == 2 for cv in charged)
    # the coincident H2 = H3 level also keeps its charged generators
    v2 = collapse_check(fp, Fraction(-3))
    assert v2.status is Status.NOT_STRONGLY_COLLAPSING


def test_collapse_hook_h4_always():
    for m in range(2, 7):
        for n in range(1, 6):
            fp = FamilyParams.hook(m, n)
            k4 = hook_level_closed_forms(m, n)["H4"]
            assert collapse_check(fp, k4).status is Status.STRONGLY_COLLAPSING


def test_collapse_rectangular():
    fp = FamilyParams.rectangular(2, 3)
    v = collapse_check(fp, Fraction(-4))
    assert v.status is Status.STRONGLY_COLLAPSING
    assert v.target == "V_-2(sl(3))"
    v = collapse_check(fp, Fraction(-5, 2))
    assert v.status is Status.STRONGLY_COLLAPSING
    assert v.target == "V_1(sl(3))"
    v = collapse_check(fp, Fraction(-7, 2))
    assert v.status is Status.STRONGLY_COLLAPSING
    assert v.target == "V_-1(sl(3))"


def test_collapse_rectangular_two_rows_open():
    for q in (2, 3, 4):
        fp = FamilyParams.rectangular(q, 2)
        k2 = rectangular_level_closed_forms(q, 2)["R2"]
        verdict = collapse_check(fp, k2)
        assert verdict.status is Status.INCONCLUSIVE
        tags = {n.tag for n in verdict.notes}
        if q == 2:
            assert "rect-R2-2-2-weyl-orbifold" in tags
        else:
            assert "rect-R2-m2-conjecture" in tags


def test_collapse_known_results_notes():
    # m = 3p with n = 2: a collapsing level that the C/Delta test cannot certify
    verdict = collapse_check(FamilyParams.hook(6, 2), hook_level_closed_forms(6, 2)["H2"])
    assert verdict.status is Status.NOT_STRONGLY_COLLAPSING
    assert "hook-collapsing-not-strongly" in {n.tag for n in verdict.notes}
    # n = 2 at the H1 level: logarithmic-extension realization, never collapsing
    verdict = collapse_check(FamilyParams.hook(4, 2), hook_level_closed_forms(4, 2)["H1"])
    tags = {n.tag for n in verdict.notes}
    assert "hook-logarithmic-extension" in tags and "admissible-non-collapsing" in tags


def test_collapse_not_conformal():
    with pytest.raises(NotConformalError) as err:
        collapse_check(FamilyParams.hook(3, 2), Fraction(0))
    assert err.value.w_charge != err.value.coset_charge


def test_collapse_zero_nilpotent_levels():
    fp = FamilyParams.hook(1, 3)
    for lv in conformal_levels(fp):
        verdict = collapse_check(fp, lv.k)
        assert verdict.status is Status.NOT_STRONGLY_COLLAPSING
        assert "hook-affine-case" in {n.tag for n in verdict.notes}


def test_admissibility_examples():
    fp = FamilyParams.hook(3, 2)
    form = admissibility(fp, Fraction(-15, 4))
    assert (form.p_prime, form.p, form.admissible, form.d_kw) == (5, 4, True, 2)
    form = admissibility(fp, Fraction(-3))
    assert (form.p_prime, form.p, form.admissible, form.d_kw) == (2, 1, False, None)
    with pytest.raises(CriticalLevelError):
        admissibility(fp, Fraction(-5))


def test_admissibility_gcd_criteria():
    for m in range(2, 8):
        for n in range(2, 8):
            fp = FamilyParams.hook(m, n)
            levels = hook_level_closed_forms(m, n)
            assert admissibility(fp, levels["H1"]).admissible == (gcd(n - 1, m + 1) == 1)
            assert admissibility(fp, levels["H2"]).admissible == (gcd(n + 1, m) == 1)
    for q in range(2, 6):
        for m in range(2, 6):
            fp = FamilyParams.rectangular(q, m)
            levels = rectangular_level_closed_forms(q, m)
            assert not admissibility(fp, levels["R2"]).admissible
            assert admissibility(fp, levels["R3"]).admissible
            assert admissibility(fp, levels["R1"]).admissible == (gcd(m, q + 1) == 1)


def test_h_mu():
    assert h_mu(FamilyParams.hook(3, 2), 1) == 8
    assert h_mu(FamilyParams.hook(5, 4), 2) == 4
    assert h_mu(FamilyParams.hook(2, 3), 1) == Fraction(9, 2)
    for m in range(2, 8):
        for n in range(2, 8):
            value = h_mu(FamilyParams.hook(m, n), 1)
            assert (value.denominator == 1) == ((m + 1) % (n - 1) == 0)
    with pytest.raises(HypothesisError):
        h_mu(FamilyParams.hook(3, 2), 3)


def test_decomposition_emits_summands():
    report = decomposition(FamilyParams.hook(4, 3), 1, 2)
    assert report.refusal is None and not report.conditional
    assert [(s.charge, s.sl_weight) for s in report.summands] == [
        (-2, (0, 2)),
        (-1, (0, 1)),
        (0, (0, 0)),
        (1, (1, 0)),
        (2, (2, 0)),
    ]
    by_charge = {s.charge: s for s in report.summands}
    assert by_charge[0].sl_top_weight == 0
    assert by_charge[1].sl_top_weight == Fraction(10, 3)
    assert by_charge[2].sl_top_weight == Fraction(25, 3)
    assert by_charge[-1].sl_top_weight == by_charge[1].sl_top_weight
    assert by_charge[1].heis_label == 1


def test_decomposition_vacuum_only():
    report = decomposition(FamilyParams.hook(4, 3), 1, 0)
    assert [(s.charge, s.sl_weight, s.sl_top_weight) for s in report.summands] == [
        (0, (0, 0), 0)
    ]


def test_decomposition_refusals():
    # n = 2 in case 1: the known realization is a logarithmic extension
    report = decomposition(FamilyParams.hook(3, 2), 1, 2)
    assert report.refusal is not None
    assert report.refusal.tag == "hook-logarithmic-extension"
    assert "1/4" in report.refusal.text  # p = m + 1 = 4
    # integral mixing weight without the special realization
    report = decomposition(FamilyParams.hook(5, 3), 1, 2)
    assert report.refusal is not None
    assert report.refusal.tag == "integral-mixing-weight"
    with pytest.raises(HypothesisError):
        decomposition(FamilyParams.hook(3, 1), 1, 2)
    with pytest.raises(HypothesisError):
        decomposition(FamilyParams.hook(3, 2), 5, 2)
    with pytest.raises(UnsupportedFamilyError):
        decomposition(FamilyParams.rectangular(2, 2), 1, 2)


def test_decomposition_conditional_flag():
    # H2 of (3,8): not admissible, so the emitter marks the output conditional
    report = decomposition(FamilyParams.hook(3, 8), 2, 1)
    assert report.refusal is None and report.conditional
    assert "conditional-on-non-collapsing" in {n.tag for n in report.notes}
    # H2 of (5,2): admissible, hence unconditional
    report = decomposition(FamilyParams.hook(5, 2), 2, 1)
    assert report.refusal is None and not report.conditional
