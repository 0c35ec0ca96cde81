import random
from fractions import Fraction

import pytest

from walc.errors import CriticalLevelError, UnsupportedFamilyError
from walc.exact import RF_X, ratfn_equal, ratfn_eval
from walc.liealg import Partition, dynkin_grading, graded_dims
from walc.verify import random_partition
from walc.walgebra import (
    Family,
    FamilyParams,
    RepTag,
    central_charge,
    coset_central_charge,
    coset_levels,
    hook_central_charge_closed,
    hook_coset_charge,
    rectangular_central_charge_closed,
    rectangular_coset_charge,
    strong_generators,
)


def weight_multiset(specs):
    out = {}
    for s in specs:
        out[s.weight] = out.get(s.weight, 0) + s.multiplicity
    return out


def test_family_classification():
    assert FamilyParams.from_partition(Partition((3, 1, 1))).family is Family.HOOK
    assert FamilyParams.from_partition(Partition((1, 1, 1))).arm == 1
    assert FamilyParams.from_partition(Partition((2, 2))).family is Family.RECTANGULAR
    assert FamilyParams.from_partition(Partition((3, 2, 1))).family is Family.GENERAL
    assert FamilyParams.from_partition(Partition((4,))).family is Family.GENERAL
    fp = FamilyParams.hook(3, 2)
    assert fp.partition.parts == (3, 1, 1) and fp.h_vee == 5
    with pytest.raises(ValueError):
        FamilyParams.hook(1, 0)
    with pytest.raises(ValueError):
        FamilyParams.rectangular(1, 3)


def test_central_charge_matches_closed_forms():
    for m in range(1, 7):
        for n in range(1, 7):
            fp = FamilyParams.hook(m, n)
            assert ratfn_equal(central_charge(fp), hook_central_charge_closed(m, n))
    for q in range(2, 5):
        for m in range(2, 5):
            fp = FamilyParams.rectangular(q, m)
            assert ratfn_equal(central_charge(fp), rectangular_central_charge_closed(q, m))


def test_central_charge_zero_nilpotent_is_pure_sugawara():
    for n in range(1, 6):
        fp = FamilyParams.hook(1, n)
        dim = (n + 1) ** 2 - 1
        expected = (RF_X * dim) / (RF_X + (n + 1))
        assert ratfn_equal(central_charge(fp), expected)


def test_central_charge_spot_value():
    assert ratfn_eval(central_charge(FamilyParams.hook(3, 2)), Fraction(-3)) == -2


def test_strong_generators_hook():
    specs = strong_generators(FamilyParams.hook(3, 2))
    by_tag = {}
    for s in specs:
        by_tag.setdefault(s.rep.tag, []).append(s)
    assert [(s.weight, s.multiplicity) for s in by_tag[RepTag.AFFINE]] == [(1, 4)]
    assert [(s.weight, s.multiplicity) for s in by_tag[RepTag.VIRASORO]] == [(2, 1)]
    assert [(s.weight, s.multiplicity) for s in by_tag[RepTag.TRIVIAL]] == [(3, 1)]
    assert [(s.weight, s.multiplicity) for s in by_tag[RepTag.VECTOR]] == [(2, 2)]
    assert [(s.weight, s.multiplicity) for s in by_tag[RepTag.COVECTOR]] == [(2, 2)]
    assert by_tag[RepTag.VECTOR][0].rep.charge == 1
    assert by_tag[RepTag.COVECTOR][0].rep.charge == -1
    assert sum(s.multiplicity for s in specs) == 10


def test_strong_generators_rectangular():
    specs = strong_generators(FamilyParams.rectangular(2, 2))
    assert weight_multiset(specs) == {Fraction(1): 3, Fraction(2): 4}
    assert sum(s.multiplicity for s in specs) == 7
    adjoint = [s for s in specs if s.rep.tag is RepTag.ADJOINT]
    assert [(s.weight, s.multiplicity) for s in adjoint] == [(2, 3)]


def test_strong_generators_zero_nilpotent():
    specs = strong_generators(FamilyParams.hook(1, 3))
    assert len(specs) == 1
    assert specs[0].rep.tag is RepTag.AFFINE
    assert (specs[0].weight, specs[0].multiplicity) == (1, 15)


def test_minimal_nilpotent_weights():
    # the two-box hook gives the minimal nilpotent reduction of sl(n+2)
    for n in range(1, 6):
        specs = strong_generators(FamilyParams.hook(2, n))
        assert weight_multiset(specs) == {
            Fraction(1): n * n,
            Fraction(3, 2): 2 * n,
            Fraction(2): 1,
        }


def test_generator_weights_match_graded_dims():
    rng = random.Random(99)
    params = [FamilyParams.hook(4, 3), FamilyParams.rectangular(3, 2)]
    params += [FamilyParams.from_partition(random_partition(rng, 12)) for _ in range(20)]
    for fp in params:
        dims = graded_dims(dynkin_grading(fp.partition))
        expected = {1 + Fraction(-d, 2): v for d, v in dims.dim_gf.items()}
        assert weight_multiset(strong_generators(fp)) == expected, fp


def test_coset_levels():
    fp = FamilyParams.hook(3, 2)
    lv = coset_levels(fp, Fraction(-15, 4))
    assert (lv.k0, lv.k1, lv.coset) == (Fraction(-5, 12), Fraction(-7, 4), "gl(2)")
    for m in range(2, 7):
        for n in range(1, 5):
            k4 = Fraction(-(m - 1) * (m + n), m)
            assert coset_levels(FamilyParams.hook(m, n), k4).k0 == 0
    lv = coset_levels(FamilyParams.rectangular(2, 3), Fraction(-4))
    assert (lv.k0, lv.k1, lv.coset) == (None, -2, "sl(3)")
    with pytest.raises(CriticalLevelError):
        coset_levels(fp, Fraction(-5))
    with pytest.raises(UnsupportedFamilyError):
        coset_levels(FamilyParams.from_partition(Partition((3, 2, 1))), Fraction(1))


def test_coset_central_charge():
    fp = FamilyParams.hook(3, 2)
    assert coset_central_charge(fp, Fraction(-3)) == -2
    for m in range(2, 7):
        for n in range(1, 6):
            k4 = Fraction(-(m - 1) * (m + n), m)
            assert coset_central_charge(FamilyParams.hook(m, n), k4) == -(m - 1) * (n * n - 1)
    assert coset_central_charge(FamilyParams.rectangular(2, 3), Fraction(-4)) == -16
    with pytest.raises(CriticalLevelError):
        # k1 = k + m - 1 hits the coset critical value -n
        coset_central_charge(fp, Fraction(-4))


def test_coset_charge_symbolic_agrees_with_pointwise():
    rng = random.Random(5)
    for fp, symbolic in [
        (FamilyParams.hook(4, 3), hook_coset_charge(4, 3, heisenberg=True)),
        (FamilyParams.rectangular(3, 2), rectangular_coset_charge(3, 2)),
    ]:
        hits = 0
        while hits < 20:
            k = Fraction(rng.randint(-60, 60), rng.randint(1, 8))
            if k == -fp.h_vee or symbolic.den(k) == 0:
                continue
            if fp.family is Family.HOOK and coset_levels(fp, k).k0 == 0:
                continue
            assert coset_central_charge(fp, k) == ratfn_eval(symbolic, k)
            hits += 1
