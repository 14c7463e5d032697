"""Permutative representations: branching, restriction, GP calculus."""

from fractions import Fraction

import pytest

from cuntzalg.scalars import ONE
from cuntzalg.words import parse_ev_word
from cuntzalg.morphisms import flip, hadamard, standard_endo
from cuntzalg.reps import (ChainRep, CycleRep, act_poly, branch,
                           decompose_power, gp_branch, parse_rep,
                           restrict_chain_to_uhf, restrict_cycle_to_uhf,
                           uhf_branch)


def labels(result):
    return sorted(c.describe() for c in result.components)


def uhf_labels(n, word, endo, i=1):
    return sorted(str(c) for c in uhf_branch(n, word, endo)[i])


def test_branch_cycle_examples():
    p142 = standard_endo("142")
    assert labels(branch(CycleRep(2, (1,)), p142)) == ["P(12)"]
    assert labels(branch(CycleRep(2, (1, 2)), p142)) == ["P(11)", "P(22)"]
    p23 = standard_endo("23")
    assert labels(branch(CycleRep(2, (1, 2)), p23)) == ["P(12)", "P(12)"]
    p13 = standard_endo("13")
    assert labels(branch(CycleRep(2, (1,)), p13)) == ["P(2)"]


def test_power_components_split_into_phases():
    res = branch(CycleRep(2, (1, 2)), standard_endo("142"))
    classes = sorted(str(c) for c in res.cycle_classes())
    assert classes == ["P(1)", "P(1;1/2)", "P(2)", "P(2;1/2)"]


def test_branch_phase_base():
    p13 = standard_endo("13")
    res = branch(CycleRep(2, (1,), Fraction(1, 2)), p13)
    assert len(res.components) == 1


def test_branch_chain_base():
    p13 = standard_endo("13")
    chain = ChainRep(parse_ev_word("(1)^inf", 2))
    res = branch(chain, p13)
    assert all(c.kind == "chain" for c in res.components)


def test_fixed_point_certificates():
    # every cycle component carries labels v with t_W v = sign * v
    for name in ("13", "142", "23", "1324"):
        endo = standard_endo(name)
        for base in ((1,), (2,), (1, 2)):
            rep = CycleRep(2, base)
            for comp in branch(rep, endo).components:
                word = comp.cycle_word
                v = comp.cycle_labels[0]
                t = endo.word_image(word)
                out = act_poly(rep, t, {v: ONE})
                assert list(out) == [v]
                coeff = out[v]
                assert coeff == (ONE if comp.sign == 1 else -ONE)


def test_decompose_power():
    classes = decompose_power((1,), 2)
    assert sorted(str(c) for c in classes) == ["P(1)", "P(1;1/2)"]
    classes = decompose_power((1, 2), 3)
    assert sorted(str(c) for c in classes) == \
        ["P(12)", "P(12;1/3)", "P(12;2/3)"]
    with pytest.raises(ValueError):
        decompose_power((1, 1), 2)


def test_restrict_cycle():
    assert [str(c) for c in restrict_cycle_to_uhf(2, (1, 2))] == \
        ["P[12]", "P[21]"]
    out = [str(c) for c in restrict_cycle_to_uhf(2, (1, 1, 2, 2))]
    assert out == ["P[1122]", "P[1221]", "P[2211]", "P[2112]"]
    with pytest.raises(ValueError):
        restrict_cycle_to_uhf(2, (1, 2, 1, 2))


def test_restrict_chain_shift_family():
    family = restrict_chain_to_uhf(parse_ev_word("2(12)^inf", 2))
    shifts = [str(ev) for ev in family.shifts(range(-4, 5))]
    assert shifts == ["111(12)^inf", "11(12)^inf", "1(12)^inf", "(12)^inf",
                      "(21)^inf", "(12)^inf", "(21)^inf", "(12)^inf",
                      "(21)^inf"]


def test_uhf_branch_examples():
    assert uhf_labels(2, (1,), standard_endo("13")) == ["P[2]"]
    assert uhf_labels(2, (1, 2), standard_endo("34")) == \
        ["P[1221]", "P[2112]"]
    assert uhf_labels(2, (1, 2), standard_endo("14")) == ["P[12]", "P[12]"]
    assert uhf_labels(2, (1, 2), standard_endo("23")) == ["P[21]", "P[21]"]
    # the two gauge classes of P(12) branch consistently
    assert uhf_labels(2, (1, 2), standard_endo("14"), i=2) == \
        ["P[21]", "P[21]"]


def test_uhf_branch_longer_base():
    out = uhf_labels(2, (1, 1, 2, 2), standard_endo("1324"))
    assert len(out) >= 1
    total = sum(len(str(c)) - 3 for c in out)  # letters per component
    assert total % 4 == 0 or len(out) == 1


def test_gp_branch_automorphisms():
    table = gp_branch(flip())
    assert [a.describe() for a in table["+"]] == ["GP(+)"]
    assert [a.describe() for a in table["-"]] == ["GP(-).theta"]
    # the non-permutative involution itself falls outside the fragment
    assert gp_branch(hadamard()) is None


def test_gp_branch_endos():
    table = gp_branch(standard_endo("23"))
    assert sorted(a.describe() for a in table["+"]) == ["GP(+)", "GP(+)"]
    table = gp_branch(standard_endo("132"))
    assert sorted(a.describe() for a in table["+"]) == \
        ["GP(+)", "GP(-).theta"]
    assert sorted(a.describe(uhf=True) for a in table["+"]) == \
        ["GP[+]", "GP[-]"]


def test_gp_branch_not_derivable():
    for name in ("12", "13", "24", "34", "142"):
        assert gp_branch(standard_endo(name)) is None


def test_branch_functoriality_spot_check():
    # branching through a composition agrees with branching in two stages
    from cuntzalg.reps import as_signed_perm
    p13, p24 = standard_endo("13"), standard_endo("24")
    for first, second in ((p13, p24), (p24, p13)):
        composite = as_signed_perm(second.then(first))
        assert composite is not None
        for base in ((1,), (2,), (1, 2)):
            direct = branch(CycleRep(2, base), composite)
            fingerprint = sorted(str(c) for c in direct.cycle_classes())
            two_stage = []
            for cls in branch(CycleRep(2, base), first).cycle_classes():
                inner = branch(CycleRep(2, cls.representative, cls.phase),
                               second)
                two_stage.extend(str(c) for c in inner.cycle_classes())
            assert fingerprint == sorted(two_stage)


def test_parse_rep():
    assert parse_rep("P(12)") == ("cycle", (1, 2), Fraction(0))
    assert parse_rep("P(12;1/2)") == ("cycle", (1, 2), Fraction(1, 2))
    assert parse_rep("P[21]") == ("uhf", (2, 1))
    assert parse_rep("GP(+)") == ("gp", "+", False)
    assert parse_rep("GP[-]") == ("gp", "-", True)
    assert parse_rep("fock") == ("uhf", (1,))
    assert parse_rep("iw*") == ("uhf", (2, 1))
    kind, ev = parse_rep("2(12)^inf")
    assert kind == "chain" and str(ev) == "(21)^inf"
    with pytest.raises(ValueError):
        parse_rep("Q(12)")
