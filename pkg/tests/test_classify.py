"""Classification machinery: conjugacy, restriction equality, commutants."""

from cuntzalg.algebra import CuntzPoly
from cuntzalg.morphisms import flip, standard_endo
from cuntzalg.classify import (commutant_witness, fingerprint, flip_unitary,
                               theorem14_counts, uhf_restriction_equal,
                               verify_conjugate, verify_intertwined)


def test_flip_unitary_conjugations():
    u = flip_unitary()
    assert verify_conjugate(standard_endo("12"), standard_endo("1324"), u)
    assert verify_conjugate(standard_endo("14"), standard_endo("14"), u)
    assert not verify_conjugate(standard_endo("12"), standard_endo("13"), u)


def test_restriction_equalities():
    pairs = [("14", "1243"), ("124", "143"), ("132", "234"), ("23", "1342")]
    for n1, n2 in pairs:
        v = uhf_restriction_equal(standard_endo(n1), standard_endo(n2),
                                  level=5)
        assert v.equal
        assert "certified" in str(v)
        # the two maps still differ on the full algebra
        assert standard_endo(n1) != standard_endo(n2)


def test_restriction_differences():
    v = uhf_restriction_equal(standard_endo("14"), standard_endo("23"),
                              level=2)
    assert not v.equal
    assert "differ" in str(v)


def test_commutant_witnesses():
    # the reducible classes have verified witnesses at the first level
    for name in ("142", "14", "23", "123", "124", "132"):
        w = commutant_witness(standard_endo(name), level=1)
        assert w is not None
        assert not (w - CuntzPoly.one(2)).is_zero()
    for name in ("12", "13", "24", "34"):
        assert commutant_witness(standard_endo(name), level=1) is None


def test_witness_commutes():
    m = standard_endo("142")
    w = commutant_witness(m, level=1)
    for a in (1, 2):
        for b in (1, 2):
            g = m(CuntzPoly.matrix_unit(2, (a,), (b,)))
            assert w * g == g * w


def test_fingerprints_separate_conjugate_pairs():
    tests = ["P(1)", "P(2)", "P(12)", "GP(+)"]
    fp12 = fingerprint(standard_endo("12"), tests)
    fp1324 = fingerprint(standard_endo("1324"), tests)
    assert fp12 == fp1324           # conjugate maps branch identically
    fp13 = fingerprint(standard_endo("13"), tests)
    assert fp12 != fp13


def test_intertwining():
    # alpha then psi_13 realizes psi_24
    assert verify_intertwined(flip(), standard_endo("24"),
                              standard_endo("13")) or \
        flip().then(standard_endo("13")) == standard_endo("24")


def test_theorem14_counts():
    counts = theorem14_counts(level=3)
    assert counts == {"restrictions": 20, "classes": 12, "klein": 4,
                      "irreducible": 4, "reducible": 6}
