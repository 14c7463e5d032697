"""Endomorphisms of O_n: construction, named maps, composition."""

import pytest

from cuntzalg.scalars import INV_SQRT2
from cuntzalg.algebra import CuntzPoly
from cuntzalg.morphisms import (Morphism, PermEndo, ad_unitary, compose, flip,
                                gauge_flip, hadamard, identity,
                                lookup_morphism, nakanishi, perm_from_cycles,
                                rotation, standard_endo, total_gauge_flip,
                                zeta)


def gen(i, n=2):
    return CuntzPoly.generator(n, i)


def test_identity():
    e = identity(2)
    x = gen(1) * gen(2).adjoint()
    assert e(x) == x


def test_morphism_rejects_non_isometries():
    with pytest.raises(ValueError):
        Morphism([gen(1), gen(1)])  # ranges not orthogonal
    with pytest.raises(ValueError):
        Morphism([gen(1), gen(2) * gen(1).adjoint()])


def test_flip():
    a = flip()
    assert a(gen(1)) == gen(2)
    assert a(gen(2)) == gen(1)
    assert a.then(a) == identity(2)


def test_gauge_flips_and_theta():
    b1, b2 = gauge_flip(1), gauge_flip(2)
    th = total_gauge_flip()
    assert b1(gen(1)) == -gen(1)
    assert b1(gen(2)) == gen(2)
    assert b1.then(b2) == th
    assert b2.then(b1) == th
    assert th.then(th) == identity(2)


def test_hadamard_involutive():
    phi = hadamard()
    assert phi(gen(1)) == (gen(1) + gen(2)).scale(INV_SQRT2)
    assert phi.then(phi) == identity(2)


def test_rotation_order_eight():
    rot = rotation()
    power = rot
    for _ in range(7):
        power = power.then(rot)
        if power == identity(2):
            break
    assert power == identity(2)
    # the half turn sends s_1 -> s_2, s_2 -> -s_1
    half = rot.then(rot)
    assert half(gen(1)) == gen(2)
    assert half(gen(2)) == -gen(1)


def test_zeta_recursion():
    x = gen(1) * gen(2).adjoint()
    expected = (gen(1) * x * gen(1).adjoint()
                - gen(2) * x * gen(2).adjoint())
    assert zeta(x) == expected


def test_multiplicative_and_star():
    m = standard_endo("142")
    x = gen(1) * gen(2).adjoint()
    y = gen(2) * gen(1) * gen(1).adjoint()
    assert m(x * y) == m(x) * m(y)
    assert m(x.adjoint()) == m(x).adjoint()


def test_standard_endo_identity_label():
    e = standard_endo("id")
    assert e(gen(1)) == gen(1)
    assert e(gen(2)) == gen(2)


def test_standard_endo_images():
    # transposing the words 11 <-> 12 sends s_1 to s_12 s_1' + s_11 s_2'
    m = standard_endo("12")
    s = {w: CuntzPoly.monomial(2, w, ()) for w in
         [(1,), (2,), (1, 1), (1, 2), (2, 1), (2, 2)]}
    im1 = (s[(1, 2)] * s[(1,)].adjoint() + s[(1, 1)] * s[(2,)].adjoint())
    assert m(s[(1,)]) == im1
    assert m(s[(2,)]) == s[(2,)]


def test_perm_from_cycles_codec():
    # index codec over pairs: 1=(1,1), 2=(1,2), 3=(2,1), 4=(2,2)
    endo = perm_from_cycles([[1, 4]], 2, 2)
    assert endo.sigma[(1, 1)] == (2, 2)
    assert endo.sigma[(2, 2)] == (1, 1)
    assert endo.sigma[(1, 2)] == (1, 2)


def test_gauge_grade_preserved():
    m = standard_endo("1324")
    x = gen(1) * gen(2).adjoint()  # grade 0
    y = gen(1)                     # grade 1
    assert all(len(j) - len(k) == 0 for j, k in m(x).reduce().terms)
    assert all(len(j) - len(k) == 1 for j, k in m(y).reduce().terms)


def test_compose_order():
    a, m = flip(), standard_endo("13")
    x = gen(1)
    # compose applies rightmost first
    assert compose(m, a)(x) == m(a(x))
    assert a.then(m)(x) == m(a(x))


def test_klein_group_closure():
    names = ["id", "(12)(34)", "(13)(24)", "(14)(23)"]
    endos = {nm: standard_endo(nm) for nm in names}
    for n1 in names:
        for n2 in names:
            prod = endos[n1].then(endos[n2])
            assert any(prod == e for e in endos.values())


def test_lookup_morphism():
    assert lookup_morphism("alpha") == flip()
    assert lookup_morphism("psi:1324") == standard_endo("1324")
    composed = lookup_morphism("psi:13 . alpha")
    assert composed == flip().then(standard_endo("13"))
    with pytest.raises(ValueError):
        lookup_morphism("nosuch")


def test_ad_unitary():
    u = (CuntzPoly.matrix_unit(2, (1,), (2,))
         + CuntzPoly.matrix_unit(2, (2,), (1,)))
    ad = ad_unitary(u)
    assert ad(gen(1)) == u * gen(1) * u.adjoint()
    with pytest.raises(ValueError):
        ad_unitary(gen(1))


def test_nakanishi():
    rho = nakanishi()
    assert rho.n == 3
    # images are isometries with orthogonal ranges (checked on build),
    # and the map is proper: the image of s_1 has level-2 words
    assert all(len(j) == 2 and len(k) == 1
               for j, k in rho(gen(1, 3)).reduce().terms)
