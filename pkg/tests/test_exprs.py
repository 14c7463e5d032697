"""The expression grammar used by the command line."""

import pytest
from hypothesis import given, settings, strategies as st

from cuntzalg.scalars import SQRT2, Scalar
from cuntzalg.algebra import CuntzPoly
from cuntzalg.fermions import CarExpr, mixture, psi_map
from cuntzalg.exprs import ExprError, as_cuntz, parse_expr
from fractions import Fraction


def test_generators_and_adjoints():
    assert parse_expr("s1") == CuntzPoly.generator(2, 1)
    assert parse_expr("s12") == CuntzPoly.monomial(2, (1, 2), ())
    assert parse_expr("s2'") == CuntzPoly.generator(2, 2).adjoint()
    assert parse_expr("s1 s2'") == CuntzPoly.matrix_unit(2, (1,), (2,))
    assert parse_expr("E[12,21]") == CuntzPoly.matrix_unit(2, (1, 2), (2, 1))


def test_flip_unitary():
    u = parse_expr("s1 s2' + s2 s1'")
    assert u * u.adjoint() == CuntzPoly.one(2)


def test_scalars_and_precedence():
    assert parse_expr("1/2") == Scalar(Fraction(1, 2))
    assert parse_expr("r2 * r2") == Scalar(2)
    half_sum = parse_expr("1/2 (s1 + s2)(s1' + s2')")
    explicit = parse_expr("1/2 s1s1' + 1/2 s1s2' + 1/2 s2s1' + 1/2 s2s2'")
    assert half_sum == explicit
    assert parse_expr("-s1 + s1").is_zero()


def test_fermion_atoms():
    assert psi_map(parse_expr("a1")) == parse_expr("E[1,2]")
    got = parse_expr("a1 a1' a2 - a1' a1 a2'")
    assert psi_map(got) == psi_map(
        CarExpr.generator(1) * CarExpr.generator(1, True)
        * CarExpr.generator(2)
        - CarExpr.generator(1, True) * CarExpr.generator(1)
        * CarExpr.generator(2, True))
    assert psi_map(parse_expr("b[1/2]")) == psi_map(mixture(Fraction(1, 2)))
    assert psi_map(parse_expr("b[-3/2]'")) == \
        psi_map(mixture(Fraction(-3, 2)).adjoint())


def test_mixed_expression_embeds():
    mixed = parse_expr("s1 a1")
    assert isinstance(mixed, CuntzPoly)
    assert mixed == CuntzPoly.generator(2, 1) * psi_map(CarExpr.generator(1))


def test_larger_alphabet():
    assert parse_expr("s3", n=3) == CuntzPoly.generator(3, 3)
    with pytest.raises(ValueError):
        parse_expr("s3", n=2)


def test_errors_carry_positions():
    with pytest.raises(ExprError) as err:
        parse_expr("")
    assert err.value.pos == 0
    with pytest.raises(ExprError) as err:
        parse_expr("s1 +")
    assert err.value.pos == 4
    with pytest.raises(ExprError):
        parse_expr("(s1")
    with pytest.raises(ExprError):
        parse_expr("E[12;21]")
    with pytest.raises(ExprError):
        parse_expr("b[x]")
    with pytest.raises(ExprError):
        parse_expr("s1 )")


def test_render_roundtrip_examples():
    for text in ("s1s2' + s2s1'", "s12s21'", "1/2 + (1/2)*s1s2'"):
        value = parse_expr(text)
        again = parse_expr(str(value))
        assert value == again


def small_polys():
    words = st.lists(st.integers(1, 2), min_size=0, max_size=3).map(tuple)
    coeff = st.sampled_from([Scalar(1), Scalar(-1), Scalar(Fraction(1, 2)),
                             SQRT2, Scalar(3)])
    term = st.tuples(words, words, coeff)
    return st.lists(term, min_size=1, max_size=4).map(
        lambda ts: sum((CuntzPoly.monomial(2, j, k).scale(c)
                        for j, k, c in ts), CuntzPoly.zero(2)))


@settings(max_examples=80, deadline=None)
@given(small_polys())
def test_render_roundtrip_property(p):
    printed = str(p)
    assert as_cuntz(parse_expr(printed), 2) == p
