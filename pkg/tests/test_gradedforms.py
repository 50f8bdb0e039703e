import random

from hypothesis import given, settings
from hypothesis import strategies as st

from ternwb.exactfield import J, J2
from ternwb.gradedforms import (
    CoordPoly, GradedForm, all_monomials, d, d2x, d3_check, d3_residual, display_d2, dx,
    mixed_bracket, normal_form, random_coordpoly,
)


def test_d_on_coordinates():
    x1 = GradedForm.function(CoordPoly.var(3, 1))
    assert d(x1) == GradedForm.basis(3, dx(1))
    assert d(d(x1)) == GradedForm.basis(3, d2x(1))
    assert d(d(d(x1))).is_zero()


def test_d2_matches_display():
    f = CoordPoly.var(3, 1) * CoordPoly.var(3, 2)
    assert normal_form(d(d(GradedForm.function(f)))) == normal_form(display_d2(f))


def test_triple_rotation_rule():
    w = GradedForm.basis(3, dx(2), dx(3), dx(1))
    assert normal_form(w) == GradedForm.basis(3, dx(1), dx(2), dx(3), coeff=J2)
    # one rotation the other way gives j
    w = GradedForm.basis(3, dx(3), dx(1), dx(2))
    assert normal_form(w) == GradedForm.basis(3, dx(1), dx(2), dx(3), coeff=J)


def test_d2x_dx_rule():
    w = GradedForm.basis(2, d2x(1), dx(2))
    assert normal_form(w) == GradedForm.basis(2, dx(2), d2x(1), coeff=J2)


def test_high_order_products_vanish():
    for f in [(dx(1), d2x(2), dx(1)), (d2x(1), d2x(2)), (dx(1), dx(2), dx(3), dx(1)), (dx(1),) * 3]:
        assert normal_form(GradedForm.basis(3, *f)).is_zero()


def test_d3_on_all_small_monomials():
    for N in (1, 2, 3):
        for m in all_monomials(N, 4):
            assert d3_check(m), (N, str(m))


def test_d3_on_seeded_random_polynomials():
    rng = random.Random(2024)
    for _ in range(200):
        assert d3_check(random_coordpoly(rng))


def test_mixed_bracket_vanishes():
    f = CoordPoly.monomial((2, 1, 0)) + CoordPoly.monomial((0, 1, 1), 3)
    assert normal_form(mixed_bracket(f)).is_zero()


def test_d3_residual_type():
    assert d3_residual(CoordPoly.const(2, 5)).is_zero()


exps = st.tuples(*[st.integers(0, 3)] * 3)


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(exps, st.integers(-4, 4), max_size=4))
def test_d3_property(terms):
    assert d3_check(CoordPoly(3, terms))


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(exps, st.integers(-4, 4), max_size=3))
def test_d_is_linear(terms):
    f = GradedForm.function(CoordPoly(3, terms))
    g = GradedForm.function(CoordPoly.var(3, 2) * CoordPoly.var(3, 3))
    assert normal_form(d(f + g)) == normal_form(d(f) + d(g))


@settings(max_examples=30, deadline=None)
@given(st.dictionaries(exps, st.integers(-4, 4), max_size=3),
       st.dictionaries(exps, st.integers(-4, 4), max_size=3))
def test_product_rule_on_functions(a, b):
    f, g = (GradedForm.function(CoordPoly(3, t)) for t in (a, b))
    assert normal_form(d(f * g)) == normal_form(d(f) * g + f * d(g))
