from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropcm import (ParseError, Polynomial, Ring, default_ring,
                    parse_polynomial, weight_value)
from tropcm.fields import PrimeField

R3 = default_ring(3)


def brute_initial_form(w, f):
    """Independent oracle: filter terms at the minimal inner product."""
    vals = {m: sum(Fraction(a) * e for a, e in zip(w, m)) for m in f.terms}
    lo = min(vals.values())
    return Polynomial(f.ring, {m: c for m, c in f.terms.items() if vals[m] == lo})


# -- parsing -----------------------------------------------------------------

def test_parse_conic():
    f = parse_polynomial("x1*x3 - x2^2", R3)
    assert f.terms == {(1, 0, 1): Fraction(1), (0, 2, 0): Fraction(-1)}


def test_parse_zero():
    assert parse_polynomial("0", R3).terms == {}


def test_parse_normalizes_coefficients():
    f = parse_polynomial("2/4*x1", R3)
    assert f.terms == {(1, 0, 0): Fraction(1, 2)}


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_polynomial("x9 + x1", R3)
    with pytest.raises(ParseError):
        parse_polynomial("x1 + * x2", R3)
    with pytest.raises(ParseError):
        parse_polynomial("x1 / x2", R3)


def test_parse_parentheses_and_signs():
    f = parse_polynomial("-(x1 - x2)^2 + 2*(x1*x2)", R3)
    g = parse_polynomial("-x1^2 + 4*x1*x2 - x2^2", R3)
    assert f == g


def test_parse_over_prime_field():
    ring = Ring(("x1", "x2"), PrimeField(7))
    f = parse_polynomial("8*x1 + 1/2*x2", ring)
    assert f.terms[(1, 0)] == ring.field.coerce(1)
    assert f.terms[(0, 1)] == ring.field.coerce(4)


# -- printing round trip -----------------------------------------------------

poly_strategy = st.builds(
    lambda terms: Polynomial(R3, {m: Fraction(c) for m, c in terms}),
    st.lists(st.tuples(
        st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
        st.fractions(min_value=-5, max_value=5)),
        max_size=6))


@given(poly_strategy)
@settings(max_examples=120, deadline=None)
def test_format_parse_round_trip(f):
    assert parse_polynomial(f.to_string(), R3) == f


# -- weight values -----------------------------------------------------------

def test_weight_value_examples():
    assert weight_value((0, 0, 1, 1), (1, 1, 0, 0)) == 0
    assert weight_value((2, 1, 1), (0, 2, 0)) == 2
    assert weight_value((Fraction(1, 2), Fraction(1, 3), 0), (1, 1, 0)) == Fraction(5, 6)


def test_weight_value_dimension_mismatch():
    with pytest.raises(ValueError):
        weight_value((1, 0), (1, 0, 0))


@given(st.tuples(*[st.integers(0, 4)] * 3), st.tuples(*[st.integers(0, 4)] * 3),
       st.tuples(*[st.fractions(min_value=-3, max_value=3)] * 3))
@settings(max_examples=60, deadline=None)
def test_weight_value_additive(a, b, w):
    ab = tuple(x + y for x, y in zip(a, b))
    assert weight_value(w, ab) == weight_value(w, a) + weight_value(w, b)


# -- initial forms -----------------------------------------------------------

def test_initial_form_constant_weight_is_identity():
    f = parse_polynomial("x1*x3 - x2^2 + x1^2", R3)
    assert f.initial_form((1, 1, 1)) == f
    assert f.initial_form((0, 0, 0)) == f


def test_initial_form_conic():
    f = parse_polynomial("x1*x3 - x2^2", R3)
    assert f.initial_form((1, 0, 0)) == parse_polynomial("-x2^2", R3)


def test_initial_form_quad4_keeps_complement_support():
    ring = default_ring(4)
    f = parse_polynomial(
        " + ".join(f"x{i}*x{j}" for i in range(1, 5) for j in range(i, 5)), ring)
    expected = parse_polynomial("x1^2 + x1*x2 + x2^2", ring)
    assert f.initial_form((0, 0, 1, 1)) == expected
    assert f.initial_form((0, 0, 1, 1)) == brute_initial_form((0, 0, 1, 1), f)


def test_initial_form_zero_rejected():
    with pytest.raises(ValueError):
        R3.zero().initial_form((1, 0, 0))


nonzero_poly = poly_strategy.filter(lambda f: not f.is_zero())
weights3 = st.tuples(*[st.fractions(min_value=-4, max_value=4)] * 3)


@given(nonzero_poly, nonzero_poly, weights3)
@settings(max_examples=100, deadline=None)
def test_initial_form_multiplicative(f, g, w):
    assert (f * g).initial_form(w) == f.initial_form(w) * g.initial_form(w)


@given(nonzero_poly, weights3, st.fractions(min_value=-3, max_value=3))
@settings(max_examples=80, deadline=None)
def test_initial_form_translation_invariance_homogeneous(f, w, c):
    top = max(sum(m) for m in f.terms)
    fh = Polynomial(R3, {m: v for m, v in f.terms.items() if sum(m) == top})
    shifted = tuple(x + c for x in w)
    assert fh.initial_form(w) == fh.initial_form(shifted)


@given(nonzero_poly, weights3, st.fractions(min_value=Fraction(1, 3), max_value=4))
@settings(max_examples=80, deadline=None)
def test_initial_form_positive_scaling(f, w, c):
    scaled = tuple(c * x for x in w)
    assert f.initial_form(w) == f.initial_form(scaled)


@given(nonzero_poly, weights3)
@settings(max_examples=60, deadline=None)
def test_initial_form_matches_brute_force(f, w):
    assert f.initial_form(w) == brute_initial_form(w, f)


# -- structure ---------------------------------------------------------------

def test_homogeneous_components():
    f = parse_polynomial("x1 + x2^2 + x1*x2 + 3", R3)
    comps = f.homogeneous_components()
    assert sorted(comps) == [0, 1, 2]
    assert sum(comps.values(), R3.zero()) == f


def test_substitute_permutation():
    f = parse_polynomial("x1*x3 - x2^2", R3)
    images = [R3.variable(1), R3.variable(2), R3.variable(0)]
    assert f.substitute(images) == parse_polynomial("x2*x1 - x3^2", R3)


def test_restrict_extend_round_trip():
    f = parse_polynomial("x2^2 - x2*x3", R3)
    sub = R3.subring([1, 2])
    g = f.restrict(sub, [1, 2])
    assert g.ring.names == ("x2", "x3")
    assert g.extend(R3, [1, 2]) == f
    with pytest.raises(ValueError):
        parse_polynomial("x1*x2", R3).restrict(sub, [1, 2])
