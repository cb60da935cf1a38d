from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperchrom.poly import (
    LAMBDA,
    BivarLaurent,
    IntPolynomial,
    PolynomialError,
    apex_transform,
    bivar_specialize,
    evaluate,
    falling_factorial,
    has_factor,
    poly_arith,
    root_multiplicity,
    shift,
    sturm_real_roots,
)

P = IntPolynomial
FIG1B = P([0, 1, -2, 0, 1])

coeff_lists = st.lists(st.integers(-20, 20), max_size=7)
polys = coeff_lists.map(P)
rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)


def test_zero_trimmed_and_degree():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert P([0, 0]).coeffs == ()
    assert P().degree == -1
    assert P([3]).degree == 0


def test_poly_arith_examples():
    assert poly_arith(P([1, 1]), P([-1, 1]), "mul") == P([-1, 0, 1])
    assert poly_arith(FIG1B, P(), "add") == FIG1B
    assert poly_arith(P([0, -1, 1]), P([-1, 1, 1]), "mul") == FIG1B
    with pytest.raises(ValueError):
        poly_arith(FIG1B, FIG1B, "div")


def test_falling_factorial_examples():
    assert falling_factorial(0) == P([1])
    assert falling_factorial(2) == P([0, -1, 1])
    assert falling_factorial(3) == P([0, 2, -3, 1])


@pytest.mark.parametrize("k", range(6))
def test_falling_factorial_values(k):
    p = falling_factorial(k)
    assert p.degree == k
    for t in range(k, k + 5):
        assert p(t) == factorial(t) // factorial(t - k)


def test_shift_examples():
    assert shift(P([0, 0, 1]), -1) == P([1, -2, 1])
    assert shift(P([0, -1, 0, 1]), 0) == P([0, -1, 0, 1])
    assert shift(P([0, -1, 1]), -1) == P([2, -3, 1])


@given(polys, st.integers(-3, 3))
def test_shift_roundtrip(p, c):
    assert shift(shift(p, c), -c) == p


@given(polys, st.integers(-3, 3), st.integers(-4, 4))
def test_shift_is_substitution(p, c, x):
    assert shift(p, c)(x) == p(x + c)


def test_root_multiplicity_examples():
    assert root_multiplicity(P([0, 0, 0, -1, 1]), 0) == 3
    assert root_multiplicity(FIG1B, 1) == 1
    assert root_multiplicity(P([0, 1, -2, 1]), 1) == 2
    with pytest.raises(PolynomialError, match="undefined multiplicity"):
        root_multiplicity(P(), 0)


@given(polys.filter(lambda p: not p.is_zero()), st.integers(-2, 2), st.integers(0, 3))
def test_root_multiplicity_is_exact(p, c, extra):
    p = p * P([-c, 1]) ** extra
    k = root_multiplicity(p, c)
    lin = P([-c, 1])
    assert k >= extra
    q, r = divmod(p, lin**k)
    assert r.is_zero()
    assert not divmod(p, lin ** (k + 1))[1].is_zero()


def test_has_factor_zero_polynomial():
    assert has_factor(P(), 1, 5)
    assert not has_factor(FIG1B, 1, 2)


def test_apex_transform_examples():
    assert apex_transform((1, 3), 3) == P([0, 2, -3, 0, 1])
    assert apex_transform((1,), 0) == LAMBDA
    assert apex_transform((1, 2, 1), 2) == P([0, 0, 0, 1])
    with pytest.raises(PolynomialError, match="independence degree exceeds order"):
        apex_transform((1, 2, 1), 1)


def test_evaluate_examples():
    assert evaluate(FIG1B, -1) == -2
    assert evaluate(P([0, -1, 0, 1]), 2) == 6
    assert evaluate(P(), 5) == 0
    assert isinstance(evaluate(FIG1B, Fraction(1, 3)), Fraction)


@given(polys, polys, st.lists(rationals, min_size=20, max_size=20))
def test_evaluation_is_multiplicative(p, q, points):
    for r in points:
        assert evaluate(p * q, r) == evaluate(p, r) * evaluate(q, r)


@given(polys, polys)
def test_ring_laws(p, q):
    assert p + q == q + p
    assert p * q == q * p
    assert (p - q) + q == p
    if not p.is_zero() and not q.is_zero():
        assert (p * q).degree == p.degree + q.degree


@given(polys, coeff_lists, st.sampled_from((1, -1)))
def test_divmod_monic(p, low, lead):
    q = P(low + [lead])
    quo, rem = divmod(p * q + P([1]), q)
    assert quo * q + rem == p * q + P([1])
    assert rem.degree < q.degree


def test_text_roundtrip():
    assert FIG1B.to_text() == "poly 4 0 1 -2 0 1"
    assert P.from_text("poly 4 0 1 -2 0 1") == FIG1B
    assert P().to_text() == "poly -1"
    assert P.from_text("poly -1") == P()
    for bad in ("poly 2 1 2", "poly x 1", "pol 0 1", "poly 1 1 0"):
        with pytest.raises(PolynomialError):
            P.from_text(bad)


def test_sturm_sqrt2():
    roots = sturm_real_roots(P([-2, 0, 1]), 20)
    assert [r.multiplicity for r in roots] == [1, 1]
    assert roots[0].lo < 0 < roots[1].lo
    for r in roots:
        assert r.hi - r.lo <= Fraction(1, 2**20)
        assert min(r.lo**2, r.hi**2) <= 2 <= max(r.lo**2, r.hi**2)


def test_sturm_repeated_root():
    roots = sturm_real_roots(P([0, 1, -2, 1]))
    assert [(r.exact, r.multiplicity) for r in roots] == [(0, 1), (1, 2)]


def test_sturm_apex_k3_shows_minus_two():
    roots = sturm_real_roots(P([0, 2, -3, 0, 1]))
    assert [(r.exact, r.multiplicity) for r in roots] == [(-2, 1), (0, 1), (1, 2)]


def test_sturm_rejects_zero():
    with pytest.raises(PolynomialError):
        sturm_real_roots(P())


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=6), st.integers(-3, 3).filter(bool))
def test_sturm_recovers_linear_factors(roots, lead):
    p = P.from_roots(roots) * lead
    found = sturm_real_roots(p)
    got = sorted(int(r.exact) for r in found for _ in range(r.multiplicity))
    assert got == sorted(roots)


@given(polys.filter(lambda p: p.degree >= 1), st.integers(4, 24))
def test_sturm_count_bounded_and_intervals_narrow(p, bits):
    roots = sturm_real_roots(p, bits)
    assert sum(r.multiplicity for r in roots) <= p.degree
    for r in roots:
        assert r.hi - r.lo <= Fraction(1, 2**bits)
        assert p(r.lo) == 0 or (p(r.lo) > 0) != (p(r.hi) > 0) or r.multiplicity % 2 == 0
    assert all(a.hi < b.lo for a, b in zip(roots, roots[1:]))


def test_bivar_specialize_examples():
    x_sub = BivarLaurent.laurent({0: 1, 2: -1})
    y_sub = BivarLaurent.laurent({0: 1, -1: -1})
    x, y = BivarLaurent.x(), BivarLaurent.y()
    assert bivar_specialize(x, x_sub, y_sub, 1, -1) == P([0, -1, 0, 1])
    assert bivar_specialize(x + y, x_sub, y_sub, 2, -1) == FIG1B
    assert bivar_specialize(BivarLaurent.constant(1), x_sub, y_sub, 1, 1) == LAMBDA
    with pytest.raises(PolynomialError, match="specialization not polynomial"):
        bivar_specialize(y, x_sub, y_sub, 0, 1)


def test_bivar_text_and_eval():
    t = BivarLaurent.x() ** 2 + BivarLaurent.x() + BivarLaurent.y()
    assert t.to_lines() == ["t 0 1 1", "t 1 0 1", "t 2 0 1"]
    assert BivarLaurent.from_lines(t.to_lines()) == t
    assert t(2, 0) == 6
    assert t.is_ordinary
    inv = BivarLaurent.laurent({-1: 1})
    assert not inv.is_ordinary
    with pytest.raises(ZeroDivisionError):
        inv(0, 1)
