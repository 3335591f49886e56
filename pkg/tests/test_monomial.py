import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chernkit.fourier_motzkin import feasible_point, is_feasible
from chernkit.groebner import colength
from chernkit.monomial import (DimensionPositiveError, MonomialIdeal, closure_colength,
                               graded_hilbert, h0_length, ideal_power,
                               integral_closure, minimalize, monomial_colength,
                               monomial_saturation, newton_membership, power_test,
                               standard_monomials)
from chernkit.simplicial import SimplicialComplex, stanley_reisner
from conftest import brute_colength, brute_graded, exponents, monomial_ideals


def M(*gens):
    return MonomialIdeal(tuple(gens), len(gens[0]))


# --- Fourier-Motzkin --------------------------------------------------------

def F(*xs):
    return tuple(Fraction(x) for x in xs)


def test_fm_simple_systems():
    # x + y <= 1, -x <= 0, -y <= 0, x - y <= -1/2
    rows = [(F(1, 1), Fraction(1)), (F(-1, 0), Fraction(0)), (F(0, -1), Fraction(0)),
            (F(1, -1), Fraction(-1, 2))]
    p = feasible_point(rows, 2)
    assert p is not None
    for coeffs, rhs in rows:
        assert sum(c * v for c, v in zip(coeffs, p)) <= rhs
    assert not is_feasible([(F(1), Fraction(0)), (F(-1), Fraction(-1))], 1)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.tuples(st.lists(st.integers(-3, 3), min_size=2, max_size=2), st.integers(-4, 4)),
                min_size=1, max_size=6))
def test_fm_matches_grid_search_on_bounded_2d_systems(raw):
    # box the system so a rational solution, if any, has a small denominator witness
    rows = [(F(*c), Fraction(r)) for c, r in raw]
    rows += [(F(1, 0), Fraction(5)), (F(-1, 0), Fraction(5)), (F(0, 1), Fraction(5)), (F(0, -1), Fraction(5))]
    p = feasible_point(rows, 2)
    if p is not None:
        assert all(sum(c * v for c, v in zip(coeffs, p)) <= rhs for coeffs, rhs in rows)
    else:
        # infeasible: no point of a fine grid in the box satisfies every row
        sample = [Fraction(k, 6) for k in range(-30, 31)]
        for x in sample:
            for y in sample:
                assert any(c[0] * x + c[1] * y > r for c, r in rows)


def reference_feasible(rows, nvars):
    """Plain Fourier-Motzkin without any pruning: slow but obviously correct."""
    rows = [(tuple(Fraction(c) for c in a), Fraction(b)) for a, b in rows]
    for k in range(nvars):
        pos = [r for r in rows if r[0][k] > 0]
        neg = [r for r in rows if r[0][k] < 0]
        nxt = [r for r in rows if r[0][k] == 0]
        for a, b in pos:
            for c, d in neg:
                s, t = -c[k], a[k]
                row = tuple(s * x + t * y for x, y in zip(a, c))
                scale = max((abs(x) for x in row), default=0) or 1
                nxt.append((tuple(x / scale for x in row), (s * b + t * d) / scale))
        rows = list(set(nxt))
    return all(b >= 0 for _, b in rows)


def test_fm_keeps_equal_rows_with_different_origins():
    # w >= 0 and w0 + w1 + 2 w2 + w3 <= 0 force w = 0, contradicting the second row
    rows = [((-1, 0, 0, 0), 0), ((0, -1, 0, 0), 0), ((0, 0, -1, 0), 0), ((0, 0, 0, -1), 0),
            ((1, 1, 1, 1), 1), ((-3, -2, -1, -1), -1), ((4, 3, 1, 2), 1), ((1, 1, 2, 1), 0)]
    assert feasible_point([(F(*a), Fraction(b)) for a, b in rows], 4) is None


@settings(max_examples=300, deadline=None)
@given(st.integers(3, 4).flatmap(lambda n: st.tuples(st.just(n), st.lists(
    st.tuples(st.lists(st.integers(-3, 3), min_size=n, max_size=n), st.integers(-2, 2)),
    min_size=1, max_size=6))))
def test_fm_matches_unpruned_elimination(case):
    n, raw = case
    # non-negative variables, as in the Newton membership systems
    rows = [(F(*c), Fraction(r)) for c, r in raw]
    rows += [(F(*[-1 if j == i else 0 for j in range(n)]), Fraction(0)) for i in range(n)]
    p = feasible_point(rows, n)
    assert (p is not None) == reference_feasible(rows, n)
    if p is not None:
        assert all(sum(c * v for c, v in zip(coeffs, p)) <= rhs for coeffs, rhs in rows)


# --- basic ideal operations -------------------------------------------------

def test_minimalize():
    assert set(minimalize([(2, 0), (3, 0), (0, 1)]).gens) == {(2, 0), (0, 1)}
    assert minimalize([], 2).is_zero()
    assert set(minimalize([(1, 1), (2, 1), (1, 2)]).gens) == {(1, 1)}


def test_ideal_power():
    assert set(ideal_power(M((1, 0), (0, 1)), 2).gens) == {(2, 0), (1, 1), (0, 2)}
    assert set(ideal_power(M((2, 0), (0, 2)), 2).gens) == {(4, 0), (2, 2), (0, 4)}
    I = M((3, 1), (0, 2))
    assert ideal_power(I, 1) == I


def test_graded_hilbert_examples():
    bd = stanley_reisner(SimplicialComplex.boundary_of_simplex(3))
    assert bd.gens == ((1, 1, 1),)
    assert graded_hilbert(bd, 2) == 6
    assert graded_hilbert(MonomialIdeal.zero(2), 3) == 4
    m = MonomialIdeal.maximal(3)
    assert all(graded_hilbert(m, n) == 0 for n in range(1, 5))


def test_colength_examples():
    for I, v in [(M((1, 0), (0, 1)), 1), (M((2, 0), (1, 1), (0, 2)), 3), (M((1, 0, 0), (0, 1, 0), (0, 0, 2)), 2)]:
        assert monomial_colength(I) == v == colength(I)
    with pytest.raises(DimensionPositiveError):
        monomial_colength(M((1, 0)))


def test_saturation_examples():
    I = M((1, 0, 1), (0, 1, 1), (0, 0, 2))
    assert monomial_saturation(I) == M((0, 0, 1))
    assert monomial_saturation(M((3, 0), (1, 1), (0, 2))).is_unit()
    d2 = stanley_reisner(SimplicialComplex.delta(2))
    assert monomial_saturation(d2) == d2


def test_h0_length_examples():
    assert h0_length(M((1, 0, 1), (0, 1, 1), (0, 0, 2))) == 1
    assert h0_length(M((0, 0, 1))) == 0
    assert h0_length(M((2, 0), (1, 1))) == 1


def test_standard_monomials():
    assert sorted(standard_monomials(M((2, 0), (1, 1), (0, 2)))) == [(0, 0), (0, 1), (1, 0)]


# --- integral closure -------------------------------------------------------

def test_closure_examples():
    assert set(integral_closure(M((2, 0), (0, 2))).gens) == {(2, 0), (1, 1), (0, 2)}
    assert integral_closure(M((2, 3, 1))) == M((2, 3, 1))
    assert set(integral_closure(M((3, 0), (0, 3))).gens) == {(3, 0), (2, 1), (1, 2), (0, 3)}


def test_newton_certificates():
    cert = newton_membership((1, 1), M((2, 0), (0, 2)))
    assert cert is not None and cert.verify()
    assert sorted(cert.weights) == [Fraction(1, 2), Fraction(1, 2)]
    cert = newton_membership((3, 1), M((3, 1), (0, 5)))
    assert cert.verify() and Fraction(1) in cert.weights
    assert newton_membership((1, 0), M((2, 0), (0, 2))) is None
    assert power_test((1, 0), M((2, 0), (0, 2)), 10) is None
    assert power_test((1, 1), M((2, 0), (0, 2))) == 2
    assert power_test((2, 1), M((3, 0), (0, 3))) == 3


@settings(max_examples=80, deadline=None)
@given(monomial_ideals(max_gens=4, max_deg=5), st.data())
def test_newton_membership_matches_power_test(I, data):
    a = data.draw(exponents(I.nvars, 5))
    cert = newton_membership(a, I)
    assert (cert is not None) == (power_test(a, I, 12) is not None)
    if cert is not None:
        assert cert.verify()


@settings(max_examples=40, deadline=None)
@given(monomial_ideals(max_gens=4, max_deg=5))
def test_closure_contains_and_is_idempotent(I):
    C = integral_closure(I)
    assert I <= C
    assert integral_closure(C) == C


@settings(max_examples=20, deadline=None)
@given(monomial_ideals(nvars=2, max_gens=3, max_deg=4))
def test_power_of_closure_inside_closure_of_power(I):
    C = integral_closure(I)
    for n in range(1, 4):
        assert ideal_power(C, n) <= integral_closure(ideal_power(I, n))


@settings(max_examples=40, deadline=None)
@given(monomial_ideals(max_gens=4, max_deg=5, zero_dim=True))
def test_closure_colength_matches_generators(I):
    assert closure_colength(I) == monomial_colength(integral_closure(I))


# --- counting oracles -------------------------------------------------------

@settings(max_examples=100, deadline=None)
@given(monomial_ideals(max_gens=6, max_deg=6, zero_dim=True))
def test_colength_matches_enumeration(I):
    assert monomial_colength(I) == brute_colength(I.gens, I.nvars) == colength(I)


@settings(max_examples=100, deadline=None)
@given(monomial_ideals(max_gens=5, max_deg=5), st.integers(0, 7))
def test_graded_hilbert_matches_enumeration(I, n):
    assert graded_hilbert(I, n) == brute_graded(I.gens, I.nvars, n)


@settings(max_examples=60, deadline=None)
@given(monomial_ideals(max_gens=5, max_deg=4))
def test_h0_zero_iff_saturated(I):
    assert (h0_length(I) == 0) == (monomial_saturation(I) == I)


@settings(max_examples=60, deadline=None)
@given(monomial_ideals(max_gens=5, max_deg=4))
def test_minimal_generators_are_an_antichain(I):
    for g, h in itertools.permutations(I.gens, 2):
        assert not all(a <= b for a, b in zip(g, h))


def test_face_ring_graded_counts_match_faces():
    # degree-n monomials supported on a face of the complex
    cx = SimplicialComplex.from_facets([{1, 2, 3}, {3, 4}, {4, 5}])
    I = stanley_reisner(cx)
    for n in range(5):
        count = 0
        for e in itertools.product(range(n + 1), repeat=5):
            if sum(e) == n and cx.is_face({i + 1 for i, a in enumerate(e) if a}):
                count += 1
        assert graded_hilbert(I, n) == count
