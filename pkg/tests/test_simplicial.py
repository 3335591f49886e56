import itertools
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chernkit.hilbert import fit, graded_series_table
from chernkit.monomial import graded_hilbert
from chernkit.simplicial import (FaceBits, SimplicialComplex, bits_chern, chern_number_face_ring,
                                 closure_adds_nothing, crosscheck_chern, f_vector, h_prime_at_one,
                                 h_vector, is_pure, iter_complexes, stanley_reisner,
                                 survey_complexes)
from chernkit.simplicial import _complexes_on


def test_f_and_h_vector_examples():
    d2 = SimplicialComplex.delta(2)
    assert f_vector(d2) == (1, 4, 1)
    assert h_vector(f_vector(d2)) == (1, 2, -2)
    bd = SimplicialComplex.boundary_of_simplex(3)
    assert f_vector(bd) == (1, 3, 3)
    assert h_vector(f_vector(bd)) == (1, 1, 1)
    assert f_vector(SimplicialComplex.simplex(3)) == (1, 3, 3, 1)
    assert h_vector((1, 3, 3, 1)) == (1, 0, 0, 0)


def test_from_facets_validation():
    cx = SimplicialComplex.from_facets([{1, 2}, {1}, {2, 3}])
    assert cx.sorted_facets() == [[1, 2], [2, 3]]
    with pytest.raises(ValueError):
        SimplicialComplex.from_facets([{1, 3}])
    with pytest.raises(ValueError):
        SimplicialComplex.from_facets([])
    with pytest.raises(ValueError):
        SimplicialComplex.from_facets([{0, 1}])


def test_stanley_reisner_examples():
    assert stanley_reisner(SimplicialComplex.boundary_of_simplex(3)).gens == ((1, 1, 1),)
    assert stanley_reisner(SimplicialComplex.simplex(3)).is_zero()
    # an edge plus an isolated point: both non-edges are minimal non-faces
    assert set(stanley_reisner(SimplicialComplex.delta(1)).gens) == {(1, 0, 1), (0, 1, 1)}
    # a 4-cycle: the two diagonals
    cyc = SimplicialComplex.from_facets([{1, 2}, {2, 3}, {3, 4}, {1, 4}])
    assert set(stanley_reisner(cyc).gens) == {(1, 0, 1, 0), (0, 1, 0, 1)}


def test_delta_family_chern_numbers():
    for n in range(2, 11):
        assert chern_number_face_ring(SimplicialComplex.delta(n)) == -n


def test_crosscheck_examples():
    for cx in [SimplicialComplex.delta(2), SimplicialComplex.boundary_of_simplex(3),
               SimplicialComplex.boundary_of_simplex(4), SimplicialComplex.simplex(2),
               SimplicialComplex.from_facets([{1, 2, 3}, {3, 4}, {4, 5}])]:
        rep = crosscheck_chern(cx)
        assert rep.agree, rep.as_dict()
    assert crosscheck_chern(SimplicialComplex.boundary_of_simplex(3)).formula_value == 3


def test_graded_series_counts_faces():
    # H(m) = sum over faces F of the monomials of degree m with support exactly F
    cx = SimplicialComplex.from_facets([{1, 2, 3}, {3, 4}])
    f = f_vector(cx)
    I = stanley_reisner(cx)
    for m in range(1, 7):
        expected = sum(f[i] * comb(m - 1, i - 1) for i in range(1, len(f)))
        assert graded_hilbert(I, m) == expected


def test_corpus_counts_per_vertex_count():
    # complexes with every vertex a face, on exactly n labelled vertices
    assert [sum(1 for _ in _complexes_on(n)) for n in range(1, 6)] == [1, 2, 9, 114, 6894]
    assert sum(1 for _ in iter_complexes(5)) == 7020
    assert sum(1 for _ in iter_complexes(6, cap=1000)) == 1000


def test_face_bits_round_trip():
    for cx in iter_complexes(4):
        sc = cx.to_complex()
        assert f_vector(sc) == cx.f_vector()
        assert is_pure(sc) == cx.is_pure()
        assert chern_number_face_ring(sc) == bits_chern(cx)


def test_survey_small():
    rep = survey_complexes(4)
    assert rep.complexes == 126
    assert rep.identity_holds and rep.pure_nonnegative
    assert rep.min_e1 < 0 < rep.negative_nonpure
    assert rep.as_dict()["complexes"] == 126


def test_h_invariants_on_corpus():
    for cx in iter_complexes(5):
        f = cx.f_vector()
        h = h_vector(f)
        d = len(f) - 1
        assert sum(h) == f[d]
        if d >= 1:
            assert h[1] == f[1] - d
        assert h_prime_at_one(h) == bits_chern(cx)


def test_closure_adds_nothing_on_sample():
    sample = list(itertools.islice(iter_complexes(4), 0, 126, 9))
    for cx in sample:
        sc = cx.to_complex()
        for n in (1, 2, 3):
            assert closure_adds_nothing(sc, n)


facet_lists = st.lists(st.frozensets(st.integers(1, 5), min_size=1, max_size=4), min_size=1, max_size=5)


@settings(max_examples=30, deadline=None)
@given(facet_lists)
def test_fitted_e1_matches_formula(facets):
    used = sorted(set().union(*facets))
    relabel = {v: i + 1 for i, v in enumerate(used)}
    cx = SimplicialComplex.from_facets([{relabel[v] for v in f} for f in facets])
    P = fit(graded_series_table(stanley_reisner(cx), 2 * cx.d + 3))
    assert P.d == cx.d
    assert P.multiplicity == f_vector(cx)[cx.d]
    assert P.chern == chern_number_face_ring(cx) == h_prime_at_one(h_vector(f_vector(cx)))


def test_face_bits_pure_detection():
    # vertices 0, 1 and edge {0, 1}, plus isolated vertex 2: not pure
    bits = 1 | (1 << 1) | (1 << 2) | (1 << 4) | (1 << 3)
    cx = FaceBits(bits, 3)
    assert cx.f_vector() == (1, 3, 1)
    assert not cx.is_pure()
    assert sorted(cx.facets()) == [[1, 2], [3]]
