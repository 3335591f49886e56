"""Simplicial complexes, f- and h-vectors, Stanley-Reisner ideals and face-ring Chern numbers."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

from .filtration import Filtration
from .hilbert import fit, graded_series_table
from .monomial import MonomialIdeal, closure_colength, ideal_power, monomial_colength


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on vertices 1..nvertices given by its facets.

    Every vertex must lie in some facet; facets contained in others are dropped.
    """

    facets: frozenset[frozenset[int]]
    nvertices: int

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]], nvertices: int | None = None) -> "SimplicialComplex":
        sets = [frozenset(f) for f in facets]
        if not sets or any(not f for f in sets):
            raise ValueError("a complex needs nonempty facets")
        used = set().union(*sets)
        if min(used) < 1:
            raise ValueError("vertices are numbered from 1")
        n = max(used) if nvertices is None else nvertices
        missing = set(range(1, n + 1)) - used
        if missing or max(used) > n:
            raise ValueError(f"vertices {sorted(missing)} lie in no facet")
        maximal = frozenset(f for f in sets if not any(f < g for g in sets))
        return cls(maximal, n)

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        return cls.from_facets([range(1, n + 1)])

    @classmethod
    def boundary_of_simplex(cls, n: int) -> "SimplicialComplex":
        return cls.from_facets(itertools.combinations(range(1, n + 1), n - 1))

    @classmethod
    def delta(cls, n: int) -> "SimplicialComplex":
        """An edge {1, 2} together with isolated vertices 3, ..., n + 2."""
        return cls.from_facets([{1, 2}] + [{v} for v in range(3, n + 3)])

    @property
    def d(self) -> int:
        """Largest facet size, i.e. dim + 1 (the Krull dimension of the face ring)."""
        return max(len(f) for f in self.facets)

    @property
    def dimension(self) -> int:
        return self.d - 1

    def faces(self) -> set[frozenset[int]]:
        out: set[frozenset[int]] = set()
        for facet in self.facets:
            items = sorted(facet)
            for k in range(len(items) + 1):
                out.update(frozenset(c) for c in itertools.combinations(items, k))
        return out

    def is_face(self, s: Iterable[int]) -> bool:
        s = frozenset(s)
        return any(s <= f for f in self.facets)

    def sorted_facets(self) -> list[list[int]]:
        return sorted((sorted(f) for f in self.facets), key=lambda f: (len(f), f))


def f_vector(cx: SimplicialComplex) -> tuple[int, ...]:
    """(f_{-1}, f_0, ..., f_{d-1}); entry i counts faces with i vertices."""
    counts = [0] * (cx.d + 1)
    for face in cx.faces():
        counts[len(face)] += 1
    return tuple(counts)


def h_vector(f: Iterable[int]) -> tuple[int, ...]:
    """Coefficients of sum_i f_{i-1} t^i (1 - t)^(d - i), where ``f[i] = f_{i-1}``."""
    f = tuple(f)
    d = len(f) - 1
    h = [0] * (d + 1)
    for i, fi in enumerate(f):
        for j in range(d - i + 1):
            h[i + j] += fi * comb(d - i, j) * (-1) ** j
    return tuple(h)


def h_prime_at_one(h: Iterable[int]) -> int:
    return sum(i * hi for i, hi in enumerate(h))


def is_pure(cx: SimplicialComplex) -> bool:
    return len({len(f) for f in cx.facets}) == 1


def stanley_reisner(cx: SimplicialComplex) -> MonomialIdeal:
    """Squarefree ideal generated by the minimal non-faces."""
    n = cx.nvertices
    faces = cx.faces()
    gens = []
    for k in range(1, cx.d + 2):
        for combo in itertools.combinations(range(1, n + 1), k):
            s = frozenset(combo)
            if s in faces:
                continue
            if all(s - {v} in faces for v in s):
                gens.append(tuple(1 if v in s else 0 for v in range(1, n + 1)))
    return MonomialIdeal(tuple(gens), n)


def chern_number_face_ring(cx: SimplicialComplex) -> int:
    """e_1 of the maximal homogeneous ideal of k[cx]: d f_{d-1} - f_{d-2}."""
    f = f_vector(cx)
    d = cx.d
    return d * f[d] - f[d - 1]


def _fit_nmax(cx: SimplicialComplex, n_max: int | None) -> int:
    need = 2 * cx.d + 3
    return need if n_max is None else max(n_max, need)


def fitted_chern(cx: SimplicialComplex, n_max: int | None = None) -> int:
    """e_1 from fitting the cumulative graded Hilbert function of k[cx]."""
    table = graded_series_table(stanley_reisner(cx), _fit_nmax(cx, n_max))
    return fit(table).chern


def normal_filtration(cx: SimplicialComplex) -> Filtration:
    """Integral closures of the powers of the maximal ideal, taken modulo I_cx."""
    n = cx.nvertices
    return Filtration.integral_closure(MonomialIdeal.maximal(n), stanley_reisner(cx))


def normal_fitted_chern(cx: SimplicialComplex, n_max: int | None = None) -> int:
    return fit(normal_filtration(cx).table(_fit_nmax(cx, n_max))).chern


def closure_adds_nothing(cx: SimplicialComplex, n: int) -> bool:
    """The integral closure of m^n + I_cx has the same standard monomials as m^n + I_cx."""
    ideal = ideal_power(MonomialIdeal.maximal(cx.nvertices), n) + stanley_reisner(cx)
    return closure_colength(ideal) == monomial_colength(ideal)


@dataclass(frozen=True)
class ChernCrosscheck:
    formula_value: int
    fitted_e1: int
    normal_fitted_e1: int

    @property
    def agree(self) -> bool:
        return self.formula_value == self.fitted_e1 == self.normal_fitted_e1

    def as_dict(self) -> dict:
        return {"formula_value": self.formula_value, "fitted_e1": self.fitted_e1,
                "normal_fitted_e1": self.normal_fitted_e1, "agree": self.agree}


def crosscheck_chern(cx: SimplicialComplex, n_max: int | None = None) -> ChernCrosscheck:
    return ChernCrosscheck(chern_number_face_ring(cx), fitted_chern(cx, n_max),
                           normal_fitted_chern(cx, n_max))


# ---------------------------------------------------------------------------
# Exhaustive corpus of small complexes, as bitsets over vertex masks

@dataclass(frozen=True)
class FaceBits:
    """A complex on vertices 0..n-1 as an integer whose bit ``m`` marks face mask ``m``."""

    bits: int
    n: int

    def f_vector(self) -> tuple[int, ...]:
        levels = _levels(self.n)
        f = [bin(self.bits & lv).count("1") for lv in levels]
        while f and f[-1] == 0:
            f.pop()
        return tuple(f)

    def is_pure(self) -> bool:
        f = self.f_vector()
        top = len(f) - 1
        sub = _submask_bits(self.n)
        covered = 0
        top_faces = self.bits & _levels(self.n)[top]
        while top_faces:
            low = top_faces & -top_faces
            covered |= sub[low.bit_length() - 1]
            top_faces ^= low
        return covered == self.bits

    def facets(self) -> list[list[int]]:
        masks = [m for m in range(1 << self.n) if (self.bits >> m) & 1]
        out = []
        for m in masks:
            if not any((self.bits >> (m | (1 << v))) & 1 for v in range(self.n) if not (m >> v) & 1):
                out.append([v + 1 for v in range(self.n) if (m >> v) & 1])
        return out

    def to_complex(self) -> SimplicialComplex:
        return SimplicialComplex.from_facets(self.facets(), self.n)


_LEVELS: dict[int, list[int]] = {}
_SUBMASKS: dict[int, list[int]] = {}


def _levels(n: int) -> list[int]:
    if n not in _LEVELS:
        lv = [0] * (n + 1)
        for m in range(1 << n):
            lv[bin(m).count("1")] |= 1 << m
        _LEVELS[n] = lv
    return _LEVELS[n]


def _submask_bits(n: int) -> list[int]:
    if n not in _SUBMASKS:
        out = []
        for m in range(1 << n):
            bits, s = 0, m
            while True:
                bits |= 1 << s
                if s == 0:
                    break
                s = (s - 1) & m
            out.append(bits)
        _SUBMASKS[n] = out
    return _SUBMASKS[n]


def _complexes_on(n: int) -> Iterator[FaceBits]:
    """Every complex on exactly the vertices 0..n-1, built level by level."""
    base = 1  # the empty face
    for v in range(n):
        base |= 1 << (1 << v)
    by_size: list[list[int]] = [[] for _ in range(n + 1)]
    for m in range(1 << n):
        by_size[bin(m).count("1")].append(m)

    def extend(bits: int, k: int) -> Iterator[int]:
        if k > n:
            yield bits
            return
        cands = [m for m in by_size[k]
                 if all((bits >> (m ^ (1 << v))) & 1 for v in range(n) if (m >> v) & 1)]
        if not cands:
            yield bits
            return
        for choice in range(1 << len(cands)):
            new = bits
            for i, m in enumerate(cands):
                if (choice >> i) & 1:
                    new |= 1 << m
            if choice == 0:
                yield new
            else:
                yield from extend(new, k + 1)

    for bits in extend(base, 2):
        yield FaceBits(bits, n)


def iter_complexes(max_vertices: int, cap: int = 200_000) -> Iterator[FaceBits]:
    """All complexes on 1..n for n = 1..max_vertices, stopping after ``cap`` of them."""
    count = 0
    for n in range(1, max_vertices + 1):
        for cx in _complexes_on(n):
            yield cx
            count += 1
            if count >= cap:
                return


def bits_chern(cx: FaceBits) -> int:
    f = cx.f_vector()
    d = len(f) - 1
    return d * f[d] - f[d - 1]


@dataclass(frozen=True)
class SurveyReport:
    complexes: int
    pure: int
    identity_failures: tuple[tuple[int, int], ...]  # (vertices, bits) where d f - f != h'(1)
    pure_negative: tuple[tuple[int, int], ...]      # pure complexes with e_1 < 0
    negative_nonpure: int
    min_e1: int

    @property
    def identity_holds(self) -> bool:
        return not self.identity_failures

    @property
    def pure_nonnegative(self) -> bool:
        return not self.pure_negative

    def as_dict(self) -> dict:
        return {"complexes": self.complexes, "pure": self.pure,
                "identity_failures": [list(x) for x in self.identity_failures],
                "pure_negative": [list(x) for x in self.pure_negative],
                "negative_nonpure": self.negative_nonpure, "min_e1": self.min_e1,
                "identity_holds": self.identity_holds, "pure_nonnegative": self.pure_nonnegative}


def survey_complexes(max_vertices: int = 6, cap: int = 200_000) -> SurveyReport:
    """Check e_1 = d f_{d-1} - f_{d-2} = h'(1) on every small complex, and its sign on pure ones."""
    count = pure = negative_nonpure = 0
    failures, pure_negative = [], []
    min_e1 = 0
    for cx in iter_complexes(max_vertices, cap):
        count += 1
        e1 = bits_chern(cx)
        if h_prime_at_one(h_vector(cx.f_vector())) != e1:
            failures.append((cx.n, cx.bits))
        min_e1 = min(min_e1, e1)
        if cx.is_pure():
            pure += 1
            if e1 < 0:
                pure_negative.append((cx.n, cx.bits))
        elif e1 < 0:
            negative_nonpure += 1
    return SurveyReport(count, pure, tuple(failures), tuple(pure_negative), negative_nonpure, min_e1)
