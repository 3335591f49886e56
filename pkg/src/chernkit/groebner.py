"""Buchberger's algorithm over Q and the ideal operations built on it.

Internally polynomials are ``dict`` maps from exponent tuples to Python
ints kept primitive (content 1); reduction is fraction-free. Results are
returned as monic :class:`Polynomial` objects with rational coefficients.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .algebra import (DEGREVLEX, ArityError, Exponent, MonomialOrder, Polynomial,
                      block_order)
from .monomial import DimensionPositiveError, MonomialIdeal, monomial_colength

DEFAULT_MAX_PAIRS = 100_000
DEFAULT_MAX_DEGREE = 60


class BudgetExceeded(RuntimeError):
    """A configured resource cap was hit; the computation was abandoned, not truncated."""


@dataclass(frozen=True)
class Ideal:
    """An ideal presented by generators in a polynomial ring with ``nvars`` variables."""

    gens: tuple[Polynomial, ...]
    nvars: int

    def __post_init__(self):
        for g in self.gens:
            if g.nvars != self.nvars:
                raise ArityError(f"generator {g} lives in {g.nvars} variables, not {self.nvars}")
        object.__setattr__(self, "gens", tuple(g for g in self.gens if not g.is_zero()))

    @classmethod
    def of(cls, gens: Iterable[Polynomial], nvars: int | None = None) -> "Ideal":
        gens = tuple(gens)
        if nvars is None:
            if not gens:
                raise ValueError("cannot infer arity of an empty ideal; pass nvars")
            nvars = gens[0].nvars
        return cls(gens, nvars)

    @classmethod
    def from_monomial(cls, ideal: MonomialIdeal) -> "Ideal":
        return cls(tuple(Polynomial.monomial(g) for g in ideal.gens), ideal.nvars)

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.nvars != self.nvars:
            raise ArityError("arity mismatch")
        return Ideal(self.gens + other.gens, self.nvars)

    def __mul__(self, other: "Ideal") -> "Ideal":
        if other.nvars != self.nvars:
            raise ArityError("arity mismatch")
        return Ideal(tuple(f * g for f in self.gens for g in other.gens), self.nvars)

    def power(self, n: int) -> "Ideal":
        result = Ideal((Polynomial.constant(1, self.nvars),), self.nvars)
        for _ in range(n):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return not self.gens


# ---------------------------------------------------------------------------
# Fraction-free integer polynomial kernel

def _primitive(d: dict[Exponent, int]) -> dict[Exponent, int]:
    g = 0
    for c in d.values():
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        d = {e: c // g for e, c in d.items()}
    return d


def _to_int(f: Polynomial) -> tuple[dict[Exponent, int], Fraction]:
    """Integer multiple ``scale * f`` as a dict, together with ``scale``."""
    den = 1
    for c, _ in f.terms:
        den = den * c.denominator // gcd(den, c.denominator)
    return {e: int(c * den) for c, e in f.terms}, Fraction(den)


class _GPoly:
    __slots__ = ("lt", "lc", "terms", "deg")

    def __init__(self, terms: dict[Exponent, int], key):
        self.terms = terms
        self.lt = max(terms, key=key)
        self.lc = terms[self.lt]
        self.deg = max(sum(e) for e in terms)


class _Kernel:
    def __init__(self, order: MonomialOrder):
        self.order = order
        self.key = order.key
        self._neg: dict[Exponent, tuple] = {}

    def negkey(self, e: Exponent) -> tuple:
        k = self._neg.get(e)
        if k is None:
            k = tuple(-x for x in self.key(e))
            self._neg[e] = k
        return k

    def make(self, terms: dict[Exponent, int]) -> _GPoly:
        g = _GPoly(_primitive(terms), self.key)
        if g.lc < 0:
            g.terms = {e: -c for e, c in g.terms.items()}
            g.lc = -g.lc
        return g

    def reduce(self, f: dict[Exponent, int], basis: Sequence[_GPoly],
               tail: bool = True) -> tuple[dict[Exponent, int], int]:
        """Fraction-free remainder of ``f``; returns ``(r, s)`` with ``s*f - r`` in the ideal.

        With ``tail=False`` only the leading term is reduced.
        """
        f = dict(f)
        rem: dict[Exponent, int] = {}
        scale = 1
        heap = [(self.negkey(e), e) for e in f]
        heapq.heapify(heap)
        lts = [(g.lt, g) for g in basis]
        while heap:
            _, e = heapq.heappop(heap)
            c = f.pop(e, None)
            if c is None:
                continue
            reducer = None
            for lt, g in lts:
                if all(a <= b for a, b in zip(lt, e)):
                    reducer = g
                    break
            if reducer is None:
                rem[e] = c
                if not tail:
                    for e2, c2 in f.items():
                        rem[e2] = c2
                    break
                continue
            lc = reducer.lc
            k = gcd(c, lc)
            a, b = lc // k, c // k
            if a != 1:
                scale *= a
                for e2 in f:
                    f[e2] *= a
                for e2 in rem:
                    rem[e2] *= a
            q = tuple(x - y for x, y in zip(e, reducer.lt))
            for ge, gc in reducer.terms.items():
                if ge == reducer.lt:
                    continue
                ne = tuple(x + y for x, y in zip(ge, q))
                old = f.get(ne)
                if old is None:
                    f[ne] = -b * gc
                    heapq.heappush(heap, (self.negkey(ne), ne))
                else:
                    v = old - b * gc
                    if v:
                        f[ne] = v
                    else:
                        del f[ne]
            if len(rem) + len(f) > 64 and a != 1:
                g = 0
                for v in itertools.chain(f.values(), rem.values()):
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    f = {e2: v // g for e2, v in f.items()}
                    rem = {e2: v // g for e2, v in rem.items()}
                    scale = Fraction(scale, g)
        return rem, scale

    def spoly(self, g1: _GPoly, g2: _GPoly) -> dict[Exponent, int]:
        m = tuple(max(a, b) for a, b in zip(g1.lt, g2.lt))
        q1 = tuple(x - y for x, y in zip(m, g1.lt))
        q2 = tuple(x - y for x, y in zip(m, g2.lt))
        k = gcd(g1.lc, g2.lc)
        a1, a2 = g2.lc // k, g1.lc // k
        out: dict[Exponent, int] = {}
        for e, c in g1.terms.items():
            ne = tuple(x + y for x, y in zip(e, q1))
            out[ne] = out.get(ne, 0) + a1 * c
        for e, c in g2.terms.items():
            ne = tuple(x + y for x, y in zip(e, q2))
            v = out.get(ne, 0) - a2 * c
            if v:
                out[ne] = v
            else:
                out.pop(ne, None)
        return out


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _disjoint(a: Exponent, b: Exponent) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


@dataclass(frozen=True)
class GroebnerBasis:
    """A Groebner basis; elements are monic and sorted by increasing leading monomial."""

    polys: tuple[Polynomial, ...]
    order: MonomialOrder
    nvars: int
    reduced: bool = True
    _internal: tuple = field(default=(), compare=False, repr=False)

    def leading_monomials(self) -> list[Exponent]:
        return [p.leading_monomial() for p in self.polys]

    def is_unit(self) -> bool:
        return any(not any(lm) for lm in self.leading_monomials())

    def ideal(self) -> Ideal:
        return Ideal(self.polys, self.nvars)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)


@dataclass
class BuchbergerStats:
    pairs_considered: int = 0
    pairs_reduced: int = 0
    zero_reductions: int = 0


def buchberger(ideal: Ideal | Sequence[Polynomial], order: MonomialOrder = DEGREVLEX,
               max_pairs: int = DEFAULT_MAX_PAIRS, max_degree: int = DEFAULT_MAX_DEGREE,
               stats: BuchbergerStats | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal`` under ``order``.

    Uses the Gebauer-Moeller installation of Buchberger's product and chain
    criteria, and selects pairs with the smallest lcm (degree first).
    """
    if not isinstance(ideal, Ideal):
        ideal = Ideal.of(ideal)
    nvars = ideal.nvars
    kern = _Kernel(order)
    stats = stats if stats is not None else BuchbergerStats()
    polys: list[_GPoly] = []
    basis: list[int] = []
    pairs: set[tuple[int, int]] = set()
    queue: list = []

    def pair_key(i, j):
        m = _lcm(polys[i].lt, polys[j].lt)
        return (sum(m), order.key(m), i, j)

    def install(h: int) -> None:
        nonlocal basis, pairs
        lth = polys[h].lt
        cands = list(basis)
        keep = []
        # Chain criterion among the new pairs (h, g).
        while cands:
            g = cands.pop()
            m = _lcm(lth, polys[g].lt)
            if _disjoint(lth, polys[g].lt) or (
                    not any(_divides(_lcm(lth, polys[o].lt), m) for o in cands)
                    and not any(_divides(_lcm(lth, polys[o].lt), m) for o in keep)):
                keep.append(g)
        fresh = [g for g in keep if not _disjoint(lth, polys[g].lt)]
        survivors = set()
        for (i, j) in pairs:
            m = _lcm(polys[i].lt, polys[j].lt)
            if (not _divides(lth, m) or _lcm(polys[i].lt, lth) == m
                    or _lcm(polys[j].lt, lth) == m):
                survivors.add((i, j))
        for g in fresh:
            p = (min(g, h), max(g, h))
            survivors.add(p)
            heapq.heappush(queue, (pair_key(*p), p))
        pairs = survivors
        basis = [g for g in basis if not _divides(lth, polys[g].lt)] + [h]

    def add(terms: dict[Exponent, int]) -> None:
        g = kern.make(terms)
        if g.deg > max_degree:
            raise BudgetExceeded(f"polynomial degree {g.deg} exceeds cap {max_degree}")
        polys.append(g)
        install(len(polys) - 1)

    for f in ideal.gens:
        terms, _ = _to_int(f)
        add(terms)

    while pairs:
        _, p = heapq.heappop(queue)
        if p not in pairs:
            continue
        pairs.discard(p)
        stats.pairs_considered += 1
        if stats.pairs_considered > max_pairs:
            raise BudgetExceeded(f"more than {max_pairs} critical pairs")
        s = kern.spoly(polys[p[0]], polys[p[1]])
        if not s:
            stats.zero_reductions += 1
            continue
        r, _ = kern.reduce(s, [polys[g] for g in basis])
        stats.pairs_reduced += 1
        if not r:
            stats.zero_reductions += 1
            continue
        add(r)

    return _finalize([polys[g] for g in basis], kern, nvars)


def _finalize(gpolys: list[_GPoly], kern: _Kernel, nvars: int) -> GroebnerBasis:
    # Drop elements with a divisible leading term, then inter-reduce tails.
    gpolys = sorted(gpolys, key=lambda g: kern.key(g.lt))
    minimal: list[_GPoly] = []
    for g in gpolys:
        if not any(_divides(h.lt, g.lt) for h in minimal):
            minimal.append(g)
    reduced: list[_GPoly] = []
    for g in minimal:
        others = [h for h in minimal if h is not g]
        tail = {e: c for e, c in g.terms.items() if e != g.lt}
        r, s = kern.reduce(tail, others)
        s = Fraction(s)
        # s * tail - r is in the ideal, so s*lc*x^lt + r is the reduced element (up to scale).
        new = {e: Fraction(c) for e, c in r.items()}
        new[g.lt] = s * g.lc
        den = 1
        for v in new.values():
            den = den * v.denominator // gcd(den, v.denominator)
        reduced.append(kern.make({e: int(v * den) for e, v in new.items()}))
    order = kern.order
    polys = tuple(_to_poly(g, nvars, order) for g in reduced)
    return GroebnerBasis(polys, order, nvars, True, tuple(reduced))


def _to_poly(g: _GPoly, nvars: int, order: MonomialOrder) -> Polynomial:
    lc = g.lc
    return Polynomial({e: Fraction(c, lc) for e, c in g.terms.items()}, nvars, order)


def _internal(G: GroebnerBasis) -> list[_GPoly]:
    if G._internal:
        return list(G._internal)
    kern = _Kernel(G.order)
    return [kern.make(_to_int(p)[0]) for p in G.polys]


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` on division by ``G``; zero iff ``f`` lies in the ideal."""
    if f.nvars != G.nvars:
        raise ArityError(f"arity mismatch: {f.nvars} vs {G.nvars}")
    if f.is_zero():
        return Polynomial.zero(G.nvars, G.order)
    kern = _Kernel(G.order)
    terms, den = _to_int(f)
    r, s = kern.reduce(terms, _internal(G))
    factor = den * Fraction(s)
    return Polynomial({e: Fraction(c) / factor for e, c in r.items()}, G.nvars, G.order)


def contains(G: GroebnerBasis, f: Polynomial) -> bool:
    return normal_form(f, G).is_zero()


def ideal_contains(big: Ideal | GroebnerBasis, small: Ideal, order: MonomialOrder = DEGREVLEX) -> bool:
    G = big if isinstance(big, GroebnerBasis) else buchberger(big, order)
    return all(contains(G, g) for g in small.gens)


def ideals_equal(I: Ideal, J: Ideal, order: MonomialOrder = DEGREVLEX) -> bool:
    """Equality by mutual membership of generators."""
    return ideal_contains(I, J, order) and ideal_contains(J, I, order)


def _is_unit_ideal(I: Ideal) -> bool:
    return any(g.total_degree() == 0 for g in I.gens)


def _embed(f: Polynomial, shift: int, nvars: int) -> dict[Exponent, Fraction]:
    pad = (0,) * shift
    return {pad + e: c for c, e in f.terms}


def _eliminate_first(gens: list[dict[Exponent, Fraction]], nvars: int, k: int,
                     max_pairs: int, max_degree: int) -> Ideal:
    """Intersect the ideal generated by ``gens`` (in k + nvars variables) with Q[last nvars]."""
    polys = [Polynomial(g, nvars + k) for g in gens if g]
    G = buchberger(Ideal.of(polys, nvars + k), block_order(k), max_pairs, max_degree)
    out = []
    for p in G.polys:
        if all(not any(e[:k]) for _, e in p.terms):
            out.append(Polynomial({e[k:]: c for c, e in p.terms}, nvars))
    return Ideal(tuple(out), nvars)


def ideal_intersection(I: Ideal, J: Ideal, max_pairs: int = DEFAULT_MAX_PAIRS,
                       max_degree: int = DEFAULT_MAX_DEGREE) -> Ideal:
    """I cap J by eliminating t from t*I + (1 - t)*J."""
    if I.nvars != J.nvars:
        raise ArityError("arity mismatch")
    n = I.nvars
    if I.is_zero() or J.is_zero():
        return Ideal((), n)
    if _is_unit_ideal(I):
        return J
    if _is_unit_ideal(J):
        return I
    t = (1,) + (0,) * n
    gens = []
    for f in I.gens:
        gens.append({tuple(a + b for a, b in zip(t, e)): c for e, c in _embed(f, 1, n).items()})
    for g in J.gens:
        d = _embed(g, 1, n)
        shifted = {tuple(a + b for a, b in zip(t, e)): -c for e, c in d.items()}
        for e, c in shifted.items():
            d[e] = d.get(e, 0) + c
        gens.append({e: c for e, c in d.items() if c})
    return _eliminate_first(gens, n, 1, max_pairs, max_degree)


def exact_divide(g: Polynomial, f: Polynomial) -> Polynomial:
    """Quotient g / f, which must be exact."""
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    order = g.order
    f = f.with_order(order)
    lc, lt = f.leading_term()
    rest = g
    q: dict[Exponent, Fraction] = {}
    while not rest.is_zero():
        c, e = rest.leading_term()
        if not all(a <= b for a, b in zip(lt, e)):
            raise ValueError(f"{f} does not divide {g}")
        m = tuple(a - b for a, b in zip(e, lt))
        q[m] = q.get(m, 0) + c / lc
        rest = rest - f.mul_monomial(m, c / lc)
    return Polynomial(q, g.nvars, order)


def ideal_colon_element(I: Ideal, f: Polynomial, **budget) -> Ideal:
    """I : (f), from the generators of I cap (f) divided by f."""
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    inter = ideal_intersection(I, Ideal((f,), I.nvars), **budget)
    return Ideal(tuple(exact_divide(g, f) for g in inter.gens), I.nvars)


def ideal_colon(I: Ideal, J: Ideal, **budget) -> Ideal:
    """I : J as the intersection of the colons by the generators of J."""
    if J.is_zero():
        return Ideal((Polynomial.constant(1, I.nvars),), I.nvars)
    result = None
    for g in J.gens:
        q = ideal_colon_element(I, g, **budget)
        result = q if result is None else ideal_intersection(result, q, **budget)
    return result


def saturation_element(I: Ideal, f: Polynomial, max_pairs: int = DEFAULT_MAX_PAIRS,
                       max_degree: int = DEFAULT_MAX_DEGREE) -> Ideal:
    """I : f^infinity by eliminating t from I + (1 - t f)."""
    n = I.nvars
    gens = [_embed(g, 1, n) for g in I.gens]
    tf = {(1,) + e: -c for c, e in f.terms}
    tf[(0,) * (n + 1)] = tf.get((0,) * (n + 1), 0) + 1
    gens.append({e: c for e, c in tf.items() if c})
    return _eliminate_first(gens, n, 1, max_pairs, max_degree)


def saturation(I: Ideal, J: Ideal, max_pairs: int = DEFAULT_MAX_PAIRS,
               max_degree: int = DEFAULT_MAX_DEGREE) -> Ideal:
    """I : J^infinity, as the intersection over generators g of J of I : g^infinity."""
    if J.is_zero():
        return Ideal((Polynomial.constant(1, I.nvars),), I.nvars)
    result = None
    for g in J.gens:
        q = saturation_element(I, g, max_pairs, max_degree)
        if result is None:
            result = q
        elif _is_unit_ideal(q):
            continue
        elif _is_unit_ideal(result):
            result = q
        else:
            result = ideal_intersection(result, q, max_pairs, max_degree)
    return result


def saturation_by_colon(I: Ideal, J: Ideal, max_steps: int = 100, **budget) -> Ideal:
    """I : J^infinity by iterating I <- I : J until the ideal stops growing."""
    current = I
    for _ in range(max_steps):
        nxt = ideal_colon(current, J, **budget)
        if ideal_contains(current, nxt):
            return current
        current = nxt
    raise BudgetExceeded(f"colon chain did not stabilize in {max_steps} steps")


def leading_term_ideal(G: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal(tuple(G.leading_monomials()), G.nvars)


def colength(I: MonomialIdeal) -> int:
    """Number of standard monomials of a zero-dimensional monomial ideal."""
    if not I.is_zero_dimensional():
        raise DimensionPositiveError(f"{I} is not zero-dimensional")
    return monomial_colength(I)


def ideal_colength(I: Ideal, order: MonomialOrder = DEGREVLEX, **budget) -> int:
    """Vector-space dimension of S/I for a zero-dimensional ideal."""
    G = buchberger(I, order, **budget)
    return colength(leading_term_ideal(G))


def s_pairs_reduce_to_zero(G: GroebnerBasis) -> bool:
    """Check the Buchberger criterion directly on every pair of ``G``."""
    kern = _Kernel(G.order)
    polys = _internal(G)
    for g1, g2 in itertools.combinations(polys, 2):
        s = kern.spoly(g1, g2)
        if s and kern.reduce(s, polys)[0]:
            return False
    return True
