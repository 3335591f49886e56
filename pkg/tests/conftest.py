"""Shared brute-force oracles and hypothesis strategies."""

from __future__ import annotations

import itertools
from fractions import Fraction

from hypothesis import strategies as st

from chernkit.algebra import Polynomial
from chernkit.monomial import MonomialIdeal


def var(i, n):
    return Polynomial.variable(i, n)


def ring(n):
    return [var(i, n) for i in range(n)]


def divides(g, e):
    return all(a <= b for a, b in zip(g, e))


def brute_colength(gens, nvars):
    """Count exponents outside the ideal by scanning the box of pure powers."""
    bound = [None] * nvars
    for g in gens:
        supp = [i for i, a in enumerate(g) if a]
        if len(supp) == 1:
            i = supp[0]
            bound[i] = g[i] if bound[i] is None else min(bound[i], g[i])
        elif not supp:
            return 0
    assert all(b is not None for b in bound), "not zero-dimensional"
    return sum(1 for e in itertools.product(*(range(b) for b in bound))
               if not any(divides(g, e) for g in gens))


def monomials_of_degree(nvars, n):
    if nvars == 0:
        if n == 0:
            yield ()
        return
    for a in range(n, -1, -1):
        for rest in monomials_of_degree(nvars - 1, n - a):
            yield (a,) + rest


def brute_graded(gens, nvars, n):
    return sum(1 for e in monomials_of_degree(nvars, n) if not any(divides(g, e) for g in gens))


def monomials_up_to(nvars, d):
    for k in range(d + 1):
        yield from monomials_of_degree(nvars, k)


def _rank_solve(columns, target):
    """Is ``target`` in the span of ``columns``? Vectors are dicts; exact elimination."""
    keys = sorted({k for c in columns for k in c} | set(target))
    rows = [[Fraction(c.get(k, 0)) for c in columns] + [Fraction(target.get(k, 0))] for k in keys]
    ncols = len(columns)
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return all(any(row[:ncols]) or row[ncols] == 0 for row in rows)


def linear_membership(f: Polynomial, gens, degree_bound: int) -> bool:
    """f in (gens) with cofactors of degree <= degree_bound - deg(g): a linear system over Q."""
    n = f.nvars
    columns = []
    for g in gens:
        for m in monomials_up_to(n, max(degree_bound - g.total_degree(), -1)):
            columns.append(g.mul_monomial(m).as_dict())
    if not columns:
        return f.is_zero()
    return _rank_solve(columns, f.as_dict())


@st.composite
def exponents(draw, nvars, max_deg=6):
    e = draw(st.lists(st.integers(0, max_deg), min_size=nvars, max_size=nvars))
    return tuple(e)


@st.composite
def monomial_ideals(draw, nvars=None, max_gens=6, max_deg=6, zero_dim=False):
    n = nvars if nvars is not None else draw(st.integers(1, 3))
    gens = draw(st.lists(exponents(n, max_deg), min_size=1, max_size=max_gens))
    gens = [g for g in gens if sum(g) <= max_deg] or [tuple([1] + [0] * (n - 1))]
    if zero_dim:
        for i in range(n):
            k = draw(st.integers(1, max_deg))
            gens.append(tuple(k if j == i else 0 for j in range(n)))
    if all(sum(g) == 0 for g in gens):
        gens = [tuple([1] + [0] * (n - 1))]
    gens = [g for g in gens if sum(g) > 0]
    return MonomialIdeal(tuple(gens), n)


@st.composite
def polynomials(draw, nvars, max_terms=4, max_deg=3, coeff=5):
    terms = draw(st.lists(
        st.tuples(st.integers(-coeff, coeff), exponents(nvars, max_deg)), max_size=max_terms))
    return Polynomial([(Fraction(c), e) for c, e in terms if sum(e) <= max_deg], nvars)
