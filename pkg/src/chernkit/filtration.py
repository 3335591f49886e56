"""Filtrations of monomial ideals, admissibility, and the Chern-number bound check."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .hilbert import (DEFAULT_NMAX_MONOMIAL, HilbertPolynomial, HilbertTable,
                      adic_table_monomial, fit)
from .monomial import (MonomialIdeal, ideal_power, monomial_colength, newton_membership,
                       standard_monomials)


class FiltrationExhausted(IndexError):
    """An explicit filtration was asked for a term it does not store."""


class NotAdmissible(ValueError):
    pass


@dataclass
class Filtration:
    """A descending multiplicative sequence A_0 = (1) >= A_1 >= ... in R = S / ambient.

    ``kind`` is ``"adic"`` (A_n = J^n), ``"integral-closure"`` (A_n is the
    integral closure of I^n + ambient) or ``"explicit"`` (stored terms).
    """

    kind: str
    ideal: MonomialIdeal | None
    ambient: MonomialIdeal
    explicit_terms: tuple[MonomialIdeal, ...] = ()
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def adic(cls, J: MonomialIdeal, ambient: MonomialIdeal | None = None) -> "Filtration":
        return cls("adic", J, ambient if ambient is not None else MonomialIdeal.zero(J.nvars))

    @classmethod
    def integral_closure(cls, I: MonomialIdeal, ambient: MonomialIdeal | None = None) -> "Filtration":
        return cls("integral-closure", I,
                   ambient if ambient is not None else MonomialIdeal.zero(I.nvars))

    @classmethod
    def explicit(cls, terms: Sequence[MonomialIdeal],
                 ambient: MonomialIdeal | None = None) -> "Filtration":
        terms = tuple(terms)
        if not terms:
            raise ValueError("explicit filtration needs at least A_0")
        if not terms[0].is_unit():
            raise ValueError("A_0 must be the unit ideal")
        nvars = terms[0].nvars
        return cls("explicit", None,
                   ambient if ambient is not None else MonomialIdeal.zero(nvars), terms)

    @property
    def nvars(self) -> int:
        return self.ambient.nvars

    def term(self, n: int) -> MonomialIdeal:
        if n < 0:
            raise ValueError("filtration index must be non-negative")
        if n == 0:
            return MonomialIdeal.unit(self.nvars)
        if n in self._cache:
            return self._cache[n]
        if self.kind == "adic":
            t = ideal_power(self.ideal, n)
        elif self.kind == "integral-closure":
            t = closure_mod(ideal_power(self.ideal, n), self.ambient)
        elif self.kind == "explicit":
            if n >= len(self.explicit_terms):
                raise FiltrationExhausted(f"explicit filtration stores only {len(self.explicit_terms)} terms")
            t = self.explicit_terms[n]
        else:
            raise ValueError(f"unknown filtration kind {self.kind!r}")
        self._cache[n] = t
        return t

    def colength(self, n: int) -> int:
        """length(R / A_n)."""
        if self.kind == "integral-closure":
            # (g_1^n, ..., g_k^n) has the same Newton polyhedron as I^n.
            return closure_colength_mod(power_reduction(self.ideal, n), self.ambient)
        return monomial_colength(self.term(n) + self.ambient)

    def table(self, n_max: int = DEFAULT_NMAX_MONOMIAL) -> HilbertTable:
        return HilbertTable(tuple(self.colength(n + 1) for n in range(n_max + 1)), self.kind)


def power_reduction(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """The ideal of n-th powers of the generators of I; integral over I^n and contained in it."""
    if n == 0:
        return MonomialIdeal.unit(I.nvars)
    return MonomialIdeal(tuple(tuple(n * a for a in g) for g in I.gens), I.nvars)


def minimal_primes(ambient: MonomialIdeal) -> tuple[frozenset[int], ...]:
    """Minimal primes of a monomial ideal, as sets of variable indices."""
    supports = [frozenset(j for j, x in enumerate(g) if x) for g in ambient.gens]
    found: list[frozenset[int]] = []
    for size in range(ambient.nvars + 1):
        for P in map(frozenset, itertools.combinations(range(ambient.nvars), size)):
            if all(P & s for s in supports) and not any(Q <= P for Q in found):
                found.append(P)
    return tuple(found)


def closure_member_mod(a, ideal: MonomialIdeal, primes) -> bool:
    """x^a is integral over ideal modulo the ambient with the given minimal primes.

    Integral closure is detected modulo each minimal prime; modulo a coordinate
    prime P the ring is a polynomial ring and the test is Newton membership.
    """
    for P in primes:
        if any(a[j] for j in P):
            continue
        gens = tuple(g for g in ideal.gens if not any(g[j] for j in P))
        if not gens or newton_membership(a, MonomialIdeal(gens, ideal.nvars)) is None:
            return False
    return True


def closure_mod(ideal: MonomialIdeal, ambient: MonomialIdeal) -> MonomialIdeal:
    """Preimage in S of the integral closure of ideal in S / ambient."""
    base = ideal + ambient
    if base.is_unit():
        return base
    primes = minimal_primes(ambient)
    # Truncating to the generator box keeps every membership condition.
    # The ambient's own generators count even when absorbed, since they fix the primes.
    box = [max(g[j] for g in base.gens + ambient.gens) for j in range(base.nvars)]
    found = list(base.gens)
    for e in itertools.product(*(range(b + 1) for b in box)):
        if any(all(x <= y for x, y in zip(f, e)) for f in found):
            continue
        if closure_member_mod(e, ideal, primes):
            found.append(e)
    return MonomialIdeal(tuple(found), base.nvars)


def closure_colength_mod(ideal: MonomialIdeal, ambient: MonomialIdeal) -> int:
    """length(R / closure(ideal R)) for R = S / ambient, ideal + ambient zero-dimensional."""
    primes = minimal_primes(ambient)
    return sum(1 for e in standard_monomials(ideal + ambient)
               if not closure_member_mod(e, ideal, primes))


def contained_mod(a: MonomialIdeal, b: MonomialIdeal, ambient: MonomialIdeal) -> bool:
    """a + ambient is contained in b + ambient."""
    target = b + ambient
    return all(target.contains(g) for g in a.gens)


def check_admissible(F: Filtration, J: MonomialIdeal, k_max: int = 4, n_max: int = 6) -> int | None:
    """Least k <= k_max with A_{n+k} <= J^n <= A_n for all n <= n_max.

    ``None`` only says no such k was found in the inspected range.
    """
    amb = F.ambient
    powers = [ideal_power(J, n) for n in range(n_max + 1)]
    if not all(contained_mod(powers[n], F.term(n), amb) for n in range(n_max + 1)):
        return None
    for k in range(k_max + 1):
        if all(contained_mod(F.term(n + k), powers[n], amb) for n in range(n_max + 1)):
            return k
    return None


def _krull_dimension(ambient: MonomialIdeal) -> int:
    """Dimension of S / ambient: the largest coordinate subspace avoiding the ideal."""
    n = ambient.nvars
    best = 0
    for mask in range(1 << n):
        size = bin(mask).count("1")
        if size <= best:
            continue
        # The subspace spanned by the variables in mask meets V(I) iff no generator
        # is supported inside mask.
        if not any(all((mask >> j) & 1 or not g[j] for j in range(n)) for g in ambient.gens):
            best = size
    return best


def _fit_nmax(ambient: MonomialIdeal, n_max: int) -> int:
    """Raise n_max so a table of S / ambient is long enough to fit its degree."""
    return max(n_max, 2 * _krull_dimension(ambient) + 3)


def filtration_coefficients(F: Filtration, n_max: int = DEFAULT_NMAX_MONOMIAL) -> HilbertPolynomial:
    return fit(F.table(_fit_nmax(F.ambient, n_max)))


def is_multiplicative(F: Filtration, n_max: int) -> bool:
    """A_m A_n <= A_{m+n} (modulo the ambient ideal) for m + n <= n_max."""
    for m in range(1, n_max + 1):
        for n in range(m, n_max + 1 - m):
            if not contained_mod(F.term(m) * F.term(n), F.term(m + n), F.ambient):
                return False
    return True


@dataclass(frozen=True)
class BoundReport:
    """e_1(F) versus e_1(J) + sum_n length(A_n / J A_{n-1})."""

    lhs: int | None
    rhs: int | None
    e1_J: int | None
    sum_terms: tuple[int, ...]
    holds: bool | None
    status: str
    admissible_k: int | None
    parameter_like: bool
    # The height hypothesis on the Rees algebras is never checked.
    height_hypothesis: str = "unchecked"

    def as_dict(self) -> dict:
        return {
            "lhs": self.lhs, "rhs": self.rhs, "e1_J": self.e1_J,
            "sum_terms": list(self.sum_terms), "holds": self.holds, "status": self.status,
            "admissible_k": self.admissible_k, "parameter_like": self.parameter_like,
            "height_hypothesis": self.height_hypothesis,
        }


def filtration_bound_check(F: Filtration, J: MonomialIdeal, n_max: int = DEFAULT_NMAX_MONOMIAL,
                           k_max: int = 4) -> BoundReport:
    """Compare e_1(F) with e_1(J) + sum_{n>=1} length(A_n / J A_{n-1}).

    The sum stops once A_n = J A_{n-1} holds for two consecutive n; if that
    does not happen by ``n_max`` the report is inconclusive.
    """
    amb = F.ambient
    k = check_admissible(F, J, k_max=k_max, n_max=min(n_max, 6))
    if k is None:
        raise NotAdmissible("filtration is not admissible over J in the inspected range")
    parameter_like = (J + amb).is_zero_dimensional() and len(J.gens) == _krull_dimension(amb)
    e1_J = fit(adic_table_monomial(amb, J, _fit_nmax(amb, n_max))).chern
    lhs = filtration_coefficients(F, n_max).chern

    terms: list[int] = []
    quiet = 0
    for n in range(1, n_max + 1):
        product = J * F.term(n - 1)
        term = monomial_colength(product + amb) - F.colength(n)
        if term < 0:
            raise ArithmeticError("J A_{n-1} is not contained in A_n")
        terms.append(term)
        quiet = quiet + 1 if term == 0 else 0
        if quiet >= 2:
            rhs = e1_J + sum(terms)
            return BoundReport(lhs, rhs, e1_J, tuple(terms), lhs <= rhs, "ok", k, parameter_like)
    return BoundReport(lhs, None, e1_J, tuple(terms), None, "inconclusive", k, parameter_like)
