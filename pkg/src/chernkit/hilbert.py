"""Colength tables and Hilbert polynomials in the signed binomial basis.

Convention: a table entry at index ``n`` is the colength of the
``(n+1)``-st term, ``values[n] = length(R / J^(n+1) R)``, and a fitted
polynomial satisfies

    P(n) = sum_i (-1)^i e_i * C(n + d - i, d - i).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .algebra import Polynomial
from .groebner import (DEFAULT_MAX_DEGREE, DEFAULT_MAX_PAIRS, Ideal, buchberger,
                       colength, leading_term_ideal, saturation)
from .monomial import DimensionPositiveError, MonomialIdeal, graded_hilbert, monomial_colength

DEFAULT_NMAX_MONOMIAL = 8
DEFAULT_NMAX_GROEBNER = 6


class FitError(ValueError):
    """The table's finite differences did not stabilize; raise n_max."""

    def __init__(self, message: str, level: int):
        super().__init__(message)
        self.level = level


@dataclass(frozen=True)
class HilbertTable:
    values: tuple[int, ...]
    provenance: str = "explicit"

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if any(v < 0 for v in self.values):
            raise ValueError("colengths are non-negative")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    def differences(self) -> tuple[int, ...]:
        return tuple(b - a for a, b in zip((0,) + self.values, self.values))


@dataclass(frozen=True)
class HilbertPolynomial:
    d: int
    e: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "e", tuple(self.e))
        if len(self.e) != self.d + 1:
            raise ValueError("need exactly d + 1 coefficients")

    @property
    def multiplicity(self) -> int:
        return self.e[0]

    @property
    def chern(self) -> int:
        """e_1, or 0 for a constant polynomial."""
        return self.e[1] if self.d >= 1 else 0

    def __call__(self, n: int) -> int:
        return evaluate(self, n)


def binomial(x: int, k: int) -> Fraction:
    """C(x, k) as the polynomial x(x-1)...(x-k+1)/k!, valid for any integer x."""
    num = 1
    for j in range(k):
        num *= x - j
    return Fraction(num, factorial(k))


def evaluate(P: HilbertPolynomial, n: int) -> int:
    total = sum((-1) ** i * ei * binomial(n + P.d - i, P.d - i) for i, ei in enumerate(P.e))
    if total.denominator != 1:
        raise ArithmeticError("non-integral Hilbert polynomial value")
    return int(total)


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(rhs)
    a = [row[:] + [r] for row, r in zip(matrix, rhs)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def _differences(seq: Sequence[int]) -> list[int]:
    return [b - a for a, b in zip(seq, seq[1:])]


def fit(table: HilbertTable | Sequence[int]) -> HilbertPolynomial:
    """Fit the eventual polynomial of a colength table.

    The degree is the first difference level whose last ``level + 2``
    entries agree; the polynomial is then interpolated on that tail and
    re-expressed in the signed binomial basis.
    """
    values = list(table.values if isinstance(table, HilbertTable) else table)
    if not values:
        raise FitError("empty table", 0)
    level, diffs = 0, values
    while True:
        window = level + 2
        if len(diffs) < window:
            raise FitError(f"difference level {level} has only {len(diffs)} entries; "
                           f"need {window} equal ones (raise n_max)", level)
        if len(set(diffs[-window:])) == 1:
            break
        level += 1
        diffs = _differences(diffs)
    d = level
    tail_len = window + d
    start = len(values) - tail_len
    pts = list(range(start, len(values)))
    fit_pts = pts[-(d + 1):]
    matrix = [[(-1) ** i * binomial(n + d - i, d - i) for i in range(d + 1)] for n in fit_pts]
    coeffs = _solve(matrix, [Fraction(values[n]) for n in fit_pts])
    if any(c.denominator != 1 for c in coeffs):
        raise FitError(f"non-integral coefficients {coeffs}", d)
    P = HilbertPolynomial(d, tuple(int(c) for c in coeffs))
    for n in pts:
        if evaluate(P, n) != values[n]:
            raise FitError(f"polynomial does not reproduce the table at n={n}", d)
    return P


def _check_nmax(n_max: int) -> None:
    if n_max < 0:
        raise ValueError("n_max must be non-negative")


def adic_table_monomial(ambient: MonomialIdeal, J: MonomialIdeal,
                        n_max: int = DEFAULT_NMAX_MONOMIAL) -> HilbertTable:
    """values[n] = colength(J^(n+1) + ambient) for monomial ideals."""
    _check_nmax(n_max)
    if not (J + ambient).is_zero_dimensional():
        raise DimensionPositiveError(f"{J} + {ambient} is not zero-dimensional")
    values = []
    power = J
    for _ in range(n_max + 1):
        values.append(monomial_colength(power + ambient))
        power = power * J
    return HilbertTable(tuple(values), "monomial")


def local_colength(K: Ideal, max_pairs: int = DEFAULT_MAX_PAIRS,
                   max_degree: int = DEFAULT_MAX_DEGREE) -> int:
    """Length of (S/K) localized at the origin, for zero-dimensional K.

    Computed as colength(K) - colength(K : m^infinity); the saturation
    carries the components away from the origin.
    """
    budget = dict(max_pairs=max_pairs, max_degree=max_degree)
    lt = leading_term_ideal(buchberger(K, **budget))
    if not lt.is_zero_dimensional():
        raise DimensionPositiveError("ideal is not zero-dimensional")
    total = colength(lt)
    m = Ideal(tuple(Polynomial.variable(i, K.nvars) for i in range(K.nvars)), K.nvars)
    sat = saturation(K, m, **budget)
    if any(g.total_degree() == 0 for g in sat.gens):
        return total
    return total - colength(leading_term_ideal(buchberger(sat, **budget)))


def _local_row(args) -> int:
    K, budget = args
    return local_colength(K, **budget)


def adic_table_groebner(ambient: Ideal, J: Ideal, n_max: int = DEFAULT_NMAX_GROEBNER,
                        max_pairs: int = DEFAULT_MAX_PAIRS,
                        max_degree: int = DEFAULT_MAX_DEGREE, jobs: int = 1) -> HilbertTable:
    """values[n] = local colength at the origin of J^(n+1) + ambient.

    Rows are independent; ``jobs > 1`` spreads them over worker processes.
    """
    _check_nmax(n_max)
    budget = dict(max_pairs=max_pairs, max_degree=max_degree)
    base = leading_term_ideal(buchberger(J + ambient, **budget))
    if not base.is_zero_dimensional():
        raise DimensionPositiveError("J + I is not zero-dimensional")
    rows, power = [], J
    for _ in range(n_max + 1):
        rows.append((power + ambient, budget))
        power = power * J
    if jobs > 1 and n_max > 0:
        with ProcessPoolExecutor(max_workers=min(jobs, len(rows))) as pool:
            values = list(pool.map(_local_row, rows))
    else:
        values = [_local_row(r) for r in rows]
    return HilbertTable(tuple(values), "groebner")


def graded_series_table(ideal: MonomialIdeal, n_max: int = DEFAULT_NMAX_MONOMIAL) -> HilbertTable:
    """Cumulative graded Hilbert function: values[n] = sum_{m <= n} H(S/I, m)."""
    _check_nmax(n_max)
    values, total = [], 0
    for m in range(n_max + 1):
        total += graded_hilbert(ideal, m)
        values.append(total)
    return HilbertTable(tuple(values), "graded")


def graded_hilbert_function(ideal: MonomialIdeal, n_max: int) -> tuple[int, ...]:
    return tuple(graded_hilbert(ideal, m) for m in range(n_max + 1))

