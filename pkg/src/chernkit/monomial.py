"""Monomial ideals: minimal generators, arithmetic, staircase counts and integral closure."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Sequence

from .algebra import ArityError, Exponent, default_names, mono_lcm
from .fourier_motzkin import feasible_point


class DimensionPositiveError(ValueError):
    """The quotient has positive Krull dimension, so its length is infinite."""


class ConvergenceError(RuntimeError):
    """A stabilization loop ran past its budget."""


def _minimal(gens: Iterable[Exponent]) -> tuple[Exponent, ...]:
    # A proper divisor has strictly smaller degree, so only lower degrees are checked.
    by_degree: dict[int, list[Exponent]] = {}
    for g in set(gens):
        by_degree.setdefault(sum(g), []).append(g)
    out: list[Exponent] = []
    for deg in sorted(by_degree):
        lower = list(out)
        for g in by_degree[deg]:
            if not any(all(a <= b for a, b in zip(h, g)) for h in lower):
                out.append(g)
    return tuple(sorted(out))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in ``nvars`` variables, stored by its minimal generators.

    The unit ideal has the single generator ``(0, ..., 0)``; the zero ideal
    has none.
    """

    gens: tuple[Exponent, ...]
    nvars: int

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.nvars:
                raise ArityError(f"generator {g} does not have {self.nvars} variables")
            if any(a < 0 for a in g):
                raise ValueError(f"negative exponent in {g}")
        object.__setattr__(self, "gens", _minimal(tuple(g) for g in self.gens))

    @classmethod
    def unit(cls, nvars: int) -> "MonomialIdeal":
        return cls(((0,) * nvars,), nvars)

    @classmethod
    def zero(cls, nvars: int) -> "MonomialIdeal":
        return cls((), nvars)

    @classmethod
    def maximal(cls, nvars: int) -> "MonomialIdeal":
        return cls(tuple(_unit_vector(i, nvars) for i in range(nvars)), nvars)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.nvars,)

    def contains(self, e: Exponent) -> bool:
        return any(all(a <= b for a, b in zip(g, e)) for g in self.gens)

    __contains__ = contains

    def issubset(self, other: "MonomialIdeal") -> bool:
        _same_arity(self, other)
        return all(other.contains(g) for g in self.gens)

    def __le__(self, other):
        return self.issubset(other)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _same_arity(self, other)
        return MonomialIdeal(self.gens + other.gens, self.nvars)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _same_arity(self, other)
        return MonomialIdeal(tuple(tuple(a + b for a, b in zip(g, h))
                                   for g in self.gens for h in other.gens), self.nvars)

    def __pow__(self, n: int) -> "MonomialIdeal":
        return ideal_power(self, n)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _same_arity(self, other)
        return MonomialIdeal(tuple(mono_lcm(g, h) for g in self.gens for h in other.gens), self.nvars)

    def colon_monomial(self, m: Exponent) -> "MonomialIdeal":
        return MonomialIdeal(tuple(tuple(max(a - b, 0) for a, b in zip(g, m)) for g in self.gens),
                             self.nvars)

    def colon(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _same_arity(self, other)
        if other.is_zero():
            return MonomialIdeal.unit(self.nvars)
        result = None
        for m in other.gens:
            q = self.colon_monomial(m)
            result = q if result is None else result.intersect(q)
        return result

    def max_generator_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def pure_powers(self) -> list[int | None]:
        """Least k with x_i^k in the ideal, per variable (``None`` if absent)."""
        out: list[int | None] = [None] * self.nvars
        for g in self.gens:
            support = [i for i, a in enumerate(g) if a]
            if len(support) == 1:
                i = support[0]
                out[i] = g[i] if out[i] is None else min(out[i], g[i])
            elif not support:
                return [0] * self.nvars
        return out

    def is_zero_dimensional(self) -> bool:
        return all(p is not None for p in self.pure_powers())

    def format(self, names: Sequence[str] | None = None) -> str:
        names = list(names) if names is not None else default_names(self.nvars)
        parts = []
        for g in self.gens:
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, g) if k)
            parts.append(mono or "1")
        return "(" + ", ".join(parts) + ")"

    def __str__(self):
        return self.format()


def _unit_vector(i: int, n: int) -> Exponent:
    e = [0] * n
    e[i] = 1
    return tuple(e)


def _same_arity(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.nvars != b.nvars:
        raise ArityError(f"arity mismatch: {a.nvars} vs {b.nvars}")


def minimalize(gens: Iterable[Exponent], nvars: int | None = None) -> MonomialIdeal:
    gens = [tuple(g) for g in gens]
    if nvars is None:
        if not gens:
            raise ValueError("cannot infer arity of an empty generator set; pass nvars")
        nvars = len(gens[0])
    return MonomialIdeal(tuple(gens), nvars)


def ideal_power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise ValueError("ideal powers need n >= 0")
    result = MonomialIdeal.unit(ideal.nvars)
    base = ideal
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


# ---------------------------------------------------------------------------
# Staircase counting

def _project(gens: tuple[Exponent, ...], k: int) -> tuple[Exponent, ...]:
    """Generators of (I : x_0^k) restricted to x_0 = 0, with x_0 dropped."""
    return _minimal(g[1:] for g in gens if g[0] <= k)


@lru_cache(maxsize=200_000)
def _count_degree(gens: tuple[Exponent, ...], nvars: int, n: int) -> int:
    # Monomials of degree exactly n outside the ideal generated by gens.
    if any(sum(g) == 0 for g in gens):
        return 0
    if nvars == 0:
        return 1 if n == 0 else 0
    if not gens:
        return _binomial(n + nvars - 1, nvars - 1)
    if nvars == 1:
        return 1 if n < min(g[0] for g in gens) else 0
    total = 0
    for k in range(n + 1):
        total += _count_degree(_project(gens, k), nvars - 1, n - k)
    return total


@lru_cache(maxsize=200_000)
def _count_all(gens: tuple[Exponent, ...], nvars: int) -> int:
    # Total number of standard monomials; requires a pure power of every variable.
    if nvars == 0:
        return 0 if gens else 1
    if any(sum(g) == 0 for g in gens):
        return 0
    bound = min((g[0] for g in gens if not any(g[1:])), default=None)
    if bound is None:
        raise DimensionPositiveError("ideal is not zero-dimensional")
    return sum(_count_all(_project(gens, k), nvars - 1) for k in range(bound))


def _binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def graded_hilbert(ideal: MonomialIdeal, n: int) -> int:
    """Number of degree-``n`` monomials outside ``ideal``."""
    if n < 0:
        return 0
    return _count_degree(ideal.gens, ideal.nvars, n)


def monomial_colength(ideal: MonomialIdeal) -> int:
    """Number of standard monomials of a zero-dimensional monomial ideal."""
    if not ideal.is_zero_dimensional():
        raise DimensionPositiveError(f"{ideal} is not zero-dimensional")
    return _count_all(ideal.gens, ideal.nvars)


def standard_monomials(ideal: MonomialIdeal, max_degree: int | None = None) -> Iterator[Exponent]:
    """Monomials outside ``ideal``, optionally of degree at most ``max_degree``.

    Without a degree bound the ideal must be zero-dimensional.
    """
    if max_degree is None and not ideal.is_zero_dimensional():
        raise DimensionPositiveError(f"{ideal} is not zero-dimensional")
    n = ideal.nvars

    def walk(prefix: list[int], i: int, budget):
        if i == n:
            e = tuple(prefix)
            if not ideal.contains(e):
                yield e
            return
        k = 0
        while budget is None or k <= budget:
            prefix.append(k)
            e = tuple(prefix) + (0,) * (n - i - 1)
            if ideal.contains(e):
                prefix.pop()
                break
            yield from walk(prefix, i + 1, None if budget is None else budget - k)
            prefix.pop()
            k += 1

    yield from walk([], 0, max_degree)


# ---------------------------------------------------------------------------
# Saturation and local cohomology length

def monomial_saturation(ideal: MonomialIdeal) -> MonomialIdeal:
    """I : m^infinity for the ideal m of all variables, by iterated colon."""
    m = MonomialIdeal.maximal(ideal.nvars)
    current = ideal
    while True:
        nxt = current.colon(m)
        if nxt == current:
            return current
        current = nxt


def h0_length(ideal: MonomialIdeal, max_degree: int = 10_000) -> int:
    """Length of H^0_m(S/I), i.e. of sat(I)/I, summed degree by degree."""
    sat = monomial_saturation(ideal)
    if sat == ideal:
        return 0
    window = ideal.max_generator_degree() + 2
    total, quiet = 0, 0
    for n in range(max_degree + 1):
        diff = graded_hilbert(ideal, n) - graded_hilbert(sat, n)
        total += diff
        quiet = quiet + 1 if diff == 0 else 0
        if quiet >= window:
            return total
    raise ConvergenceError("graded difference did not stabilize at zero")


# ---------------------------------------------------------------------------
# Integral closure via the Newton polyhedron

@dataclass(frozen=True)
class NewtonMembershipCertificate:
    """``point = sum(weights[i] * gens[i]) + slack`` with convex weights and slack >= 0."""

    point: Exponent
    gens: tuple[Exponent, ...]
    weights: tuple[Fraction, ...]
    slack: tuple[Fraction, ...]

    def verify(self) -> bool:
        if any(w < 0 for w in self.weights) or sum(self.weights) != 1:
            return False
        if any(s < 0 for s in self.slack):
            return False
        for j, a in enumerate(self.point):
            if sum(w * g[j] for w, g in zip(self.weights, self.gens)) + self.slack[j] != a:
                return False
        return True


def newton_membership(a: Exponent, ideal: MonomialIdeal) -> NewtonMembershipCertificate | None:
    """Certificate that ``a`` lies in conv(generator exponents) + R_+^n, or ``None``."""
    if ideal.is_zero():
        raise ValueError("Newton polyhedron of the zero ideal is empty")
    a = tuple(a)
    if len(a) != ideal.nvars:
        raise ArityError("point and ideal have different arity")
    gens = ideal.gens

    def certificate(weight_by_index: dict[int, Fraction]):
        weights = tuple(weight_by_index.get(i, Fraction(0)) for i in range(len(gens)))
        slack = tuple(Fraction(a[j]) - sum(w * g[j] for w, g in zip(weights, gens))
                      for j in range(len(a)))
        return NewtonMembershipCertificate(a, gens, weights, slack)

    for i, g in enumerate(gens):
        if all(x <= y for x, y in zip(g, a)):
            return certificate({i: Fraction(1)})

    # A generator with a coordinate outside supp(a) can carry no weight.
    support = [j for j, x in enumerate(a) if x]
    candidates = [i for i, g in enumerate(gens)
                  if all(g[j] == 0 or a[j] for j in range(len(a)))]
    if len(candidates) < 2:
        return None
    # Cheap separating weights: total degree, then each coordinate.
    if sum(a) < min(sum(gens[i]) for i in candidates):
        return None
    for j in support:
        if a[j] < min(gens[i][j] for i in candidates):
            return None
    pts = [tuple(gens[i][j] for j in support) for i in candidates]
    last = pts[-1]
    m = len(pts) - 1
    rows = []
    for i in range(m):
        row = [Fraction(0)] * m
        row[i] = Fraction(-1)
        rows.append((tuple(row), Fraction(0)))
    rows.append((tuple(Fraction(1) for _ in range(m)), Fraction(1)))
    for jj, j in enumerate(support):
        coeffs = tuple(Fraction(pts[i][jj] - last[jj]) for i in range(m))
        rows.append((coeffs, Fraction(a[j] - last[jj])))
    point = feasible_point(rows, m)
    if point is None:
        return None
    weights = {candidates[i]: w for i, w in enumerate(point) if w}
    tail = 1 - sum(point)
    if tail:
        weights[candidates[-1]] = tail
    cert = certificate(weights)
    if not cert.verify():
        raise ArithmeticError("Fourier-Motzkin produced an invalid certificate")
    return cert


def in_newton_polyhedron(a: Exponent, ideal: MonomialIdeal) -> bool:
    return newton_membership(a, ideal) is not None


def integral_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Minimal generators of the integral closure of a nonzero monomial ideal.

    Every minimal generator of the closure is bounded by the coordinatewise
    maximum of the generators, so scanning that box is complete.
    """
    if ideal.is_zero():
        raise ValueError("integral closure of the zero ideal is not supported")
    if ideal.is_unit() or len(ideal.gens) == 1:
        return ideal
    box = [max(g[j] for g in ideal.gens) for j in range(ideal.nvars)]
    found = list(ideal.gens)
    for e in itertools.product(*(range(b + 1) for b in box)):
        if ideal.contains(e):
            continue
        if any(all(x <= y for x, y in zip(f, e)) for f in found):
            continue
        if newton_membership(e, ideal) is not None:
            found.append(e)
    return MonomialIdeal(tuple(found), ideal.nvars)


def closure_colength(ideal: MonomialIdeal) -> int:
    """Colength of the integral closure of a zero-dimensional monomial ideal.

    Counts standard monomials of ``ideal`` that lie outside its Newton
    polyhedron; avoids materializing the closure's generators.
    """
    return sum(1 for e in standard_monomials(ideal) if newton_membership(e, ideal) is None)


def power_test(a: Exponent, ideal: MonomialIdeal, k_max: int = 12) -> int | None:
    """Least k <= k_max with x^(k a) in I^k, else ``None``."""
    power = MonomialIdeal.unit(ideal.nvars)
    for k in range(1, k_max + 1):
        power = power * ideal
        if power.contains(tuple(k * x for x in a)):
            return k
    return None
