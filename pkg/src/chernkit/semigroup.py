"""Affine semigroup rings k[G] inside k[t, x] and their finite-length covers.

Everything happens on exponent vectors in N^2: a monomial t^a x^b is the
vector (a, b), the subring R is spanned by the semigroup G, and S = k[t, x]
is spanned by all of N^2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .hilbert import DEFAULT_NMAX_MONOMIAL, HilbertPolynomial, HilbertTable, adic_table_monomial, fit
from .monomial import MonomialIdeal

Vec = tuple[int, int]


class InfiniteCoverError(ValueError):
    """The gaps of the semigroup reach the edge of the scan box."""


@dataclass
class AffineSemigroup:
    generators: tuple[Vec, ...]
    _member: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        gens = []
        for g in self.generators:
            g = tuple(int(c) for c in g)
            if len(g) != 2 or min(g) < 0:
                raise ValueError(f"generator {g} is not in N^2")
            if any(g) and g not in gens:
                gens.append(g)
        if not gens:
            raise ValueError("need at least one nonzero generator")
        self.generators = tuple(sorted(gens))

    def max_coords(self) -> Vec:
        return (max(g[0] for g in self.generators), max(g[1] for g in self.generators))

    def __contains__(self, v) -> bool:
        return membership(self, v)


def membership(G: AffineSemigroup, v: Iterable[int]) -> bool:
    """True iff v is an N-combination of the generators (memoized DP over the box [0, v])."""
    v = tuple(v)
    if min(v) < 0:
        return False
    memo = G._member
    stack = [v]
    while stack:
        w = stack[-1]
        if w in memo:
            stack.pop()
            continue
        if w == (0, 0):
            memo[w] = True
            stack.pop()
            continue
        preds = [(w[0] - g[0], w[1] - g[1]) for g in G.generators if g[0] <= w[0] and g[1] <= w[1]]
        pending = [p for p in preds if p not in memo]
        if pending:
            stack.extend(pending)
            continue
        memo[w] = any(memo[p] for p in preds)
        stack.pop()
    return memo[v]


@dataclass(frozen=True)
class SemigroupIdeal:
    """Monomial ideal of k[G] generated by t^a x^b for the given exponent vectors."""

    generators: tuple[Vec, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(sorted({tuple(g) for g in self.generators})))
        if not self.generators:
            raise ValueError("ideal needs a generator")

    def power_generators(self, n: int) -> list[Vec]:
        gens = {(0, 0)}
        for _ in range(n):
            gens = {(a + g[0], b + g[1]) for a, b in gens for g in self.generators}
        return sorted(gens)


def _check_ideal(G: AffineSemigroup, J: SemigroupIdeal) -> None:
    for g in J.generators:
        if not membership(G, g):
            raise ValueError(f"ideal generator {g} is not in the semigroup")


def default_box(G: AffineSemigroup, J: SemigroupIdeal | None = None, n_max: int = 0) -> Vec:
    """Componentwise max over semigroup and ideal generators, times (n_max + 3)."""
    a, b = G.max_coords()
    if J is not None:
        a = max([a] + [g[0] for g in J.generators])
        b = max([b] + [g[1] for g in J.generators])
    return (max(a, 1) * (n_max + 3), max(b, 1) * (n_max + 3))


def _gaps(G: AffineSemigroup, box: Vec) -> list[Vec]:
    return [(a, b) for a in range(box[0] + 1) for b in range(box[1] + 1) if not membership(G, (a, b))]


def _stable_count(G: AffineSemigroup, box: Vec | None, predicate) -> int:
    box = box or default_box(G)
    counts = []
    for grow in (0, 2):
        bx = (box[0] + grow, box[1] + grow)
        gaps = [v for v in _gaps(G, bx) if predicate(v)]
        if any(v[0] == bx[0] or v[1] == bx[1] for v in gaps):
            raise InfiniteCoverError(f"gaps reach the boundary of the box {bx}")
        counts.append(len(gaps))
    if counts[0] != counts[1]:
        raise InfiniteCoverError("gap count changed when the box was enlarged")
    return counts[0]


def cover_lambda(G: AffineSemigroup, box: Vec | None = None) -> int:
    """length(S / R): the number of gaps N^2 \\ G."""
    return _stable_count(G, box, lambda v: True)


def _in_upset(v: Vec, gens: Iterable[Vec]) -> bool:
    return any(g[0] <= v[0] and g[1] <= v[1] for g in gens)


def cover_mu(G: AffineSemigroup, box: Vec | None = None) -> int:
    """Minimal number of generators of S/R over R: length(S / (R + m_R S))."""
    return _stable_count(G, box, lambda v: not _in_upset(v, G.generators))


def cover_lambda_mod_JS(G: AffineSemigroup, J: SemigroupIdeal, box: Vec | None = None) -> int:
    """length(S / (R + J S)): gaps outside the upset of J's generators."""
    return _stable_count(G, box, lambda v: not _in_upset(v, J.generators))


def _colength_R(G: AffineSemigroup, J: SemigroupIdeal, n: int, box: Vec) -> int:
    """length(R / J^n R): elements v of G with v - h outside G for every generator h of J^n."""
    gens = J.power_generators(n)
    count = 0
    for a in range(box[0] + 1):
        for b in range(box[1] + 1):
            v = (a, b)
            if not membership(G, v):
                continue
            if any(membership(G, (a - h[0], b - h[1])) for h in gens if h[0] <= a and h[1] <= b):
                continue
            if a == box[0] or b == box[1]:
                raise InfiniteCoverError("R / J^n R reaches the edge of the scan box")
            count += 1
    return count


def param_table(G: AffineSemigroup, J: SemigroupIdeal, n_max: int = DEFAULT_NMAX_MONOMIAL,
                box: Vec | None = None) -> HilbertTable:
    """values[n] = length(R / J^(n+1) R)."""
    _check_ideal(G, J)
    box = box or default_box(G, J, n_max)
    return HilbertTable(tuple(_colength_R(G, J, n + 1, box) for n in range(n_max + 1)), "semigroup")


def param_chern(G: AffineSemigroup, J: SemigroupIdeal, n_max: int = DEFAULT_NMAX_MONOMIAL,
                box: Vec | None = None) -> HilbertPolynomial:
    return fit(param_table(G, J, n_max, box))


def extension_defect(G: AffineSemigroup, J: SemigroupIdeal, n: int, box: Vec | None = None) -> int:
    """length(J^n S / J^n R)."""
    box = box or default_box(G, J, n)
    gens = J.power_generators(n)
    count = 0
    for a in range(box[0] + 1):
        for b in range(box[1] + 1):
            v = (a, b)
            if not _in_upset(v, gens):
                continue
            if any(membership(G, (a - h[0], b - h[1])) for h in gens if h[0] <= a and h[1] <= b):
                continue
            if a == box[0] or b == box[1]:
                raise InfiniteCoverError("J^n S / J^n R reaches the edge of the scan box")
            count += 1
    return count


def extended_ideal(J: SemigroupIdeal) -> MonomialIdeal:
    """J S as a monomial ideal of k[t, x]."""
    return MonomialIdeal(J.generators, 2)


@dataclass(frozen=True)
class CoverReport:
    lambda_SR: int
    mu_SR: int
    lambda_S_R_JS: int
    e0: int
    e1: int
    e0_JS: int
    rho: int = 1

    @property
    def chain_holds(self) -> bool:
        return self.mu_SR <= self.lambda_S_R_JS <= -self.e1 <= self.lambda_SR

    def as_dict(self) -> dict:
        return {"lambda_SR": self.lambda_SR, "mu_SR": self.mu_SR,
                "lambda_S_R_JS": self.lambda_S_R_JS, "e0": self.e0, "e1": self.e1,
                "e0_JS": self.e0_JS, "rho": self.rho, "chain_holds": self.chain_holds}


def cover_report(G: AffineSemigroup, J: SemigroupIdeal,
                 n_max: int = DEFAULT_NMAX_MONOMIAL, box: Vec | None = None) -> CoverReport:
    """Cover invariants of S/R together with the fitted e_0, e_1 of J."""
    P = param_chern(G, J, n_max, box)
    JS = extended_ideal(J)
    PS = fit(adic_table_monomial(MonomialIdeal.zero(2), JS, n_max))
    return CoverReport(
        lambda_SR=cover_lambda(G),
        mu_SR=cover_mu(G),
        lambda_S_R_JS=cover_lambda_mod_JS(G, J),
        e0=P.multiplicity,
        e1=P.chern,
        e0_JS=PS.multiplicity,
    )


def example_semigroup(p: int) -> AffineSemigroup:
    """Exponents of t^2, t^3, x, t x^p."""
    return AffineSemigroup(((2, 0), (3, 0), (0, 1), (1, p)))


def example_ideal(r: int) -> SemigroupIdeal:
    """(t^2, x^r)."""
    return SemigroupIdeal(((2, 0), (0, r)))
