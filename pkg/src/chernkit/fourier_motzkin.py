"""Exact feasibility of small linear inequality systems by Fourier-Motzkin.

A system is a list of rows ``(coeffs, rhs)`` meaning ``coeffs . x <= rhs``.
Eliminated variables are recovered by back-substitution, so a feasible
system yields an explicit rational point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Row = tuple[tuple[Fraction, ...], Fraction]


class _Tracked:
    __slots__ = ("coeffs", "rhs", "history")

    def __init__(self, coeffs, rhs, history):
        self.coeffs = coeffs
        self.rhs = rhs
        self.history = history


def _normalize(coeffs: tuple[Fraction, ...], rhs: Fraction):
    # Positive rescaling to a canonical form so duplicate rows collapse.
    nums = [c for c in coeffs if c] + ([rhs] if rhs else [])
    if not nums:
        return coeffs, rhs
    den = 1
    for c in nums:
        den = den * c.denominator // gcd(den, c.denominator)
    g = 0
    for c in nums:
        g = gcd(g, int(c * den))
    scale = Fraction(den, g)
    return tuple(c * scale for c in coeffs), rhs * scale


def _eliminate(rows: list[_Tracked], k: int, n_eliminated: int) -> list[_Tracked] | None:
    """Eliminate variable ``k``; ``None`` signals a contradiction."""
    pos, neg, out = [], [], []
    for r in rows:
        c = r.coeffs[k]
        if c > 0:
            pos.append(r)
        elif c < 0:
            neg.append(r)
        else:
            out.append(r)
    # Equal rows with incomparable histories are all kept: dropping one could
    # push a later combination past the pruning limit although another
    # derivation of the same row stays under it.
    seen: dict = {}
    retired: set[int] = set()
    kept = []
    for r in out:
        if _admit(seen, retired, r):
            kept.append(r)
    limit = n_eliminated + 2
    for p in pos:
        cp = p.coeffs[k]
        for q in neg:
            history = p.history | q.history
            # Chernikov: after t eliminations a row built from more than t + 1 originals is redundant.
            if len(history) > limit:
                continue
            cq = -q.coeffs[k]
            coeffs = tuple(cq * a + cp * b for a, b in zip(p.coeffs, q.coeffs))
            rhs = cq * p.rhs + cp * q.rhs
            if not any(coeffs):
                if rhs < 0:
                    return None
                continue
            coeffs, rhs = _normalize(coeffs, rhs)
            row = _Tracked(coeffs, rhs, history)
            if _admit(seen, retired, row):
                kept.append(row)
    return [r for r in kept if id(r) not in retired]


def _admit(seen: dict, retired: set[int], row: _Tracked) -> bool:
    """Record ``row`` unless an equal row with a smaller-or-equal history exists.

    Equal rows whose histories strictly contain the new one are retired.
    """
    same = seen.setdefault((row.coeffs, row.rhs), [])
    live = [o for o in same if id(o) not in retired]
    if any(o.history <= row.history for o in live):
        return False
    for o in live:
        if row.history < o.history:
            retired.add(id(o))
    same.append(row)
    return True


def feasible_point(rows: Sequence[Row], nvars: int) -> tuple[Fraction, ...] | None:
    """Return a point satisfying every row, or ``None`` if the system is infeasible."""
    tracked = []
    for i, (coeffs, rhs) in enumerate(rows):
        coeffs = tuple(Fraction(c) for c in coeffs)
        rhs = Fraction(rhs)
        if len(coeffs) != nvars:
            raise ValueError("row length does not match variable count")
        if not any(coeffs):
            if rhs < 0:
                return None
            continue
        tracked.append(_Tracked(coeffs, rhs, frozenset((i,))))

    stages = [tracked]
    current = tracked
    for step, k in enumerate(reversed(range(nvars))):
        current = _eliminate(current, k, step)
        if current is None:
            return None
        stages.append(current)

    point = [Fraction(0)] * nvars
    for k in range(nvars):
        # Variables 0..k-1 are fixed; stage nvars-1-k still contains variable k.
        system = stages[nvars - 1 - k]
        lo, hi = None, None
        for r in system:
            c = r.coeffs[k]
            rest = r.rhs - sum(a * point[j] for j, a in enumerate(r.coeffs[:k]) if a)
            if c > 0:
                b = rest / c
                hi = b if hi is None or b < hi else hi
            elif c < 0:
                b = rest / c
                lo = b if lo is None or b > lo else lo
        if lo is not None and hi is not None and lo > hi:
            raise ArithmeticError("back-substitution failed; inconsistent elimination")
        point[k] = lo if lo is not None else (hi if hi is not None and hi < 0 else Fraction(0))
    return tuple(point)


def is_feasible(rows: Sequence[Row], nvars: int) -> bool:
    return feasible_point(rows, nvars) is not None
