"""Exact multivariate polynomials over the rationals.

Exponent vectors are plain tuples of non-negative ints. Coefficients are
:class:`fractions.Fraction`. A :class:`Polynomial` keeps its terms sorted
in strictly decreasing order under its monomial order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]

# Exponents model bounded machine integers; exceeding this is an error.
MAX_EXPONENT = 2**31 - 1


class ArityError(ValueError):
    """Operands live in rings with different numbers of variables."""


def _check_arity(a: Exponent, b: Exponent) -> None:
    if len(a) != len(b):
        raise ArityError(f"arity mismatch: {len(a)} vs {len(b)}")


def mono_divides(a: Exponent, b: Exponent) -> bool:
    """True iff x^a divides x^b."""
    _check_arity(a, b)
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Exponent, b: Exponent) -> Exponent:
    _check_arity(a, b)
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_gcd(a: Exponent, b: Exponent) -> Exponent:
    _check_arity(a, b)
    return tuple(x if x < y else y for x, y in zip(a, b))


def mono_mul(a: Exponent, b: Exponent) -> Exponent:
    _check_arity(a, b)
    c = tuple(x + y for x, y in zip(a, b))
    if c and max(c) > MAX_EXPONENT:
        raise OverflowError("exponent exceeds machine bound")
    return c


def mono_div(a: Exponent, b: Exponent) -> Exponent:
    """x^a / x^b; requires b | a."""
    _check_arity(a, b)
    c = tuple(x - y for x, y in zip(a, b))
    if any(v < 0 for v in c):
        raise ValueError(f"{b} does not divide {a}")
    return c


def degree(a: Exponent) -> int:
    return sum(a)


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order given by a flat integer sort key.

    ``kind`` is ``"degrevlex"``, ``"lex"`` or ``"block"``. The block order
    compares the first ``block`` variables by degrevlex and breaks ties by
    degrevlex on the remaining ones; it eliminates the first block.
    """

    kind: str = "degrevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.block < 1:
            raise ValueError("block order needs a positive block size")

    def key(self, e: Exponent) -> tuple[int, ...]:
        if self.kind == "lex":
            return e
        if self.kind == "degrevlex":
            return (sum(e),) + tuple(-x for x in reversed(e))
        head, tail = e[: self.block], e[self.block:]
        return ((sum(head),) + tuple(-x for x in reversed(head))
                + (sum(tail),) + tuple(-x for x in reversed(tail)))

    def is_degree_compatible(self) -> bool:
        return self.kind == "degrevlex"

    def __str__(self):
        return f"block({self.block})" if self.kind == "block" else self.kind


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def block_order(first_block: int) -> MonomialOrder:
    return MonomialOrder("block", first_block)


def _as_fraction(c: Scalar) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


class Polynomial:
    """Immutable polynomial in ``nvars`` variables with rational coefficients."""

    __slots__ = ("nvars", "order", "_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Scalar] | Iterable[tuple[Scalar, Exponent]] = (),
                 nvars: int | None = None, order: MonomialOrder = DEGREVLEX):
        acc: dict[Exponent, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else ((e, c) for c, e in terms)
        for e, c in items:
            e = tuple(e)
            if nvars is None:
                nvars = len(e)
            elif len(e) != nvars:
                raise ArityError(f"term {e} does not have {nvars} variables")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            if e and max(e) > MAX_EXPONENT:
                raise OverflowError("exponent exceeds machine bound")
            acc[e] = acc.get(e, 0) + _as_fraction(c)
        if nvars is None:
            raise ValueError("cannot infer arity of an empty polynomial; pass nvars")
        self.nvars = nvars
        self.order = order
        key = order.key
        self._terms = tuple(sorted(((c, e) for e, c in acc.items() if c != 0),
                                   key=lambda t: key(t[1]), reverse=True))
        self._hash = None

    @classmethod
    def _from_sorted(cls, terms: tuple, nvars: int, order: MonomialOrder) -> "Polynomial":
        p = cls.__new__(cls)
        p.nvars, p.order, p._terms, p._hash = nvars, order, terms, None
        return p

    @classmethod
    def zero(cls, nvars: int, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        return cls._from_sorted((), nvars, order)

    @classmethod
    def constant(cls, c: Scalar, nvars: int, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        return cls({(0,) * nvars: c}, nvars, order)

    @classmethod
    def monomial(cls, e: Exponent, c: Scalar = 1, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        return cls({tuple(e): c}, len(e), order)

    @classmethod
    def variable(cls, i: int, nvars: int, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): 1}, nvars, order)

    @property
    def terms(self) -> tuple[tuple[Fraction, Exponent], ...]:
        """(coefficient, exponent) pairs, strictly decreasing in ``self.order``."""
        return self._terms

    def as_dict(self) -> dict[Exponent, Fraction]:
        return {e: c for c, e in self._terms}

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def with_order(self, order: MonomialOrder) -> "Polynomial":
        if order == self.order:
            return self
        return Polynomial(self.as_dict(), self.nvars, order)

    def leading_term(self, order: MonomialOrder | None = None) -> tuple[Fraction, Exponent]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        if order is None or order == self.order:
            return self._terms[0]
        key = order.key
        return max(self._terms, key=lambda t: key(t[1]))

    def leading_monomial(self, order: MonomialOrder | None = None) -> Exponent:
        return self.leading_term(order)[1]

    def leading_coefficient(self, order: MonomialOrder | None = None) -> Fraction:
        return self.leading_term(order)[0]

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for _, e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for _, e in self._terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        lc = self._terms[0][0]
        if lc == 1:
            return self
        return Polynomial._from_sorted(tuple((c / lc, e) for c, e in self._terms),
                                       self.nvars, self.order)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ArityError(f"arity mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.nvars, self.order)
        return NotImplemented

    def _merge(self, other: "Polynomial", sign: int) -> "Polynomial":
        # Sorted merge of two descending term lists.
        a = self._terms
        b = other._terms if other.order == self.order else other.with_order(self.order)._terms
        key = self.order.key
        out = []
        i = j = 0
        while i < len(a) and j < len(b):
            ka, kb = key(a[i][1]), key(b[j][1])
            if ka > kb:
                out.append(a[i])
                i += 1
            elif ka < kb:
                out.append((sign * b[j][0], b[j][1]))
                j += 1
            else:
                c = a[i][0] + sign * b[j][0]
                if c:
                    out.append((c, a[i][1]))
                i += 1
                j += 1
        out.extend(a[i:])
        out.extend((sign * c, e) for c, e in b[j:])
        return Polynomial._from_sorted(tuple(out), self.nvars, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._merge(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._merge(other, -1)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._merge(self, -1)

    def __neg__(self):
        return Polynomial._from_sorted(tuple((-c, e) for c, e in self._terms), self.nvars, self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial.zero(self.nvars, self.order)
            return Polynomial._from_sorted(tuple((c * other, e) for c, e in self._terms),
                                           self.nvars, self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = Polynomial.constant(1, self.nvars, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_monomial(self, e: Exponent, c: Scalar = 1) -> "Polynomial":
        # Multiplication by a monomial preserves the term order.
        c = _as_fraction(c)
        if c == 0:
            return Polynomial.zero(self.nvars, self.order)
        return Polynomial._from_sorted(tuple((a * c, mono_mul(m, e)) for a, m in self._terms),
                                       self.nvars, self.order)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.as_dict() == other.as_dict()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.as_dict().items())))
        return self._hash

    def format(self, names: Iterable[str] | None = None) -> str:
        names = list(names) if names is not None else default_names(self.nvars)
        if not self._terms:
            return "0"
        parts = []
        for c, e in self._terms:
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.format()!r}, nvars={self.nvars})"


def default_names(n: int) -> list[str]:
    if n <= 4:
        return ["x", "y", "z", "u"][:n]
    return [f"x{i + 1}" for i in range(n)]


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact product of two polynomials, sorted under ``f``'s order."""
    if f.nvars != g.nvars:
        raise ArityError(f"arity mismatch: {f.nvars} vs {g.nvars}")
    acc: dict[Exponent, Fraction] = {}
    for c1, e1 in f.terms:
        for c2, e2 in g.terms:
            e = mono_mul(e1, e2)
            acc[e] = acc.get(e, 0) + c1 * c2
    return Polynomial(acc, f.nvars, f.order)


def leading_term(f: Polynomial, order: MonomialOrder = DEGREVLEX) -> tuple[Fraction, Exponent]:
    return f.leading_term(order)
