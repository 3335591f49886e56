"""Input language for the command-line tool.

    ring x, y, z;
    ideal I = (x*z, y*z, z^2);
    ideal J = (x, y);
    complex D = {{1,2},{3}};
    semigroup G = [(2,0),(3,0),(0,1),(1,2)];
    chern J mod I max 8;

Comments run from ``#`` to the end of the line.  Polynomials have rational
coefficients; ``/`` is only allowed with a nonzero constant divisor.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra import Polynomial

KEYWORDS = {"ring", "ideal", "complex", "semigroup"}

COMMANDS = {
    "hilbert", "chern", "normal-chern", "face-ring", "groebner", "closure", "admissible",
    "filtration-bound", "cover", "survey-complexes", "worked-examples", "graded", "saturate",
}

# alternative spellings accepted on input; the canonical name is printed back
ALIASES = {"thm42": "filtration-bound", "paper-examples": "worked-examples"}

# kind of declaration each command acts on (None: the command takes no target)
TARGETS = {
    "hilbert": "ideal", "chern": "ideal", "normal-chern": "ideal", "groebner": "ideal",
    "closure": "ideal", "admissible": "ideal", "filtration-bound": "ideal", "graded": "ideal",
    "saturate": "ideal", "face-ring": "complex", "cover": "semigroup",
    "survey-complexes": None, "worked-examples": None,
}

# option keyword -> kind of value it takes
OPTIONS = {
    "mod": "name", "over": "name", "by": "ref", "max": "int", "order": "word",
    "vertices": "int", "cap": "int", "k": "int",
}


@dataclass(frozen=True)
class Location:
    line: int
    column: int

    def __str__(self):
        return f"{self.line}:{self.column}"


class ParseError(ValueError):
    """A lexical, syntax or semantic error at a source location."""

    def __init__(self, category: str, message: str, location: Location):
        super().__init__(f"{category} error at {location}: {message}")
        self.category = category
        self.message = message
        self.location = location


@dataclass(frozen=True)
class Token:
    kind: str  # ident, int, punct, eof
    text: str
    location: Location


_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[-+*/^(){}\[\],;=])
""", re.VERBOSE)


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        loc = Location(line, pos - line_start + 1)
        if m is None:
            raise ParseError("lexical", f"unexpected character {source[pos]!r}", loc)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind in ("int", "ident", "punct"):
            tokens.append(Token(kind, m.group(), loc))
        pos = m.end()
    tokens.append(Token("eof", "", Location(line, pos - line_start + 1)))
    return tokens


# ---------------------------------------------------------------------------
# Document items; locations are excluded from equality so round trips compare equal

@dataclass(frozen=True)
class RingDecl:
    names: tuple[str, ...]
    location: Location | None = field(default=None, compare=False)


@dataclass(frozen=True)
class IdealDecl:
    name: str
    gens: tuple[Polynomial, ...]
    location: Location | None = field(default=None, compare=False)


@dataclass(frozen=True)
class ComplexDecl:
    name: str
    facets: tuple[tuple[int, ...], ...]
    location: Location | None = field(default=None, compare=False)


@dataclass(frozen=True)
class SemigroupDecl:
    name: str
    vectors: tuple[tuple[int, int], ...]
    location: Location | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Command:
    name: str
    target: str | None
    options: tuple[tuple[str, object], ...] = ()
    location: Location | None = field(default=None, compare=False)

    def option(self, key: str, default=None):
        for k, v in self.options:
            if k == key:
                return v
        return default

    def echo(self) -> str:
        return format_command(self)


@dataclass(frozen=True)
class Document:
    ring: RingDecl | None
    items: tuple

    @property
    def names(self) -> tuple[str, ...]:
        return self.ring.names if self.ring else ()

    def declarations(self) -> dict[str, object]:
        return {it.name: it for it in self.items if not isinstance(it, (Command, RingDecl))}

    def commands(self) -> list[Command]:
        return [it for it in self.items if isinstance(it, Command)]


# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.i = 0
        self.ring: RingDecl | None = None
        self.declared: dict[str, str] = {}
        self.items: list = []

    # token helpers
    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def describe(self, t: Token) -> str:
        return "end of input" if t.kind == "eof" else repr(t.text)

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind == "eof":
            raise ParseError("syntax", f"expected {text!r}, found {self.describe(self.tok)}",
                             self.tok.location)
        return self.advance()

    def expect_kind(self, kind: str, what: str) -> Token:
        if self.tok.kind != kind:
            raise ParseError("syntax", f"expected {what}, found {self.describe(self.tok)}",
                             self.tok.location)
        return self.advance()

    def accept(self, text: str) -> bool:
        if self.tok.kind != "eof" and self.tok.text == text:
            self.advance()
            return True
        return False

    # grammar
    def document(self) -> Document:
        while self.tok.kind != "eof":
            self.statement()
        return Document(self.ring, tuple(self.items))

    def adjacent(self, a: Token, b: Token) -> bool:
        return a.location.line == b.location.line and a.location.column + len(a.text) == b.location.column

    def command_word(self) -> None:
        """Join ``normal - chern`` written without spaces into one identifier token."""
        t = self.tok
        j = self.i
        text = t.text
        while (self.tokens[j + 1].text == "-" and self.tokens[j + 2].kind == "ident"
               and self.adjacent(self.tokens[j], self.tokens[j + 1])
               and self.adjacent(self.tokens[j + 1], self.tokens[j + 2])):
            text += "-" + self.tokens[j + 2].text
            j += 2
        if j != self.i:
            self.tokens[self.i:j + 1] = [Token("ident", text, t.location)]

    def statement(self) -> None:
        t = self.tok
        if t.kind != "ident":
            raise ParseError("syntax", f"expected a statement, found {self.describe(t)}", t.location)
        self.command_word()
        t = self.tok
        if t.text == "ring":
            self.ring_decl()
        elif t.text == "ideal":
            self.ideal_decl()
        elif t.text == "complex":
            self.complex_decl()
        elif t.text == "semigroup":
            self.semigroup_decl()
        elif t.text in COMMANDS or t.text in ALIASES:
            self.command()
        else:
            raise ParseError("syntax", f"unknown statement {t.text!r}", t.location)

    def ring_decl(self) -> None:
        start = self.advance()
        if self.ring is not None:
            raise ParseError("semantic", "ring already declared", start.location)
        names = [self.identifier("variable name")]
        while self.accept(","):
            names.append(self.identifier("variable name"))
        self.expect(";")
        seen = set()
        for n in names:
            if n.text in seen:
                raise ParseError("semantic", f"variable {n.text!r} repeated", n.location)
            seen.add(n.text)
        self.ring = RingDecl(tuple(n.text for n in names), start.location)
        self.items.append(self.ring)

    def identifier(self, what: str) -> Token:
        t = self.expect_kind("ident", what)
        if t.text in KEYWORDS or t.text in COMMANDS or t.text in ALIASES:
            raise ParseError("syntax", f"{t.text!r} cannot be used as a {what}", t.location)
        return t

    def new_name(self, kind: str) -> Token:
        t = self.identifier(f"{kind} name")
        if t.text in self.declared:
            raise ParseError("semantic", f"name {t.text!r} already declared", t.location)
        if self.ring and t.text in self.ring.names:
            raise ParseError("semantic", f"name {t.text!r} is a ring variable", t.location)
        return t

    def ideal_decl(self) -> None:
        start = self.advance()
        if self.ring is None:
            raise ParseError("semantic", "declare a ring before any ideal", start.location)
        name = self.new_name("ideal")
        self.expect("=")
        self.expect("(")
        gens = []
        if not self.accept(")"):
            gens.append(self.expr())
            while self.accept(","):
                gens.append(self.expr())
            self.expect(")")
        self.expect(";")
        self.declared[name.text] = "ideal"
        self.items.append(IdealDecl(name.text, tuple(gens), start.location))

    def integer(self) -> int:
        return int(self.expect_kind("int", "an integer").text)

    def complex_decl(self) -> None:
        start = self.advance()
        name = self.new_name("complex")
        self.expect("=")
        self.expect("{")
        facets = [self.facet()]
        while self.accept(","):
            facets.append(self.facet())
        self.expect("}")
        self.expect(";")
        self.declared[name.text] = "complex"
        self.items.append(ComplexDecl(name.text, tuple(facets), start.location))

    def facet(self) -> tuple[int, ...]:
        start = self.expect("{")
        verts = [self.integer()]
        while self.accept(","):
            verts.append(self.integer())
        self.expect("}")
        if min(verts) < 1:
            raise ParseError("semantic", "vertices are numbered from 1", start.location)
        return tuple(sorted(set(verts)))

    def vectors(self) -> tuple[tuple[int, int], ...]:
        self.expect("[")
        out = [self.vector()]
        while self.accept(","):
            out.append(self.vector())
        self.expect("]")
        return tuple(out)

    def vector(self) -> tuple[int, int]:
        self.expect("(")
        a = self.integer()
        self.expect(",")
        b = self.integer()
        self.expect(")")
        return (a, b)

    def semigroup_decl(self) -> None:
        start = self.advance()
        name = self.new_name("semigroup")
        self.expect("=")
        vecs = self.vectors()
        self.expect(";")
        if all(v == (0, 0) for v in vecs):
            raise ParseError("semantic", "a semigroup needs a nonzero generator", start.location)
        self.declared[name.text] = "semigroup"
        self.items.append(SemigroupDecl(name.text, vecs, start.location))

    def reference(self) -> str:
        t = self.identifier("name")
        if t.text not in self.declared:
            raise ParseError("semantic", f"undeclared name {t.text!r}", t.location)
        return t.text

    def typed_reference(self, kind: str) -> str:
        t = self.tok
        name = self.reference()
        if self.declared[name] != kind:
            raise ParseError("semantic", f"{name!r} is a {self.declared[name]}, expected a {kind}",
                             t.location)
        return name

    def command(self) -> None:
        start = self.advance()
        name = ALIASES.get(start.text, start.text)
        want = TARGETS[name]
        target = None
        if want is not None:
            target = self.typed_reference(want)
        options = []
        while not self.accept(";"):
            key = self.expect_kind("ident", "an option or ';'")
            kind = OPTIONS.get(key.text)
            if kind is None:
                raise ParseError("syntax", f"unknown option {key.text!r}", key.location)
            if any(k == key.text for k, _ in options):
                raise ParseError("semantic", f"option {key.text!r} given twice", key.location)
            if kind == "int":
                value = self.integer()
            elif kind == "name":
                value = self.typed_reference("ideal")
            elif kind == "word":
                value = self.expect_kind("ident", "a word").text
            elif self.tok.text == "[":
                value = self.vectors()
            else:
                value = self.typed_reference("ideal")
            options.append((key.text, value))
        self.items.append(Command(name, target, tuple(options), start.location))

    # polynomial expressions
    def nvars(self) -> int:
        return len(self.ring.names)

    def expr(self) -> Polynomial:
        result = self.term()
        while self.tok.text in ("+", "-") and self.tok.kind == "punct":
            op = self.advance().text
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.unary()
        while self.tok.text in ("*", "/") and self.tok.kind == "punct":
            op = self.advance()
            rhs = self.unary()
            if op.text == "*":
                result = result * rhs
            else:
                if rhs.is_zero() or rhs.total_degree() > 0:
                    raise ParseError("semantic", "can only divide by a nonzero constant", op.location)
                result = result * Polynomial.constant(1 / rhs.leading_coefficient(), self.nvars())
        return result

    def unary(self) -> Polynomial:
        if self.tok.kind == "punct" and self.tok.text == "-":
            self.advance()
            return -self.unary()
        if self.tok.kind == "punct" and self.tok.text == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.accept("^"):
            exp = self.expect_kind("int", "a non-negative integer exponent")
            base = base ** int(exp.text)
        return base

    def atom(self) -> Polynomial:
        t = self.tok
        if t.kind == "int":
            self.advance()
            return Polynomial.constant(Fraction(int(t.text)), self.nvars())
        if t.kind == "ident":
            self.advance()
            if t.text not in self.ring.names:
                raise ParseError("semantic", f"undeclared variable {t.text!r}", t.location)
            return Polynomial.variable(self.ring.names.index(t.text), self.nvars())
        if self.accept("("):
            e = self.expr()
            self.expect(")")
            return e
        raise ParseError("syntax", f"expected a polynomial, found {self.describe(t)}", t.location)


def parse(source: str) -> Document:
    return _Parser(source).document()


# ---------------------------------------------------------------------------
# Printing

def _format_vectors(vecs) -> str:
    return "[" + ", ".join(f"({a},{b})" for a, b in vecs) + "]"


def format_command(c: Command) -> str:
    parts = [c.name]
    if c.target is not None:
        parts.append(c.target)
    for k, v in c.options:
        parts.append(k)
        parts.append(_format_vectors(v) if isinstance(v, tuple) else str(v))
    return " ".join(parts) + ";"


def format_document(doc: Document) -> str:
    names = doc.names
    lines = []
    for it in doc.items:
        if isinstance(it, RingDecl):
            lines.append("ring " + ", ".join(it.names) + ";")
        elif isinstance(it, IdealDecl):
            lines.append(f"ideal {it.name} = (" + ", ".join(g.format(names) for g in it.gens) + ");")
        elif isinstance(it, ComplexDecl):
            body = ", ".join("{" + ",".join(map(str, f)) + "}" for f in it.facets)
            lines.append(f"complex {it.name} = {{{body}}};")
        elif isinstance(it, SemigroupDecl):
            lines.append(f"semigroup {it.name} = {_format_vectors(it.vectors)};")
        else:
            lines.append(format_command(it))
    return "\n".join(lines) + "\n"
