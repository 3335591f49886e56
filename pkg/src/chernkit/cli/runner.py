"""Execute parsed documents and assemble JSON-ready reports."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra import DEGREVLEX, LEX, Polynomial
from ..filtration import Filtration, _fit_nmax, check_admissible, filtration_bound_check
from ..groebner import (DEFAULT_MAX_DEGREE, DEFAULT_MAX_PAIRS, Ideal, buchberger,
                        leading_term_ideal, s_pairs_reduce_to_zero, saturation)
from ..hilbert import (DEFAULT_NMAX_GROEBNER, DEFAULT_NMAX_MONOMIAL, HilbertPolynomial,
                       adic_table_groebner, adic_table_monomial, fit, graded_hilbert_function)
from ..monomial import (MonomialIdeal, closure_colength, h0_length, integral_closure,
                        monomial_colength, monomial_saturation)
from ..semigroup import AffineSemigroup, SemigroupIdeal, cover_report
from ..simplicial import (SimplicialComplex, crosscheck_chern, f_vector, h_prime_at_one,
                          h_vector, is_pure, survey_complexes)
from .parser import Command, Document

SCHEMA = 1


@dataclass
class RunOptions:
    n_max: int | None = None
    jobs: int = 1
    fail_fast: bool = False
    timing: bool = True
    max_pairs: int = DEFAULT_MAX_PAIRS
    max_degree: int = DEFAULT_MAX_DEGREE
    survey_vertices: int = 5
    survey_cap: int = 200_000

    def budget(self) -> dict:
        return {"max_pairs": self.max_pairs, "max_degree": self.max_degree}


@dataclass
class CommandResult:
    command: str
    line: int | None
    status: str = "ok"
    result: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)
    error: dict | None = None
    seconds: float | None = None

    @property
    def ok(self) -> bool:
        return self.status == "ok" and all(v is not False for v in self.verdicts.values())

    def as_dict(self, timing: bool = True) -> dict:
        out = {"command": self.command, "line": self.line, "status": self.status,
               "result": self.result, "verdicts": self.verdicts}
        if self.error is not None:
            out["error"] = self.error
        if timing and self.seconds is not None:
            out["seconds"] = round(self.seconds, 4)
        return out


@dataclass
class Report:
    results: list[CommandResult]
    options: RunOptions

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def as_dict(self) -> dict:
        return {"schema": SCHEMA, "ok": self.ok,
                "commands": [r.as_dict(self.options.timing) for r in self.results]}


def jsonable(value):
    """Exact numbers only: Fractions become strings such as '3/4'."""
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else int(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def poly_report(P: HilbertPolynomial) -> dict:
    return {"d": P.d, "e": list(P.e), "e0": P.multiplicity, "e1": P.chern}


# ---------------------------------------------------------------------------

class _Context:
    def __init__(self, doc: Document, options: RunOptions):
        self.doc = doc
        self.options = options
        self.decls = doc.declarations()
        self.names = list(doc.names)
        self.nvars = len(self.names)

    def n_max(self, cmd: Command, default: int) -> int:
        value = cmd.option("max")
        if value is None:
            value = self.options.n_max if self.options.n_max is not None else default
        return value

    def ideal(self, name: str) -> Ideal:
        decl = self.decls[name]
        return Ideal(decl.gens, self.nvars)

    def monomial(self, name: str) -> MonomialIdeal | None:
        """The ideal as a monomial ideal, or None when some generator has several terms."""
        decl = self.decls[name]
        if any(len(g) > 1 for g in decl.gens):
            return None
        return MonomialIdeal(tuple(g.leading_monomial() for g in decl.gens if not g.is_zero()),
                             self.nvars)

    def require_monomial(self, name: str) -> MonomialIdeal:
        m = self.monomial(name)
        if m is None:
            raise ValueError(f"{name} must be generated by monomials for this command")
        return m

    def ambient_name(self, cmd: Command) -> str | None:
        return cmd.option("mod")

    def fmt(self, p: Polynomial) -> str:
        return p.format(self.names)

    def fmt_monomial(self, I: MonomialIdeal) -> list[str]:
        return [self.fmt(Polynomial.monomial(g)) for g in I.gens]


def _adic_table(ctx: _Context, cmd: Command):
    J_name, A_name = cmd.target, ctx.ambient_name(cmd)
    J_mon = ctx.monomial(J_name)
    A_mon = ctx.monomial(A_name) if A_name else MonomialIdeal.zero(ctx.nvars)
    if J_mon is not None and A_mon is not None:
        n_max = ctx.n_max(cmd, DEFAULT_NMAX_MONOMIAL)
        return "monomial", n_max, adic_table_monomial(A_mon, J_mon, n_max)
    n_max = ctx.n_max(cmd, DEFAULT_NMAX_GROEBNER)
    A = ctx.ideal(A_name) if A_name else Ideal((), ctx.nvars)
    table = adic_table_groebner(A, ctx.ideal(J_name), n_max, jobs=ctx.options.jobs,
                                **ctx.options.budget())
    return "groebner", n_max, table


def cmd_hilbert(ctx: _Context, cmd: Command, out: CommandResult) -> None:
    pipeline, n_max, table = _adic_table(ctx, cmd)
    out.result.update(pipeline=pipeline, n_max=n_max, table=list(table.values))


def cmd_chern(ctx: _Context, cmd: Command, out: CommandResult) -> None:
    pipeline, n_max, table = _adic_table(ctx, cmd)
    out.result.update(pipeline=pipeline, n_max=n_max, table=list(table.values))
    out.result.update(poly_report(fit(table)))


def _filtration(ctx: _Context, cmd: Command) -> Filtration:
    I = ctx.require_monomial(cmd.target)
    A_name = ctx.ambient_name(cmd)
    A = ctx.require_monomial(A_name) if A_name else None
    return Filtration.integral_closure(I, A)


def cmd_normal_chern(ctx: _Context, cmd: Command, out: CommandResult) -> None:
    F = _filtration(ctx, cmd)
    n_max = _fit_nmax(F.ambient, ctx.n_max(cmd, DEFAULT_NMAX_MONOMIAL))
    table = F.table(n_max)
    out.result.update(n_max=n_max, table=list(table.values))
    out.result.update(poly_report(fit(table)))


def cmd_face_ring(ctx: _Context, cmd: Command, out: CommandResult) -> None:
    decl = ctx.decls[cmd.target]
    cx = SimplicialComplex.from_facets(decl.facets)
    f = f_vector(cx)
    h = h_vector(f)
    check = crosscheck_chern(cx, cmd.option("max", ctx.options.n_max))
    out.result.update(f_vector=list(f), h_vector=list(h), h_prime_at_one=h_prime_at_one(h),
                      d=cx.d, pure=is_pure(cx), **check.as_dict())
    out.result["e1"] = check.formula_value
    out.verdicts["agree"] = check.agree
    out.verdicts["h_prime_identity"] = h_prime_at_one(h) == check.formula_value


def cmd_groebner(ctx: _Context, cmd: Command, out: CommandResult) -> None:
    order = {"degrevlex": DEGREVLEX, "lex": LEX}.get(cmd.option("order", "degrevlex"))
    if order is None:
        raise ValueError("order must be degrevlex or lex")
    G = buchberger(ctx.ideal(cmd.target), order, **ctx.options.budget())
    out.result.update(order=str(order), basis=[ctx.fmt(g) for g in G.polys],
                      leading_monomials=ctx.fmt_monomial(MonomialIdeal(tuple(G.leading_monomials()), ctx.nvars)))
    out.verdicts["s_pairs_reduce_to_zero"] = s_pairs_reduce_to_zero(G)


def cmd_closure(ctx: _Context, cmd: Command, out: CommandResult) -> None:
    I = ctx.require_monomial(cmd.target)
    closed = integral_closure(I)
    out.result["closure"] = ctx.fmt_monomial(closed)
    if I.is_zero_dimensional():
        out.result["colength"] = monomial_colength(I)
        out.result["closure_colength"] = closure_colength(I)
    out.verdicts["idempotent"] = integral_closure(closed) == closed


def cmd_admissible(ctx: _Context, cmd: Command, out: CommandResult) -> None:
    F = _filtration(ctx, cmd)
    over = cmd.option("over")
    J = ctx.require_monomial(over) if over else F.ideal
    k = check_admissible(F, J, k_max=cmd.option("k", 4))
    out.result["admissible_k"] = k
    out.verdicts["admissible"] = k is not None


def cmd_filtration_bound(ctx: _Context, cmd: Command, out: CommandResult) -> None:
    F = _filtration(ctx, cmd)
    over = cmd.option("over")
    J = ctx.require_monomial(over) if over else F.ideal
    report = filtration_bound_check(F, J, ctx.n_max(cmd, DEFAULT_NMAX_MONOMIAL), k_max=cmd.option("k", 4))
    out.result.update(report.as_dict())
    if report.holds is not None:
        out.verdicts["bound_holds"] = report.holds


def cmd_cover(ctx: _Context, cmd: Command, out: CommandResult) -> None:
    G = AffineSemigroup(ctx.decls[cmd.target].vectors)
    by = cmd.option("by")
    if by is None or not isinstance(by, tuple):
        raise ValueError("cover needs 'by [(a,b), ...]' naming the ideal generators")
    report = cover_report(G, SemigroupIdeal(by), ctx.n_max(cmd, DEFAULT_NMAX_MONOMIAL))
    out.result.update(report.as_dict())
    out.verdicts["chain_holds"] = report.chain_holds


def cmd_survey(ctx: _Context, cmd: Command, out: CommandResult) -> None:
    n = cmd.option("vertices", ctx.options.survey_vertices)
    cap = cmd.option("cap", ctx.options.survey_cap)
    report = survey_complexes(n, cap)
    out.result.update(vertices=n, cap=cap, **report.as_dict())
    out.verdicts["identity_holds"] = report.identity_holds
    out.verdicts["pure_nonnegative"] = report.pure_nonnegative


def _leading_ideal(ctx: _Context, name: str) -> MonomialIdeal:
    mono = ctx.monomial(name)
    if mono is not None:
        return mono
    return leading_term_ideal(buchberger(ctx.ideal(name), **ctx.options.budget()))


def cmd_graded(ctx: _Context, cmd: Command, out: CommandResult) -> None:
    n_max = ctx.n_max(cmd, DEFAULT_NMAX_MONOMIAL)
    lt = _leading_ideal(ctx, cmd.target)
    out.result.update(n_max=n_max, hilbert_function=list(graded_hilbert_function(lt, n_max)))


def cmd_saturate(ctx: _Context, cmd: Command, out: CommandResult) -> None:
    by = cmd.option("by")
    if isinstance(by, tuple):
        raise ValueError("saturate takes an ideal name after 'by'")
    mono = ctx.monomial(cmd.target)
    if by is None and mono is not None:
        sat = monomial_saturation(mono)
        out.result.update(saturation=ctx.fmt_monomial(sat), h0_length=h0_length(mono))
        return
    if by is None:
        by_ideal = Ideal(tuple(Polynomial.variable(i, ctx.nvars) for i in range(ctx.nvars)), ctx.nvars)
    else:
        by_ideal = ctx.ideal(by)
    sat = saturation(ctx.ideal(cmd.target), by_ideal, **ctx.options.budget())
    G = buchberger(sat, **ctx.options.budget())
    out.result["saturation"] = [ctx.fmt(g) for g in G.polys]


def cmd_worked_examples(ctx: _Context, cmd: Command, out: CommandResult) -> None:
    from .canned import reproduce_examples
    entries = reproduce_examples(jobs=ctx.options.jobs)
    out.result["examples"] = {name: e["result"] for name, e in entries.items()}
    for name, e in entries.items():
        for key, value in e["verdicts"].items():
            out.verdicts[f"{name}.{key}"] = value


HANDLERS = {
    "hilbert": cmd_hilbert, "chern": cmd_chern, "normal-chern": cmd_normal_chern,
    "face-ring": cmd_face_ring, "groebner": cmd_groebner, "closure": cmd_closure,
    "admissible": cmd_admissible, "filtration-bound": cmd_filtration_bound, "cover": cmd_cover,
    "survey-complexes": cmd_survey, "worked-examples": cmd_worked_examples,
    "graded": cmd_graded, "saturate": cmd_saturate,
}


def run(doc: Document, options: RunOptions | None = None) -> Report:
    options = options or RunOptions()
    ctx = _Context(doc, options)
    results = []
    for cmd in doc.commands():
        out = CommandResult(cmd.echo(), cmd.location.line if cmd.location else None)
        start = time.perf_counter()
        try:
            HANDLERS[cmd.name](ctx, cmd, out)
        except Exception as exc:  # recorded per command; later commands still run
            out.status = "error"
            out.error = {"type": type(exc).__name__, "message": str(exc)}
        out.seconds = time.perf_counter() - start
        out.result = jsonable(out.result)
        results.append(out)
        if options.fail_fast and not out.ok:
            break
    return Report(results, options)


def format_human(report: Report) -> str:
    lines = []
    for r in report.results:
        mark = "ok" if r.ok else ("error" if r.status == "error" else "FAILED")
        timing = f"  ({r.seconds:.2f}s)" if report.options.timing and r.seconds is not None else ""
        lines.append(f"[{mark}] {r.command}{timing}")
        if r.error:
            lines.append(f"    {r.error['type']}: {r.error['message']}")
        _nested(lines, r.result, "    ")
        for key in sorted(r.verdicts):
            lines.append(f"    check {key}: {'holds' if r.verdicts[key] else 'FAILS'}")
    lines.append("all checks passed" if report.ok else "some commands failed")
    return "\n".join(lines)


def _nested(lines: list[str], d: dict, indent: str) -> None:
    for key in sorted(d):
        value = d[key]
        if isinstance(value, dict) and value and any(isinstance(v, dict) for v in value.values()):
            lines.append(f"{indent}{key}:")
            _nested(lines, value, indent + "  ")
        else:
            lines.append(f"{indent}{key}: {_short(value)}")


def _short(value) -> str:
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_short(v)}" for k, v in sorted(value.items())) + "}"
    if isinstance(value, list):
        return "[" + ", ".join(_short(v) for v in value) + "]"
    return str(value)
