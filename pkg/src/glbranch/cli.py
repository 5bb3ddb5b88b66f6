"""Command-line front end.

Values are given inline in the text syntax (see ``glbranch.dsl``) or as names
bound in a session file. Decisions print one JSON record per line.

Exit codes: 0 decided, 2 parse or semantic error, 3 engine diagnostic.
"""

from __future__ import annotations

import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterable

import click

from .core import IrrRep, zelevinsky_involution
from .derivative import Side, derivative_multi, eta, highest_derivative_multi
from .dsl import (
    DSLError,
    Session,
    format_value,
    parse_input,
    parse_multisegment,
    parse_rep,
    parse_segment,
    parse_statement,
    parse_unitary,
)
from .integral import integral_multi
from .oracle import SearchBounds, brute_force_relevant
from .relevance import RelevanceCertificate, ReductionStalled, decide_relevant
from .unitary import ggp_relevant_unitary, speh_branching_classify, speh_shifted_branching_classify

EXIT_PARSE = 2
EXIT_ENGINE = 3


class _Abort(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def certificate_record(cert: RelevanceCertificate, pi: IrrRep, pi2: IrrRep) -> dict:
    """The stable verdict record: ``relevant, p, q, trace, failed_step``."""
    trace = []
    before = (pi, pi2)
    for step in cert.trace:
        trace.append({
            "kind": step.kind.value,
            "removed": format_value(step.removed),
            "before": [format_value(before[0]), format_value(before[1])],
            "after": [format_value(step.pair_after[0]), format_value(step.pair_after[1])],
        })
        before = step.pair_after
    return {
        "relevant": cert.relevant,
        "p": format_value(cert.p) if cert.p is not None else None,
        "q": format_value(cert.q) if cert.q is not None else None,
        "trace": trace,
        "failed_step": cert.failed_step,
    }


def _emit(record: dict) -> None:
    click.echo(json.dumps(record, ensure_ascii=False))


def _session(session_file, declarations: Iterable[str]) -> Session:
    s = Session()
    if session_file is not None:
        parse_input(session_file.read(), s)
    for n, d in enumerate(declarations, start=1):
        parse_statement(d, s, n)
    return s


def _run(fn):
    """Map library errors onto exit codes."""
    try:
        fn()
    except DSLError as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(EXIT_PARSE)
    except ReductionStalled as e:
        pair = ", ".join(format_value(x) for x in e.pair)
        click.echo(f"error: reduction stalled at ({pair}): {e}", err=True)
        sys.exit(EXIT_ENGINE)
    except _Abort as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(e.code)
    except (AssertionError, ValueError) as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(EXIT_ENGINE)


_side = click.option("--side", type=click.Choice(["R", "L"]), default="R", show_default=True)


@click.group()
@click.option("--session", "-s", "session_file", type=click.File("r", encoding="utf-8"),
              help="File of label declarations and name bindings.")
@click.option("--declare", "-d", "declarations", multiple=True,
              help="A declaration or binding, e.g. 'rho R dim=1'. Repeatable.")
@click.pass_context
def main(ctx: click.Context, session_file, declarations) -> None:
    """Decide quotient branching for p-adic general linear groups."""
    ctx.ensure_object(dict)
    ctx.obj["args"] = (session_file, declarations)


def _load(ctx: click.Context) -> Session:
    if "session" not in ctx.obj:
        ctx.obj["session"] = _session(*ctx.obj["args"])
    return ctx.obj["session"]


@main.command()
@click.argument("rep")
@_side
@click.option("--by", required=True, help="Multisegment to differentiate by.")
@click.pass_context
def derive(ctx, rep, side, by):
    """Composite derivative; prints 0 when it vanishes."""
    def go():
        s = _load(ctx)
        click.echo(format_value(derivative_multi(parse_rep(rep, s), parse_multisegment(by, s), Side(side))))
    _run(go)


@main.command()
@click.argument("rep")
@_side
@click.option("--by", required=True, help="Multisegment to integrate by.")
@click.pass_context
def integrate(ctx, rep, side, by):
    """Composite integral."""
    def go():
        s = _load(ctx)
        click.echo(format_value(integral_multi(parse_rep(rep, s), parse_multisegment(by, s), Side(side))))
    _run(go)


@main.command()
@click.argument("rep")
@_side
@click.pass_context
def hd(ctx, rep, side):
    """Highest derivative multisegment."""
    def go():
        s = _load(ctx)
        click.echo(format_value(highest_derivative_multi(parse_rep(rep, s), Side(side))))
    _run(go)


@main.command("eta")
@click.argument("rep")
@click.option("--by", required=True, help="A single segment.")
@click.pass_context
def eta_cmd(ctx, rep, by):
    """The eta invariant of a segment."""
    def go():
        s = _load(ctx)
        click.echo(json.dumps(list(eta(parse_rep(rep, s), parse_segment(by, s)))))
    _run(go)


@main.command("ul")
@click.argument("multisegment")
@click.pass_context
def ul_cmd(ctx, multisegment):
    """Unlinked normalization by repeated intersection-union."""
    def go():
        click.echo(format_value(parse_multisegment(multisegment, _load(ctx)).ul()))
    _run(go)


@main.command()
@click.argument("multisegment")
@click.pass_context
def involute(ctx, multisegment):
    """Zelevinsky involution of a multisegment."""
    def go():
        click.echo(format_value(zelevinsky_involution(parse_multisegment(multisegment, _load(ctx)))))
    _run(go)


def _decide(pi: IrrRep, pi2: IrrRep, strict: bool) -> dict:
    return certificate_record(decide_relevant(pi, pi2, strict), pi, pi2)


def _print_trace(record: dict) -> None:
    for k, step in enumerate(record["trace"]):
        click.echo(
            f"[{k}] {step['kind']} removed={step['removed']}: "
            f"({step['before'][0]}, {step['before'][1]}) -> ({step['after'][0]}, {step['after'][1]})",
            err=True,
        )


@main.command()
@click.argument("pi")
@click.argument("pi2")
@click.option("--trace", is_flag=True, help="Print every step with its before/after pair on stderr.")
@click.option("--weak", is_flag=True, help="Use the membership test for reduction points.")
@click.pass_context
def decide(ctx, pi, pi2, trace, weak):
    """Decide whether (PI, PI2) is a relevant pair."""
    def go():
        s = _load(ctx)
        record = _decide(parse_rep(pi, s), parse_rep(pi2, s), not weak)
        if trace:
            _print_trace(record)
        _emit(record)
    _run(go)


@main.command("unitary-relevant")
@click.argument("pi")
@click.argument("pi2")
@click.pass_context
def unitary_relevant(ctx, pi, pi2):
    """Match unitary factor lists by the pairing rules."""
    def go():
        s = _load(ctx)
        cert = ggp_relevant_unitary(parse_unitary(pi, s), parse_unitary(pi2, s))
        rec = {"relevant": cert is not None}
        if cert is not None:
            for name in ("pairs_r1", "pairs_r2", "pairs_r3"):
                rec[name] = sorted([i + 1, j + 1] for i, j in getattr(cert, name))
            rec["leftover_i4"] = sorted(i + 1 for i in cert.leftover_i4)
            rec["leftover_j4"] = sorted(j + 1 for j in cert.leftover_j4)
        _emit(rec)
    _run(go)


@main.command("speh-classify")
@click.argument("rep")
@click.option("--speh", "speh_spec", required=True, help="'a,b,h@LABEL' for the ladder Σ[a+i,b+i].")
@click.option("--shifted", is_flag=True, help="REP is the smaller member and the Speh is the larger.")
@click.pass_context
def speh_classify(ctx, rep, speh_spec, shifted):
    """Closed-form Speh branching classification."""
    def go():
        s = _load(ctx)
        try:
            nums, name = speh_spec.split("@")
            a, b, h = (Fraction(x.strip()) for x in nums.split(","))
        except ValueError:
            raise DSLError(f"bad --speh value {speh_spec!r}; expected a,b,h@LABEL") from None
        label = s.label(name.strip())
        fn = speh_shifted_branching_classify if shifted else speh_branching_classify
        _emit({"member": fn(parse_rep(rep, s), label, a, b, int(h))})
    _run(go)


@main.command()
@click.argument("pi")
@click.argument("pi2")
@click.option("--max-length", type=int, default=None, help="Budget on witness absolute length.")
@click.option("--window", default=None, help="'lo,hi' exponent window for witness segments.")
@click.pass_context
def oracle(ctx, pi, pi2, max_length, window):
    """Brute-force search for a witness."""
    def go():
        s = _load(ctx)
        p, p2 = parse_rep(pi, s), parse_rep(pi2, s)
        bounds = None
        if max_length is not None or window is not None:
            if window is None:
                raise DSLError("--window is required with --max-length")
            lo, hi = (Fraction(x.strip()) for x in window.split(","))
            labels = tuple({seg.label for seg in p.m.twist(Fraction(1, 2)) + p2.m})
            budget = max_length if max_length is not None else p.degree + p2.degree
            bounds = SearchBounds(budget, (lo, hi), labels)
        click.echo(f"searching ({format_value(p)}, {format_value(p2)})", err=True)
        w = brute_force_relevant(p, p2, bounds)
        rec = {"relevant": w is not None, "m": None, "n": None}
        if w is not None:
            rec["m"], rec["n"] = format_value(w[0]), format_value(w[1])
        _emit(rec)
    _run(go)


def _batch_one(item: tuple[int, int, str, str, list[str], bool]) -> dict:
    seq, lineno, left, right, preamble, strict = item
    s = Session()
    for n, line in enumerate(preamble, start=1):
        parse_statement(line, s, n)
    try:
        pi, pi2 = parse_rep(left, s), parse_rep(right, s)
        rec = _decide(pi, pi2, strict)
    except DSLError as e:
        rec = {"error": "parse", "message": f"record on line {lineno}: {e.message}"}
    except (ReductionStalled, AssertionError, ValueError) as e:
        rec = {"error": "engine", "message": f"record on line {lineno}: {e}"}
    return {"seq": seq, **rec}


@main.command()
@click.argument("path", type=click.File("r", encoding="utf-8"))
@click.option("--jobs", "-j", type=int, default=1, show_default=True)
@click.option("--weak", is_flag=True)
@click.pass_context
def batch(ctx, path, jobs, weak):
    """Decide one pair per record line 'PI ; PI2'; other lines are declarations or bindings."""
    def go():
        base = _load(ctx)
        preamble = [format_value(label) for label in base.labels.values() if label.id == label.dual_id or label.id < label.dual_id]
        preamble += [f"{k} = {format_value(v)}" for k, v in base.bindings.items()]
        work, s = [], Session()
        for line in preamble:
            parse_statement(line, s)
        seq = 0
        for n, raw in enumerate(path, start=1):
            text = raw.split("#", 1)[0].strip()
            if not text:
                continue
            if ";" in text:
                left, right = (x.strip() for x in text.split(";", 1))
                work.append((seq, n, left, right, list(preamble), not weak))
                seq += 1
            else:
                parse_statement(text, s, n)
                preamble.append(text)
        errors = set()
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                # map yields in submission order, so output order follows seq
                for rec in ex.map(_batch_one, work):
                    errors.add(rec.get("error"))
                    _emit(rec)
        else:
            for rec in map(_batch_one, work):
                errors.add(rec.get("error"))
                _emit(rec)
        if "engine" in errors:
            raise _Abort(EXIT_ENGINE, "some records hit an engine diagnostic")
        if "parse" in errors:
            raise _Abort(EXIT_PARSE, "some records failed to parse")
    _run(go)


if __name__ == "__main__":  # pragma: no cover
    main()
