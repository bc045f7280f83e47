"""Command line front end.

One subcommand per workflow: word equality, conjugacy, normal forms,
link invariants, single moves, tower replay, template expansion and
verification, diagram budget certificates, census arithmetic, and the
reduction search.  Exit status 0 means the command ran and, where an
expectation was stated, it held; 1 is a domain verdict against the
expectation (or an inconsistent input object such as a failing census);
2 is a usage or parse error.  ``--format json`` switches every
subcommand to a machine readable document matching the module file
formats.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import census as census_mod
from . import invariants as inv_mod
from .explorer import SearchConfig, search_reduce
from .garside import (
    DEFAULT_NODE_CAP,
    Verdict,
    conjugacy_test,
    factor_word,
    normal_form,
    words_equal,
)
from .moves import (
    InvalidSite,
    PatternMismatch,
    apply_move,
    load_tower,
    move_from_json,
    replay,
    tower_to_json,
)
from .templates import (
    BlockOnLastStrand,
    CoverageError,
    IndexMismatch,
    WeightFlowError,
    catalog,
    diagram_from_json,
    expand,
    load_template,
    sample_assignment,
    sigma_budget,
    verify_template,
)
from .words import BraidWord, WordFormatError, format_word, parse_word

__all__ = ["main"]


class _Failure(Exception):
    """Domain failure: print the message, exit 1."""


class _Usage(Exception):
    """Input error outside argparse: print the message, exit 2."""


def _word(text: str) -> BraidWord:
    try:
        return parse_word(text)
    except WordFormatError as err:
        # the message already carries line and column
        raise _Usage(str(err)) from err


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _cmd_eq(args) -> int:
    u, v = _word(args.word1), _word(args.word2)
    try:
        equal = words_equal(u, v)
    except ValueError as err:
        raise _Usage(str(err)) from err
    verdict = "equal" if equal else "not-equal"
    _emit(args, {"equal": equal}, verdict)
    if args.expect and args.expect != verdict:
        return 1
    return 0


def _cmd_conj(args) -> int:
    u, v = _word(args.word1), _word(args.word2)
    try:
        report = conjugacy_test(u, v, node_cap=args.cap)
    except ValueError as err:
        raise _Usage(str(err)) from err
    _emit(
        args,
        {"verdict": report.verdict.value, "nodes": report.nodes},
        f"{report.verdict.value} nodes={report.nodes}",
    )
    if args.expect and args.expect != report.verdict.value:
        return 1
    return 0


def _nf_text(nf) -> str:
    parts = [f"D^{nf.power}"]
    for factor in nf.factors:
        parts.append(" ".join(str(g) for g in factor_word(factor)))
    return f"{nf.index}: " + " | ".join(parts)


def _cmd_nf(args) -> int:
    nf = normal_form(_word(args.word))
    payload = {
        "index": nf.index,
        "power": nf.power,
        "factors": [list(factor_word(f)) for f in nf.factors],
    }
    _emit(args, payload, _nf_text(nf))
    return 0


def _cmd_invariants(args) -> int:
    w = _word(args.word)
    fp = inv_mod.fingerprint(w)
    sl = inv_mod.self_linking(w)
    payload = {
        "components": fp.components,
        "alexander": str(fp.alexander),
        "self_linking": sl,
    }
    _emit(args, payload, f"{fp} sl={sl}")
    return 0


def _cmd_move(args) -> int:
    w = _word(args.word)
    try:
        move = move_from_json(json.loads(args.move))
    except (ValueError, KeyError, json.JSONDecodeError) as err:
        raise _Usage(f"bad move document: {err}") from err
    try:
        result = apply_move(w, move)
    except (InvalidSite, PatternMismatch, ValueError) as err:
        raise _Failure(str(err)) from err
    _emit(args, {"word": format_word(result)}, format_word(result))
    return 0


def _cmd_replay(args) -> int:
    try:
        tower = load_tower(args.tower)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as err:
        raise _Usage(f"bad tower file: {err}") from err
    report = replay(tower)
    payload = {
        "ok": report.ok,
        "failed_step": report.failed_step,
        "constant": report.constant,
        "fingerprints": [str(fp) for fp in report.fingerprints],
    }
    if report.ok:
        text = (
            f"replay ok steps={len(tower.steps)} constant="
            f"{'yes' if report.constant else 'no'}"
        )
    else:
        text = f"replay failed at step {report.failed_step}"
    _emit(args, payload, text)
    return 0 if report.ok and report.constant else 1


def _parse_assignment(pairs: list[str]) -> dict[str, BraidWord]:
    asg = {}
    for pair in pairs:
        name, sep, text = pair.partition("=")
        if not sep or not name:
            raise _Usage(f"expected NAME=WORD, got {pair!r}")
        asg[name] = _word(text)
    return asg


def _template_arg(ref: str):
    # a path wins; otherwise the ref names a catalog entry
    if os.path.exists(ref):
        try:
            return load_template(ref)
        except (ValueError, KeyError, json.JSONDecodeError) as err:
            raise _Usage(f"bad template file: {err}") from err
    for template in catalog():
        if template.name == ref:
            return template
    raise _Usage(f"no template file or catalog entry named {ref!r}")


def _cmd_expand(args) -> int:
    template = _template_arg(args.template)
    diagram = template.plus if args.side == "plus" else template.minus
    asg = _parse_assignment(args.assign or [])
    try:
        word = expand(diagram, asg)
    except (CoverageError, IndexMismatch, WeightFlowError) as err:
        raise _Failure(str(err)) from err
    _emit(args, {"word": format_word(word)}, format_word(word))
    return 0


def _cmd_verify_template(args) -> int:
    template = _template_arg(args.template)
    rng = random.Random(args.seed)
    samples = [
        sample_assignment(template, rng, args.max_len)
        for _ in range(args.samples)
    ]
    report = verify_template(template, samples)
    payload = {
        "template": report.template,
        "seed": args.seed,
        "delta_b": report.delta_b,
        "passed": report.passed,
        "samples": [
            {"number": s.number, "ok": s.ok, "detail": s.detail}
            for s in report.samples
        ],
    }
    text = (
        f"template={report.template} seed={args.seed}"
        f" samples={len(report.samples)}\n{report.summary()}"
    )
    _emit(args, payload, text)
    return 0 if report.all_pass else 1


def _cmd_certify(args) -> int:
    if os.path.exists(args.diagram):
        try:
            with open(args.diagram, encoding="utf-8") as fh:
                data = json.load(fh)
            if "plus" in data or "minus" in data:
                diagram = diagram_from_json(data[args.side])
            else:
                diagram = diagram_from_json(data)
        except (OSError, ValueError, KeyError, json.JSONDecodeError) as err:
            raise _Usage(f"bad diagram file: {err}") from err
    else:
        template = _template_arg(args.diagram)
        diagram = template.plus if args.side == "plus" else template.minus
    try:
        budget = sigma_budget(diagram)
    except BlockOnLastStrand as err:
        raise _Failure(str(err)) from err
    certified = budget < args.min_last_count
    payload = {
        "sigma_budget": budget,
        "required": args.min_last_count,
        "certified": certified,
    }
    text = (
        f"sigma_budget={budget} required={args.min_last_count}"
        f" certified={'yes' if certified else 'no'}"
    )
    _emit(args, payload, text)
    return 0 if certified else 1


def _cmd_census(args) -> int:
    try:
        vc, ec, chi = census_mod.load_census(args.census)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as err:
        raise _Usage(f"bad census file: {err}") from err
    annulus = census_mod.euler_balance_annulus(vc, ec.es)
    surface = (
        None if chi is None else census_mod.euler_balance_surface(vc, chi)
    )
    edges = census_mod.edge_vertex_consistency(vc, ec)
    advisory = census_mod.minimal_complexity_advisory(vc)
    payload = {
        "annulus_residual": annulus,
        "surface_residual": surface,
        "vertex_residual": edges.vertex_residual,
        "a_residual": edges.a_residual,
        "b_residual": edges.b_residual,
        "advisory": list(advisory),
    }
    lines = [f"annulus_residual={annulus}"]
    if surface is not None:
        lines.append(f"surface_residual={surface}")
    lines.append(
        f"vertex_residual={edges.vertex_residual}"
        f" a_residual={edges.a_residual} b_residual={edges.b_residual}"
    )
    for note in advisory:
        lines.append(f"advisory: {note}")
    _emit(args, payload, "\n".join(lines))
    consistent = annulus == 0 and edges.ok and (surface in (None, 0))
    return 0 if consistent else 1


def _cmd_reduce(args) -> int:
    w = _word(args.word)
    cfg = SearchConfig(
        max_index=args.max_index,
        max_extra_stabilizations=args.max_extra_stabilizations,
        max_word_length=args.max_word_length,
        node_budget=args.node_budget,
    )
    try:
        outcome = search_reduce(w, cfg)
    except ValueError as err:
        raise _Usage(str(err)) from err
    summary = (
        f"reduced n={w.index} len={len(w.letters)} ->"
        f" n={outcome.reached.index} len={len(outcome.reached.letters)}"
        f" nodes={outcome.nodes}"
    )
    doc = tower_to_json(outcome.best)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
        _emit(
            args,
            {"tower": doc, "summary": summary, "exhausted": outcome.exhausted},
            summary,
        )
    else:
        _emit(
            args,
            {"tower": doc, "summary": summary, "exhausted": outcome.exhausted},
            json.dumps(doc) + "\n" + summary,
        )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output format",
    )
    parser = argparse.ArgumentParser(
        prog="braid", description="braid word calculator"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eq", parents=[shared], help="braid word equality")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--expect", choices=("equal", "not-equal"))
    p.set_defaults(func=_cmd_eq)

    p = sub.add_parser("conj", parents=[shared], help="conjugacy test")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--cap", type=int, default=DEFAULT_NODE_CAP)
    p.add_argument(
        "--expect",
        choices=tuple(v.value for v in Verdict),
    )
    p.set_defaults(func=_cmd_conj)

    p = sub.add_parser("nf", parents=[shared], help="left normal form")
    p.add_argument("word")
    p.set_defaults(func=_cmd_nf)

    p = sub.add_parser(
        "invariants", parents=[shared], help="closure fingerprint"
    )
    p.add_argument("word")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("move", parents=[shared], help="apply one move")
    p.add_argument("word")
    p.add_argument("move", help="move document as JSON")
    p.set_defaults(func=_cmd_move)

    p = sub.add_parser("replay", parents=[shared], help="replay a tower file")
    p.add_argument("tower")
    p.set_defaults(func=_cmd_replay)

    p = sub.add_parser(
        "expand", parents=[shared], help="expand a template side"
    )
    p.add_argument("template")
    p.add_argument("--side", choices=("plus", "minus"), default="plus")
    p.add_argument(
        "--assign",
        action="append",
        metavar="NAME=WORD",
        help="block assignment, repeatable",
    )
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser(
        "verify-template",
        parents=[shared],
        help="sample assignments and compare closure fingerprints",
    )
    p.add_argument("template")
    p.add_argument("--samples", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-len", type=int, default=6)
    p.set_defaults(func=_cmd_verify_template)

    p = sub.add_parser(
        "certify",
        parents=[shared],
        help="top generator budget certificate for a diagram",
    )
    p.add_argument("diagram", help="diagram or template JSON file")
    p.add_argument("--side", choices=("plus", "minus"), default="plus")
    p.add_argument("--min-last-count", type=int, required=True)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser(
        "census", parents=[shared], help="census balance checks"
    )
    p.add_argument("census")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser(
        "reduce", parents=[shared], help="search for a reducing tower"
    )
    p.add_argument("word")
    p.add_argument("--node-budget", type=int, default=50_000)
    p.add_argument("--max-extra-stabilizations", type=int, default=2)
    p.add_argument("--max-index", type=int, default=16)
    p.add_argument("--max-word-length", type=int, default=64)
    p.add_argument("--out", help="write the tower file here")
    p.set_defaults(func=_cmd_reduce)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except _Failure as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
