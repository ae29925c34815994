"""Command-line interface: ``topolat <command> ...``.

Every command prints plain text by default and JSON with
``--format structured``.  Topologies produced by ``construct`` are written in
the same JSON format that ``classify`` reads.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import core
from .beta import beta
from .core import Topology, format_mask, points_of
from .enumeration import default_jobs, enumerate_topologies
from .errors import (
    InternalInconsistency,
    InvalidInput,
    TopolatError,
    UnsupportedCombination,
)
from .harness import (
    any_refuted,
    classification_table,
    render_reports,
    render_reports_structured,
    verify_claims,
)
from .interchange import (
    beta_spec_from_obj,
    load_topology,
    read_json,
    topology_to_obj,
)
from .separation import AXIOMS, classify, irreducible_report
from .symbolic.blocks import PAIRED_BLOCKS, SINGLETON_BLOCKS
from .symbolic.catalog import (
    SymFilter,
    SymTopology,
    describe_set,
    strictness_witness,
    sym_beta,
    sym_classify,
    sym_compare,
)
from .symbolic.constructions import (
    DEFAULT_BOUND,
    minimality_condition,
    one_point_demo,
    paired_blocks_demo,
    presober_chain,
    presober_chain_report,
    presober_descent_demo,
)
from .symbolic.oracle import LEVELS, truncation_agreement

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

BLOCK_LAYOUTS = {"singleton": SINGLETON_BLOCKS, "paired": PAIRED_BLOCKS}

DEMOS = ("paired-blocks", "one-point-coarsening", "presober-descent")


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False))


def _structured(args) -> bool:
    return args.format == "structured"


def _jobs(args) -> int:
    return args.jobs if args.jobs is not None else default_jobs()


def _json_arg(text: str):
    """A JSON literal, or the path of a file holding one."""
    path = Path(text)
    if not text.lstrip().startswith(("{", "[")) and path.exists():
        return read_json(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        if not path.exists():
            raise InvalidInput(f"{text!r} is neither a JSON literal nor an existing file") from None
        raise InvalidInput(f"{text!r}: malformed JSON") from None


# -- finite commands ---------------------------------------------------------------


def _profile_obj(t: Topology) -> dict:
    p = classify(t)
    report = irreducible_report(t)
    return {
        "topology": topology_to_obj(t),
        "axioms": p.as_dict(),
        "witnesses": {ax: w.describe() for ax, w in sorted(p.witnesses.items())},
        "irreducible_closed": [
            {"set": points_of(c), "generic_points": points_of(report.generic_points[c])}
            for c in report.irreducible_closed
        ],
        "point_closures": [points_of(c) for c in t.point_closures],
    }


def cmd_classify(args) -> int:
    t = load_topology(args.file)
    obj = _profile_obj(t)
    if _structured(args):
        _emit(obj)
        return EXIT_OK
    print(f"topology: {t.describe()}")
    width = max(len(ax) for ax in AXIOMS)
    for ax in AXIOMS:
        verdict = "true" if obj["axioms"][ax] else "false"
        line = f"  {ax.ljust(width)}  {verdict}"
        if ax in obj["witnesses"]:
            line += f"   ({obj['witnesses'][ax]})"
        print(line)
    print("point closures: " + ", ".join(f"cl({x}) = {format_mask(c)}" for x, c in enumerate(t.point_closures)))
    report = irreducible_report(t)
    print("irreducible closed sets: " + report.describe())
    return EXIT_OK


def _construct(args) -> Topology:
    if args.what == "beta":
        if len(args.inputs) != 1:
            raise InvalidInput("construct beta takes one beta-spec file")
        spec = beta_spec_from_obj(read_json(args.inputs[0]))
        return beta(spec)
    if args.what in ("at", "bar"):
        if len(args.inputs) != 1:
            raise InvalidInput(f"construct {args.what} takes one topology file")
        t = load_topology(args.inputs[0])
        return core.at_topology(t) if args.what == "at" else core.alexandroff_closure(t)
    if len(args.inputs) != 2:
        raise InvalidInput(f"construct {args.what} takes two topology files")
    t1, t2 = (load_topology(p) for p in args.inputs)
    return core.lattice_op(t1, t2, args.what)


def cmd_construct(args) -> int:
    t = _construct(args)
    text = json.dumps(topology_to_obj(t), indent=2 if _structured(args) else None)
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    tops = enumerate_topologies(args.n, _jobs(args))
    if _structured(args):
        _emit({"n": args.n, "count": len(tops), "topologies": [topology_to_obj(t) for t in tops]})
        return EXIT_OK
    if not args.count_only:
        for t in tops:
            print(t.describe())
    print(f"count: {len(tops)} topologies on {args.n} points (both enumerators agree)")
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = verify_claims(args.n, _jobs(args))
    if _structured(args):
        print(render_reports_structured(reports, args.timings))
    else:
        print(render_reports(reports, args.timings))
    return EXIT_REFUTED if any_refuted(reports) else EXIT_OK


def cmd_table(args) -> int:
    table = classification_table(args.n, _jobs(args))
    if _structured(args):
        _emit(table.as_obj())
    else:
        sys.stdout.write(table.to_csv())
    return EXIT_OK


# -- symbolic commands -------------------------------------------------------------


def _sym_topology(args, text: str) -> SymTopology:
    return SymTopology.from_obj(_json_arg(text), BLOCK_LAYOUTS[args.blocks])


def _sym_profile_obj(t: SymTopology) -> dict:
    p = sym_classify(t)
    return {
        "topology": t.to_obj(),
        "axioms": p.as_dict(),
        "witnesses": {ax: w.describe() for ax, w in sorted(p.witnesses.items())},
        "scope": dict(sorted(p.scope.items())),
    }


def cmd_sym_classify(args) -> int:
    t = _sym_topology(args, args.topology)
    obj = _sym_profile_obj(t)
    if _structured(args):
        _emit(obj)
        return EXIT_OK
    print(f"topology: {t} ({t.blocks.label})")
    width = max(len(ax) for ax in AXIOMS)
    for ax in AXIOMS:
        line = f"  {ax.ljust(width)}  {'true' if obj['axioms'][ax] else 'false'}"
        if ax in obj["witnesses"]:
            line += f"   ({obj['witnesses'][ax]})"
        print(line)
    for ax, note in obj["scope"].items():
        print(f"scope ({ax}): {note}")
    return EXIT_OK


def cmd_sym_beta(args) -> int:
    t = _sym_topology(args, args.topology)
    f = SymFilter.from_obj(_json_arg(args.filter))
    result = sym_beta(t, args.pivot, f)
    order = sym_compare(result, t)
    witness = strictness_witness(result, t)
    profile = sym_classify(result)
    if _structured(args):
        _emit({
            "input": t.to_obj(),
            "pivot": args.pivot,
            "filter": f.to_obj(),
            "beta": result.to_obj(),
            "order": order,
            "witness": witness.to_obj() if witness is not None else None,
            "axioms": profile.as_dict(),
        })
        return EXIT_OK
    print(f"beta({t}, {args.pivot}, {f}) = {result}")
    print(f"order: beta {order} {t}")
    if witness is not None:
        print(f"witness open: block {witness} = {describe_set(t, witness)}")
    print("axioms: " + ", ".join(f"{ax}={'true' if v else 'false'}" for ax, v in profile.as_dict().items()))
    return EXIT_OK


def cmd_sym_minimality(args) -> int:
    t = _sym_topology(args, args.topology)
    report = minimality_condition(t, args.mode, args.bound)
    if _structured(args):
        _emit({
            "topology": t.to_obj(),
            "mode": report.mode,
            "passed": report.passed,
            "checked": report.checked,
            "relevant": report.relevant,
            "witness": report.witness.to_obj() if report.witness is not None else None,
            "scope": report.scope,
        })
    else:
        print(report.describe())
    return EXIT_OK


def cmd_sym_chain(args) -> int:
    chain = presober_chain(args.k)
    steps = presober_chain_report(args.k)
    if _structured(args):
        _emit({
            "k": args.k,
            "chain": [t.to_obj() for t in chain],
            "presober": [sym_classify(t).presober for t in chain],
            "steps": [
                {"pivot": s.pivot, "strictly_less": s.strictly_less,
                 "filter_contains_bottom_neighborhoods": s.filter_contains_bottom_nbhd,
                 "witness_open": s.witness_open.to_obj() if s.witness_open is not None else None,
                 "ok": s.ok}
                for s in steps
            ],
        })
        return EXIT_OK
    print(presober_descent_demo(args.k).text())
    return EXIT_OK


def _fact_obj(value):
    if hasattr(value, "to_obj"):
        return value.to_obj()
    if isinstance(value, (list, tuple)):
        return [_fact_obj(v) for v in value]
    return value


def cmd_sym_demo(args) -> int:
    name = args.name
    if name not in DEMOS:
        raise InvalidInput(f"unknown demo {args.name!r}; choose from {', '.join(DEMOS)}")
    if name == "paired-blocks":
        demo = paired_blocks_demo()
    elif name == "one-point-coarsening":
        demo = one_point_demo(args.arg if args.arg is not None else 0)
    else:
        demo = presober_descent_demo(args.arg if args.arg is not None else 5)
    if _structured(args):
        _emit({"demo": name, "title": demo.title, "lines": demo.lines,
               "facts": {k: _fact_obj(v) for k, v in demo.facts.items()}})
    else:
        print(demo.text())
    return EXIT_OK


def cmd_sym_oracle(args) -> int:
    levels = range(args.low, args.high + 1)
    results = truncation_agreement(levels)
    ok = all(r.ok for r in results)
    if _structured(args):
        _emit({
            "levels": list(levels),
            "ok": ok,
            "results": [{"formula": r.formula, "level": r.level, "checked": r.checked,
                         "mismatches": len(r.mismatches), "unstable": len(r.unstable)}
                        for r in results],
        })
    else:
        for r in results:
            status = "agree" if r.ok else "DISAGREE"
            print(f"level {r.level}  {r.formula:<16} {r.checked:>4} cases  {status}")
        print(f"all formulas agree with the truncation oracle: {ok}")
    return EXIT_OK if ok else EXIT_REFUTED


# -- parser ------------------------------------------------------------------------


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text",
                        help="plain text (default) or JSON")
    jobs = argparse.ArgumentParser(add_help=False)
    jobs.add_argument("--jobs", type=_positive, default=None,
                      help="worker processes (default: $TOPOLAT_JOBS or 1)")
    blocks = argparse.ArgumentParser(add_help=False)
    blocks.add_argument("--blocks", choices=sorted(BLOCK_LAYOUTS), default="singleton",
                        help="point layout of the blocks, used when rendering sets")

    parser = argparse.ArgumentParser(
        prog="topolat",
        description="Finite topologies, separation axioms and the beta coarsening; "
                    "symbolic block topologies on the natural numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify a topology file")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("construct", parents=[common], help="build a topology from files")
    p.add_argument("what", choices=("beta", "at", "bar", "meet", "join"))
    p.add_argument("inputs", nargs="+", help="beta-spec file, or one/two topology files")
    p.add_argument("-o", "--output", help="write the topology here instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("enumerate", parents=[common, jobs], help="list all topologies on n points")
    p.add_argument("n", type=_positive)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common, jobs], help="check every claim exhaustively")
    p.add_argument("n", type=_positive)
    p.add_argument("--timings", action="store_true", help="include elapsed times (not deterministic)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[common, jobs], help="count topologies per axiom pattern")
    p.add_argument("n", type=_positive)
    p.set_defaults(func=cmd_table)

    sym = sub.add_parser("sym", help="symbolic block topologies").add_subparsers(dest="sym_command", required=True)

    p = sym.add_parser("classify", parents=[common, blocks], help="axioms of a catalog topology")
    p.add_argument("topology", help='JSON literal or file, e.g. \'{"tag": "MultiConv", "special": [0]}\'')
    p.set_defaults(func=cmd_sym_classify)

    p = sym.add_parser("beta", parents=[common, blocks], help="the beta coarsening inside the catalog")
    p.add_argument("topology")
    p.add_argument("pivot", type=_natural)
    p.add_argument("filter", help='JSON literal or file, e.g. \'{"tag": "CofiniteContaining", "base": [0]}\'')
    p.set_defaults(func=cmd_sym_beta)

    p = sym.add_parser("minimality", parents=[common, blocks], help="minimality condition over the filter catalog")
    p.add_argument("topology")
    p.add_argument("--mode", choices=("R1", "regular"), default="R1")
    p.add_argument("--bound", type=_natural, default=DEFAULT_BOUND, help="largest block index in filter bases")
    p.set_defaults(func=cmd_sym_minimality)

    p = sym.add_parser("chain", parents=[common], help="descending chain of presober topologies")
    p.add_argument("k", type=_positive)
    p.set_defaults(func=cmd_sym_chain)

    p = sym.add_parser("demo", parents=[common], help="worked constructions: " + ", ".join(DEMOS))
    p.add_argument("name")
    p.add_argument("arg", nargs="?", type=_natural, help="pivot block or chain length")
    p.set_defaults(func=cmd_sym_demo)

    p = sym.add_parser("oracle", parents=[common], help="compare symbolic rules with finite truncations")
    p.add_argument("--low", type=_positive, default=LEVELS.start)
    p.add_argument("--high", type=_positive, default=LEVELS.stop - 1)
    p.set_defaults(func=cmd_sym_oracle)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, UnsupportedCombination, OSError) as exc:
        print(f"topolat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInconsistency as exc:
        print(f"topolat: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except TopolatError as exc:
        print(f"topolat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
