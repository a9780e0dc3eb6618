"""Command-line front end: ``cycpres <command> [options]``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from .freeword import WordError, format_word, parse_word
from .presentation import (
    CyclicPresentation,
    PresentationError,
    RedundancyKind,
    classify_redundancy,
    concise_refinement,
)
from .search import BudgetExceeded, DEFAULT_BUDGET, EnumSpec, crossvalidate, find_special, special_jsonl
from .special import certificate_json, is_special_direct, theorem_verdict, verdicts_agree
from .stargraph import graph_to_json, metrics, recognize, star_graph, to_dot


class UsageError(Exception):
    pass


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError(f"empty or non-positive range {text!r}")
    return a, b


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _presentation(args) -> CyclicPresentation:
    if args.n is None or args.w is None:
        raise UsageError("-n and -w are required for this command")
    try:
        return CyclicPresentation(args.n, parse_word(args.w, args.n))
    except (WordError, PresentationError) as exc:
        raise UsageError(str(exc)) from None


def cmd_analyze(args, out) -> int:
    P = _presentation(args)
    r = classify_redundancy(P)
    if args.output == "json":
        out.write(_dump(r.to_json()) + "\n")
        return 0
    lines = [
        str(P),
        f"kind: {r.kind.value}",
        f"root: {format_word(r.root)} (power {r.root_power})",
        f"period: u = {format_word(r.period.u)}, theta^{r.period.h}",
    ]
    if r.kind is RedundancyKind.NON_ORIENTABLE:
        lines.append(
            f"normal form: phi^{r.rotation}(w) = u theta^{P.n // 2}(u)^-1 with u = {format_word(r.half_word)}"
        )
    lines.append(f"concise refinement: P_{{{P.n},{r.refinement_size}}}, deficiency {r.deficiency}")
    out.write("\n".join(lines) + "\n")
    return 0


def cmd_refine(args, out) -> int:
    P = _presentation(args)
    T = concise_refinement(P)
    rels = [format_word(r) for r in T.relators]
    if args.output == "json":
        out.write(_dump({"n": T.n, "t": T.t, "deficiency": T.deficiency, "relators": rels}) + "\n")
    else:
        out.write(f"P_{{{T.n},{T.t}}}: deficiency {T.deficiency}\n")
        out.write("".join(f"theta^{i}: {r}\n" for i, r in enumerate(rels)))
    return 0


def cmd_stargraph(args, out) -> int:
    G = star_graph(_presentation(args))
    if args.output == "dot":
        out.write(to_dot(G))
        return 0
    data = graph_to_json(G)
    if args.output == "json":
        out.write(_dump(data) + "\n")
        return 0
    m = metrics(G)
    kinds = [recognize(G.subgraph(c)).describe() for c in G.components()]
    out.write(
        f"vertices {len(G.vertices)}, edges {len(G.edges)}, components {m.component_count}\n"
        f"girth {data['girth'] if data['girth'] is not None else 'inf'}, diameters {data['diameter']}, "
        f"regular {m.regular_degree}, bipartite {m.is_bipartite}\n"
        f"components: {', '.join(kinds)}\n"
    )
    return 0


def cmd_special(args, out) -> int:
    P = _presentation(args)
    cert = is_special_direct(P)
    tv = theorem_verdict(P)
    agree = verdicts_agree(cert, tv)
    data = certificate_json(P)
    data["theorem_checker"]["triple"] = list(tv.triple) if tv.triple else None
    data["agree"] = agree
    if args.output == "json":
        out.write(_dump(data) + "\n")
    else:
        direct = f"({cert.m},{cert.k},{cert.nu})-special" if cert.is_special else f"not special ({cert.reason})"
        crit = f"{tv.name}: {tv.verdict.value}"
        if tv.triple:
            crit += f" {tv.triple}"
        elif tv.failed_clause:
            crit += f" [{tv.failed_clause}]"
        comps = ", ".join(c["recognized_as"] for c in data["components"] if c["recognized_as"])
        flags = data["flags"]
        out.write(
            f"{P}\ndirect:  {direct}\ncriterion: {crit}\n"
            + (f"components: {comps}\n" if comps else "")
            + f"large: {flags['large']}, tits: {flags['tits']}, hyperbolic: {flags['hyperbolic']}\n"
            + f"agree: {agree}\n"
        )
    return 0 if agree else 1


def cmd_search(args, out) -> int:
    if args.n_range is None or args.k_range is None:
        raise UsageError("--n-range and --k-range are required for search")
    spec = EnumSpec(
        args.n_range,
        args.k_range,
        positive_only=args.positive_only,
        up_to_symmetry=args.up_to_symmetry,
        not_proper_power=args.not_proper_power,
        budget=args.budget,
    )
    try:
        if args.crossvalidate:
            rep = crossvalidate(spec)
            out.write(rep.jsonl())
            return 0 if rep.clean else 1
        start = time.perf_counter()
        hits = find_special(spec)
        out.write(special_jsonl(hits, time.perf_counter() - start))
        return 0
    except BudgetExceeded as exc:
        raise UsageError(str(exc)) from None


def cmd_selftest(args, out) -> int:
    from . import acceptance

    results = acceptance.run_fixtures() if args.fixtures else acceptance.run_all()
    for r in results:
        out.write(r.line() + "\n")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cycpres", description="Analyse cyclic presentations P_n(w).")
    sub = parser.add_subparsers(dest="command", required=True)

    def word_args(p, formats, default):
        p.add_argument("-n", type=int, help="number of generators")
        p.add_argument("-w", help='defining word, e.g. "x0 x2^-1 x3"')
        p.add_argument("-o", "--output", choices=formats, default=default)

    word_args(sub.add_parser("analyze", help="redundancy and orientability"), ["json", "text"], "text")
    word_args(sub.add_parser("refine", help="concise refinement"), ["json", "text"], "text")
    word_args(sub.add_parser("stargraph", help="star graph with metrics"), ["json", "text", "dot"], "json")
    word_args(sub.add_parser("special", help="special-presentation certificate"), ["json", "text"], "json")

    s = sub.add_parser("search", help="exhaustive search or oracle cross-validation")
    s.add_argument("--n-range", type=_range, metavar="a..b")
    s.add_argument("--k-range", type=_range, metavar="a..b")
    s.add_argument("--positive-only", action="store_true")
    s.add_argument("--up-to-symmetry", action="store_true")
    s.add_argument("--not-proper-power", action="store_true")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--crossvalidate", action="store_true", help="run the oracle comparisons instead")

    t = sub.add_parser("selftest", help="run the acceptance suite")
    t.add_argument("--fixtures", action="store_true", help="only the named fixture checks")
    return parser


COMMANDS = {
    "analyze": cmd_analyze,
    "refine": cmd_refine,
    "stargraph": cmd_stargraph,
    "special": cmd_special,
    "search": cmd_search,
    "selftest": cmd_selftest,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"cycpres: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
