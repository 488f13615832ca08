"""Command line front end.

Exit codes: 0 success, 1 usage error or invalid decomposition, 2 parse
error, 3 input not planar or not triconnected where that is required.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path
from typing import Iterable, Sequence, TextIO

from . import oracle
from .chordless import chordless_cycles, chordless_paths
from .errors import (Disconnected, InvalidEmbedding, MultiEdge, NotBiconnected, NotPlanar,
                     NotTriconnected, ParseError, PlanarPMCError, TooLarge)
from .graph import Graph
from .io import format_gr, format_td, parse_gr, parse_rotation, parse_td
from .latching import LatchingGraph, build_latching
from .meter import WorkMeter
from .minsep import minimal_separators
from .planar import PlaneGraph, embed, is_triconnected
from .pmc import PmcStats, pmcs
from .treewidth import TreewidthStats, treewidth_planar, validate_td

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_STRUCTURE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _Fail(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as e:
        raise _Fail(EXIT_USAGE, f"cannot read {path}: {e.strerror}") from None


def _graph(args) -> Graph:
    return parse_gr(_read_text(args.input))


def _plane(args, g: Graph) -> PlaneGraph:
    if args.embedding:
        return parse_rotation(_read_text(args.embedding), g)
    return embed(g)


def _latching(args, g: Graph) -> tuple[PlaneGraph, LatchingGraph]:
    if not is_triconnected(g) or g.n < 4:
        raise NotTriconnected("this command needs a triconnected graph on at least 4 vertices")
    pg = _plane(args, g)
    return pg, build_latching(pg)


def _ids(vs: Iterable[int]) -> str:
    return " ".join(str(v + 1) for v in vs)


def _limit(args, it: Iterable):
    for i, x in enumerate(it):
        if args.max_count is not None and i >= args.max_count:
            return
        yield x


# -- subcommands --------------------------------------------------------------


def cmd_tw(args, out: TextIO, err: TextIO) -> int:
    g = _graph(args)
    st = TreewidthStats()
    w, td = treewidth_planar(g, st)
    out.write(f"{w}\n")
    if args.output:
        Path(args.output).write_text(format_td(td, g.n))
    if args.stats:
        err.write(f"c bags {len(td.bags)}\n")
        err.write(f"c pieces {dict(sorted(st.pieces.items()))}\n")
        err.write(f"c two-separator splits {len(st.splits)}\n")
        err.write(f"c pmcs per triconnected piece {st.pmc_counts}\n")
    return EXIT_OK


def cmd_pmcs(args, out: TextIO, err: TextIO) -> int:
    g = _graph(args)
    if g.n <= 3:
        pg, l = None, None
    else:
        pg, l = _latching(args, g)
    st, meter = PmcStats(), WorkMeter()
    for p in _limit(args, pmcs(g, pg=pg, l=l, stats=st, meter=meter)):
        out.write(_ids(p.sorted()) + "\n")
    if args.stats:
        _pmc_report(st, meter, err)
    return EXIT_OK


def _pmc_report(st: PmcStats, meter: WorkMeter, err: TextIO) -> None:
    gaps = sorted(meter.gaps)
    err.write(f"c emitted {st.emitted}\n")
    err.write(f"c by category {dict(sorted(st.by_category.items()))}\n")
    err.write(f"c max delay {max(gaps, default=0)} events\n")
    if gaps:
        qs = [gaps[min(len(gaps) - 1, int(q * len(gaps)))] for q in (0.5, 0.9, 0.99)]
        err.write(f"c delay p50 {qs[0]} p90 {qs[1]} p99 {qs[2]}\n")
    err.write(f"c suppressed top {st.top.suppressed} inner {st.inner_suppressed}\n")
    err.write(f"c filter rejections {st.filter_rejections}\n")
    err.write(f"c minimal separators seen {st.minseps_seen}\n")


def cmd_minseps(args, out: TextIO, err: TextIO) -> int:
    g = _graph(args)
    _, l = _latching(args, g)
    for ms in _limit(args, minimal_separators(g, l)):
        out.write(_ids(sorted(ms.vertices)) + "\n")
    return EXIT_OK


def cmd_latching(args, out: TextIO, err: TextIO) -> int:
    g = _graph(args)
    pg = _plane(args, g)
    l = build_latching(pg)
    for e in l.edges():
        tag = "edge" if e.face is None else f"chord {e.face}"
        out.write(f"{e.u + 1} {e.v + 1} {tag}\n")
    return EXIT_OK


def cmd_chordless_cycles(args, out: TextIO, err: TextIO) -> int:
    g = _graph(args)
    for cyc in _limit(args, chordless_cycles(g)):
        out.write(_ids(cyc) + "\n")
    return EXIT_OK


def cmd_chordless_paths(args, out: TextIO, err: TextIO) -> int:
    g = _graph(args)
    s, t = args.source - 1, args.target - 1
    if s not in g or t not in g or s == t:
        raise _Fail(EXIT_USAGE, "--source and --target must be distinct vertices of the graph")
    for p in _limit(args, chordless_paths(g, s, t)):
        out.write(_ids(p) + "\n")
    return EXIT_OK


def cmd_check_td(args, out: TextIO, err: TextIO) -> int:
    g = _graph(args)
    td, n = parse_td(_read_text(args.td))
    if n != g.n:
        out.write(f"invalid: decomposition is for {n} vertices, graph has {g.n}\n")
        return EXIT_USAGE
    if not validate_td(g, td):
        out.write("invalid\n")
        return EXIT_USAGE
    out.write(f"valid width {td.width}\n")
    return EXIT_OK


def cmd_oracle(args, out: TextIO, err: TextIO) -> int:
    g = _graph(args)
    if args.what == "tw":
        out.write(f"{oracle.treewidth_bruteforce(g)}\n")
        return EXIT_OK
    found = oracle.pmcs_bruteforce(g) if args.what == "pmcs" else oracle.minseps_bruteforce(g)
    for x in _limit(args, sorted(sorted(x) for x in found)):
        out.write(_ids(x) + "\n")
    return EXIT_OK


def cmd_corpus(args, out: TextIO, err: TextIO) -> int:
    seed = args.seed
    if seed is None:
        seed = 1 if args.deterministic else random.SystemRandom().randrange(2**31)
    items = oracle.corpus(seed=seed, n_max=args.n_max)
    if args.output:
        d = Path(args.output)
        d.mkdir(parents=True, exist_ok=True)
        for c in items:
            (d / f"{c.name}.gr").write_text(format_gr(c.graph))
    out.write(f"c seed {seed}\n")
    for c in _limit(args, items):
        flags = "".join(f for f, on in (("P", c.planar), ("B", c.biconnected), ("T", c.triconnected)) if on)
        out.write(f"{c.name} {c.n} {c.graph.m} {flags or '-'}\n")
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", default="-", help="graph in .gr format (default: stdin)")
    common.add_argument("--embedding", help="rotation system file, lines 'v: u1 u2 ...'")
    common.add_argument("--output", "-o", help="output file (.td for tw, directory for corpus)")
    common.add_argument("--max-count", type=int, help="stop after this many results")
    common.add_argument("--stats", action="store_true", help="report counters on stderr")
    common.add_argument("--seed", type=int, help="corpus seed")
    common.add_argument("--deterministic", action=argparse.BooleanOptionalAction, default=True,
                        help="fixed seed when none is given (default on)")

    p = _Parser(prog="planar-pmc", description="Exact treewidth and PMC generation for planar graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=fn)
        return sp

    add("tw", cmd_tw, "treewidth; width on stdout, decomposition to --output")
    add("pmcs", cmd_pmcs, "PMCs of a triconnected planar graph")
    add("minseps", cmd_minseps, "minimal separators of a triconnected planar graph")
    add("latching", cmd_latching, "latching graph edges with their origin")
    add("chordless-cycles", cmd_chordless_cycles, "chordless cycles")
    sp = add("chordless-paths", cmd_chordless_paths, "chordless paths between two vertices")
    sp.add_argument("--source", "-s", type=int, required=True)
    sp.add_argument("--target", "-t", type=int, required=True)
    sp = add("check-td", cmd_check_td, "validate a .td file against the --input graph")
    sp.add_argument("td", help="decomposition in .td format")
    sp = add("oracle", cmd_oracle, "brute-force reference answers for small graphs")
    sp.add_argument("what", choices=("pmcs", "minseps", "tw"))
    sp = add("corpus", cmd_corpus, "list (and optionally write) the test corpus")
    sp.add_argument("--n-max", type=int, default=12)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None,
         err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    if args.max_count is not None and args.max_count < 0:
        err.write("--max-count must be non-negative\n")
        return EXIT_USAGE
    try:
        return args.func(args, out, err)
    except _Fail as e:
        err.write(f"error: {e}\n")
        return e.code
    except ParseError as e:
        err.write(f"parse error: {e}\n")
        return EXIT_PARSE
    except InvalidEmbedding as e:
        err.write(f"invalid embedding: {e}\n")
        return EXIT_PARSE
    except (NotPlanar, NotTriconnected, NotBiconnected, MultiEdge, Disconnected) as e:
        err.write(f"unsupported input: {e}\n")
        return EXIT_STRUCTURE
    except TooLarge as e:
        err.write(f"too large: {e}\n")
        return EXIT_USAGE
    except PlanarPMCError as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
