"""Command line interface.

Exit codes: 0 certified/true, 1 refuted/false, 2 unknown or budget exhausted,
3 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import (
    CatalogError,
    classify_all,
    classify_file,
    manifest,
    revalidate,
    summarize,
    write_jsonl,
    write_summary_csv,
)
from .certificate import CertificateError, Unknown, certificate_problem, dumps, from_dict
from .config import RunConfig, config_path, load_config
from .graph import GraphError
from .io import ParseError, graph_to_dot, orientation_to_dot, read_graph_arg
from .multi import DecompositionError, as_non_strict, multi_from_dict, multi_number_upper, multi_problem, multi_to_dict
from .outcome import BudgetExceeded, Status
from .prover import prove_1_11, stage_of, synthesize_word
from .search import find_k11_representant, find_permutational_k11, is_circle, is_interval_via_2uniform_111
from .semitrans import find_semi_transitive_orientation
from .words import WordError, count_11, format_word, induced_subword, is_k11_representant, parse_word

OK, REFUTED, UNKNOWN, USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _label(x) -> object:
    return int(x) if x.lstrip("-").isdigit() else x


def _config(args) -> RunConfig:
    given = {k: getattr(args, k, None) for k in ("t_max", "m_max", "node_limit", "workers", "seed", "timings")}
    if getattr(args, "out", None):
        given["output"] = args.out
    if getattr(args, "summary", None):
        given["summary"] = args.summary
    if getattr(args, "non_strict", False):
        given["strict"] = False
    return load_config(given, path=config_path(args.config))


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text + "\n")
    else:
        print(text)


# -- subcommands ------------------------------------------------------------------------


def cmd_check_word(args, cfg: RunConfig) -> int:
    w = parse_word(args.word)
    if args.pair:
        x, y = (_label(p) for p in args.pair)
        sub = induced_subword(w, x, y, alphabet=set(w))
        c = count_11(w, x, y)
        edge = c <= args.k
        print(f"subword {format_word(sub)}")
        print(f"count_11 {c}")
        print(f"{'edge' if edge else 'non-edge'} at k={args.k}")
        return OK if edge else REFUTED
    letters = sorted(set(w), key=lambda a: (isinstance(a, str), a))
    edges = [(a, b) for i, a in enumerate(letters) for b in letters[i + 1 :] if count_11(w, a, b) <= args.k]
    print(f"vertices {' '.join(map(str, letters))}")
    print("edges " + " ".join(f"{a}-{b}" for a, b in edges))
    if args.graph is None:
        return OK
    g, _ = read_graph_arg(args.graph)
    if not all(isinstance(a, int) for a in w):
        raise UsageError("comparing against a graph needs integer letters 0..n-1")
    try:
        match = is_k11_representant(w, args.k, g)
    except WordError as e:
        print(f"no match: {e}")
        return REFUTED
    print("match" if match else "no match")
    return OK if match else REFUTED


def cmd_orient(args, cfg: RunConfig) -> int:
    g, labels = read_graph_arg(args.graph)
    res = find_semi_transitive_orientation(g, cfg.node_limit)
    if res.status is Status.BUDGET:
        print(f"inconclusive after {res.nodes} nodes")
        return UNKNOWN
    if not res.found:
        print("not word-representable")
        if args.dot:
            Path(args.dot).write_text(graph_to_dot(g, labels))
        return REFUTED
    print("word-representable")
    print("arcs " + " ".join(f"{u}>{v}" for u, v in res.value.arcs()))
    if args.dot:
        Path(args.dot).write_text(orientation_to_dot(res.value, labels=labels))
    return OK


def cmd_represent(args, cfg: RunConfig) -> int:
    g, _ = read_graph_arg(args.graph)
    budget = cfg.budget
    try:
        if args.mode == "uniform":
            res = find_k11_representant(g, args.k, budget)
            status, word, note = res.status, res.value, res.info
        elif args.mode == "permutational":
            res = find_permutational_k11(g, args.k, budget)
            status, word, note = res.status, res.value, res.info
        else:
            search = is_circle if args.mode == "circle" else is_interval_via_2uniform_111
            word = search(g, cfg.node_limit)
            status, note = (Status.FOUND if word is not None else Status.NONE), {}
    except BudgetExceeded:
        status, word, note = Status.BUDGET, None, {}
    if status is Status.BUDGET:
        print("inconclusive: budget exhausted")
        return UNKNOWN
    if status is Status.NONE:
        print("no representant within the search bounds")
        return REFUTED
    print(format_word(word) if g.n <= 10 else " ".join(map(str, word)))
    if note:
        print(json.dumps(note, sort_keys=True))
    return OK


def cmd_prove(args, cfg: RunConfig) -> int:
    g, _ = read_graph_arg(args.graph)
    cert = prove_1_11(g, cfg.budget)
    if isinstance(cert, Unknown):
        print("unknown: " + ", ".join(cert.trace), file=sys.stderr)
        _emit(dumps(cert), args.out)
        return UNKNOWN
    print(f"certified by {stage_of(cert)}", file=sys.stderr)
    _emit(dumps(cert), args.out)
    if args.synthesize:
        w = synthesize_word(g, cert, cfg.budget)
        print("word " + (" ".join(map(str, w)) if w is not None else "unavailable"), file=sys.stderr)
    return OK


def cmd_multi(args, cfg: RunConfig) -> int:
    g, _ = read_graph_arg(args.graph)
    try:
        m, mc = multi_number_upper(g, cfg.budget, seed=cfg.seed)
    except DecompositionError as e:
        print(f"unknown: {e}", file=sys.stderr)
        return UNKNOWN
    if not cfg.strict:
        mc = as_non_strict(mc)
    print(f"m <= {m}", file=sys.stderr)
    _emit(json.dumps(multi_to_dict(mc), sort_keys=True, separators=(",", ":")), args.out)
    return OK


def cmd_census(args, cfg: RunConfig) -> int:
    if (args.n is None) == (args.input is None):
        raise UsageError("census needs exactly one of --n or --input")
    if args.n is not None and args.n > 7 and not args.allow_large:
        raise UsageError("census --n above 7 needs --allow-large")
    if args.n is not None:
        records = classify_all(args.n, cfg.budget, cfg.workers, args.allow_large, cfg.timings)
        source = f"enumerate n={args.n}"
    else:
        records = classify_file(args.input, cfg.budget, cfg.workers, cfg.timings)
        source = f"file {Path(args.input).name}"
    try:
        if cfg.output:
            settings = {k: v for k, v in cfg.to_dict().items() if k not in ("output", "summary")}
            kept = write_jsonl(records, cfg.output, manifest(settings, source))
        else:
            kept = list(records)
    except CatalogError as e:
        print(f"aborted: {e}", file=sys.stderr)
        return UNKNOWN
    errors = [r for r in kept if r.error]
    for r in errors:
        print(f"parse error: {r.error}", file=sys.stderr)
    rows = summarize(kept)
    if cfg.summary:
        write_summary_csv(rows, cfg.summary)
    for row in rows:
        stages = " ".join(f"{k}={v}" for k, v in sorted(row.stages.items()))
        print(
            f"n={row.n} total={row.total} non_wr={row.non_word_representable} "
            f"non_wr_connected={row.non_word_representable_connected} "
            f"certified={row.certified} unknown={row.unknown} [{stages}]"
        )
    bad = revalidate(kept)
    for g6, why in bad:
        print(f"certificate rejected for {g6}: {why}", file=sys.stderr)
    if bad:
        return REFUTED
    if any(row.unknown for row in rows):
        return UNKNOWN
    return USAGE if errors else OK


def cmd_verify_cert(args, cfg: RunConfig) -> int:
    g, _ = read_graph_arg(args.graph)
    try:
        data = json.loads(Path(args.certificate).read_text())
        if data.get("kind") == "multi":
            why = multi_problem(g, multi_from_dict(data))
        else:
            why = certificate_problem(g, from_dict(data))
    except (KeyError, TypeError, AttributeError) as e:
        raise CertificateError(f"malformed certificate: {e}") from None
    if why:
        print(f"invalid: {why}")
        return REFUTED
    print("valid")
    return OK


# -- parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", help="JSON config file (also WORDREP_CONFIG)")
    common.add_argument("--t-max", type=int, help="largest uniformity tried by word searches")
    common.add_argument("--m-max", type=int, help="most permutation blocks tried")
    common.add_argument("--node-limit", type=int, help="search node budget")
    common.add_argument("--seed", type=int)

    p = _Parser(prog="wordrep", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("check-word", parents=[common], help="graph k-11-represented by a word")
    s.add_argument("word")
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--graph", help="graph6 string or graph file to compare against")
    s.add_argument("--pair", nargs=2, metavar=("X", "Y"))
    s.set_defaults(func=cmd_check_word)

    s = sub.add_parser("orient", parents=[common], help="semi-transitive orientation or refutation")
    s.add_argument("graph")
    s.add_argument("--dot", help="write a DOT drawing here")
    s.set_defaults(func=cmd_orient)

    s = sub.add_parser("represent", parents=[common], help="search for a representant word")
    s.add_argument("graph")
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--mode", choices=("uniform", "permutational", "circle", "interval"), default="uniform")
    s.set_defaults(func=cmd_represent)

    s = sub.add_parser("prove", parents=[common], help="1-11-representability certificate")
    s.add_argument("graph")
    s.add_argument("--out")
    s.add_argument("--synthesize", action="store_true", help="also build an explicit word when possible")
    s.set_defaults(func=cmd_prove)

    s = sub.add_parser("multi", parents=[common], help="strict multi-1-11 decomposition")
    s.add_argument("graph")
    s.add_argument("--out")
    s.add_argument("--non-strict", action="store_true")
    s.set_defaults(func=cmd_multi)

    s = sub.add_parser("census", parents=[common], help="classify all graphs on n vertices or a graph6 file")
    s.add_argument("--n", type=int)
    s.add_argument("--input")
    s.add_argument("--out", help="JSONL output")
    s.add_argument("--summary", help="CSV summary output")
    s.add_argument("--workers", type=int)
    s.add_argument("--allow-large", action="store_true", help="permit n = 8")
    s.add_argument("--timings", action="store_true", default=None, help="store per-phase timings")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("verify-cert", parents=[common], help="re-check a certificate file")
    s.add_argument("graph")
    s.add_argument("certificate")
    s.set_defaults(func=cmd_verify_cert)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, _config(args))
    except SystemExit as e:  # --help
        return e.code if isinstance(e.code, int) else OK
    except (UsageError, ParseError, GraphError, WordError, CertificateError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
