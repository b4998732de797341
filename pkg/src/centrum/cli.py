"""``centrum`` command line.

Exit status: 0 on success, 1 on invalid data or I/O problems (one-line
diagnostic on stderr), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
import warnings
from pathlib import Path

from centrum import __version__
from centrum import fixture as fixture_mod
from centrum import reports
from centrum.centrality import MEASURES, all_centralities
from centrum.errors import CentrumError
from centrum.evolution import TABLE2_COLUMNS, TABLE3_COLUMNS, table2_rows, table3_rows
from centrum.graph import cumulative_snapshot, growth_report
from centrum.ingest import TemporalCorpus, parse_publications
from centrum.simulate import SimConfig, load_config, run
from centrum.stats import correlation_report, mean_split_report

PROG = "centrum"


class Outputs:
    """Writes outputs and records them for the run manifest."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.paths: list[str] = []
        self.started = time.perf_counter()

    def write(self, dest: str | Path | None, text: str) -> None:
        if dest is None or str(dest) == "-":
            sys.stdout.write(text)
            return
        path = Path(dest)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        self.paths.append(str(path))

    def manifest(self, location: Path | None) -> None:
        if not self.paths or location is None:
            return
        config = {k: v for k, v in sorted(vars(self.args).items()) if k != "func"}
        blob = json.dumps(config, sort_keys=True, default=str).encode()
        record = {
            "subcommand": self.args.command,
            "inputs": [p for p in (getattr(self.args, "inp", None), getattr(self.args, "config", None)) if p],
            "outputs": self.paths,
            "config_hash": hashlib.sha256(blob).hexdigest(),
            "tool_version": __version__,
            "duration_s": round(time.perf_counter() - self.started, 6),
        }
        location.write_text(json.dumps(record, indent=2) + "\n", encoding="utf-8")


def _load(args) -> TemporalCorpus:
    if args.inp is None:
        raise CentrumError("missing --in (use '-' for standard input)")
    if args.inp == "-":
        return parse_publications(sys.stdin, format=args.format or "jsonl")
    if not Path(args.inp).is_file():
        raise CentrumError(f"input file not found: {args.inp}")
    return parse_publications(args.inp, format=args.format)


def _manifest_for(out) -> Path | None:
    if out is None or out == "-":
        return None
    return Path(str(out) + ".manifest.json")


def _out_dir(args) -> Path:
    if not args.out_dir:
        raise CentrumError("missing --out-dir")
    d = Path(args.out_dir)
    try:
        d.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise CentrumError(f"cannot create output directory {d}: {exc.strerror}") from None
    return d


def _measures(spec: str) -> tuple[str, ...]:
    if spec == "all":
        return MEASURES
    parts = tuple(p.strip() for p in spec.split(",") if p.strip())
    bad = [p for p in parts if p not in MEASURES]
    if bad or not parts:
        raise argparse.ArgumentTypeError(f"invalid measure list {spec!r}")
    return parts


def cmd_ingest(args, out: Outputs) -> None:
    corpus = _load(args)
    out.write(args.out, corpus.dumps())
    if not args.quiet:
        n_authors = len(corpus.authors())
        print(f"{len(corpus)} publications, {len(corpus.by_year)} years, {n_authors} authors", file=sys.stderr)
    out.manifest(_manifest_for(args.out))


def cmd_growth(args, out: Outputs) -> None:
    out.write(args.out, reports.growth_csv(growth_report(_load(args))))
    out.manifest(_manifest_for(args.out))


def cmd_snapshot(args, out: Outputs) -> None:
    corpus = _load(args)
    snap = cumulative_snapshot(corpus, args.year)
    if args.dot is None and args.out is None:
        raise CentrumError("snapshot needs --dot and/or --out")
    if args.dot is not None:
        out.write(args.dot, snap.to_dot())
    if args.out is not None:
        edges = [(a, b, w) for (a, b), w in sorted(snap.weights.items())]
        out.write(args.out, reports.to_csv(("source", "target", "weight"), edges))
    out.manifest(_manifest_for(args.out if args.out not in (None, "-") else args.dot))


def cmd_centrality(args, out: Outputs) -> None:
    corpus = _load(args)
    snap = cumulative_snapshot(corpus, args.year)
    vecs = all_centralities(snap, threads=args.threads, measures=args.measure)
    out.write(args.out, reports.centrality_csv(vecs.values()))
    out.manifest(_manifest_for(args.out))


def cmd_evolve_report(args, out: Outputs) -> None:
    corpus = _load(args)
    tables = {t.strip() for t in args.tables.split(",") if t.strip()}
    bad = tables - {"1", "2", "3"}
    if bad or not tables:
        raise CentrumError(f"--tables accepts 1, 2 and 3, got {args.tables!r}")
    d = _out_dir(args)
    if "1" in tables:
        out.write(d / "table1_growth.csv", reports.growth_csv(growth_report(corpus)))
    if "2" in tables:
        out.write(d / "table2_authors.csv", reports.dict_rows_csv(TABLE2_COLUMNS, table2_rows(corpus)))
    if "3" in tables:
        out.write(d / "table3_links.csv", reports.dict_rows_csv(TABLE3_COLUMNS, table3_rows(corpus)))
    out.manifest(d / "manifest.json")


def cmd_correlate(args, out: Outputs) -> None:
    corpus = _load(args)
    target = args.target.replace("-", "_")
    if target == "coauthors":
        target = "coauthors_next"
    rows = correlation_report(corpus, args.measures, target=target, threads=args.threads, exact=args.exact)
    out.write(args.out, reports.correlation_csv(rows))
    out.manifest(_manifest_for(args.out))


def cmd_mean_split(args, out: Outputs) -> None:
    rows = mean_split_report(_load(args), args.measures, threads=args.threads)
    out.write(args.out, reports.mean_split_csv(rows))
    out.manifest(_manifest_for(args.out))


def cmd_simulate(args, out: Outputs) -> None:
    if args.config is not None:
        if not Path(args.config).is_file():
            raise CentrumError(f"config file not found: {args.config}")
        cfg = load_config(args.config, seed=args.seed)
    else:
        cfg = SimConfig(seed=args.seed) if args.seed is not None else SimConfig()
    trace = run(cfg, threads=args.threads)
    out.write(args.out, trace.dumps())
    if args.kernel_out:
        rows = [(y, a, p) for y, probs in sorted(trace.probabilities.items()) for a, p in sorted(probs.items())]
        out.write(args.kernel_out, reports.to_csv(("year", "author", "probability"), rows))
    out.manifest(_manifest_for(args.out))


def cmd_fixture(args, out: Outputs) -> None:
    seed = fixture_mod.FIXTURE_SEED if args.seed is None else args.seed
    records, truth = fixture_mod.generate(seed)
    text = "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records)
    out.write(args.out, text)
    if args.truth:
        out.write(args.truth, json.dumps(truth, indent=2, sort_keys=True) + "\n")
    out.manifest(_manifest_for(args.out))


def _positive_int(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("global options")
    g.add_argument("--in", dest="inp", metavar="PATH", help="input corpus (CSV or JSONL); '-' for JSONL on stdin")
    g.add_argument("--format", choices=("csv", "jsonl"), help="input format (default: from file suffix)")
    g.add_argument("--out", metavar="PATH", help="output file; '-' or omitted for stdout")
    g.add_argument("--out-dir", metavar="DIR", help="output directory")
    g.add_argument("--seed", type=int, help="random seed")
    g.add_argument("--threads", type=_positive_int, default=1, help="worker threads for centrality")
    g.add_argument("--quiet", action="store_true", help="suppress warnings and progress messages")

    parser = argparse.ArgumentParser(prog=PROG, description="Temporal co-authorship network analytics.")
    parser.add_argument("--version", action="version", version=f"{PROG} {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    p = sub.add_parser("ingest", parents=[common], help="validate and normalize a corpus, dump as JSONL")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("growth", parents=[common], help="yearly growth table (CSV)")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("snapshot", parents=[common], help="export the cumulative graph at a year")
    p.add_argument("--year", type=int, required=True)
    p.add_argument("--dot", metavar="PATH", help="write DOT with edge weights")
    p.set_defaults(func=cmd_snapshot)

    p = sub.add_parser("centrality", parents=[common], help="centrality of every author at a year (CSV)")
    p.add_argument("--year", type=int, required=True)
    p.add_argument("--measure", type=_measures, default=MEASURES, help="degree|closeness|betweenness|all")
    p.set_defaults(func=cmd_centrality)

    p = sub.add_parser("evolve-report", parents=[common], help="author and link attachment tables (CSV)")
    p.add_argument("--tables", default="2,3", help="comma list of tables to emit: 1, 2, 3")
    p.set_defaults(func=cmd_evolve_report)

    p = sub.add_parser("correlate", parents=[common], help="Spearman rho of centrality vs next-year attachment")
    p.add_argument("--target", choices=("new-authors", "new-links", "coauthors"), default="new-authors")
    p.add_argument("--measures", type=_measures, default=MEASURES)
    p.add_argument("--exact", action="store_true", help="exact permutation p-values (n <= 12 only)")
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("mean-split", parents=[common], help="mean-threshold low/high comparison (CSV)")
    p.add_argument("--measures", type=_measures, default=MEASURES)
    p.set_defaults(func=cmd_mean_split)

    p = sub.add_parser("simulate", parents=[common], help="grow a synthetic corpus by preferential attachment")
    p.add_argument("--config", metavar="TOML", help="config file; keys mirror SimConfig fields")
    p.add_argument("--kernel-out", metavar="PATH", help="also write per-year kernel probabilities (CSV)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("fixture", parents=[common], help="regenerate the bundled synthetic corpus")
    p.add_argument("--truth", metavar="PATH", help="also write the generator's ground-truth counts (JSON)")
    p.set_defaults(func=cmd_fixture)

    return parser


def _show_warning(message, category, filename, lineno, file=None, line=None) -> None:
    print(f"{PROG}: warning: {message}", file=sys.stderr)


def _describe(exc: Exception) -> str:
    if isinstance(exc, OSError) and exc.strerror:
        return f"{exc.strerror}: {exc.filename}" if exc.filename else exc.strerror
    return str(exc)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Outputs(args)
    with warnings.catch_warnings():
        if args.quiet:
            warnings.simplefilter("ignore")
        else:
            warnings.simplefilter("always")
            warnings.showwarning = _show_warning
        try:
            args.func(args, out)
        except (CentrumError, OSError) as exc:
            print(f"{PROG}: error: {_describe(exc)}", file=sys.stderr)
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
