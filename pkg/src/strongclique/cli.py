"""Command-line interface: ``strongclique COMMAND [options]``.

Exit status: 0 on success, 1 when a single-query command answers false (or a
campaign finds a mismatch), 2 on bad input, a violated precondition, or an
instance refused by the exact-fallback size cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
import time
from typing import Sequence, TextIO

from . import oracle, solvers
from .campaign import PRESETS, Record, jsonable, run_preset
from .corpus import random_cubic_graph, random_graph
from .errors import OracleCapExceeded, StrongCliqueError
from .generators import parse_dimacs_cnf, random_3sat, sat_gadget, sat_gadget_prime
from .graph import FAMILIES, Graph, format_edge_list, named, parse_edge_list
from .linegraph import RootGraphMap, recognize_line_graph
from .solvers import Problem, SolverConfig

FIELDS = ("instance", "problem", "answer", "method", "certificate", "seconds", "status", "note")


# -- record IO ------------------------------------------------------------------------

class RecordWriter:
    def __init__(self, out: TextIO, fmt: str):
        self.out = out
        self.fmt = fmt
        self._tsv = None
        if fmt == "tsv":
            self._tsv = csv.writer(out, delimiter="\t", lineterminator="\n", quoting=csv.QUOTE_MINIMAL)
        self._started = False

    def write(self, rec: Record) -> None:
        row = {
            "instance": rec.instance,
            "problem": rec.problem,
            "answer": rec.answer,
            "method": rec.method,
            "certificate": jsonable(rec.certificate),
            "seconds": round(rec.seconds, 6),
            "status": rec.status,
            "note": rec.note,
        }
        if self._tsv is not None and not self._started:
            self._tsv.writerow(FIELDS)
        self._started = True
        if self._tsv is None:
            self.out.write(json.dumps(row, separators=(",", ":")) + "\n")
        else:
            self._tsv.writerow([
                row["instance"], row["problem"],
                "" if rec.answer is None else str(rec.answer).lower(),
                row["method"], json.dumps(row["certificate"], separators=(",", ":")),
                f"{rec.seconds:.6f}", row["status"], row["note"],
            ])
        self.out.flush()


def parse_records(text: str, fmt: str) -> list[dict]:
    """Read back the output of :class:`RecordWriter`."""
    if fmt == "jsonl":
        return [json.loads(line) for line in text.splitlines() if line.strip()]
    rows = list(csv.reader(io.StringIO(text), delimiter="\t"))
    if not rows or tuple(rows[0]) != FIELDS:
        raise StrongCliqueError("missing or unexpected TSV header")
    out = []
    for row in rows[1:]:
        d = dict(zip(FIELDS, row))
        d["answer"] = None if d["answer"] == "" else d["answer"] == "true"
        d["certificate"] = json.loads(d["certificate"])
        d["seconds"] = float(d["seconds"])
        out.append(d)
    return out


# -- argument helpers ------------------------------------------------------------------

def parse_vertex_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise StrongCliqueError(f"bad vertex list {text!r}; expected comma-separated integers") from None


def parse_partition(text: str) -> list[tuple[int, ...]]:
    return [parse_vertex_list(part) for part in text.split("|")]


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(args: argparse.Namespace) -> tuple[str, Graph]:
    if not args.input:
        raise StrongCliqueError("--input is required")
    name = "stdin" if args.input == "-" else os.path.basename(args.input)
    return name, parse_edge_list(_read_text(args.input))


def _config(args: argparse.Namespace) -> SolverConfig:
    if args.oracle_cap < 1:
        raise StrongCliqueError("--oracle-cap must be at least 1")
    return SolverConfig(omega_cap=args.omega_cap, oracle_cap=args.oracle_cap)


def _verdict_record(name: str, problem: Problem, g: Graph, extra: object, config: SolverConfig) -> Record:
    start = time.perf_counter()
    try:
        v = solvers.solve(problem, g, extra, config)
    except OracleCapExceeded as exc:
        return Record(name, problem.value, None, "oracle", None, None, time.perf_counter() - start,
                      "skipped: cap", str(exc))
    return Record(name, problem.value, v.answer, v.method, None, v.certificate, time.perf_counter() - start,
                  note=v.kind or "")


def _single(out: RecordWriter, rec: Record) -> int:
    out.write(rec)
    if rec.status.startswith("skipped"):
        return 2
    return 0 if rec.answer else 1


# -- commands ----------------------------------------------------------------------------

def cmd_analyze(args, out: RecordWriter) -> int:
    name, g = _load_graph(args)
    config = _config(args)
    if args.problem:
        problem = Problem.parse(args.problem)
        extra = _extra_for(problem, args)
        return _single(out, _verdict_record(name, problem, g, extra, config))
    problems: list[tuple[Problem, object]] = [
        (Problem.EXISTENCE, None), (Problem.VERTEX_COVER, None),
        (Problem.EDGE_COVER, None), (Problem.PARTITION_EXISTENCE, None),
    ]
    if args.clique is not None:
        clique = parse_vertex_list(args.clique)
        if clique:
            problems.append((Problem.STRONG_CLIQUE, clique))
        problems.append((Problem.EXTENSION, clique))
    if args.partition is not None:
        problems.append((Problem.PARTITION, parse_partition(args.partition)))
    for problem, extra in problems:
        out.write(_verdict_record(name, problem, g, extra, config))
    return 0


def _extra_for(problem: Problem, args: argparse.Namespace) -> object:
    if problem in (Problem.STRONG_CLIQUE, Problem.EXTENSION):
        if args.clique is None:
            if problem is Problem.STRONG_CLIQUE:
                raise StrongCliqueError(f"{problem.value} needs --clique")
            return ()
        return parse_vertex_list(args.clique)
    if problem is Problem.PARTITION:
        if args.partition is None:
            raise StrongCliqueError("Partition needs --partition")
        return parse_partition(args.partition)
    return None


def cmd_check_strong(args, out: RecordWriter) -> int:
    name, g = _load_graph(args)
    if args.clique is None:
        raise StrongCliqueError("check-strong needs --clique")
    return _single(out, _verdict_record(name, Problem.STRONG_CLIQUE, g, parse_vertex_list(args.clique), _config(args)))


def cmd_extend(args, out: RecordWriter) -> int:
    name, g = _load_graph(args)
    clique = parse_vertex_list(args.clique or "")
    return _single(out, _verdict_record(name, Problem.EXTENSION, g, clique, _config(args)))


def cmd_localizable(args, out: RecordWriter) -> int:
    name, g = _load_graph(args)
    return _single(out, _verdict_record(name, Problem.PARTITION_EXISTENCE, g, None, _config(args)))


def cmd_classify_cubic(args, out: RecordWriter) -> int:
    name, g = _load_graph(args)
    start = time.perf_counter()
    cls = solvers.classify_cubic(g)
    witness = cls.witness
    if isinstance(witness, dict):
        witness = [witness[v] for v in range(g.n)]
    rec = Record(name, "ClassifyCubic", cls.localizable, "cubic_classification", None,
                 {"tag": str(cls), "witness": witness}, time.perf_counter() - start)
    return _single(out, rec)


def cmd_recognize_line(args, out: RecordWriter) -> int:
    name, g = _load_graph(args)
    start = time.perf_counter()
    found = recognize_line_graph(g)
    took = time.perf_counter() - start
    if isinstance(found, RootGraphMap):
        cert = {"root_n": found.root.n, "to_edge": [list(e) for e in found.to_edge]}
        rec = Record(name, "RecognizeLine", True, "linegraph", None, cert, took)
    else:
        rec = Record(name, "RecognizeLine", False, "linegraph", None, {"obstruction": list(found.obstruction)}, took)
    return _single(out, rec)


def cmd_oracle(args, out: RecordWriter) -> int:
    name, g = _load_graph(args)
    config = _config(args)
    if g.n > config.oracle_cap:
        raise OracleCapExceeded(g.n, config.oracle_cap)
    start = time.perf_counter()
    rep = oracle.invariants_report(g)
    strong = oracle.strong_cliques_all(g)
    ok, partition = oracle.localizable_exact(g)
    cert = {
        "alpha": rep.alpha, "idom": rep.idom, "theta": rep.theta, "omega": rep.omega,
        "well_covered": rep.well_covered, "semi_perfect": rep.semi_perfect,
        "maximal_cliques": oracle.maximal_cliques(g), "strong_cliques": strong, "partition": partition,
    }
    out.write(Record(name, "Oracle", ok, "oracle", None, cert, time.perf_counter() - start))
    return 0


def cmd_gen(args, out: RecordWriter) -> int:
    rng = random.Random(args.seed)
    fam = args.family
    if fam == "random":
        g = random_graph(args.n, args.p, rng)
    elif fam == "cubic":
        g = random_cubic_graph(args.n, rng)
    elif fam == "sat":
        phi = random_3sat(args.n, args.m, args.seed, tuple(args.enforce.split(",")))
        sys.stdout.write(phi.to_dimacs())
        return 0
    else:
        g = named(fam, *args.params)
    _emit_graph(g, args.output)
    return 0


def _emit_graph(g: Graph, path: str | None) -> None:
    text = format_edge_list(g)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_reduce_sat(args, out: RecordWriter) -> int:
    if not args.input:
        raise StrongCliqueError("--input is required")
    phi = parse_dimacs_cnf(_read_text(args.input))
    gad = sat_gadget_prime(phi) if args.variant == "gprime" else sat_gadget(phi)
    _emit_graph(gad.graph, args.output)
    if args.labels:
        with open(args.labels, "w", encoding="utf-8") as fh:
            fh.write("\n".join(gad.label_lines()) + "\n")
    return 0


def cmd_verify_campaign(args, out: RecordWriter) -> int:
    bad = 0
    for rec in run_preset(args.preset, args.seed, _config(args), quick=args.quick):
        if rec.status == "mismatch":
            bad += 1
        out.write(rec)
    return 1 if bad else 0


# -- parser -------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="graph edge-list file (or CNF for reduce-sat); '-' reads stdin")
    common.add_argument("--format", choices=("tsv", "jsonl"), default="tsv", help="record format (default tsv)")
    common.add_argument("--oracle-cap", type=int, default=20, help="largest n for exact fallback (default 20)")
    common.add_argument("--omega-cap", type=int, default=6, help="clique-number cap for bounded-omega routing")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="strongclique", description="Strong clique problems on graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common],
                       help="existence, covers and partition existence (plus --clique/--partition queries)")
    p.add_argument("--problem", help="answer only this problem (exit 1 if false)")
    p.add_argument("--clique", help='comma-separated vertices, e.g. "0,1"')
    p.add_argument("--partition", help='parts separated by |, e.g. "0,1|2,3"')
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check-strong", parents=[common], help="is --clique a strong clique (exit 1 if not)")
    p.add_argument("--clique")
    p.set_defaults(func=cmd_check_strong)

    p = sub.add_parser("extend", parents=[common], help="extend --clique to a strong clique (exit 1 if impossible)")
    p.add_argument("--clique")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("localizable", parents=[common], help="partition into strong cliques (exit 1 if none)")
    p.set_defaults(func=cmd_localizable)

    p = sub.add_parser("classify-cubic", parents=[common], help="family of a connected cubic graph")
    p.set_defaults(func=cmd_classify_cubic)

    p = sub.add_parser("recognize-line", parents=[common], help="root graph, or an obstruction (exit 1)")
    p.set_defaults(func=cmd_recognize_line)

    p = sub.add_parser("oracle", parents=[common], help="exact invariants and strong cliques")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", parents=[common], help="write a graph (edge list) or random 3-CNF (DIMACS)")
    p.add_argument("family", choices=sorted(set(FAMILIES) | {"random", "cubic", "sat"}))
    p.add_argument("params", nargs="*", type=int, help="family parameters, e.g. 'F_n 3'")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--m", type=int, default=8, help="clause count for sat")
    p.add_argument("--p", type=float, default=0.5, help="edge probability for random")
    p.add_argument("--enforce", default="i", help="assumptions for sat, e.g. i,ii,iii")
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce-sat", parents=[common], help="gadget graph from a DIMACS 3-CNF")
    p.add_argument("--variant", choices=("g", "gprime"), default="g")
    p.add_argument("--output")
    p.add_argument("--labels", help="write 'vertex_id role name' lines here")
    p.set_defaults(func=cmd_reduce_sat)

    p = sub.add_parser("verify-campaign", parents=[common], help="compare solvers with the oracle over a preset")
    p.add_argument("--preset", choices=sorted(PRESETS), required=True)
    p.add_argument("--quick", action="store_true", help="smaller corpus")
    p.set_defaults(func=cmd_verify_campaign)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = RecordWriter(sys.stdout, args.format)
    try:
        return args.func(args, out)
    except (StrongCliqueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
