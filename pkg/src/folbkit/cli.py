"""Command-line entry point: ``folbkit <subcommand> ...``.

Exit codes: 0 when a result was computed (whatever the verdict), 1 for usage
errors, 2 for data or resource errors. Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import families, recognizers
from . import predicates as P
from .errors import FolbkitError, UsageError
from .graph import Graph, dumps, load_graph, loads_many
from .metric import TernaryRelation, build_metric, check_axioms, parse_relation

COST_LIMIT = 10**10

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def _fmt_num(x):
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


class Out:
    """Record writer for the three output formats."""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def record(self, kind, subject, result, witness=(), cost=None, human=None, tsv=None):
        if self.fmt == "jsonl":
            rec = {
                "kind": kind,
                "subject": subject,
                "result": _fmt_num(result),
                "witness": list(witness) if isinstance(witness, (tuple, list)) else witness,
                "cost": cost,
            }
            line = json.dumps(rec, sort_keys=True)
        elif self.fmt == "tsv":
            w = ",".join(map(str, witness)) if isinstance(witness, (tuple, list)) else str(witness or "")
            line = tsv if tsv is not None else f"{subject}\t{_fmt_num(result)}\t{w}"
        else:
            line = human if human is not None else f"{subject}\t{_fmt_num(result)}"
        print(line, file=self.stream)


def _graph(source: str) -> Graph:
    return load_graph(source)


def _structure(source: str):
    """A graph (file or family spec) or a raw relation file."""
    p = Path(source)
    if p.exists():
        text = p.read_text()
        rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if rows and len(rows[0]) == 1:
            return parse_relation(text)
    return _graph(source)


# ---------------------------------------------------------------- commands


def cmd_eval(args, out: Out) -> int:
    from .folb import analyze, cost_estimate, evaluate, parse, sentence
    from .folb.prelude import env_prelude

    prelude = env_prelude()
    g = _graph(args.graph)
    text = args.formula
    if text.startswith("@"):
        f = sentence(prelude, text[1:])
    else:
        f = parse(text, prelude)
    env = {}
    for item in args.var or ():
        k, _, v = item.partition("=")
        if not v:
            raise UsageError(f"--var expects name=vertex, got {item!r}")
        env[k.strip()] = int(v)
    a = analyze(f)
    cost = cost_estimate(f, g.n)
    if cost > COST_LIMIT and not args.force:
        print(
            f"warning: predicted cost {cost:.3g} exceeds {COST_LIMIT:.0e} operations "
            f"(qr={a.qr}, width={a.width}, size={a.size}); evaluating anyway, --force silences this",
            file=sys.stderr,
        )
    r = evaluate(f, build_metric(g), env)
    wit = tuple(f"{k}={v}" for k, v in r.witness)
    subject = text if text.startswith("@") else (f.name or text)
    human = f"{'true' if r.value else 'false'}"
    if r.witness:
        human += "\twitness " + " ".join(wit)
    human += f"\tqr={a.qr} qr_b={a.qr_b} width={a.width} size={a.size} cost={cost}"
    out.record("eval", subject, r.value, wit, cost, human=human,
               tsv=f"{subject}\t{'true' if r.value else 'false'}\t{','.join(wit)}\t{cost}")
    return EXIT_OK


def _verdict_record(out: Out, cid: str, v, subject=None):
    label = v.label
    wt = v.witness_text()
    human = f"{cid}\t{label}" + (f"\t{wt}" if wt else "")
    out.record(
        "recognize",
        subject or cid,
        None if v.value is None else v.value,
        v.witness if v.value is False else (v.reason or ()),
        human=human,
        tsv=f"{cid}\t{label}\t{wt}",
    )


def cmd_recognize(args, out: Out) -> int:
    g = _graph(args.graph)
    if args.class_id == "interval_delta_slim":
        if args.delta is None:
            raise UsageError("interval_delta_slim needs --delta")
        v = recognizers.interval_delta_slim(g, args.delta)
    else:
        v = recognizers.recognize(args.class_id, g)
    _verdict_record(out, args.class_id, v)
    return EXIT_DATA if v.value is None else EXIT_OK


def cmd_classify(args, out: Out) -> int:
    g = _graph(args.graph)
    for cid, v in recognizers.classify_all(g).items():
        _verdict_record(out, cid, v)
    return EXIT_OK


def cmd_gen(args, out: Out) -> int:
    g = families.generate_from_spec(args.family)
    text = dumps(g, comment=str(g.name) if g.name else None)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_ef(args, out: Out) -> int:
    from .ef_game import RelStructure, play

    def load(src):
        s = _structure(src)
        if isinstance(s, TernaryRelation):
            return RelStructure(s.to_array(), src)
        return RelStructure.from_graph(s)

    a, b = load(args.a), load(args.b)
    res = play(a, b, args.r, budget=args.budget)
    strat = () if res.spoiler_strategy is None else ("AB"[res.spoiler_strategy[0]], res.spoiler_strategy[1])
    human = res.winner + (f"\tfirst move {strat[0]}:{strat[1]}" if strat else "")
    out.record("ef", f"{args.a} vs {args.b} r={args.r}", res.winner, strat, res.nodes, human=human)
    return EXIT_OK


def cmd_axioms(args, out: Out) -> int:
    s = _structure(args.source)
    arr = s.to_array() if isinstance(s, TernaryRelation) else build_metric(s).betweenness()
    bad = check_axioms(arr)
    if not bad:
        out.record("axioms", args.source, True, human="all axioms hold")
    for tag, w in bad:
        out.record("axioms", tag, False, w, human=f"{tag}\tviolated\t{','.join(map(str, w))}")
    return EXIT_OK


def cmd_hyperbolicity(args, out: Out) -> int:
    g = _graph(args.graph)
    m = build_metric(g)
    d = P.delta_star(m)
    w = tuple(int(i) for i in P.delta_star_witness(m))
    out.record("hyperbolicity", args.graph, d, w, human=f"delta*\t{_fmt_num(d)}\t{','.join(map(str, w))}")
    if args.delta is not None:
        v = recognizers.interval_delta_slim(m, args.delta)
        _verdict_record(out, f"interval_delta_slim({args.delta})", v)
    return EXIT_OK


def _corpus(path: Path) -> list[Graph]:
    files = sorted(path.iterdir()) if path.is_dir() else [path]
    out = []
    for f in files:
        if f.suffix not in (".graph", ".graphs", ".txt"):
            continue
        for i, g in enumerate(loads_many(f.read_text())):
            out.append(Graph(g.adj, f.stem if i == 0 else f"{f.stem}[{i}]"))
    return out


def cmd_audit(args, out: Out) -> int:
    p = Path(args.corpus)
    if not p.exists():
        raise FileNotFoundError(f"no such corpus: {p}")
    corpus = _corpus(p)
    bad = recognizers.implication_audit(corpus)
    for v in bad:
        subj = f"{v.graph}\t{v.premise}=>{v.conclusion}"
        out.record("audit", subj, False, v.witness, human=f"violation\t{subj}\t{','.join(map(str, v.witness))}")
    out.record("audit", args.corpus, not bad, (), len(corpus),
               human=f"{len(corpus)} graphs, {len(bad)} violations")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="folbkit", description="First-order logic with betweenness over finite graphs.")
    ap.add_argument("--format", choices=("human", "tsv", "jsonl"), default="human")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate a formula on a graph")
    p.add_argument("graph")
    p.add_argument("-f", "--formula", required=True, help="formula text or @sentence_name")
    p.add_argument("--var", action="append", help="free variable assignment name=vertex")
    p.add_argument("--force", action="store_true", help="suppress the cost warning")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("recognize", help="direct verdict for one class")
    p.add_argument("graph")
    p.add_argument("class_id")
    p.add_argument("--delta", type=Fraction, help="for interval_delta_slim")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("classify", help="verdicts for every registered class")
    p.add_argument("graph")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gen", help="write a family graph")
    p.add_argument("family")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("ef", help="solve an Ehrenfeucht-Fraisse game")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--budget", type=int, default=10**8)
    p.set_defaults(func=cmd_ef)

    p = sub.add_parser("axioms", help="check the interval axioms on a relation or graph")
    p.add_argument("source")
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("hyperbolicity", help="four-point hyperbolicity")
    p.add_argument("graph")
    p.add_argument("--delta", type=Fraction)
    p.set_defaults(func=cmd_hyperbolicity)

    p = sub.add_parser("audit", help="implication audit over a directory of graph files")
    p.add_argument("corpus")
    p.set_defaults(func=cmd_audit)
    return ap


def run(argv=None, stdout=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "r", 0) is not None and getattr(args, "r", 0) < 0:
        print("usage error: -r must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    out = Out(args.format, stdout)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FolbkitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
