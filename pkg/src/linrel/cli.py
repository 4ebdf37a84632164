"""Command-line interface: ``linrel <subcommand> ...``.

Exit codes: 0 success, 1 negative answer (not equivalent, disagreement,
failed check), 2 usage error, 3 malformed input, 4 size guard exceeded,
5 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from . import classification as cl
from . import relation as rel
from .dynamics import EndoObject, leray
from .relation import DocumentError, RelationError
from .spider import verify_appendix
from .subspace import GuardError
from .szymczak import oracle_szym_equiv, szym_equiv, szym_label

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_GUARD = 4
EXIT_IO = 5


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        cl._write(text, out)


def _load(path: str) -> EndoObject:
    try:
        with open(path, encoding="utf-8") as fh:
            phi = rel.loads(fh.read())
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return EndoObject(phi)
    except RelationError as exc:
        raise DocumentError(f"{path}: {exc}") from exc


def cmd_enumerate(args) -> int:
    docs = [rel.to_document(a) for a in cl.enumerate_relations(args.p, args.dim)]
    if args.format == "json":
        text = json.dumps({"p": args.p, "dim": args.dim, "count": len(docs), "relations": docs}) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "generators"])
        for i, d in enumerate(docs):
            w.writerow([i, json.dumps(d["generators"], separators=(",", ":"))])
        text = buf.getvalue()
    _emit(text, args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    table = cl.classify(
        args.p, args.dim,
        include_zero_object=args.include_zero_object,
        workers=args.parallel,
        cache=args.cache,
    )
    render = {"json": cl.table_json, "csv": cl.table_csv, "dot": cl.table_dot}[args.format]
    _emit(render(table), args.out)
    return EXIT_OK


def cmd_leray(args) -> int:
    form = leray(_load(args.input))
    _emit(json.dumps(form.to_document()) + "\n", args.out)
    return EXIT_OK


def cmd_equiv(args) -> int:
    a, b = _load(args.a), _load(args.b)
    if a.p != b.p:
        raise DocumentError(f"relations over GF({int(a.p)}) and GF({int(b.p)})")
    print(json.dumps(szym_label(a).to_document()))
    print(json.dumps(szym_label(b).to_document()))
    same = szym_equiv(a, b)
    print("equivalent" if same else "not equivalent")
    return EXIT_OK if same else EXIT_NEGATIVE


def cmd_oracle_check(args) -> int:
    objs = [EndoObject(a) for a in cl.enumerate_relations(args.p, args.dim)]
    if args.samples is None:
        pairs = [(i, j) for i in range(len(objs)) for j in range(len(objs))]
    else:
        rng = random.Random(args.seed)
        pairs = [(rng.randrange(len(objs)), rng.randrange(len(objs))) for _ in range(args.samples)]
    labels = [szym_label(o) for o in objs]
    disagreements = []
    for i, j in pairs:
        if oracle_szym_equiv(objs[i], objs[j]) != (labels[i] == labels[j]):
            disagreements.append([rel.to_document(objs[i].alpha), rel.to_document(objs[j].alpha)])
    report = {
        "p": args.p,
        "dim": args.dim,
        "pairs": len(pairs),
        "disagreements": len(disagreements),
        "examples": disagreements[:5],
    }
    print(json.dumps(report))
    return EXIT_OK if not disagreements else EXIT_NEGATIVE


def cmd_spider(args) -> int:
    try:
        report = verify_appendix(args.orbits, args.max_power)
    except ValueError as exc:
        if isinstance(exc, GuardError):
            raise
        raise DocumentError(str(exc)) from exc
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return EXIT_OK if report["passed"] else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linrel",
        description="Linear relations over GF(p): Leray forms and Szymczak classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list every endorelation on GF(p)^N")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="group all endorelations on GF(p)^N by Szymczak class")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv", "dot"], default="json")
    p.add_argument("--out")
    p.add_argument("--parallel", type=int, default=1, metavar="W")
    p.add_argument("--include-zero-object", action="store_true")
    p.add_argument("--cache", help="JSON file caching labels between runs")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("leray", help="Leray form of a relation document")
    p.add_argument("--input", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_leray)

    p = sub.add_parser("equiv", help="decide Szymczak equivalence (exit 0 iff equivalent)")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("oracle-check", help="compare the brute-force oracle with the decider")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("spider", help="verify the truncated spider relation")
    p.add_argument("--orbits", type=int, required=True)
    p.add_argument("--max-power", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_spider)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except cl.ExportError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (DocumentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
