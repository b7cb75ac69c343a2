"""Command-line front door: files in, reports and data files out.

JSON results go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 validation or data error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from .completion import enumerate_paths, harker_fill, incomplete_preference_scale
from .errors import DisconnectedError, PcmError
from .experiments import GeneratorSpec, axiom_suite, correlation_study
from .indices import report
from .pcm import Pcm, adjacency_of, connected_components, parse_pcm

OUTPUT_DIR_ENV = "PCMENTROPY_OUTDIR"


def _require_connected(pcm: Pcm) -> None:
    comps = connected_components(pcm.entries > 0)
    if len(comps) > 1:
        raise DisconnectedError([[pcm.labels[i] for i in c] for c in comps])


def _load_pcm(path: str, fmt: str | None, strict: bool) -> Pcm:
    p = Path(path)
    text = p.read_text()
    if fmt is None:
        fmt = "json" if p.suffix.lower() == ".json" else "csv"
    return parse_pcm(text, fmt, strict=strict)


def _gamma(value: str) -> float:
    g = float(value)
    if not math.isfinite(g):
        raise argparse.ArgumentTypeError("gamma must be finite")
    return g


def _add_input_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("pcm", help="path to a comparison matrix (CSV or JSON)")
    sub.add_argument("--format", choices=("csv", "json"), default=None,
                     help="input format (default: by file extension)")
    sub.add_argument("--strict", action="store_true",
                     help="require exact reciprocity instead of the rounded-data tolerance")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcmentropy",
        description="Inconsistency analysis of pairwise comparison matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evaluate", help="print the full inconsistency report as JSON")
    _add_input_args(p)
    p.add_argument("--gamma", type=_gamma, default=1.0)
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("fill", help="complete a matrix by geometric path averaging")
    _add_input_args(p)
    p.add_argument("--output", help="write the filled CSV here instead of stdout")
    p.set_defaults(func=_cmd_fill)

    p = sub.add_parser("rank", help="print the preference scale, best first")
    _add_input_args(p)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("paths", help="list all simple paths between two alternatives")
    _add_input_args(p)
    p.add_argument("source")
    p.add_argument("target")
    p.set_defaults(func=_cmd_paths)

    p = sub.add_parser("experiment", help="run a random-ensemble correlation study")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--alpha-max", type=float, default=4.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--gamma", type=_gamma, default=1.0)
    p.add_argument("--output", default=None,
                   help=f"output directory (default: ${OUTPUT_DIR_ENV} or the current directory)")
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("axioms", help="check the six index requirements on random samples")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_axioms)

    p = sub.add_parser("serve", help="start the elicitation HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--persist", default=None, help="append-only JSONL session log for crash recovery")
    p.set_defaults(func=_cmd_serve)
    return parser


def _cmd_evaluate(args) -> int:
    pcm = _load_pcm(args.pcm, args.format, args.strict)
    _require_connected(pcm)
    rep = report(pcm, args.gamma)
    print(json.dumps(rep.to_dict()))
    return 0


def _cmd_fill(args) -> int:
    pcm = _load_pcm(args.pcm, args.format, args.strict)
    _require_connected(pcm)
    filled = harker_fill(pcm)
    text = filled.to_csv()
    if args.output:
        Path(args.output).write_text(text)
        print(f"wrote {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_rank(args) -> int:
    pcm = _load_pcm(args.pcm, args.format, args.strict)
    _require_connected(pcm)
    scale = incomplete_preference_scale(pcm)
    order = sorted(range(pcm.n), key=lambda i: (-scale[i], i))
    print(", ".join(f"{pcm.labels[i]} {scale[i]:.4f}" for i in order))
    return 0


def _resolve_vertex(pcm: Pcm, token: str) -> int:
    if token in pcm.labels:
        return pcm.label_index(token)
    try:
        idx = int(token)
    except ValueError:
        raise PcmError(f"unknown alternative {token!r}") from None
    if not 0 <= idx < pcm.n:
        raise PcmError(f"index {idx} out of range for {pcm.n} alternatives")
    return idx


def _cmd_paths(args) -> int:
    pcm = _load_pcm(args.pcm, args.format, args.strict)
    _require_connected(pcm)
    src = _resolve_vertex(pcm, args.source)
    dst = _resolve_vertex(pcm, args.target)
    pset = enumerate_paths(adjacency_of(pcm), src, dst)
    for path in pset.paths:
        print("-".join(pcm.labels[v] for v in path))
    return 0


def _cmd_experiment(args) -> int:
    spec = GeneratorSpec(n=args.n, alpha_range=(0.0, args.alpha_max), seed=args.seed, count=args.count)
    result = correlation_study(spec, args.gamma)
    outdir = Path(args.output or os.environ.get(OUTPUT_DIR_ENV, "."))
    outdir.mkdir(parents=True, exist_ok=True)
    csv_path = outdir / "study.csv"
    json_path = outdir / "study.json"
    csv_path.write_text(result.to_csv())
    summary = {
        "n": args.n,
        "count": args.count,
        "alphaRange": [0.0, args.alpha_max],
        "seed": args.seed,
        "gamma": args.gamma,
        **result.summary(),
    }
    json_path.write_text(json.dumps(summary, indent=2) + "\n")
    print(json.dumps(summary))
    print(f"wrote {csv_path} and {json_path}", file=sys.stderr)
    return 0


def _cmd_axioms(args) -> int:
    results = axiom_suite(samples=args.samples, seed=args.seed)
    for r in results:
        print(f"requirement {r.number} ({r.name}): {'pass' if r.passed else 'FAIL'}")
        for w in r.witnesses:
            print(f"  witness: {w}", file=sys.stderr)
    return 0 if all(r.passed for r in results) else 1


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(persist_path=args.persist), host=args.host, port=args.port)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DisconnectedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PcmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
