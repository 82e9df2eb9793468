"""Command-line interface.

Subcommands: nstar (order-count table), exact (exhaustive batch-failure
signature), approx (Monte Carlo signature), signature (classic permutation
signature), reliability (mixture survival curve).  Signature artifacts are
JSON (or CSV) with an embedded run manifest; counts are string-encoded
because they exceed 64-bit JSON-safe integers.

Exit codes: 0 success, 2 usage, 3 input validation, 4 enumeration-cap
refusal.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
import time
from pathlib import Path

from . import __version__
from .combinatorics import n_star
from .engine import (
    DEFAULT_CLASSIC_CAP,
    DEFAULT_EXACT_CAP,
    SampledTSignature,
    TSignature,
    classic_signature,
    exact_tsignature,
)
from .errors import EnumerationCapError, GraphParseError, NetworkValidationError
from .graph import parse_network
from .reliability import binomial_model, poisson_model, survival_mixture
from .sampling import SamplingPlan, approx_tsignature

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_CAP = 4


def _read_graph(path: str):
    text = Path(path).read_text()
    digest = hashlib.sha256(text.encode()).hexdigest()
    return parse_network(text, name=Path(path).stem), digest


def _manifest(command: str, digest: str | None, args: argparse.Namespace, started: float) -> dict:
    flags = {
        key: getattr(args, key)
        for key in ("m_mode", "seed", "workers", "samples", "max_n", "process", "rate", "tmax", "steps")
        if hasattr(args, key)
    }
    return {
        "command": command,
        "input_sha256": digest,
        "flags": flags,
        "duration_seconds": time.time() - started,
        "version": __version__,
    }


def _emit(payload: dict, args: argparse.Namespace, csv_rows=None, csv_header=None) -> None:
    if args.output == "json":
        text = json.dumps(payload, indent=2, sort_keys=True)
    else:
        lines = [",".join(csv_header)]
        lines += [",".join(str(x) for x in row) for row in csv_rows]
        text = "\n".join(lines)
    if getattr(args, "out", None):
        Path(args.out).write_text(text + "\n")
    else:
        print(text)


def _signature_payload(sig: TSignature, manifest: dict) -> dict:
    payload = {
        "manifest": manifest,
        "n": sig.n,
        "mode": sig.mode,
        "m_mode": sig.m_mode,
        "counts": [str(c) for c in sig.counts],
        "total": str(sig.total),
        "values": list(sig.values),
    }
    if isinstance(sig, SampledTSignature):
        payload["std_error"] = list(sig.std_error)
    return payload


def _emit_signature(sig: TSignature, command: str, digest: str, args, started) -> None:
    payload = _signature_payload(sig, _manifest(command, digest, args, started))
    header = ["i", "count", "value"]
    rows = [[i + 1, sig.counts[i], sig.values[i]] for i in range(sig.n)]
    if isinstance(sig, SampledTSignature):
        header.append("std_error")
        for i, row in enumerate(rows):
            row.append(sig.std_error[i])
    _emit(payload, args, csv_rows=rows, csv_header=header)


def cmd_nstar(args) -> int:
    for n in range(2, args.n + 1):
        print(f"{n:>3} | {math.factorial(n):,} | {n_star(n):,}")
    return EXIT_OK


def cmd_exact(args) -> int:
    started = time.time()
    net, digest = _read_graph(args.graph)
    m_mode = "paper-greedy" if args.m_mode == "greedy" else "exact-subset"
    sig = exact_tsignature(net, m_mode=m_mode, max_links=args.max_n, workers=args.workers)
    _emit_signature(sig, "exact", digest, args, started)
    return EXIT_OK


def cmd_approx(args) -> int:
    started = time.time()
    net, digest = _read_graph(args.graph)
    m_mode = "paper-greedy" if args.m_mode == "greedy" else "exact-subset"
    plan = SamplingPlan(
        sample_count=args.samples, seed=args.seed, workers=args.workers, m_mode=m_mode
    )
    sig = approx_tsignature(net, plan)
    _emit_signature(sig, "approx", digest, args, started)
    return EXIT_OK


def cmd_signature(args) -> int:
    started = time.time()
    net, digest = _read_graph(args.graph)
    m_mode = "paper-greedy" if args.m_mode == "greedy" else "exact-subset"
    sig = classic_signature(net, m_mode=m_mode, max_links=args.max_n, workers=args.workers)
    _emit_signature(sig, "signature", digest, args, started)
    return EXIT_OK


def _load_signature_input(path: str, args):
    """Accept either a graph file (exact signature is computed) or a
    previously emitted signature artifact."""
    text = Path(path).read_text()
    digest = hashlib.sha256(text.encode()).hexdigest()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        data = json.loads(text)
        sig = TSignature(
            n=data["n"],
            counts=tuple(int(c) for c in data["counts"]),
            total=int(data["total"]),
            mode=data["mode"],
            m_mode=data["m_mode"],
        )
        return sig, digest
    net = parse_network(text, name=Path(path).stem)
    return exact_tsignature(net, workers=args.workers, max_links=args.max_n), digest


def cmd_reliability(args) -> int:
    started = time.time()
    sig, digest = _load_signature_input(args.input, args)
    if args.process == "poisson":
        model = poisson_model(args.rate)
    else:
        model = binomial_model(sig.n, args.rate)
    grid = [args.tmax * i / args.steps for i in range(args.steps + 1)]
    curve = survival_mixture(sig, model, grid)
    payload = {
        "manifest": _manifest("reliability", digest, args, started),
        "n": sig.n,
        "process": args.process,
        "rate": args.rate,
        "times": list(curve.times),
        "survival": list(curve.survival),
    }
    rows = list(zip(curve.times, curve.survival))
    _emit(payload, args, csv_rows=rows, csv_header=["t", "survival"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netsig",
        description="Batch-failure signatures and reliability of two-state networks",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nstar", help="print n! and the failure-order count for 2..N")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_nstar)

    def common(p, samples=False):
        p.add_argument("--m-mode", choices=("exact", "greedy"), default="exact",
                       help="fatal-block counting: exact minimum subset or the "
                            "two-terminal greedy path count")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--output", choices=("json", "csv"), default="json")
        p.add_argument("--out", help="write the artifact to a file instead of stdout")

    p = sub.add_parser("exact", help="exhaustive batch-failure signature")
    p.add_argument("graph")
    common(p)
    p.add_argument("--max-n", type=int, default=DEFAULT_EXACT_CAP,
                   help="refuse enumeration above this link count")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("approx", help="Monte Carlo batch-failure signature")
    p.add_argument("graph")
    common(p)
    p.add_argument("--samples", type=lambda s: int(float(s)), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("signature", help="classic single-failure signature")
    p.add_argument("graph")
    common(p)
    p.add_argument("--max-n", type=int, default=DEFAULT_CLASSIC_CAP)
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("reliability", help="survival curve from a signature mixture")
    p.add_argument("input", help="graph file or signature JSON artifact")
    p.add_argument("--process", choices=("poisson", "binomial"), default="poisson")
    p.add_argument("--rate", type=float, default=1.0)
    p.add_argument("--tmax", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-n", type=int, default=DEFAULT_EXACT_CAP)
    p.add_argument("--output", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_reliability)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "nstar" and args.n < 2:
        parser.error("N must be >= 2")
    try:
        return args.func(args)
    except (GraphParseError, NetworkValidationError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
