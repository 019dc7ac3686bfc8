"""Command-line front end.

Machine-readable JSON goes to stdout (one object per line); short human
summaries go to stderr.  Exit codes: 0 success, 1 verification or
identity failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import (
    Tournament,
    format_tourn_v1,
    parse_tourn_v1,
    random_tournament,
    transitive,
)
from .comodular import comodular_index, delta_decomposition
from .inversion import certificate_to_json, synthesize_certificate, verify_certificate
from .modular import minimal_comodules, nontrivial_modules, transitive_components
from .oracle import (
    DELTA_SEARCH_BOUND,
    PACKING_BOUND,
    SWEEP_BOUND,
    brute_Delta,
    brute_delta,
    brute_modules,
    report_to_json,
    sweep_verify,
)

USAGE_ERROR = 2
CHECK_ERROR = 1


def _load(path: str) -> Tournament:
    try:
        with open(path, "r", encoding="ascii") as fh:
            return parse_tourn_v1(fh.read())
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _ceil_half(x: int) -> int:
    return (x + 1) // 2


def cmd_analyze(args) -> int:
    T = _load(args.file)
    index = comodular_index(T)
    indec = index == 0
    record = {
        "n": T.n,
        "indecomposable": indec,
        "Delta": index,
        "delta": (None if T.n < 5 else _ceil_half(index)),
        "mc": [list(c.members) for c in minimal_comodules(T)],
        "components": [list(b) for b in transitive_components(T).blocks],
        "delta_decomposition": (
            [] if indec else [list(p.members) for p in delta_decomposition(T).parts]
        ),
    }
    print(json.dumps(record, separators=(", ", ": ")))
    print(
        f"n={T.n} Delta={index} delta={record['delta']} "
        f"{'indecomposable' if indec else 'decomposable'}",
        file=sys.stderr,
    )
    return 0


def cmd_certify(args) -> int:
    T = _load(args.file)
    if T.n < 5:
        print("error: certification needs at least five vertices", file=sys.stderr)
        return USAGE_ERROR
    cert = synthesize_certificate(T)
    if not verify_certificate(T, cert):
        print("error: certificate failed self-verification", file=sys.stderr)
        return CHECK_ERROR
    print(certificate_to_json(cert))
    print(f"{len(cert.arcs)} inversion(s), trace {list(cert.trace)}", file=sys.stderr)
    return 0


def cmd_oracle(args) -> int:
    T = _load(args.file)
    try:
        if args.check == "Delta":
            if T.n > PACKING_BOUND:
                raise ValueError(f"Delta oracle limited to n <= {PACKING_BOUND}")
            guided = comodular_index(T)
            brute = brute_Delta(T)
        elif args.check == "delta":
            if T.n < 5 or T.n > DELTA_SEARCH_BOUND:
                raise ValueError(
                    f"delta oracle limited to 5 <= n <= {DELTA_SEARCH_BOUND}"
                )
            guided = _ceil_half(comodular_index(T))
            brute = brute_delta(T)
        else:
            guided = [list(s) for s in nontrivial_modules(T)]
            brute = [list(s) for s in brute_modules(T) if 2 <= len(s) < T.n]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    agree = guided == brute
    print(
        json.dumps(
            {"check": args.check, "guided": guided, "brute": brute, "agree": agree},
            separators=(", ", ": "),
        )
    )
    print(f"{args.check}: {'pass' if agree else 'FAIL'}", file=sys.stderr)
    return 0 if agree else CHECK_ERROR


def _expected_max_index(n: int) -> int:
    return (n + 2) // 2  # ceil((n+1)/2)


def _expected_max_inversions(n: int) -> int:
    return -(-(n + 1) // 4)  # ceil((n+1)/4)


def cmd_sweep(args) -> int:
    if args.max_n > SWEEP_BOUND:
        print(f"error: sweeps limited to max-n <= {SWEEP_BOUND}", file=sys.stderr)
        return USAGE_ERROR
    reports = sweep_verify(args.max_n, jobs=args.jobs)
    failed = False
    for rep in reports:
        print(report_to_json(rep))
        bad = bool(rep.violations)
        bad = bad or rep.max_Delta != _expected_max_index(rep.n)
        if rep.n >= 5:
            bad = bad or rep.max_delta != _expected_max_inversions(rep.n)
        failed = failed or bad
        print(
            f"n={rep.n}: {rep.class_count} classes, max Delta {rep.max_Delta}, "
            f"max delta {rep.max_delta}, {len(rep.violations)} violation(s)",
            file=sys.stderr,
        )
    return CHECK_ERROR if failed else 0


def cmd_gen(args) -> int:
    if args.n < 1:
        print("error: need at least one vertex", file=sys.stderr)
        return USAGE_ERROR
    if args.type == "transitive":
        T = transitive(args.n)
    else:
        T = random_tournament(args.n, args.seed)
    try:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(format_tourn_v1(T))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    print(f"wrote {args.output}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tourmod",
        description="Tournament modular structure: indices, decompositions, "
        "inversion certificates, oracle cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="structural summary of a tournament file")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("certify", help="minimum inversion certificate")
    p.add_argument("file")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("oracle", help="cross-check guided against brute force")
    p.add_argument("file")
    p.add_argument("--check", required=True, choices=["delta", "Delta", "modules"])
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep", help="verify all classes up to a size")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("gen", help="write a tournament file")
    p.add_argument("--type", required=True, choices=["transitive", "random"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
