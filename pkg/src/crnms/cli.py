"""Command-line front end.

Exit codes: 0 success, 1 parse error, 2 network out of scope for the command,
3 witness search failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .classify import Verdict, classify, is_embedding_minimal, shape_of
from .enumerate import SHAPES, Bounds, Summary, enumerate_and_classify
from .network import Network, ParseError, parse_network
from .svg import box_diagram_svg
from .witness import CertificationError, WitnessError, certify, witness_for

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_SCOPE = 2
EXIT_WITNESS = 3


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(args: argparse.Namespace) -> Network:
    if args.net is not None and args.file is not None:
        raise _Exit(EXIT_PARSE, "give either a file or --net, not both")
    if args.net is not None:
        text = args.net
    elif args.file is not None:
        try:
            text = Path(args.file).read_text(encoding="utf-8")
        except OSError as exc:
            raise _Exit(EXIT_PARSE, f"cannot read {args.file}: {exc.strerror}") from None
    else:
        raise _Exit(EXIT_PARSE, "no network given (file argument or --net)")
    try:
        return parse_network(text)
    except ParseError as exc:
        raise _Exit(EXIT_PARSE, f"parse error: {exc}") from None
    except ValueError as exc:
        raise _Exit(EXIT_PARSE, f"invalid network: {exc}") from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _verdict_text(net: Network, v: Verdict) -> str:
    lines = [
        f"network:        {net}",
        f"case:           {v.case_label.value}",
        f"multistationary: {v.multistationary}",
        f"nondegenerately multistationary: {v.nondegenerately_multistationary}",
        f"multistable:    {v.multistable}",
        f"cap_pss:        {v.cap_pss}",
        f"cap_npss:       {v.cap_npss}",
        f"cap_stable:     {v.cap_stable}",
        "justification:",
    ]
    for j in v.justification:
        data = j.to_json()["data"]
        lines.append(f"  - {j.tag}: {json.dumps(data, sort_keys=True)}" if data else f"  - {j.tag}")
    return "\n".join(lines)


def cmd_classify(args: argparse.Namespace) -> int:
    net = _load(args)
    v = classify(net)
    if args.json:
        print(_dump(v.to_json()))
    else:
        print(_verdict_text(net, v))
    return EXIT_SCOPE if not v.in_scope else EXIT_OK


def _parse_roots(raw: Optional[str]) -> Optional[list[Fraction]]:
    if raw is None:
        return None
    try:
        return [Fraction(x.strip()) for x in raw.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError):
        raise _Exit(EXIT_PARSE, f"cannot parse roots {raw!r}") from None


def cmd_witness(args: argparse.Namespace) -> int:
    net = _load(args)
    roots = _parse_roots(args.roots)
    if shape_of(net) is None:
        raise _Exit(EXIT_SCOPE, "network is out of scope for witness construction")
    try:
        w = witness_for(net, args.count, roots)
        report = certify(net, w)
    except (WitnessError, CertificationError, ValueError) as exc:
        raise _Exit(EXIT_WITNESS, f"witness failure: {exc}") from None
    if args.json:
        out = w.to_json()
        out["certification"] = report.to_json()
        print(_dump(out))
        return EXIT_OK
    print(f"network: {net}")
    print("rates:   " + ", ".join(f"r{i}={k}" for i, k in enumerate(w.rates)))
    cls = w.class_json()
    if cls:
        print("class:   " + ", ".join(f"{k}={v}" for k, v in cls.items()))
    print(f"reduced: {w.poly} on {w.domain}")
    if w.continuum:
        print("every point of the class is a (degenerate) steady state")
    for i, st in enumerate(w.steady_states):
        flag = "nondegenerate" if st.nondegenerate else f"degenerate (multiplicity {st.multiplicity})"
        stab = {True: "stable", False: "unstable", None: "n/a"}[st.stable]
        pts = ", ".join(f"{name} in ({a}, {b})" for name, (a, b) in zip(net.species, st.point_intervals))
        print(f"  steady state {i}: {pts}; {flag}; {stab}")
    print(f"certified: {report.nondegenerate} nondegenerate, {report.stable} stable, checks {', '.join(report.checks)}")
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    b = Bounds(
        args.shape,
        args.max_molecularity,
        max_reactions=args.max_reactions,
        max_species=args.max_species,
    )
    summary = Summary()
    for net, v in enumerate_and_classify(b, workers=args.workers):
        summary.add(v)
        if args.json:
            print(json.dumps({"network": str(net), "verdict": v.to_json()}))
        elif args.verbose:
            print(f"{str(net):40s} {v.case_label.value:18s} npss={v.cap_npss}")
    if args.json:
        print(json.dumps({"summary": summary.to_json()}))
    else:
        s = summary.to_json()
        print(f"shape {args.shape}, molecularity <= {args.max_molecularity}")
        print(f"  networks:                        {s['total']}")
        print(f"  multistationary:                 {s['multistationary']}")
        print(f"  nondegenerately multistationary: {s['nondegenerately_multistationary']}")
        print(f"  multistable:                     {s['multistable']}")
        for case, n in s["by_case"].items():
            print(f"  {case:32s} {n}")
    return EXIT_OK


def cmd_minimal(args: argparse.Namespace) -> int:
    net = _load(args)
    if shape_of(net) is None:
        raise _Exit(EXIT_SCOPE, "network is out of scope")
    try:
        res = is_embedding_minimal(net)
    except ValueError as exc:
        raise _Exit(EXIT_SCOPE, str(exc)) from None
    if args.json:
        out = {"minimal": res.minimal, "closed_form": res.closed_form, "witness": None}
        if res.witness is not None:
            out["witness"] = {"removal": res.witness.describe(), "network": str(res.witness.network)}
        print(_dump(out))
    else:
        print(f"embedding-minimal: {res.minimal}")
        if res.witness is not None:
            print(f"smaller nondegenerately multistationary embedded network: {res.witness.network}")
            print(f"  obtained by: {res.witness.describe()}")
    return EXIT_OK


def cmd_boxdiagram(args: argparse.Namespace) -> int:
    net = _load(args)
    try:
        svg = box_diagram_svg(net)
    except ValueError as exc:
        raise _Exit(EXIT_SCOPE, str(exc)) from None
    Path(args.svg).write_text(svg, encoding="utf-8")
    print(f"wrote {args.svg}")
    return EXIT_OK


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", nargs="?", help="network file")
    p.add_argument("--net", help="inline network, reactions separated by ';'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crnms", description="Multistationarity of small mass-action networks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a network")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("witness", help="construct and certify rates and a class")
    _add_input(p)
    p.add_argument("--count", type=int, help="number of nondegenerate steady states wanted")
    p.add_argument("--roots", help="comma-separated positive rationals (one-species networks)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("enumerate", help="classify every network of a shape")
    p.add_argument("--shape", required=True, choices=SHAPES)
    p.add_argument("--max-molecularity", type=int, required=True)
    p.add_argument("--max-reactions", type=int, default=4, help="one-species shape only")
    p.add_argument("--max-species", type=int, default=3)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("minimal", help="test embedding-minimality")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_minimal)

    p = sub.add_parser("boxdiagram", help="draw the box diagram as SVG")
    _add_input(p)
    p.add_argument("--svg", required=True, help="output path")
    p.set_defaults(func=cmd_boxdiagram)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"crnms: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"crnms: {exc}", file=sys.stderr)
        return EXIT_PARSE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
