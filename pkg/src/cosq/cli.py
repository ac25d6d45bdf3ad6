"""Command-line front end.

Thin client: every computation goes through the HTTP service layer,
in-process by default, or against a remote server via --server or the
HX_SERVER environment variable.  Exit codes: 0 ok/PASS, 1 property
false or FAIL, 2 usage error, 3 budget exhausted (uncertified).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import warnings

from .core import format_hypergraph
from .report import canonical_json, exit_code_for, make_report

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _usage_error(msg: str):
    print(f"error: {msg}", file=sys.stderr)
    raise SystemExit(EXIT_USAGE)


def _default_workers() -> int:
    raw = os.environ.get("HX_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        _usage_error(f"HX_THREADS must be an integer, got {raw!r}")
    if value < 1:
        _usage_error(f"HX_THREADS must be positive, got {value}")
    return value


class Client:
    """POSTs report requests either in-process or over the wire."""

    def __init__(self, server: str | None = None):
        server = server or os.environ.get("HX_SERVER") or None
        if server:
            import httpx

            self._client = httpx.Client(base_url=server, timeout=None)
        else:
            from .service import create_app

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from starlette.testclient import TestClient

                self._client = TestClient(create_app())

    def post(self, path: str, payload: dict) -> tuple[int, dict]:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            resp = self._client.post(path, json=payload)
        return resp.status_code, resp.json()


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        _usage_error(f"cannot read {path}: {exc.strerror}")


def _show(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def _human_lines(report: dict) -> list[str]:
    lines = [f"command: {report['command']}", f"status: {report['status']}"]
    for key, value in report["outputs"].items():
        if key == "hypergraph" or value is None:
            continue
        if key == "pass" and isinstance(value, bool):
            lines.append(f"result: {'PASS' if value else 'FAIL'}")
            continue
        lines.append(f"{key}: {_show(value)}")
    if report["timing"] is not None:
        lines.append(f"timing: {report['timing']}s")
    return lines


def _emit(report: dict, as_json: bool) -> int:
    if as_json:
        sys.stdout.write(canonical_json(report))
    else:
        print("\n".join(_human_lines(report)))
    return exit_code_for(report)


def _call(client: Client, path: str, payload: dict, as_json: bool) -> int:
    code, body = client.post(path, payload)
    if code != 200:
        detail = body.get("detail", body)
        print(f"error: {_show(detail)}", file=sys.stderr)
        return EXIT_USAGE
    return _emit(body, as_json)


def cmd_family(args) -> int:
    payload = {
        "type": args.type, "n": args.n, "k": args.k, "t": args.t, "s": args.s,
        "timing": args.timing,
    }
    client = Client(args.server)
    code, body = client.post("/v1/family", payload)
    if code != 200:
        print(f"error: {_show(body.get('detail', body))}", file=sys.stderr)
        return EXIT_USAGE
    text = body["outputs"]["hypergraph"]
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
        if args.json:
            return _emit(body, True)
        count = body["outputs"]["count"]
        print(f"wrote {count} edges to {args.out}")
        return exit_code_for(body)
    if args.json:
        return _emit(body, True)
    sys.stdout.write(text)
    return exit_code_for(body)


def cmd_co2(args) -> int:
    payload = {
        "hypergraph": _read_input(args.input), "ell": args.ell,
        "timing": args.timing,
    }
    return _call(Client(args.server), "/v1/co2", payload, args.json)


def cmd_check(args) -> int:
    payload = {
        "hypergraph": _read_input(args.input), "prop": args.prop,
        "t": args.t, "d": args.d, "s": args.s, "pattern": args.pattern,
        "timing": args.timing,
    }
    return _call(Client(args.server), "/v1/check", payload, args.json)


def cmd_bound(args) -> int:
    payload = {
        "kind": args.kind, "n": args.n, "k": args.k, "ell": args.ell,
        "m": args.m, "t": args.t, "s": args.s, "pi": args.pi,
        "hypergraph": _read_input(args.input) if args.input else None,
        "timing": args.timing,
    }
    return _call(Client(args.server), "/v1/bound", payload, args.json)


def _constraint_models(args) -> list[dict]:
    out: list[dict] = []
    for t in args.t_intersecting or ():
        out.append({"kind": "t-intersecting", "t": t})
    for d, t in args.d_wise or ():
        out.append({"kind": "d-wise", "d": d, "t": t})
    for s in args.matching_at_most or ():
        out.append({"kind": "matching-at-most", "s": s})
    for pattern, s in args.pattern_free or ():
        out.append({"kind": "pattern-free", "pattern": pattern, "s": s})
    return out


def cmd_search(args) -> int:
    payload = {
        "n": args.n,
        "k": args.k,
        "constraints": _constraint_models(args),
        "mode": args.mode,
        "node_budget": args.node_budget,
        "time_budget_s": args.time_budget,
        "workers": args.workers if args.workers is not None else _default_workers(),
        "optima_cap": args.optima_cap,
        "require_nontrivial": args.require_nontrivial,
        "allow_large": args.allow_large,
        "timing": args.timing,
    }
    return _call(Client(args.server), "/v1/search", payload, args.json)


def cmd_verify(args) -> int:
    payload = {
        "claim": args.claim,
        "n": args.n, "k": args.k, "t": args.t, "s": args.s,
        "search": args.search,
        "tol": args.tol,
        "node_budget": args.node_budget,
        "time_budget_s": args.time_budget,
        "workers": args.workers if args.workers is not None else _default_workers(),
        "timing": args.timing,
    }
    return _call(Client(args.server), "/v1/verify", payload, args.json)


def cmd_random(args) -> int:
    # corpus generation stays client-side: it is the one seeded operation
    from .corpus import random_hypergraph

    rng = random.Random(args.seed)
    try:
        h = random_hypergraph(rng, args.n, args.k, args.edges)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = format_hypergraph(h)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    if args.json:
        report = make_report(
            "random",
            {"seed": args.seed, "n": args.n, "k": args.k, "edges": args.edges},
            {"n": h.n, "k": h.k, "edges": h.edge_count(), "hypergraph": text},
        )
        return _emit(report, True)
    if args.out:
        print(f"wrote {h.edge_count()} edges to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def _add_common(sub, timing=True):
    sub.add_argument("--json", action="store_true", help="emit the JSON report")
    sub.add_argument("--server", default=None, help="remote service URL (default: in-process)")
    if timing:
        sub.add_argument("--timing", action="store_true", help="include wall time in the report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cosq",
        description="Codegree-squared toolkit for k-uniform hypergraphs.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("family", help="construct a named family")
    p.add_argument("--type", required=True,
                   help="star | b | hm | a | fano | complete | empty | hitting | hilton-milner | frequency")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int, help="intersection size (star/hm/a)")
    p.add_argument("--s", type=int, help="hitting-set size (b)")
    p.add_argument("--out", help="write the hypergraph here instead of stdout")
    _add_common(p)
    p.set_defaults(func=cmd_family)

    p = subs.add_parser("co2", help="codegree sums of a hypergraph file")
    p.add_argument("input", help="hypergraph file, or - for stdin")
    p.add_argument("--ell", type=int, help="subset size (default k-1)")
    _add_common(p)
    p.set_defaults(func=cmd_co2)

    p = subs.add_parser("check", help="test a property of a hypergraph file")
    p.add_argument("input", help="hypergraph file, or - for stdin")
    p.add_argument("--prop", required=True,
                   help="intersecting | d-wise | matching | covering | common-intersection | pattern-free | contains-pattern")
    p.add_argument("--t", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--pattern",
                   help="berge-path | berge-cycle | minimal-path | minimal-cycle | linear-path | linear-cycle")
    _add_common(p)
    p.set_defaults(func=cmd_check)

    p = subs.add_parser("bound", help="evaluate a named bound")
    p.add_argument("kind",
                   help="bey-rhs | check-bey | ekr-l2 | t-star-l2 | l1-ekr | l1-t-ekr | "
                        "l1-hm | l1-t-hm | l1-emc | l1-fk | sigma-upper | de-caen-pi | sigma-kt | report")
    p.add_argument("input", nargs="?", help="hypergraph file for check-bey/report")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--pi", help="rational density like 3/4")
    _add_common(p)
    p.set_defaults(func=cmd_bound)

    p = subs.add_parser("search", help="maximize co2 under constraints")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t-intersecting", type=int, action="append", metavar="T")
    p.add_argument("--d-wise", type=int, nargs=2, action="append", metavar=("D", "T"))
    p.add_argument("--matching-at-most", type=int, action="append", metavar="S")
    p.add_argument("--pattern-free", nargs=2, action="append", metavar=("PATTERN", "S"))
    p.add_argument("--mode", choices=("branch-and-bound", "brute-force"),
                   default="branch-and-bound")
    p.add_argument("--node-budget", type=int, default=10**9)
    p.add_argument("--time-budget", type=float, default=None, metavar="SECONDS")
    p.add_argument("--workers", type=int, default=None,
                   help="parallel workers (default: HX_THREADS or 1)")
    p.add_argument("--optima-cap", type=int, default=64)
    p.add_argument("--require-nontrivial", type=int, metavar="T",
                   help="keep only families with no common t-set")
    p.add_argument("--allow-large", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_search)

    p = subs.add_parser("verify", help="check a named extremal claim")
    p.add_argument("claim", help="ekr-l2 | min-3-path | min-3-cycle | lin-3-cycle | "
                                 "emc-ratio | hm-l2-conjecture | t-int-l2-conjecture")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--search", action="store_true",
                   help="run the exhaustive search side of the claim")
    p.add_argument("--tol", help="relative tolerance as a rational, default 3/20")
    p.add_argument("--node-budget", type=int, default=10**9)
    p.add_argument("--time-budget", type=float, default=None, metavar="SECONDS")
    p.add_argument("--workers", type=int, default=None,
                   help="parallel workers (default: HX_THREADS or 1)")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("random", help="generate a seeded random hypergraph")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--out", help="write the hypergraph here instead of stdout")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.set_defaults(func=cmd_random)

    p = subs.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def _postparse_convert(args) -> None:
    if getattr(args, "pattern_free", None):
        converted = []
        for pattern, s in args.pattern_free:
            try:
                converted.append((pattern, int(s)))
            except ValueError:
                _usage_error(f"pattern length must be an integer, got {s!r}")
        args.pattern_free = converted


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _postparse_convert(args)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    code = main()
    raise SystemExit(code)


if __name__ == "__main__":
    entry()
