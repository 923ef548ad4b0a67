"""Command-line client for the service.

The CLI is a thin HTTP client: every subcommand builds a request, sends
it to the service and prints the JSON response.  By default requests run
against an in-process instance of the application (no server needed);
set ``--server URL`` or the RESOLVALG_SERVER environment variable to talk
to a running deployment instead.

Exit codes: 0 all checks pass, 1 any failure, 2 usage or parse errors,
3 inconclusive results only.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys
from typing import Optional

import httpx

ENV_SERVER = "RESOLVALG_SERVER"
ENV_CONFIG = "RESOLVALG_CONFIG"


def _post(path: str, payload: dict, server: Optional[str]) -> httpx.Response:
    server = server or os.environ.get(ENV_SERVER)
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            return client.post(path, json=payload)

    from .service import app

    async def run() -> httpx.Response:
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://resolvalg.local", timeout=600.0
        ) as client:
            return await client.post(path, json=payload)

    return asyncio.run(run())


def _load_config_overrides(path: Optional[str]) -> Optional[dict]:
    path = path or os.environ.get(ENV_CONFIG)
    if not path:
        return None
    with open(path) as handle:
        data = json.load(handle)
    keys = ("schedule", "K0", "tol_in", "tol_out", "budget", "degree_cap")
    return {k: data[k] for k in keys if k in data}


def _emit(payload: dict, as_json: bool = True) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _exit_code(payload: dict) -> int:
    summary = payload.get("summary")
    if summary is not None:
        return int(summary.get("exit_code", 0))
    verdict = payload.get("verdict")
    if verdict is not None:
        return 3 if verdict.get("status") == "inconclusive" else 0
    return 0


def _vectors(text: Optional[str]) -> list[str]:
    if not text:
        return []
    return [piece.strip() for piece in text.split(";") if piece.strip()]


def _rationals(text: Optional[str]) -> list[str]:
    if not text:
        return []
    return [piece.strip() for piece in text.split(",") if piece.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="resolvalg",
        description="Resolvent-algebra toolkit client",
    )
    parser.add_argument("--server", help="service URL (default: in-process)")
    parser.add_argument("--config", help="path to a JSON config file")
    parser.add_argument(
        "--json", action="store_true", default=True, help="JSON output (default on)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simplify", help="parse and rewrite an expression")
    p.add_argument("expr")
    p.add_argument("--dim", type=int)
    p.add_argument("--budget", type=int, default=400)
    p.add_argument("--degree-cap", type=int, default=6)

    p = sub.add_parser("check-relations", help="relation residual suite")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instances", type=int, default=20)
    p.add_argument("--schedule", help="comma-separated truncation levels")

    p = sub.add_parser("label", help="label operations")
    label_sub = p.add_subparsers(dest="label_command", required=True)
    for name in ("build", "extract", "roundtrip"):
        lp = label_sub.add_parser(name)
        lp.add_argument("--dim", type=int, required=True)
        lp.add_argument("--Y", required=True, help="semicolon-separated vectors")
        lp.add_argument("--phi", help="comma-separated functional values")
        if name != "build":
            lp.add_argument("--probes", help="semicolon-separated probe vectors")
        if name == "roundtrip":
            lp.add_argument("--tolerance", type=float, default=1e-6)

    p = sub.add_parser("chain", help="primitive-ideal chains")
    p.add_argument("--dim", type=int, default=4)
    p.add_argument(
        "--exhaustive", action="store_true", help="also search the coordinate universe"
    )

    p = sub.add_parser("ideal", help="ideal checks")
    ideal_sub = p.add_subparsers(dest="ideal_command", required=True)

    ip = ideal_sub.add_parser("member")
    ip.add_argument("--dim", type=int, required=True)
    ip.add_argument("--Y", required=True)
    ip.add_argument("--phi")
    ip.add_argument("--expr", required=True)

    ip = ideal_sub.add_parser("intersect")
    ip.add_argument("--dim", type=int, default=2)
    ip.add_argument("--seed", type=int, default=0)
    ip.add_argument("--cases", type=int, default=5)
    ip.add_argument(
        "--spec",
        action="append",
        help="lam;vector;rho triple, e.g. '1;p1;0' (repeatable)",
    )

    ip = ideal_sub.add_parser("maximal")
    ip.add_argument("--dim", type=int, default=2)
    ip.add_argument("--Z", help="semicolon-separated support vectors")
    ip.add_argument("--phi")
    ip.add_argument("--expr", required=True)

    ip = ideal_sub.add_parser("commutator")
    ip.add_argument("--dim", type=int, default=2)
    ip.add_argument("--seed", type=int, default=0)
    ip.add_argument("--samples", type=int, default=8)

    p = sub.add_parser("report-all", help="run the full battery")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8712)

    return parser


def _request(args) -> tuple[str, dict]:
    overrides = _load_config_overrides(args.config)

    def with_config(payload: dict) -> dict:
        if overrides:
            payload["config"] = overrides
        return payload

    if args.command == "simplify":
        return "/simplify", {
            "expr": args.expr,
            "dim": args.dim,
            "budget": args.budget,
            "degree_cap": args.degree_cap,
        }
    if args.command == "check-relations":
        schedule = (
            [int(x) for x in args.schedule.split(",")] if args.schedule else None
        )
        return "/relations/check", with_config(
            {
                "dim": args.dim,
                "seed": args.seed,
                "instances": args.instances,
                "schedule": schedule,
            }
        )
    if args.command == "label":
        label = {"vectors": _vectors(args.Y), "phi": _rationals(args.phi)}
        if args.label_command == "build":
            return "/labels/build", {"dim": args.dim, "label": label}
        payload = with_config({"dim": args.dim, "label": label})
        if args.probes:
            payload["probes"] = _vectors(args.probes)
        if args.label_command == "extract":
            return "/labels/extract", payload
        payload["tolerance"] = args.tolerance
        return "/labels/roundtrip", payload
    if args.command == "chain":
        exhaustive = [args.dim] if args.exhaustive and args.dim <= 4 else []
        return "/chain", with_config(
            {"dims": [args.dim], "exhaustive_dims": exhaustive}
        )
    if args.command == "ideal":
        if args.ideal_command == "member":
            return "/ideals/membership", with_config(
                {
                    "dim": args.dim,
                    "label": {"vectors": _vectors(args.Y), "phi": _rationals(args.phi)},
                    "expr": args.expr,
                }
            )
        if args.ideal_command == "intersect":
            payload = with_config(
                {"dim": args.dim, "seed": args.seed, "cases": args.cases}
            )
            if args.spec:
                specs = []
                for spec in args.spec:
                    pieces = spec.split(";")
                    if len(pieces) != 3:
                        raise ValueError(f"bad spec {spec!r}: want 'lam;vector;rho'")
                    specs.append(
                        {"lam": pieces[0], "vector": pieces[1], "rho": pieces[2]}
                    )
                payload["specs"] = specs
            return "/ideals/intersection", payload
        if args.ideal_command == "maximal":
            return "/ideals/maximal", {
                "dim": args.dim,
                "support": _vectors(args.Z),
                "phi": _rationals(args.phi),
                "expr": args.expr,
            }
        return "/ideals/commutator", with_config(
            {"dim": args.dim, "seed": args.seed, "samples": args.samples}
        )
    if args.command == "report-all":
        return "/reports/all", with_config({"dim": args.dim, "seed": args.seed})
    raise ValueError(f"unhandled command {args.command}")


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    try:
        path, payload = _request(args)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2

    response = _post(path, payload, args.server)
    if response.status_code == 400:
        detail = response.json().get("detail", "bad request")
        print(detail, file=sys.stderr)
        return 2
    if response.status_code >= 500:
        print(response.text, file=sys.stderr)
        return 1
    body = response.json()
    _emit(body)
    return _exit_code(body)


if __name__ == "__main__":
    sys.exit(main())
