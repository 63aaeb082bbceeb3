"""Thin command-line client for the classification service.

Every subcommand is one request against the HTTP API; without ``--server``
the app is mounted in-process over an ASGI transport, so the CLI works
offline with identical behaviour.  JSON output is canonical (sorted keys),
making repeated invocations byte-identical.

Exit codes: 0 success, 1 domain error (structured error object on
stdout), 2 usage error.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from typing import List, Optional, Tuple

import httpx


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starq",
        description="Classify bounded highest weight modules over q(n).",
    )
    parser.add_argument("--server", help="base URL of a running service; "
                        "defaults to an in-process instance")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="boundedness verdict for a weight")
    p.add_argument("weight")

    p = sub.add_parser("orbit", help="orbit graph under the star action")
    p.add_argument("weight")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--dot", action="store_true")

    p = sub.add_parser("enumerate", help="bounded weights below a maximal one")
    p.add_argument("weight")

    p = sub.add_parser("family", help="families anchored at a weight")
    p.add_argument("weight")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--gl", action="store_true", help="use the shifted action")

    p = sub.add_parser("degree", help="degree of a type-(n-1) bounded weight")
    p.add_argument("weight")

    p = sub.add_parser("jh", help="decomposition table rows for the axis family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--table", action="store_true")

    p = sub.add_parser("fock-check", help="run oracle checks")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--samples", type=int, default=40)
    p.add_argument("--window", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--checks", default=None,
                   help="comma-separated: degree,bracket,odd_symmetry,primitive")

    p = sub.add_parser("selftest", help="run the published-values suite")
    p.add_argument("--criteria", default=None, help="comma-separated numbers")

    return parser


def _request(args) -> Tuple[str, dict, dict]:
    """Map parsed arguments to (path, body, query)."""
    if args.command == "classify":
        return "/classify", {"weight": args.weight}, {}
    if args.command == "orbit":
        query = {"format": "dot"} if args.dot else {}
        return "/orbit", {"weight": args.weight, "cap": args.cap}, query
    if args.command == "enumerate":
        return "/enumerate", {"weight": args.weight}, {}
    if args.command == "family":
        path = "/gl/families" if args.gl else "/families"
        query = {"format": "dot"} if args.dot else {}
        return path, {"weight": args.weight}, query
    if args.command == "degree":
        return "/degree", {"weight": args.weight}, {}
    if args.command == "jh":
        query = {"format": "table"} if args.table else {}
        return "/jh", {"n": args.n, "c": args.c, "k": args.k}, query
    if args.command == "fock-check":
        checks = args.checks.split(",") if args.checks else None
        return "/fock/check", {
            "n": args.n, "samples": args.samples,
            "window": args.window, "seed": args.seed, "checks": checks,
        }, {}
    if args.command == "selftest":
        criteria = None
        if args.criteria:
            try:
                criteria = [int(x) for x in args.criteria.split(",")]
            except ValueError:
                raise UsageError(f"bad criteria list: {args.criteria!r}")
        return "/selftest", {"criteria": criteria}, {}
    raise AssertionError(args.command)


async def _post(server: Optional[str], path: str, body: dict, query: dict):
    if server:
        transport = None
        base = server
    else:
        from .service import create_app

        transport = httpx.ASGITransport(app=create_app())
        base = "http://starq.internal"
    async with httpx.AsyncClient(transport=transport, base_url=base,
                                 timeout=600.0) as client:
        resp = await client.post(path, json=body, params=query)
    return resp


def _print_selftest(payload: dict) -> int:
    for result in payload["results"]:
        mark = "PASS" if result["status"] == "pass" else "FAIL"
        line = (f"criterion {result['criterion']:>2} {mark}  "
                f"{result['title']} ({result['seconds']}s)")
        if result["status"] != "pass":
            line += f" -- {result['detail']}"
        print(line)
    return 0 if payload["passed"] else 1


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        path, body, query = _request(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    resp = asyncio.run(_post(args.server, path, body, query))
    content_type = resp.headers.get("content-type", "")
    if resp.status_code != 200:
        try:
            payload = resp.json()
        except ValueError:
            payload = {"error": {"code": "http_error", "message": resp.text}}
        print(json.dumps(payload, sort_keys=True, indent=2))
        return 1
    if content_type.startswith("text/plain"):
        sys.stdout.write(resp.text)
        return 0
    payload = resp.json()
    if args.command == "selftest":
        return _print_selftest(payload)
    print(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))
    return 0


def entry() -> None:  # console-script hook
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
