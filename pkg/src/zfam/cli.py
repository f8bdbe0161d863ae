"""Command line front end.

Every subcommand builds the same request model the HTTP service accepts,
runs it through the shared handlers (or POSTs it to a running service when
``--server`` is given), and renders the response in one of three formats.
Results go to stdout, diagnostics to stderr.

Exit codes: 0 on success, 1 when a budget ran out and the payload is partial
(the response flags this too), 2 on bad input.  A ``formula-only`` family
report exits 0: it is the documented degradation for types too long to
materialize, and no budget changes it.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import __version__, handlers
from .errors import CapacityError, UsageError
from .groups import is_group_token, load_group_file
from .models import (
    ComponentsRequest,
    ComponentsResponse,
    EnumerateRequest,
    EnumerateResponse,
    Envelope,
    FamilyRequest,
    FamilyResponse,
    FamilyRow,
    GroupInput,
    InvariantsRequest,
    InvariantsResponse,
    ReportRequest,
    ReportResponse,
    ZfamModel,
)

_RESPONSE_TYPES = {
    "enumerate": EnumerateResponse,
    "components": ComponentsResponse,
    "invariants": InvariantsResponse,
    "family": FamilyResponse,
    "report": ReportResponse,
}

_HANDLERS = {
    "enumerate": handlers.handle_enumerate,
    "components": handlers.handle_components,
    "invariants": handlers.handle_invariants,
    "family": handlers.handle_family,
    "report": handlers.handle_report,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zfam",
        description="Moduli component counts and branch-curve multiplet reports.",
    )
    parser.add_argument("--version", action="version", version=f"zfam {__version__}")
    parser.add_argument(
        "--server",
        metavar="URL",
        help="send the request to a running service instead of computing locally",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            choices=("json", "csv", "table"),
            default="table",
            help="output format (default: table)",
        )

    def add_budget(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--budget",
            type=int,
            metavar="N",
            help="enumeration work budget; default from ZF_BUDGET or 1000000",
        )

    def add_workers(p: argparse.ArgumentParser) -> None:
        p.add_argument("--workers", type=int, default=1, metavar="N", help="worker processes")

    p = sub.add_parser("enumerate", help="list spherical systems of one type")
    p.add_argument("--group", required=True, help="Z2^k token or a multiplication table file")
    p.add_argument("--tau", required=True, help="type shorthand, e.g. 2^6 or 2^4,4")
    p.add_argument("--mode", choices=("ordered", "multiset"), default="ordered")
    p.add_argument("--max-systems", type=int, metavar="N", help="truncate the listing after N")
    add_budget(p)
    add_common(p)

    p = sub.add_parser("components", help="count moduli components for a pair of types")
    p.add_argument("--group", required=True, help="Z2^k token or a multiplication table file")
    p.add_argument("--tau1", required=True)
    p.add_argument("--tau2", required=True)
    p.add_argument(
        "--count-ordered-pairs",
        action="store_true",
        help="keep (tau1, tau2) ordered even when the types match",
    )
    p.add_argument(
        "--identify-inner",
        action="store_true",
        help="also identify per-side inner conjugation (nonabelian groups)",
    )
    p.add_argument("--include-keys", action="store_true", help="list the class keys as hex")
    add_budget(p)
    add_workers(p)
    add_common(p)

    p = sub.add_parser("invariants", help="branch-curve combinatorics from K^2 and c2")
    p.add_argument("--ksq", type=int, required=True, help="self-intersection of the canonical class")
    p.add_argument("--c2", type=int, required=True, help="topological Euler number of the surface")
    p.add_argument("--m", type=int, default=2, help="pluricanonical level (default 2)")
    add_common(p)

    p = sub.add_parser("family", help="full multiplet report for one (k, l)")
    p.add_argument("--k", type=int, required=True, help="group rank, 2..16")
    p.add_argument("--l", type=int, required=True, help="second parameter, 2k < l <= 64")
    p.add_argument("--epsilon", help="override the bound exponent, e.g. 1/3")
    add_budget(p)
    add_workers(p)
    add_common(p)

    p = sub.add_parser("report", help="batch multiplet reports over a (k, l) rectangle")
    p.add_argument("--k-min", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--l-min", type=int, required=True)
    p.add_argument("--l-max", type=int, required=True)
    p.add_argument("--epsilon", help="override the bound exponent for every member")
    add_budget(p)
    add_workers(p)
    add_common(p)

    return parser


def _group_input(spec: str) -> GroupInput:
    """Tokens pass through; anything else is read locally as a table file."""
    if is_group_token(spec):
        return spec.strip()
    group = load_group_file(spec)
    return [list(row) for row in group.table]


def _build_request(args: argparse.Namespace) -> ZfamModel:
    if args.command == "enumerate":
        return EnumerateRequest(
            group=_group_input(args.group),
            tau=args.tau,
            mode=args.mode,
            budget=args.budget,
            max_systems=args.max_systems,
        )
    if args.command == "components":
        return ComponentsRequest(
            group=_group_input(args.group),
            tau1=args.tau1,
            tau2=args.tau2,
            budget=args.budget,
            workers=args.workers,
            count_ordered_pairs=args.count_ordered_pairs,
            identify_inner=args.identify_inner,
            include_keys=args.include_keys,
        )
    if args.command == "invariants":
        return InvariantsRequest(ksq=args.ksq, c2=args.c2, m=args.m)
    if args.command == "family":
        return FamilyRequest(
            k=args.k,
            l=args.l,
            epsilon=args.epsilon,
            budget=args.budget,
            workers=args.workers,
        )
    return ReportRequest(
        k_min=args.k_min,
        k_max=args.k_max,
        l_min=args.l_min,
        l_max=args.l_max,
        epsilon=args.epsilon,
        budget=args.budget,
        workers=args.workers,
    )


def _run_remote(server: str, command: str, request: ZfamModel) -> Envelope:
    import httpx

    url = f"{server.rstrip('/')}/v1/{command}"
    try:
        reply = httpx.post(url, json=request.model_dump(mode="json", by_alias=True), timeout=600.0)
    except httpx.HTTPError as exc:
        raise UsageError(f"cannot reach {url}: {exc}") from exc
    if reply.status_code != 200:
        try:
            body = reply.json()
        except ValueError:
            body = {"error": reply.text}
        message = body.get("error") or body.get("detail") or reply.text
        raise UsageError(f"server returned {reply.status_code}: {message}")
    return _RESPONSE_TYPES[command].model_validate(reply.json())


# ------------------------------------------------------------- formatting


def _cell(value: object) -> str:
    """One CSV/table cell; numbers and structures render as JSON does."""
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    return json.dumps(value, separators=(",", ":"))


def _flatten(data: dict, prefix: str = "") -> dict[str, object]:
    out: dict[str, object] = {}
    for key, value in data.items():
        name = f"{prefix}.{key}" if prefix else key
        if isinstance(value, dict):
            out.update(_flatten(value, name))
        else:
            out[name] = value
    return out


def _format_json(resp: Envelope) -> str:
    return resp.model_dump_json(by_alias=True, indent=2)


def _csv_rows(resp: Envelope) -> tuple[list[str], list[list[str]]]:
    if isinstance(resp, EnumerateResponse):
        header = ["index", "entries"]
        rows = [[str(i), " ".join(str(e) for e in sys_)] for i, sys_ in enumerate(resp.systems)]
        return header, rows
    if isinstance(resp, ReportResponse):
        flat_rows = [_flatten(row.model_dump(by_alias=True)) for row in resp.reports]
        header = list(flat_rows[0].keys()) if flat_rows else []
        return header, [[_cell(r[k]) for k in header] for r in flat_rows]
    flat = _flatten(resp.model_dump(by_alias=True))
    return list(flat.keys()), [[_cell(v) for v in flat.values()]]


def _format_csv(resp: Envelope) -> str:
    header, rows = _csv_rows(resp)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _kv_table(flat: dict[str, object]) -> str:
    width = max((len(k) for k in flat), default=0)
    return "\n".join(f"{k.ljust(width)}  {_cell(v)}" for k, v in flat.items())


def _format_table(resp: Envelope) -> str:
    if isinstance(resp, EnumerateResponse):
        meta = {
            "group": resp.group,
            "tau": resp.tau,
            "mode": resp.mode,
            "count": resp.count,
            "complete": resp.complete,
            "truncated": resp.truncated,
        }
        lines = [_kv_table(meta)]
        if resp.systems:
            lines.append("")
            lines.extend(" ".join(str(e) for e in sys_) for sys_ in resp.systems)
        return "\n".join(lines)
    if isinstance(resp, ReportResponse):
        blocks = []
        for row in resp.reports:
            flat = _flatten(row.model_dump(by_alias=True))
            blocks.append(f"[k={row.k} l={row.l}]\n{_kv_table(flat)}")
        return "\n\n".join(blocks) if blocks else "(no family members in range)"
    return _kv_table(_flatten(resp.model_dump(by_alias=True)))


_FORMATTERS = {"json": _format_json, "csv": _format_csv, "table": _format_table}


def _row_is_partial(row: FamilyRow) -> bool:
    return row.completeness == "budget-limited" or row.witness_status == "search budget exhausted"


def _exit_code(resp: Envelope) -> int:
    if isinstance(resp, EnumerateResponse):
        return 0 if resp.complete else 1
    if isinstance(resp, ComponentsResponse):
        return 0 if resp.completeness == "exact" else 1
    if isinstance(resp, FamilyResponse):
        return 1 if _row_is_partial(resp.report) else 0
    if isinstance(resp, ReportResponse):
        return 1 if any(_row_is_partial(row) for row in resp.reports) else 0
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        request = _build_request(args)
        if args.server:
            response = _run_remote(args.server, args.command, request)
        else:
            response = _HANDLERS[args.command](request)
    except (UsageError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # pydantic validation errors on request construction
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(_FORMATTERS[args.format](response))
    code = _exit_code(response)
    if code == 1:
        print("note: budget exhausted; results are partial", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
