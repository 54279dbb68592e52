"""Command-line client for the indcomp service.

Every subcommand talks HTTP to the service app: in-process (ASGI) by
default, or to a running server via --server / INDCOMP_SERVER.  Exit codes:
0 all checks pass, 1 check failure (or a non-ternary classify), 2 usage or
parse error.
"""

from __future__ import annotations

import asyncio
import json
import pathlib
import sys
from typing import Any

import click
import httpx

from .formats import encode_graph6, parse_edge_list
from .graphs import GraphError

EXIT_OK = 0
EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2


def _request(server: str | None, method: str, path: str, **kwargs) -> httpx.Response:
    async def go() -> httpx.Response:
        if server:
            async with httpx.AsyncClient(base_url=server, timeout=None) as client:
                return await client.request(method, path, **kwargs)
        from .service import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://indcomp.internal", timeout=None
        ) as client:
            return await client.request(method, path, **kwargs)

    try:
        return asyncio.run(go())
    except httpx.HTTPError as exc:
        click.echo(f"error: cannot reach service: {exc}", err=True)
        sys.exit(EXIT_USAGE)


def _payload(response: httpx.Response) -> Any:
    if response.status_code >= 400:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        click.echo(f"error: {detail}", err=True)
        sys.exit(EXIT_USAGE)
    return response.json()


def _graph6_inputs(argument: str) -> list[str]:
    """Resolve a CLI graph argument: a literal graph6 string or a file.

    Files hold one graph6 line each, or a single graph in the edge-list
    format (first line 'n m'), which is converted client-side.
    """
    path = pathlib.Path(argument)
    if not path.exists():
        return [argument]
    text = path.read_text()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if lines and len(lines[0].split()) == 2 and all(p.isdigit() for p in lines[0].split()):
        try:
            return [encode_graph6(parse_edge_list(text))]
        except GraphError as exc:
            click.echo(f"error: {argument}: {exc}", err=True)
            sys.exit(EXIT_USAGE)
    return lines


@click.group()
@click.option(
    "--server",
    envvar="INDCOMP_SERVER",
    default=None,
    metavar="URL",
    help="Base URL of a running indcomp service; defaults to in-process.",
)
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Homotopy types of independence complexes of ternary graphs."""
    ctx.obj = server


def _emit(records: list[dict], fmt: str, csv_header: str, csv_row) -> None:
    if fmt == "json":
        for record in records:
            click.echo(json.dumps(record, sort_keys=True))
    else:
        click.echo(csv_header)
        for record in records:
            click.echo(csv_row(record))


@main.command()
@click.argument("graph")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.pass_obj
def homology(server: str | None, graph: str, fmt: str) -> None:
    """Reduced homology of the independence complex of GRAPH (g6 or file)."""
    records = [
        _payload(_request(server, "POST", "/homology", json={"graph6": g6}))
        for g6 in _graph6_inputs(graph)
    ]
    _emit(
        records,
        fmt,
        "graph6,n,betti,total_betti,euler,has_torsion,homology_class",
        lambda r: (
            f"{r['graph6']},{r['n']},{';'.join(map(str, r['betti']))},"
            f"{r['total_betti']},{r['euler']},{int(r['has_torsion'])},{r['homology_class']}"
        ),
    )


@main.command()
@click.argument("graph")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.pass_obj
def classify(server: str | None, graph: str, fmt: str) -> None:
    """Homotopy class (contractible or a sphere) of I(GRAPH) for ternary GRAPH."""
    records = [
        _payload(_request(server, "POST", "/classify", json={"graph6": g6}))
        for g6 in _graph6_inputs(graph)
    ]
    _emit(
        records,
        fmt,
        "graph6,result,dim",
        lambda r: f"{r['graph6']},{r['result']},{'' if r.get('dim') is None else r['dim']}",
    )
    if any(r["result"] == "non-ternary" for r in records):
        sys.exit(EXIT_CHECK_FAILURE)


@main.command()
@click.argument("graph")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.pass_obj
def ternary(server: str | None, graph: str, fmt: str) -> None:
    """Whether GRAPH has no induced cycle of length divisible by 3."""
    records = [
        _payload(_request(server, "POST", "/ternary", json={"graph6": g6}))
        for g6 in _graph6_inputs(graph)
    ]
    _emit(
        records,
        fmt,
        "graph6,ternary,witness",
        lambda r: (
            f"{r['graph6']},{int(r['ternary'])},"
            f"{'' if r.get('witness') is None else ';'.join(map(str, r['witness']['vertices']))}"
        ),
    )


@main.command("oracle-cycles")
@click.option("--max", "max_length", type=int, required=True, help="largest cycle length")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.pass_obj
def oracle_cycles(server: str | None, max_length: int, fmt: str) -> None:
    """Closed-form homotopy types of I(C_l) for l = 3..MAX."""
    payload = _payload(_request(server, "GET", "/cycles", params={"max_length": max_length}))
    _emit(
        payload["cycles"],
        fmt,
        "length,kind,dim",
        lambda r: f"{r['length']},{r['kind']},{r['dim']}",
    )


@main.command()
@click.option("--max-n", type=int, default=None, help="verify all graphs with 1..N vertices")
@click.option("--stdin", "use_stdin", is_flag=True, help="read graph6 lines from stdin")
@click.option("--checks", default=None, metavar="LIST", help="comma-separated subset of checks")
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True, help="seed for sampled checks")
@click.option("--subset-samples", type=int, default=1000, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.option("--reports/--no-reports", default=True, help="emit per-graph reports")
@click.pass_obj
def verify(
    server: str | None,
    max_n: int | None,
    use_stdin: bool,
    checks: str | None,
    jobs: int,
    seed: int,
    subset_samples: int,
    fmt: str,
    reports: bool,
) -> None:
    """Run theorem checks over an exhaustive corpus or a graph6 stream."""
    if (max_n is None) == (not use_stdin):
        raise click.UsageError("exactly one of --max-n or --stdin is required")
    if use_stdin:
        params: dict[str, Any] = {"seed": seed, "subset_samples": subset_samples,
                                  "include_reports": reports}
        if checks:
            params["checks"] = checks
        response = _request(
            server,
            "POST",
            "/verify/stream",
            params=params,
            content=sys.stdin.read(),
            headers={"content-type": "text/plain"},
        )
    else:
        body: dict[str, Any] = {
            "max_n": max_n,
            "jobs": jobs,
            "seed": seed,
            "subset_samples": subset_samples,
            "include_reports": reports,
        }
        if checks:
            body["checks"] = [c.strip() for c in checks.split(",") if c.strip()]
        response = _request(server, "POST", "/verify", json=body)
    payload = _payload(response)

    report_rows = payload.pop("reports", None) or []
    if fmt == "json":
        for row in report_rows:
            click.echo(json.dumps(row, sort_keys=True))
        click.echo(json.dumps({"summary": payload}, sort_keys=True))
    else:
        click.echo("g6,n,ternary,class,betti,chi,torsion,failed_checks")
        for row in report_rows:
            failed = ";".join(name for name, ok in row["checks"].items() if not ok)
            click.echo(
                f"{row['g6']},{row['n']},{int(row['ternary'])},{row['class']},"
                f"{';'.join(map(str, row['betti']))},{row['chi']},{int(row['torsion'])},{failed}"
            )
        click.echo(json.dumps({"summary": payload}, sort_keys=True), err=True)

    if payload["failures"]:
        sys.exit(EXIT_CHECK_FAILURE)
    if payload["parse_errors"]:
        sys.exit(EXIT_USAGE)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the indcomp HTTP service."""
    import uvicorn

    uvicorn.run("indcomp.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
