"""Thin command-line client for the hermdec service.

By default each command talks to an in-process instance of the FastAPI app;
`--server URL` points it at a running instance instead.  Exit codes:
0 success, 1 validation error, 2 property failure.
"""

import sys

import click
import httpx


def _client(server):
    if server:
        return httpx.Client(base_url=server, timeout=300.0)
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from starlette.testclient import TestClient

    from .service import app
    return TestClient(app)


def _post(ctx_obj, path, payload):
    try:
        resp = ctx_obj["client"].post(path, json=payload)
    except httpx.HTTPError as exc:
        click.echo(f"error: cannot reach server: {exc}", err=True)
        sys.exit(1)
    if resp.status_code >= 400:
        detail = resp.json().get("detail", resp.text)
        click.echo(f"error: {detail}", err=True)
        sys.exit(1)
    return resp.json()


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


common = [
    click.option("--q", type=int, required=True, help="field size parameter (power of 2)"),
    click.option("--m", type=int, required=True, help="pole-order bound of the code"),
    click.option("--server", default=None, help="base URL of a running service"),
    click.option("--out", default=None, help="write the report to a file"),
]


def with_common(f):
    for opt in reversed(common):
        f = opt(f)
    return f


@click.group()
def main():
    """Hermitian-code codec and experiment harness."""


@main.command()
@with_common
def params(q, m, server, out):
    """Print code parameters and the monomial basis."""
    data = _post({"client": _client(server)}, "/params", {"q": q, "m": m})
    lines = [f"n={data['n']} k={data['k']} g={data['g']} dstar={data['dstar']} "
             f"t_design={data['t_design']} y0={data['y0']}"]
    lines.append("basis=" + " ".join(data["basis"]))
    lines.append("pole_orders=" + " ".join(str(p) for p in data["pole_orders"]))
    _emit("\n".join(lines) + "\n", out)


@main.command()
@with_common
def points(q, m, server, out):
    """Dump the point table: one line per point, 'i j alpha beta y'."""
    data = _post({"client": _client(server)}, "/points", {"q": q, "m": m})
    _emit(data["table"], out)


@main.command("dump-mapping")
@with_common
def dump_mapping_cmd(q, m, server, out):
    """Emit M, M' and their inverses in the matrix text format."""
    data = _post({"client": _client(server)}, "/mapping", {"q": q, "m": m})
    _emit(data["text"], out)


@main.command()
@with_common
@click.option("--t", type=int, default=1, help="auxiliary errors per trial")
@click.option("--trials", type=int, default=100)
@click.option("--seed", type=int, default=0)
@click.option("--exhaustive", is_flag=True, help="enumerate every weight-t pattern")
@click.option("--parallel", type=int, default=1, help="fan trials out over N workers")
def roundtrip(q, m, server, out, t, trials, seed, exhaustive, parallel):
    """Encode, map, corrupt, decode and compare, one line per trial."""
    data = _post({"client": _client(server)}, "/roundtrip",
                 {"q": q, "m": m, "t": t, "trials": trials, "seed": seed,
                  "exhaustive": exhaustive, "parallel": parallel})
    lines = [f"trial={r['trial']} result={r['result']} {r['report']}"
             for r in data["records"]]
    lines.append(f"summary recovered={data['recovered']} "
                 f"undecodable={data['undecodable']} "
                 f"miscorrected={data['miscorrected']}")
    _emit("\n".join(lines) + "\n", out)
    sys.exit(0 if data["all_ok"] else 2)


@main.command()
@with_common
@click.option("--trials", type=int, default=500)
@click.option("--seed", type=int, default=0)
@click.option("--exhaustive", is_flag=True)
@click.option("--fail-on-edge", is_flag=True,
              help="fail the run when the reported M' edge case fires")
def verify(q, m, server, out, trials, seed, exhaustive, fail_on_edge):
    """Run the theorem-property ledger."""
    data = _post({"client": _client(server)}, "/verify",
                 {"q": q, "m": m, "trials": trials, "seed": seed,
                  "exhaustive": exhaustive, "fail_on_edge": fail_on_edge})
    _emit("\n".join(r["line"] for r in data["results"]) + "\n", out)
    sys.exit(0 if data["ok"] else 2)


@main.command()
@with_common
@click.option("--t", type=int, default=1)
@click.option("--seed", type=int, default=0)
def bench(q, m, server, out, t, seed):
    """Operation-count benchmark: univariate vs bivariate search."""
    data = _post({"client": _client(server)}, "/bench",
                 {"q": q, "m": m, "t": t, "seed": seed})
    lines = [f"psi_evals={data['psi_evals']}",
             f"bivariate_evals={data['bivariate_evals']}",
             f"eval_ratio={data['eval_ratio']:g}",
             f"field_mults_univariate={data['field_mults_univariate']}",
             f"field_mults_bivariate={data['field_mults_bivariate']}",
             f"decode_status={data['decode_status']}"]
    _emit("\n".join(lines) + "\n", out)


@main.command()
@with_common
@click.option("--trials", type=int, default=100)
@click.option("--seed", type=int, default=0)
def radius(q, m, server, out, trials, seed):
    """Measured correction-radius table (success rate per error weight)."""
    data = _post({"client": _client(server)}, "/radius",
                 {"q": q, "m": m, "trials": trials, "seed": seed})
    _emit(data["table"], out)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
