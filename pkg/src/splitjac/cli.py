"""Command-line client for the splitjac service.

By default the commands talk to an in-process instance of the FastAPI
app (no socket); --server switches to a remote instance.  All numeric
output is decimal strings inside stable, sorted JSON.

Exit codes: 0 ok, 1 usage/input error, 2 resource budget exceeded.
"""

import json
import sys

import click
import httpx

# the spec's exit-code contract: usage errors exit 1, resource errors 2
click.UsageError.exit_code = 1


class ResourceExceeded(click.ClickException):
    exit_code = 2


class Client:
    def __init__(self, server=None):
        if server:
            self._client = httpx.Client(base_url=server, timeout=600.0)
        else:
            import warnings
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service.app import app
            self._client = TestClient(app, raise_server_exceptions=False)

    def post(self, path, payload):
        resp = self._client.post(path, json=payload)
        if resp.status_code == 429:
            raise ResourceExceeded(resp.json().get("error", "resource limit"))
        if resp.status_code >= 400:
            try:
                msg = resp.json().get("error") or json.dumps(resp.json())
            except Exception:
                msg = resp.text
            raise click.UsageError(msg)
        return resp.json()


def _emit(obj):
    click.echo(json.dumps(obj, indent=2, sort_keys=True))


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="URL of a running service; default runs in-process.")
@click.pass_context
def main(ctx, server):
    """Exact invariants, isogeny loci and surface data for split
    genus-2 Jacobians."""
    ctx.obj = Client(server)


@main.command()
@click.option("--s1", default=None, help="model coefficient s1")
@click.option("--s2", default=None, help="model coefficient s2")
@click.option("--u", default=None, help="dihedral invariant u = s1 s2")
@click.option("--v", default=None, help="dihedral invariant v = s1^3 + s2^3")
@click.option("--field", default="Q", show_default=True,
              help='base field: "Q", a prime p, or "p^2"')
@click.pass_obj
def split2(client, s1, s2, u, v, field):
    """(2,2)-split family record from (s1, s2) or (u, v)."""
    _emit(client.post("/split2", {"s1": s1, "s2": s2, "u": u, "v": v,
                                  "field": field}))


@main.command()
@click.option("--fu", default=None, help="family parameter u")
@click.option("--fv", default=None, help="family parameter v")
@click.option("--chi", default=None, help="pair invariant chi")
@click.option("--psi", default=None, help="pair invariant psi")
@click.option("--field", default="Q", show_default=True)
@click.pass_obj
def split3(client, fu, fv, chi, psi, field):
    """(3,3)-split family record from (u, v) or (chi, psi)."""
    _emit(client.post("/split3", {"fu": fu, "fv": fv, "chi": chi,
                                  "psi": psi, "field": field}))


@main.command()
@click.option("--n", type=click.Choice(["2", "3"]), required=True,
              help="which split family")
@click.option("--N", "--level", "level", type=click.Choice(["2", "3", "5", "7"]),
              required=True, help="isogeny level N")
@click.option("--point", required=True, metavar="X,Y",
              help="(u,v) for n=2 or (chi,psi) for n=3")
@click.option("--field", default="Q", show_default=True)
@click.pass_obj
def isogeny(client, n, level, point, field):
    """Evaluate the level-N isogeny locus at a parameter point."""
    parts = point.split(",")
    if len(parts) != 2:
        raise click.UsageError("--point needs exactly two comma-separated values")
    _emit(client.post("/isogeny", {"n": n, "N": int(level),
                                   "x": parts[0], "y": parts[1],
                                   "field": field}))


def _parse_divisor(text):
    """'u0,u1,u2;v0,v1' -> {"u": [...], "v": [...]}."""
    halves = text.split(";")
    if len(halves) != 2:
        raise click.UsageError("divisor must be 'u-coeffs;v-coeffs'")
    u = [s.strip() for s in halves[0].split(",") if s.strip()]
    v = [s.strip() for s in halves[1].split(",") if s.strip()]
    return {"u": u, "v": v}


@main.command()
@click.option("--curve", "curve_file", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="JSON curve file: {field, coeffs}")
@click.option("--op", type=click.Choice(["add", "mul", "order"]),
              required=True)
@click.option("--div1", required=True, metavar="'u0,u1,u2;v0,v1'",
              help="first divisor (Mumford coefficients, low to high)")
@click.option("--div2", default=None, metavar="'u0,u1,u2;v0,v1'",
              help="second divisor (op=add)")
@click.option("--k", type=int, default=None, help="scalar (op=mul)")
@click.option("--bound", type=int, default=None,
              help="search bound (op=order)")
@click.pass_obj
def jac(client, curve_file, op, div1, div2, k, bound):
    """Jacobian arithmetic on Mumford divisors."""
    with open(curve_file) as fh:
        curve = json.load(fh)
    payload = {"curve": curve, "op": op, "div1": _parse_divisor(div1),
               "k": k, "bound": bound}
    if div2 is not None:
        payload["div2"] = _parse_divisor(div2)
    _emit(client.post("/jac", payload))


@main.command()
@click.option("--curve", "curve_file", required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option("--q", type=int, default=None,
              help="expected field order (cross-checked)")
@click.pass_obj
def lpoly(client, curve_file, q):
    """L-polynomial and Jacobian order of a curve over a finite field."""
    with open(curve_file) as fh:
        curve = json.load(fh)
    _emit(client.post("/lpoly", {"curve": curve, "q": q}))


@main.command()
@click.option("--from", "source", type=click.Choice(["ic", "uv", "chipsi"]),
              required=True, help="parameter source")
@click.option("--values", required=True, metavar="A,B[,C,D]",
              help="I2,I4,I6,I10 for ic; u,v or chi,psi otherwise")
@click.option("--field", default="Q", show_default=True)
@click.pass_obj
def surface(client, source, values, field):
    """Shioda-Inose parameters and the quartic model."""
    vals = [s.strip() for s in values.split(",")]
    _emit(client.post("/surface", {"source": source, "values": vals,
                                   "field": field}))


@main.command("ss-scan")
@click.option("--p", type=int, required=True, help="prime, p = 3 mod 4")
@click.option("--limit", type=int, default=None,
              help="stop after this many rows")
@click.option("--workers", type=int, default=1, show_default=True,
              help="bounded worker pool for the a0-slices")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="write CSV here instead of stdout")
@click.pass_obj
def ss_scan(client, p, limit, workers, out):
    """Supersingular Montgomery scan over F_{p^2} (deterministic CSV)."""
    resp = client.post("/ss-scan", {"p": p, "limit": limit,
                                    "workers": workers})
    if out:
        with open(out, "w") as fh:
            fh.write(resp["csv"])
        click.echo("wrote %s rows to %s" % (resp["rows"], out))
    else:
        click.echo(resp["csv"], nl=False)


@main.command()
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--points", type=int, default=50, show_default=True)
@click.pass_obj
def validate(client, seed, points):
    """Re-check every registered formula against its oracle.

    Prints the JSON report then a human summary; exits 0 iff no entry
    is unresolved."""
    resp = client.post("/validate", {"seed": seed, "points": points})
    _emit(resp["report"])
    click.echo(resp["summary"], err=True)
    if resp["unresolved"]:
        sys.exit(1)


if __name__ == "__main__":
    main()
