"""Command-line interface.

Runs everything in-process by default; pass --server URL to proxy a
subcommand to a running service instance instead.  Exit codes: 0 all
verdicts computed, 2 some congruence verdict undetermined, 1 error.
"""

from __future__ import annotations

import sys

import click

from .congruence import ORACLE_CAP
from .qseries import DEFAULT_PRECISION, series_by_name
from .tables import CACHE_ENV_VAR, emit_table, run_compute, table_from_dict


def _post(server, path, payload):
    import httpx

    resp = httpx.post(server.rstrip("/") + path, json=payload, timeout=600.0)
    resp.raise_for_status()
    return resp.json()


@click.group()
def main():
    """Component tables for elliptic-curve level structures with
    nonabelian level group."""


@main.command()
@click.option("--group", "spec", required=True, help="Group descriptor, e.g. A5, D8, C3xC3, PSL(2,7), file:PATH.")
@click.option("--format", "fmt", type=click.Choice(["md", "csv", "json"]), default="md")
@click.option("--congruence", type=click.Choice(["oracle", "relations", "both", "skip"]), default="both")
@click.option("--oracle-cap", type=int, default=ORACLE_CAP, show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True,
              help="Worker hint; output is identical for any value.")
@click.option("--cache-dir", type=click.Path(), default=None,
              help="Result cache directory (default: $%s)." % CACHE_ENV_VAR)
@click.option("--server", default=None, help="Proxy to a running service at this URL.")
def compute(spec, fmt, congruence, oracle_cap, jobs, cache_dir, server):
    """Decompose the moduli space of a group into components."""
    if jobs < 1:
        raise click.BadParameter("--jobs must be at least 1")
    try:
        if server:
            data = _post(server, "/compute", {
                "group": spec, "congruence": congruence, "oracle_cap": oracle_cap,
            })
            table = table_from_dict(data["table"])
        else:
            table = run_compute(spec, congruence=congruence, oracle_cap=oracle_cap,
                                cache_dir=cache_dir)
    except Exception as exc:
        click.echo("error: %s" % exc, err=True)
        sys.exit(1)
    click.echo(emit_table(table, fmt), nl=False)
    if table.has_undetermined():
        sys.exit(2)


@main.command("dihedral-check")
@click.option("--k-max", type=int, required=True)
@click.option("--server", default=None, help="Proxy to a running service at this URL.")
def dihedral_check(k_max, server):
    """Verify the closed-form dihedral component structure for k=3..K."""
    if k_max < 3:
        click.echo("error: --k-max must be at least 3", err=True)
        sys.exit(1)
    failed = False
    if server:
        data = _post(server, "/dihedral-check", {"k_max": k_max})
        for r in data["results"]:
            _report_dihedral(r["k"], r["ok"], r["n_components"], r.get("error"))
            failed |= not r["ok"]
    else:
        from .dihedral import verify_structure_theorem

        for k in range(3, k_max + 1):
            try:
                r = verify_structure_theorem(k)
                _report_dihedral(k, r.ok, r.n_components, None)
                failed |= not r.ok
            except AssertionError as exc:
                _report_dihedral(k, False, 0, str(exc))
                failed = True
    if failed:
        sys.exit(1)


def _report_dihedral(k, ok, n_components, error):
    if ok:
        click.echo("k=%d: PASS (%d components)" % (k, n_components))
    else:
        click.echo("k=%d: FAIL%s" % (k, " (%s)" % error if error else ""))


@main.command()
@click.option("--precision", type=int, default=DEFAULT_PRECISION, show_default=True)
@click.option("--emit", type=click.Choice(["B", "C", "delta", "j"]), required=True)
@click.option("--server", default=None, help="Proxy to a running service at this URL.")
def tate(precision, emit, server):
    """Print exact q-expansion coefficients, one per line as
    exponent<TAB>numerator/denominator."""
    if precision < 1:
        click.echo("error: --precision must be at least 1", err=True)
        sys.exit(1)
    if server:
        data = _post(server, "/tate", {"precision": precision, "emit": emit})
        for c in data["coefficients"]:
            click.echo("%d\t%d/%d" % (c["exponent"], c["numerator"], c["denominator"]))
    else:
        series = series_by_name(emit, precision)
        for n in range(series.val, series.prec):
            c = series[n]
            click.echo("%d\t%d/%d" % (n, c.numerator, c.denominator))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("gstruct.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
