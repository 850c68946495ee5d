"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 invalid parameters or
input, 3 oracle budget refused, 4 I/O failure while writing output.
"""

from __future__ import annotations

import functools
import json
import multiprocessing
import os
import sys
from typing import IO, NoReturn

import click

from . import formats
from .generators import counts_by_sigma, enumerate_generators, generator_of
from .modmath import HypergraphParams, ParameterError, is_prime
from .ordering import adopted_order, difference_vector
from .verification import DEFAULT_BUDGET, BudgetExceeded, oracle_partition_check, verify_decomposition

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_IO = 4

MAX_REPORTED = 100


def _fail(msg: str, code: int = EXIT_INVALID) -> NoReturn:
    click.echo(f"error: {msg}", err=True)
    sys.exit(code)


def _params(n: int, k: int, strict: bool = True) -> HypergraphParams:
    try:
        return HypergraphParams(n, k, strict=strict)
    except ParameterError as exc:
        _fail(str(exc))


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main() -> None:
    """Hamiltonian decompositions of complete k-uniform hypergraphs K_n^k (n prime)."""


@main.command()
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.option("--json", "as_json", is_flag=True, help="Emit a single JSON object.")
def info(n: int, k: int, as_json: bool) -> None:
    """Summarize the decomposition of K_N^K: cycle count, sigma range, per-sigma counts."""
    params = _params(n, k)
    counts = counts_by_sigma(params)
    if as_json:
        click.echo(_dump({
            "n": n, "k": k, "prime": is_prime(n), "edges": params.num_edges,
            "N": params.N, "sigma_min": params.sigma_min, "sigma_max": params.sigma_max,
            "counts": {str(s): c for s, c in counts.items()},
        }))
        return
    click.echo(f"n = {n}")
    click.echo(f"k = {k}")
    click.echo(f"n prime: {'yes' if is_prime(n) else 'no'}")
    click.echo(f"hyperedges C(n,k) = {params.num_edges}")
    click.echo(f"cycles N = {params.N}")
    click.echo(f"sigma range = [{params.sigma_min}, {params.sigma_max}]")
    click.echo("generators per sigma: " + " ".join(f"{s}:{c}" for s, c in counts.items()))


@main.command()
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.option("--format", "fmt", type=click.Choice(formats.FORMATS), default="jsonl", show_default=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False, allow_dash=True), default="-",
              help="Output file ('-' for stdout).")
@click.option("--generators-only", is_flag=True, help="Emit one generator per line instead of full cycles.")
@click.option("-j", "--jobs", type=int, default=1, show_default=True,
              help="Worker processes; 0 means one per CPU. Output order is unaffected.")
def construct(n: int, k: int, fmt: str, output: str, generators_only: bool, jobs: int) -> None:
    """Stream the N Hamiltonian cycles of K_N^K in enumeration order."""
    params = _params(n, k)
    if jobs < 0:
        _fail("--jobs must be >= 0")
    jobs = jobs or os.cpu_count() or 1
    render = functools.partial(formats.render, params=params, fmt=fmt, generators_only=generators_only)
    try:
        out: IO[str] = click.open_file(output, "w", encoding="utf-8", lazy=False)
    except OSError as exc:
        _fail(f"cannot open {output}: {exc.strerror}", EXIT_IO)
    try:
        with out:
            gens = enumerate_generators(params)
            if jobs == 1:
                for g in gens:
                    out.write(render(g))
            else:
                with multiprocessing.Pool(jobs) as pool:
                    for chunk in pool.imap(render, gens, chunksize=64):
                        out.write(chunk)
    except BrokenPipeError:
        sys.stderr.close()
        sys.exit(EXIT_IO)
    except OSError as exc:
        _fail(f"write failed: {exc}", EXIT_IO)


@main.command()
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.argument("input_path", metavar="INPUT", required=False,
                type=click.Path(exists=True, dir_okay=False, allow_dash=True))
@click.option("--fixture", type=click.Choice(sorted(formats.FIXTURES)), help="Verify a bundled fixture instead of INPUT.")
def verify(n: int, k: int, input_path: str | None, fixture: str | None) -> None:
    """Verify that INPUT (JSONL or text, '-' for stdin) is a Hamiltonian decomposition of K_N^K.

    Each edge is read in ordered form: its first two entries are the vertex
    it leaves and the vertex it enters. n need not be prime here; a
    warning is printed and verification still runs.
    """
    if (input_path is None) == (fixture is None):
        _fail("give exactly one of INPUT or --fixture")
    params = _params(n, k, strict=False)
    for w in params.warnings:
        click.echo(f"warning: {w}", err=True)
    path = str(formats.fixture_path(fixture)) if fixture else input_path
    try:
        with click.open_file(path, "r", encoding="utf-8") as fh:
            report = verify_decomposition(formats.read_classes(fh), params)
    except ParameterError as exc:
        _fail(f"malformed input: {exc}")
    except UnicodeDecodeError:
        _fail("malformed input: not UTF-8 text")
    if report.ok:
        click.echo(f"ok: {report.stats['classes']} classes cover all {params.num_edges} hyperedges")
        return
    d = report.to_dict()
    if len(d["failures"]) > MAX_REPORTED:
        d["omitted_failures"] = len(d["failures"]) - MAX_REPORTED
        d["failures"] = d["failures"][:MAX_REPORTED]
    click.echo(json.dumps(d, indent=1), err=True)
    click.echo(f"rejected: {len(report.failures)} finding(s)")
    sys.exit(EXIT_REJECTED)


def _parse_subset(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        _fail(f"malformed subset {text!r}; expected comma-separated integers")


@main.command(name="map")
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.argument("subset")
def map_(n: int, k: int, subset: str) -> None:
    """Find the cycle owning SUBSET (comma-separated, e.g. 1,2,4)."""
    params = _params(n, k)
    values = _parse_subset(subset)
    if len(set(values)) != len(values):
        _fail(f"repeated vertex in subset {values}")
    try:
        ordered = adopted_order(values, params)
    except ParameterError as exc:
        _fail(str(exc))
    dv = difference_vector(ordered.entries, n)
    g = generator_of(values, params)
    index = next(i for i, h in enumerate(enumerate_generators(params), start=1) if h == g)
    click.echo(_dump({
        "subset": sorted(values),
        "adopted": list(ordered.entries),
        "rotation": ordered.rotation,
        "difference": list(dv.gaps),
        "gamma": dv.gamma,
        "generator": g.as_list(),
        "sigma": g.sigma,
        "cycle_index": index,
    }))


@main.command()
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.option("--budget", default=str(DEFAULT_BUDGET), show_default=True,
              help="Largest C(n,k) to enumerate, or 'default'.")
def oracle(n: int, k: int, budget: str) -> None:
    """Exhaustively cross-check the construction for K_N^K."""
    params = _params(n, k)
    try:
        limit = DEFAULT_BUDGET if budget == "default" else int(budget)
    except ValueError:
        _fail(f"--budget must be an integer or 'default', got {budget!r}")
    try:
        report = oracle_partition_check(params, limit)
    except BudgetExceeded as exc:
        _fail(f"budget exceeded: {exc}", EXIT_BUDGET)
    click.echo(_dump(report.to_dict()))
    if not report.ok:
        sys.exit(EXIT_REJECTED)


if __name__ == "__main__":
    main()
