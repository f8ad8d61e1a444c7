"""Command-line interface. Matroid documents travel as canonical JSON
on stdin/stdout ("-" means stdin), so construct output pipes straight
into analyze, simulate and oracle verify."""

from __future__ import annotations

import csv
import functools
import io
import json
import sys

import click

from . import __version__
from .analysis import (check_chain_inequalities, check_structure_theorem,
                       find_locality_chain, has_locality, params_from_matroid,
                       singleton_bound, validate_params)
from .bounds import (classify_achievability, const_a, const_b, old_lower_bound,
                     theorem14_construction, theorem14_lower_bound)
from .codes import code_min_distance, induce_matroid, is_almost_affine
from .constructions import construction1, graph_construction, theorem11_construction
from .errors import ChainStalled, LrcError
from .oracle import exhaust_theorem9_layouts, verify_matroid
from .serialization import (SCHEMA_VERSION, atoms_from_doc, code_from_doc,
                            dumps_canonical, graph_from_doc, loads,
                            matroid_from_doc, matroid_to_doc)
from .simulate import exhaustive_patterns, monte_carlo


def _lrc_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except LrcError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)
    return wrapper


def _read_doc(source) -> dict:
    return loads(source.read())


def _emit_matroid(matroid) -> None:
    click.echo(dumps_canonical(matroid_to_doc(matroid)), nl=False)


def _emit_report(doc) -> None:
    click.echo(json.dumps(doc, indent=2))


@click.group()
@click.version_option(__version__, message=f"lrc {__version__} (schema {SCHEMA_VERSION})")
def main():
    """Matroid tools for locally repairable codes."""


# -- construct --------------------------------------------------------


@main.group()
def construct():
    """Build matroids from parameters, graphs or explicit atoms."""


@construct.command("theorem11")
@click.option("--n", required=True, type=int)
@click.option("--k", required=True, type=int)
@click.option("--r", required=True, type=int)
@click.option("--delta", required=True, type=int)
@_lrc_errors
def construct_theorem11(n, k, r, delta):
    """Shared-core instance meeting the distance bound."""
    _emit_matroid(theorem11_construction(n, k, r, delta))


@construct.command("graph")
@click.argument("source", type=click.File("r"))
@_lrc_errors
def construct_graph(source):
    """Build from a weighted-graph document."""
    built, _params = graph_construction(graph_from_doc(_read_doc(source)))
    _emit_matroid(built)


@construct.command("atoms")
@click.argument("source", type=click.File("r"))
@click.option("--k", required=True, type=int)
@_lrc_errors
def construct_atoms(source, k):
    """Build from an explicit atom-list document."""
    n, atoms = atoms_from_doc(_read_doc(source))
    _emit_matroid(construction1(n, atoms, k))


@construct.command("theorem14")
@click.option("--n", required=True, type=int)
@click.option("--k", required=True, type=int)
@click.option("--r", required=True, type=int)
@click.option("--delta", required=True, type=int)
@_lrc_errors
def construct_theorem14(n, k, r, delta):
    """Even-split instance realizing the improved lower bound."""
    built, _d = theorem14_construction(n, k, r, delta)
    _emit_matroid(built)


# -- analyze ----------------------------------------------------------


@main.command()
@click.argument("source", type=click.File("r"))
@click.option("--r", required=True, type=int)
@click.option("--delta", required=True, type=int)
@_lrc_errors
def analyze(source, r, delta):
    """Parameters, bound achievement and structure report of a matroid."""
    matroid = matroid_from_doc(_read_doc(source))
    n, k, d = params_from_matroid(matroid)
    report = {
        "params": {"n": n, "k": k, "d": d, "r": r, "delta": delta,
                   "a": const_a(k, r), "b": const_b(n, r, delta)},
        "valid_params": validate_params(n, k, r, delta),
        "bound": None, "has_locality": False, "cover": None,
        "achieves": None, "structure_report": None, "chain": None,
    }
    if report["valid_params"]:
        report["bound"] = singleton_bound(n, k, r, delta)
    ok, cover = has_locality(matroid, r, delta)
    report["has_locality"] = ok
    if ok and cover is not None:
        report["cover"] = cover.to_dict()
        if report["bound"] is not None:
            report["achieves"] = d == report["bound"]
        if r < k:
            report["structure_report"] = check_structure_theorem(matroid, cover).to_dict()
        try:
            chain = find_locality_chain(matroid, cover)
            report["chain"] = chain.to_dict()
            report["chain"]["inequalities_hold"] = check_chain_inequalities(matroid, chain)
        except ChainStalled as exc:
            report["chain"] = {"error": str(exc)}
    _emit_report(report)


# -- bounds and sweep -------------------------------------------------


@main.command()
@click.option("--n", required=True, type=int)
@click.option("--k", required=True, type=int)
@click.option("--r", required=True, type=int)
@click.option("--delta", required=True, type=int)
@_lrc_errors
def bounds(n, k, r, delta):
    """Upper and lower distance bounds plus an achievability verdict."""
    report = classify_achievability(n, k, r, delta).to_dict()
    if report["new_lower"] is not None:
        report["new_lower_branch"] = theorem14_lower_bound(n, k, r, delta).branch
    _emit_report(report)


def _sweep_rows(nmax: int):
    for n in range(2, nmax + 1):
        for k in range(1, n):
            for r in range(1, k + 1):
                for delta in range(2, n + 1):
                    if not validate_params(n, k, r, delta):
                        continue
                    rep = classify_achievability(n, k, r, delta)
                    yield {"n": n, "k": k, "r": r, "delta": delta,
                           "singleton": rep.singleton, "old": rep.old_lower,
                           "new": rep.new_lower, "verdict": rep.verdict,
                           "witness": rep.witness}


@main.command()
@click.option("--nmax", required=True, type=int)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@_lrc_errors
def sweep(nmax, fmt):
    """Bound table over every valid parameter tuple up to --nmax."""
    rows = list(_sweep_rows(nmax))
    if fmt == "json":
        _emit_report(rows)
        return
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=["n", "k", "r", "delta", "singleton",
                                             "old", "new", "verdict", "witness"])
    writer.writeheader()
    writer.writerows(rows)
    click.echo(out.getvalue(), nl=False)


# -- simulate ---------------------------------------------------------


@main.command()
@click.argument("source", type=click.File("r"))
@click.option("--r", required=True, type=int)
@click.option("--delta", required=True, type=int)
@click.option("--p", type=float, default=0.1, show_default=True)
@click.option("--trials", type=int, default=10000, show_default=True)
@click.option("--seed", type=int, required=True)
@click.option("--exhaustive", is_flag=True,
              help="Enumerate every pattern up to --max-erasures instead of sampling.")
@click.option("--max-erasures", type=int, default=None)
@_lrc_errors
def simulate(source, r, delta, p, trials, seed, exhaustive, max_erasures):
    """Erasure-channel statistics for a matroid with (r, delta) locality."""
    matroid = matroid_from_doc(_read_doc(source))
    ok, cover = has_locality(matroid, r, delta)
    if not ok:
        click.echo(f"error: matroid has no ({r}, {delta}) locality", err=True)
        sys.exit(1)
    if exhaustive:
        limit = matroid.n if max_erasures is None else max_erasures
        rows = exhaustive_patterns(matroid, cover, limit)
        _emit_report([row.to_dict() for row in rows])
    else:
        _emit_report(monte_carlo(matroid, cover, p, trials, seed).to_dict())


# -- oracle -----------------------------------------------------------


@main.group()
def oracle():
    """Brute-force cross-checks."""


@oracle.command("verify")
@click.argument("source", type=click.File("r"))
@click.option("--r", type=int, default=None)
@click.option("--delta", type=int, default=None)
@_lrc_errors
def oracle_verify(source, r, delta):
    """Check the formula-based answers for a matroid document."""
    matroid = matroid_from_doc(_read_doc(source))
    verdicts = verify_matroid(matroid, r, delta)
    _emit_report([v.to_dict() for v in verdicts])
    if not all(v.ok for v in verdicts):
        sys.exit(1)


@oracle.command("exhaust")
@click.option("--n", required=True, type=int)
@click.option("--k", required=True, type=int)
@click.option("--r", required=True, type=int)
@click.option("--delta", required=True, type=int)
@click.option("--m", type=int, default=None,
              help="Atom count; defaults to ceil(n / (r + delta - 1)).")
@_lrc_errors
def oracle_exhaust(n, k, r, delta, m):
    """Best distance over all atom layouts, by exhaustive search."""
    if m is None:
        m = -(-n // (r + delta - 1))
    _emit_report(exhaust_theorem9_layouts(n, k, r, delta, m).to_dict())


# -- code -------------------------------------------------------------


@main.group()
def code():
    """Block-code operations."""


@code.command("induce")
@click.argument("source", type=click.File("r"))
@_lrc_errors
def code_induce(source):
    """Matroid induced by an almost-affine code (rank-table document)."""
    block = code_from_doc(_read_doc(source))
    _emit_matroid(induce_matroid(block))


@code.command("distance")
@click.argument("source", type=click.File("r"))
@_lrc_errors
def code_distance(source):
    """Minimum Hamming distance and almost-affinity of a code."""
    block = code_from_doc(_read_doc(source))
    _emit_report({"n": block.n, "s": block.s, "codewords": len(block),
                  "min_distance": code_min_distance(block),
                  "almost_affine": is_almost_affine(block)})


if __name__ == "__main__":
    main()
