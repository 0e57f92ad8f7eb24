"""Command-line front end.

Exit codes: 0 success (or "isoclinic"), 1 exhaustively refuted isoclinism,
2 invalid input, file, or usage errors.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .brace import is_two_sided
from .catalog import (
    catalog_brace,
    catalog_names,
    enumerate_braces_on,
    search_strict_verbal_inclusion,
)
from .errors import SkewBraceError
from .fileio import LoadedStructure, load_structure, save_structure
from .groups_catalog import named_group
from .isoclinism import lv_isoclinic, w_isoclinism_search
from .series import (
    annihilator,
    annihilator_series,
    condition_4_2_check,
    left_series,
    right_series,
    verbal_left_series,
    verbal_right_series,
)
from .words import (
    WordCollection,
    arity,
    core_of,
    family,
    marginal_left_ideal,
    parse_word,
    verbal_sub_skew_brace,
)


def _load(path: str) -> LoadedStructure:
    try:
        return load_structure(path)
    except SkewBraceError as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(2)


def _members(subset, labels=None) -> str:
    elems = sorted(subset.members)
    if labels:
        return "{" + ", ".join(labels[e] for e in elems) + "}"
    return "{" + ", ".join(str(e) for e in elems) + "}"


def _collection(family_name, n, word_exprs) -> WordCollection:
    if family_name and word_exprs:
        click.echo("error: give either --family or --word, not both", err=True)
        sys.exit(2)
    if family_name:
        try:
            return family(family_name, n)
        except SkewBraceError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
    if not word_exprs:
        click.echo("error: one of --family or --word is required", err=True)
        sys.exit(2)
    try:
        words = tuple(parse_word(e) for e in word_exprs)
    except SkewBraceError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    return WordCollection("custom", words, max(arity(w) for w in words))


@click.group()
def main():
    """Finite skew brace computations."""


@main.command()
@click.argument("path", type=click.Path())
def validate(path):
    """Validate a brace or group file; exit 0 iff all axioms hold."""
    try:
        loaded = load_structure(path)
    except SkewBraceError as exc:
        click.echo(f"invalid: {type(exc).__name__}: {exc}", err=True)
        sys.exit(2)
    A = loaded.brace
    two_sided, _ = is_two_sided(A)
    kind = "group" if loaded.is_group else "skew brace"
    click.echo(
        f"valid {kind}: order={A.order}"
        f" dot_abelian={A.dot.is_abelian()}"
        f" circ_abelian={A.circ.is_abelian()}"
        f" two_sided={two_sided}"
    )


_SERIES_FNS = {
    "left": left_series,
    "right": right_series,
    "verbal-left": verbal_left_series,
    "verbal-right": verbal_right_series,
}


@main.command()
@click.argument("path", type=click.Path())
@click.option(
    "--series",
    "kinds",
    default="left,right",
    help="comma list from: left,right,verbal-left,verbal-right",
)
@click.option("--max-n", default=8, type=int)
@click.option("--json", "as_json", is_flag=True)
def info(path, kinds, max_n, as_json):
    """Series orders and members, annihilator tower, nilpotency condition."""
    loaded = _load(path)
    A, labels = loaded.brace, loaded.labels
    out: dict = {"order": A.order, "series": {}}
    for kind in [k.strip() for k in kinds.split(",") if k.strip()]:
        if kind not in _SERIES_FNS:
            click.echo(f"error: unknown series kind {kind!r}", err=True)
            sys.exit(2)
        rep = _SERIES_FNS[kind](A, max_n)
        out["series"][kind] = {
            "orders": rep.orders(),
            "terms": [sorted(t.members) for t in rep.terms],
        }
    ann = annihilator(A)
    tower = annihilator_series(A, max_n)
    out["annihilator"] = sorted(ann.members)
    out["annihilator_tower_orders"] = tower.orders()
    out["condition_4_2"] = condition_4_2_check(A)
    if as_json:
        click.echo(json.dumps(out, indent=1))
        return
    for kind, rep in out["series"].items():
        click.echo(f"{kind} series orders: {rep['orders']}")
        for i, t in enumerate(rep["terms"]):
            click.echo(f"  term {i + 1}: " + _members_list(t, labels))
    if len(ann) == A.order:
        click.echo("Ann = A")
    else:
        click.echo(f"Ann (order {len(ann)}): " + _members_list(sorted(ann.members), labels))
    click.echo(f"annihilator tower orders: {out['annihilator_tower_orders']}")
    click.echo(f"condition_4_2: {out['condition_4_2']}")


def _members_list(elems, labels=None) -> str:
    if labels:
        return "{" + ", ".join(labels[e] for e in elems) + "}"
    return "{" + ", ".join(str(e) for e in elems) + "}"


@main.command()
@click.argument("path", type=click.Path())
@click.option("--family", "family_name", default=None)
@click.option("--n", default=1, type=int)
@click.option("--word", "word_exprs", multiple=True)
def verbal(path, family_name, n, word_exprs):
    """Verbal sub-skew brace of a word collection."""
    loaded = _load(path)
    W = _collection(family_name, n, word_exprs)
    V = verbal_sub_skew_brace(loaded.brace, W)
    click.echo(f"V_{W.name} (order {len(V)}): " + _members(V, loaded.labels))


@main.command()
@click.argument("path", type=click.Path())
@click.option("--family", "family_name", default=None)
@click.option("--n", default=1, type=int)
@click.option("--word", "word_exprs", multiple=True)
def marginal(path, family_name, n, word_exprs):
    """Marginal left ideal, its core, and Ann_n containment for Wn."""
    loaded = _load(path)
    A, labels = loaded.brace, loaded.labels
    W = _collection(family_name, n, word_exprs)
    M = marginal_left_ideal(A, W)
    core = core_of(A, M)
    click.echo(f"M_{W.name} (order {len(M)}): " + _members(M, labels))
    click.echo(f"Core (order {len(core)}): " + _members(core, labels))
    if family_name == "Wn":
        ann_n = annihilator_series(A).term(n)
        click.echo(f"Ann_{n} contained in M: {ann_n.members <= M.members}")


@main.command()
@click.argument("path_a", type=click.Path())
@click.argument("path_b", type=click.Path())
@click.option("--family", "family_name", default="Wn")
@click.option("--n", default=1, type=int)
@click.option(
    "--quotient", default="core", type=click.Choice(["core", "ann"])
)
@click.option("--emit-witness", is_flag=True)
def isoclinic(path_a, path_b, family_name, n, quotient, emit_witness):
    """Search for a W-isoclinism witness between two braces."""
    A = _load(path_a).brace
    B = _load(path_b).brace
    W = _collection(family_name, n, ())
    kind = "core-of-marginal" if quotient == "core" else "annihilator-n"
    try:
        witness = w_isoclinism_search(A, B, W, kind)
    except SkewBraceError as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(2)
    if witness is None:
        click.echo("not isoclinic (search exhausted)")
        sys.exit(1)
    click.echo(f"isoclinic for {W.name} (quotient: {kind})")
    if emit_witness:
        click.echo(
            json.dumps(
                {
                    "xi": list(witness.xi.mapping),
                    "theta": list(witness.theta.mapping),
                }
            )
        )


@main.group()
def catalog():
    """Named example braces."""


@catalog.command("list")
def catalog_list():
    for name in catalog_names():
        click.echo(name)


@catalog.command("emit")
@click.argument("name")
@click.option("-o", "--output", default=None, type=click.Path())
@click.option("--p", default=3, type=int)
@click.option("--zeta", default="one", type=click.Choice(["one", "nonresidue"]))
def catalog_emit(name, output, p, zeta):
    try:
        A = catalog_brace(name, p=p, zeta_kind=zeta)
    except SkewBraceError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    path = output or name.replace(":", "-") + ".json"
    save_structure(path, A)
    click.echo(path)


@main.command("enumerate")
@click.option("--group", "group_name", required=True)
@click.option("--out", default=".", type=click.Path())
@click.option("--cap", default=16, type=int)
def enumerate_cmd(group_name, out, cap):
    """Enumerate all skew braces on a named group, one file each."""
    try:
        G = named_group(group_name)
    except KeyError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    try:
        braces = enumerate_braces_on(G, cap)
    except SkewBraceError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    outdir = Path(out)
    outdir.mkdir(parents=True, exist_ok=True)
    for i, A in enumerate(braces):
        path = outdir / f"{group_name}-brace-{i}.json"
        save_structure(path, A)
        click.echo(str(path))
    click.echo(f"{len(braces)} braces written")


@main.group()
def search():
    """Exhaustive searches over enumerated braces."""


@search.command("strict-inclusion")
@click.option("--max-order", default=8, type=int)
@click.option("--max-n", default=4, type=int)
def search_strict(max_order, max_n):
    try:
        report = search_strict_verbal_inclusion(max_order, max_n)
    except SkewBraceError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    if report.none_found:
        click.echo(f"none found ({report.examined} braces examined)")
    else:
        for gname, tag, nn in report.counterexamples:
            click.echo(f"strict inclusion: group={gname} series={tag} n={nn}")
        click.echo(f"{report.examined} braces examined")


@main.command("lv-isoclinic")
@click.argument("path_a", type=click.Path())
@click.argument("path_b", type=click.Path())
def lv_isoclinic_cmd(path_a, path_b):
    """Two-word 1-isoclinism check (quotient by the annihilator)."""
    A = _load(path_a).brace
    B = _load(path_b).brace
    witness = lv_isoclinic(A, B)
    if witness is None:
        click.echo("not 1-isoclinic (search exhausted)")
        sys.exit(1)
    click.echo(f"1-isoclinic (theta mode: {witness.theta_mode})")


if __name__ == "__main__":
    main()
