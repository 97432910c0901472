"""Command-line interface.

Usage:
    powerlimits limit --family gl --n 2 --M 2 --q 3
    powerlimits limit --family sl --n 2 --M 2 --residue 1
    powerlimits limits-all --family u --n 3 --M 3
    powerlimits census --family gl --n 2 --q 3 --M 2 --format json
    powerlimits abelian --factors 4,6 --M 2
    powerlimits surjective --n 2 --q 7 --M 5
    powerlimits verify --family gl --n 2 --q 5 --M 2 --bound 2

Exit codes: 0 success, 1 failed verification, 2 invalid input, 3 resource cap.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import click

from . import __version__
from .asymptotics import (
    abelian_power_ratio,
    limit_proportion,
    limit_proportion_residue,
    subsequential_limits,
    surjectivity_report,
)
from .errors import CapExceededError, ValidationError
from .oracle.census import ABELIAN_CAP, abelian_census, census, default_threads
from .oracle.groups import DEFAULT_ORDER_CAP
from .partitions import DEFAULT_PARTITION_CAP
from .report import abelian_doc, census_doc, frac_json, limit_doc, limits_all_doc, render, surjective_doc
from .tori import GroupFamily, load_custom_tori

EXIT_VERIFY_FAILED = 1
EXIT_VALIDATION = 2
EXIT_CAP = 3

FAMILY_CHOICES = ("gl", "sl", "u", "custom")


def _family(name: str, n: int | None, tori: Path | None) -> GroupFamily:
    if name == "custom":
        if tori is None:
            raise ValidationError("--family custom requires --tori")
        return load_custom_tori(Path(tori).read_text())
    if n is None:
        raise ValidationError(f"--family {name} requires --n")
    if n > DEFAULT_PARTITION_CAP:
        raise ValidationError(f"n={n} exceeds the partition cap {DEFAULT_PARTITION_CAP}")
    return GroupFamily(name.upper(), n)


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text)


def _run(fn):
    """Map library errors onto the stable exit codes."""
    try:
        return fn()
    except CapExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        if exc.predicted is not None:
            click.echo(f"predicted order: {exc.predicted}", err=True)
        sys.exit(EXIT_CAP)
    except ValidationError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)


def output_options(f):
    f = click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None,
                     help="Write to this file instead of standard output.")(f)
    f = click.option("--decimals", type=click.IntRange(min=0), default=None,
                     help="Also show values rounded to this many decimal places.")(f)
    f = click.option("--format", "fmt", type=click.Choice(["table", "json", "csv"]), default="table")(f)
    return f


def oracle_options(f):
    f = click.option("--threads", type=click.IntRange(min=1), default=None,
                     help="Worker processes for the census (default: available CPUs).")(f)
    f = click.option("--max-order", type=click.IntRange(min=1), default=DEFAULT_ORDER_CAP, show_default=True,
                     help="Refuse to enumerate groups larger than this.")(f)
    return f


@click.group()
@click.version_option(__version__, prog_name="powerlimits")
def cli():
    """Limiting proportions of M-th powers in finite reductive groups."""


@cli.command("limit")
@click.option("--family", type=click.Choice(FAMILY_CHOICES), required=True)
@click.option("--tori", type=click.Path(exists=True, dir_okay=False, path_type=Path), default=None)
@click.option("--n", type=click.IntRange(min=1), default=None)
@click.option("--M", "M", type=click.IntRange(min=2), required=True)
@click.option("--q", type=int, default=None)
@click.option("--residue", type=int, default=None)
@output_options
def limit_cmd(family, tori, n, M, q, residue, fmt, decimals, out):
    """Exact limit of |G^M|/|G| at a given q or along q = residue mod M."""

    def go():
        if (q is None) == (residue is None):
            raise ValidationError("give exactly one of --q and --residue")
        fam = _family(family, n, tori)
        report = limit_proportion(fam, M, q) if q is not None else limit_proportion_residue(fam, M, residue)
        _emit(render(limit_doc(report), fmt, decimals), out)

    _run(go)


@cli.command("limits-all")
@click.option("--family", type=click.Choice(["gl", "u"]), required=True)
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--M", "M", type=click.IntRange(min=2), required=True)
@output_options
def limits_all_cmd(family, n, M, fmt, decimals, out):
    """Every subsequential limit as q grows, for prime M."""

    def go():
        limits = subsequential_limits(_family(family, n, None), M)
        _emit(render(limits_all_doc(limits), fmt, decimals), out)

    _run(go)


def _census_and_limit(family, n, q, M, max_order, threads):
    fam = _family(family, n, None)
    counts = census(fam.kind, n, q, M, threads=threads or default_threads(), max_order=max_order)
    return counts, limit_proportion(fam, M, q).value


@cli.command("census")
@click.option("--family", type=click.Choice(["gl", "sl", "u"]), required=True)
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--q", type=int, required=True)
@click.option("--M", "M", type=click.IntRange(min=2), required=True)
@oracle_options
@output_options
def census_cmd(family, n, q, M, max_order, threads, fmt, decimals, out):
    """Brute-force counts of M-th powers compared with the limit formula."""

    def go():
        counts, lim = _census_and_limit(family, n, q, M, max_order, threads)
        _emit(render(census_doc(counts, lim), fmt, decimals), out)

    _run(go)


def _parse_factors(text: str) -> list[int]:
    try:
        factors = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ValidationError(f"--factors must be comma-separated integers, got {text!r}") from None
    if not factors:
        raise ValidationError("--factors needs at least one value")
    return factors


@cli.command("abelian")
@click.option("--factors", required=True, help="Cyclic factor orders d1,d2,...")
@click.option("--M", "M", type=click.IntRange(min=2), required=True)
@output_options
def abelian_cmd(factors, M, fmt, decimals, out):
    """|H^M|/|H| for H = C_d1 x ... x C_ds, by formula and by direct count."""

    def go():
        ds = _parse_factors(factors)
        formula = abelian_power_ratio(ds, M)
        try:
            counted = abelian_census(ds, M, ABELIAN_CAP)
        except CapExceededError:
            counted = None
        _emit(render(abelian_doc(ds, M, formula, counted), fmt, decimals), out)

    _run(go)


@cli.command("surjective")
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--q", type=int, required=True)
@click.option("--M", "M", type=int, required=True)
@output_options
def surjective_cmd(n, q, M, fmt, decimals, out):
    """Whether x -> x^M is onto GL(n,q), for prime M."""

    def go():
        _emit(render(surjective_doc(surjectivity_report(n, q, M)), fmt, decimals), out)

    _run(go)


@cli.command("verify")
@click.option("--family", type=click.Choice(["gl", "sl", "u"]), required=True)
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--q", type=int, required=True)
@click.option("--M", "M", type=click.IntRange(min=2), required=True)
@click.option("--bound", type=str, default="2", show_default=True,
              help="Allowed value of q * |proportion - limit| (integer or fraction).")
@oracle_options
@output_options
def verify_cmd(family, n, q, M, bound, max_order, threads, fmt, decimals, out):
    """Census vs limit gate: fail unless every proportion is within bound/q of the limit."""

    def go():
        try:
            c = Fraction(bound)
        except (ValueError, ZeroDivisionError):
            raise ValidationError(f"--bound must be a number, got {bound!r}") from None
        counts, lim = _census_and_limit(family, n, q, M, max_order, threads)
        checks = []
        for name, p in counts.proportions().items():
            scaled = q * abs(p - lim)
            checks.append({"quantity": name, "proportion": frac_json(p),
                           "scaled_deviation": frac_json(scaled), "ok": scaled <= c})
        passed = all(ch["ok"] for ch in checks)
        doc = {
            "command": "verify",
            "version": __version__,
            "family": counts.family,
            "n": str(n),
            "q": str(q),
            "M": str(M),
            "bound": str(c),
            "limit": frac_json(lim),
            "checks": checks,
            "passed": passed,
        }
        _emit(render(doc, fmt, decimals), out)
        if not passed:
            sys.exit(EXIT_VERIFY_FAILED)

    _run(go)


def main():
    cli(prog_name="powerlimits")


if __name__ == "__main__":
    main()
