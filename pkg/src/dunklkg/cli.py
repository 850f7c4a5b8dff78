"""Command-line surface: spectra, density profiles, time evolution,
published-table regression, and the verification suite.

Output is byte-deterministic for a fixed invocation: CSV numerics use 9
significant digits, JSON numbers are emitted with Python's shortest
round-trip repr (<= 17 significant digits).  The DUNKLKG_FORMAT
environment variable sets the default output format; a config file passed
via --config holds key=value lines whose values override the
corresponding flags.
"""

from __future__ import annotations

import json
import os
import sys
from typing import List, Optional

import click

from .coherent import PhaseConvention, build_profile
from .errors import DunklKGError, NormalizationError
from .model import CurvatureCase, PhysParams, parse_alpha, parse_complex
from .refdata import TABLES, compare_reference
from .spectrum import spectrum_table, table_to_csv, table_to_json
from .verify import report_to_json, run_verification

ENV_FORMAT = "DUNKLKG_FORMAT"


def _parse_n_list(spec: str) -> List[int]:
    """'0..5' (inclusive range), '0,2,5', or a single integer."""
    try:
        spec = spec.strip()
        if ".." in spec:
            lo, hi = spec.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
            if hi_i < lo_i:
                raise ValueError("empty range")
            return list(range(lo_i, hi_i + 1))
        values = [int(tok) for tok in spec.split(",") if tok.strip()]
        if not values:
            raise ValueError("no entries")
        return values
    except ValueError as exc:
        raise click.UsageError(f"bad n specification {spec!r}: {exc}") from exc


def _parse_tau_list(spec: str) -> List[float]:
    try:
        values = [float(tok) for tok in spec.split(",") if tok.strip()]
        if not values:
            raise ValueError("no entries")
        return values
    except ValueError as exc:
        raise click.UsageError(f"bad tau specification {spec!r}: {exc}") from exc


def _numeric(vals: dict, key: str, kind=float):
    """Convert a (possibly config-supplied) value; malformed input is a usage error."""
    try:
        return kind(vals[key])
    except ValueError as exc:
        raise click.UsageError(f"bad value for {key}: {vals[key]!r}") from exc


def _load_config(path: Optional[str]) -> dict:
    """key=value lines; '#' starts a comment.  Values override flags."""
    if path is None:
        return {}
    overrides = {}
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise click.UsageError(f"config line {raw.rstrip()!r} is not key=value")
            key, value = line.split("=", 1)
            overrides[key.strip().replace("-", "_")] = value.strip()
    return overrides


def _apply_config(config: dict, **values):
    """Return values with config-file overrides applied."""
    out = dict(values)
    for key, raw in config.items():
        if key not in out:
            raise click.UsageError(f"unknown config key {key!r}")
        out[key] = raw
    return out


def _default_format() -> str:
    fmt = os.environ.get(ENV_FORMAT, "csv").lower()
    return fmt if fmt in ("csv", "json") else "csv"


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _fail(exc: Exception) -> "click.exceptions.Exit":
    click.echo(f"error: {exc}", err=True)
    return click.exceptions.Exit(1)


@click.group()
def cli():
    """Complex spectra, radial eigenfunctions and su(1,1) coherent states
    of the canonical Dunkl-Klein-Gordon equation."""


@cli.command("spectrum")
@click.option("--case", "case_name", default="gaussian", show_default=True,
              type=click.Choice([c.value for c in CurvatureCase]))
@click.option("--alpha", "alpha_text", required=True, multiple=True,
              help="half-odd rational 'p/2'; repeatable")
@click.option("--n", "n_spec", default="0..5", show_default=True,
              help="'lo..hi' or comma list")
@click.option("--R", "-R", "curvature", default=1.0, show_default=True, type=float)
@click.option("--m", "mass", default=1.0, show_default=True, type=float)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default=None)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
@click.option("-o", "--output", default=None, help="write to file instead of stdout")
def cmd_spectrum(case_name, alpha_text, n_spec, curvature, mass, fmt, config_path, output):
    """Emit the complex energy table for the chosen case."""
    cfg = _load_config(config_path)
    vals = _apply_config(
        cfg,
        case=case_name,
        alpha=",".join(alpha_text),
        n=n_spec,
        R=str(curvature),
        m=str(mass),
        format=fmt or _default_format(),
    )
    try:
        case = CurvatureCase.from_name(vals["case"])
        alphas = [parse_alpha(tok) for tok in vals["alpha"].split(",") if tok.strip()]
        n_list = _parse_n_list(vals["n"])
        R, m = _numeric(vals, "R"), _numeric(vals, "m")
        if R < 0 or m <= 0:
            raise click.UsageError(f"need R >= 0 and m > 0, got R={R}, m={m}")
        table = spectrum_table(case, alphas, max(n_list), R, m)
    except click.UsageError:
        raise
    except DunklKGError as exc:
        raise click.UsageError(str(exc)) from exc
    except (ValueError, OverflowError) as exc:
        raise _fail(exc) from exc
    wanted = set(n_list)
    table = type(table)(
        case=table.case, R=table.R, m=table.m,
        rows=tuple(row for row in table.rows if row[1] in wanted),
    )
    text = table_to_csv(table) if vals["format"] == "csv" else table_to_json(table)
    _emit(text, output)


@cli.command("table")
@click.option("--reproduce", "table_id", required=True,
              type=click.Choice(sorted(TABLES)))
@click.option("--tol", default=1e-2, show_default=True, type=float)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default=None)
@click.option("-o", "--output", default=None)
def cmd_table(table_id, tol, fmt, output):
    """Regenerate a published reference table and diff it entrywise.

    Exits 0 iff every component deviation is within --tol.
    """
    fmt = fmt or _default_format()
    try:
        cmp = compare_reference(table_id, tol)
    except DunklKGError as exc:
        raise _fail(exc) from exc
    if fmt == "json":
        payload = {
            "table": cmp.table,
            "case": cmp.case.value,
            "tolerance": cmp.tolerance,
            "max_deviation": cmp.max_deviation,
            "passed": cmp.passed,
            "entries": list(cmp.entries),
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [
            f"# table={cmp.table} case={cmp.case.value} tolerance={format(cmp.tolerance, '.9g')} "
            f"max_deviation={format(cmp.max_deviation, '.9g')} passed={str(cmp.passed).lower()}",
            "alpha,n,branch,computed_re,computed_im,reference_re,reference_im,deviation",
        ]
        for e in cmp.entries:
            lines.append(
                ",".join(
                    [
                        e["alpha"],
                        str(e["n"]),
                        e["branch"],
                        format(e["computed_re"], ".9g"),
                        format(e["computed_im"], ".9g"),
                        format(e["reference_re"], ".9g"),
                        format(e["reference_im"], ".9g"),
                        format(e["deviation"], ".9g"),
                    ]
                )
            )
        text = "\n".join(lines) + "\n"
    _emit(text, output)
    if not cmp.passed:
        raise click.exceptions.Exit(1)


def _profile_command(evolved: bool):
    @click.option("--case", "case_name", default="gaussian", show_default=True,
                  type=click.Choice([c.value for c in CurvatureCase]))
    @click.option("--alpha", "alpha_text", required=True)
    @click.option("--xi", "xi_text", required=True, help="complex literal, e.g. 0.5+0.2i")
    @click.option("--n", "n_spec", default="0", show_default=True)
    @click.option("--tau", "tau_spec", default="0" if not evolved else None,
                  required=evolved, help="comma list of evolution times")
    @click.option("--branch", type=click.Choice(["plus", "minus"]), default=None,
                  help="spectral branch (required for rational/sinc)")
    @click.option("--phase-convention", "convention",
                  type=click.Choice([c.value for c in PhaseConvention]),
                  default=PhaseConvention.CORRECTED.value, show_default=True)
    @click.option("--R", "-R", "curvature", default=1.0, show_default=True, type=float)
    @click.option("--m", "mass", default=1.0, show_default=True, type=float)
    @click.option("--x-min", default=0.01, show_default=True, type=float)
    @click.option("--x-max", default=2.0, show_default=True, type=float)
    @click.option("--points", default=400, show_default=True, type=int)
    @click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default=None)
    @click.option("--config", "config_path", type=click.Path(exists=True), default=None)
    @click.option("-o", "--output", default=None)
    def command(case_name, alpha_text, xi_text, n_spec, tau_spec, branch, convention,
                curvature, mass, x_min, x_max, points, fmt, config_path, output):
        cfg = _load_config(config_path)
        vals = _apply_config(
            cfg,
            case=case_name,
            alpha=alpha_text,
            xi=xi_text,
            n=n_spec,
            tau=tau_spec if tau_spec is not None else "0",
            branch=branch or "",
            phase_convention=convention,
            R=str(curvature),
            m=str(mass),
            x_min=str(x_min),
            x_max=str(x_max),
            points=str(points),
            format=fmt or _default_format(),
        )
        try:
            case = CurvatureCase.from_name(vals["case"])
            alpha = parse_alpha(vals["alpha"])
            xi = parse_complex(vals["xi"])
            if abs(xi) >= 1.0:
                raise click.UsageError(f"|xi| must be < 1, got |xi| = {abs(xi)}")
            n_list = _parse_n_list(vals["n"])
            tau_list = _parse_tau_list(vals["tau"])
            branch_val = vals["branch"] or None
            if case is not CurvatureCase.GAUSSIAN and branch_val is None:
                raise click.UsageError(
                    f"case {case.value} requires --branch plus|minus"
                )
            R, m = _numeric(vals, "R"), _numeric(vals, "m")
            # profile evaluation needs the full validated physical triple
            PhysParams(alpha=alpha, R=R, m=m)
            profiles = [
                build_profile(
                    case, alpha, n, xi,
                    R=R, m=m, branch=branch_val,
                    tau=tau, phase_convention=PhaseConvention.from_name(vals["phase_convention"]),
                    x_min=_numeric(vals, "x_min"), x_max=_numeric(vals, "x_max"),
                    points=_numeric(vals, "points", int), evolved=evolved,
                )
                for n in n_list
                for tau in tau_list
            ]
        except click.UsageError:
            raise
        except NormalizationError as exc:
            raise _fail(exc) from exc
        except DunklKGError as exc:
            raise click.UsageError(str(exc)) from exc
        except (ValueError, OverflowError) as exc:
            raise _fail(exc) from exc
        for profile in profiles:
            if profile.meta.get("warning"):
                click.echo(f"warning: {profile.meta['warning']}", err=True)
        if vals["format"] == "json":
            text = json.dumps({"profiles": [p.to_json_obj() for p in profiles]}, indent=2) + "\n"
        else:
            text = "\n".join(p.to_csv() for p in profiles)
        _emit(text, output)

    return command


cmd_density = cli.command("density")(_profile_command(evolved=False))
cmd_density.help = "Emit normalized density profiles, one block per (n, tau)."
cmd_evolve = cli.command("evolve")(_profile_command(evolved=True))
cmd_evolve.help = "Emit time-evolved normalized density profiles."


@cli.command("verify")
@click.option("--suite", default=None, help="substring filter on check names")
@click.option("--grid-h", default=1e-3, show_default=True, type=float)
@click.option("-o", "--output", default=None)
def cmd_verify(suite, grid_h, output):
    """Run the verification suite; exit 0 iff every assertable check passes.

    Measured-only diagnostics (commutators, ladder collinearity, peak
    trends) are included in the JSON report but never affect the exit code.
    """
    try:
        report = run_verification(grid_h=grid_h, suite=suite)
    except DunklKGError as exc:
        raise click.UsageError(str(exc)) from exc
    _emit(report_to_json(report), output)
    if not report["passed"]:
        raise click.exceptions.Exit(1)


def main():
    cli(prog_name="dunklkg")


if __name__ == "__main__":
    main()
