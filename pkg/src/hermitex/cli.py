"""Command-line front end: ``hermitex <subcommand> [--json]``."""
from __future__ import annotations

import functools
import math
import sys

import click

from . import __version__
from .diffop import HeatOperator, apply_heat_operator, as_parameter
from .errors import HermitexError
from .gausstransform import DEFAULT_TOL, DEFAULT_X_GRID, GaussParameter, gauss_numeric, gauss_symbolic, numeric_error
from .genfunc import SeriesTruncation, egf_partial, transformed_egf_partial
from .hermite import hermite_recurrence
from .polynomial import Polynomial, evaluate, to_float
from .polytext import format_polynomial, format_scalar, infer_ring, parse_polynomial
from .quadrature import build_rule
from .verify import SUITE_CHOICES, VerifyConfig, dumps, format_error, run_suites

EXIT_FAIL = 1
EXIT_ERROR = 2


class InputError(click.ClickException):
    exit_code = EXIT_ERROR


def _guard(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except HermitexError as exc:
            raise InputError(str(exc)) from exc
    return wrapper


json_flag = click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")


def _number(value):
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    return value


def _poly_payload(p: Polynomial) -> dict:
    return {
        "ring": p.ring.value,
        "degree": p.degree,
        "coefficients": [format_scalar(c) for c in p.coeffs],
        "text": format_polynomial(p),
    }


@click.group()
@click.version_option(__version__, prog_name="hermitex")
def cli():
    """Heat operator, Gauss transform and Hermite polynomial identities."""


@cli.command()
@click.option("--n", "n", type=int, required=True, help="Order of H_n.")
@json_flag
@_guard
def hermite(n, as_json):
    """Print the coefficients of the Hermite polynomial H_n."""
    p = hermite_recurrence(n)
    if as_json:
        click.echo(dumps({"n": n, **_poly_payload(p)}))
    else:
        click.echo(format_polynomial(p))


@cli.command("apply-w")
@click.option("--c", "c", required=True, help="Operator parameter c (rational, e.g. -1/4).")
@click.option("--poly", "poly", required=True, help='Ascending coefficients, e.g. "0,0,0,0,1".')
@json_flag
@_guard
def apply_w(c, poly, as_json):
    """Apply W(c) = exp(c d^2/dx^2) to a polynomial."""
    op = HeatOperator(as_parameter(c))
    p = parse_polynomial(poly, infer_ring(poly))
    out = apply_heat_operator(op, p)
    if as_json:
        click.echo(dumps({"c": str(op.c), "input": _poly_payload(p), "result": _poly_payload(out)}))
    else:
        click.echo(format_polynomial(out))


@cli.command()
@click.option("--u", "u", required=True, help="Transform parameter u (rational).")
@click.option("--poly", "poly", required=True, help="Ascending coefficients of the input polynomial.")
@click.option("--x", "x", type=float, default=None, help="Evaluate the transform at this point.")
@click.option("--numeric", is_flag=True, help="Also compute the value by quadrature (needs --x, u > 0).")
@json_flag
@_guard
def gauss(u, poly, x, numeric, as_json):
    """Gauss transform G^u of a polynomial."""
    param = GaussParameter(u)
    p = parse_polynomial(poly, infer_ring(poly))
    image = gauss_symbolic(p, param)
    if numeric and x is None:
        raise InputError("--numeric needs --x")
    payload = {"u": str(param.u), "input": _poly_payload(p), "result": _poly_payload(image)}
    lines = [format_polynomial(image)]
    if x is not None:
        symbolic_value = evaluate(image, x)
        payload["x"] = x
        payload["symbolic_value"] = _number(symbolic_value)
        lines.append(f"symbolic value at x={x!r}: {format_scalar(symbolic_value)}")
        if numeric:
            num = gauss_numeric(p if p.ring.is_exact else to_float(p), param, x)
            err = numeric_error(num, symbolic_value)
            payload["numeric_value"] = _number(num)
            payload["error"] = err
            lines.append(f"quadrature value: {format_scalar(num)}")
            lines.append(f"error: {format_error(err)}")
    click.echo(dumps(payload) if as_json else "\n".join(lines))


@cli.command()
@click.option("--m", "m", type=int, required=True, help="Number of nodes (1..500).")
@json_flag
@_guard
def quad(m, as_json):
    """Gauss-Hermite nodes and weights for exp(-t^2)."""
    rule = build_rule(m)
    if as_json:
        click.echo(dumps([{"node": t, "weight": w} for t, w in rule.pairs()]))
    else:
        for t, w in rule.pairs():
            click.echo(f"{t:+.16e}  {w:.16e}")


@cli.command()
@click.option("--x", "x", type=float, required=True)
@click.option("--t", "t", type=float, required=True)
@click.option("--nmax", "nmax", type=int, required=True, help="Truncation order N.")
@json_flag
@_guard
def genfunc(x, t, nmax, as_json):
    """Partial sums of the Hermite EGF and of its termwise Gauss transform."""
    trunc = SeriesTruncation(nmax, t, x)
    egf = egf_partial(trunc)
    tegf = transformed_egf_partial(trunc)
    closed = math.exp(2 * x * t - t * t)
    tclosed = math.exp(2 * x * t)
    payload = {
        "x": x,
        "t": t,
        "nmax": nmax,
        "egf_partial": egf,
        "egf_closed_form": closed,
        "egf_residual": abs(egf - closed),
        "transformed_egf_partial": tegf,
        "transformed_closed_form": tclosed,
        "transformed_residual": abs(tegf - tclosed),
    }
    if as_json:
        click.echo(dumps(payload))
    else:
        for key, value in payload.items():
            click.echo(f"{key:24s} {value!r}" if not isinstance(value, float) else f"{key:24s} {value:.17g}")


@cli.command()
@click.option("--suite", "suites", type=click.Choice(SUITE_CHOICES), multiple=True, default=("all",),
              show_default=True, help="Suite(s) to run; repeatable.")
@click.option("--nmax", "nmax", type=int, default=30, show_default=True)
@click.option("--tol", "tol", type=float, default=DEFAULT_TOL, show_default=True,
              help="Tolerance for NUMERIC rows.")
@click.option("--x-grid", "x_grid", default=None, help="Comma-separated evaluation points.")
@json_flag
@_guard
def verify(suites, nmax, tol, x_grid, as_json):
    """Run identity suites; exit status 0 iff every check passes."""
    grid = DEFAULT_X_GRID
    if x_grid is not None:
        try:
            grid = tuple(float(v) for v in x_grid.split(","))
        except ValueError:
            raise InputError(f"malformed --x-grid {x_grid!r}") from None
    report = run_suites(VerifyConfig(nmax=nmax, tol=tol, x_grid=grid, suites=tuple(suites)))
    click.echo(report.to_json() if as_json else report.to_text())
    if not report.overall_pass:
        sys.exit(EXIT_FAIL)


def main(argv=None):
    try:
        cli.main(args=argv, prog_name="hermitex")
    except SystemExit:
        raise
    except Exception as exc:  # noqa: BLE001
        click.echo(f"internal error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(3)


if __name__ == "__main__":
    main()
