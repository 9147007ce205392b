"""Identity suites, the verification report, and its JSON/text renderings."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import __version__
from .errors import ConfigError, IndexCapError
from .gausstransform import (
    DEFAULT_TOL,
    DEFAULT_X_GRID,
    IdentityId,
    Mode,
    TransformIdentityResult,
    numeric_error,
    verify_hermite_to_monomial,
    verify_monomial_to_modified_hermite,
    verify_operator_vs_integral,
)
from .genfunc import HERMITE_EGF, TRANSFORMED_HERMITE_EGF, SeriesPair, SeriesTruncation, partial_sum
from .hermite import check_index, hermite_integral_value, hermite_recurrence, hermite_via_operator
from .polynomial import Polynomial, evaluate
from .quadrature import build_rule, default_order

SUITE_ORDER = ("opdef", "eq1", "eq3a", "eq3b", "egf")
SUITE_CHOICES = SUITE_ORDER + ("all",)
QUADRATURE_POLICY = "m = ceil((d+1)/2) + 2 nodes for degree-d integrands"
FLOAT_FORMAT = ".17g"


@dataclass(frozen=True)
class VerifyConfig:
    nmax: int = 30
    tol: float = DEFAULT_TOL
    x_grid: tuple[float, ...] = DEFAULT_X_GRID
    suites: tuple[str, ...] = SUITE_ORDER
    heat_params: tuple[Fraction, ...] = (Fraction(1, 8), Fraction(1, 4), Fraction(1, 2))
    egf_order: int = 40
    egf_x: tuple[float, ...] = (-2.0, -1.0, 0.0, 1.0, 2.0)
    egf_t: tuple[float, ...] = (-1.0, -0.5, 0.0, 0.5, 1.0)

    def validate(self) -> None:
        if isinstance(self.nmax, bool) or not isinstance(self.nmax, int):
            raise ConfigError(f"nmax must be an integer, got {self.nmax!r}")
        try:
            check_index(self.nmax)
            check_index(self.egf_order)
        except IndexCapError as exc:
            raise ConfigError(str(exc)) from None
        if not (isinstance(self.tol, (int, float)) and math.isfinite(self.tol) and self.tol > 0):
            raise ConfigError(f"tol must be a positive finite number, got {self.tol!r}")
        if not self.x_grid or not all(math.isfinite(x) for x in self.x_grid):
            raise ConfigError("x_grid must be a nonempty sequence of finite floats")
        unknown = [s for s in self.suites if s not in SUITE_ORDER]
        if unknown or not self.suites:
            raise ConfigError(f"unknown suite(s) {unknown}; choose from {', '.join(SUITE_CHOICES)}")
        if any(c <= 0 for c in self.heat_params):
            raise ConfigError("heat parameters for the integral suite must be positive")

    def as_dict(self) -> dict:
        return {
            "nmax": self.nmax,
            "tol": self.tol,
            "x_grid": list(self.x_grid),
            "suites": list(self.suites),
            "heat_params": [str(c) for c in self.heat_params],
            "egf_order": self.egf_order,
            "egf_x": list(self.egf_x),
            "egf_t": list(self.egf_t),
            "quadrature_policy": QUADRATURE_POLICY,
        }


def expand_suites(names: Iterable[str]) -> tuple[str, ...]:
    chosen = set()
    for name in names:
        chosen.update(SUITE_ORDER if name == "all" else (name,))
    return tuple(s for s in SUITE_ORDER if s in chosen) + tuple(
        sorted(s for s in chosen if s not in SUITE_ORDER)
    )


@dataclass(frozen=True)
class SuiteRow:
    suite: str
    result: TransformIdentityResult

    def as_dict(self) -> dict:
        return {"suite": self.suite, **self.result.as_dict()}


@dataclass(frozen=True)
class VerificationReport:
    rows: tuple[SuiteRow, ...]
    config: VerifyConfig
    tool_version: str = __version__
    overall_pass: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "overall_pass", all(r.result.passed for r in self.rows))

    @property
    def suite_results(self) -> list[TransformIdentityResult]:
        return [r.result for r in self.rows]

    def suite_passes(self) -> dict[str, bool]:
        out: dict[str, bool] = {}
        for row in self.rows:
            out[row.suite] = out.get(row.suite, True) and row.result.passed
        return out

    def as_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "config": self.config.as_dict(),
            "suite_results": [r.as_dict() for r in self.rows],
            "suites": self.suite_passes(),
            "overall_pass": self.overall_pass,
        }

    def to_json(self) -> str:
        return dumps(self.as_dict())

    def to_text(self) -> str:
        header = ("suite", "identity_id", "n", "mode", "max_error", "tolerance", "status")
        body = [
            (
                r.suite,
                r.result.identity_id.value,
                str(r.result.n),
                r.result.mode.value,
                format_error(r.result.max_error),
                format_error(r.result.tolerance),
                "PASS" if r.result.passed else "FAIL",
            )
            for r in self.rows
        ]
        widths = [max(len(row[i]) for row in [header, *body]) for i in range(len(header))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in [header, *body]]
        lines.append("")
        for suite, ok in self.suite_passes().items():
            lines.append(f"suite {suite}: {'PASS' if ok else 'FAIL'}")
        lines.append(f"overall: {'PASS' if self.overall_pass else 'FAIL'} (hermitex {self.tool_version})")
        return "\n".join(lines)


def format_error(x: float) -> str:
    """ASCII scientific notation with explicit sign, 17 significant digits."""
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "+inf" if x > 0 else "-inf"
    return f"{x:+.16e}"


def _encode_floats(obj, table: list[str]):
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return None
        table.append(format(obj, FLOAT_FORMAT))
        return f"\x00F{len(table) - 1}\x00"
    if isinstance(obj, dict):
        return {k: _encode_floats(v, table) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode_floats(v, table) for v in obj]
    return obj


def dumps(obj) -> str:
    """JSON with every float written at 17 significant digits (non-finite -> null)."""
    table: list[str] = []
    text = json.dumps(_encode_floats(obj, table), indent=2, ensure_ascii=True)
    for i, literal in enumerate(table):
        text = text.replace(f'"\\u0000F{i}\\u0000"', literal, 1)
    return text


# -- suites -------------------------------------------------------------------


def _opdef_rows(cfg: VerifyConfig) -> list[TransformIdentityResult]:
    rows = []
    for n in range(cfg.nmax + 1):
        ok = hermite_via_operator(n) == hermite_recurrence(n)
        rows.append(TransformIdentityResult(IdentityId.OPERATOR_DEFINITION, n, Mode.EXACT, 0.0 if ok else math.inf, ok, 0.0))
    return rows


def integral_rep_row(n: int, x_grid: Sequence[float], tol: float) -> TransformIdentityResult:
    """H_n from the contour-shifted integral vs the exact polynomial on x_grid.

    Real and imaginary residues both count toward the error.
    """
    rule = build_rule(n + 2)
    h = hermite_recurrence(n)
    pref = 2.0 ** n / math.sqrt(math.pi)
    worst = 0.0
    for x in x_grid:
        z = hermite_integral_value(n, x, rule)
        mass = pref * math.fsum(w * abs(complex(x, t)) ** n for t, w in zip(rule.nodes, rule.weights))
        expected = evaluate(h, float(x))
        worst = max(worst, numeric_error(z.real, expected, mass), abs(z.imag) / max(1.0, abs(z.real)))
    return TransformIdentityResult(IdentityId.INTEGRAL_REPRESENTATION, n, Mode.NUMERIC, worst, worst <= tol, tol)


def _eq1_rows(cfg: VerifyConfig) -> list[TransformIdentityResult]:
    rows = []
    for n in range(cfg.nmax + 1):
        p = Polynomial.monomial(n)
        rule = build_rule(default_order(n))
        worst = max(
            verify_operator_vs_integral(p, c, cfg.x_grid, cfg.tol, rule).max_error
            for c in cfg.heat_params
        )
        rows.append(TransformIdentityResult(IdentityId.OPERATOR_VS_INTEGRAL, n, Mode.NUMERIC, worst, worst <= cfg.tol, cfg.tol))
    for n in range(cfg.nmax + 1):
        rows.append(integral_rep_row(n, cfg.x_grid, cfg.tol))
    return rows


def _eq3_rows(check: Callable[..., TransformIdentityResult], cfg: VerifyConfig) -> list[TransformIdentityResult]:
    rows = []
    for n in range(cfg.nmax + 1):
        rows.append(check(n, Mode.EXACT))
        rows.append(check(n, Mode.NUMERIC, cfg.x_grid, cfg.tol))
    return rows


def egf_row(pair: SeriesPair, identity: IdentityId, cfg: VerifyConfig) -> TransformIdentityResult:
    worst = 0.0
    for x in cfg.egf_x:
        for t in cfg.egf_t:
            trunc = SeriesTruncation(cfg.egf_order, t, x)
            worst = max(worst, numeric_error(partial_sum(pair, trunc), pair.closed_form(x, t)))
    return TransformIdentityResult(identity, cfg.egf_order, Mode.NUMERIC, worst, worst <= cfg.tol, cfg.tol)


def _egf_rows(cfg: VerifyConfig) -> list[TransformIdentityResult]:
    return [
        egf_row(HERMITE_EGF, IdentityId.EGF, cfg),
        egf_row(TRANSFORMED_HERMITE_EGF, IdentityId.TRANSFORMED_EGF, cfg),
    ]


SUITES: dict[str, Callable[[VerifyConfig], list[TransformIdentityResult]]] = {
    "opdef": _opdef_rows,
    "eq1": _eq1_rows,
    "eq3a": lambda cfg: _eq3_rows(verify_hermite_to_monomial, cfg),
    "eq3b": lambda cfg: _eq3_rows(verify_monomial_to_modified_hermite, cfg),
    "egf": _egf_rows,
}


def run_suites(config: VerifyConfig | None = None) -> VerificationReport:
    """Validate the config, then run the selected suites in their fixed order."""
    cfg = config or VerifyConfig()
    cfg = VerifyConfig(**{**cfg.__dict__, "suites": expand_suites(cfg.suites)})
    cfg.validate()
    rows = []
    for name in cfg.suites:
        rows.extend(SuiteRow(name, r) for r in SUITES[name](cfg))
    return VerificationReport(tuple(rows), cfg)
