"""Acceptance criteria, one test each, with their tolerances and runtime budgets.

Run ``pytest tests/test_acceptance.py`` (a summary line per criterion is
printed at the end of the session) or ``python tests/test_acceptance.py``.
"""
import json
import math
import os
import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

from hermitex.diffop import HeatOperator, apply_heat_operator, invert
from hermitex.gausstransform import (
    DEFAULT_X_GRID,
    Mode,
    gauss_numeric,
    verify_hermite_to_monomial,
    verify_monomial_to_modified_hermite,
)
from hermitex.genfunc import SeriesTruncation, egf_partial, transformed_egf_partial
from hermitex.hermite import hermite_integral_value, hermite_recurrence, hermite_via_operator
from hermitex.polynomial import Polynomial, evaluate
from hermitex.quadrature import build_rule, gaussian_moment, integrate

ROOT = Path(__file__).resolve().parents[1]
SCHEMA = json.loads((ROOT / "docs" / "report.schema.json").read_text())

RESULTS = {}


def record(key, name, ok, detail, elapsed, budget):
    ok = ok and elapsed < budget
    RESULTS[key] = f"[{key}] {'PASS' if ok else 'FAIL'}  {name}: {detail}; {elapsed:.2f}s (budget {budget:g}s)"
    return ok


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def test_c1_operator_definition():
    def body():
        return [n for n in range(51) if hermite_via_operator(n) != hermite_recurrence(n)]

    bad, dt = timed(body)
    assert record(1, "2^n W(-1/4) x^n == recurrence H_n, n<=50", not bad, f"mismatches={bad}", dt, 5)


def test_c2_eq3_exact():
    def body():
        rows = []
        for n in range(31):
            rows.append(verify_hermite_to_monomial(n, Mode.EXACT))
            rows.append(verify_monomial_to_modified_hermite(n, Mode.EXACT))
        return rows

    rows, dt = timed(body)
    ok = all(r.passed and r.max_error == 0.0 for r in rows)
    assert record(2, "G^1/2 identities EXACT, n<=30", ok, f"{len(rows)} rows, max_error={max(r.max_error for r in rows)}", dt, 5)


def test_c3_operator_vs_integral():
    grid = sorted(set(DEFAULT_X_GRID) | {float(k) for k in range(-3, 4)})

    def body():
        worst = 0.0
        for c in (Fraction(1, 8), Fraction(1, 4), Fraction(1, 2)):
            op = HeatOperator(c)
            for n in range(13):
                p = Polynomial.monomial(n)
                lhs = apply_heat_operator(op, p)
                for x in grid:
                    value = evaluate(lhs, x)
                    quad = gauss_numeric(p, 2 * c, x)
                    worst = max(worst, abs(value - quad) / max(1.0, abs(value)))
        return worst

    worst, dt = timed(body)
    assert record(3, "W(c)x^n vs kernel quadrature, rel err <= 1e-10", worst <= 1e-10, f"max={worst:.3e}", dt, 5)


def test_c4_integral_representation():
    def body():
        worst_re = worst_im = 0.0
        for n in range(21):
            rule = build_rule(n + 2)
            h = hermite_recurrence(n)
            for x in DEFAULT_X_GRID:
                exact = evaluate(h, x)
                z = hermite_integral_value(n, x, rule)
                worst_re = max(worst_re, abs(z.real - exact) / max(1.0, abs(exact)))
                worst_im = max(worst_im, abs(z.imag) / max(1.0, abs(z.real)))
        return worst_re, worst_im

    (re_err, im_err), dt = timed(body)
    ok = re_err <= 1e-9 and im_err <= 1e-10
    assert record(4, "contour-shifted integral == H_n(x), n<=20", ok, f"rel={re_err:.3e} imag={im_err:.3e}", dt, 2)


def test_c5_quadrature():
    def body():
        worst_moment = worst_sym = 0.0
        positive = True
        for m in (2, 5, 10, 20, 40):
            rule = build_rule(m)
            positive &= all(w > 0 for w in rule.weights)
            worst_sym = max(worst_sym, max(abs(rule.nodes[i] + rule.nodes[m - 1 - i]) for i in range(m)))
            for j in range(2 * m):
                closed = gaussian_moment(j)
                err = abs(integrate(lambda t: t ** j, rule) - closed) / max(1.0, closed)
                worst_moment = max(worst_moment, err)
        return worst_moment, worst_sym, positive

    (moment, sym, positive), dt = timed(body)
    ok = moment <= 1e-11 and sym <= 1e-12 and positive
    assert record(5, "Gauss-Hermite moments/symmetry/positivity", ok, f"moment={moment:.3e} sym={sym:.1e} positive={positive}", dt, 2)


def test_c6_semigroup_and_inversion():
    rng = random.Random(20261018)

    def rational():
        return Fraction(rng.randint(-60, 60), rng.randint(1, 40))

    def body():
        failures = 0
        for _ in range(100):
            p = Polynomial([rational() for _ in range(rng.randint(0, 30) + 1)])
            c1, c2 = rational(), rational()
            w1, w2 = HeatOperator(c1), HeatOperator(c2)
            if apply_heat_operator(HeatOperator(c1 + c2), p) != apply_heat_operator(w2, apply_heat_operator(w1, p)):
                failures += 1
            if apply_heat_operator(invert(w1), apply_heat_operator(w1, p)) != p:
                failures += 1
        return failures

    failures, dt = timed(body)
    assert record(6, "semigroup + inversion on 100 random polys", failures == 0, f"failures={failures}", dt, 5)


def test_c7_generating_functions():
    xs = [-2 + 0.5 * k for k in range(9)]
    ts = [-1 + 0.25 * k for k in range(9)]

    def body():
        worst_egf = worst_t = 0.0
        for x in xs:
            for t in ts:
                trunc = SeriesTruncation(40, t, x)
                worst_egf = max(worst_egf, abs(egf_partial(trunc) - math.exp(2 * x * t - t * t)))
                worst_t = max(worst_t, abs(transformed_egf_partial(trunc) - math.exp(2 * x * t)))
        return worst_egf, worst_t

    (e1, e2), dt = timed(body)
    ok = e1 <= 1e-8 and e2 <= 1e-8
    assert record(7, "EGF residuals at N=40", ok, f"egf={e1:.3e} transformed={e2:.3e}", dt, 2)


def _cli(*args):
    env = dict(os.environ)
    env.pop("HERMITEX_CAP", None)
    return subprocess.run([sys.executable, "-m", "hermitex", *args], capture_output=True, text=True, env=env)


def test_c8_cli_contract():
    jsonschema = pytest.importorskip("jsonschema")

    def body():
        good = _cli("verify", "--suite", "all", "--nmax", "30", "--json")
        bad = _cli("verify", "--suite", "all", "--nmax", "30", "--tol", "1e-30", "--json")
        return good, bad

    (good, bad), dt = timed(body)
    report = json.loads(good.stdout)
    jsonschema.validate(report, SCHEMA)
    failed = json.loads(bad.stdout)
    jsonschema.validate(failed, SCHEMA)
    exact_ok = all(r["passed"] for r in failed["suite_results"] if r["mode"] == "EXACT")
    numeric_suites = {r["suite"] for r in failed["suite_results"] if r["mode"] == "NUMERIC"}
    numeric_flipped = all(not failed["suites"][s] for s in numeric_suites)
    ok = (
        good.returncode == 0
        and report["overall_pass"]
        and bad.returncode != 0
        and not failed["overall_pass"]
        and exact_ok
        and numeric_flipped
    )
    detail = f"exit={good.returncode}/{bad.returncode} exact_ok={exact_ok} numeric_flipped={sorted(numeric_suites)}"
    assert record(8, "CLI verify contract", ok, detail, dt, 10)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
