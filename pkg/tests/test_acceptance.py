"""Acceptance criteria, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly:
``python tests/test_acceptance.py``.
"""
import math
import subprocess
import sys
import time

import numpy as np
import pytest

from conftest import DE_VALUES, M_VALUES, RHO_E_VALUES, record
from radial2d import (
    Family,
    MolecularParams,
    PhysicalContext,
    PotentialSpec,
    RadialEvaluator,
    build_operator,
    default_grid,
    energy,
    factorial_form_normalization,
    from_molecular,
    gamma_normalization,
    lowest_eigenvalue,
    match_residuals,
    quadrature_norm,
    residual_scan,
    solve_coefficients,
    wavefunction,
)
from radial2d.cli import main as cli_main
from radial2d.oracle import relative_delta, support_points

UNIT = PhysicalContext()
PH, KR = Family.PSEUDOHARMONIC, Family.KRATZER
REL_TOL = 1e-5
ORDER_BAND = 0.2  # |log2(gap ratio) - 2|
RUNTIME_LIMIT = 10.0


def molecular_states(family):
    for De in DE_VALUES:
        for re in RHO_E_VALUES:
            spec = from_molecular(family, MolecularParams(De, re))
            for m in M_VALUES:
                yield (De, re, m), spec


def random_spec(rng, family):
    A = rng.uniform(0.05, 10.0) * (1 if family is PH else -1)
    B = 0.0 if rng.random() < 0.1 else rng.uniform(0.0, 10.0)
    return PotentialSpec(family, A, B, rng.uniform(-5.0, 5.0))


def random_context(rng):
    return PhysicalContext(rng.uniform(0.3, 3.0), rng.uniform(0.3, 3.0))


# -- checks: each returns [(name, ok, detail), ...] ----------------------------------

def spectrum_vs_oracle(family, label):
    t0 = time.perf_counter()
    worst, worst_at = 0.0, None
    order_bad = []
    for key, spec in molecular_states(family):
        (_, _, m) = key
        exact = energy(spec, UNIT, m)
        grid = default_grid(spec, UNIT, m)
        coarse = lowest_eigenvalue(build_operator(spec, UNIT, m, grid))
        fine = lowest_eigenvalue(build_operator(spec, UNIT, m, grid.halved()))
        rel = relative_delta(coarse, exact)
        if rel > worst:
            worst, worst_at = rel, key
        ratio = (coarse - exact) / (fine - exact)
        if not (ratio > 0 and abs(math.log2(ratio) - 2) <= ORDER_BAND):
            order_bad.append((key, ratio))
    elapsed = time.perf_counter() - t0
    n = len(DE_VALUES) * len(RHO_E_VALUES) * len(M_VALUES)
    bad = ", ".join(f"(De,re,m)={k} ratio={r:.3f}" for k, r in order_bad)
    return [
        (f"{label} accuracy", worst <= REL_TOL, f"max rel {worst:.2e} at (De,re,m)={worst_at} over {n} states"),
        (f"{label} convergence-order", not order_bad,
         f"{n - len(order_bad)}/{n} gap ratios within 2^(2+-{ORDER_BAND})" + (f"; off: {bad}" if bad else "")),
        (f"{label} runtime", elapsed < RUNTIME_LIMIT, f"{elapsed:.2f} s"),
    ]


def coefficient_identities(draws=500, seed=20260301):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for i in range(draws):
        family = PH if i % 2 == 0 else KR
        spec, ctx, m = random_spec(rng, family), random_context(rng), int(rng.integers(0, 11))
        sol = solve_coefficients(spec, ctx, m)
        res = match_residuals(spec, ctx, m, sol.a, sol.b, sol.energy)
        worst = max(worst, *map(abs, res))
    return [("C3 coefficient identities", worst <= 1e-12, f"max |residual| {worst:.2e} over {draws} draws")]


def schrodinger_residual():
    worst, weakest = 0.0, math.inf
    for family in Family:
        for (_, _, m), spec in molecular_states(family):
            ev = wavefunction(spec, UNIT, m)
            e = energy(spec, UNIT, m)
            pts = support_points(ev)
            worst = max(worst, residual_scan(spec, UNIT, m, e, ev, pts))
            weakest = min(weakest, residual_scan(spec, UNIT, m, e + 1e-3, ev, pts))
    return [
        ("C4 residual", worst <= 1e-8, f"max residual {worst:.2e}"),
        ("C4 sensitivity", weakest > 1e-4, f"min residual at E+1e-3 {weakest:.2e}"),
    ]


def normalization():
    worst = 0.0
    for family in Family:
        for (_, _, m), spec in molecular_states(family):
            worst = max(worst, abs(quadrature_norm(wavefunction(spec, UNIT, m)).value - 1))
    factorial_ph = quadrature_norm(RadialEvaluator(PH, 1.0, 1.0, factorial_form_normalization(PH, 1.0, 1.0))).value
    gamma_ph = quadrature_norm(RadialEvaluator(PH, 1.0, 1.0, gamma_normalization(PH, 1.0, 1.0))).value
    kr_worst = 0.0
    for (_, _, m), spec in molecular_states(KR):
        ev = wavefunction(spec, UNIT, m)
        fac = RadialEvaluator(KR, ev.rate, ev.s, factorial_form_normalization(KR, ev.rate, ev.s))
        kr_worst = max(kr_worst, abs(quadrature_norm(fac).value - 1))
    return [
        ("C5 normalized evaluators", worst <= 1e-8, f"max |norm-1| {worst:.2e}"),
        ("C5 factorial-form discrepancy", abs(factorial_ph - 2) <= 1e-8 and abs(gamma_ph - 1) <= 1e-8,
         f"pseudoharmonic alpha=1 s=1: factorial {factorial_ph:.12f}, gamma {gamma_ph:.12f}"),
        ("C5 kratzer factorial form", kr_worst <= 1e-8, f"max |norm-1| {kr_worst:.2e}"),
    ]


def limit_anchors():
    osc = abs(energy(PotentialSpec(PH, 0.5, 0, 0), UNIT, 0) - 1.0)
    cou = max(abs(energy(PotentialSpec(KR, -1, 0, 0), UNIT, m) + 2 / (1 + 2 * m) ** 2) for m in range(10))
    return [
        ("C6 oscillator anchor", osc <= 1e-12, f"|E0-1| {osc:.1e}"),
        ("C6 coulomb anchor", cou <= 1e-12, f"max |Em+2/(1+2m)^2| {cou:.1e} (m=0..9)"),
    ]


def monotonicity(n_specs=100, seed=7):
    rng = np.random.default_rng(seed)
    out = []
    for family in Family:
        violations = 0
        for _ in range(n_specs):
            spec, ctx = random_spec(rng, family), random_context(rng)
            es = [energy(spec, ctx, m) for m in range(11)]
            violations += sum(not es[m + 1] > es[m] for m in range(10))
        out.append((f"C7 monotone {family.value}", violations == 0, f"{violations} violations in {n_specs} specs"))
    return out


def _cli(argv):
    proc = subprocess.run([sys.executable, "-m", "radial2d", *argv], capture_output=True)
    return proc.returncode, proc.stdout


def cli_contract():
    codes = []
    for family in Family:
        for De in DE_VALUES:
            for re in RHO_E_VALUES:
                codes.append(cli_main(["verify", "--family", family.value, "--De", str(De), "--re", str(re),
                                       "--output", "csv"]) == 0)
    coarse = [_cli(["verify", "--family", f.value, "--De", "2", "--re", "1", "--grid-points", "50"])[0]
              for f in Family]
    runs = [_cli(["verify", "--family", "kratzer", "--De", "2", "--re", "1", "--m-max", "3"]) for _ in range(2)]
    runs += [_cli(["spectrum", "--family", "pseudoharmonic", "--De", "2", "--re", "1", "--output", "csv"])
             for _ in range(2)]
    same = runs[0] == runs[1] and runs[2] == runs[3]
    return [
        ("C8 verify exit 0", all(codes), f"{sum(codes)}/{len(codes)} parameter sets"),
        ("C8 coarse grid exit 1", coarse == [1, 1], f"exit codes {coarse}"),
        ("C8 byte-identical", same, "repeated verify and spectrum runs"),
    ]


# -- pytest wiring --------------------------------------------------------------------

def _run(results):
    failed = []
    for name, ok, detail in results:
        record(name, ok, detail)
        if not ok:
            failed.append(f"{name}: {detail}")
    assert not failed, "; ".join(failed)


def test_c1_pseudoharmonic_spectrum():
    _run(spectrum_vs_oracle(PH, "C1"))


def test_c2_kratzer_spectrum():
    _run(spectrum_vs_oracle(KR, "C2"))


def test_c3_coefficient_identities():
    _run(coefficient_identities())


def test_c4_schrodinger_residual():
    _run(schrodinger_residual())


def test_c5_normalization():
    _run(normalization())


def test_c6_limit_anchors():
    _run(limit_anchors())


def test_c7_monotonicity():
    _run(monotonicity())


def test_c8_cli_contract(capsys):
    results = cli_contract()
    capsys.readouterr()
    _run(results)


ALL_CHECKS = [
    lambda: spectrum_vs_oracle(PH, "C1"),
    lambda: spectrum_vs_oracle(KR, "C2"),
    coefficient_identities,
    schrodinger_residual,
    normalization,
    limit_anchors,
    monotonicity,
    cli_contract,
]


if __name__ == "__main__":
    import contextlib
    import io

    failures = 0
    for check in ALL_CHECKS:
        with contextlib.redirect_stdout(io.StringIO()):
            results = check()
        for name, ok, detail in results:
            failures += not ok
            print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
    sys.exit(1 if failures else 0)
