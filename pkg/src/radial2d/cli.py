"""Command-line interface: ``radial2d {spectrum,coefficients,wavefunction,verify}``.

Output is JSON ({config, rows, summary}) or CSV (header + rows). Floats are
written with ``repr`` so both formats round-trip exactly and repeated runs
are byte-identical.

Exit codes: 0 ok, 1 verification failed, 2 usage/parameter error,
3 numerical convergence error. Errors print one line to stderr:
``error: <CODE>: <message>``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, fields

import numpy as np

from .ansatz import solve_coefficients, wavefunction
from .errors import ParameterError, Radial2DError
from .oracle import decay_interval, default_grid, verify_state
from .potentials import Family, MolecularParams, PhysicalContext, PotentialSpec, from_molecular

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_USAGE, EXIT_NUMERICAL = 0, 1, 2, 3
M_MAX_LIMIT = 64


@dataclass
class RunConfig:
    family: str | None = None
    De: float | None = None
    re: float | None = None
    A: float | None = None
    B: float | None = None
    C: float | None = None
    mu: float = 1.0
    hbar: float = 1.0
    m_max: int = 5
    rho_min: float | None = None
    rho_max: float | None = None
    grid_points: int | None = None
    tolerance: float = 1e-5
    output: str = "json"
    m: int = 0
    rho_start: float | None = None
    rho_end: float | None = None
    samples: int = 201
    jobs: int = 1

    def validate(self):
        if self.family not in {f.value for f in Family}:
            raise ParameterError(f"family must be one of pseudoharmonic, kratzer (got {self.family!r})")
        molecular = self.De is not None or self.re is not None
        algebraic = any(v is not None for v in (self.A, self.B, self.C))
        if molecular == algebraic:
            raise ParameterError("give exactly one parameter source: --De/--re or --A/--B[/--C]")
        if molecular and (self.De is None or self.re is None):
            raise ParameterError("molecular parameters need both --De and --re")
        if algebraic and (self.A is None or self.B is None):
            raise ParameterError("algebraic parameters need --A and --B (--C defaults to 0)")
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, float) and not math.isfinite(v):
                raise ParameterError(f"{f.name} must be finite")
        if not 0 <= self.m_max <= M_MAX_LIMIT:
            raise ParameterError(f"m_max must be in [0, {M_MAX_LIMIT}] (got {self.m_max})")
        if not self.tolerance > 0:
            raise ParameterError("tolerance must be positive")
        if self.output not in ("json", "csv"):
            raise ParameterError("output must be json or csv")
        if self.jobs < 1:
            raise ParameterError("jobs must be >= 1")

    def spec(self) -> PotentialSpec:
        if self.De is not None:
            return from_molecular(self.family, MolecularParams(self.De, self.re))
        return PotentialSpec(Family(self.family), self.A, self.B, 0.0 if self.C is None else self.C)

    def context(self) -> PhysicalContext:
        return PhysicalContext(self.mu, self.hbar)

    def as_dict(self, command: str) -> dict:
        keys = ["family", "De", "re", "A", "B", "C", "mu", "hbar"]
        keys += {
            "spectrum": ["m_max"],
            "coefficients": ["m_max"],
            "wavefunction": ["m", "rho_start", "rho_end", "samples"],
            "verify": ["m_max", "rho_min", "rho_max", "grid_points", "tolerance"],
        }[command]
        d = asdict(self)
        return {k: d[k] for k in keys if d[k] is not None}


# -- commands ---------------------------------------------------------------

def cmd_spectrum(cfg: RunConfig):
    spec, ctx = cfg.spec(), cfg.context()
    rows = [{"m": m, "energy": solve_coefficients(spec, ctx, m).energy} for m in range(cfg.m_max + 1)]
    return rows, {"n_rows": len(rows)}


def cmd_coefficients(cfg: RunConfig):
    spec, ctx = cfg.spec(), cfg.context()
    rows = []
    for m in range(cfg.m_max + 1):
        sol = solve_coefficients(spec, ctx, m)
        rows.append({"m": m, "a": sol.a, "b": sol.b, "s": sol.s, "energy": sol.energy})
    return rows, {"n_rows": len(rows)}


def cmd_wavefunction(cfg: RunConfig):
    spec, ctx = cfg.spec(), cfg.context()
    if isinstance(cfg.m, bool) or cfg.m < 0:
        raise ParameterError("m must be a nonnegative integer")
    ev = wavefunction(spec, ctx, cfg.m)
    left, right = decay_interval(ev, 1e-12)
    start = left if cfg.rho_start is None else cfg.rho_start
    end = right if cfg.rho_end is None else cfg.rho_end
    if not 0 < start < end:
        raise ParameterError(f"need 0 < rho_start < rho_end (got {start}, {end})")
    if cfg.samples < 2:
        raise ParameterError("samples must be >= 2")
    rho = np.linspace(start, end, cfg.samples)
    psi = ev(rho)
    rows = [{"rho": float(r), "psi": float(p)} for r, p in zip(rho, psi)]
    rate_name = "alpha" if ev.family is Family.PSEUDOHARMONIC else "kappa"
    return rows, {"m": cfg.m, "norm": ev.norm, "s": ev.s, rate_name: ev.rate}


def _verify_row(cfg: RunConfig, spec, ctx, m):
    grid = default_grid(spec, ctx, m, n_points=cfg.grid_points, rho_min=cfg.rho_min, rho_max=cfg.rho_max)
    rep = verify_state(spec, ctx, m, grid)
    return {
        "m": m,
        "numeric_energy": rep.numeric_energy,
        "closed_form_energy": rep.closed_form_energy,
        "abs_delta": rep.abs_delta,
        "rel_delta": rep.rel_delta,
        "residual_max": rep.residual_max,
        "norm_quadrature": rep.norm_quadrature,
        "boundary_ratio": rep.boundary_ratio,
        "rho_min": grid.rho_min,
        "rho_max": grid.rho_max,
        "n_points": grid.n_points,
        "grid_ok": rep.grid_ok,
        "pass": rep.passed(cfg.tolerance),
    }


def cmd_verify(cfg: RunConfig):
    spec, ctx = cfg.spec(), cfg.context()
    ms = range(cfg.m_max + 1)
    if cfg.jobs > 1:
        with ThreadPoolExecutor(cfg.jobs) as pool:
            rows = list(pool.map(lambda m: _verify_row(cfg, spec, ctx, m), ms))
    else:
        rows = [_verify_row(cfg, spec, ctx, m) for m in ms]
    summary = {
        "max_rel_delta": max(r["rel_delta"] for r in rows),
        "pass": all(r["pass"] for r in rows),
    }
    return rows, summary


COMMANDS = {
    "spectrum": cmd_spectrum,
    "coefficients": cmd_coefficients,
    "wavefunction": cmd_wavefunction,
    "verify": cmd_verify,
}


# -- output -----------------------------------------------------------------

def _cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def render(command: str, cfg: RunConfig, rows, summary) -> str:
    if cfg.output == "json":
        doc = {"command": command, "config": cfg.as_dict(command), "rows": rows, "summary": summary}
        return json.dumps(doc, indent=2, allow_nan=False) + "\n"
    buf = io.StringIO()
    if command == "wavefunction":
        buf.write("# " + " ".join(f"{k}={_cell(v)}" for k, v in summary.items()) + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(rows[0]))
    for row in rows:
        writer.writerow([_cell(v) for v in row.values()])
    return buf.getvalue()


# -- argument handling ------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    code = "USAGE"


_FLAG_DEST = {
    "family": "family", "De": "De", "re": "re", "A": "A", "B": "B", "C": "C",
    "mu": "mu", "hbar": "hbar", "m_max": "m_max", "rho_min": "rho_min",
    "rho_max": "rho_max", "grid_points": "grid_points", "tolerance": "tolerance",
    "output": "output", "m": "m", "rho_start": "rho_start", "rho_end": "rho_end",
    "samples": "samples", "jobs": "jobs",
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", help="JSON file with option defaults (flags win)")
    common.add_argument("--family", choices=[f.value for f in Family])
    common.add_argument("--De", type=float, help="dissociation energy")
    common.add_argument("--re", "--rho-e", dest="re", type=float, help="equilibrium separation")
    common.add_argument("--A", type=float)
    common.add_argument("--B", type=float)
    common.add_argument("--C", type=float)
    common.add_argument("--mu", type=float)
    common.add_argument("--hbar", type=float)
    common.add_argument("--m-max", dest="m_max", type=int)
    common.add_argument("--output", choices=["json", "csv"])

    parser = _Parser(prog="radial2d", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("spectrum", parents=[common], help="closed-form energies E_0..E_mmax")
    sub.add_parser("coefficients", parents=[common], help="matched ansatz coefficients (a, b, s, E)")
    wf = sub.add_parser("wavefunction", parents=[common], help="sample the normalized radial function")
    wf.add_argument("--m", type=int)
    wf.add_argument("--rho-start", dest="rho_start", type=float)
    wf.add_argument("--rho-end", dest="rho_end", type=float)
    wf.add_argument("--samples", type=int)
    ver = sub.add_parser("verify", parents=[common], help="closed form vs finite-difference oracle")
    ver.add_argument("--rho-min", dest="rho_min", type=float)
    ver.add_argument("--rho-max", dest="rho_max", type=float)
    ver.add_argument("--grid-points", dest="grid_points", type=int)
    ver.add_argument("--tolerance", type=float)
    ver.add_argument("--jobs", type=int, help="verify rows on this many threads")
    return parser


def load_config(args: argparse.Namespace) -> RunConfig:
    values = {}
    if args.config:
        try:
            with open(args.config) as fh:
                data = json.load(fh)
        except (OSError, ValueError) as exc:
            raise ParameterError(f"cannot read config file: {exc}") from exc
        if not isinstance(data, dict):
            raise ParameterError("config file must hold a JSON object")
        unknown = set(data) - set(_FLAG_DEST)
        if unknown:
            raise ParameterError(f"unknown config keys: {', '.join(sorted(unknown))}")
        values.update(data)
    for key in _FLAG_DEST:
        v = getattr(args, key, None)
        if v is not None:
            values[key] = v
    cfg = RunConfig(**values)
    cfg.validate()
    return cfg


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = load_config(args)
        rows, summary = COMMANDS[args.command](cfg)
        sys.stdout.write(render(args.command, cfg, rows, summary))
    except _UsageError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Radial2DError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_USAGE if isinstance(exc, ValueError) else EXIT_NUMERICAL
    if args.command == "verify" and not summary["pass"]:
        return EXIT_VERIFY_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
