"""Independent numerical checks of the closed-form solutions.

The radial equation

    -(hbar^2/2mu) R'' + [V + (hbar^2/2mu)(m^2 - 1/4)/rho^2] R = E R

is discretized with second-order central differences on a uniform grid
whose two end nodes carry the Dirichlet condition R = 0. The lowest
eigenvalue of the resulting symmetric tridiagonal matrix is bracketed by
bisection on Sturm-sequence counts. Norm integrals use composite
Gauss-Legendre panels with a rigorous tail bound.
"""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import brentq

from . import kernels
from .ansatz import DEFAULT_CTX, RadialEvaluator, energy, wavefunction
from .errors import AccuracyError, ConvergenceError, ParameterError
from .potentials import Family, PhysicalContext, PotentialSpec, evaluate_potential

# R at either grid end must be this small relative to its peak.
BOUNDARY_LEVEL = 1e-10
# Default grids place the ends where R has fallen to this level.
_DECAY_LEVEL = 1e-12
DEFAULT_TARGET = 1e-6
MIN_POINTS = 101
MAX_POINTS = 1_000_001


@dataclass(frozen=True)
class RadialGrid:
    """Uniform nodes rho_min, ..., rho_max; both ends are Dirichlet nodes."""

    rho_min: float
    rho_max: float
    n_points: int

    def __post_init__(self):
        if not (0 < self.rho_min < self.rho_max and math.isfinite(self.rho_max)):
            raise ParameterError(f"need 0 < rho_min < rho_max (got {self.rho_min}, {self.rho_max})")
        if int(self.n_points) != self.n_points or self.n_points < 3:
            raise ParameterError(f"n_points must be an integer >= 3 (got {self.n_points})")
        object.__setattr__(self, "n_points", int(self.n_points))

    @property
    def spacing(self) -> float:
        return (self.rho_max - self.rho_min) / (self.n_points - 1)

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(self.rho_min, self.rho_max, self.n_points)

    @property
    def interior(self) -> np.ndarray:
        return self.nodes[1:-1]

    def halved(self) -> "RadialGrid":
        """Same interval, half the spacing."""
        return RadialGrid(self.rho_min, self.rho_max, 2 * self.n_points - 1)


@dataclass(frozen=True)
class TridiagonalOperator:
    diagonal: np.ndarray
    off_diagonal: np.ndarray

    def __post_init__(self):
        d = np.ascontiguousarray(self.diagonal, dtype=float)
        e = np.ascontiguousarray(self.off_diagonal, dtype=float)
        if d.ndim != 1 or e.ndim != 1 or len(d) == 0 or len(e) != len(d) - 1:
            raise ParameterError("need len(off_diagonal) == len(diagonal) - 1 >= 0")
        object.__setattr__(self, "diagonal", d)
        object.__setattr__(self, "off_diagonal", e)

    @property
    def size(self) -> int:
        return len(self.diagonal)

    def to_dense(self) -> np.ndarray:
        return np.diag(self.diagonal) + np.diag(self.off_diagonal, 1) + np.diag(self.off_diagonal, -1)


def build_operator(spec: PotentialSpec, ctx: PhysicalContext, m: int, grid: RadialGrid) -> TridiagonalOperator:
    rho = grid.interior
    h = grid.spacing
    kin = ctx.kinetic
    diag = 2.0 * kin / h**2 + evaluate_potential(spec, rho) + kin * (m * m - 0.25) / rho**2
    off = np.full(len(rho) - 1, -kin / h**2)
    return TridiagonalOperator(np.atleast_1d(diag), off)


def _pivmin(e2: np.ndarray) -> float:
    return sys.float_info.min * max(1.0, float(e2.max()) if len(e2) else 1.0)


def sturm_count(op: TridiagonalOperator, x: float) -> int:
    """How many eigenvalues of ``op`` lie strictly below ``x``."""
    e2 = op.off_diagonal**2
    return int(kernels.sturm_count(op.diagonal, e2, float(x), _pivmin(e2)))


def bracket_lowest(op: TridiagonalOperator, tol: float = 1e-12, max_iter: int = 500):
    """Return ``(lo, hi)`` with the smallest eigenvalue in [lo, hi], hi - lo <= tol.

    The starting bracket is [Gershgorin lower bound, min(diagonal)]. The
    loop may stop early if the bracket cannot be split in floating point.
    """
    if not tol > 0:
        raise ParameterError("tol must be positive")
    d = op.diagonal
    e = np.abs(op.off_diagonal)
    radius = np.zeros_like(d)
    radius[:-1] += e
    radius[1:] += e
    lo = float(np.min(d - radius))
    hi = float(np.min(d))
    e2 = op.off_diagonal**2
    lo, hi, _ = kernels.bisect_lowest(d, e2, lo, hi, float(tol), int(max_iter), _pivmin(e2))
    mid = 0.5 * (lo + hi)
    if hi - lo > tol and lo < mid < hi:
        raise ConvergenceError(f"bisection did not converge in {max_iter} steps; bracket [{lo!r}, {hi!r}]", (lo, hi))
    return lo, hi


def lowest_eigenvalue(op: TridiagonalOperator, tol: float = 1e-12, max_iter: int = 500) -> float:
    lo, hi = bracket_lowest(op, tol, max_iter)
    return 0.5 * (lo + hi)


# -- grids ------------------------------------------------------------------

def _log_R(ev: RadialEvaluator, rho):
    """log R(rho) - log norm, with R = sqrt(rho) * psi."""
    return (ev.s + 0.5) * np.log(rho) + ev.exponent(rho)


def _R_peak(ev: RadialEvaluator) -> float:
    k = ev.s + 0.5
    if ev.family is Family.PSEUDOHARMONIC:
        return math.sqrt(k / ev.rate)
    return k / ev.rate


def decay_interval(ev: RadialEvaluator, level: float):
    """Points left and right of the peak of R where R = level * max R."""
    rp = _R_peak(ev)
    top = _log_R(ev, rp)
    target = math.log(level)

    def f(r):
        return _log_R(ev, r) - top - target

    lo = rp
    while f(lo) > 0:
        lo *= 1e-3
    hi = 2 * rp
    while f(hi) > 0:
        hi *= 2
    left = brentq(f, lo, rp, xtol=1e-300, rtol=1e-12)
    right = brentq(f, rp, hi, rtol=1e-12)
    return left, right


def _length_scale(ev: RadialEvaluator) -> float:
    if ev.family is Family.PSEUDOHARMONIC:
        return 1.0 / math.sqrt(ev.rate)
    return math.sqrt(ev.s + 0.5) / ev.rate


def default_grid(spec: PotentialSpec, ctx: PhysicalContext = DEFAULT_CTX, m: int = 0,
                 target: float = DEFAULT_TARGET, n_points: int | None = None,
                 rho_min: float | None = None, rho_max: float | None = None) -> RadialGrid:
    """Grid for the FD oracle, sized from the closed-form state.

    The ends sit where R has decayed to 1e-12 of its peak. The spacing aims
    at a relative eigenvalue error near ``target`` for a second-order
    scheme. Below s = 1 the scheme is only order 2s (R ~ rho^(s+1/2) is not
    smooth at the origin), so the spacing is further scaled by s**2; s = 0
    gets the point cap and still converges only logarithmically.
    Explicit ``n_points``/``rho_min``/``rho_max`` override the rule.
    """
    ev = wavefunction(spec, ctx, m)
    left, right = decay_interval(ev, _DECAY_LEVEL)
    ell = _length_scale(ev)
    lo = rho_min if rho_min is not None else min(1e-3 * ell, left)
    hi = rho_max if rho_max is not None else right
    if n_points is None:
        e_scale = max(1.0, abs(energy(spec, ctx, m)))
        h = ell * min(0.05, math.sqrt(target * e_scale * ctx.scale) * ell) * min(1.0, ev.s) ** 2
        n_float = (hi - lo) / h + 1 if h > 0 else math.inf
        n_points = int(min(MAX_POINTS, max(MIN_POINTS, math.ceil(n_float))))
    return RadialGrid(lo, hi, n_points)


def boundary_ratio(ev: RadialEvaluator, grid: RadialGrid) -> float:
    """max(|R(rho_min)|, |R(rho_max)|) / max |R| for R = sqrt(rho) psi."""
    rp = min(max(_R_peak(ev), grid.rho_min), grid.rho_max)
    top = _log_R(ev, rp)
    ends = max(_log_R(ev, grid.rho_min), _log_R(ev, grid.rho_max))
    return math.exp(ends - top)


# -- quadrature -------------------------------------------------------------

class QuadratureResult(NamedTuple):
    value: float
    abs_error: float
    rho_cut: float


def _log_density(ev: RadialEvaluator, rho):
    """log(psi^2 rho)."""
    return 2 * math.log(ev.norm) + (2 * ev.s + 1) * np.log(rho) + 2 * ev.exponent(rho)


def _log_density_slope(ev: RadialEvaluator, rho):
    if ev.family is Family.PSEUDOHARMONIC:
        return (2 * ev.s + 1) / rho - 2 * ev.rate * rho
    return (2 * ev.s + 1) / rho - 2 * ev.rate


def tail_bound(ev: RadialEvaluator, rho_cut: float) -> float:
    """Upper bound on integral_{rho_cut}^inf psi^2 rho d rho.

    log(psi^2 rho) is concave, so past the peak the integrand lies below
    its tangent exponential: tail <= f(c) / |d log f/d rho (c)|.
    """
    slope = _log_density_slope(ev, rho_cut)
    if slope >= 0:
        return math.inf
    return math.exp(_log_density(ev, rho_cut)) / -slope


def _breakpoints(rho_cut: float, n_panels: int, levels: int) -> np.ndarray:
    h = rho_cut / n_panels
    graded = h * 0.5 ** np.arange(levels, 0, -1)
    return np.concatenate(([0.0], graded, h * np.arange(1, n_panels + 1)))


def _panel_sum(ev: RadialEvaluator, breaks: np.ndarray, xi: np.ndarray, wi: np.ndarray) -> float:
    a, b = breaks[:-1, None], breaks[1:, None]
    half = 0.5 * (b - a)
    x = (a + half) + half * xi[None, :]
    f = np.exp(_log_density(ev, x))
    return float(np.sum(half * wi[None, :] * f))


def quadrature_norm(ev: RadialEvaluator, tol: float = 1e-11, tail_tol: float = 1e-12,
                    order: int = 20, levels: int = 40, max_panels: int = 1 << 15) -> QuadratureResult:
    """integral_0^inf |psi|^2 rho d rho by self-checking Gauss-Legendre panels.

    Panels are uniform on (0, rho_cut] except the first, which is split
    geometrically toward the origin (psi^2 rho ~ rho^(2s+1) need not be
    smooth there). The panel count doubles until successive sums differ
    by less than ``tol``; ``abs_error`` adds that gap to the tail bound.
    """
    # maximum of psi^2 rho
    if ev.family is Family.PSEUDOHARMONIC:
        peak = math.sqrt((2 * ev.s + 1) / (2 * ev.rate))
    else:
        peak = (2 * ev.s + 1) / (2 * ev.rate)
    cut = 2.0 * peak
    for _ in range(200):
        tb = tail_bound(ev, cut)
        if tb <= tail_tol:
            break
        cut *= 1.25
    else:
        raise AccuracyError(f"tail bound {tb:.3g} above {tail_tol:.3g}")
    xi, wi = np.polynomial.legendre.leggauss(order)
    n = 8
    prev = _panel_sum(ev, _breakpoints(cut, n, levels), xi, wi)
    while n < max_panels:
        n *= 2
        cur = _panel_sum(ev, _breakpoints(cut, n, levels), xi, wi)
        if abs(cur - prev) < tol:
            return QuadratureResult(cur, abs(cur - prev) + tb, cut)
        prev = cur
    raise AccuracyError(f"panel sums still moving after {max_panels} panels")


# -- residual check ---------------------------------------------------------

def _R_and_second_derivative(ev: RadialEvaluator, rho: np.ndarray):
    k = ev.s + 0.5
    R = np.sqrt(rho) * ev(rho)
    if ev.family is Family.PSEUDOHARMONIC:
        g1, g2 = -ev.rate * rho, -ev.rate
    else:
        g1, g2 = -ev.rate, 0.0
    ratio = k * (k - 1) / rho**2 + 2 * k * g1 / rho + g2 + g1 * g1
    return R, ratio * R


def residual_scan(spec: PotentialSpec, ctx: PhysicalContext, m: int, energy_value: float,
                  ev: RadialEvaluator, points) -> float:
    """max |R'' + [(2mu/hbar^2)(E - V) - (m^2 - 1/4)/rho^2] R| / max(1, |R''|).

    R = sqrt(rho) * psi and R'' are evaluated analytically.
    """
    rho = np.asarray(points, dtype=float)
    if np.any(~(rho > 0)):
        raise ParameterError("residual points must be positive")
    R, R2 = _R_and_second_derivative(ev, rho)
    bracket = ctx.scale * (energy_value - evaluate_potential(spec, rho)) - (m * m - 0.25) / rho**2
    res = np.abs(R2 + bracket * R) / np.maximum(1.0, np.abs(R2))
    return float(np.max(res))


def support_points(ev: RadialEvaluator, n: int = 50, level: float = 1e-3) -> np.ndarray:
    """``n`` uniform points spanning where R >= level * max R."""
    left, right = decay_interval(ev, level)
    return np.linspace(left, right, n)


# -- full cross-check -------------------------------------------------------

@dataclass(frozen=True)
class OracleReport:
    m: int
    numeric_energy: float
    closed_form_energy: float
    abs_delta: float
    rel_delta: float
    grid: RadialGrid
    residual_max: float
    norm_quadrature: float
    boundary_ratio: float

    @property
    def grid_ok(self) -> bool:
        return self.boundary_ratio <= BOUNDARY_LEVEL

    def passed(self, tolerance: float = 1e-5, norm_tolerance: float = 1e-6) -> bool:
        return (self.grid_ok and self.rel_delta <= tolerance
                and abs(self.norm_quadrature - 1.0) <= norm_tolerance)


def relative_delta(numeric: float, exact: float) -> float:
    return abs(numeric - exact) / max(1.0, abs(exact))


def verify_state(spec: PotentialSpec, ctx: PhysicalContext = DEFAULT_CTX, m: int = 0,
                 grid: RadialGrid | None = None, tol: float = 1e-12) -> OracleReport:
    ev = wavefunction(spec, ctx, m)
    e_exact = energy(spec, ctx, m)
    if grid is None:
        grid = default_grid(spec, ctx, m)
    e_num = lowest_eigenvalue(build_operator(spec, ctx, m, grid), tol)
    return OracleReport(
        m=m,
        numeric_energy=e_num,
        closed_form_energy=e_exact,
        abs_delta=abs(e_num - e_exact),
        rel_delta=relative_delta(e_num, e_exact),
        grid=grid,
        residual_max=residual_scan(spec, ctx, m, e_exact, ev, support_points(ev)),
        norm_quadrature=quadrature_norm(ev).value,
        boundary_ratio=boundary_ratio(ev, grid),
    )
