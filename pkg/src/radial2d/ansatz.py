"""Wavefunction-ansatz solutions of the 2D radial equation.

The radial function is taken as R_m = f_m(rho) * exp(g(rho)) with
f_m = prod_j (rho - alpha_j) and g = a*rho**p + b*ln(rho), where p = 2 for
the pseudoharmonic family and p = 1 for the Kratzer family. Substituting
into

    R'' = [(2mu/hbar^2)(V - E) + (m^2 - 1/4)/rho^2] R

and matching powers of rho gives three algebraic relations in (a, b, E).
All roots alpha_j come out as zero, so f_m = rho**m and the solution is the
nodeless (lowest) radial state for each angular momentum m.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NoBoundStateError, ParameterError
from .potentials import Family, PhysicalContext, PotentialSpec, reduce

DEFAULT_CTX = PhysicalContext()


def _check_m(m) -> int:
    if isinstance(m, bool) or int(m) != m or m < 0:
        raise ParameterError(f"angular momentum must be a nonnegative integer, got {m!r}")
    return int(m)


def _require_bound(spec: PotentialSpec):
    if spec.family is Family.PSEUDOHARMONIC and not spec.A > 0:
        raise NoBoundStateError(f"pseudoharmonic family needs A > 0 for confinement (got A={spec.A})")
    if spec.family is Family.KRATZER and not spec.A < 0:
        raise NoBoundStateError(f"kratzer family needs A < 0 for a bound state (got A={spec.A})")


@dataclass(frozen=True)
class AnsatzSolution:
    family: Family
    m: int
    a: float
    b: float
    energy: float
    s: float
    roots: tuple = field(default=())

    def radial_factor(self, rho):
        """Unnormalized R_m(rho) = f_m(rho) * exp(a*rho**p + b*ln(rho))."""
        r = np.asarray(rho, dtype=float)
        p = 2 if self.family is Family.PSEUDOHARMONIC else 1
        f = np.ones_like(r)
        for alpha in self.roots:
            f = f * (r - alpha)
        return f * np.exp(self.a * r**p + self.b * np.log(r))


def solve_coefficients(spec: PotentialSpec, ctx: PhysicalContext = DEFAULT_CTX, m: int = 0) -> AnsatzSolution:
    """Solve the matching relations for (a, b, E) at angular momentum ``m``.

    The rho**-2 relation (b+m)(b+m-1) = B' + m^2 - 1/4 has roots
    b + m = 1/2 +- s with s = sqrt(B' + m^2); only the + root keeps
    R_m regular at the origin. Likewise only a < 0 is normalizable.
    """
    m = _check_m(m)
    _require_bound(spec)
    red = reduce(spec, ctx)
    s = math.sqrt(red.B_p + m * m)
    b = 0.5 + s - m
    if spec.family is Family.PSEUDOHARMONIC:
        a = -0.5 * math.sqrt(red.A_p)
        e_p = red.C_p - 2.0 * a * (2 * m + 2 * b + 1)
    else:
        a = red.A_p / (2.0 * (b + m))
        e_p = red.C_p - a * a
    return AnsatzSolution(spec.family, m, a, b, e_p / ctx.scale, s, roots=(0.0,) * m)


def energy(spec: PotentialSpec, ctx: PhysicalContext = DEFAULT_CTX, m: int = 0) -> float:
    """Closed-form E_m in physical units.

    pseudoharmonic: C + sqrt(2 hbar^2 A/mu) * (1 + sqrt(2 mu B/hbar^2 + m^2))
    kratzer:        C - (2 mu A^2/hbar^2) / (1 + 2 sqrt(2 mu B/hbar^2 + m^2))^2
    """
    m = _check_m(m)
    _require_bound(spec)
    mu, hbar = ctx.mu, ctx.hbar
    root = math.sqrt(2 * mu * spec.B / hbar**2 + m * m)
    if spec.family is Family.PSEUDOHARMONIC:
        return spec.C + math.sqrt(2 * hbar**2 * spec.A / mu) * (1 + root)
    return spec.C - (2 * mu * spec.A**2 / hbar**2) / (1 + 2 * root) ** 2


def match_residuals(spec: PotentialSpec, ctx: PhysicalContext, m: int, a: float, b: float, energy_value=None):
    """Residuals of the three coefficient relations for a trial (a, b).

    Returns ``(r_inv_sq, r_power, r_const)``: the rho**-2 relation, the
    relation tied to the family's power term (rho**2 or rho**-1), and the
    constant relation. ``energy_value`` defaults to :func:`energy`, which
    does not depend on (a, b).
    """
    m = _check_m(m)
    red = reduce(spec, ctx)
    if energy_value is None:
        energy_value = energy(spec, ctx, m)
    e_p = ctx.scale * energy_value
    k = b + m
    r_inv_sq = red.B_p + m * m - 0.25 - k * (k - 1)
    if spec.family is Family.PSEUDOHARMONIC:
        r_power = red.A_p - 4 * a * a
        r_const = red.C_p - e_p - 2 * a * (2 * k + 1)
    else:
        r_power = red.A_p - 2 * a * k
        r_const = red.C_p - e_p - a * a
    return r_inv_sq, r_power, r_const


# -- normalization -----------------------------------------------------------

def gamma_normalization(family: Family | str, rate: float, s: float) -> float:
    """N with integral_0^inf N^2 |psi|^2 rho d rho = 1, psi = rho^s e^{-...}.

    pseudoharmonic (psi = rho^s exp(-rate rho^2/2)): N^2 = 2 rate^(s+1) / Gamma(s+1)
    kratzer        (psi = rho^s exp(-rate rho)):     N^2 = (2 rate)^(2s+2) / Gamma(2s+2)
    """
    if Family(family) is Family.PSEUDOHARMONIC:
        log_n2 = math.log(2.0) + (s + 1) * math.log(rate) - math.lgamma(s + 1)
    else:
        log_n2 = (2 * s + 2) * math.log(2 * rate) - math.lgamma(2 * s + 2)
    return math.exp(0.5 * log_n2)


def factorial_form_normalization(family: Family | str, rate: float, s: float) -> float:
    """Published factorial-form constants, with x! read as Gamma(x+1).

    pseudoharmonic: [(2 rate)^(1+s) / s!]^(1/2)   -- overshoots N^2 by 2^s
    kratzer:        (2 rate)^(1+s) / sqrt((2s+1)!)  -- equals the Gamma form
    Kept only so the discrepancy can be measured.
    """
    if Family(family) is Family.PSEUDOHARMONIC:
        log_n2 = (1 + s) * math.log(2 * rate) - math.lgamma(s + 1)
    else:
        log_n2 = (2 + 2 * s) * math.log(2 * rate) - math.lgamma(2 * s + 2)
    return math.exp(0.5 * log_n2)


@dataclass(frozen=True)
class RadialEvaluator:
    """psi(rho) = norm * rho**s * exp(-rate*rho**2/2)   (pseudoharmonic)
    psi(rho) = norm * rho**s * exp(-rate*rho)        (kratzer)

    ``rate`` is the Gaussian width parameter alpha or the decay constant
    kappa. The full 2D eigenfunction is psi(rho) * exp(+-i m phi).
    """

    family: Family
    rate: float
    s: float
    norm: float
    m: int = 0

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if not (self.rate > 0 and self.s >= 0 and self.norm > 0):
            raise ParameterError("evaluator needs rate > 0, s >= 0, norm > 0")

    @property
    def alpha_or_kappa(self) -> float:
        return self.rate

    def exponent(self, rho):
        """The exponential's argument, -rate*rho^2/2 or -rate*rho."""
        if self.family is Family.PSEUDOHARMONIC:
            return -0.5 * self.rate * rho * rho
        return -self.rate * rho

    def log_abs(self, rho):
        r = np.asarray(rho, dtype=float)
        with np.errstate(divide="ignore"):
            logr = np.log(r)
        # s == 0 must give rho**0 == 1 even at rho == 0
        power = self.s * logr if self.s else np.zeros_like(r)
        return math.log(self.norm) + power + self.exponent(r)

    def __call__(self, rho):
        out = np.exp(self.log_abs(rho))
        return float(out) if np.ndim(out) == 0 else out

    @property
    def peak(self) -> float:
        """Location of the maximum of |psi|."""
        if self.family is Family.PSEUDOHARMONIC:
            return math.sqrt(self.s / self.rate)
        return self.s / self.rate

    def normalized(self) -> "RadialEvaluator":
        return RadialEvaluator(self.family, self.rate, self.s, gamma_normalization(self.family, self.rate, self.s), self.m)


def normalization_constant(spec: PotentialSpec, ctx: PhysicalContext = DEFAULT_CTX, m: int = 0) -> float:
    sol = solve_coefficients(spec, ctx, m)
    return gamma_normalization(spec.family, _rate(sol), sol.s)


def _rate(sol: AnsatzSolution) -> float:
    # alpha = -2a (Gaussian), kappa = -a (exponential)
    return -2.0 * sol.a if sol.family is Family.PSEUDOHARMONIC else -sol.a


def wavefunction(spec: PotentialSpec, ctx: PhysicalContext = DEFAULT_CTX, m: int = 0) -> RadialEvaluator:
    sol = solve_coefficients(spec, ctx, m)
    rate = _rate(sol)
    return RadialEvaluator(spec.family, rate, sol.s, gamma_normalization(spec.family, rate, sol.s), sol.m)
