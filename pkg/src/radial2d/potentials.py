"""Potential families, parameter conversions and the 2*mu/hbar**2 reduction.

Both families are stored by their algebraic coefficients::

    pseudoharmonic   V(rho) = A*rho**2 + B/rho**2 + C
    kratzer          V(rho) = A/rho    + B/rho**2 + C

The molecular forms D_e*(rho/rho_e - rho_e/rho)**2 and
D_e*((rho - rho_e)/rho)**2 are constructors on top of that.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError


class Family(str, enum.Enum):
    PSEUDOHARMONIC = "pseudoharmonic"
    KRATZER = "kratzer"


def _finite(**values):
    for name, value in values.items():
        if not math.isfinite(value):
            raise ParameterError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class PhysicalContext:
    mu: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        _finite(mu=self.mu, hbar=self.hbar)
        if self.mu <= 0 or self.hbar <= 0:
            raise ParameterError(f"mu and hbar must be positive (mu={self.mu}, hbar={self.hbar})")

    @property
    def scale(self) -> float:
        """2*mu/hbar**2, the factor turning energies into primed quantities."""
        return 2.0 * self.mu / self.hbar**2

    @property
    def kinetic(self) -> float:
        """hbar**2/(2*mu)."""
        return self.hbar**2 / (2.0 * self.mu)


@dataclass(frozen=True)
class PotentialSpec:
    """A potential family with coefficients in physical units.

    ``B >= 0`` is enforced for both families; ``B = 0`` gives the plain 2D
    oscillator / Coulomb limits. The sign of ``A`` is not checked here:
    an attractive sign is what makes a bound state exist, so that check
    lives in :func:`radial2d.ansatz.solve_coefficients`.
    """

    family: Family
    A: float
    B: float
    C: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        _finite(A=self.A, B=self.B, C=self.C)
        if self.B < 0:
            raise ParameterError(f"B must be >= 0, got {self.B}")

    def scaled(self, k: float) -> "PotentialSpec":
        return PotentialSpec(self.family, k * self.A, k * self.B, k * self.C)


@dataclass(frozen=True)
class MolecularParams:
    De: float
    rho_e: float

    def __post_init__(self):
        _finite(De=self.De, rho_e=self.rho_e)
        if self.De <= 0 or self.rho_e <= 0:
            raise ParameterError(f"De and rho_e must be positive (De={self.De}, rho_e={self.rho_e})")


@dataclass(frozen=True)
class ReducedCoefficients:
    A_p: float
    B_p: float
    C_p: float


def pseudoharmonic_from_molecular(mp: MolecularParams) -> PotentialSpec:
    De, re = mp.De, mp.rho_e
    return PotentialSpec(Family.PSEUDOHARMONIC, De / re**2, De * re**2, -2.0 * De)


def kratzer_from_molecular(mp: MolecularParams) -> PotentialSpec:
    # Expanding De*(1 - re/rho)**2 gives the cross term -2*De*re/rho.
    De, re = mp.De, mp.rho_e
    return PotentialSpec(Family.KRATZER, -2.0 * De * re, De * re**2, De)


def from_molecular(family: Family | str, mp: MolecularParams) -> PotentialSpec:
    if Family(family) is Family.PSEUDOHARMONIC:
        return pseudoharmonic_from_molecular(mp)
    return kratzer_from_molecular(mp)


def molecular_potential(family: Family | str, mp: MolecularParams, rho):
    """Evaluate the molecular form directly, without going through (A, B, C)."""
    rho = np.asarray(rho, dtype=float)
    if Family(family) is Family.PSEUDOHARMONIC:
        return mp.De * (rho / mp.rho_e - mp.rho_e / rho) ** 2
    return mp.De * ((rho - mp.rho_e) / rho) ** 2


def evaluate_potential(spec: PotentialSpec, rho):
    """V(rho) for scalar or array ``rho``; every rho must be positive."""
    r = np.asarray(rho, dtype=float)
    if np.any(~(r > 0)):
        raise ParameterError("potential is singular at rho <= 0")
    if spec.family is Family.PSEUDOHARMONIC:
        v = spec.A * r**2 + spec.B / r**2 + spec.C
    else:
        v = spec.A / r + spec.B / r**2 + spec.C
    return float(v) if v.ndim == 0 else v


def reduce(spec: PotentialSpec, ctx: PhysicalContext = PhysicalContext()) -> ReducedCoefficients:
    k = ctx.scale
    return ReducedCoefficients(k * spec.A, k * spec.B, k * spec.C)
