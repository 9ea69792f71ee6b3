"""Closed-form bound states of the 2D radial Schrodinger equation for the
pseudoharmonic and modified Kratzer potentials, with a finite-difference
Sturm-bisection oracle for cross-checking."""

from .ansatz import (
    AnsatzSolution,
    RadialEvaluator,
    energy,
    factorial_form_normalization,
    gamma_normalization,
    match_residuals,
    normalization_constant,
    solve_coefficients,
    wavefunction,
)
from .errors import AccuracyError, ConvergenceError, NoBoundStateError, ParameterError, Radial2DError
from .kernels import BACKEND
from .oracle import (
    OracleReport,
    RadialGrid,
    TridiagonalOperator,
    build_operator,
    default_grid,
    lowest_eigenvalue,
    quadrature_norm,
    residual_scan,
    verify_state,
)
from .potentials import (
    Family,
    MolecularParams,
    PhysicalContext,
    PotentialSpec,
    ReducedCoefficients,
    evaluate_potential,
    from_molecular,
    kratzer_from_molecular,
    pseudoharmonic_from_molecular,
    reduce,
)

__version__ = "0.1.0"
