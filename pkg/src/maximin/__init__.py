"""Maximin determinants of sets of unit vectors in R^n and C^n."""
from .core import (
    Configuration, DetSpectrum, Field, det_spectrum, det_subset, from_array, min_det,
    validate_config,
)
from .simplex import max_volume_n_plus_2, regular_det_value, regular_simplex_vertices
from .solver import Problem, SolverParams, SolverResult, solve

__all__ = [
    "Configuration", "DetSpectrum", "Field", "det_spectrum", "det_subset", "from_array",
    "min_det", "validate_config", "max_volume_n_plus_2", "regular_det_value",
    "regular_simplex_vertices", "Problem", "SolverParams", "SolverResult", "solve",
]
