"""Laurent polynomial Landau-Ginzburg potentials of cominuscule homogeneous spaces."""

from .errors import CominusculeError
from .potential import LaurentPotential, compute_potential, evaluate, render
from .rootdata import CominusculeSpace, catalog_spaces

__version__ = "0.1.0"

__all__ = [
    "CominusculeError", "CominusculeSpace", "LaurentPotential", "catalog_spaces",
    "compute_potential", "evaluate", "render",
]
