"""Exact computation of Humbert surface components in Rosenhain invariants.

The package builds truncated Fourier expansions of theta constants
restricted to a Humbert surface, forms the Rosenhain invariants as exact
power series, and finds the polynomial relations they satisfy by sparse
exact linear algebra. A numeric oracle double-checks everything at
honestly sampled period matrices.
"""

__version__ = "1.0.0"

from .degrees import a_delta, deg_conjectured, deg_fstar, m_components
from .poly import MultiPoly, format_poly, parse_poly
from .relations import find_relation
from .rosenhain import rosenhain_triple
from .series import TruncatedSeries
from .theta import Discriminant, ThetaChar, humbert_params, restricted_theta

__all__ = [
    "__version__",
    "a_delta", "deg_conjectured", "deg_fstar", "m_components",
    "MultiPoly", "format_poly", "parse_poly",
    "find_relation", "rosenhain_triple", "TruncatedSeries",
    "Discriminant", "ThetaChar", "humbert_params", "restricted_theta",
]
