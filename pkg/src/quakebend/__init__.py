"""Computable core of constant-curvature (2+1) spacetimes of finite type.

Matrix models of the isometry groups, Fenchel-Nielsen and shear
coordinates on Teichmueller space, finite measured geodesic laminations,
earthquake and bending cocycles, Wick-rotation/rescaling local models,
and AdS multi-black-hole invariants.  Every nontrivial construction is
cross-validated by an independent oracle in the test suite.
"""

from quakebend.errors import (
    QuakebendError,
    MalformedMatrixError,
    WrongClassError,
    DomainError,
    StructureError,
)

__version__ = "0.1.0"

__all__ = [
    "QuakebendError",
    "MalformedMatrixError",
    "WrongClassError",
    "DomainError",
    "StructureError",
    "__version__",
]
