"""Strictification of free symmetric monoidal categories with sums.

Free 1-cells are expressions built from generators, units, zeros,
composition and sum; :func:`normalize` sends them to ordered sums of
generator strings, and :func:`canonical_iso` witnesses each expression's
isomorphism to its normal form.  Structural 2-cells are decided by their
action on monomial positions (:func:`check_diagram`).
"""

from .cells import *  # noqa: F401,F403
from .cells import __all__ as _cells_all
from .core import *  # noqa: F401,F403
from .core import __all__ as _core_all
from .errors import (BoundaryMismatch, EndpointMismatch, IllTyped, InvalidFunctor,
                     MissingAssignment, NonDegenerate, NotStructural, ParseError,
                     ResolveError, SignatureError, SmcError)
from .normalize import *  # noqa: F401,F403
from .normalize import __all__ as _normalize_all
from .twocell import (DEFAULT_SEMANTICS, CheckReport, MonomialBijection, Semantics,
                      check_diagram, path_boundary, perm_of)

__version__ = "0.1.0"

__all__ = [
    *_core_all, *_cells_all, *_normalize_all,
    "MonomialBijection", "Semantics", "DEFAULT_SEMANTICS", "CheckReport", "check_diagram",
    "path_boundary", "perm_of",
    "SmcError", "SignatureError", "ResolveError", "IllTyped", "EndpointMismatch",
    "BoundaryMismatch", "NotStructural", "MissingAssignment", "NonDegenerate",
    "InvalidFunctor", "ParseError",
]
