"""hullforge: hull dimensions of linear codes over GF(p^m), and the
monomial re-engineering of them.

Compute hull dimensions exactly, rescale codes to any smaller hull
dimension with replayable witnesses, build one-dimensional-hull codes,
certify pure-LCD codes by exhaustive square-class scans, and derive
entanglement-assisted quantum code parameters.

The enumeration-heavy kernels run on a compiled extension when it is
available and on a pure-Python fallback otherwise; see
``hullforge.kernel_backend()``.
"""

from ._kernels import BACKEND_NAME as _backend_name
from .code import HullReport, LinearCode, MonomialTransform
from .errors import *  # noqa: F401,F403 -- the error module defines the hierarchy
from .gf import FieldElement, FieldSpec
from .hulltune import (DEFAULT_SEED, ChainEntry, ChainReport, EaqeccParams,
                       OrthogonalBasis, char2_break_pure, eaqecc_params,
                       find_lcd_scaling, hull_chain, make_one_dim_hull,
                       orthogonal_basis, reduce_hull_once)
from .matgf import MatrixGF
from .purelcd import (PurityReport, PurityWitness, ScanReport, Specimen,
                      conjecture_scan, is_pure_lcd, pure_family)

__version__ = "0.1.0"


def kernel_backend() -> str:
    """Which enumeration backend this process is using: 'fast' or 'pure'."""
    return _backend_name
