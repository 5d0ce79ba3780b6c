"""
Verma flags of projective covers and composition factors of Verma modules
for the Lie superalgebra osp(3|4), integral atypical weights.
"""

from .engine import Engine, derive_flag, verify_range
from .flags import VermaFlag, sigma_sum, tensor_flag, typical_projective
from .jh import jh_multiplicities, thm41_check
from .linkage import block_label, linked
from .table import classify, table_flag
from .weights import Weight

__all__ = [
    "Weight", "VermaFlag", "Engine", "block_label", "linked", "classify", "table_flag",
    "derive_flag", "verify_range", "sigma_sum", "tensor_flag", "typical_projective",
    "jh_multiplicities", "thm41_check",
]
__version__ = "0.1.0"
