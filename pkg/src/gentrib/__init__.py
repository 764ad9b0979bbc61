"""
gentrib-utils package.
"""

from contextlib import suppress
from importlib.metadata import PackageNotFoundError, version

__version__ = "unknown"
with suppress(PackageNotFoundError):
    __version__ = version("gentrib-utils")

from gentrib.analytic import BinetOverflow, DeltaNotPositive, RootConvergenceError, cubic_roots, v_binet
from gentrib.identities import CheckReport, run_suite
from gentrib.matrix import Mat3, Mat3Mod, mat_pow, mat_pow_mod, term_by_matrix
from gentrib.notation import format_params, parse_params
from gentrib.quaternion import Quaternion, quaternion_binet, seq_quaternion
from gentrib.seq_core import SequenceParams, make_params, preset, term_iterative, terms_range
from gentrib.suite_config import SuiteConfig

__all__ = [
    "BinetOverflow",
    "CheckReport",
    "DeltaNotPositive",
    "Mat3",
    "Mat3Mod",
    "Quaternion",
    "RootConvergenceError",
    "SequenceParams",
    "SuiteConfig",
    "cubic_roots",
    "format_params",
    "make_params",
    "mat_pow",
    "mat_pow_mod",
    "parse_params",
    "preset",
    "quaternion_binet",
    "run_suite",
    "seq_quaternion",
    "term_by_matrix",
    "term_iterative",
    "terms_range",
    "v_binet",
]
