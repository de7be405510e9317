"""Minimum-weight problems for subgroup permutation codes under Chebyshev distance."""

from .errors import PermCodeError
from .kernels import BACKEND
from .metric import chebyshev, weight
from .perm import (
    Permutation,
    compose,
    format_cycles,
    from_cycles,
    from_one_line,
    identity,
    inverse,
    parse_cycles,
    shift,
    stretch,
    to_cycles,
    to_one_line,
)

__version__ = "0.1.0"
