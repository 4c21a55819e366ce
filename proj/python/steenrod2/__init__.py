"""Exact mod-2 Steenrod algebra computations (string-based API over the C++ core)."""

try:
    from ._steenrod2 import *  # noqa: F401,F403
    from ._steenrod2 import __doc__ as _core_doc  # noqa: F401
except ImportError:  # extension built out-of-tree (e.g. test runs from the build dir)
    from _steenrod2 import *  # noqa: F401,F403

__all__ = [
    "sq",
    "milnor_q",
    "adem",
    "serre_generators",
    "evaluate",
    "kernel",
    "classify_form",
    "census",
    "dickson_dims",
    "subalgebra_dims",
    "m2_dims",
    "ext_witness_dims",
    "norm_check",
    "tv_f_dims",
    "tv_hk_degree0",
    "l2_zero_dim",
    "tor",
    "loop_check",
    "search",
    "verify",
    "ResourceError",
]
