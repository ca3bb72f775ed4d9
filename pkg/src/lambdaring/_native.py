"""Select the compiled kernels when built, else the pure-Python ones.

Set ``LAMBDARING_PURE=1`` to force the Python implementation.
"""
import os

BACKEND = "python"

if os.environ.get("LAMBDARING_PURE", "") not in ("", "0"):
    from ._kernels_py import bareiss_rank, mn_table, place_permutation
else:
    try:
        from ._kernels import bareiss_rank, mn_table, place_permutation
        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import bareiss_rank, mn_table, place_permutation

__all__ = ["BACKEND", "bareiss_rank", "mn_table", "place_permutation"]
