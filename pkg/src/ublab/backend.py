"""Kernel backend selection.

Two interchangeable kernel modules implement the numeric core:

* ``ublab._kernels_numba`` — JIT-compiled loops (default when numba imports).
* ``ublab._kernels_numpy`` — vectorized ndarray fallback, no JIT dependency.

The ``UBLAB_BACKEND`` environment variable picks one: ``auto`` (default),
``numba``, or ``numpy``. ``numba`` fails loudly if numba is unavailable
rather than silently degrading.
"""

import os

_REQUESTED = os.environ.get("UBLAB_BACKEND", "auto").strip().lower()
if _REQUESTED not in ("auto", "numba", "numpy"):
    raise ImportError(
        f"UBLAB_BACKEND={_REQUESTED!r} is not recognized; "
        "expected 'auto', 'numba', or 'numpy'"
    )

if _REQUESTED == "numpy":
    from ublab import _kernels_numpy as kernels

    USING_NUMBA = False
elif _REQUESTED == "numba":
    from ublab import _kernels_numba as kernels

    USING_NUMBA = True
else:
    try:
        from ublab import _kernels_numba as kernels

        USING_NUMBA = True
    except ImportError:
        from ublab import _kernels_numpy as kernels

        USING_NUMBA = False


def backend_name():
    """Name of the active kernel backend: 'numba' or 'numpy'."""
    return "numba" if USING_NUMBA else "numpy"


def warmup():
    """Force JIT compilation of the hot kernels on a tiny input.

    No-op on the numpy backend. Useful before timing anything.
    """
    import numpy as np

    indptr = np.array([0, 1, 2], dtype=np.int32)
    nbrs = np.array([1, 0], dtype=np.int32)
    dist = kernels.bfs_distances(indptr, nbrs, 2)
    kernels.closer_counts(dist)
    kernels.unbalance_sums(dist)
    parents = np.array([[0, 0, 1]], dtype=np.int32)
    kernels.batch_tree_sums(parents)
    if USING_NUMBA:
        edges = np.array([[0, 1], [1, 2]], dtype=np.int64)
        kernels.canonical_levels_from_edges(edges, 3)
