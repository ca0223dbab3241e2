"""Select the kernel backend.

The compiled extension is used when it imports; setting the environment
variable ``MODCONG_PURE_PYTHON=1`` forces the pure-Python kernels.
"""
import os

BACKEND = "python"

if not os.environ.get("MODCONG_PURE_PYTHON"):
    try:
        from ._ckernels import (  # noqa: F401
            bfs_relabel,
            compose_images,
            labels_consistent,
            power_images,
            word_images,
        )
        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._pykernels import (  # noqa: F401
        bfs_relabel,
        compose_images,
        labels_consistent,
        power_images,
        word_images,
    )
