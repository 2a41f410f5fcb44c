"""Word-matching kernels.

The compiled extension is used when it was built; otherwise, or when
``NCGB_KERNELS=python`` is set, the pure-Python twin is loaded. Both expose
``occurrences``, ``overlap_lengths``, ``weighted_degree`` and ``LMIndex``.
"""

import os

if os.environ.get("NCGB_KERNELS", "").lower() == "python":
    from ._pykernels import BACKEND, LMIndex, occurrences, overlap_lengths, weighted_degree
else:
    try:
        from ._ckernels import BACKEND, LMIndex, occurrences, overlap_lengths, weighted_degree
    except ImportError:
        from ._pykernels import BACKEND, LMIndex, occurrences, overlap_lengths, weighted_degree

__all__ = ["BACKEND", "LMIndex", "occurrences", "overlap_lengths", "weighted_degree"]
