"""Whole-body momentum of articulated motion.

Momentum profiles, the momentum-matching loss family, motion-plausibility
metrics and spectral implausibility detection, backed by the C++ core.
"""

try:
    from momo._momo import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:
    from _momo import *  # noqa: F401,F403  (in-tree build directory on sys.path)
