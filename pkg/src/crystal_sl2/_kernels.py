"""Select the polynomial kernel implementation at import time.

The compiled ``_ckernels`` module is used when it was built; otherwise the
pure-Python ``_pykernels`` module is used.  Setting the environment
variable ``CRYSTAL_SL2_PURE=1`` forces the pure-Python path.
"""

import os

if os.environ.get("CRYSTAL_SL2_PURE", "") not in ("", "0"):
    from ._pykernels import *  # noqa: F401,F403
    from ._pykernels import IMPLEMENTATION
else:
    try:
        from ._ckernels import *  # noqa: F401,F403
        from ._ckernels import IMPLEMENTATION
    except ImportError:
        from ._pykernels import *  # noqa: F401,F403
        from ._pykernels import IMPLEMENTATION

__all__ = [
    "IMPLEMENTATION", "add", "content", "derivative", "divexact",
    "divmod_poly", "gcd_poly", "mul", "prem", "scale", "sub", "trim",
]
