"""Kernel backend selection.

By default the compiled extension (Cython + GMP) is used when importable and
the pure-Python implementation otherwise.  The FIBCUBES_BACKEND environment
variable forces a choice: "compiled" (import error if unavailable) or
"python".  Never required for normal use.
"""

import os

_choice = os.environ.get("FIBCUBES_BACKEND", "auto").strip().lower()

if _choice in ("", "auto"):
    try:
        from . import _core_c as core
    except ImportError:
        from . import _core_py as core
elif _choice in ("compiled", "c"):
    from . import _core_c as core
elif _choice in ("python", "py", "pure"):
    from . import _core_py as core
else:
    raise ImportError(f"unknown FIBCUBES_BACKEND value: {_choice!r}")

BACKEND = "compiled" if core.__name__.endswith("_core_c") else "python"
