"""Kernel selection: compiled extension when available, else pure Python.

Set STANLEYDEC_KERNEL=py (or =cy) to force a backend.
"""

import os

_forced = os.environ.get("STANLEYDEC_KERNEL", "").strip().lower()

if _forced == "py":
    from . import _intervals_py as _impl
    BACKEND = "py"
elif _forced == "cy":
    from . import _intervals_cy as _impl  # noqa: F401
    BACKEND = "cy"
else:
    try:
        from . import _intervals_cy as _impl  # type: ignore[no-redef]
        BACKEND = "cy"
    except ImportError:
        from . import _intervals_py as _impl  # type: ignore[no-redef]
        BACKEND = "py"

find_partition = _impl.find_partition
