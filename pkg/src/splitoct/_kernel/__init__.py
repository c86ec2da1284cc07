"""Enumeration kernel selection.

The exhaustive octonion scan has a compiled implementation and a numpy
fallback with identical semantics: walk an index range in odometer
order, evaluate the polynomial through flat scalar add/sub/mul tables,
and return the indices that hit the target.  The compiled module is
used when the build produced it; set SPLITOCT_FORCE_PYTHON=1 to insist
on the fallback.
"""

import os

from . import scan_py

_cy = None
if os.environ.get("SPLITOCT_FORCE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _scan_cy as _cy
    except ImportError:
        _cy = None

if _cy is not None:
    scan_range = _cy.scan_range
    ENGINE = "cython"
else:
    scan_range = scan_py.scan_range
    ENGINE = "python"


def get_engine(name: str = "auto"):
    """Resolve an engine name to (scan function, engine label)."""
    if name == "auto":
        return scan_range, ENGINE
    if name == "python":
        return scan_py.scan_range, "python"
    if name == "cython":
        if _cy is None:
            raise RuntimeError("the compiled scan kernel is not available "
                               "in this build")
        return _cy.scan_range, "cython"
    raise ValueError(f"unknown engine {name!r}")
