"""Predicate-core selection.

The package ships two interchangeable implementations of the integer
predicate core: vislink._pure (reference, always present) and vislink._core
(compiled twin, built by setup.py when a C toolchain is available). They are
line-for-line mirrors and must agree bit for bit; tests enforce parity.

Selection happens once at import. VISLINK_BACKEND=pure forces the reference
implementation, VISLINK_BACKEND=compiled demands the extension (ImportError
if missing); unset picks the extension when importable.
"""

from __future__ import annotations

import os

from . import _pure

impl = _pure
name = "pure"

_want = os.environ.get("VISLINK_BACKEND", "").strip().lower()
if _want not in ("", "pure", "compiled"):
    raise ImportError(
        "VISLINK_BACKEND must be 'pure' or 'compiled', got %r" % (_want,)
    )

if _want != "pure":
    try:
        from . import _core  # type: ignore[attr-defined]
    except ImportError:
        if _want == "compiled":
            raise
    else:
        impl = _core
        name = "compiled"
