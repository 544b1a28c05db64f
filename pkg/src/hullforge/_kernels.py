"""Backend selection for the enumeration kernels.

The compiled extension ``hullforge._fastcore`` is preferred when it
built; ``hullforge._purecore`` is the drop-in fallback.  Set
HULLFORGE_BACKEND=pure (or =fast) to force a choice; forcing `fast`
on an install without the extension is an import error rather than a
silent downgrade.
"""

import os

_requested = os.environ.get("HULLFORGE_BACKEND", "").strip().lower()

if _requested in ("pure", "py", "python"):
    from . import _purecore as _impl
elif _requested in ("", "fast", "c"):
    try:
        from . import _fastcore as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _requested:
            raise ImportError(
                "HULLFORGE_BACKEND=fast requested but the compiled "
                "extension is not available") from None
        from . import _purecore as _impl
else:
    raise ValueError(f"unknown HULLFORGE_BACKEND={_requested!r}")

BACKEND_NAME = _impl.BACKEND_NAME
min_weight = _impl.min_weight
orthogonal_count = _impl.orthogonal_count
first_singular_class = _impl.first_singular_class
