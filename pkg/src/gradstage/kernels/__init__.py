"""Loss/gradient kernel backend selection.

Prefers the compiled extension when it is importable, otherwise falls back
to the pure-Python reference.  GRADSTAGE_KERNELS=py or =c forces a backend
(=c raises if the extension is missing).  Both backends are bit-identical;
the compiled one just makes the 30-steps-per-second held-chord path and the
acceptance sweeps cheap.
"""

from __future__ import annotations

import os

from . import reference

_forced = os.environ.get("GRADSTAGE_KERNELS", "").lower()

if _forced == "py":
    _impl = reference
    BACKEND = "python"
elif _forced == "c":
    from . import _core as _impl  # noqa: F401

    BACKEND = "compiled"
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = reference
        BACKEND = "python"

cubic_loss_grad = _impl.cubic_loss_grad
lissajous_loss_grad = _impl.lissajous_loss_grad

__all__ = ["BACKEND", "cubic_loss_grad", "lissajous_loss_grad", "reference"]
