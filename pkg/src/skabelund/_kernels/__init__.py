"""Kernel backend selection: compiled extension if importable, else pure Python.

Set SKABELUND_PURE=1 to force the pure-Python backend (used by the benchmark
and by CI to exercise both code paths).
"""

from __future__ import annotations

import os

from . import pure

if os.environ.get("SKABELUND_PURE"):
    _impl = pure
else:
    try:
        from . import _speed as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pure

BACKEND_NAME: str = _impl.BACKEND_NAME
sigma_cm_iota_counts = _impl.sigma_cm_iota_counts
congruence_count = _impl.congruence_count
cm_subgroups = _impl.cm_subgroups


def available_backends() -> dict[str, object]:
    """Importable kernel modules keyed by backend name."""
    backends: dict[str, object] = {pure.BACKEND_NAME: pure}
    try:
        from . import _speed

        backends[_speed.BACKEND_NAME] = _speed
    except ImportError:
        pass
    return backends
