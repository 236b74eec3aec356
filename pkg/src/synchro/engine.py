"""Kernel selection: compiled extension if built, numpy fallback otherwise.

Both backends expose ``run_word``/``trace_word`` over packed bitsets.
``SYNCHRO_FORCE_FALLBACK=1`` pins the numpy backend (used by the
benchmark to compare the two).
"""

import os

from . import _fallback

if os.environ.get("SYNCHRO_FORCE_FALLBACK") == "1":
    _impl = _fallback
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _fallback

run_word = _impl.run_word
trace_word = _impl.trace_word
backend_name = _impl.backend_name


def available_backends():
    names = [_fallback.backend_name()]
    try:
        from . import _kernels
        names.insert(0, _kernels.backend_name())
    except ImportError:
        pass
    return names
