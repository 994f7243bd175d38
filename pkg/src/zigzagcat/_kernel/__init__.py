"""Reduction kernel selection.

Two interchangeable kernels compute Gaussian reduction: a compiled one
(``_speed``, built from _speed.pyx when a C compiler was available) and the
pure-Python reference (``pure``).  They implement the identical algorithm and
produce byte-identical results; the compiled one just does its rational
arithmetic in C integers, falling back to the pure kernel for any single call
whose coefficients overflow 64 bits.

Selection happens at import, overridable with ZIGZAGCAT_KERNEL=fast|pure|auto.
"""

import importlib
import os

from . import pure

_choice = os.environ.get("ZIGZAGCAT_KERNEL", "auto").strip().lower()
if _choice not in ("auto", "fast", "pure"):
    raise ImportError(f"ZIGZAGCAT_KERNEL must be auto, fast or pure, not {_choice!r}")

_speed = None
if _choice in ("auto", "fast"):
    try:
        _speed = importlib.import_module(__name__ + "._speed")
    except ImportError:
        _speed = None
    if _choice == "fast" and _speed is None:
        raise ImportError("ZIGZAGCAT_KERNEL=fast but the compiled kernel is missing")

ACTIVE = "fast" if _speed is not None else "pure"


def reduce_complex(n, entries, is_idem, prod):
    if _speed is not None:
        try:
            return _speed.reduce_complex(n, entries, is_idem, prod)
        except OverflowError:
            pass  # coefficients outgrew 64 bits; redo exactly in Python
    return pure.reduce_complex(n, entries, is_idem, prod)
