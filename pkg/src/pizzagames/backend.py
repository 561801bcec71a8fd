"""Kernel selection: compiled extension when importable, pure Python otherwise.

The two kernels implement the same contract; `kernel` is whichever one is
active.  The benchmark command compares them explicitly, so both are kept
reachable here.
"""

from __future__ import annotations

from . import _kernel_py as pure_kernel

try:  # pragma: no cover - depends on the build environment
    from . import _kernel as native_kernel  # type: ignore
except ImportError:  # pragma: no cover
    native_kernel = None

kernel = native_kernel if native_kernel is not None else pure_kernel
BACKEND = "native" if native_kernel is not None else "pure"

# alternating sums of int64-scaled weights must not overflow
_INT64_SAFE = 1 << 62


def int_kernel(ints) -> object:
    """Kernel to use for a plain-integer sequence."""
    if native_kernel is not None and sum(abs(x) for x in ints) < _INT64_SAFE:
        return native_kernel
    return pure_kernel
