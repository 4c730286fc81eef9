"""Kernel backend selection: compiled Cython twin when available.

Call sites import this module and look the functions up as attributes, so
set_backend() can swap implementations at runtime (the benchmark and the
kernel tests rely on that).
"""

from __future__ import annotations

from . import _corepoly_py

try:
    from . import _corepoly_cy
except ImportError:
    _corepoly_cy = None

_NAMES = (
    "strip",
    "add",
    "sub",
    "neg",
    "mul",
    "mul_trunc",
    "scale",
    "div_scalar",
    "eval_at",
    "deriv",
    "divmod_lc",
    "prem",
    "resultant",
)

_active = None


def available_backends() -> tuple[str, ...]:
    return ("py", "cy") if _corepoly_cy is not None else ("py",)


def active_backend() -> str:
    return _active


def set_backend(name: str) -> None:
    global _active
    if name == "py":
        mod = _corepoly_py
    elif name == "cy":
        if _corepoly_cy is None:
            raise RuntimeError("compiled kernels are not built")
        mod = _corepoly_cy
    else:
        raise ValueError(f"unknown backend {name!r}")
    for fn in _NAMES:
        globals()[fn] = getattr(mod, fn)
    _active = name


set_backend("cy" if _corepoly_cy is not None else "py")
