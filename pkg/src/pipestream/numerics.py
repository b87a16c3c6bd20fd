"""Global numeric mode.

Verification and oracle runs use 64-bit floats so exact-equivalence checks
have headroom; throughput benchmarks switch to 32-bit. The mode is a
process-wide setting: flip it before building models or pipelines, not in
the middle of a run.
"""

import numpy as np

_DTYPES = {"f64": np.float64, "f32": np.float32}

_mode = "f64"


def set_mode(mode: str) -> None:
    global _mode
    if mode not in _DTYPES:
        raise ValueError(f"unknown numeric mode {mode!r}, expected one of {sorted(_DTYPES)}")
    _mode = mode


def get_mode() -> str:
    return _mode


def dtype():
    return _DTYPES[_mode]


def itemsize() -> int:
    return np.dtype(_DTYPES[_mode]).itemsize


def validating() -> bool:
    # NaN/Inf screening is only worth its cost in verification (f64) runs.
    return _mode == "f64"
