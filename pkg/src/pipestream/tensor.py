"""Dense n-dimensional value carrier for layer math.

A Tensor is a thin wrapper over a row-major numpy array in the current
numeric mode. Construction in verification mode rejects NaN/Inf so that a
non-finite value is caught where it is produced, not steps later.
"""

from __future__ import annotations

import numpy as np

from . import numerics


class Tensor:
    __slots__ = ("data",)

    def __init__(self, data, copy: bool = False):
        arr = np.array(data, dtype=numerics.dtype(), copy=copy, order="C")
        if numerics.validating() and not np.all(np.isfinite(arr)):
            raise ValueError("non-finite values in tensor construction")
        self.data = arr

    @property
    def shape(self) -> tuple[int, ...]:
        return self.data.shape

    @property
    def flat(self) -> np.ndarray:
        """Row-major flat view of the values."""
        return self.data.reshape(-1)

    @property
    def nbytes(self) -> int:
        return self.data.nbytes

    @classmethod
    def zeros(cls, shape) -> "Tensor":
        t = object.__new__(cls)
        t.data = np.zeros(shape, dtype=numerics.dtype())
        return t

    @classmethod
    def from_flat(cls, shape, flat) -> "Tensor":
        flat = np.asarray(flat, dtype=numerics.dtype())
        n = int(np.prod(shape)) if len(shape) else 1
        if flat.size != n:
            raise ValueError(f"flat data has {flat.size} values, shape {tuple(shape)} needs {n}")
        return cls(flat.reshape(shape))

    def copy(self) -> "Tensor":
        t = object.__new__(Tensor)
        t.data = self.data.copy()
        return t

    def __repr__(self):
        return f"Tensor(shape={self.shape})"


def as_array(x) -> np.ndarray:
    """Accept a Tensor or array-like and return the underlying ndarray."""
    if isinstance(x, Tensor):
        return x.data
    return np.asarray(x, dtype=numerics.dtype())
