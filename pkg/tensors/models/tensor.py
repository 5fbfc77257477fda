from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from core.exceptions import InvalidFormatException, ValidationException


# ----------------------
# Array Helpers
# ----------------------
def as_vector(values: Iterable[float] | np.ndarray, *, name: str = "x") -> np.ndarray:
    vector = np.asarray(values, dtype=float)
    if vector.ndim != 1:
        raise ValidationException(f"{name} must be a 1-dimensional vector.")
    if not np.all(np.isfinite(vector)):
        raise InvalidFormatException(f"{name} contains non-finite values.")
    return vector


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=float, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Tensor:
    """
    Dense real m-order n-dimensional hypermatrix.

    `data` has shape (n,)*m in C order, so the flat entry list runs
    row-major over (i1, ..., im) with i1 slowest. The array is read-only.
    """

    # ----------------------
    # Shape & Entries
    # ----------------------
    order: int
    dim: int
    data: np.ndarray

    # ----------------------
    # Constructors
    # ----------------------
    @classmethod
    def from_entries(cls, order: int, dim: int, entries: Sequence[float]) -> "Tensor":
        if order < 2:
            raise ValidationException("Tensor order m must be at least 2.")
        if dim < 1:
            raise ValidationException("Tensor dimension n must be at least 1.")

        flat = np.asarray(entries, dtype=float).ravel()
        if flat.size != dim ** order:
            raise InvalidFormatException(
                f"Expected n^m = {dim ** order} entries, got {flat.size}."
            )
        if not np.all(np.isfinite(flat)):
            raise InvalidFormatException("Tensor entries must be finite.")

        return cls(order=order, dim=dim, data=_frozen(flat.reshape((dim,) * order)))

    @classmethod
    def from_array(cls, array) -> "Tensor":
        array = np.asarray(array, dtype=float)
        if array.ndim < 2 or len(set(array.shape)) != 1:
            raise ValidationException("A tensor array must be a hypercube of order >= 2.")
        return cls.from_entries(array.ndim, array.shape[0], array.ravel())

    # ----------------------
    # Views
    # ----------------------
    @property
    def entries(self) -> np.ndarray:
        return self.data.ravel()

    @property
    def is_even_order(self) -> bool:
        return self.order % 2 == 0

    def diagonal(self) -> np.ndarray:
        idx = np.arange(self.dim)
        return self.data[(idx,) * self.order].copy()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return (
            self.order == other.order
            and self.dim == other.dim
            and np.array_equal(self.data, other.data)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"Tensor(m={self.order}, n={self.dim})"


@dataclass(frozen=True)
class SubsetIndex:
    """
    Nonempty, strictly increasing subset J of {1..n} (1-based).
    """

    members: tuple[int, ...]

    @classmethod
    def of(cls, members: Iterable[int], dim: int) -> "SubsetIndex":
        members = tuple(int(j) for j in members)
        if not members:
            raise ValidationException("Subset J must be nonempty.")
        if any(b <= a for a, b in zip(members, members[1:])):
            raise ValidationException("Subset J must be strictly increasing.")
        if members[0] < 1 or members[-1] > dim:
            raise ValidationException(f"Subset J must lie within 1..{dim}.")
        return cls(members=members)

    @classmethod
    def full(cls, dim: int) -> "SubsetIndex":
        return cls(members=tuple(range(1, dim + 1)))

    @property
    def positions(self) -> np.ndarray:
        return np.asarray(self.members, dtype=int) - 1

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(str(j) for j in self.members) + "}"
