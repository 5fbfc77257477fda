# =============================================================
# Standard Library
# =============================================================
import math
from functools import reduce
from itertools import combinations, permutations
from typing import Iterator

# =============================================================
# Third-Party
# =============================================================
import numpy as np

# =============================================================
# Core
# =============================================================
from core.constants import BATCH_CHUNK_ENTRIES
from core.exceptions import (
    DomainException,
    UnsupportedOrderException,
    ValidationException,
)

# =============================================================
# Local
# =============================================================
from tensors.models import SubsetIndex, Tensor, as_vector
from tensors.services import BaseService


SHIFT_BY_UNIT = "unit"
SHIFT_BY_E = "e"


# =============================================================
# Tensor Service
# =============================================================
class TensorService(BaseService):
    """
    Multilinear evaluation, sub-tensors and the special tensors I and E.
    """

    # ---------------------------------------------------------
    # Multilinear Action
    # ---------------------------------------------------------
    @classmethod
    def check_vector(cls, A: Tensor, x) -> np.ndarray:
        x = as_vector(x)
        if x.size != A.dim:
            raise ValidationException(
                f"Vector length {x.size} does not match tensor dimension {A.dim}."
            )
        return x

    @classmethod
    def apply(cls, A: Tensor, x) -> np.ndarray:
        """(A x^{m-1})_i = sum a_{i i2..im} x_{i2}..x_{im}."""
        x = cls.check_vector(A, x)
        y = A.data
        for _ in range(A.order - 1):
            y = y @ x
        return np.asarray(y, dtype=float)

    @classmethod
    def apply_batch(cls, A: Tensor, X: np.ndarray) -> np.ndarray:
        """Row-wise A x^{m-1} for a (B, n) stack; returns (B, n)."""
        X = np.atleast_2d(np.asarray(X, dtype=float))
        if X.shape[1] != A.dim:
            raise ValidationException(
                f"Vector length {X.shape[1]} does not match tensor dimension {A.dim}."
            )

        chunk = max(1, BATCH_CHUNK_ENTRIES // (A.dim ** (A.order - 1)))
        out = np.empty_like(X)
        for start in range(0, X.shape[0], chunk):
            block = X[start:start + chunk]
            # (n,)*(m-1) + (B,): contract the last tensor axis first
            y = np.tensordot(A.data, block, axes=([A.order - 1], [1]))
            for _ in range(A.order - 2):
                y = np.einsum("...jb,bj->...b", y, block)
            out[start:start + chunk] = y.T
        return out

    @classmethod
    def jacobian(cls, A: Tensor, x) -> np.ndarray:
        """Derivative of x -> A x^{m-1}: sum over the m-1 contracted slots."""
        x = cls.check_vector(A, x)
        jac = np.zeros((A.dim, A.dim))
        for axis in range(1, A.order):
            y = np.moveaxis(A.data, axis, -1)
            for _ in range(A.order - 2):
                y = np.tensordot(y, x, axes=([1], [0]))
            jac += y
        return jac

    # ---------------------------------------------------------
    # Componentwise Powers
    # ---------------------------------------------------------
    @classmethod
    def power_vector(cls, x, p: float) -> np.ndarray:
        """
        Componentwise x_i^p.

        Integer p keeps signs as ordinary powers do. p = 1/k with k odd is
        the sign-preserving real root. Any other non-integer p needs x >= 0.
        """
        x = as_vector(x)

        if float(p).is_integer():
            return np.power(x, int(p))

        root = 1.0 / p
        if float(root).is_integer() or math.isclose(root, round(root), rel_tol=0, abs_tol=1e-12):
            k = int(round(root))
            if k % 2 == 1:
                if k == 3:
                    return np.cbrt(x)
                return np.sign(x) * np.abs(x) ** (1.0 / k)

        if np.any(x < 0):
            raise DomainException(
                f"x^{p} has no real value for a negative component."
            )
        return x ** p

    # ---------------------------------------------------------
    # Principal Sub-tensors
    # ---------------------------------------------------------
    @classmethod
    def principal_subtensor(cls, A: Tensor, J: SubsetIndex) -> Tensor:
        if not isinstance(J, SubsetIndex):
            J = SubsetIndex.of(J, A.dim)
        elif not J.members or J.members[-1] > A.dim or J.members[0] < 1:
            raise ValidationException(f"Subset {J} is out of range for n = {A.dim}.")

        idx = J.positions
        block = A.data[np.ix_(*([idx] * A.order))]
        return Tensor.from_entries(A.order, len(idx), block.ravel())

    @classmethod
    def subsets(cls, dim: int) -> Iterator[SubsetIndex]:
        """All 2^n - 1 nonempty subsets, by size then lexicographically."""
        for size in range(1, dim + 1):
            for members in combinations(range(1, dim + 1), size):
                yield SubsetIndex(members=members)

    @classmethod
    def pad(cls, x_sub, J: SubsetIndex, dim: int) -> np.ndarray:
        full = np.zeros(dim)
        full[J.positions] = x_sub
        return full

    # ---------------------------------------------------------
    # Special Tensors
    # ---------------------------------------------------------
    @classmethod
    def unit_tensor(cls, m: int, n: int) -> Tensor:
        if m < 2 or n < 1:
            raise ValidationException("unit_tensor needs m >= 2 and n >= 1.")
        data = np.zeros((n,) * m)
        idx = np.arange(n)
        data[(idx,) * m] = 1.0
        return Tensor.from_entries(m, n, data.ravel())

    @classmethod
    def diagonal_tensor(cls, m: int, diagonal) -> Tensor:
        diagonal = as_vector(diagonal, name="diagonal")
        n = diagonal.size
        data = np.zeros((n,) * m)
        idx = np.arange(n)
        data[(idx,) * m] = diagonal
        return Tensor.from_entries(m, n, data.ravel())

    @classmethod
    def e_apply(cls, x, m: int) -> np.ndarray:
        """E x^{m-1} = |x|_2^{m-2} x without building E."""
        if m % 2:
            raise UnsupportedOrderException("E x^{m-1} is defined for even m only.")
        x = as_vector(x)
        return float(x @ x) ** ((m - 2) // 2) * x

    @classmethod
    def e_tensor(cls, m: int, n: int) -> Tensor:
        """E = I_2^{m/2}: e_{i1 i2 .. im} = d_{i1 i2} d_{i3 i4} ..."""
        if m % 2:
            raise UnsupportedOrderException("E is defined for even m only.")
        eye = np.eye(n)
        data = reduce(np.multiply.outer, [eye] * (m // 2))
        return Tensor.from_entries(m, n, data.ravel())

    @classmethod
    def shifted(cls, A: Tensor, c: float, by: str = SHIFT_BY_UNIT) -> Tensor:
        """A - c*I or A - c*E."""
        if by == SHIFT_BY_UNIT:
            other = cls.unit_tensor(A.order, A.dim)
        elif by == SHIFT_BY_E:
            other = cls.e_tensor(A.order, A.dim)
        else:
            raise ValidationException(f"Unknown shift kind '{by}'.")
        return Tensor.from_entries(A.order, A.dim, (A.data - c * other.data).ravel())

    # ---------------------------------------------------------
    # Row Sums & Symmetrization
    # ---------------------------------------------------------
    @classmethod
    def row_abs_sums(cls, A: Tensor) -> np.ndarray:
        return np.abs(A.data).reshape(A.dim, -1).sum(axis=1)

    @classmethod
    def symmetrize(cls, A: Tensor) -> Tensor:
        # Only on explicit request; the P-tensor definitions do not assume symmetry.
        perms = list(permutations(range(A.order)))
        total = sum(np.transpose(A.data, perm) for perm in perms)
        return Tensor.from_entries(A.order, A.dim, (total / len(perms)).ravel())
