# =============================================================
# Standard Library
# =============================================================
from typing import Optional

# =============================================================
# Third-Party
# =============================================================
import numpy as np

# =============================================================
# Core
# =============================================================
from core.constants import (
    CERT_GRID,
    CERT_HEURISTIC,
    GRID_MAX_DIM,
    MODE_GRID,
    OP_F,
    OP_T,
)
from core.exceptions import UnsupportedOrderException, ValidationException

# =============================================================
# Local
# =============================================================
from tensors.models import AlphaConfig, AlphaResult, Tensor
from tensors.services import BaseService, service_entry
from tensors.services.algebra import TensorService
from tensors.services.alpha.sphere_search import SphereSearch


# =============================================================
# Alpha Service
# =============================================================
class AlphaService(BaseService):
    """
    The operators

        T_A(x) = ||x||_2^{2-m} A x^{m-1}     (T_A(0) = 0)
        F_A(x) = (A x^{m-1})^{[1/(m-1)]}     (even m)

    and alpha(op) = min_{||x||_inf = 1} max_i x_i op(x)_i.
    """

    # ---------------------------------------------------------
    # Operators
    # ---------------------------------------------------------
    @classmethod
    def t_operator(cls, A: Tensor, x) -> np.ndarray:
        x = TensorService.check_vector(A, x)
        return cls.t_operator_batch(A, x[None, :])[0]

    @classmethod
    def f_operator(cls, A: Tensor, x) -> np.ndarray:
        x = TensorService.check_vector(A, x)
        return cls.f_operator_batch(A, x[None, :])[0]

    @classmethod
    def t_operator_batch(cls, A: Tensor, X: np.ndarray) -> np.ndarray:
        Y = TensorService.apply_batch(A, X)
        sq = np.einsum("bi,bi->b", X, X)
        scale = np.zeros_like(sq)
        nonzero = sq > 0
        scale[nonzero] = sq[nonzero] ** ((2 - A.order) / 2)
        return Y * scale[:, None]

    @classmethod
    def f_operator_batch(cls, A: Tensor, X: np.ndarray) -> np.ndarray:
        cls._require_even(A, "F_A")
        Y = TensorService.apply_batch(A, X)
        k = A.order - 1
        if k == 1:
            return Y
        if k == 3:
            return np.cbrt(Y)
        return np.sign(Y) * np.abs(Y) ** (1.0 / k)

    @classmethod
    def objective(cls, A: Tensor, op: str):
        """Batched x -> max_i x_i op(x)_i."""
        operator = cls._operator_batch(op)
        return lambda X: np.max(X * operator(A, X), axis=1)

    # ---------------------------------------------------------
    # Operator-norm Bounds
    # ---------------------------------------------------------
    @classmethod
    def operator_norm_bound(cls, A: Tensor, kind: str) -> float:
        bound = float(TensorService.row_abs_sums(A).max())
        if kind == OP_T:
            return bound
        if kind == OP_F:
            cls._require_even(A, "||F_A||_inf")
            return bound ** (1.0 / (A.order - 1))
        raise ValidationException(f"Unknown operator '{kind}'.")

    @classmethod
    def grid_gap(cls, A: Tensor, op: str, h: float) -> float:
        """
        Upper bound on how far the true minimum can sit below the grid
        minimum: a Lipschitz (T) or Hoelder (F) modulus of the objective
        on a face times the half-spacing h/2.
        """
        m, n = A.order, A.dim
        R = float(TensorService.row_abs_sums(A).max())
        half = h / 2
        if op == OP_T:
            return (R + (m - 2) * np.sqrt(n) * R + (m - 1) * R) * half
        p = 1.0 / (m - 1)
        return half * R ** p + 2 ** (1 - p) * ((m - 1) * R * half) ** p

    # ---------------------------------------------------------
    # Alpha Quantities
    # ---------------------------------------------------------
    @classmethod
    def alpha_t(cls, A: Tensor, cfg: Optional[AlphaConfig] = None, hints=None) -> AlphaResult:
        return cls.alpha(A, OP_T, cfg, hints)

    @classmethod
    def alpha_f(cls, A: Tensor, cfg: Optional[AlphaConfig] = None, hints=None) -> AlphaResult:
        cls._require_even(A, "alpha(F_A)")
        return cls.alpha(A, OP_F, cfg, hints)

    @classmethod
    @service_entry("Alpha computation failed")
    def alpha(cls, A: Tensor, op: str, cfg: Optional[AlphaConfig] = None, hints=None) -> AlphaResult:
        """
        Grid-certified or multi-start minimisation of max_i x_i op(x)_i.
        Optional hints are extra candidate points (any nonzero scale) that
        join the refinement pool.
        """
        cfg = cfg or AlphaConfig()
        if op not in (OP_T, OP_F):
            raise ValidationException(f"Unknown operator '{op}'.")
        if op == OP_F:
            cls._require_even(A, "alpha(F_A)")

        objective = cls.objective(A, op)
        # g(-x) = g(x) unless T with odd m
        even = op == OP_F or A.is_even_order

        # Step 1 — Grid-certified search where the grid is affordable
        if cfg.mode == MODE_GRID and A.dim <= GRID_MAX_DIM:
            value, minimizer, _ = SphereSearch.grid_search(objective, A.dim, even, cfg, hints)
            result = AlphaResult(
                value=value,
                minimizer=minimizer,
                objective_kind=op,
                certification=CERT_GRID,
                grid_resolution=cfg.grid_resolution,
                grid_gap=cls.grid_gap(A, op, cfg.grid_resolution),
            )

        # Step 2 — Otherwise multi-start
        else:
            if cfg.mode == MODE_GRID:
                cls.logger().warning(
                    "Grid search unavailable for this dimension, using heuristic mode",
                    extra={"n": A.dim, "max_grid_dim": GRID_MAX_DIM},
                )
            value, minimizer = SphereSearch.random_search(objective, A.dim, even, cfg, hints)
            result = AlphaResult(
                value=value,
                minimizer=minimizer,
                objective_kind=op,
                certification=CERT_HEURISTIC,
            )

        cls.logger().info(
            "Alpha computed",
            extra={
                "op": op,
                "m": A.order,
                "n": A.dim,
                "value": result.value,
                "certification": result.certification,
                "grid_gap": result.grid_gap,
            },
        )
        return result

    # ---------------------------------------------------------
    # Helpers
    # ---------------------------------------------------------
    @classmethod
    def _operator_batch(cls, op: str):
        if op == OP_T:
            return cls.t_operator_batch
        if op == OP_F:
            return cls.f_operator_batch
        raise ValidationException(f"Unknown operator '{op}'.")

    @staticmethod
    def _require_even(A: Tensor, what: str) -> None:
        if not A.is_even_order:
            raise UnsupportedOrderException(f"{what} is defined for even m only (got m={A.order}).")
