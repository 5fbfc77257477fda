# =============================================================
# Standard Library
# =============================================================
from typing import Iterable, Optional

# =============================================================
# Third-Party
# =============================================================
import numpy as np

# =============================================================
# Core
# =============================================================
from core.constants import (
    CERT_CERTIFIED,
    CERT_GRID,
    CERT_HEURISTIC,
    EIG_KIND_H,
    EIG_KIND_Z,
    GRID_MAX_DIM,
    MODE_GRID,
    NORMALIZATION_TOL,
    STATUS_NOT_P0,
    STATUS_P,
    STATUS_P0_NOT_P,
    STATUS_UNDETERMINED,
    WITNESS_TOL,
)
from core.exceptions import UnsupportedOrderException, ValidationException

# =============================================================
# Local
# =============================================================
from tensors.models import AlphaConfig, DeltaReport, PVerdict, ShiftWitness, Tensor
from tensors.services import BaseService, service_entry
from tensors.services.algebra import SHIFT_BY_E, SHIFT_BY_UNIT, TensorService
from tensors.services.alpha import AlphaService, SphereSearch


# =============================================================
# Classification Service
# =============================================================
class ClassificationService(BaseService):
    """
    P / P0 status of a tensor.

    A is P iff alpha(T_A) > 0. Negative verdicts always ship a witness x
    (||x||_inf = 1) with max_i x_i (A x^{m-1})_i <= WITNESS_TOL, evaluated
    directly on A.
    """

    # ---------------------------------------------------------
    # Witness Values
    # ---------------------------------------------------------
    @classmethod
    def witness_values(cls, A: Tensor, X: np.ndarray) -> np.ndarray:
        """max_i x_i (A x^{m-1})_i, row-wise."""
        X = np.atleast_2d(X)
        return np.max(X * TensorService.apply_batch(A, X), axis=1)

    @classmethod
    def witness_value(cls, A: Tensor, x) -> float:
        x = TensorService.check_vector(A, x)
        return float(cls.witness_values(A, x)[0])

    @classmethod
    def support_value(cls, A: Tensor, x) -> float:
        """max of x_i (A x^{m-1})_i over i with x_i != 0 (the P0 quantity)."""
        x = TensorService.check_vector(A, x)
        products = x * TensorService.apply(A, x)
        return float(np.max(products[x != 0]))

    # ---------------------------------------------------------
    # Diagonal Screen
    # ---------------------------------------------------------
    @classmethod
    def diag_check(cls, A: Tensor) -> list[int]:
        """1-based indices i with a_{i..i} <= 0."""
        return [int(i) + 1 for i in np.flatnonzero(A.diagonal() <= 0)]

    # ---------------------------------------------------------
    # Direct Witness Search
    # ---------------------------------------------------------
    @classmethod
    @service_entry("Witness search failed")
    def witness_search(
        cls,
        A: Tensor,
        cfg: Optional[AlphaConfig] = None,
        hints: Optional[Iterable] = None,
    ) -> Optional[np.ndarray]:
        """
        Minimise max_i x_i (A x^{m-1})_i over ||x||_inf = 1 directly on A,
        returning any x at or below WITNESS_TOL.
        """
        cfg = cfg or AlphaConfig()

        # Step 1 — Caller hints first
        found = cls._first_witness(A, hints)
        if found is not None:
            return found

        # Step 2 — Sphere search on the raw product objective
        def objective(X):
            return cls.witness_values(A, X)

        even = A.is_even_order
        if cfg.mode == MODE_GRID and A.dim <= GRID_MAX_DIM:
            value, x, _ = SphereSearch.grid_search(objective, A.dim, even, cfg)
        else:
            value, x = SphereSearch.random_search(objective, A.dim, even, cfg)

        cls.logger().debug("Witness search complete", extra={"n": A.dim, "best_value": value})
        return x if value <= WITNESS_TOL else None

    # ---------------------------------------------------------
    # Classification
    # ---------------------------------------------------------
    @classmethod
    @service_entry("Classification failed")
    def classify(
        cls,
        A: Tensor,
        cfg: Optional[AlphaConfig] = None,
        hints: Optional[Iterable] = None,
    ) -> PVerdict:
        cfg = cfg or AlphaConfig()

        # Step 1 — Cheap necessary condition on the diagonal
        violations = cls.diag_check(A)
        candidates = [np.eye(A.dim)[i - 1] for i in violations]
        candidates += [np.asarray(h, dtype=float) for h in (hints or [])]

        # Step 2 — alpha(T_A), plus alpha(F_A) for even m
        alpha_t = AlphaService.alpha_t(A, cfg)
        alpha_f = AlphaService.alpha_f(A, cfg) if A.is_even_order else None
        certified = alpha_t.certification == CERT_GRID
        candidates.append(alpha_t.minimizer)

        common = {
            "alpha_t_value": alpha_t.value,
            "alpha_f_value": None if alpha_f is None else alpha_f.value,
            "diag_violations": tuple(violations),
        }

        # Step 3 — A verified witness settles "not P"
        witnesses = cls._verified(A, candidates)
        if not witnesses and not cls._is_positive(alpha_t, cfg.tol):
            searched = cls.witness_search(A, cfg, hints=None)
            if searched is not None:
                witnesses = cls._verified(A, [searched])

        if witnesses:
            verdict = cls._negative_verdict(witnesses, cfg, common, certified)

        # Step 4 — Positive alpha beyond its gap
        elif cls._is_positive(alpha_t, cfg.tol):
            verdict = PVerdict(
                status=STATUS_P,
                certification=CERT_CERTIFIED if certified else CERT_HEURISTIC,
                **common,
            )
            # sign cross-check through alpha(F_A)
            if alpha_f is not None and alpha_f.value <= cfg.tol:
                verdict = PVerdict(
                    status=STATUS_UNDETERMINED,
                    certification=CERT_HEURISTIC,
                    note="alpha(T_A) > 0 but alpha(F_A) <= 0",
                    **common,
                )

        # Step 5 — Neither proof available
        else:
            verdict = PVerdict(
                status=STATUS_UNDETERMINED,
                certification=CERT_HEURISTIC,
                note="alpha(T_A) within its gap of 0 and no witness found",
                **common,
            )

        log = cls.logger().warning if verdict.status == STATUS_UNDETERMINED else cls.logger().info
        log(
            "Tensor classified",
            extra={
                "m": A.order,
                "n": A.dim,
                "status": verdict.status,
                "alpha_t": alpha_t.value,
                "certification": verdict.certification,
            },
        )
        return verdict

    # ---------------------------------------------------------
    # Shift Witnesses
    # ---------------------------------------------------------
    @classmethod
    @service_entry("Shift witness failed")
    def shift_witness(cls, A: Tensor, report: DeltaReport, kind: str) -> Optional[ShiftWitness]:
        """
        For the minimising eigenpair (delta, y) of the report, B = A - delta I
        (kind H) or B = A - delta E (kind Z, even m) annihilates y on its
        support, so y certifies that B is not P.
        """
        if kind == EIG_KIND_H:
            delta, y, by = report.delta_h, report.witness_h, SHIFT_BY_UNIT
        elif kind == EIG_KIND_Z:
            if not A.is_even_order:
                raise UnsupportedOrderException("The E-shift needs even m.")
            delta, y, by = report.delta_z, report.witness_z, SHIFT_BY_E
        else:
            raise ValidationException(f"Unknown eigenvalue kind '{kind}'.")

        if delta is None or y is None:
            return None

        B = TensorService.shifted(A, delta, by=by)
        x = SphereSearch.project(y)
        value = cls.witness_value(B, x)
        return ShiftWitness(kind=kind, shift=delta, witness=x, value=value, verified=value <= WITNESS_TOL)

    # ---------------------------------------------------------
    # Helpers
    # ---------------------------------------------------------
    @classmethod
    def _is_positive(cls, alpha, tol: float) -> bool:
        if alpha.lower_bound is not None:
            return alpha.lower_bound > 0
        return alpha.value > tol

    @classmethod
    def _first_witness(cls, A: Tensor, hints) -> Optional[np.ndarray]:
        verified = cls._verified(A, [np.asarray(h, dtype=float) for h in (hints or [])])
        return verified[0][0] if verified else None

    @classmethod
    def _verified(cls, A: Tensor, candidates) -> list[tuple[np.ndarray, float, float]]:
        """(x, witness value, support value) for each candidate that qualifies."""
        out = []
        for x in candidates:
            x = np.asarray(x, dtype=float)
            if x.size != A.dim or np.max(np.abs(x)) <= NORMALIZATION_TOL:
                continue
            x = SphereSearch.project(x)
            w = cls.witness_value(A, x)
            if w <= WITNESS_TOL:
                out.append((x, w, cls.support_value(A, x)))
        return out

    @classmethod
    def _negative_verdict(cls, witnesses, cfg, common, certified) -> PVerdict:
        # strictly negative on the support => not even P0
        x, w, s = min(witnesses, key=lambda item: item[2])
        if s < -cfg.tol:
            return PVerdict(
                status=STATUS_NOT_P0,
                certification=CERT_CERTIFIED,
                witness=x,
                witness_value=w,
                **common,
            )

        x, w, _ = min(witnesses, key=lambda item: item[1])
        return PVerdict(
            status=STATUS_P0_NOT_P,
            certification=CERT_CERTIFIED if certified else CERT_HEURISTIC,
            witness=x,
            witness_value=w,
            note="P0 rests on alpha(T_A) >= -tol",
            **common,
        )
