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
from core.constants import TCP_MIN_MAP, TCP_REFORMULATIONS
from core.exceptions import UnsupportedOrderException, ValidationException

# =============================================================
# Local
# =============================================================
from tensors.models import SubsetIndex, TcpConfig, TcpInstance, TcpSolution
from tensors.services import BaseService, service_entry
from tensors.services.algebra import TensorService


# =============================================================
# TCP Service
# =============================================================
class TcpService(BaseService):
    """
    TCP(A, q): x >= 0, w = q + A x^{m-1} >= 0, x'w = 0, solved as the
    nonsmooth equation min(x, w) = 0 or its Fischer-Burmeister form.
    """

    # ---------------------------------------------------------
    # Residuals
    # ---------------------------------------------------------
    @classmethod
    def w_vector(cls, inst: TcpInstance, x) -> np.ndarray:
        return inst.q + TensorService.apply(inst.tensor, x)

    @classmethod
    def tcp_residual(cls, inst: TcpInstance, x) -> float:
        x = TensorService.check_vector(inst.tensor, x)
        return float(np.max(np.abs(np.minimum(x, cls.w_vector(inst, x)))))

    # ---------------------------------------------------------
    # Solver
    # ---------------------------------------------------------
    @classmethod
    @service_entry("TCP solve failed")
    def solve_tcp(cls, inst: TcpInstance, cfg: Optional[TcpConfig] = None) -> TcpSolution:
        """
        Damped semismooth Newton from each start in turn. A start is run on
        the min-map first and, if that stalls, on the Fischer-Burmeister
        function; the first converged run wins. Without convergence the
        best residual found is returned with converged=False.
        """
        cfg = cfg or TcpConfig()
        best: Optional[TcpSolution] = None

        for index, x0 in enumerate(cls._starts(inst, cfg)):
            for reformulation in TCP_REFORMULATIONS:
                solution = cls.newton(inst, x0, cfg, reformulation, index)
                cls.logger().debug(
                    "TCP start finished",
                    extra={
                        "start": index,
                        "reformulation": reformulation,
                        "residual": solution.residual,
                        "converged": solution.converged,
                    },
                )
                if solution.converged:
                    cls.logger().info(
                        "TCP solved",
                        extra={
                            "n": inst.tensor.dim,
                            "start": index,
                            "reformulation": reformulation,
                            "iterations": solution.iterations,
                        },
                    )
                    return solution
                if best is None or solution.residual < best.residual:
                    best = solution

        cls.logger().warning(
            "TCP did not converge from any start",
            extra={"n": inst.tensor.dim, "best_residual": best.residual, "starts": cfg.starts},
        )
        return best

    # ---------------------------------------------------------
    # Starting Points
    # ---------------------------------------------------------
    @classmethod
    def _starts(cls, inst: TcpInstance, cfg: TcpConfig) -> list[np.ndarray]:
        n, m = inst.tensor.dim, inst.tensor.order
        warm = TensorService.power_vector(np.maximum(-inst.q, 0.0), 1.0 / (m - 1))
        starts = [np.zeros(n), warm]

        guess = cls.support_start(inst, cfg)
        if guess is not None:
            starts.insert(0, guess)

        rng = np.random.default_rng(cfg.seed)
        scale = max(1.0, float(np.max(warm)))
        while len(starts) < cfg.starts:
            starts.append(rng.uniform(0.0, scale, size=n))
        return starts[: cfg.starts]

    @classmethod
    def support_start(cls, inst: TcpInstance, cfg: TcpConfig) -> Optional[np.ndarray]:
        """
        Guess the support S = {i : q_i < 0} and solve q_S + A_S y^{m-1} = 0
        for y > 0 by Newton's method kept inside the positive orthant.
        Returns y padded with zeros, x = 0 when q >= 0, or None when the
        reduced system has no positive root from the diagonal start.
        """
        A, q = inst.tensor, inst.q
        negative = np.flatnonzero(q < 0)
        if negative.size == 0:
            return np.zeros(A.dim)

        J = SubsetIndex.of(negative + 1, A.dim)
        B = TensorService.principal_subtensor(A, J)
        qs = q[negative]

        # Step 1 — Diagonal start: a_{i..i} y_i^{m-1} = -q_i
        diag = np.array([B.data[(i,) * B.order] for i in range(B.dim)])
        scale = np.where(diag > 0, diag, 1.0)
        y = TensorService.power_vector(-qs / scale, 1.0 / (B.order - 1))

        def residual(v):
            return qs + TensorService.apply(B, v)

        # Step 2 — Newton with a fraction-to-boundary rule and Armijo on 1/2 |F|^2
        F = residual(y)
        for _ in range(cfg.max_iters):
            if np.max(np.abs(F)) <= cfg.tol:
                return TensorService.pad(y, J, A.dim)
            step = np.linalg.lstsq(TensorService.jacobian(B, y), -F, rcond=None)[0]
            shrinking = step < 0
            t = min(1.0, 0.99 * float(np.min(-y[shrinking] / step[shrinking]))) if shrinking.any() else 1.0
            merit = 0.5 * float(F @ F)
            while t >= cfg.min_step:
                trial = y + t * step
                trial_F = residual(trial)
                if 0.5 * float(trial_F @ trial_F) <= (1.0 - 2.0 * cfg.sufficient_decrease * t) * merit:
                    break
                t *= cfg.backtrack_factor
            else:
                return None
            y, F = trial, trial_F

        return TensorService.pad(y, J, A.dim) if np.max(np.abs(F)) <= cfg.tol else None

    # ---------------------------------------------------------
    # Reformulations
    # ---------------------------------------------------------
    @classmethod
    def _min_map(cls, inst: TcpInstance, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """min(x, w) and an element of its generalised Jacobian: e_i where x_i <= w_i."""
        w = cls.w_vector(inst, x)
        rows = TensorService.jacobian(inst.tensor, x)
        active = x <= w
        rows[active] = np.eye(inst.tensor.dim)[active]
        return np.minimum(x, w), rows

    @classmethod
    def _fischer_burmeister(cls, inst: TcpInstance, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """x + w - sqrt(x^2 + w^2) and an element of its generalised Jacobian."""
        w = cls.w_vector(inst, x)
        r = np.hypot(x, w)
        kink = r <= 1e-14
        safe = np.where(kink, 1.0, r)
        # at x_i = w_i = 0 any (1 - a, 1 - b) with a^2 + b^2 <= 1 is admissible
        da = np.where(kink, 1.0 - np.sqrt(0.5), 1.0 - x / safe)
        db = np.where(kink, 1.0 - np.sqrt(0.5), 1.0 - w / safe)
        rows = db[:, None] * TensorService.jacobian(inst.tensor, x) + np.diag(da)
        return x + w - r, rows

    # ---------------------------------------------------------
    # Damped Newton
    # ---------------------------------------------------------
    @classmethod
    def newton(
        cls,
        inst: TcpInstance,
        x0,
        cfg: Optional[TcpConfig] = None,
        reformulation: str = TCP_MIN_MAP,
        index: Optional[int] = None,
    ) -> TcpSolution:
        """
        Semismooth Newton on one reformulation from x0, with Armijo
        backtracking on the merit 1/2 |Phi|^2. When the Newton direction is
        not a descent direction the step falls back to -H' Phi.
        """
        cfg = cfg or TcpConfig()
        if reformulation not in TCP_REFORMULATIONS:
            raise ValidationException(f"Unknown TCP reformulation '{reformulation}'.")
        evaluate = cls._min_map if reformulation == TCP_MIN_MAP else cls._fischer_burmeister

        x = TensorService.check_vector(inst.tensor, x0).copy()
        phi, rows = evaluate(inst, x)
        merit = 0.5 * float(phi @ phi)
        residual = cls.tcp_residual(inst, x)
        iterations = 0

        while residual > cfg.tol and iterations < cfg.max_iters:
            iterations += 1

            # Step 1 — Newton direction, or steepest descent on the merit
            gradient = rows.T @ phi
            step = np.linalg.lstsq(rows, -phi, rcond=None)[0]
            slope = float(gradient @ step)
            if not np.all(np.isfinite(step)) or slope >= -1e-12 * float(step @ step):
                step = -gradient
                slope = -float(gradient @ gradient)
            if slope == 0.0:
                # stationary point of the merit
                break

            # Step 2 — Armijo backtracking on 1/2 |Phi|^2
            t = 1.0
            while t >= cfg.min_step:
                trial = x + t * step
                trial_phi, trial_rows = evaluate(inst, trial)
                trial_merit = 0.5 * float(trial_phi @ trial_phi)
                if trial_merit <= merit + cfg.sufficient_decrease * t * slope:
                    break
                t *= cfg.backtrack_factor
            else:
                # stagnation
                break

            x, phi, rows, merit = trial, trial_phi, trial_rows, trial_merit
            residual = cls.tcp_residual(inst, x)

        # Step 3 — Clip tiny negatives and re-verify independently
        clipped = np.maximum(x, 0.0)
        if cls.tcp_residual(inst, clipped) <= max(cfg.tol, residual):
            x = clipped
        w = cls.w_vector(inst, x)
        residual = cls.tcp_residual(inst, x)
        converged = residual <= cfg.tol and x.min() >= -cfg.tol and w.min() >= -cfg.tol

        return TcpSolution(
            x=x,
            w=w,
            residual=residual,
            iterations=iterations,
            converged=bool(converged),
            start_index=index,
        )

    # ---------------------------------------------------------
    # Matrix Oracle
    # ---------------------------------------------------------
    @classmethod
    def enumerate_lcp(cls, inst: TcpInstance, tol: float = 1e-10) -> list[np.ndarray]:
        """
        All solutions of the LCP (m = 2) by trying each of the 2^n
        complementary bases: x_S = -M_SS^{-1} q_S, x = 0 off S.
        """
        A = inst.tensor
        if A.order != 2:
            raise UnsupportedOrderException("Basis enumeration is for m = 2 only.")

        M, q = A.data, inst.q
        solutions = []
        for J in [None, *TensorService.subsets(A.dim)]:
            x = np.zeros(A.dim)
            if J is not None:
                S = J.positions
                try:
                    x[S] = np.linalg.solve(M[np.ix_(S, S)], -q[S])
                except np.linalg.LinAlgError:
                    continue
            w = q + M @ x
            if x.min() >= -tol and w.min() >= -tol:
                solutions.append(np.maximum(x, 0.0))
        return solutions
