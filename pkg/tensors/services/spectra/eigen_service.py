# =============================================================
# Standard Library
# =============================================================
import itertools
import math
from typing import Optional

# =============================================================
# Third-Party
# =============================================================
import numpy as np
from scipy.optimize import brentq

# =============================================================
# Core
# =============================================================
from core.constants import (
    CERTIFIED_EIG_MAX_DIM,
    EIG_KIND_H,
    EIG_KIND_Z,
    EIG_METHOD_AUTO,
    EIG_METHOD_NEWTON,
    EIG_METHOD_SCAN,
    ZERO_VECTOR_TOL,
)
from core.exceptions import ValidationException

# =============================================================
# Local
# =============================================================
from tensors.models import EigConfig, Eigenpair, Tensor
from tensors.services import BaseService, service_entry
from tensors.services.algebra import TensorService

# |g(theta)| below this (times the row-sum scale) marks a tangential-root candidate
SCAN_TANGENT_TOL = 1e-6


# =============================================================
# Eigen Service
# =============================================================
class EigenService(BaseService):
    """
    Real H-eigenpairs (A x^{m-1} = lam x^[m-1]) and Z-eigenpairs
    (A x^{m-1} = lam x, x'x = 1) of small tensors.

    n = 1 and m = 2 are closed form, n = 2 is an exhaustive angular scan,
    larger n is multi-start Newton and only heuristically complete.
    """

    # ---------------------------------------------------------
    # Public API
    # ---------------------------------------------------------
    @classmethod
    def h_eigenpairs(cls, A: Tensor, cfg: Optional[EigConfig] = None) -> list[Eigenpair]:
        return cls.eigenpairs(A, EIG_KIND_H, cfg)

    @classmethod
    def z_eigenpairs(cls, A: Tensor, cfg: Optional[EigConfig] = None) -> list[Eigenpair]:
        return cls.eigenpairs(A, EIG_KIND_Z, cfg)

    @classmethod
    def smallest_h(cls, A: Tensor, cfg: Optional[EigConfig] = None) -> Optional[float]:
        return cls._smallest(cls.h_eigenpairs(A, cfg))

    @classmethod
    def smallest_z(cls, A: Tensor, cfg: Optional[EigConfig] = None) -> Optional[float]:
        return cls._smallest(cls.z_eigenpairs(A, cfg))

    @classmethod
    def smallest_pair(cls, A: Tensor, kind: str, cfg: Optional[EigConfig] = None) -> Optional[Eigenpair]:
        pairs = cls.eigenpairs(A, kind, cfg)
        return pairs[0] if pairs else None

    @classmethod
    def is_certified(cls, A: Tensor, cfg: Optional[EigConfig] = None) -> bool:
        method = (cfg or EigConfig()).method
        if A.dim == 1:
            return True
        if method == EIG_METHOD_NEWTON:
            return False
        return A.order == 2 or A.dim <= CERTIFIED_EIG_MAX_DIM

    # ---------------------------------------------------------
    # Dispatcher
    # ---------------------------------------------------------
    @classmethod
    @service_entry("Eigen-solve failed")
    def eigenpairs(cls, A: Tensor, kind: str, cfg: Optional[EigConfig] = None) -> list[Eigenpair]:
        cfg = cfg or EigConfig()
        if kind not in (EIG_KIND_H, EIG_KIND_Z):
            raise ValidationException(f"Unknown eigenvalue kind '{kind}'.")
        if cfg.method == EIG_METHOD_SCAN and A.dim > 2:
            raise ValidationException("The angular scan handles n <= 2 only.")

        # Step 1 — Pick the candidate generator by size
        if A.dim == 1:
            candidates = cls._one_dim_candidates(A)
            method = "closed-form"
        elif A.order == 2 and cfg.method == EIG_METHOD_AUTO:
            candidates = cls._matrix_candidates(A)
            method = "matrix"
        elif A.dim == 2 and cfg.method in (EIG_METHOD_AUTO, EIG_METHOD_SCAN):
            candidates = [
                cls._newton(A, kind, x0, None, cfg) for x0 in cls._scan_roots(A, kind, cfg)
            ]
            method = "scan"
        else:
            candidates = [
                cls._newton(A, kind, x0, None, cfg) for x0 in cls._starts(A.dim, cfg)
            ]
            method = "newton"

        # Step 2 — Normalise, re-verify independently, keep the sound ones
        pairs = []
        for x in candidates:
            if x is None:
                continue
            pair = cls._finalize(A, kind, x)
            if pair is not None and pair.residual <= cfg.residual_tol:
                pairs.append(pair)

        # Step 3 — Deterministic reduction
        pairs = cls._dedup(pairs, cfg.dedup_tol)

        cls.logger().debug(
            "Eigen-solve complete",
            extra={"kind": kind, "m": A.order, "n": A.dim, "method": method, "count": len(pairs)},
        )
        return pairs

    # ---------------------------------------------------------
    # Verification
    # ---------------------------------------------------------
    @classmethod
    def residual(cls, A: Tensor, kind: str, lam: float, x) -> float:
        y = TensorService.apply(A, x)
        if kind == EIG_KIND_H:
            mismatch = y - lam * np.power(x, A.order - 1)
        else:
            mismatch = y - lam * np.asarray(x)
        return float(np.max(np.abs(mismatch)))

    @classmethod
    def _normalize(cls, kind: str, x: np.ndarray) -> Optional[np.ndarray]:
        if not np.all(np.isfinite(x)) or np.max(np.abs(x)) < ZERO_VECTOR_TOL:
            return None
        scale = np.max(np.abs(x)) if kind == EIG_KIND_H else np.linalg.norm(x)
        return x / scale

    @classmethod
    def _rayleigh(cls, A: Tensor, kind: str, x: np.ndarray) -> float:
        y = TensorService.apply(A, x)
        if kind == EIG_KIND_H:
            p = np.power(x, A.order - 1)
            return float(y @ p / (p @ p))
        return float(x @ y)

    @classmethod
    def _sign_symmetric(cls, A: Tensor, kind: str) -> bool:
        # (-x) is an eigenvector for the same lam
        return kind == EIG_KIND_H or A.is_even_order

    @classmethod
    def _finalize(cls, A: Tensor, kind: str, x: np.ndarray) -> Optional[Eigenpair]:
        x = cls._normalize(kind, np.asarray(x, dtype=float))
        if x is None:
            return None
        if kind == EIG_KIND_Z:
            # exact unit 2-norm
            x = x / math.sqrt(float(x @ x))
        if cls._sign_symmetric(A, kind):
            lead = np.flatnonzero(np.abs(x) > 1e-9)
            if lead.size and x[lead[0]] < 0:
                x = -x

        lam = cls._rayleigh(A, kind, x)
        x.setflags(write=False)
        return Eigenpair(kind=kind, lam=lam, x=x, residual=cls.residual(A, kind, lam, x))

    @classmethod
    def _dedup(cls, pairs: list[Eigenpair], tol: float) -> list[Eigenpair]:
        ordered = sorted(pairs, key=lambda p: (p.lam, tuple(p.x)))
        kept: list[Eigenpair] = []
        for pair in ordered:
            duplicate = any(
                abs(pair.lam - other.lam) <= tol
                and min(
                    np.max(np.abs(pair.x - other.x)),
                    np.max(np.abs(pair.x + other.x)),
                ) <= 100 * tol
                for other in kept
            )
            if not duplicate:
                kept.append(pair)
        return kept

    @classmethod
    def _smallest(cls, pairs: list[Eigenpair]) -> Optional[float]:
        return min((p.lam for p in pairs), default=None)

    # ---------------------------------------------------------
    # Closed Forms
    # ---------------------------------------------------------
    @classmethod
    def _one_dim_candidates(cls, A: Tensor) -> list[np.ndarray]:
        # a x^{m-1} = lam x^{m-1}; the Z-pair at x = -1 has lam = a (-1)^m
        return [np.array([1.0]), np.array([-1.0])]

    @classmethod
    def _matrix_candidates(cls, A: Tensor) -> list[np.ndarray]:
        values, vectors = np.linalg.eig(A.data)
        scale = max(1.0, float(np.max(np.abs(values))))
        real = np.abs(values.imag) <= 1e-12 * scale
        return [np.real(vectors[:, k]) for k in np.flatnonzero(real)]

    # ---------------------------------------------------------
    # Angular Scan (n = 2)
    # ---------------------------------------------------------
    @classmethod
    def _scan_function(cls, A: Tensor, kind: str):
        m = A.order

        def g(theta):
            theta = np.atleast_1d(theta)
            X = np.column_stack([np.cos(theta), np.sin(theta)])
            Y = TensorService.apply_batch(A, X)
            if kind == EIG_KIND_H:
                P = X ** (m - 1)
                return Y[:, 0] * P[:, 1] - Y[:, 1] * P[:, 0]
            return X[:, 0] * Y[:, 1] - X[:, 1] * Y[:, 0]

        return g

    @classmethod
    def _scan_roots(cls, A: Tensor, kind: str, cfg: EigConfig) -> list[np.ndarray]:
        g = cls._scan_function(A, kind)
        count = int(math.ceil(2 * math.pi / cfg.scan_resolution))
        step = 2 * math.pi / count
        theta = np.arange(count) * step
        values = g(theta)

        roots: list[float] = []
        scale = max(1.0, float(TensorService.row_abs_sums(A).max()))
        near = np.abs(values) <= SCAN_TANGENT_TOL * scale

        # Step 1 — Bracketed sign changes, refined by Brent's method;
        # changes between two near-zero samples are left to Step 2
        following = np.roll(values, -1)
        bracketed = (values * following < 0) & ~(near & np.roll(near, -1))
        for i in np.flatnonzero(bracketed):
            roots.append(brentq(lambda t: float(g(t)[0]), theta[i], theta[i] + step, xtol=1e-15))

        # Step 2 — Near-zero runs: exact zeros, tangential roots, continua
        for run in cls._runs(near):
            roots.append(theta[run[np.argmin(np.abs(values[run]))]])

        return [np.array([math.cos(t), math.sin(t)]) for t in roots]

    @classmethod
    def _runs(cls, mask: np.ndarray) -> list[np.ndarray]:
        idx = np.flatnonzero(mask)
        if idx.size == 0:
            return []
        breaks = np.flatnonzero(np.diff(idx) > 1) + 1
        return np.split(idx, breaks)

    # ---------------------------------------------------------
    # Multi-start Newton
    # ---------------------------------------------------------
    @classmethod
    def _starts(cls, n: int, cfg: EigConfig) -> list[np.ndarray]:
        structured = [np.eye(n)[i] for i in range(n)]
        for signs in itertools.product((1.0, -1.0), repeat=n - 1):
            structured.append(np.array((1.0,) + signs))

        rng = np.random.default_rng(cfg.seed)
        extra = max(0, cfg.starts - len(structured))
        randoms = list(rng.standard_normal((extra, n)))
        return (structured + randoms)[: max(cfg.starts, n)]

    @classmethod
    def _newton(cls, A: Tensor, kind: str, x0, lam0, cfg: EigConfig) -> Optional[np.ndarray]:
        n, m = A.dim, A.order
        x = cls._normalize(kind, np.asarray(x0, dtype=float))
        if x is None:
            return None
        lam = cls._rayleigh(A, kind, x) if lam0 is None else lam0
        target = cfg.residual_tol * 1e-2

        for _ in range(cfg.max_newton_iters):
            y = TensorService.apply(A, x)
            jac = TensorService.jacobian(A, x)
            system = np.zeros((n + 1, n + 1))
            rhs = np.zeros(n + 1)

            if kind == EIG_KIND_H:
                F = y - lam * np.power(x, m - 1)
                system[:n, :n] = jac - lam * (m - 1) * np.diag(np.power(x, m - 2))
                system[:n, n] = -np.power(x, m - 1)
                # active coordinate pinned at +-1
                system[n, int(np.argmax(np.abs(x)))] = 1.0
            else:
                F = y - lam * x
                system[:n, :n] = jac - lam * np.eye(n)
                system[:n, n] = -x
                system[n, :n] = x
                rhs[n] = -(x @ x - 1.0) / 2

            if np.max(np.abs(F)) <= target:
                break
            rhs[:n] = -F

            step = np.linalg.lstsq(system, rhs, rcond=None)[0]
            if not np.all(np.isfinite(step)):
                return None

            x = cls._normalize(kind, x + step[:n])
            if x is None:
                return None
            lam = lam + step[n] if kind == EIG_KIND_H else cls._rayleigh(A, kind, x)

            if np.max(np.abs(step)) <= 1e-15 * (1.0 + abs(lam)):
                break

        return x
