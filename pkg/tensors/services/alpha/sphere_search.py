# =============================================================
# Standard Library
# =============================================================
import itertools
from typing import Callable

# =============================================================
# Third-Party
# =============================================================
import numpy as np
from scipy.optimize import minimize

# =============================================================
# Core
# =============================================================
from core.constants import NORMALIZATION_TOL

# =============================================================
# Local
# =============================================================
from tensors.models import AlphaConfig
from tensors.services import BaseService

# Batched objective: (B, n) -> (B,)
Objective = Callable[[np.ndarray], np.ndarray]

# Best grid/start points handed to the local refinement
REFINE_SEEDS = 8


# =============================================================
# Sphere Search
# =============================================================
class SphereSearch(BaseService):
    """
    Minimise a continuous objective over the l-inf unit sphere
    {x : ||x||_inf = 1}, seen as the union of faces
    {x_j = s, |x_k| <= 1} for j in 1..n and s in {+1, -1}.
    """

    # ---------------------------------------------------------
    # Geometry
    # ---------------------------------------------------------
    @staticmethod
    def lift(z: np.ndarray, j: int, s: float) -> np.ndarray:
        return np.insert(np.clip(z, -1.0, 1.0), j, s)

    @staticmethod
    def project(x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return x / np.max(np.abs(x))

    @classmethod
    def faces(cls, n: int, even: bool) -> list[tuple[int, float]]:
        signs = (1.0,) if even else (1.0, -1.0)
        return [(j, s) for s in signs for j in range(n)]

    @classmethod
    def face_grid(cls, n: int, j: int, s: float, h: float) -> np.ndarray:
        if n == 1:
            return np.array([[s]])
        axis = np.linspace(-1.0, 1.0, int(round(2.0 / h)) + 1)
        mesh = np.meshgrid(*([axis] * (n - 1)), indexing="ij")
        free = np.stack([g.ravel() for g in mesh], axis=1)
        return np.insert(free, j, s, axis=1)

    @classmethod
    def structured_points(cls, n: int) -> np.ndarray:
        points = [np.eye(n)[i] for i in range(n)]
        points += [np.array(p) for p in itertools.product((1.0, -1.0), repeat=n)]
        return np.array(points)

    @classmethod
    def hint_points(cls, hints, n: int) -> np.ndarray:
        """Caller-supplied candidates scaled onto the sphere; zero vectors are dropped."""
        if hints is None:
            return np.empty((0, n))
        X = np.asarray(hints, dtype=float).reshape(-1, n)
        X = X[np.max(np.abs(X), axis=1) > NORMALIZATION_TOL]
        return X / np.max(np.abs(X), axis=1, keepdims=True)

    # ---------------------------------------------------------
    # Search Modes
    # ---------------------------------------------------------
    @classmethod
    def grid_search(cls, objective: Objective, n: int, even: bool, cfg: AlphaConfig, hints=None):
        """
        Exhaustive face grid at resolution h, then local refinement of the
        best grid points and hints.

        Returns (value, minimizer, grid_minimum).
        """
        points = np.concatenate(
            [cls.face_grid(n, j, s, cfg.grid_resolution) for j, s in cls.faces(n, even)]
        )
        values = objective(points)
        grid_minimum = float(values.min())

        extra = cls.hint_points(hints, n)
        if len(extra):
            points = np.concatenate([points, extra])
            values = np.concatenate([values, objective(extra)])

        value, minimizer = cls._refine_best(objective, points, values, even, cfg)
        cls.logger().debug(
            "Grid search complete",
            extra={"n": n, "points": len(points), "grid_minimum": grid_minimum, "value": value},
        )
        return value, minimizer, grid_minimum

    @classmethod
    def random_search(cls, objective: Objective, n: int, even: bool, cfg: AlphaConfig, hints=None):
        """
        Multi-start: structured points plus seeded random sphere points,
        the best of which are refined. Returns (value, minimizer).
        """
        rng = np.random.default_rng(cfg.seed)
        raw = rng.uniform(-1.0, 1.0, size=(cfg.starts, n))
        raw = raw[np.max(np.abs(raw), axis=1) > NORMALIZATION_TOL]
        points = np.concatenate(
            [
                cls.structured_points(n),
                cls.hint_points(hints, n),
                raw / np.max(np.abs(raw), axis=1, keepdims=True),
            ]
        )
        values = objective(points)
        return cls._refine_best(objective, points, values, even, cfg)

    # ---------------------------------------------------------
    # Local Refinement
    # ---------------------------------------------------------
    @classmethod
    def _refine_best(cls, objective, points, values, even, cfg):
        order = np.argsort(values, kind="stable")[:REFINE_SEEDS]
        refined = np.array([cls.refine(objective, points[k], cfg) for k in order])
        refined_values = objective(refined)

        candidates = np.concatenate([points, refined])
        candidate_values = np.concatenate([values, refined_values])
        minimizer = cls._tie_break(candidates, candidate_values, even, cfg.tol)
        return float(objective(minimizer[None, :])[0]), minimizer

    @classmethod
    def refine(cls, objective: Objective, x0: np.ndarray, cfg: AlphaConfig) -> np.ndarray:
        """
        Nelder-Mead restricted to the face holding x0; when the iterate
        reaches a face boundary the search moves to the adjacent face.
        """
        n = x0.size
        x = cls.project(x0)
        if n == 1:
            return x

        def scalar(v):
            return float(objective(v[None, :])[0])

        best_x, best_v = x, scalar(x)
        j = int(np.argmax(np.abs(x)))
        for _ in range(n + 1):
            s = 1.0 if x[j] > 0 else -1.0
            free = np.delete(np.arange(n), j)
            z0 = x[free]
            simplex = np.vstack([z0, z0 + cfg.grid_resolution * np.eye(n - 1)])

            result = minimize(
                lambda z: scalar(cls.lift(z, j, s)),
                z0,
                method="Nelder-Mead",
                options={
                    "maxiter": cfg.refine_iters,
                    "xatol": 1e-12,
                    "fatol": 1e-14,
                    "initial_simplex": simplex,
                },
            )
            x_new = cls.lift(result.x, j, s)
            v_new = scalar(x_new)
            if v_new >= best_v:
                break
            best_x, best_v = x_new, v_new

            # boundary hit -> continue on the face of the saturated coordinate
            hit = free[int(np.argmax(np.abs(x_new[free])))]
            if abs(x_new[hit]) < 1.0 - 1e-12:
                break
            x, j = x_new, int(hit)

        return best_x

    @staticmethod
    def _tie_break(points, values, even, tol) -> np.ndarray:
        # lexicographically smallest point within tol of the minimum
        near = points[values <= values.min() + tol]
        if even:
            near = np.concatenate([near, -near])
        order = np.lexsort(near.T[::-1])
        return near[order[0]].copy()
