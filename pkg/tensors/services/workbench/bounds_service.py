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
    EIG_KIND_H,
    EIG_KIND_Z,
    OP_F,
    OP_T,
    OUTCOME_HOLDS,
    OUTCOME_HOLDS_WITHIN_GAP,
    OUTCOME_NOT_APPLICABLE,
    OUTCOME_VIOLATED,
    WITNESS_TOL,
)

# =============================================================
# Local
# =============================================================
from tensors.models import AlphaResult, BoundReport, BoundsConfig, InequalityOutcome, Tensor
from tensors.services import BaseService, service_entry
from tensors.services.algebra import TensorService
from tensors.services.alpha import AlphaService
from tensors.services.classification import ClassificationService
from tensors.services.spectra import SpectralService

# Relative slack for sampled norm and E-identity checks
SAMPLING_TOL = 1e-10

# E is materialised for the identity check only up to this many entries
E_CHECK_MAX_ENTRIES = 50_000

NOT_P_NOTE = "alpha(T_A) <= 0: A is not P"


# =============================================================
# Bounds Service
# =============================================================
class BoundsService(BaseService):
    """
    Numerical check of the proven relations between alpha(T_A), alpha(F_A),
    delta_H, delta_Z and the diagonal of A, one InequalityOutcome each.

    Outcome for lhs <= rhs with margin = rhs - lhs:
      holds             margin > gap
      holds-within-gap  |margin| <= gap
      violated          margin < -gap
    """

    # ---------------------------------------------------------
    # Outcome Builder
    # ---------------------------------------------------------
    @staticmethod
    def compare(name: str, lhs, rhs, gap: float = 0.0, note: str = "") -> InequalityOutcome:
        if lhs is None or rhs is None:
            return InequalityOutcome(name=name, note=note or "missing ingredient")
        margin = float(rhs) - float(lhs)
        if margin > gap:
            outcome = OUTCOME_HOLDS
        elif margin < -gap:
            outcome = OUTCOME_VIOLATED
        else:
            outcome = OUTCOME_HOLDS_WITHIN_GAP
        return InequalityOutcome(
            name=name,
            outcome=outcome,
            lhs=float(lhs),
            rhs=float(rhs),
            margin=margin,
            gap=float(gap),
            note=note,
        )

    @staticmethod
    def not_applicable(name: str, note: str) -> InequalityOutcome:
        return InequalityOutcome(name=name, outcome=OUTCOME_NOT_APPLICABLE, note=note)

    @staticmethod
    def _gap(alpha: Optional[AlphaResult], floor: float) -> float:
        if alpha is None or alpha.grid_gap is None:
            return floor
        return alpha.grid_gap + floor

    @staticmethod
    def _root(value: Optional[float], m: int) -> Optional[float]:
        if value is None:
            return None
        return float(TensorService.power_vector([value], 1.0 / (m - 1))[0])

    # ---------------------------------------------------------
    # Entry Point
    # ---------------------------------------------------------
    @classmethod
    @service_entry("Bound verification failed")
    def verify_bounds(cls, A: Tensor, cfg: Optional[BoundsConfig] = None, seed: Optional[int] = None) -> BoundReport:
        cfg = cfg or BoundsConfig.from_settings()
        m, even = A.order, A.is_even_order
        tol = cfg.monotonicity_tol

        # Step 1 — Ingredients
        alpha_t = AlphaService.alpha_t(A, cfg.alpha)
        alpha_f = AlphaService.alpha_f(A, cfg.alpha) if even else None
        spectra = SpectralService.spectral_report(A, cfg.eig)
        min_diag = float(A.diagonal().min())
        bound_t = AlphaService.operator_norm_bound(A, OP_T)
        bound_f = AlphaService.operator_norm_bound(A, OP_F) if even else None

        # the alpha value is attained, so alpha_t.value <= 0 proves A is not P
        p_input = alpha_t.value > tol

        # Step 1b — Sub-tensor alphas; their padded minimisers are feasible for A
        subs = cls._subtensor_alphas(A, cfg) if p_input else []
        alpha_t = cls._sharpen(A, OP_T, alpha_t, [(J, t) for J, t, _ in subs], cfg)
        if alpha_f is not None:
            alpha_f = cls._sharpen(A, OP_F, alpha_f, [(J, f) for J, _, f in subs], cfg)

        # Step 2 — The two three-term chains (even m)
        outcomes = cls._chains(A, alpha_t, alpha_f, spectra, min_diag, tol, p_input)

        # Step 3 — Monotonicity, boundedness and sampled norm bounds
        outcomes += cls._monotonicity(A, alpha_t, alpha_f, subs, cfg, p_input)
        outcomes.append(cls.compare("alpha_t <= norm_bound_t", alpha_t.value, bound_t, cls._gap(alpha_t, tol)))
        if even:
            outcomes.append(cls.compare("alpha_f <= norm_bound_f", alpha_f.value, bound_f, cls._gap(alpha_f, tol)))
        else:
            outcomes.append(cls.not_applicable("alpha_f <= norm_bound_f", "odd m"))
        outcomes += cls._sampled_norms(A, bound_t, bound_f, cfg)

        # Step 4 — E identity and the shift witnesses
        outcomes.append(cls._e_identity(A, cfg))
        outcomes += cls._shift_witnesses(A, spectra)

        # Step 5 — Tightness of the upper bounds
        tightness_t = cls._ratio(alpha_t.value, spectra.delta_z) if even else None
        tightness_f = cls._ratio(alpha_f.value, cls._root(spectra.delta_h, m)) if even else None

        certified = (
            spectra.certified
            and alpha_t.certification == CERT_GRID
            and (alpha_f is None or alpha_f.certification == CERT_GRID)
        )

        report = BoundReport(
            order=m,
            dim=A.dim,
            alpha_t=alpha_t,
            alpha_f=alpha_f,
            delta_h=spectra.delta_h,
            delta_z=spectra.delta_z,
            min_diag=min_diag,
            row_sum_bound_t=bound_t,
            row_sum_bound_f=bound_f,
            outcomes=tuple(outcomes),
            certified=certified,
            tightness_t=tightness_t,
            tightness_f=tightness_f,
            seed=seed,
        )

        violations = report.violations()
        if violations:
            cls.logger().error(
                "Proven inequality violated",
                extra={"seed": seed, "m": m, "n": A.dim, "violations": [v.name for v in violations]},
            )
        else:
            cls.logger().info(
                "Bounds verified",
                extra={"seed": seed, "m": m, "n": A.dim, "certified": certified},
            )
        return report

    # ---------------------------------------------------------
    # Chains
    # ---------------------------------------------------------
    @classmethod
    def _chains(cls, A, alpha_t, alpha_f, spectra, min_diag, tol, p_input=True) -> list[InequalityOutcome]:
        names = (
            "alpha_f <= delta_h^(1/(m-1))",
            "delta_h^(1/(m-1)) <= min_diag^(1/(m-1))",
            "alpha_t <= delta_z",
            "delta_z <= min_diag",
        )
        if not A.is_even_order:
            return [cls.not_applicable(name, "odd m") for name in names]

        m = A.order
        root_h = cls._root(spectra.delta_h, m)
        missing = "no H-eigenvalue found" if spectra.delta_h is None else ""
        missing_z = "no Z-eigenvalue found" if spectra.delta_z is None else ""
        outcomes = [
            cls.compare(names[0], alpha_f.value, root_h, cls._gap(alpha_f, tol), missing),
            cls.compare(names[1], root_h, cls._root(min_diag, m), tol, missing),
            cls.compare(names[2], alpha_t.value, spectra.delta_z, cls._gap(alpha_t, tol), missing_z),
            cls.compare(names[3], spectra.delta_z, min_diag, tol, missing_z),
        ]
        if not p_input:
            # the alpha ends of the chains need a P-tensor; the delta ends hold for any A
            outcomes[0] = cls.not_applicable(names[0], NOT_P_NOTE)
            outcomes[2] = cls.not_applicable(names[2], NOT_P_NOTE)
        return outcomes

    @classmethod
    def _subtensor_alphas(cls, A, cfg) -> list[tuple]:
        """(J, alpha_t, alpha_f or None) for every proper principal sub-tensor."""
        subs = []
        for J in TensorService.subsets(A.dim):
            if len(J) == A.dim:
                continue
            sub = TensorService.principal_subtensor(A, J)
            sub_f = AlphaService.alpha_f(sub, cfg.alpha) if A.is_even_order else None
            subs.append((J, AlphaService.alpha_t(sub, cfg.alpha), sub_f))
        return subs

    @classmethod
    def _sharpen(cls, A, op, result, subs, cfg) -> AlphaResult:
        """
        alpha(A) is at most the objective at any padded sub-tensor minimiser.
        When one of those beats the search result, search again with them
        as hints.
        """
        hints = [TensorService.pad(sub.minimizer, J, A.dim) for J, sub in subs if sub is not None]
        if not hints:
            return result
        if float(AlphaService.objective(A, op)(np.array(hints)).min()) >= result.value:
            return result
        cls.logger().debug("Alpha improved from sub-tensor minimisers", extra={"op": op, "n": A.dim})
        return AlphaService.alpha(A, op, cfg.alpha, hints=hints)

    @classmethod
    def _monotonicity(cls, A, alpha_t, alpha_f, subs, cfg, p_input=True) -> list[InequalityOutcome]:
        """alpha(A) <= alpha(A_J) for every proper principal sub-tensor of a P-tensor."""
        if not p_input:
            return [
                cls.not_applicable(f"alpha_t <= alpha_t[{J}]", NOT_P_NOTE)
                for J in TensorService.subsets(A.dim)
                if len(J) < A.dim
            ]

        outcomes = []
        for J, sub_t, sub_f in subs:
            outcomes.append(
                cls.compare(f"alpha_t <= alpha_t[{J}]", alpha_t.value, sub_t.value, cls._gap(alpha_t, cfg.monotonicity_tol))
            )
            if alpha_f is not None:
                outcomes.append(
                    cls.compare(f"alpha_f <= alpha_f[{J}]", alpha_f.value, sub_f.value, cls._gap(alpha_f, cfg.monotonicity_tol))
                )
        return outcomes

    @classmethod
    def _sampled_norms(cls, A, bound_t, bound_f, cfg) -> list[InequalityOutcome]:
        rng = np.random.default_rng(cfg.seed)
        X = rng.uniform(-1.0, 1.0, size=(cfg.norm_samples, A.dim))
        X = X / np.max(np.abs(X), axis=1, keepdims=True)

        worst_t = float(np.max(np.abs(AlphaService.t_operator_batch(A, X))))
        outcomes = [
            cls.compare("sampled ||T_A(x)||_inf <= norm_bound_t", worst_t, bound_t, SAMPLING_TOL * max(1.0, bound_t))
        ]
        if A.is_even_order:
            worst_f = float(np.max(np.abs(AlphaService.f_operator_batch(A, X))))
            outcomes.append(
                cls.compare("sampled ||F_A(x)||_inf <= norm_bound_f", worst_f, bound_f, SAMPLING_TOL * max(1.0, bound_f))
            )
        else:
            outcomes.append(cls.not_applicable("sampled ||F_A(x)||_inf <= norm_bound_f", "odd m"))
        return outcomes

    @classmethod
    def _e_identity(cls, A, cfg) -> InequalityOutcome:
        name = "E x^(m-1) == ||x||_2^(m-2) x"
        if not A.is_even_order:
            return cls.not_applicable(name, "odd m")
        if A.dim ** A.order > E_CHECK_MAX_ENTRIES:
            return cls.not_applicable(name, "E too large to materialise")

        E = TensorService.e_tensor(A.order, A.dim)
        rng = np.random.default_rng(cfg.seed)
        X = rng.standard_normal((32, A.dim))
        expected = np.array([TensorService.e_apply(x, A.order) for x in X])
        error = float(np.max(np.abs(TensorService.apply_batch(E, X) - expected)))
        scale = float(np.max(np.abs(expected))) or 1.0
        return cls.compare(name, error, SAMPLING_TOL * scale)

    @classmethod
    def _shift_witnesses(cls, A, spectra) -> list[InequalityOutcome]:
        outcomes = []
        for kind, label in ((EIG_KIND_H, "A - delta_h I"), (EIG_KIND_Z, "A - delta_z E")):
            name = f"{label} is not P"
            if kind == EIG_KIND_Z and not A.is_even_order:
                outcomes.append(cls.not_applicable(name, "odd m"))
                continue
            shift = ClassificationService.shift_witness(A, spectra, kind)
            if shift is None:
                outcomes.append(cls.not_applicable(name, "no eigenvalue found"))
            else:
                outcomes.append(cls.compare(name, shift.value, WITNESS_TOL))
        return outcomes

    @staticmethod
    def _ratio(numerator, denominator) -> Optional[float]:
        if numerator is None or denominator is None or denominator <= 0:
            return None
        return float(numerator) / float(denominator)
