# =============================================================
# Standard Library
# =============================================================
from typing import Optional

# =============================================================
# Core
# =============================================================
from core.constants import EIG_KIND_H, EIG_KIND_Z

# =============================================================
# Local
# =============================================================
from tensors.models import DeltaReport, EigConfig, SubsetSpectrum, Tensor
from tensors.services import BaseService, service_entry
from tensors.services.algebra import TensorService
from tensors.services.spectra.eigen_service import EigenService


# =============================================================
# Spectral Service
# =============================================================
class SpectralService(BaseService):
    """
    delta_H(A) / delta_Z(A): the minimum smallest H-/Z-eigenvalue over all
    2^n - 1 principal sub-tensors.

    A sub-tensor with no real eigenvalue of a kind is skipped for that kind;
    when every sub-tensor is skipped the constant is absent.
    """

    @classmethod
    def delta_h(cls, A: Tensor, cfg: Optional[EigConfig] = None) -> DeltaReport:
        return cls.spectral_report(A, cfg, kinds=(EIG_KIND_H,))

    @classmethod
    def delta_z(cls, A: Tensor, cfg: Optional[EigConfig] = None) -> DeltaReport:
        return cls.spectral_report(A, cfg, kinds=(EIG_KIND_Z,))

    @classmethod
    @service_entry("Spectral constants failed")
    def spectral_report(
        cls,
        A: Tensor,
        cfg: Optional[EigConfig] = None,
        kinds: tuple[str, ...] = (EIG_KIND_H, EIG_KIND_Z),
    ) -> DeltaReport:
        cfg = cfg or EigConfig()
        best = {kind: None for kind in kinds}
        per_subset = []

        # Step 1 — Smallest eigenpair of every principal sub-tensor
        for J in TensorService.subsets(A.dim):
            sub = TensorService.principal_subtensor(A, J)
            smallest = {}
            for kind in kinds:
                pair = EigenService.smallest_pair(sub, kind, cfg)
                smallest[kind] = pair
                # strict < keeps the first subset in enumeration order on ties
                if pair is not None and (best[kind] is None or pair.lam < best[kind][0].lam):
                    best[kind] = (pair, J)

            per_subset.append(
                SubsetSpectrum(
                    subset=J,
                    smallest_h=cls._lam(smallest.get(EIG_KIND_H)),
                    smallest_z=cls._lam(smallest.get(EIG_KIND_Z)),
                    certified=EigenService.is_certified(sub, cfg),
                )
            )

        # Step 2 — Reduce to the constants and pad their witnesses
        fields = {}
        for kind, suffix in ((EIG_KIND_H, "h"), (EIG_KIND_Z, "z")):
            found = best.get(kind)
            if found is None:
                continue
            pair, J = found
            fields[f"delta_{suffix}"] = pair.lam
            fields[f"argmin_subset_{suffix}"] = J
            fields[f"witness_{suffix}"] = TensorService.pad(pair.x, J, A.dim)

        report = DeltaReport(dim=A.dim, per_subset=tuple(per_subset), **fields)

        cls.logger().info(
            "Spectral constants computed",
            extra={
                "m": A.order,
                "n": A.dim,
                "delta_h": report.delta_h,
                "delta_z": report.delta_z,
                "certified": report.certified,
            },
        )
        return report

    @staticmethod
    def _lam(pair) -> Optional[float]:
        return None if pair is None else pair.lam
