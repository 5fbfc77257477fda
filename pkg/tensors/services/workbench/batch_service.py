# =============================================================
# Standard Library
# =============================================================
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional

# =============================================================
# Third-Party
# =============================================================
import numpy as np
from django.conf import settings

# =============================================================
# Core
# =============================================================
from core.constants import OUTCOME_CHOICES, OUTCOME_HOLDS_WITHIN_GAP
from core.exceptions import BoundViolationException, ValidationException
from core.exceptions.handlers import extract_error_message

# =============================================================
# Local
# =============================================================
from tensors.models import BatchReport, BoundReport, BoundsConfig, SummaryStats
from tensors.serializers import (
    BatchReportSerializer,
    GeneratorSpecSerializer,
    InequalityOutcomeSerializer,
)
from tensors.services import BaseService, service_entry
from tensors.services.algebra import GeneratorService
from tensors.services.workbench.bounds_service import BoundsService
from tensors.services.workbench.io_service import IOService


# =============================================================
# Batch Service
# =============================================================
class BatchService(BaseService):
    """
    verify_bounds over `count` generated instances, instance i drawn with
    seed spec.seed + i. Instances may run on a thread pool; the report is
    always assembled in instance order.
    """

    # ---------------------------------------------------------
    # Entry Point
    # ---------------------------------------------------------
    @classmethod
    @service_entry("Batch experiment failed")
    def batch_experiment(
        cls,
        spec: dict,
        count: int,
        cfg: Optional[BoundsConfig] = None,
        output_dir=None,
        json_path=None,
        summary_path=None,
    ) -> BatchReport:
        cfg = cfg or BoundsConfig.from_settings()
        if count < 0:
            raise ValidationException("count must be >= 0.")

        # Step 1 — Validate the generator spec
        serializer = GeneratorSpecSerializer(data=spec)
        if not serializer.is_valid():
            raise ValidationException(
                f"Invalid generator spec: {extract_error_message(serializer.errors)}"
            )
        spec = dict(serializer.validated_data)
        spec["params"] = GeneratorService.resolve_params(spec["kind"], spec.get("params"))

        def run(seed: int):
            A = GeneratorService.gen_random(spec["kind"], spec["m"], spec["n"], seed, spec["params"])
            return A, BoundsService.verify_bounds(A, cfg, seed=seed)

        # Step 2 — Run in order, halting on the first violation
        reports: list[BoundReport] = []
        seeds = [spec["seed"] + i for i in range(count)]
        pool = ThreadPoolExecutor(max_workers=cfg.workers)
        try:
            for A, report in pool.map(run, seeds):
                if report.violations():
                    path = cls.write_reproducer(A, report, spec, output_dir)
                    raise BoundViolationException(
                        f"Instance with seed {report.seed} violates "
                        f"{', '.join(v.name for v in report.violations())}; reproducer at {path}",
                        extra={"seed": report.seed, "reproducer": str(path)},
                    )
                reports.append(report)
        finally:
            pool.shutdown(wait=True, cancel_futures=True)

        # Step 3 — Aggregate
        batch = cls.aggregate(spec, reports)
        cls.write_outputs(batch, json_path, summary_path)
        cls.logger().info(
            "Batch experiment complete",
            extra={"kind": spec["kind"], "count": count, "outcomes": batch.outcome_counts},
        )
        return batch

    # ---------------------------------------------------------
    # Aggregation
    # ---------------------------------------------------------
    @classmethod
    def aggregate(cls, spec: dict, reports: list[BoundReport]) -> BatchReport:
        counts = Counter(o.outcome for r in reports for o in r.outcomes)
        return BatchReport(
            generator=spec,
            count=len(reports),
            reports=tuple(reports),
            outcome_counts={value: counts.get(value, 0) for value, _ in OUTCOME_CHOICES},
            alpha_t_stats=cls.summarize(r.alpha_t.value for r in reports if r.alpha_t),
            alpha_f_stats=cls.summarize(r.alpha_f.value for r in reports if r.alpha_f),
            tightness_t_stats=cls.summarize(r.tightness_t for r in reports),
            tightness_f_stats=cls.summarize(r.tightness_f for r in reports),
        )

    @staticmethod
    def summarize(values) -> SummaryStats:
        data = np.array([v for v in values if v is not None], dtype=float)
        if data.size == 0:
            return SummaryStats()
        return SummaryStats(
            minimum=float(data.min()),
            mean=float(data.mean()),
            maximum=float(data.max()),
            count=int(data.size),
        )

    # ---------------------------------------------------------
    # Output
    # ---------------------------------------------------------
    @classmethod
    def write_reproducer(cls, A, report: BoundReport, spec: dict, output_dir=None) -> Path:
        folder = Path(output_dir or settings.TENSORLAB["LOG_DIR"])
        path = folder / f"reproducer-{spec['kind']}-seed{report.seed}.json"
        IOService.dump_report(
            {
                "seed": report.seed,
                "generator": spec,
                "tensor": IOService.tensor_payload(A),
                "violations": InequalityOutcomeSerializer(report.violations(), many=True).data,
            },
            path,
        )
        return path

    @classmethod
    def summary_table(cls, batch: BatchReport) -> str:
        def fmt(value):
            return "-" if value is None else f"{value:.6g}"

        header = f"{'seed':>6}  {'alpha_T':>10}  {'alpha_F':>10}  {'delta_H':>10}  {'delta_Z':>10}  {'min_diag':>10}  {'within_gap':>10}"
        lines = [
            f"generator: {batch.generator['kind']} m={batch.generator['m']} n={batch.generator['n']} count={batch.count}",
            header,
            "-" * len(header),
        ]
        for r in batch.reports:
            within = sum(1 for o in r.outcomes if o.outcome == OUTCOME_HOLDS_WITHIN_GAP)
            lines.append(
                f"{r.seed:>6}  {fmt(r.alpha_t.value if r.alpha_t else None):>10}  "
                f"{fmt(r.alpha_f.value if r.alpha_f else None):>10}  {fmt(r.delta_h):>10}  "
                f"{fmt(r.delta_z):>10}  {fmt(r.min_diag):>10}  {within:>10}"
            )

        lines.append("")
        for label, stats in (
            ("alpha_T", batch.alpha_t_stats),
            ("alpha_F", batch.alpha_f_stats),
            ("alpha_T / delta_Z", batch.tightness_t_stats),
            ("alpha_F / delta_H^(1/(m-1))", batch.tightness_f_stats),
        ):
            lines.append(
                f"{label:<28} min={fmt(stats.minimum)} mean={fmt(stats.mean)} max={fmt(stats.maximum)} (n={stats.count})"
            )
        lines.append("outcomes: " + ", ".join(f"{k}={v}" for k, v in batch.outcome_counts.items()))
        return "\n".join(lines) + "\n"

    @classmethod
    def write_outputs(cls, batch: BatchReport, json_path=None, summary_path=None) -> None:
        if json_path is not None:
            IOService.dump_report(BatchReportSerializer(batch).data, json_path)
        if summary_path is not None:
            IOService.dump_text(cls.summary_table(batch), summary_path)
