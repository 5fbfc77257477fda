# =============================================================
# Standard Library
# =============================================================
import argparse
from pathlib import Path

# =============================================================
# Django
# =============================================================
from django.core.management.base import BaseCommand, CommandError

# =============================================================
# Core
# =============================================================
from core.constants import (
    EIG_KIND_H,
    EIG_KIND_Z,
    EIG_METHOD_CHOICES,
    GENERATOR_CHOICES,
    MODE_CHOICES,
    OP_F,
    OP_T,
)
from core.exceptions import (
    EXIT_OK,
    BoundViolationException,
    ConvergenceException,
)
from core.exceptions.handlers import command_exception_handler
from core.logging import get_logger
from core.utils import command_response, render_json

# =============================================================
# Local
# =============================================================
from tensors.serializers import (
    AlphaConfigSerializer,
    AlphaResultSerializer,
    BoundReportSerializer,
    BoundsConfigSerializer,
    DeltaReportSerializer,
    EigConfigSerializer,
    EigenpairSerializer,
    PVerdictSerializer,
    TcpConfigSerializer,
    TcpSolutionSerializer,
)
from tensors.services.algebra import GeneratorService, TensorService
from tensors.services.alpha import AlphaService
from tensors.services.classification import ClassificationService
from tensors.services.spectra import EigenService, SpectralService
from tensors.services.tcp import TcpService
from tensors.services.workbench import BatchService, BoundsService, IOService

logger = get_logger("commands.tensorlab")


# =============================================================
# Argument Types
# =============================================================
def vector_arg(text: str) -> list[float]:
    try:
        return [float(token) for token in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got '{text}'") from exc


def param_arg(text: str) -> tuple[str, float]:
    key, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected key=value, got '{text}'")
    try:
        return key, float(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"parameter '{key}' needs a number") from exc


def _choices(pairs) -> list[str]:
    return [value for value, _ in pairs]


# =============================================================
# Command
# =============================================================
class Command(BaseCommand):
    help = "P-tensor toolkit: eigenpairs, delta constants, alpha quantities, classification, TCP and bound checks."
    requires_system_checks = []

    # ---------------------------------------------------------
    # Arguments
    # ---------------------------------------------------------
    def add_arguments(self, parser):
        sub = parser.add_subparsers(dest="subcommand", required=True)

        def add(name, help_text, tensor=True):
            p = sub.add_parser(name, help=help_text)
            if tensor:
                p.add_argument("tensor", help="Tensor JSON file")
            p.add_argument("-o", "--output", help="Write the result JSON here")
            p.add_argument("--seed", type=int, default=None)
            p.add_argument("--tol", type=float, default=None)
            return p

        p = add("apply", "Evaluate A x^{m-1}")
        p.add_argument("--x", type=vector_arg, required=True, help="Comma-separated vector")

        p = add("eig", "Real H- or Z-eigenpairs")
        p.add_argument("--kind", choices=[EIG_KIND_H, EIG_KIND_Z], default=EIG_KIND_H)
        p.add_argument("--method", choices=_choices(EIG_METHOD_CHOICES), default=None)

        p = add("delta", "delta_H and delta_Z over all principal sub-tensors")
        p.add_argument("--method", choices=_choices(EIG_METHOD_CHOICES), default=None)

        for name, help_text in (
            ("alpha", "alpha(T_A) or alpha(F_A)"),
            ("check-p", "Classify as P / P0 / neither"),
            ("verify-bounds", "Check every proven bound on one tensor"),
        ):
            p = add(name, help_text)
            p.add_argument("--mode", choices=_choices(MODE_CHOICES), default=None)
            p.add_argument("--h", type=float, default=None, help="Grid resolution")
            if name == "alpha":
                p.add_argument("--op", choices=[OP_T, OP_F], default=OP_T)

        p = sub.add_parser("tcp-solve", help="Solve TCP(A, q)")
        p.add_argument("instance", help="TCP instance JSON file")
        p.add_argument("-o", "--output")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--tol", type=float, default=None)

        for name, help_text in (("gen", "Generate a seeded tensor"), ("batch", "Bound checks over generated tensors")):
            p = add(name, help_text, tensor=False)
            p.add_argument("--kind", choices=_choices(GENERATOR_CHOICES), required=True)
            p.add_argument("--m", type=int, required=True)
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--param", type=param_arg, action="append", default=[], help="key=value")
            if name == "batch":
                p.add_argument("--count", type=int, required=True)
                p.add_argument("--workers", type=int, default=None)
                p.add_argument("--mode", choices=_choices(MODE_CHOICES), default=None)
                p.add_argument("--h", type=float, default=None)
                p.add_argument("--summary", help="Plain-text summary table path")

    # ---------------------------------------------------------
    # Dispatch
    # ---------------------------------------------------------
    def handle(self, *args, **options):
        handler = getattr(self, "_" + options["subcommand"].replace("-", "_"))
        try:
            message, data = handler(options)
        except Exception as exc:
            code, payload = command_exception_handler(exc)
            logger.debug("Subcommand failed", extra={"subcommand": options["subcommand"], "exit_code": code})
            raise CommandError(render_json(payload), returncode=code) from exc

        self.stdout.write(render_json(command_response(message=message, data=data)))

    def _write(self, o, data):
        if o.get("output"):
            IOService.dump_report(data, o["output"])
        return data

    # ---------------------------------------------------------
    # Config Builders
    # ---------------------------------------------------------
    @staticmethod
    def _build(serializer_class, **data):
        serializer = serializer_class(data=data)
        serializer.is_valid(raise_exception=True)
        return serializer.save()

    def _alpha_config(self, o):
        return self._build(
            AlphaConfigSerializer,
            seed=o.get("seed"),
            tol=o.get("tol"),
            mode=o.get("mode"),
            grid_resolution=o.get("h"),
        )

    # ---------------------------------------------------------
    # Subcommands
    # ---------------------------------------------------------
    def _apply(self, o):
        A = IOService.load_tensor(o["tensor"])
        return "A x^(m-1)", self._write(o, {"y": TensorService.apply(A, o["x"]).tolist()})

    def _eig(self, o):
        A = IOService.load_tensor(o["tensor"])
        cfg = self._build(EigConfigSerializer, seed=o["seed"], residual_tol=o["tol"], method=o["method"])
        pairs = EigenService.eigenpairs(A, o["kind"], cfg)
        return f"{o['kind']}-eigenpairs", self._write(o, {
            "kind": o["kind"],
            "certified": EigenService.is_certified(A, cfg),
            "eigenpairs": EigenpairSerializer(pairs, many=True).data,
        })

    def _delta(self, o):
        A = IOService.load_tensor(o["tensor"])
        cfg = self._build(EigConfigSerializer, seed=o["seed"], residual_tol=o["tol"], method=o["method"])
        report = SpectralService.spectral_report(A, cfg)
        return "Spectral constants", self._write(o, DeltaReportSerializer(report).data)

    def _alpha(self, o):
        A = IOService.load_tensor(o["tensor"])
        result = AlphaService.alpha(A, o["op"], self._alpha_config(o))
        return f"alpha({o['op']}_A)", self._write(o, AlphaResultSerializer(result).data)

    def _check_p(self, o):
        A = IOService.load_tensor(o["tensor"])
        verdict = ClassificationService.classify(A, self._alpha_config(o))
        return f"Verdict: {verdict.status}", self._write(o, PVerdictSerializer(verdict).data)

    def _verify_bounds(self, o):
        A = IOService.load_tensor(o["tensor"])
        cfg = self._build(
            BoundsConfigSerializer,
            seed=o["seed"],
            alpha={"seed": o["seed"], "tol": o["tol"], "mode": o["mode"], "grid_resolution": o["h"]},
            eig={"seed": o["seed"]},
        )
        report = BoundsService.verify_bounds(A, cfg, seed=o["seed"])
        data = self._write(o, BoundReportSerializer(report).data)
        if report.violations():
            raise BoundViolationException(
                "Violated: " + ", ".join(v.name for v in report.violations())
            )
        return "All bounds hold", data

    def _tcp_solve(self, o):
        inst = IOService.load_tcp_instance(o["instance"])
        cfg = self._build(TcpConfigSerializer, seed=o["seed"], tol=o["tol"])
        solution = TcpService.solve_tcp(inst, cfg)
        data = self._write(o, TcpSolutionSerializer(solution).data)
        if not solution.converged:
            raise ConvergenceException(f"No start converged; best residual {solution.residual:.3e}")
        return "TCP solved", data

    def _gen(self, o):
        seed = 0 if o["seed"] is None else o["seed"]
        A = GeneratorService.gen_random(o["kind"], o["m"], o["n"], seed, dict(o["param"]))
        return f"Generated {o['kind']} tensor", self._write(o, IOService.tensor_payload(A))

    def _batch(self, o):
        spec = {
            "kind": o["kind"],
            "m": o["m"],
            "n": o["n"],
            "seed": 0 if o["seed"] is None else o["seed"],
            "params": dict(o["param"]),
        }
        cfg = self._build(
            BoundsConfigSerializer,
            seed=o["seed"],
            workers=o["workers"],
            alpha={"seed": o["seed"], "tol": o["tol"], "mode": o["mode"], "grid_resolution": o["h"]},
            eig={"seed": o["seed"]},
        )
        batch = BatchService.batch_experiment(
            spec,
            o["count"],
            cfg,
            output_dir=Path(o["output"]).parent if o.get("output") else None,
            json_path=o.get("output"),
            summary_path=o.get("summary"),
        )
        # stdout carries only the JSON envelope
        logger.info("Batch summary\n%s", BatchService.summary_table(batch))
        return f"{batch.count} instances checked", {
            "count": batch.count,
            "outcome_counts": batch.outcome_counts,
        }


# =============================================================
# CLI Entry
# =============================================================
def cli_dispatch(argv) -> int:
    """
    Run `tensorlab` with argv and return its exit status:
    0 success, 1 violated invariant, 2 input error.
    """
    try:
        Command().run_from_argv(["manage.py", "tensorlab", *argv])
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    return EXIT_OK
