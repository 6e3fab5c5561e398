"""Manifest-driven execution of the proof replay."""

from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import List, Optional

from rich.console import Console
from rich.progress import Progress, SpinnerColumn, TextColumn

# Import calculators package to register all calculators
from . import calculators  # noqa: F401
from ..common.axioms import cite
from ..common.results import CheckResult, Status, build_result
from ..config.settings import get_settings
from ..errors.exceptions import ManifestError
from ..log_config.logger import LoggerMixin, get_logger
from .manifest import CheckSpec, Manifest, get_manifest, load_manifest
from .registry import CalculatorRegistry, Evaluation

logger = get_logger(__name__)


def evaluate(spec: CheckSpec) -> Evaluation:
    """Run the calculator a manifest entry names."""
    calculator = CalculatorRegistry.get_calculator(spec.calculator)
    if calculator is None:
        raise ManifestError(
            f"Unknown calculator {spec.calculator!r}", check_id=spec.id
        )
    return calculator(**spec.params)


def _result(spec: CheckSpec, computed, notes: List[str]) -> CheckResult:
    return build_result(
        check_id=spec.id,
        scope=spec.scope,
        paper_anchor=spec.anchor,
        expected=spec.expected.value,
        provenance=spec.expected.provenance,
        computed=computed,
        disputed=spec.disputed,
        axioms_used=cite(spec.axioms),
        notes=list(spec.notes) + notes,
    )


def _error_result(spec: CheckSpec, error: Exception) -> CheckResult:
    result = _result(spec, None, [f"error: {type(error).__name__}: {error}"])
    return result.model_copy(update={"status": Status.MISMATCH})


def evaluate_check(spec: CheckSpec) -> CheckResult:
    """Evaluate one check; a failing calculator yields a MISMATCH result."""
    try:
        evaluation = evaluate(spec)
    except Exception as e:
        logger.error(
            "Calculator failed",
            check_id=spec.id,
            calculator=spec.calculator,
            error=str(e),
            error_type=type(e).__name__,
        )
        return _error_result(spec, e)
    return _result(spec, evaluation.value, evaluation.trace)


class ReportRunner(LoggerMixin):
    """Evaluates the checks of a manifest, in parallel where allowed."""

    def __init__(self, quiet: bool = False):
        """Initialize report runner.

        Args:
            quiet: Suppress progress output
        """
        self.quiet = quiet
        self.console = Console(stderr=True)

    def run(
        self,
        specs: List[CheckSpec],
        parallel: bool = True,
        max_workers: int = 4,
    ) -> List[CheckResult]:
        """Evaluate checks and return the results ordered by check id.

        Args:
            specs: Manifest entries to evaluate
            parallel: Evaluate in parallel
            max_workers: Maximum parallel workers

        Returns:
            List of CheckResult objects
        """
        if not specs:
            return []

        self.logger.debug(
            "Evaluating checks",
            checks=len(specs),
            parallel=parallel,
            max_workers=max_workers,
        )
        if parallel and len(specs) > 1:
            results = self._run_parallel(specs, max_workers)
        else:
            results = self._run_sequential(specs)
        return sorted(results, key=lambda r: r.check_id)

    def _run_parallel(
        self, specs: List[CheckSpec], max_workers: int
    ) -> List[CheckResult]:
        results = []

        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            console=self.console,
            disable=self.quiet,
        ) as progress:
            task = progress.add_task(
                f"Replaying {len(specs)} checks...", total=len(specs)
            )

            with ThreadPoolExecutor(max_workers=max_workers) as executor:
                future_to_spec = {
                    executor.submit(evaluate_check, spec): spec for spec in specs
                }

                for future in as_completed(future_to_spec):
                    spec = future_to_spec[future]
                    try:
                        results.append(future.result())
                    except Exception as e:
                        results.append(_error_result(spec, e))

                    progress.update(task, advance=1)

        return results

    def _run_sequential(self, specs: List[CheckSpec]) -> List[CheckResult]:
        results = []

        for spec in specs:
            if not self.quiet:
                self.console.print(f"Replaying {spec.id}...")
            results.append(evaluate_check(spec))

        return results


def run_report(
    scope: str = "all",
    manifest: Optional[Manifest] = None,
    parallel: Optional[bool] = None,
    max_workers: Optional[int] = None,
    quiet: bool = True,
) -> List[CheckResult]:
    """Replay every check in ``scope``, ordered by check id.

    Unset options fall back to the verifier settings.
    """
    settings = get_settings().verifier
    if manifest is None:
        manifest = (
            load_manifest(settings.manifest_file)
            if settings.manifest_file
            else get_manifest()
        )
    if parallel is None:
        parallel = settings.parallel
    if max_workers is None:
        max_workers = settings.max_workers

    specs = manifest.select(scope)
    logger.info("Starting proof replay", scope=scope, checks=len(specs))

    results = ReportRunner(quiet=quiet).run(specs, parallel, max_workers)

    for result in results:
        if result.status is not Status.MATCH:
            logger.warning(
                "Check did not match",
                check_id=result.check_id,
                status=result.status.value,
            )
    logger.info(
        "Proof replay finished",
        scope=scope,
        match=sum(r.status is Status.MATCH for r in results),
        flagged=sum(r.status is Status.FLAGGED for r in results),
        mismatch=sum(r.status is Status.MISMATCH for r in results),
    )
    return results
