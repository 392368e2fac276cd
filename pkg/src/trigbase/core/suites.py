"""Verification suites and their parallel runner."""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Tuple

from . import basechange, chebyshev, fourier, riordan, spread
from .errors import CheckFailed, CheckSkipped
from .report import CheckReport, CheckStatus

logger = logging.getLogger(__name__)

NamedCheck = Tuple[str, Callable[[], CheckReport]]

SUITES: Dict[str, Callable[[int], List[NamedCheck]]] = {
    "chebyshev": chebyshev.suite_checks,
    "riordan": riordan.suite_checks,
    "basechange": basechange.suite_checks,
    "fourier": fourier.suite_checks,
    "spread": spread.suite_checks,
}


@dataclass
class SuiteResult:
    suite: str
    order: int
    reports: List[CheckReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status is not CheckStatus.FAILED for r in self.reports)

    @property
    def failed(self) -> List[CheckReport]:
        return [r for r in self.reports if r.status is CheckStatus.FAILED]


def _run_one(name: str, check: Callable[[], CheckReport]) -> CheckReport:
    """Run one check; only CheckSkipped yields NOT_TESTED, any other exception is a failure."""
    try:
        report = check()
    except CheckFailed as exc:
        report = exc.report
    except CheckSkipped as exc:
        logger.info(f"{name} skipped: {exc}")
        report = CheckReport(name, anchor=str(exc), status=CheckStatus.NOT_TESTED)
    except Exception as exc:
        logger.error(f"{name} raised {type(exc).__name__}: {exc}")
        report = CheckReport(name, anchor="raised an error")
        report.fail(type(exc).__name__, got=str(exc))
    logger.debug(report.summary())
    return report


def run_checks(checks: List[NamedCheck], workers: int = 1) -> List[CheckReport]:
    """Run independent checks, returning reports in the order given."""
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if workers == 1 or len(checks) < 2:
        return [_run_one(name, check) for name, check in checks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_run_one, name, check) for name, check in checks]
        return [f.result() for f in futures]


def suite_names() -> List[str]:
    return list(SUITES)


def run_suite(name: str, order: int, workers: int = 1) -> List[SuiteResult]:
    """Run one suite, or every suite for name "all".

    Raises:
        ValueError: for an unknown suite name or order < 1
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if name == "all":
        names = suite_names()
    elif name in SUITES:
        names = [name]
    else:
        raise ValueError(f"unknown suite {name!r}; choose from {suite_names() + ['all']}")

    results = []
    for suite in names:
        logger.info(f"Running suite {suite} at order {order} with {workers} workers")
        result = SuiteResult(suite, order, run_checks(SUITES[suite](order), workers))
        if not result.passed:
            logger.warning(f"Suite {suite}: {len(result.failed)} checks failed")
        results.append(result)
    return results
