import logging
from dataclasses import dataclass, field, replace
from functools import wraps
from typing import Any, Callable, Dict, List

from cnorm.constants import claims
from cnorm.errors import InternalInvariantViolated
from cnorm.structures.groups import FiniteGroup
from cnorm.structures.series import GroupAnalysis, GroupProfile
from cnorm.utils import Timer

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClaimResult:
    """
    The verdict of one claim on one group.

    Attributes:
        claim_id: A name from constants.claims.ORDER.
        status: holds, holds-vacuously or fails.
        scope: exact, sampled or exhaustive; how far a universally quantified
            claim was actually checked.
        witness: Data from which a failure can be re-checked. Required when the
            claim fails.
        details: Informational data, such as strict inclusions that were found.
        elapsed: Seconds spent on the check.
    """

    claim_id: str
    status: str
    scope: str = claims.EXACT
    witness: Dict[str, Any] | None = None
    details: Dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    def __post_init__(self):
        if self.status not in (claims.HOLDS, claims.HOLDS_VACUOUSLY, claims.FAILS):
            raise InternalInvariantViolated(f"unknown claim status {self.status!r}")
        if self.status == claims.FAILS and self.witness is None:
            raise InternalInvariantViolated(f"{self.claim_id} failed without a witness")

    @property
    def holds(self) -> bool:
        return self.status != claims.FAILS

    def to_json(self) -> dict:
        return {
            "id": self.claim_id,
            "status": self.status,
            "scope": self.scope,
            "witness": self.witness,
            "details": self.details,
            "elapsed": round(self.elapsed, 6),
        }


def verdict(
    claim_id: str,
    witness: Dict[str, Any] | None,
    scope: str = claims.EXACT,
    details: Dict[str, Any] | None = None,
    vacuous: bool = False,
) -> ClaimResult:
    """A ClaimResult that fails exactly when a witness was found."""
    if witness is not None:
        status = claims.FAILS
    else:
        status = claims.HOLDS_VACUOUSLY if vacuous else claims.HOLDS
    return ClaimResult(claim_id, status, scope, witness, details or {})


def as_analysis(g: FiniteGroup | GroupAnalysis) -> GroupAnalysis:
    return g if isinstance(g, GroupAnalysis) else GroupAnalysis(g)


def claim(claim_id: str) -> Callable:
    """
    Register a check under a claim id and time it.

    The decorated function takes a FiniteGroup or a shared GroupAnalysis and
    returns a ClaimResult; the elapsed time is filled in here.
    """

    def decorator(func: Callable[[GroupAnalysis], ClaimResult]):
        @wraps(func)
        def wrapper(g: FiniteGroup | GroupAnalysis) -> ClaimResult:
            analysis = as_analysis(g)
            with Timer(task_name=claim_id) as timer:
                result = func(analysis)
            logger.debug(
                "%s on %s: %s in %ss.", claim_id, analysis.name, result.status, round(timer.duration, 3)
            )
            return replace(result, elapsed=timer.duration)

        wrapper.claim_id = claim_id
        return wrapper

    return decorator


@dataclass
class VerificationReport:
    """
    Every claim's verdict on one group.

    Attributes:
        group_name: The group's display name.
        group_order: The group's order.
        results: One ClaimResult per registered claim, in constants.claims.ORDER.
        profile: The group's classification data.
        series: Term orders of each series, keyed by constants.series.JSON_KEYS.
    """

    group_name: str
    group_order: int
    results: List[ClaimResult]
    profile: GroupProfile
    series: Dict[str, List[int]] = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return all(result.holds for result in self.results)

    def failures(self) -> List[ClaimResult]:
        return [result for result in self.results if not result.holds]

    def result(self, claim_id: str) -> ClaimResult:
        return next(result for result in self.results if result.claim_id == claim_id)

    def to_json(self) -> dict:
        return {
            "group": {"name": self.group_name, "order": self.group_order},
            "series": self.series,
            "profile": self.profile.to_json(),
            "claims": [result.to_json() for result in self.results],
        }
