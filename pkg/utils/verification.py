"""
Cross-checks between independent computations of the same object.

Each check compares two routes (ideal arithmetic against the inequality
systems, fast against naive powers, and so on) over a range of powers and
records every disagreement. The `verify` command and the randomized tests
both run these.
"""
import logging
from typing import Callable, List, Optional

from pydantic import BaseModel, ConfigDict

from algebra.assoc import ass, ass_or_empty, max_ideal_associated
from algebra.ideal import (
    MonomialIdeal,
    colon_ideal,
    contains,
    gcd_reduce,
    maximal_ideal,
    power,
    product,
    require_proper,
    sat_cap_previous_power,
    saturation,
)
from algebra.powers import ass_sequence, indices, member_of_power, powers_upto
from config import settings
from polyhedra.linsys import (
    build_colon_system,
    build_power_system,
    feasible,
    sat_n_search,
    solution_box,
)
from polyhedra.sigma import localized_parameters, sigma2

logger = logging.getLogger(__name__)

MAX_REPORTED = 10


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    cases: int
    mismatches: List[str]
    # cases the check could not decide; they do not fail the report
    unknown: List[str] = []

    @property
    def ok(self) -> bool:
        return not self.mismatches


class VerifyReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    ideal: str
    n_max: int
    checks: List[CheckResult]

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)


class _Recorder:
    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.mismatches: List[str] = []
        self.unknown: List[str] = []

    def check(self, agree: Optional[bool], describe: Callable[[], str]) -> None:
        """agree=None records an undecided case."""
        self.cases += 1
        if agree:
            return
        message = describe()
        bucket = self.mismatches if agree is False else self.unknown
        logger.warning(f"{self.name}: {'unknown, ' if agree is None else ''}{message}")
        if len(bucket) < MAX_REPORTED:
            bucket.append(message)

    def result(self) -> CheckResult:
        return CheckResult(
            name=self.name, cases=self.cases, mismatches=self.mismatches, unknown=self.unknown
        )


def characterization(I: MonomialIdeal, n_max: int) -> CheckResult:
    """m in Ass(R/I^n), I^n : m != I^n, sat(I^n) != I^n and sat(I^n) ∩ I^(n-1) != I^n agree."""
    rec = _Recorder("characterization")
    m = maximal_ideal(I.r)
    for n, P in enumerate(powers_upto(I, n_max), start=1):
        verdicts = (
            max_ideal_associated(P),
            colon_ideal(P, m) != P,
            saturation(P) != P,
            sat_cap_previous_power(I, n) != P,
        )
        rec.check(len(set(verdicts)) == 1, lambda: f"n={n}: conditions disagree {verdicts}")
    return rec.result()


def power_identities(I: MonomialIdeal, n_max: int) -> CheckResult:
    """I^a I^b = I^(a+b), and the fast power matches the naive expansion."""
    rec = _Recorder("power identities")
    powers = powers_upto(I, n_max)
    for n in range(1, n_max + 1):
        rec.check(
            power(I, n) == power(I, n, naive=True) == powers[n - 1],
            lambda: f"I^{n} differs between fast, naive and incremental",
        )
        for a in range(1, n):
            rec.check(
                product(powers[a - 1], powers[n - a - 1]) == powers[n - 1],
                lambda: f"I^{a} I^{n - a} != I^{n}",
            )
    return rec.result()


def system_oracle(I: MonomialIdeal, n_max: int) -> CheckResult:
    """Feasibility of the power and colon systems against membership in I^n and I^n : m."""
    rec = _Recorder("system oracle")
    m = maximal_ideal(I.r)
    power_sys, colon_sys = build_power_system(I), build_colon_system(I)
    for n, P in enumerate(powers_upto(I, n_max), start=1):
        colon = colon_ideal(P, m)
        for h in solution_box(I, n):
            rec.check(
                feasible(power_sys, h, n) == contains(P, h) == member_of_power(I, h, n),
                lambda: f"n={n}, h={h}: power system vs I^{n}",
            )
            rec.check(
                feasible(colon_sys, h, n) == contains(colon, h),
                lambda: f"n={n}, h={h}: colon system vs I^{n} : m",
            )
    return rec.result()


def shift_invariance(I: MonomialIdeal, n_max: int) -> CheckResult:
    """Dividing out the generator gcd X^t only changes the singleton associated primes."""
    rec = _Recorder("gcd shift")
    reduced, t = gcd_reduce(I)

    def drop_singletons(supports):
        return {M for M in supports if len(M) > 1}

    for n in range(1, n_max + 1):
        before = drop_singletons(ass(power(I, n)))
        after = drop_singletons(ass_or_empty(power(reduced, n)))
        rec.check(before == after, lambda: f"n={n}, t={t}: {sorted(before)} vs {sorted(after)}")
    return rec.result()


def sat_scaling(I: MonomialIdeal, n_max: int, cap: Optional[int] = None) -> CheckResult:
    """
    Some N makes the scaled colon system describe sat(I^n). An explicit cap
    that runs out leaves the case unknown rather than failed.
    """
    rec = _Recorder("sat scaling")
    for n in range(1, n_max + 1):
        search = sat_n_search(I, n, cap)
        rec.check(
            True if search.found else None,
            lambda: f"n={n}: no N in {search.tried} matches sat(I^{n})",
        )
    return rec.result()


def bound_conformance(I: MonomialIdeal, n_max: int) -> CheckResult:
    """A confirmed copersistence index stays below ceil(sigma2) at the reduced parameters."""
    rec = _Recorder("bound conformance")
    report = indices(ass_sequence(I, n_max))
    reduced, _ = gcd_reduce(I)
    bound = sigma2(max(reduced.d, 1), I.s, min(I.r, I.s))
    if report.copers_confirmed:
        rec.check(
            report.copers <= bound.ceil,
            lambda: f"copers={report.copers} exceeds {bound.label} = {bound.ceil}",
        )
    for local in localized_parameters(I):
        rec.check(local.within_global, lambda: f"p{local.support}: {local.sigma2.label} too large")
    return rec.result()


def verify_ideal(
    I: MonomialIdeal,
    n_max: int,
    names=None,
    system_max_n: Optional[int] = None,
    include_sat: bool = True,
) -> VerifyReport:
    require_proper(I, "verify")
    system_n = min(n_max, system_max_n or settings.verify_system_max_n)
    checks = [
        characterization(I, n_max),
        power_identities(I, n_max),
        system_oracle(I, system_n),
        shift_invariance(I, n_max),
        bound_conformance(I, n_max),
    ]
    if include_sat:
        checks.append(sat_scaling(I, system_n))
    report = VerifyReport(ideal=I.to_str(names), n_max=n_max, checks=checks)
    logger.info(f"verify {report.ideal}: {'ok' if report.ok else 'MISMATCH'}")
    return report
