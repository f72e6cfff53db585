"""
Closed-form copersistence bounds, evaluated exactly.

sigma1(d, s, r) = d (rs + s + d) sqrt(r)^(r+1) (sqrt(2) d)^((r+1)(s-1))
sigma2(d, s, r) = sqrt(d^2 + 1)^(rs) sqrt(r)^(r+2) (rs + r + 2)

Both carry square roots, so a bound is stored as its exact integer square
together with the integer ceiling of its root. Comparisons are made on the
squares, ratios are Fractions, and no float is ever formed.
"""
import logging
from fractions import Fraction
from math import isqrt
from typing import List, Tuple

from more_itertools import powerset
from pydantic import BaseModel, ConfigDict, model_validator

from algebra.assoc import localize
from algebra.errors import DomainError
from algebra.ideal import IdealStats, MonomialIdeal, stats

logger = logging.getLogger(__name__)

Params = Tuple[int, int, int]


def ceil_sqrt(squared: int) -> int:
    """Smallest k with k*k >= squared."""
    root = isqrt(squared)
    return root if root * root == squared else root + 1


class BoundValue(BaseModel):
    """A non-negative real given by its exact square"""

    model_config = ConfigDict(frozen=True)

    squared: int
    ceil: int
    label: str

    @model_validator(mode="after")
    def _ceil_is_exact(self):
        if self.squared < 0:
            raise ValueError("squared must be non-negative")
        lower = max(self.ceil - 1, 0) ** 2 if self.ceil > 0 else -1
        if not (self.ceil ** 2 >= self.squared > lower):
            raise ValueError(f"ceil={self.ceil} is not the ceiling of sqrt({self.squared})")
        return self

    @classmethod
    def from_squared(cls, squared: int, label: str) -> "BoundValue":
        return cls(squared=squared, ceil=ceil_sqrt(squared), label=label)


def _check_params(d: int, s: int, r: int) -> None:
    if min(d, s, r) < 1:
        raise DomainError(f"Bound parameters must be positive, got (d,s,r)=({d},{s},{r})")


def sigma1(d: int, s: int, r: int) -> BoundValue:
    _check_params(d, s, r)
    squared = d ** 2 * (r * s + s + d) ** 2 * r ** (r + 1) * (2 * d ** 2) ** ((r + 1) * (s - 1))
    return BoundValue.from_squared(squared, f"sigma1({d},{s},{r})")


def sigma2(d: int, s: int, r: int) -> BoundValue:
    _check_params(d, s, r)
    squared = (d ** 2 + 1) ** (r * s) * r ** (r + 2) * (r * s + r + 2) ** 2
    return BoundValue.from_squared(squared, f"sigma2({d},{s},{r})")


def q_squared(d: int) -> Fraction:
    """q(d)^2 = 2d^2 / (d^2 + 1)."""
    return Fraction(2 * d ** 2, d ** 2 + 1)


def phi_squared(r: int) -> Fraction:
    """phi(r)^2 = q(2)^(2 r^2) / (2r)."""
    return q_squared(2) ** (r * r) / (2 * r)


class BoundComparison(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    params: Params
    sigma1: BoundValue
    sigma2: BoundValue
    ordering: str
    q_squared: Fraction
    middle_squared: Fraction
    chain_holds: bool


def compare(d: int, s: int, r: int) -> BoundComparison:
    """
    Order sigma1 against sigma2 and evaluate the intermediate term
    q(d)^(rs) sigma2 / sqrt(2r) in squared form.
    """
    first, second = sigma1(d, s, r), sigma2(d, s, r)
    if second.squared < first.squared:
        ordering = "<"
    elif second.squared == first.squared:
        ordering = "="
    else:
        ordering = ">"
    middle = q_squared(d) ** (r * s) * second.squared / (2 * r)
    return BoundComparison(
        params=(d, s, r),
        sigma1=first,
        sigma2=second,
        ordering=ordering,
        q_squared=q_squared(d),
        middle_squared=middle,
        chain_holds=second.squared < middle <= first.squared,
    )


class BoundReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    stats: IdealStats
    raw_params: Params
    reduced_params: Params
    raw_sigma1: BoundValue
    raw_sigma2: BoundValue
    reduced_sigma1: BoundValue
    reduced_sigma2: BoundValue
    raw_ratio_squared: Fraction
    reduced_ratio_squared: Fraction
    notes: List[str]


def bound_report(I: MonomialIdeal) -> BoundReport:
    """Both bounds at the raw (d, s, r) and at the reduced (d_red, s, min(r, s))."""
    st = stats(I)
    notes = []
    d_red = st.d_red
    if d_red == 0:
        # sigma is non-decreasing in d, so d = 1 still bounds
        notes.append("d_red = 0 (the reduced ideal is the unit ideal); evaluated at d = 1")
        d_red = 1
    if st.s == 1:
        notes.append(
            "single generator: Ass(R/I^n) = {(x_i) | x_i divides it} for every n, so cpi = 1"
        )
    if st.r == 2:
        notes.append("two variables: m is associated to all powers or to none, stability index 1")

    raw = (st.d, st.s, st.r)
    reduced = (d_red, st.s, min(st.r, st.s))
    raw1, raw2 = sigma1(*raw), sigma2(*raw)
    red1, red2 = sigma1(*reduced), sigma2(*reduced)
    logger.info(f"Bounds for {I.to_str()}: raw {raw}, reduced {reduced}")
    return BoundReport(
        stats=st,
        raw_params=raw,
        reduced_params=reduced,
        raw_sigma1=raw1,
        raw_sigma2=raw2,
        reduced_sigma1=red1,
        reduced_sigma2=red2,
        raw_ratio_squared=Fraction(raw1.squared, raw2.squared),
        reduced_ratio_squared=Fraction(red1.squared, red2.squared),
        notes=notes,
    )


class LocalizedBound(BaseModel):
    model_config = ConfigDict(frozen=True)

    support: Tuple[int, ...]
    params: Params
    sigma2: BoundValue
    within_global: bool


def localized_parameters(I: MonomialIdeal) -> List[LocalizedBound]:
    """
    For every candidate support M, the parameters of I localized at p(M) and
    sigma2 there. Each localized value stays below sigma2(d, s, r) because
    localizing never increases d, s or the number of variables.
    """
    st = stats(I)
    ceiling = sigma2(st.d, st.s, st.r)
    result = []
    for M in powerset(st.support):
        if not M or len(M) > min(st.r, st.s):
            continue
        local = localize(I, M)
        if local.is_unit:
            continue
        params = (max(local.d, 1), local.s, len(M))
        value = sigma2(*params)
        result.append(
            LocalizedBound(
                support=M,
                params=params,
                sigma2=value,
                within_global=value.squared <= ceiling.squared,
            )
        )
    return result
