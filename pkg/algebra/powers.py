"""
The sequence Ass(R/I^n) for n = 1, 2, ... and the indices read off from it.

Everything here is observational: a finite prefix of the sequence can refute
a candidate index but never certify it, so reports carry confirmation flags
instead of claims about all n.
"""
import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from algebra.assoc import AssSet, PrimeSupport, ass, canonical
from algebra.errors import DimensionError, DomainError
from algebra.exponents import ExponentVector
from algebra.ideal import MonomialIdeal, product, require_proper
from config import settings

logger = logging.getLogger(__name__)


def has_combination(
    gens: Sequence[ExponentVector], budget: ExponentVector, need: int
) -> bool:
    """
    Decide whether some alpha in N_0^s has sum(alpha) >= need and
    sum(alpha_j * gens[j]) <= budget componentwise.

    Depth-first over the generators, largest multiplicity first; a branch
    stops as soon as `need` copies are packed, so no multiplicity above
    `need` is ever tried.
    """
    if need <= 0:
        return True
    usable = [g for g in gens if all(a <= b for a, b in zip(g, budget))]
    if any(not any(g) for g in usable):
        # the unit generator can be repeated for free
        return True
    if not usable:
        return False

    @lru_cache(maxsize=None)
    def best(j: int, rest: ExponentVector) -> int:
        if j == len(usable):
            return 0
        g = usable[j]
        top = min(min(b // a for a, b in zip(g, rest) if a > 0), need)
        result = 0
        for c in range(top, -1, -1):
            left = tuple(b - c * a for a, b in zip(g, rest))
            result = max(result, c + best(j + 1, left))
            if result >= need:
                return need
        return result

    return best(0, tuple(budget)) >= need


def member_of_power(I: MonomialIdeal, u: ExponentVector, n: int) -> bool:
    """X^u in I^n, decided without expanding I^n."""
    if len(u) != I.r:
        raise DimensionError(f"Monomial {u} does not have length r={I.r}")
    if n < 0:
        raise DomainError(f"Negative power {n}")
    return has_combination(I.gens, tuple(u), n)


def powers_upto(I: MonomialIdeal, n_max: int) -> List[MonomialIdeal]:
    """[I^1, ..., I^n_max], each obtained from the previous one by one product."""
    result = [I]
    for _ in range(1, n_max):
        result.append(product(result[-1], I))
    return result


class AssProfile(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ideal: MonomialIdeal
    n_max: int
    sequence: List[AssSet]

    @model_validator(mode="after")
    def _check_length(self):
        if len(self.sequence) != self.n_max:
            raise ValueError(f"Expected {self.n_max} entries, got {len(self.sequence)}")
        return self


class PrimeCpi(BaseModel):
    model_config = ConfigDict(frozen=True)

    support: PrimeSupport
    cpi: int
    confirmed: bool


class IndexReport(BaseModel):
    """
    Empirical stability, persistence and copersistence indices.

    An index is confirmed when the tail it describes spans at least
    `window` observed powers. Per-prime values are an observational
    consistency check, not certified values.
    """

    model_config = ConfigDict(frozen=True)

    n_max: int
    window: int
    stab: Optional[int]
    pers: Optional[int]
    copers: Optional[int]
    stab_confirmed: bool
    pers_confirmed: bool
    copers_confirmed: bool
    per_prime: List[PrimeCpi]

    @model_validator(mode="after")
    def _stab_is_max(self):
        if None not in (self.stab, self.pers, self.copers):
            if self.stab != max(self.pers, self.copers):
                raise ValueError("stab must equal max(pers, copers)")
        return self

    @property
    def per_prime_cpi(self) -> Dict[PrimeSupport, int]:
        return {entry.support: entry.cpi for entry in self.per_prime}


def ass_sequence(I: MonomialIdeal, n_max: Optional[int] = None) -> AssProfile:
    require_proper(I, "ass_sequence")
    n_max = n_max if n_max is not None else settings.n_max
    if n_max < 1:
        raise DomainError(f"n_max must be at least 1, got {n_max}")
    sequence = []
    for n, P in enumerate(powers_upto(I, n_max), start=1):
        sequence.append(ass(P))
        logger.debug(f"n={n}: {P.s} generators, Ass={sequence[-1]}")
    return AssProfile(ideal=I, n_max=n_max, sequence=sequence)


def _tail_start(sets: List[frozenset], violates) -> int:
    """Smallest 1-based n such that no consecutive pair from n on violates."""
    return max((k + 2 for k in range(len(sets) - 1) if violates(sets[k], sets[k + 1])), default=1)


def indices(profile: AssProfile, window: Optional[int] = None) -> IndexReport:
    window = window if window is not None else settings.confirmation_window
    sets = [frozenset(entry) for entry in profile.sequence]
    N = len(sets)

    def confirmed(n: int) -> bool:
        return N - n + 1 >= window

    stab = _tail_start(sets, lambda a, b: a != b)
    pers = _tail_start(sets, lambda a, b: not a <= b)
    copers = _tail_start(sets, lambda a, b: not a >= b)

    per_prime = []
    for M in canonical(set().union(*sets)):
        cpi = _tail_start(sets, lambda a, b: M not in a and M in b)
        per_prime.append(PrimeCpi(support=M, cpi=cpi, confirmed=confirmed(cpi)))

    if not confirmed(stab):
        logger.warning(
            f"Sequence constant only from n={stab} up to n_max={N}; "
            f"fewer than {window} observations, stabilization unconfirmed"
        )
    return IndexReport(
        n_max=N,
        window=window,
        stab=stab,
        pers=pers,
        copers=copers,
        stab_confirmed=confirmed(stab),
        pers_confirmed=confirmed(pers),
        copers_confirmed=confirmed(copers),
        per_prime=per_prime,
    )
