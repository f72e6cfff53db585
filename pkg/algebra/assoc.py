"""
Associated primes of monomial ideals.

Every associated prime of R/I is some p(M) = (X_i | i in M). Whether p(M) is
associated is decided in the localization at p(M), where it becomes the
maximal ideal, and there by comparing I : m with I.
"""
import logging
from enum import Enum
from itertools import product as box
from typing import NamedTuple, Optional, Sequence, Tuple

from more_itertools import powerset

from algebra.errors import DomainError, VariableIndexError
from algebra.exponents import ExponentVector
from algebra.ideal import (
    MonomialIdeal,
    colon_ideal,
    colon_monomial,
    maximal_ideal,
    prime_ideal,
    require_proper,
)
from config import settings

logger = logging.getLogger(__name__)

PrimeSupport = Tuple[int, ...]
AssSet = Tuple[PrimeSupport, ...]


def support_key(M: PrimeSupport) -> Tuple[int, PrimeSupport]:
    """Ordering used everywhere: by size, then lexicographically."""
    return (len(M), M)


def canonical(supports) -> AssSet:
    return tuple(sorted({tuple(sorted(M)) for M in supports}, key=support_key))


def _normalize_support(r: int, M: Sequence[int]) -> PrimeSupport:
    members = tuple(sorted(set(M)))
    if not members:
        raise DomainError("p(∅) = (0) is never considered; the support must be non-empty")
    for i in members:
        if not 1 <= i <= r:
            raise VariableIndexError(f"Variable index {i} outside 1..{r}")
    return members


def localize(I: MonomialIdeal, M: Sequence[int]) -> MonomialIdeal:
    """
    I_M over the |M| variables of M: variables outside M become units,
    so their exponents are dropped from every generator.
    """
    require_proper(I, "localize")
    members = _normalize_support(I.r, M)
    return MonomialIdeal(len(members), (tuple(g[i - 1] for i in members) for g in I.gens))


def max_ideal_associated(I: MonomialIdeal) -> bool:
    """m in Ass(R/I) iff I : m != I."""
    require_proper(I, "max_ideal_associated")
    if I.s < I.r:
        # fewer generators than variables: m is never associated
        return False
    if len(I.support) < I.r:
        return False
    return colon_ideal(I, maximal_ideal(I.r)) != I


def ass(I: MonomialIdeal) -> AssSet:
    """Ass(R/I), ordered by support size and then lexicographically."""
    require_proper(I, "ass")
    limit = min(I.r, I.s)
    found = []
    for M in powerset(I.support):
        if not M:
            continue
        if len(M) > limit:
            break
        local = localize(I, M)
        if local.is_unit:
            continue
        if max_ideal_associated(local):
            found.append(M)
    logger.debug(f"Ass of {I.to_str()}: {found}")
    return tuple(found)


def ass_or_empty(I: MonomialIdeal) -> AssSet:
    """Like ass, but R/R = 0 has no associated primes."""
    if I.is_unit:
        return ()
    return ass(I)


class WitnessStatus(str, Enum):
    FOUND = "found"
    NOT_ASSOCIATED = "not-associated"
    CAP_EXCEEDED = "cap-exceeded"


class WitnessSearch(NamedTuple):
    status: WitnessStatus
    witness: Optional[ExponentVector]
    candidates: int


def find_witness(
    I: MonomialIdeal,
    M: Sequence[int],
    side: Optional[int] = None,
    cap: Optional[int] = None,
) -> WitnessSearch:
    """
    Search a monomial X^a with I : X^a = p(M) in the box [0, side]^r.

    The box side defaults to d + r. Running out of candidates is reported as
    CAP_EXCEEDED and means "unknown", never "not associated".
    """
    require_proper(I, "find_witness")
    members = _normalize_support(I.r, M)
    local = localize(I, members)
    if local.is_unit or not max_ideal_associated(local):
        return WitnessSearch(WitnessStatus.NOT_ASSOCIATED, None, 0)

    if side is None:
        side = settings.witness_box_side if settings.witness_box_side is not None else I.d + I.r
    cap = cap or settings.witness_candidate_cap
    target = prime_ideal(I.r, members)

    tried = 0
    for a in box(range(side + 1), repeat=I.r):
        if tried >= cap:
            logger.warning(f"Witness search for p{members} stopped after {cap} candidates")
            return WitnessSearch(WitnessStatus.CAP_EXCEEDED, None, tried)
        tried += 1
        if colon_monomial(I, a) == target:
            return WitnessSearch(WitnessStatus.FOUND, a, tried)

    logger.warning(f"No witness for p{members} in the box of side {side}")
    return WitnessSearch(WitnessStatus.CAP_EXCEEDED, None, tried)
