"""
Monomial ideals given by their minimal generators.

An ideal is stored as the tuple of its minimal exponent vectors in
descending lexicographic order (x1^4 before x1^3*x2 before x2^4), so two
ideals are equal exactly when their generator tuples are.
The unit ideal is generated by the zero vector; the zero ideal has no
generators.
"""
import logging
from functools import reduce
from itertools import combinations_with_replacement
from typing import Iterable, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from algebra.errors import DimensionError, DomainError, VariableIndexError
from algebra.exponents import (
    ExponentVector,
    as_vector,
    degree,
    div_exact,
    divides,
    gcd_all,
    is_pure_power,
    monomial_str,
    unit_vector,
    zero,
)

logger = logging.getLogger(__name__)


def _minimal(vectors: Iterable[ExponentVector]) -> Tuple[ExponentVector, ...]:
    # a proper divisor has strictly smaller degree, so it is kept before any multiple
    kept = []
    for v in sorted(set(vectors), key=lambda w: (sum(w), w)):
        if not any(all(a <= b for a, b in zip(k, v)) for k in kept):
            kept.append(v)
    return tuple(sorted(kept, reverse=True))


class MonomialIdeal:
    """A monomial ideal in K[X_1, ..., X_r], immutable once built."""

    __slots__ = ("_r", "_gens")

    def __init__(self, r: int, gens: Iterable[Sequence[int]] = ()):
        if r < 1:
            raise DomainError(f"A polynomial ring needs at least one variable, got r={r}")
        vectors = []
        for g in gens:
            v = as_vector(g)
            if len(v) != r:
                raise DimensionError(f"Generator {v} does not have length r={r}")
            vectors.append(v)
        self._r = r
        self._gens = _minimal(vectors)

    @classmethod
    def _from_vectors(cls, r: int, vectors: Iterable[ExponentVector]) -> "MonomialIdeal":
        ideal = cls.__new__(cls)
        ideal._r = r
        ideal._gens = _minimal(vectors)
        return ideal

    @property
    def r(self) -> int:
        return self._r

    @property
    def gens(self) -> Tuple[ExponentVector, ...]:
        return self._gens

    @property
    def s(self) -> int:
        return len(self._gens)

    @property
    def is_zero(self) -> bool:
        return not self._gens

    @property
    def is_unit(self) -> bool:
        return self._gens == (zero(self._r),)

    @property
    def d(self) -> int:
        """Maximal total degree of a minimal generator (0 for zero/unit ideals)."""
        return max((degree(g) for g in self._gens), default=0)

    @property
    def support(self) -> Tuple[int, ...]:
        """1-based indices of the variables dividing some minimal generator."""
        return tuple(j + 1 for j in range(self._r) if any(g[j] > 0 for g in self._gens))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self._r == other._r and self._gens == other._gens

    def __hash__(self) -> int:
        return hash((self._r, self._gens))

    def __repr__(self) -> str:
        return f"MonomialIdeal(r={self._r}, gens={list(self._gens)})"

    def to_str(self, names: Optional[Sequence[str]] = None) -> str:
        names = names or [f"x{i}" for i in range(1, self._r + 1)]
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(monomial_str(g, names) for g in self._gens) + ")"


class IdealStats(BaseModel):
    """The bound parameters of a proper nonzero monomial ideal"""

    model_config = ConfigDict(frozen=True)

    r: int
    s: int
    d: int
    d_red: int
    support: Tuple[int, ...]


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.r != J.r:
        raise DimensionError(f"Ideals live in {I.r} and {J.r} variables")


def require_proper(I: MonomialIdeal, operation: str) -> None:
    if I.is_zero or I.is_unit:
        raise DomainError(f"{operation} needs a proper nonzero ideal, got {I.to_str()}")


def unit_ideal(r: int) -> MonomialIdeal:
    return MonomialIdeal(r, [zero(r)])


def zero_ideal(r: int) -> MonomialIdeal:
    return MonomialIdeal(r, [])


def maximal_ideal(r: int) -> MonomialIdeal:
    """m = (X_1, ..., X_r)."""
    return MonomialIdeal(r, [unit_vector(r, i) for i in range(1, r + 1)])


def prime_ideal(r: int, members: Sequence[int]) -> MonomialIdeal:
    """p(M) = (X_i | i in M) for a non-empty M."""
    if not members:
        raise DomainError("p(M) needs a non-empty support M")
    for i in members:
        if not 1 <= i <= r:
            raise VariableIndexError(f"Variable index {i} outside 1..{r}")
    return MonomialIdeal(r, [unit_vector(r, i) for i in members])


def minimalize(r: int, raw: Iterable[Sequence[int]]) -> MonomialIdeal:
    """The ideal generated by raw, with its divisibility-minimal generators."""
    return MonomialIdeal(r, raw)


def contains(I: MonomialIdeal, u: ExponentVector) -> bool:
    if len(u) != I.r:
        raise DimensionError(f"Monomial {u} does not have length r={I.r}")
    return any(divides(g, u) for g in I.gens)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal._from_vectors(
        I.r, (tuple(a + b for a, b in zip(g, h)) for g in I.gens for h in J.gens)
    )


def power(I: MonomialIdeal, n: int, naive: bool = False) -> MonomialIdeal:
    """
    I^n by binary exponentiation, minimalizing after every product.

    With naive=True every multiset of n generators is multiplied out directly;
    that path exists as an oracle for the fast one.
    """
    if n < 0:
        raise DomainError(f"Negative power {n}")
    if n == 0:
        return unit_ideal(I.r)
    if naive:
        raw = (
            tuple(map(sum, zip(*combo)))
            for combo in combinations_with_replacement(I.gens, n)
        )
        return MonomialIdeal._from_vectors(I.r, raw)

    result = None
    base = I
    k = n
    while k:
        if k & 1:
            result = base if result is None else product(result, base)
        k >>= 1
        if k:
            base = product(base, base)
    logger.debug(f"power n={n}: {result.s} minimal generators")
    return result


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal._from_vectors(
        I.r, (tuple(max(a, b) for a, b in zip(g, h)) for g in I.gens for h in J.gens)
    )


def colon_monomial(I: MonomialIdeal, u: ExponentVector) -> MonomialIdeal:
    """I : X^u, generated by lcm(g, u) / u."""
    if len(u) != I.r:
        raise DimensionError(f"Monomial {u} does not have length r={I.r}")
    # lcm(g, u) - u == max(g - u, 0) componentwise
    return MonomialIdeal._from_vectors(
        I.r, (tuple(max(a - b, 0) for a, b in zip(g, u)) for g in I.gens)
    )


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I : J as the intersection of I : u over the generators u of J."""
    _same_ring(I, J)
    if J.is_zero:
        raise DomainError("Colon by the zero ideal is not defined here")
    return reduce(intersect, (colon_monomial(I, u) for u in J.gens))


def saturate_variable(I: MonomialIdeal, j: int) -> MonomialIdeal:
    """I : X_j^inf, obtained by replacing X_j with 1 in every generator."""
    if not 1 <= j <= I.r:
        raise VariableIndexError(f"Variable index {j} outside 1..{I.r}")
    return MonomialIdeal._from_vectors(
        I.r, (g[: j - 1] + (0,) + g[j:] for g in I.gens)
    )


def saturation(I: MonomialIdeal) -> MonomialIdeal:
    """sat(I) = I : m^inf, the intersection of all I : X_j^inf."""
    return reduce(intersect, (saturate_variable(I, j) for j in range(1, I.r + 1)))


def sat_cap_previous_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """sat(I^n) ∩ I^(n-1) for n >= 1."""
    if n < 1:
        raise DomainError(f"sat(I^n) ∩ I^(n-1) needs n >= 1, got {n}")
    return intersect(saturation(power(I, n)), power(I, n - 1))


def gcd_reduce(I: MonomialIdeal) -> Tuple[MonomialIdeal, ExponentVector]:
    """Split off X^t = gcd of the generators: returns (I : X^t, t)."""
    if I.is_zero:
        raise DomainError("The zero ideal has no generator gcd")
    t = gcd_all(I.gens)
    reduced = MonomialIdeal._from_vectors(I.r, (div_exact(g, t) for g in I.gens))
    return reduced, t


def is_primary(I: MonomialIdeal) -> bool:
    """Primary iff every variable in the support has a pure power among the generators."""
    require_proper(I, "is_primary")
    return all(any(is_pure_power(g, j) for g in I.gens) for j in I.support)


def stats(I: MonomialIdeal) -> IdealStats:
    require_proper(I, "stats")
    reduced, _ = gcd_reduce(I)
    return IdealStats(r=I.r, s=I.s, d=I.d, d_red=reduced.d, support=I.support)
