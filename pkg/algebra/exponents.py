"""
Exponent vectors: monomials X_1^b_1 ... X_r^b_r without coefficients.

A vector is a plain tuple of non-negative Python ints, so exponents never
overflow and values can be shared between threads freely.
"""
from typing import Iterable, Sequence, Tuple

from algebra.errors import DimensionError, ExactDivisionError

ExponentVector = Tuple[int, ...]


def as_vector(entries: Iterable[int]) -> ExponentVector:
    """Validate and freeze a sequence of exponents."""
    vector = tuple(int(e) for e in entries)
    for e in vector:
        if e < 0:
            raise DimensionError(f"Negative exponent {e} in {vector}")
    return vector


def zero(r: int) -> ExponentVector:
    return (0,) * r


def unit_vector(r: int, i: int) -> ExponentVector:
    """e_i for a 1-based variable index i."""
    return tuple(1 if j == i - 1 else 0 for j in range(r))


def _check_lengths(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise DimensionError(f"Length mismatch: {len(u)} vs {len(v)}")


def divides(u: ExponentVector, v: ExponentVector) -> bool:
    """X^u | X^v, i.e. u <= v componentwise."""
    _check_lengths(u, v)
    return all(a <= b for a, b in zip(u, v))


def gcd(u: ExponentVector, v: ExponentVector) -> ExponentVector:
    _check_lengths(u, v)
    return tuple(min(a, b) for a, b in zip(u, v))


def lcm(u: ExponentVector, v: ExponentVector) -> ExponentVector:
    _check_lengths(u, v)
    return tuple(max(a, b) for a, b in zip(u, v))


def mul(u: ExponentVector, v: ExponentVector) -> ExponentVector:
    _check_lengths(u, v)
    return tuple(a + b for a, b in zip(u, v))


def div_exact(u: ExponentVector, v: ExponentVector) -> ExponentVector:
    """X^u / X^v; requires X^v | X^u."""
    if not divides(v, u):
        raise ExactDivisionError(f"{v} does not divide {u}")
    return tuple(a - b for a, b in zip(u, v))


def gcd_all(vectors: Sequence[ExponentVector]) -> ExponentVector:
    """Componentwise minimum over a non-empty collection."""
    if not vectors:
        raise DimensionError("gcd of an empty collection")
    return tuple(min(column) for column in zip(*vectors))


def degree(u: ExponentVector) -> int:
    """Total degree (sum of the entries)."""
    return sum(u)


def is_pure_power(u: ExponentVector, i: int) -> bool:
    """True iff X^u = X_i^k with k >= 1 (1-based i)."""
    return u[i - 1] > 0 and all(e == 0 for j, e in enumerate(u) if j != i - 1)


def monomial_str(u: ExponentVector, names: Sequence[str]) -> str:
    """Render X^u with the given variable names, e.g. x1^2*x3."""
    factors = []
    for name, e in zip(names, u):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"
