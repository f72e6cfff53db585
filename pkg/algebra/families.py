"""Named families of monomial ideals used as examples and test subjects."""
from functools import reduce
from typing import Iterable, Sequence, Tuple

from algebra.errors import DomainError, VariableIndexError
from algebra.exponents import as_vector, unit_vector
from algebra.ideal import MonomialIdeal, intersect, prime_ideal

Edge = Tuple[int, int]


def _check_edges(r: int, edges: Iterable[Edge]) -> list:
    checked = []
    for i, j in edges:
        if i == j:
            raise DomainError(f"Loop {i}-{j} is not a simple graph edge")
        for v in (i, j):
            if not 1 <= v <= r:
                raise VariableIndexError(f"Vertex {v} outside 1..{r}")
        checked.append((i, j))
    if not checked:
        raise DomainError("A graph ideal needs at least one edge")
    return checked


def edge_ideal(r: int, edges: Iterable[Edge]) -> MonomialIdeal:
    """(x_i x_j | {i, j} an edge)."""
    checked = _check_edges(r, edges)
    return MonomialIdeal(
        r,
        (tuple(a + b for a, b in zip(unit_vector(r, i), unit_vector(r, j))) for i, j in checked),
    )


def cover_ideal(r: int, edges: Iterable[Edge]) -> MonomialIdeal:
    """Intersection of (x_i, x_j) over all edges; its generators are the vertex covers."""
    checked = _check_edges(r, edges)
    return reduce(intersect, (prime_ideal(r, (i, j)) for i, j in checked))


def principal_ideal(a: Sequence[int]) -> MonomialIdeal:
    a = as_vector(a)
    return MonomialIdeal(len(a), [a])


def path_edges(r: int) -> list:
    return [(i, i + 1) for i in range(1, r)]


def cycle_edges(r: int) -> list:
    return path_edges(r) + [(r, 1)]
