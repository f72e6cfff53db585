"""Shared ideals and hypothesis strategies for the test suite."""
from itertools import product

from hypothesis import strategies as st

from algebra.ideal import MonomialIdeal

STABIND_TEXT = "x1^4, x1^3*x2, x1^2*x2^2*x3, x1*x2^3, x2^4"
STABIND_GENS = [(4, 0, 0), (3, 1, 0), (2, 2, 1), (1, 3, 0), (0, 4, 0)]


def stabind_ideal() -> MonomialIdeal:
    return MonomialIdeal(3, STABIND_GENS)


def path_ideal() -> MonomialIdeal:
    """(XY, YZ)"""
    return MonomialIdeal(3, [(1, 1, 0), (0, 1, 1)])


def exponent_box(r: int, side: int):
    return product(range(side + 1), repeat=r)


@st.composite
def nonzero_vectors(draw, r: int, max_entry: int = 3):
    v = draw(st.lists(st.integers(0, max_entry), min_size=r, max_size=r))
    if not any(v):
        v[draw(st.integers(0, r - 1))] = draw(st.integers(1, max_entry))
    return tuple(v)


@st.composite
def ideals(draw, max_r: int = 3, max_s: int = 4, max_entry: int = 3, min_r: int = 1):
    """Proper nonzero monomial ideals: every generator has positive degree."""
    r = draw(st.integers(min_r, max_r))
    gens = draw(st.lists(nonzero_vectors(r, max_entry), min_size=1, max_size=max_s))
    return MonomialIdeal(r, gens)


@st.composite
def ideal_pairs(draw, max_r: int = 3, max_s: int = 3, max_entry: int = 3):
    I = draw(ideals(max_r=max_r, max_s=max_s, max_entry=max_entry))
    gens = draw(st.lists(nonzero_vectors(I.r, max_entry), min_size=1, max_size=max_s))
    return I, MonomialIdeal(I.r, gens)
