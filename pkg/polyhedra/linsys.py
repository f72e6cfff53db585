"""
Integer inequality systems B (alpha, h, n) <= c whose solution sets describe
I^n, I^n : m and (for large enough N) sat(I^n).

Columns come in three blocks: k alpha columns, r h columns and one n column.
The non-negativity rows -x <= 0 are implied and never stored.

For the colon and sat kinds the alpha columns split into r groups of s, one
per row block, and each row block only sees its own group. Feasibility is
therefore decided one block at a time with the same pruned search used for
membership in I^n.
"""
import logging
from enum import Enum
from itertools import combinations, product as box
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from algebra.errors import DimensionError, DomainError
from algebra.exponents import ExponentVector
from algebra.ideal import MonomialIdeal, contains, power, require_proper, saturation
from algebra.powers import has_combination
from config import settings
from polyhedra.sigma import BoundValue

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[int, ...], ...]


class SystemKind(str, Enum):
    POWER = "power"
    COLON = "colon"
    SAT = "sat"
    GENERIC = "generic"


class IneqSystem(BaseModel):
    """
    An integer system B x <= c with x = (alpha, h, n) >= 0.

    Generic systems carry no block structure; k and r are then informational
    only and feasibility is not defined for them.
    """

    model_config = ConfigDict(frozen=True)

    kind: SystemKind
    r: int
    k: int
    m: int
    nu: int
    B: Matrix
    c: Tuple[int, ...]
    sat_n: Optional[int] = None

    @model_validator(mode="after")
    def _check_shape(self):
        if len(self.B) != self.m or len(self.c) != self.m:
            raise ValueError(f"Expected {self.m} rows in B and c")
        for row in self.B:
            if len(row) != self.nu:
                raise ValueError(f"Row {row} does not have nu={self.nu} entries")
        if any(v < 0 for v in self.c):
            raise ValueError("c must be non-negative")
        if self.kind is SystemKind.GENERIC:
            return self

        if self.k + self.r + 1 != self.nu:
            raise ValueError(f"Block widths ({self.k}, {self.r}, 1) do not sum to nu={self.nu}")
        if self.kind is SystemKind.POWER:
            if self.m != self.r + 1 or any(self.c):
                raise ValueError("A power system has r + 1 rows and c = 0")
        else:
            if self.m != (self.r + 1) * self.r or self.k % self.r:
                raise ValueError("A colon system has (r + 1) r rows and k = r s")
            scale = 1 if self.kind is SystemKind.COLON else self.sat_n
            if scale is None or scale < 1:
                raise ValueError("A sat system needs N >= 1")
            expected = tuple(
                scale if j == i else 0 for i in range(self.r) for j in range(self.r + 1)
            )
            if self.c != expected:
                raise ValueError(f"c must be {expected} for kind {self.kind.value}")
        self._check_blocks()
        return self

    def _check_blocks(self) -> None:
        s = self.s
        for b in range(self.blocks):
            rows = self.B[b * (self.r + 1):(b + 1) * (self.r + 1)]
            own = range(b * s, (b + 1) * s)
            for j, row in enumerate(rows):
                last = j == self.r
                for col in range(self.k):
                    if col not in own and row[col] != 0:
                        raise ValueError(f"Block {b} touches alpha column {col}")
                    if last and col in own and row[col] != -1:
                        raise ValueError(f"Block {b} last row must carry -1 on its alpha columns")
                    if not last and col in own and row[col] < 0:
                        raise ValueError("Generator entries must be non-negative")
                h_part = row[self.k:self.k + self.r]
                wanted = tuple(0 if last else (-1 if t == j else 0) for t in range(self.r))
                if h_part != wanted or row[-1] != (1 if last else 0):
                    raise ValueError(f"Block {b} row {j} has the wrong h/n part")

    @property
    def blocks(self) -> int:
        return 1 if self.kind is SystemKind.POWER else self.r

    @property
    def s(self) -> int:
        return self.k // self.blocks

    def augmented(self) -> Matrix:
        """(B | c)."""
        return tuple(row + (v,) for row, v in zip(self.B, self.c))

    def block_generators(self, b: int) -> List[ExponentVector]:
        """Generator exponent vectors read back from the alpha columns of block b."""
        top = b * (self.r + 1)
        return [
            tuple(self.B[top + j][col] for j in range(self.r))
            for col in range(b * self.s, (b + 1) * self.s)
        ]


def _alpha_rows(I: MonomialIdeal, offset: int, k: int) -> List[List[int]]:
    rows = []
    for j in range(I.r):
        row = [0] * k
        for l, g in enumerate(I.gens):
            row[offset + l] = g[j]
        rows.append(row)
    last = [0] * k
    for l in range(I.s):
        last[offset + l] = -1
    rows.append(last)
    return rows


def _hn_rows(r: int) -> List[List[int]]:
    rows = [[-1 if t == j else 0 for t in range(r)] + [0] for j in range(r)]
    rows.append([0] * r + [1])
    return rows


def build_power_system(I: MonomialIdeal) -> IneqSystem:
    """sum alpha_l a_l <= h, n <= sum alpha_l: solutions are exactly the X^h in I^n."""
    require_proper(I, "build_power_system")
    k = I.s
    B = tuple(tuple(a + t) for a, t in zip(_alpha_rows(I, 0, k), _hn_rows(I.r)))
    return IneqSystem(
        kind=SystemKind.POWER, r=I.r, k=k, m=I.r + 1, nu=k + I.r + 1, B=B, c=(0,) * (I.r + 1)
    )


def build_colon_system(I: MonomialIdeal) -> IneqSystem:
    """One copy of the power system per variable, with slack e_i in block i."""
    require_proper(I, "build_colon_system")
    r, s = I.r, I.s
    k = r * s
    rows, c = [], []
    for i in range(r):
        for a, t in zip(_alpha_rows(I, i * s, k), _hn_rows(r)):
            rows.append(tuple(a + t))
        c.extend(1 if j == i else 0 for j in range(r + 1))
    return IneqSystem(
        kind=SystemKind.COLON, r=r, k=k, m=(r + 1) * r, nu=k + r + 1, B=tuple(rows), c=tuple(c)
    )


def build_sat_system(I: MonomialIdeal, N: int) -> IneqSystem:
    if N < 1:
        raise DomainError(f"The sat system needs N >= 1, got {N}")
    colon = build_colon_system(I)
    return IneqSystem(
        kind=SystemKind.SAT, r=colon.r, k=colon.k, m=colon.m, nu=colon.nu,
        B=colon.B, c=tuple(N * v for v in colon.c), sat_n=N,
    )


def feasible(sys: IneqSystem, h: ExponentVector, n: int) -> bool:
    """
    Is there alpha >= 0 with B (alpha, h, n) <= c?

    Block b asks for sum(alpha) >= n - c_last with sum(alpha_l a_l) <= h + c_top.
    Any alpha_l above n + max(c) is dominated, and has_combination stops at
    the needed count, so the search never exceeds that bound.
    """
    if sys.kind is SystemKind.GENERIC:
        raise DomainError("Feasibility is only defined for power, colon and sat systems")
    if len(h) != sys.r:
        raise DimensionError(f"h={h} does not have length r={sys.r}")
    if n < 0:
        raise DomainError(f"Negative power {n}")
    for b in range(sys.blocks):
        top = b * (sys.r + 1)
        budget = tuple(h[j] + sys.c[top + j] for j in range(sys.r))
        need = n - sys.c[top + sys.r]
        if not has_combination(sys.block_generators(b), budget, need):
            return False
    return True


class DeltaResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: int
    complete: bool
    order_reached: int
    minors: int
    note: Optional[str] = None

    @property
    def cap_exceeded(self) -> bool:
        return not self.complete


def _det(rows: Matrix, picked_rows, picked_cols) -> int:
    if len(picked_rows) == 1:
        return rows[picked_rows[0]][picked_cols[0]]
    k = len(picked_rows)
    entries = [[ZZ(rows[i][j]) for j in picked_cols] for i in picked_rows]
    return int(DomainMatrix(entries, (k, k), ZZ).det())


def delta_exact(
    sys: IneqSystem, order_cap: Optional[int] = None, budget: Optional[int] = None
) -> DeltaResult:
    """
    Largest |det| over the square submatrices of (B | c), exactly.

    Minors are enumerated order by order with fraction-free integer
    determinants. When the order cap or the minor budget stops the
    enumeration early the partial maximum is returned with complete=False.
    """
    order_cap = order_cap if order_cap is not None else settings.delta_order_cap
    budget = budget if budget is not None else settings.delta_minor_budget
    if order_cap < 1:
        raise DomainError(f"order_cap must be at least 1, got {order_cap}")

    aug = sys.augmented()
    if not any(any(row) for row in aug):
        return DeltaResult(
            value=1, complete=True, order_reached=0, minors=0,
            note="(B|c) = 0; Delta is taken as 1",
        )

    full_order = min(sys.m, sys.nu + 1)
    limit = min(order_cap, full_order)
    best, minors, reached = 0, 0, 0
    for order in range(1, limit + 1):
        for rows in combinations(range(sys.m), order):
            for cols in combinations(range(sys.nu + 1), order):
                if minors >= budget:
                    logger.warning(f"Minor budget {budget} exhausted at order {order}")
                    return DeltaResult(
                        value=best, complete=False, order_reached=reached, minors=minors,
                        note=f"minor budget {budget} exhausted",
                    )
                minors += 1
                best = max(best, abs(_det(aug, rows, cols)))
        reached = order
        logger.debug(f"order {order}: {minors} minors so far, max |det| = {best}")

    if limit < full_order:
        logger.warning(f"Minors of order above {order_cap} were not enumerated")
        return DeltaResult(
            value=best, complete=False, order_reached=reached, minors=minors,
            note=f"order cap {order_cap} below full order {full_order}",
        )
    return DeltaResult(value=best, complete=True, order_reached=reached, minors=minors)


def _colon_degree(sys: IneqSystem) -> int:
    return max((sum(g) for b in range(sys.blocks) for g in sys.block_generators(b)), default=0)


def hadamard_bound(sys: IneqSystem) -> BoundValue:
    """
    Hadamard's inequality applied to (B | c).

    For colon and sat systems every alpha column has squared norm at most
    d^2 + 1 and the remaining r + 1 columns and c have squared norm r (r N^2
    for c), giving (d^2 + 1)^(rs) r^(r+2) N^2. Other systems multiply the
    largest min(m, nu + 1) non-zero squared column norms.
    """
    if sys.kind in (SystemKind.COLON, SystemKind.SAT):
        d = _colon_degree(sys)
        N = sys.sat_n or 1
        squared = (d * d + 1) ** (sys.r * sys.s) * sys.r ** (sys.r + 2) * N * N
        return BoundValue.from_squared(squared, f"hadamard({sys.kind.value}, d={d})")

    aug = sys.augmented()
    norms = sorted(
        (sum(row[j] ** 2 for row in aug) for j in range(sys.nu + 1)), reverse=True
    )
    squared = 1
    for value in [v for v in norms if v][: min(sys.m, sys.nu + 1)]:
        squared *= value
    return BoundValue.from_squared(squared, f"hadamard({sys.kind.value})")


class Theorem1Bound(BaseModel):
    """Delta (nu + 1), the degree bound on generators of the solution module"""

    model_config = ConfigDict(frozen=True)

    bound: BoundValue
    source: str
    delta: Optional[DeltaResult] = None


def theorem1_bound(
    sys: IneqSystem,
    use_exact: bool = False,
    order_cap: Optional[int] = None,
    delta: Optional[DeltaResult] = None,
) -> Theorem1Bound:
    """
    Uses the exact Delta when asked (or when a finished `delta` is passed in)
    and the enumeration completes, the Hadamard surrogate otherwise.
    """
    factor = (sys.nu + 1) ** 2
    if delta is None and use_exact:
        delta = delta_exact(sys, order_cap)
    if delta is not None and delta.complete:
        bound = BoundValue.from_squared(delta.value ** 2 * factor, "Delta(nu+1)")
        return Theorem1Bound(bound=bound, source="exact", delta=delta)
    surrogate = hadamard_bound(sys)
    bound = BoundValue.from_squared(surrogate.squared * factor, "hadamard(nu+1)")
    return Theorem1Bound(bound=bound, source="hadamard", delta=delta)


def solution_box(I: MonomialIdeal, n: int):
    """
    All h in [0, 2nd]^r, clipped per coordinate to n * max_j + 1 where max_j
    is the largest exponent of x_j among the generators of I. Membership in
    I^n and in anything between sat(I^n) and I^n : m, and feasibility of all
    three system kinds, is constant in h_j beyond n * max_j.
    """
    sides = []
    for j in range(I.r):
        top = max(g[j] for g in I.gens)
        sides.append(min(2 * n * I.d, n * top + 1))
    return box(*(range(side + 1) for side in sides))


class SatSearch(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    N: Optional[int]
    tried: List[int]

    @property
    def found(self) -> bool:
        return self.N is not None


def sat_n_floor(I: MonomialIdeal, n: int) -> int:
    """
    Smallest power of two at or above n * d. Block i of the sat system
    multiplies h by x_i^N, and J : x_i^N = J : x_i^oo once N reaches the
    largest x_i exponent among the generators of J = I^n, which is at most
    n * d. Larger N keep working, so the doubling search always stops here.
    """
    return 1 << max(n * I.d - 1, 0).bit_length()


def sat_n_search(I: MonomialIdeal, n: int, cap: Optional[int] = None) -> SatSearch:
    """
    Smallest N in 1, 2, 4, ... (up to cap) for which the sat system with
    scale N has exactly the members of sat(I^n) as solutions on the box.
    Without an explicit cap the search runs at least to sat_n_floor(I, n).
    """
    require_proper(I, "sat_n_search")
    if cap is None:
        cap = max(settings.sat_n_cap, sat_n_floor(I, n))
    target = saturation(power(I, n))
    points = list(solution_box(I, n))
    tried = []
    N = 1
    while N <= cap:
        tried.append(N)
        sys = build_sat_system(I, N)
        if all(feasible(sys, h, n) == contains(target, h) for h in points):
            logger.info(f"sat system with N={N} describes sat(I^{n})")
            return SatSearch(n=n, N=N, tried=tried)
        N *= 2
    logger.warning(f"No N <= {cap} made the sat system match sat(I^{n})")
    return SatSearch(n=n, N=None, tried=tried)
