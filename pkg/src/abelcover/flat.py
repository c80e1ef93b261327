"""Ramification, genus, stratum and linear holonomy of M_N(A).

The flat metric is the lift of the pillowcase quadratic differential. Over
the branch point z_j there are d/m_j points of cone angle m_j*pi, where m_j
is the order of column j in the deck group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .modspan import DEFAULT_CAP, ResidueVector, element_order
from .presentation import Presentation, covers, degree, row_span, validate

# The torus M_2(1,1,1,1): covering it is the same as q being a global square.
SQUARE_ROOT_COVER = validate(2, [[1, 1, 1, 1]])


@dataclass(frozen=True)
class BranchPoint:
    index: int  # 1..4
    ramification: int  # m_j; cone angle is m_j * pi
    point_count: int  # d / m_j

    @property
    def cone_angle_over_pi(self) -> int:
        return self.ramification

    @property
    def qd_order(self) -> int:
        """Order of the lifted quadratic differential at each point over z_j."""
        return self.ramification - 2


@dataclass(frozen=True)
class StratumReport:
    degree: int
    genus: int
    branch_points: tuple[BranchPoint, ...]
    marked_points: int
    trivial_holonomy: bool
    abelian_zero_orders: tuple[int, ...] | None

    def singularities(self) -> list[tuple[int, int]]:
        """(cone angle / pi, multiplicity) pairs, merged and sorted by angle descending."""
        counts: dict[int, int] = {}
        for bp in self.branch_points:
            counts[bp.ramification] = counts.get(bp.ramification, 0) + bp.point_count
        return sorted(counts.items(), reverse=True)


def ramification_orders(P: Presentation) -> tuple[int, int, int, int]:
    return tuple(element_order(c) for c in P.columns)


def genus_fraction(P: Presentation, cap: int = DEFAULT_CAP) -> Fraction:
    d = degree(P, cap)
    total = sum(gcd(P.N, *c.entries) for c in P.columns)
    return 1 + d * (1 - Fraction(total, 2 * P.N))


def genus(P: Presentation, cap: int = DEFAULT_CAP) -> int:
    g = genus_fraction(P, cap)
    assert g.denominator == 1 and g >= 0, f"genus formula gave {g} for {P}"
    return int(g)


def holonomy_cover(P: Presentation) -> Presentation:
    """Presentation (N+, A+) of the holonomy double cover."""
    if P.N % 2 == 0:
        return validate(P.N, [*P.A, (P.N // 2,) * 4])
    return validate(2 * P.N, [*(tuple(2 * x for x in row) for row in P.A), (P.N,) * 4])


def has_trivial_holonomy(P: Presentation, cap: int = DEFAULT_CAP) -> bool:
    """True iff the lifted quadratic differential is the square of an abelian one."""
    return covers(P, SQUARE_ROOT_COVER, cap)


def half_vector_in_row_span(P: Presentation, cap: int = DEFAULT_CAP) -> bool:
    """N even and (N/2, N/2, N/2, N/2) lies in the row span.

    Equivalent to :func:`has_trivial_holonomy`; kept as an independent
    formulation for cross-checks.
    """
    if P.N % 2:
        return False
    return ResidueVector(P.N, (P.N // 2,) * 4) in row_span(P, cap)


def stratum(P: Presentation, cap: int = DEFAULT_CAP) -> StratumReport:
    d = degree(P, cap)
    g = genus(P, cap)
    orders = ramification_orders(P)
    points = tuple(BranchPoint(j + 1, m, d // m) for j, m in enumerate(orders))
    marked = sum(bp.point_count for bp in points if bp.ramification == 1)
    trivial = has_trivial_holonomy(P, cap)
    zeros = None
    if trivial:
        assert all(m % 2 == 0 for m in orders), f"odd cone angle with trivial holonomy in {P}"
        zeros = tuple(m // 2 - 1 for m in orders)
    return StratumReport(d, g, points, marked, trivial, zeros)
