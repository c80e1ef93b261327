"""Presentations (N, A) of abelian covers of the four-punctured sphere.

A presentation is a modulus N and an m x 4 matrix over Z_N whose rows sum to
zero. Column j records the deck transformation of a loop around the j-th
branch point; the row span and the column span have the same size, the
degree of the cover. Distinct presentations may name the same cover, so
equality of covers is tested with :func:`isomorphic`, never with ``==``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import Sequence

from .errors import EmptyMatrixError, InvalidModulusError, ValidationError
from .modspan import DEFAULT_CAP, ResidueVector, Subgroup, span_closure


@dataclass(frozen=True)
class Presentation:
    N: int
    A: tuple[tuple[int, int, int, int], ...]

    @property
    def m(self) -> int:
        return len(self.A)

    @property
    def rows(self) -> list[ResidueVector]:
        return [ResidueVector(self.N, row) for row in self.A]

    @property
    def columns(self) -> list[ResidueVector]:
        return [ResidueVector(self.N, tuple(row[j] for row in self.A)) for j in range(4)]

    def column(self, j: int) -> ResidueVector:
        """Column ``j`` (0-based), the deck element of a loop around z_{j+1}."""
        return ResidueVector(self.N, tuple(row[j] for row in self.A))

    def __str__(self):
        rows = ",".join("[" + ",".join(str(x) for x in row) + "]" for row in self.A)
        return f"M_{self.N}([{rows}])"


def validate(N: int, raw_rows: Sequence[Sequence[int]]) -> Presentation:
    """Reduce ``raw_rows`` mod N and check that every row sums to zero."""
    if not isinstance(N, int) or N < 1:
        raise InvalidModulusError(f"modulus must be a positive integer, got {N!r}")
    if len(raw_rows) == 0:
        raise EmptyMatrixError("the matrix A needs at least one row")
    rows = []
    for i, raw in enumerate(raw_rows):
        if len(raw) != 4:
            raise ValidationError(f"row {i} has {len(raw)} entries, expected 4", row=i)
        row = tuple(int(x) % N for x in raw)
        s = sum(row) % N
        if s:
            raise ValidationError(f"row {i} sums to {s} mod {N}", row=i)
        rows.append(row)
    return Presentation(N, tuple(rows))


def M(N: int, rows: Sequence[Sequence[int]]) -> Presentation:
    """Shorthand for :func:`validate`, mirroring the notation M_N(A)."""
    return validate(N, rows)


@lru_cache(maxsize=4096)
def _row_span(P: Presentation, cap: int) -> Subgroup:
    return span_closure(P.rows, cap, modulus=P.N, dimension=4)


@lru_cache(maxsize=4096)
def _column_span(P: Presentation, cap: int) -> Subgroup:
    return span_closure(P.columns, cap, modulus=P.N, dimension=P.m)


def row_span(P: Presentation, cap: int = DEFAULT_CAP) -> Subgroup:
    return _row_span(P, cap)


def column_span(P: Presentation, cap: int = DEFAULT_CAP) -> Subgroup:
    """The deck group of the cover, as a subgroup of Z_N^m."""
    return _column_span(P, cap)


def degree(P: Presentation, cap: int = DEFAULT_CAP) -> int:
    d = len(column_span(P, cap))
    rows = len(row_span(P, cap))
    assert d == rows, f"row span ({rows}) and column span ({d}) differ in size for {P}"
    return d


@lru_cache(maxsize=4096)
def _embedded_entries(P: Presentation, k: int, cap: int) -> frozenset:
    # entries are < N, so k*e < kN needs no reduction
    return frozenset(tuple(k * e for e in v.entries) for v in row_span(P, cap))


def _embedded_spans(P: Presentation, Q: Presentation, cap: int):
    L = lcm(P.N, Q.N)
    return _embedded_entries(P, L // P.N, cap), _embedded_entries(Q, L // Q.N, cap)


def covers(P: Presentation, Q: Presentation, cap: int = DEFAULT_CAP) -> bool:
    """True iff the cover named by P factors through the cover named by Q.

    Containment of row spans is tested at lcm(N_P, N_Q) only; any larger
    common multiple is reached by an injective rescaling, which preserves
    containment.
    """
    sp, sq = _embedded_spans(P, Q, cap)
    return sq <= sp


def isomorphic(P: Presentation, Q: Presentation, cap: int = DEFAULT_CAP) -> bool:
    sp, sq = _embedded_spans(P, Q, cap)
    return sp == sq


def scaled(P: Presentation, k: int) -> Presentation:
    """The presentation (kN, kA) of the same cover."""
    return Presentation(P.N * k, tuple(tuple(k * x for x in row) for row in P.A))
