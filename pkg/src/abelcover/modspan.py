"""Residue vectors mod N and closure of finitely generated subgroups of Z_N^k."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import InvalidModulusError, SizeCapError

DEFAULT_CAP = 10**6


@dataclass(frozen=True, order=True)
class ResidueVector:
    """A vector of residues in [0, modulus).

    Ordering is lexicographic on ``(modulus, entries)``, which for vectors
    sharing a modulus is lexicographic on entries.
    """

    modulus: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise InvalidModulusError(f"modulus must be positive, got {self.modulus}")
        if not self.entries:
            raise ValueError("a residue vector needs at least one entry")
        if any(not 0 <= e < self.modulus for e in self.entries):
            raise ValueError(f"entries {self.entries} are not reduced mod {self.modulus}")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def _check(self, other):
        if self.modulus != other.modulus or len(self) != len(other):
            raise ValueError("residue vectors differ in modulus or dimension")

    def __add__(self, other: ResidueVector) -> ResidueVector:
        self._check(other)
        n = self.modulus
        return ResidueVector(n, tuple((x + y) % n for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: ResidueVector) -> ResidueVector:
        return self + (-other)

    def __neg__(self) -> ResidueVector:
        n = self.modulus
        return ResidueVector(n, tuple((-x) % n for x in self.entries))

    def __mul__(self, k: int) -> ResidueVector:
        n = self.modulus
        return ResidueVector(n, tuple((k * x) % n for x in self.entries))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.entries)

    def nonzero_count(self) -> int:
        return sum(1 for e in self.entries if e)

    def label(self) -> str:
        """Comma-joined residues, e.g. ``"1,0,3"``."""
        return ",".join(str(e) for e in self.entries)

    def __str__(self):
        return "(" + ",".join(str(e) for e in self.entries) + ")"


def zero_vector(modulus: int, dimension: int) -> ResidueVector:
    return ResidueVector(modulus, (0,) * dimension)


def reduce_vector(raw: Sequence[int], N: int) -> ResidueVector:
    """Reduce each integer of ``raw`` to its representative in [0, N)."""
    if N < 1:
        raise InvalidModulusError(f"modulus must be positive, got {N}")
    if len(raw) == 0:
        raise ValueError("cannot reduce an empty vector")
    return ResidueVector(N, tuple(int(x) % N for x in raw))


@dataclass(frozen=True)
class Subgroup:
    """A finite subgroup of Z_N^k, stored as its lexicographically sorted elements."""

    modulus: int
    dimension: int
    elements: tuple[ResidueVector, ...]

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.elements))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, v):
        return v in self._members

    def index(self, v: ResidueVector) -> int:
        return self.elements.index(v)

    def issubset(self, other: Subgroup) -> bool:
        return self._members <= other._members

    def nonzero(self) -> list[ResidueVector]:
        return [v for v in self.elements if not v.is_zero()]


def span_closure(
    generators: Iterable[ResidueVector],
    cap: int = DEFAULT_CAP,
    *,
    modulus: int | None = None,
    dimension: int | None = None,
) -> Subgroup:
    """Smallest subgroup containing ``generators``.

    Breadth-first: every newly found element is extended by each generator
    until nothing new appears. In a finite group the additive closure of a
    set containing zero is already closed under negation.

    ``modulus`` and ``dimension`` are only needed when ``generators`` is empty.
    Raises :class:`SizeCapError` once more than ``cap`` elements are found.
    """
    gens = list(generators)
    if gens:
        modulus = gens[0].modulus if modulus is None else modulus
        dimension = len(gens[0]) if dimension is None else dimension
        for g in gens:
            if g.modulus != modulus or len(g) != dimension:
                raise ValueError("generators must share modulus and dimension")
    elif modulus is None or dimension is None:
        raise ValueError("modulus and dimension are required for an empty generating set")

    n = modulus
    steps = {tuple(g.entries) for g in gens if not g.is_zero()}
    zero = (0,) * dimension
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for s in steps:
                y = tuple((a + b) % n for a, b in zip(x, s))
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise SizeCapError(cap, len(seen))
                    nxt.append(y)
        frontier = nxt
    return Subgroup(n, dimension, tuple(ResidueVector(n, e) for e in sorted(seen)))


def element_order(g: ResidueVector) -> int:
    """Least n >= 1 with n*g = 0, i.e. N / gcd(N, entries of g)."""
    return g.modulus // gcd(g.modulus, *g.entries)


def scale_embed(g: ResidueVector, k: int) -> ResidueVector:
    """Image of g under the injection Z_N -> Z_{kN}, x -> kx, applied entrywise."""
    if k < 1:
        raise ValueError(f"scale factor must be positive, got {k}")
    n = g.modulus * k
    return ResidueVector(n, tuple((k * e) % n for e in g.entries))


def embed_subgroup(S: Subgroup, k: int) -> Subgroup:
    """Entrywise ``scale_embed`` of every element; the result is again sorted."""
    elements = sorted(scale_embed(v, k) for v in S.elements)
    return Subgroup(S.modulus * k, S.dimension, tuple(elements))
