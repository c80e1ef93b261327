"""Eigenspace decomposition of H^1 and the Lyapunov spectrum.

Everything here is exact: t-values, hypergeometric parameters, triangle
angles and exponents are :class:`fractions.Fraction` with denominators
dividing 2N.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, EligibilityError
from .flat import genus
from .modspan import DEFAULT_CAP, ResidueVector
from .presentation import Presentation, row_span


@dataclass(frozen=True)
class EigenRecord:
    r: ResidueVector
    t_of_r: Fraction
    t_of_minus_r: Fraction
    t_components_minus_r: tuple[Fraction, ...]
    dim_h10: int
    dim_h1: int
    eligible: bool
    hgde: tuple[Fraction, Fraction, Fraction] | None = None
    angles: tuple[Fraction, Fraction, Fraction] | None = None
    area_over_pi: Fraction | None = None
    exponent: Fraction | None = None


@dataclass(frozen=True)
class Spectrum:
    """Nonnegative Lyapunov exponents of H^1 with multiplicity, largest first."""

    entries: tuple[Fraction, ...]
    genus: int

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def t_values(r: ResidueVector) -> tuple[tuple[Fraction, ...], Fraction]:
    parts = tuple(Fraction(x, r.modulus) for x in r.entries)
    return parts, sum(parts, Fraction(0))


def _t(r: ResidueVector) -> Fraction:
    return t_values(r)[1]


def eigen_dims(r: ResidueVector) -> tuple[int, int]:
    """(dim H^{1,0}(r), dim H^1(r)) for a nonzero r in the row span."""
    if r.is_zero():
        raise DomainError("eigenspace dimensions are only defined for nonzero r")
    t_r, t_minus = _t(r), _t(-r)
    return int(t_minus) - 1, int(t_r + t_minus) - 2


def is_eligible(r: ResidueVector) -> bool:
    return not r.is_zero() and _t(r) == 2 and _t(-r) == 2


def _eligible_t(r: ResidueVector) -> tuple[Fraction, ...]:
    if not is_eligible(r):
        raise EligibilityError(f"r = {r} mod {r.modulus} does not have t(r) = t(-r) = 2")
    return t_values(-r)[0]


def hgde_params(r: ResidueVector) -> tuple[Fraction, Fraction, Fraction]:
    t1, t2, t3, _ = _eligible_t(r)
    return t1 + t2 + t3 - 1, t3, t1 + t3


def triangle_angles(r: ResidueVector) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Angles (in units of pi) at the images of 0, 1, infinity, and the area over pi."""
    t1, t2, t3, _ = _eligible_t(r)
    kappa = abs(1 - t1 - t3)
    mu = abs(1 - t2 - t3)
    nu = abs(1 - t1 - t2)
    area = 1 - kappa - mu - nu
    assert area > 0, f"degenerate triangle for r = {r}"
    return kappa, mu, nu, area


def exponent(r: ResidueVector) -> Fraction:
    ts = _eligible_t(r)
    ell = 2 * min(min(t, 1 - t) for t in ts)
    area = triangle_angles(r)[3]
    assert ell == area, f"exponent {ell} differs from triangle area {area} for r = {r}"
    return ell


def eigen_record(r: ResidueVector) -> EigenRecord:
    t_r = _t(r)
    parts_minus, t_minus = t_values(-r)
    h10, h1 = eigen_dims(r)
    if not is_eligible(r):
        return EigenRecord(r, t_r, t_minus, parts_minus, h10, h1, False)
    kappa, mu, nu, area = triangle_angles(r)
    return EigenRecord(
        r, t_r, t_minus, parts_minus, h10, h1, True,
        hgde=hgde_params(r),
        angles=(kappa, mu, nu),
        area_over_pi=area,
        exponent=exponent(r),
    )


def eigen_table(P: Presentation, cap: int = DEFAULT_CAP) -> list[EigenRecord]:
    """One record per nonzero element of the row span, in lexicographic order."""
    return [eigen_record(r) for r in row_span(P, cap).nonzero()]


def spectrum(P: Presentation, cap: int = DEFAULT_CAP) -> Spectrum:
    """Nonnegative Lyapunov spectrum of H^1.

    The row span is split into pairs {r, -r}. Each pair spans a block
    H^1(r) + H^1(-r) on which the spectrum is symmetric, so it contributes
    half its dimension to the nonnegative part: the exponent of r when r is
    eligible, zero otherwise.
    """
    records = {rec.r: rec for rec in eigen_table(P, cap)}
    entries: list[Fraction] = []
    for r, rec in records.items():
        neg = -r
        if neg < r:
            continue  # counted from the smaller representative
        dim = rec.dim_h1 if neg == r else rec.dim_h1 + records[neg].dim_h1
        assert dim % 2 == 0, f"odd block dimension {dim} at r = {r}"
        value = rec.exponent if rec.eligible else Fraction(0)
        entries.extend([value] * (dim // 2))
    g = genus(P, cap)
    assert len(entries) == g, f"spectrum has {len(entries)} entries but genus is {g} for {P}"
    return Spectrum(tuple(sorted(entries, reverse=True)), g)
