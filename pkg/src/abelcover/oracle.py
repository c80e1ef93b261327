"""Floating-point checks of the analytic layer.

Evaluates the Gauss series 2F1 near zero, the local basis (f0, g0) of the
hypergeometric equation, and checks three claims numerically: the basis
solves the equation, its Wronskian is a constant multiple of
lambda^-c (1 - lambda)^(c-a-b-1), and the ratio f0/g0 opens a corner of
angle pi*|1 - c| at zero. The angles at 1 and infinity are measured by
permuting the branch points, which permutes the t-values.

Derivatives are taken by finite differences rather than by differentiating
the series, so a check never reuses the recurrence it is checking.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from statistics import linear_regression
from typing import Callable, Sequence

from .errors import LogarithmicCase, NonConvergenceError, ParameterError, SampleFailure
from .hodge import EigenRecord

SERIES_TOL = 1e-14
MAX_TERMS = 100_000
REL_STEP = 5e-3
LOG_CASE_EPS = 1e-9

TOL_RESIDUAL = 1e-6
TOL_WRONSKIAN = 1e-6
TOL_ANGLE = 0.02
TOL_AREA = 0.06

HGDE_SAMPLES = tuple(
    (0.02 + 0.38 * k / 19) * cmath.exp(1j * math.pi / 3) for k in range(20)
)
WRONSKIAN_SAMPLES = (0.1 + 0j, 0.2 + 0j, 0.3 + 0j)
ANGLE_SAMPLES = tuple(10.0 ** -e for e in (3.0, 3.5, 4.0, 4.5, 5.0))


@dataclass(frozen=True)
class HgdeParams:
    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            if not math.isfinite(getattr(self, name)):
                raise ParameterError(f"{name} must be finite")
        if _nonpositive_integer(self.c):
            raise ParameterError(f"c = {self.c} is zero or a negative integer")

    @classmethod
    def from_t(cls, t1, t2, t3) -> HgdeParams:
        return cls(float(t1 + t2 + t3 - 1), float(t3), float(t1 + t3))

    @property
    def logarithmic(self) -> bool:
        return abs(self.c - 1) <= LOG_CASE_EPS

    @property
    def kappa(self) -> float:
        return abs(1 - self.c)


def _nonpositive_integer(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


def gauss_2f1(params: HgdeParams, lam: complex) -> complex:
    """Partial sum of sum_n (a)_n (b)_n / (c)_n * lam^n / n!.

    Stops once two consecutive terms fall below ``SERIES_TOL`` relative to
    the running sum.
    """
    a, b, c = params.a, params.b, params.c
    if _nonpositive_integer(c):
        raise ParameterError(f"c = {c} is zero or a negative integer")
    z = complex(lam)
    if abs(z) > 0.5:
        raise ParameterError(f"|lam| = {abs(z):g} is outside the series region |lam| <= 0.5")
    total = 1 + 0j
    term = 1 + 0j
    small = 0
    for n in range(MAX_TERMS):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total += term
        if abs(term) <= SERIES_TOL * abs(total):
            small += 1
            if small == 2 or term == 0:
                return total
        else:
            small = 0
    raise NonConvergenceError(f"2F1{(a, b, c)} did not converge at {lam} in {MAX_TERMS} terms")


def _shifted(params: HgdeParams) -> HgdeParams:
    a, b, c = params.a, params.b, params.c
    return HgdeParams(a + 1 - c, b + 1 - c, 2 - c)


def basis_functions(params: HgdeParams) -> tuple[Callable, Callable]:
    """(f0, g0) as callables; f0 uses the principal branch of lam^(1-c)."""
    if params.logarithmic:
        raise LogarithmicCase(f"c = {params.c} is 1; the second solution is logarithmic")
    shifted = _shifted(params)
    one_minus_c = 1 - params.c

    def f0(lam):
        return complex(lam) ** one_minus_c * gauss_2f1(shifted, lam)

    def g0(lam):
        return gauss_2f1(params, lam)

    return f0, g0


def local_basis_at_0(params: HgdeParams, lam: complex) -> tuple[complex, complex]:
    if lam == 0:
        raise ParameterError("the local basis at 0 is evaluated away from 0")
    f0, g0 = basis_functions(params)
    return f0(lam), g0(lam)


def derivatives(f: Callable, lam: complex, rel_step: float = REL_STEP) -> tuple[complex, complex, complex]:
    """(f, f', f'') at lam by the five-point central stencil, step rel_step*|lam|."""
    h = rel_step * abs(lam)
    fm2, fm1, f0, fp1, fp2 = (f(lam + k * h) for k in (-2, -1, 0, 1, 2))
    d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h)
    d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h)
    return f0, d1, d2


def hgde_residual(params: HgdeParams, value: complex, d1: complex, d2: complex, lam: complex) -> float:
    """Residual of the equation normalized by its largest term."""
    a, b, c = params.a, params.b, params.c
    terms = (lam * (lam - 1) * d2, ((a + b + 1) * lam - c) * d1, a * b * value)
    scale = max(abs(t) for t in terms)
    if scale == 0:
        return 0.0
    return abs(sum(terms)) / scale


def check_hgde_residual(
    params: HgdeParams,
    samples: Sequence[complex] = HGDE_SAMPLES,
    solutions: Sequence[Callable] | None = None,
    rel_step: float = REL_STEP,
) -> float:
    """Max normalized residual over ``samples`` for each solution.

    ``solutions`` defaults to the local basis (f0, g0).
    """
    if solutions is None:
        solutions = basis_functions(params)
    worst = 0.0
    for lam in samples:
        if not 1e-3 <= abs(lam) <= 0.4:
            raise ParameterError(f"sample {lam} outside 1e-3 <= |lam| <= 0.4")
        for f in solutions:
            worst = max(worst, hgde_residual(params, *derivatives(f, lam, rel_step), lam))
    return worst


def normalized_wronskians(
    params: HgdeParams,
    samples: Sequence[complex],
    exponent_c: float | None = None,
    scale_f0: complex = 1,
    rel_step: float = REL_STEP,
) -> list[complex]:
    """W(f0, g0) * lam^c * (1 - lam)^(a+b+1-c) at each sample.

    (1 - lam) replaces (lam - 1) to keep clear of the branch cut on (0, 1);
    the two differ by a constant factor. ``exponent_c`` overrides c in the
    normalizing factor only, for negative controls.
    """
    a, b, c = params.a, params.b, params.c
    ce = c if exponent_c is None else exponent_c
    f0, g0 = basis_functions(params)
    out = []
    for lam in samples:
        fv, f1, _ = derivatives(f0, lam, rel_step)
        gv, g1, _ = derivatives(g0, lam, rel_step)
        w = scale_f0 * (fv * g1 - f1 * gv)
        out.append(w * complex(lam) ** ce * (1 - complex(lam)) ** (a + b + 1 - ce))
    return out


def check_wronskian(
    params: HgdeParams,
    samples: Sequence[complex] = WRONSKIAN_SAMPLES,
    exponent_c: float | None = None,
    scale_f0: complex = 1,
    rel_step: float = REL_STEP,
) -> float:
    """Max pairwise relative deviation of the normalized Wronskian."""
    vals = normalized_wronskians(params, samples, exponent_c, scale_f0, rel_step)
    worst = 0.0
    for i, u in enumerate(vals):
        for v in vals[i + 1:]:
            worst = max(worst, abs(u - v) / max(abs(u), abs(v)))
    return worst


def check_angle_at_zero(params: HgdeParams, samples: Sequence[float] = ANGLE_SAMPLES) -> float:
    """Fitted exponent of |D0| ~ |lam|^kappa near zero, where D0 = f0/g0.

    D0 is inverted when Re(1 - c) < 0 so that the fitted quantity tends to 0.
    """
    f0, g0 = basis_functions(params)
    invert = (1 - params.c) < 0
    xs, ys = [], []
    for lam in samples:
        g = g0(lam)
        f = f0(lam)
        if g == 0 or f == 0:
            raise SampleFailure(f"basis function vanishes at sample {lam}")
        d = g / f if invert else f / g
        xs.append(math.log(abs(lam)))
        ys.append(math.log(abs(d)))
    slope, _ = linear_regression(xs, ys)
    return abs(slope)


# -- per-eigenspace report ---------------------------------------------------

@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    tolerance: float
    observed: float | None = None
    expected: float | None = None
    reason: str = ""
    samples: tuple = ()

    @property
    def deviation(self) -> float | None:
        if self.observed is None:
            return None
        if self.expected is None:
            return self.observed
        return abs(self.observed - self.expected)


@dataclass
class VerificationReport:
    r: tuple[int, ...]
    modulus: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def status(self) -> str:
        ran = [c for c in self.checks if c.status != "skipped"]
        if any(c.status == "fail" for c in ran):
            return "fail"
        if not ran:
            return "inconclusive (logarithmic)"
        return "pass"

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _permuted_t(ts, which: str):
    """t-values whose parameter triple places the given angle at zero."""
    t1, t2, t3, _ = ts
    if which == "kappa":
        return t1, t2, t3
    if which == "mu":
        return t2, t1, t3  # swap t1 <-> t2
    return t1, t3, t2  # nu: swap t2 <-> t3


def _bounded(name, value, tol, samples):
    status = "pass" if value < tol else "fail"
    return CheckResult(name, status, tol, observed=value, samples=tuple(samples))


def verify_eigenspace(
    record: EigenRecord,
    tol_angle: float = TOL_ANGLE,
    tol_residual: float = TOL_RESIDUAL,
    tol_wronskian: float | None = None,
    tol_area: float = TOL_AREA,
) -> VerificationReport:
    """Numerically verify the exact triangle angles of an eligible eigenspace."""
    if not record.eligible:
        raise ParameterError(f"r = {record.r} is not eligible")
    tol_wronskian = tol_residual if tol_wronskian is None else tol_wronskian
    report = VerificationReport(tuple(record.r.entries), record.r.modulus)
    exact = dict(zip(("kappa", "mu", "nu"), record.angles))
    measured: dict[str, float] = {}

    for which in ("kappa", "mu", "nu"):
        params = HgdeParams.from_t(*_permuted_t(record.t_components_minus_r, which))
        if params.logarithmic:
            reason = f"logarithmic case (c = {params.c:g})"
            for kind, tol in (("hgde_residual", tol_residual), ("wronskian", tol_wronskian),
                              ("angle", tol_angle)):
                report.checks.append(CheckResult(f"{kind}[{which}]", "skipped", tol, reason=reason))
            continue
        report.checks.append(_bounded(
            f"hgde_residual[{which}]", check_hgde_residual(params), tol_residual, HGDE_SAMPLES))
        report.checks.append(_bounded(
            f"wronskian[{which}]", check_wronskian(params), tol_wronskian, WRONSKIAN_SAMPLES))
        try:
            kappa_hat = check_angle_at_zero(params)
        except SampleFailure as exc:
            report.checks.append(CheckResult(f"angle[{which}]", "fail", tol_angle, reason=str(exc)))
            continue
        measured[which] = kappa_hat
        expected = float(exact[which])
        status = "pass" if abs(kappa_hat - expected) <= tol_angle else "fail"
        report.checks.append(CheckResult(
            f"angle[{which}]", status, tol_angle, observed=kappa_hat, expected=expected,
            samples=ANGLE_SAMPLES))

    if len(measured) == 3:
        area = 1 - sum(measured.values())
        expected = float(record.exponent)
        status = "pass" if abs(area - expected) <= tol_area else "fail"
        report.checks.append(CheckResult(
            "area", status, tol_area, observed=area, expected=expected))
    else:
        report.checks.append(CheckResult(
            "area", "skipped", tol_area, reason="not all three angles measurable"))
    return report

