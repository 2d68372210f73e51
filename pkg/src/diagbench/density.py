"""Interim-count formulas, their finite ratios, and the fraction-grid discount.

Seven closed-form counting formulas are compared pairwise by the exact ratio
rho(n) = A(n)/B(n) over a sample schedule; the sequence of ratios is then
classified as converging, tending to zero, or inconclusive under fixed
thresholds.  A totient sieve supplies the exact count of lowest-terms
fractions used by the grid and the correction factor f.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import BadSchedule, CapExceeded, DivisionByZero, DomainError

SIEVE_CAP = 10**7
GRID_CAP = 100
CONVERGE_TOL = Fraction(1, 100)
ZERO_FLOOR = Fraction(1, 10**6)

# Sample points used throughout: a slow geometric ramp for polynomial-rate
# pairs and a short doubling ramp for pairs with an exponential factor, whose
# values overflow any reasonable budget past n = 40.
POLYNOMIAL_SCHEDULE = (10, 100, 1000, 10000)
EXPONENTIAL_SCHEDULE = (5, 10, 20, 40)
DEFAULT_FIGURE2_SCHEDULE = (100, 316, 1000, 3162, 10000, 31623, 100000)


def totient_sieve(n: int):
    """phi(0..n) table; index 0 is a placeholder."""
    if n < 1 or n > SIEVE_CAP:
        raise CapExceeded(f"sieve bound {n} outside 1..{SIEVE_CAP}")
    phi = list(range(n + 1))
    for p in range(2, n + 1):
        if phi[p] == p:  # untouched so far, hence prime
            for k in range(p, n + 1, p):
                phi[k] -= phi[k] // p
    return phi


def distinct_fraction_count(n: int) -> int:
    """Count of lowest-terms fractions a/b with 1 <= a < b <= n."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    return sum(totient_sieve(n)[2:])


def correction_factor(n: int) -> Fraction:
    """Distinct fractions as a share of all (n^2 - n)/2 pairs a < b."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    return Fraction(distinct_fraction_count(n), (n * n - n) // 2)


class PhiFormula(Enum):
    NAT = "nat"
    EVEN = "even"
    INT = "int"
    RAT_PAPER = "rat-paper"
    RAT_EXACT = "rat-exact"
    REAL = "real"
    COMPLEX = "complex"


def phi_eval(formula: PhiFormula, n: int) -> Fraction:
    """Count of set members reached by step n, per the formula's closed form."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if formula is PhiFormula.NAT:
        return Fraction(n)
    if formula is PhiFormula.EVEN:
        return Fraction(n, 2)
    if formula is PhiFormula.INT:
        return Fraction(2 * n + 1)
    if formula is PhiFormula.RAT_PAPER:
        # (n^2 - n)/2 candidate fractions, discounted by the constant 63/100,
        # mirrored to negatives (2n per unit line) plus one for zero
        return 2 * n * (Fraction((n * n - n) // 2) * Fraction(63, 100)) + 1
    if formula is PhiFormula.RAT_EXACT:
        count = distinct_fraction_count(n) if n >= 2 else 0
        return Fraction(2 * n * count + 1)
    if formula is PhiFormula.REAL:
        return Fraction(n * 2 ** (n + 1))
    if formula is PhiFormula.COMPLEX:
        return Fraction(n * n * 2 ** (2 * n + 2))
    raise DomainError(f"unknown formula {formula!r}")


def rho_finite(a: PhiFormula, b: PhiFormula, n: int) -> Fraction:
    denom = phi_eval(b, n)
    if denom == 0:
        raise DivisionByZero(f"{b.value} evaluates to 0 at n={n}")
    return phi_eval(a, n) / denom


@dataclass(frozen=True)
class Classification:
    kind: str  # "converges" | "tends-to-zero" | "inconclusive"
    limit: Fraction | None
    tolerance: Fraction | None


@dataclass(frozen=True)
class DensityEstimate:
    pair: tuple
    samples: tuple  # of (n, Fraction)
    classification: Classification


def default_schedule(a: PhiFormula, b: PhiFormula):
    fast = (PhiFormula.REAL, PhiFormula.COMPLEX)
    return EXPONENTIAL_SCHEDULE if a in fast or b in fast else POLYNOMIAL_SCHEDULE


def _classify(values) -> Classification:
    # The zero test must run first: a sequence sliding toward 0 also sits
    # within tolerance of the constant 0 and would otherwise read as
    # "converges" prematurely.
    decreasing = all(x > y for x, y in zip(values, values[1:]))
    if decreasing and values[-1] < ZERO_FLOOR:
        return Classification("tends-to-zero", Fraction(0), ZERO_FLOOR)
    c = Fraction(round(values[-1] / CONVERGE_TOL)) * CONVERGE_TOL
    tail = values[-3:]
    near = all(abs(v - c) <= CONVERGE_TOL for v in tail)
    settled = all(abs(x - y) <= CONVERGE_TOL for x in tail for y in tail)
    if near and settled:
        return Classification("converges", c, CONVERGE_TOL)
    return Classification("inconclusive", None, None)


def rho_limit(a: PhiFormula, b: PhiFormula, schedule) -> DensityEstimate:
    schedule = tuple(schedule)
    if len(schedule) < 4:
        raise BadSchedule("need at least 4 sample points")
    if any(not isinstance(n, int) or n < 1 for n in schedule):
        raise BadSchedule("sample points must be naturals >= 1")
    if any(x >= y for x, y in zip(schedule, schedule[1:])):
        raise BadSchedule("sample points must be strictly increasing")
    samples = tuple((n, rho_finite(a, b, n)) for n in schedule)
    values = [v for _, v in samples]
    return DensityEstimate(
        pair=(a.value, b.value),
        samples=samples,
        classification=_classify(values),
    )


@dataclass(frozen=True)
class FractionGrid:
    n: int
    cells: tuple  # of (a, b, in_unit, lowest_terms)
    bold_count: int


def grid_6_4(n: int) -> FractionGrid:
    """The n-by-n fraction grid a/b with unit-interval and lowest-terms flags.

    A cell is counted (bold) when a < b and gcd(a, b) = 1; the count equals
    distinct_fraction_count(n).
    """
    if n < 2 or n > GRID_CAP:
        raise CapExceeded(f"grid size {n} outside 2..{GRID_CAP}")
    cells = []
    bold = 0
    for b in range(1, n + 1):
        for a in range(1, n + 1):
            lowest = math.gcd(a, b) == 1
            cells.append((a, b, a <= b, lowest))
            if a < b and lowest:
                bold += 1
    return FractionGrid(n=n, cells=tuple(cells), bold_count=bold)


def figure2_data(schedule):
    """Exact correction factor f(n) at each scheduled n, via one shared sieve."""
    schedule = tuple(schedule)
    if not schedule:
        raise DomainError("schedule must be nonempty")
    if any(not isinstance(n, int) or n < 2 for n in schedule):
        raise DomainError("sample points must be naturals >= 2")
    top = max(schedule)
    if top > SIEVE_CAP:
        raise CapExceeded(f"sample point {top} above sieve cap {SIEVE_CAP}")
    totals = list(itertools.accumulate(totient_sieve(top)))  # totals[n] = phi(1)+...+phi(n)
    return [(n, Fraction(totals[n] - 1, (n * n - n) // 2)) for n in schedule]


def decimal_str(value: Fraction, places: int = 6) -> str:
    """Fixed-point rendering with round-half-even; presentation only."""
    if places < 0:
        raise DomainError("places must be nonnegative")
    scaled = round(Fraction(value) * 10**places)  # round() on Fraction is half-even
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"
