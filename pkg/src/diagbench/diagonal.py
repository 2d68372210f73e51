"""Finite string universes, rule-described arrays, and diagonal scans.

An array is either an explicit list of equal-length digit strings or one of
six named rule families.  Family strings are indexed from 1; string n agrees
with the family's closed-form antidiagonal on positions 1..n-1 and differs
from it at position n, which is what the membership scan measures.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .eps import EventuallyPeriodicString
from .errors import (
    BadRadix,
    CapExceeded,
    DepthCapExceeded,
    DomainError,
    NotAFamily,
    NotAFamilyOrOutOfRange,
    PolicyRadixMismatch,
    RowTooShort,
)
from .rng import cell_bit, cell_digit

UNIVERSE_CAP = {2: 24, 10: 7}
SCAN_CAP = 10**6


class FlipPolicy(Enum):
    BINARY = "binary"
    DECIMAL = "decimal"


def flip_digit(digit: int, policy: FlipPolicy) -> int:
    """BINARY swaps 0 and 1; DECIMAL maps every digit to 5, and 5 to 4.

    The decimal rule never produces 0 or 9, so flipped expansions cannot
    collide with a dual representation ending in recurring 9s.
    """
    if policy is FlipPolicy.BINARY:
        if digit not in (0, 1):
            raise PolicyRadixMismatch(f"binary flip applied to digit {digit}")
        return 1 - digit
    if not 0 <= digit <= 9:
        raise PolicyRadixMismatch(f"decimal flip applied to digit {digit}")
    return 4 if digit == 5 else 5


class Family(Enum):
    LOWER_TRI_22 = "lower-tri-22"
    UPPER_TRI_23 = "upper-tri-23"
    ALT_24 = "alt-24"
    ALT_25 = "alt-25"
    RANDOM_BELOW_26 = "random-below-26"
    DECIMAL_29 = "decimal-29"


@dataclass(frozen=True)
class ArraySpec:
    """Either an explicit finite array or a named rule family.

    Use the `explicit` and `family` constructors; the raw initializer does not
    validate.
    """

    rows: tuple | None = None
    kind: Family | None = None
    seed: int = 0
    antidiag_digits: EventuallyPeriodicString | None = None
    randomize_subdiagonal: bool = False

    @classmethod
    def explicit(cls, rows) -> "ArraySpec":
        rows = tuple(rows)
        if not rows:
            raise DomainError("explicit array needs at least one row")
        width = len(rows[0])
        if width == 0:
            raise DomainError("explicit rows must be nonempty")
        for r in rows:
            if len(r) != width:
                raise DomainError("explicit rows must all have equal length")
            if not r.isdigit():
                raise DomainError(f"row {r!r} contains a non-digit")
        return cls(rows=rows)

    @classmethod
    def family(
        cls,
        kind: Family,
        seed: int = 0,
        antidiag_digits: EventuallyPeriodicString | None = None,
        randomize_subdiagonal: bool = False,
    ) -> "ArraySpec":
        if kind is Family.DECIMAL_29:
            if antidiag_digits is None:
                raise DomainError("decimal family needs its antidiagonal digit stream")
            if antidiag_digits.radix != 10:
                raise BadRadix("antidiagonal digit stream must be decimal")
            digits = antidiag_digits.preperiod + antidiag_digits.period
            if any(d == 0 for d in digits):
                raise DomainError("antidiagonal digit stream must use digits 1..9")
        else:
            if antidiag_digits is not None:
                raise DomainError("only the decimal family takes a digit stream")
            if randomize_subdiagonal:
                raise DomainError("only the decimal family can randomize its tail")
        return cls(
            kind=kind,
            seed=seed,
            antidiag_digits=antidiag_digits,
            randomize_subdiagonal=randomize_subdiagonal,
        )

    @property
    def is_family(self) -> bool:
        return self.kind is not None

    @property
    def radix(self) -> int:
        if self.is_family:
            return 10 if self.kind is Family.DECIMAL_29 else 2
        return 2 if all(c in "01" for r in self.rows for c in r) else 10

    @property
    def has_random_tail(self) -> bool:
        return self.kind is Family.RANDOM_BELOW_26 or (
            self.kind is Family.DECIMAL_29 and self.randomize_subdiagonal
        )


@dataclass
class DiagonalReport:
    antidiagonal: object  # EventuallyPeriodicString for families, str for explicit
    cover: Fraction
    scan_depth: int
    found_at: int | None
    first_difference: dict = field(default_factory=dict)


def enumerate_universe(n: int, radix: int) -> list:
    """All radix**n digit strings of length n, lexicographically ordered."""
    if radix not in UNIVERSE_CAP:
        raise BadRadix(f"radix must be 2 or 10, got {radix}")
    if n < 1 or n > UNIVERSE_CAP[radix]:
        raise CapExceeded(f"length {n} outside 1..{UNIVERSE_CAP[radix]} for radix {radix}")
    digits = "0123456789"[:radix]
    return ["".join(t) for t in itertools.product(digits, repeat=n)]


def antidiagonal_finite(rows, flip: FlipPolicy) -> str:
    """Flip the diagonal of the first len(rows) columns of an explicit array."""
    n = len(rows)
    if n < 1:
        raise DomainError("need at least one row")
    out = []
    for i, r in enumerate(rows):
        if len(r) < n:
            raise RowTooShort(f"row {i + 1} has length {len(r)} < {n}")
        out.append(str(flip_digit(int(r[i]), flip)))
    return "".join(out)


def diagonal_cover(n: int) -> Fraction:
    """Rows covered by a length-n antidiagonal over the 2**n universe: n / 2**n."""
    if n < 1:
        raise DomainError("n must be at least 1")
    return Fraction(n, 2**n)


def _antidiag_digit(spec: ArraySpec, j: int) -> int:
    kind = spec.kind
    if kind in (Family.LOWER_TRI_22, Family.RANDOM_BELOW_26):
        return 1
    if kind is Family.UPPER_TRI_23:
        return 0
    if kind is Family.ALT_24:
        return 1 if j % 2 == 1 else 0
    if kind is Family.ALT_25:
        return 0 if j % 2 == 1 else 1
    return spec.antidiag_digits.digit_at(j)


def antidiagonal_rule(spec: ArraySpec) -> EventuallyPeriodicString:
    """Closed-form antidiagonal of a rule family."""
    if not spec.is_family:
        raise NotAFamily("explicit arrays have no closed-form antidiagonal")
    kind = spec.kind
    if kind in (Family.LOWER_TRI_22, Family.RANDOM_BELOW_26):
        return EventuallyPeriodicString.constant(2, 1)
    if kind is Family.UPPER_TRI_23:
        return EventuallyPeriodicString.constant(2, 0)
    if kind is Family.ALT_24:
        return EventuallyPeriodicString(2, (), (1, 0))
    if kind is Family.ALT_25:
        return EventuallyPeriodicString(2, (), (0, 1))
    return spec.antidiag_digits


def row_digit(spec: ArraySpec, n: int, j: int) -> int:
    """Digit j (1-based) of string n; constant time for every family."""
    if n < 1 or j < 1:
        raise NotAFamilyOrOutOfRange("row and position indices are 1-based")
    if not spec.is_family:
        if n > len(spec.rows) or j > len(spec.rows[0]):
            raise NotAFamilyOrOutOfRange(f"cell ({n}, {j}) outside the explicit array")
        return int(spec.rows[n - 1][j - 1])
    kind = spec.kind
    if kind is Family.LOWER_TRI_22:
        return 1 if j < n else 0
    if kind is Family.UPPER_TRI_23:
        return 0 if j < n else 1
    if kind is Family.ALT_24:
        if j < n:
            return 1 if j % 2 == 1 else 0
        if j == n:
            return 1 if n % 2 == 0 else 0
        return 0
    if kind is Family.ALT_25:
        if j < n:
            return 0 if j % 2 == 1 else 1
        if j == n:
            return 0 if n % 2 == 0 else 1
        return 1
    if kind is Family.RANDOM_BELOW_26:
        if j < n:
            return 1
        if j == n:
            return 0
        return cell_bit(spec.seed, n, j)
    # DECIMAL_29: string n is the first n-1 stream digits, then zeros.
    if j < n:
        return spec.antidiag_digits.digit_at(j)
    if j == n:
        return 0
    if spec.randomize_subdiagonal:
        return cell_digit(spec.seed, n, j)
    return 0


def row(spec: ArraySpec, n: int, prefix_len: int) -> str:
    """First prefix_len digits of string n."""
    if n < 1 or prefix_len < 1:
        raise NotAFamilyOrOutOfRange("row index and prefix length must be at least 1")
    if not spec.is_family:
        if n > len(spec.rows):
            raise NotAFamilyOrOutOfRange(f"row {n} outside the explicit array")
        if prefix_len > len(spec.rows[0]):
            raise NotAFamilyOrOutOfRange("prefix longer than the explicit rows")
        return spec.rows[n - 1][:prefix_len]
    return "".join(str(row_digit(spec, n, j)) for j in range(1, prefix_len + 1))


def column(spec: ArraySpec, position: int, count: int) -> str:
    """Digit at `position` across strings 1..count (the transposed view)."""
    if position < 1 or count < 1:
        raise NotAFamilyOrOutOfRange("position and count must be at least 1")
    if not spec.is_family and count > len(spec.rows):
        raise NotAFamilyOrOutOfRange(f"only {len(spec.rows)} rows available")
    return "".join(str(row_digit(spec, n, position)) for n in range(1, count + 1))


def _row_eps(spec: ArraySpec, n: int) -> EventuallyPeriodicString:
    """String n of a deterministic family as an exact sequence."""
    kind = spec.kind
    if kind is Family.LOWER_TRI_22:
        return EventuallyPeriodicString(2, (1,) * (n - 1), (0,))
    if kind is Family.UPPER_TRI_23:
        return EventuallyPeriodicString(2, (0,) * (n - 1), (1,))
    if kind is Family.ALT_24:
        pre = tuple(row_digit(spec, n, j) for j in range(1, n + 1))
        return EventuallyPeriodicString(2, pre, (0,))
    if kind is Family.ALT_25:
        pre = tuple(row_digit(spec, n, j) for j in range(1, n + 1))
        return EventuallyPeriodicString(2, pre, (1,))
    # DECIMAL_29 without a randomized tail
    pre = tuple(spec.antidiag_digits.digit_at(j) for j in range(1, n))
    return EventuallyPeriodicString(10, pre, (0,))


def membership_scan(spec, candidate, depth: int, prefix_len: int | None = None) -> DiagonalReport:
    """Scan strings 1..depth for the candidate.

    found_at is the first string that agrees with the candidate on the whole
    comparison window (and, for deterministic families, as an exact infinite
    sequence); otherwise first_difference records the first disagreeing
    position of every scanned string.
    """
    if depth < 1:
        raise DomainError("depth must be at least 1")
    if depth > SCAN_CAP:
        raise DepthCapExceeded(f"depth {depth} above cap {SCAN_CAP}")
    if spec.is_family:
        return _scan_family(spec, candidate, depth, prefix_len)
    return _scan_explicit(spec, candidate, depth)


def _scan_family(spec, candidate, depth, prefix_len):
    if prefix_len is None:
        prefix_len = depth
    if prefix_len < depth:
        raise DomainError("prefix length must be at least the scan depth")
    if not isinstance(candidate, EventuallyPeriodicString):
        raise DomainError("family scans need an eventually periodic candidate")
    if candidate.radix != spec.radix:
        raise DomainError("candidate radix does not match the array")
    anti = antidiagonal_rule(spec)
    # Position of the candidate's first disagreement with the antidiagonal.
    # String n agrees with the antidiagonal on 1..n-1 and differs at n, so
    # every first difference follows from that single position, except for
    # the one string whose index equals it.
    m = candidate.first_difference(anti)
    diffs = {}
    found = None
    for n in range(1, depth + 1):
        if m is not None and m < n:
            diffs[n] = m
        elif m is None or m > n:
            diffs[n] = n
        else:  # n == m: the only string that can match the candidate
            d = _compare_single_row(spec, candidate, n, prefix_len)
            if d is None:
                found = n
                break
            diffs[n] = d
    return DiagonalReport(
        antidiagonal=anti,
        cover=Fraction(min(depth, prefix_len), depth),
        scan_depth=depth,
        found_at=found,
        first_difference=diffs,
    )


def _compare_single_row(spec, candidate, n, prefix_len):
    if not spec.has_random_tail:
        return candidate.first_difference(_row_eps(spec, n))
    # Random tails have no finite description; compare the window only.
    for j in range(n, prefix_len + 1):
        if candidate.digit_at(j) != row_digit(spec, n, j):
            return j
    return None


def _scan_explicit(spec, candidate, depth):
    width = len(spec.rows[0])
    if isinstance(candidate, EventuallyPeriodicString):
        if candidate.radix != spec.radix:
            raise DomainError("candidate radix does not match the array")
        target = candidate.prefix(width)
    else:
        target = str(candidate)
        if len(target) != width:
            raise DomainError(f"candidate length {len(target)} != row length {width}")
        if not target.isdigit():
            raise DomainError("candidate must be a digit string")
    count = min(depth, len(spec.rows))
    diffs = {}
    found = None
    for n in range(1, count + 1):
        r = spec.rows[n - 1]
        for j in range(width):
            if r[j] != target[j]:
                diffs[n] = j + 1
                break
        else:
            found = n
            break
    square = min(len(spec.rows), width)
    policy = FlipPolicy.BINARY if spec.radix == 2 else FlipPolicy.DECIMAL
    return DiagonalReport(
        antidiagonal=antidiagonal_finite(spec.rows[:square], policy),
        cover=Fraction(square, len(spec.rows)),
        scan_depth=count,
        found_at=found,
        first_difference=diffs,
    )
