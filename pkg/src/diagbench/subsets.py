"""Exact binomial identities and enumeration of finite subsets of the naturals.

Everything is arbitrary-precision: coefficients via math.comb, ratios via
fractions.Fraction.  Finite p-subsets are ordered colexicographically, which
gives a closed-form rank/unrank bijection with the naturals for each p, and a
stage-based dovetailing sweep enumerates all finite subsets without repeats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BoundTooSmall,
    CapExceeded,
    DomainError,
    NonIntegerLabel,
    OddN,
    OutOfRange,
)

DOVETAIL_CAP = 10**6
FIGURE1_CAP = 2**10


@dataclass(frozen=True)
class FiniteSubset:
    """A finite subset of the naturals, stored as a strictly increasing tuple."""

    elements: tuple = ()

    def __post_init__(self):
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        for e in elems:
            if not isinstance(e, int) or e < 0:
                raise DomainError(f"element {e!r} is not a natural number")
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise DomainError("elements must be strictly increasing")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, k):
        return k in self.elements

    def __repr__(self):
        inner = ",".join(str(e) for e in self.elements)
        return "{" + inner + "}"


@dataclass(frozen=True)
class CofiniteSubset:
    """An infinite subset of the naturals, stored as its finite complement."""

    missing: FiniteSubset

    def __contains__(self, k):
        return k not in self.missing

    def __repr__(self):
        return f"N\\{self.missing!r}"


def binomial(n: int, p: int) -> int:
    if n < 0 or p < 0 or p > n:
        raise OutOfRange(f"C({n}, {p}) needs 0 <= p <= n")
    return math.comb(n, p)


def ratio_q(n: int, d: int) -> Fraction:
    """Consecutive-coefficient ratio C(n, n/2+d+1) / C(n, n/2+d) at offset d."""
    if n < 2 or n % 2 != 0:
        raise DomainError(f"n must be even and positive, got {n}")
    if d < 0 or d > n // 2 - 1:
        raise DomainError(f"offset {d} outside 0..{n // 2 - 1}")
    return Fraction(n - 2 * d, n + 2 * (d + 1))


def verify_ratio_law(n: int, p: int) -> bool:
    """Check C(n,p+1)(p+1) = C(n,p)(n-p) with exact integers."""
    if n < 1 or p < 0 or p >= n:
        raise OutOfRange(f"need 0 <= p < n, got n={n} p={p}")
    return binomial(n, p + 1) * (p + 1) == binomial(n, p) * (n - p)


# Closed-form ratio rows, in table order.  Small offsets d = 0..7 use the
# generic (1 - 2d/n) / (1 + (2d+2)/n) shape; proportional offsets d = n/m are
# the simplified forms a / (b + c/n); offsets d = n/2 - k collapse to
# k / (n - k + 1).
_PROPORTIONAL_ROWS = (
    ("n/10", 10, 2, 3, 5),
    ("n/9", 9, 7, 11, 18),
    ("n/8", 8, 3, 5, 8),
    ("n/7", 7, 5, 9, 14),
    ("n/6", 6, 2, 4, 6),
    ("n/5", 5, 3, 7, 10),
    ("n/4", 4, 1, 3, 4),
    ("n/3", 3, 1, 5, 6),
)

TABLE1_LABELS = tuple(
    [str(k) for k in range(8)]
    + [row[0] for row in _PROPORTIONAL_ROWS]
    + [f"n/2-{k}" for k in range(8, 0, -1)]
)


def _table_row(label: str, n: int):
    if label in tuple(str(k) for k in range(8)):
        d = int(label)
        q = (1 - Fraction(2 * d, n)) / (1 + Fraction(2 * d + 2, n))
        return d, q
    for name, m, a, b, c in _PROPORTIONAL_ROWS:
        if label == name:
            if n % m != 0:
                raise NonIntegerLabel(f"label {label} is not an integer for n={n}")
            return n // m, Fraction(a, 1) / (b + Fraction(c, n))
    if label.startswith("n/2-") and label[4:].isdigit():
        k = int(label[4:])
        if 1 <= k <= 8:
            return n // 2 - k, Fraction(k, n - (k - 1))
    raise DomainError(f"unknown ratio-table label {label!r}")


def table1_values(n: int, labels=None):
    """Evaluate the 24 closed-form ratio rows at even n.

    Returns (label, d, q) triples; each q is cross-checked against ratio_q at
    the same integer offset.  Fractional labels like n/7 raise NonIntegerLabel
    unless n is divisible; pass an explicit label subset to evaluate only the
    rows that are integral for this n.
    """
    if n < 20 or n % 2 != 0:
        raise DomainError(f"table needs even n >= 20, got {n}")
    if labels is None:
        labels = TABLE1_LABELS
    out = []
    for label in labels:
        d, q = _table_row(label, n)
        if q != ratio_q(n, d):
            raise AssertionError(f"closed form for {label} disagrees at n={n}")
        out.append((label, d, q))
    return out


def figure1_data(n: int):
    """Coefficient and ratio series for one even n: (p, C(n,p)) and (d, q)."""
    if n % 2 != 0:
        raise OddN(f"n must be even, got {n}")
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    if n > FIGURE1_CAP:
        raise CapExceeded(f"n {n} above cap {FIGURE1_CAP}")
    coeffs = [(p, binomial(n, p)) for p in range(n + 1)]
    ratios = [(d, ratio_q(n, d)) for d in range(n // 2)]
    return coeffs, ratios


def central_term(n: int) -> int:
    if n < 0 or n % 2 != 0:
        raise OddN(f"central term needs even n >= 0, got {n}")
    return math.comb(n, n // 2)


def rank(s: FiniteSubset) -> int:
    """Colexicographic rank: sum of C(c_i, i) over the i th smallest element."""
    return sum(math.comb(c, i) for i, c in enumerate(s.elements, start=1))


def _largest_c(i: int, r: int) -> int:
    # largest c with C(c, i) <= r; C(i-1, i) = 0 so the search always succeeds
    lo, hi = i - 1, i
    while math.comb(hi, i) <= r:
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if math.comb(mid, i) <= r:
            lo = mid
        else:
            hi = mid
    return lo


def unrank(p: int, r: int) -> FiniteSubset:
    """Inverse of rank for cardinality p: greedy on the combinatorial number system."""
    if p < 0 or r < 0:
        raise OutOfRange("cardinality and rank must be nonnegative")
    if p == 0:
        if r != 0:
            raise OutOfRange("the empty set is the only 0-subset")
        return FiniteSubset()
    elems = []
    rem = r
    for i in range(p, 0, -1):
        c = _largest_c(i, rem)
        rem -= math.comb(c, i)
        elems.append(c)
    return FiniteSubset(tuple(reversed(elems)))


def extend_subsets(level, bound: int):
    """Extend each p-subset by one element above its maximum, below bound."""
    out = []
    for s in level:
        top = s.elements[-1] if s.elements else -1
        if top >= bound:
            raise BoundTooSmall(f"subset {s!r} already has an element >= {bound}")
        for i in range(top + 1, bound):
            out.append(FiniteSubset(s.elements + (i,)))
    return out


def dovetail_enumerate(count: int):
    """First `count` finite subsets in stage order.

    Stage t emits the rank-(t-p) p-subset for p = 1..t, after stage 0 emits
    the empty set; every finite subset appears exactly once.
    """
    if count < 0:
        raise DomainError("count must be nonnegative")
    if count > DOVETAIL_CAP:
        raise CapExceeded(f"count {count} above cap {DOVETAIL_CAP}")
    out = []
    t = 0
    while len(out) < count:
        if t == 0:
            out.append(FiniteSubset())
        else:
            for p in range(1, t + 1):
                out.append(unrank(p, t - p))
                if len(out) == count:
                    break
        t += 1
    return out


def encode_subset(s: FiniteSubset) -> int:
    return sum(1 << e for e in s.elements)


def decode_subset(m: int) -> FiniteSubset:
    if m < 0:
        raise DomainError("code must be nonnegative")
    elems = []
    i = 0
    while m:
        if m & 1:
            elems.append(i)
        m >>= 1
        i += 1
    return FiniteSubset(tuple(elems))


def complement(s: FiniteSubset) -> CofiniteSubset:
    return CofiniteSubset(missing=s)


def complement_inv(c: CofiniteSubset) -> FiniteSubset:
    return c.missing
