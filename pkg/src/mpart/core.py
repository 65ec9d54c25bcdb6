"""Partition type, verification predicates, and witness generators.

An M-partition of m is a partition with the fewest possible parts such that
every integer between 0 and m is the sum of some sub-multiset of the parts.
The minimal count is exactly the bit length of m, and membership reduces to
a run of prefix-sum inequalities, so every predicate here is a single linear
pass.  All arithmetic is exact Python integers; floating point never enters
(a float log2 is off by one at powers of two, which would silently corrupt
every caller).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator


class DomainError(ValueError):
    """Well-formed argument outside an operation's stated domain."""


def _require_positive(m: int, name: str = "m") -> None:
    if m < 1:
        raise ValueError(f"{name} must be a positive integer, got {m}")


def num_parts(m: int) -> int:
    """Number of parts of every M-partition of m: floor(log2 m) + 1.

    Computed as the bit length of m, never via floating point.
    """
    _require_positive(m)
    return m.bit_length()


@dataclass(frozen=True)
class Partition:
    """Nondecreasing positive parts together with their cached sum.

    >>> Partition((1, 2, 4)).total
    7

    Raises ``ValueError`` for empty, non-positive, or out-of-order parts.
    """

    parts: tuple[int, ...]
    total: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        prev = 1
        for p in parts:
            if p < 1:
                raise ValueError(f"parts must be positive integers, got {p}")
            if p < prev:
                raise ValueError(f"parts must be nondecreasing, got {p} after {prev}")
            prev = p
        object.__setattr__(self, "total", sum(parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    @property
    def n(self) -> int:
        """Index of the largest part (part count minus one)."""
        return len(self.parts) - 1

    @property
    def largest(self) -> int:
        return self.parts[-1]

    def prefix_sums(self) -> tuple[int, ...]:
        out = []
        s = 0
        for p in self.parts:
            s += p
            out.append(s)
        return tuple(out)

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts)


def is_weak_m_partition(p: Partition) -> bool:
    """True iff every integer 0..p.total is a sub-multiset sum of the parts.

    One pass over prefix sums: each part may exceed the sum of its
    predecessors by at most one (so the first part must be 1).
    """
    s = 0
    for part in p.parts:
        if part > s + 1:
            return False
        s += part
    return True


def is_m_partition(p: Partition) -> bool:
    """Weak coverage plus the minimal part count num_parts(p.total)."""
    return len(p.parts) == num_parts(p.total) and is_weak_m_partition(p)


def is_m_partition_by_sum_bound(p: Partition) -> bool:
    """Alternate formulation: weak coverage and 2**n <= total for n = len - 1.

    Equivalent to :func:`is_m_partition` everywhere: a weak partition's total
    is at most 2**len - 1, so the sum bound pins the same part count.  Both
    shapes are kept public because each is the natural one in different
    derivations; the test suite holds them together.
    """
    return is_weak_m_partition(p) and p.total >= 1 << (len(p.parts) - 1)


def generate_alg1(m: int) -> Partition:
    """Witness M-partition: the powers 1, 2, ..., 2^(n-1) plus the remainder
    m - (2^n - 1), sorted into place (the remainder can land anywhere)."""
    _require_positive(m)
    n = m.bit_length() - 1
    parts = [1 << i for i in range(n)]
    parts.append(m - ((1 << n) - 1))
    parts.sort()
    return Partition(tuple(parts))


def generate_alg2(m: int) -> Partition:
    """Witness M-partition by repeated halving: the largest part is
    ceil(m/2) and the rest recursively partition floor(m/2)."""
    _require_positive(m)
    rem = m
    rev = []
    while rem:
        rev.append((rem + 1) >> 1)
        rem >>= 1
    return Partition(tuple(reversed(rev)))


def generate_alg3(m: int) -> Partition:
    """Witness for the lower portion of a binade: powers 1..2^(n-2), then an
    almost-even split of the remainder m - (2^(n-1) - 1).

    Only valid for 2^n <= m <= 2^n + 2^(n-1) - 2 with n >= 2.  Outside that
    window the split leaves a gap just above the power prefix (some sums
    become unreachable), so a :class:`DomainError` is raised instead of a
    broken witness.
    """
    _require_positive(m)
    n = m.bit_length() - 1
    if n < 2:
        raise DomainError(f"the split construction needs m >= 4, got {m}")
    lo, hi = 1 << n, (1 << n) + (1 << (n - 1)) - 2
    if m > hi:
        raise DomainError(f"m={m} outside the admissible window [{lo}, {hi}]")
    res = m - ((1 << (n - 1)) - 1)
    parts = [1 << i for i in range(n - 1)]
    parts.extend((res >> 1, (res + 1) >> 1))
    return Partition(tuple(parts))


@dataclass(frozen=True)
class PartBounds:
    """Sharp bounds on the largest part over all M-partitions of one m."""

    lower: int
    upper: int


def largest_part_bounds(m: int) -> PartBounds:
    """Largest-part interval for M-partitions of m (m >= 2):

        max(m - 2^n + 1, ceil((m - 2^(n-1) + 1) / 2))  <=  largest  <=  ceil(m/2)

    All three bounds are attained (by the three generators).
    """
    _require_positive(m)
    if m < 2:
        raise DomainError("largest-part bounds need m >= 2; Mp(1) is just [1]")
    n = m.bit_length() - 1
    lower = max(m - (1 << n) + 1, (m - (1 << (n - 1)) + 2) >> 1)
    return PartBounds(lower, (m + 1) >> 1)


@dataclass(frozen=True)
class ExtensionRange:
    """Closed integer interval; emptiness (lo > hi) is an ordinary value."""

    lo: int
    hi: int

    @property
    def is_empty(self) -> bool:
        return self.lo > self.hi

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))

    def __len__(self) -> int:
        return self.hi - self.lo + 1 if self.hi >= self.lo else 0

    def __contains__(self, x: int) -> bool:
        return self.lo <= x <= self.hi


def extension_range_m1(m: int) -> ExtensionRange:
    """Admissible sums after dropping the largest part of an M-partition of m:

        floor(m/2) .. min(floor((m + 2^(n-1) - 1)/2), 2^n - 1)

    Never empty for m >= 2.
    """
    _require_positive(m)
    if m < 2:
        raise DomainError("truncation range needs m >= 2")
    n = m.bit_length() - 1
    return ExtensionRange(m >> 1, min((m + (1 << (n - 1)) - 1) >> 1, (1 << n) - 1))


def extension_range_m12(m1: int, m: int) -> ExtensionRange:
    """Two-step truncation sums counted by the subtraction term of the
    recurrence: floor(m1/2) .. 2*m1 - m - 1.

    Empty for most m1 (exactly when every extension to m1 also extends
    to m); emptiness is reported as a value, never as an error.
    """
    if m1 not in extension_range_m1(m):
        raise DomainError(f"m1={m1} is not a one-step truncation sum of m={m}")
    return ExtensionRange(m1 >> 1, 2 * m1 - m - 1)


def can_extend(p: Partition, r: int) -> bool:
    """Whether appending r to the M-partition p gives an M-partition of
    total + r.  Three comparisons, no re-verification from scratch:

        largest <= r,   r <= total + 1,   total + r >= 2**len(p).
    """
    _require_positive(r, "r")
    if not is_m_partition(p):
        raise DomainError("can_extend needs an M-partition")
    m = p.total
    return p.parts[-1] <= r <= m + 1 and m + r >= 1 << len(p.parts)
