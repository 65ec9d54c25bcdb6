"""Counting a_m = |Mp(m)|: truncation recurrence, dense table builder, and
the binary-partition series that gives a closed form on the upper half of
every binade.

Writing n = floor(log2 m), each binade [2^n, 2^(n+1)) splits at
2^n + 2^(n-1) - 1: on the upper-half window the count collapses to a plain
sum over one-step truncations (and from there to the series b_j), while the
lower half needs the full recurrence with its subtraction term.

Counts are exact Python ints; b_j grows like exp(c * log^2 j) and would
eventually wrap any fixed-width type.
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Mapping

from .core import (
    DomainError,
    _require_positive,
    extension_range_m1,
    extension_range_m12,
)


def in_upper_half(m: int) -> bool:
    """Whether m lies in its binade's upper-half window
    2^n + 2^(n-1) - 1 <= m <= 2^(n+1) - 1 (defined for n >= 1, so m >= 2)."""
    if m < 2:
        return False
    n = m.bit_length() - 1
    return m >= (3 << (n - 1)) - 1


class CountTable:
    """Write-once memo of a_m values.

    a_1 = 1 is the base case; every other entry comes from the recurrence.
    :func:`a` fills single entries sparsely top-down; :func:`build_table`
    fills a dense prefix bottom-up with prefix-sum acceleration.  A finished
    table may be read from any number of threads; filling or extending it
    is a single-writer affair.
    """

    def __init__(self) -> None:
        self._memo: dict[int, int] = {1: 1}
        # Dense acceleration arrays, valid on indices 0..dense_limit:
        #   S[t]  = a_1 + ... + a_t
        #   P1[t] = S[0] + ... + S[t]
        #   Q[t]  = S[t] + S[t-2] + S[t-4] + ...
        self._S = [0, 1]
        self._P1 = [0, 1]
        self._Q = [0, 1]

    @property
    def memo(self) -> Mapping[int, int]:
        """Read-only view of every stored (m, a_m) pair."""
        return MappingProxyType(self._memo)

    @property
    def dense_limit(self) -> int:
        """Largest M such that all of a_1..a_M are tabulated densely."""
        return len(self._S) - 1

    def __contains__(self, m: int) -> bool:
        return m in self._memo

    def __getitem__(self, m: int) -> int:
        return self._memo[m]

    def range_sum(self, lo: int, hi: int) -> int:
        """Sum of a_i over lo <= i <= hi; O(1) inside the dense prefix."""
        if lo > hi:
            return 0
        if hi <= self.dense_limit:
            return self._S[hi] - self._S[lo - 1]
        return sum(self._memo[i] for i in range(lo, hi + 1))


def a(m: int, table: CountTable | None = None) -> int:
    """a_m = |Mp(m)| via the two-level truncation recurrence, memoized.

    Every M-partition of m extends one of the one-step truncation sums m1 in
    ``extension_range_m1(m)``; the extensions that fail are in bijection
    with the M-partitions of the two-step sums m12 in
    ``extension_range_m12(m1, m)``:

        a_m = sum over m1 of ( a_m1 - sum over m12 of a_m12 )

    with the empty inner range contributing 0 and a_1 = 1 as the axiom.
    Good for scattered queries; for a full prefix use :func:`build_table`.
    """
    _require_positive(m)
    if table is None:
        table = CountTable()
    memo = table._memo

    def rec(x: int) -> int:
        val = memo.get(x)
        if val is not None:
            return val
        val = 0
        for m1 in extension_range_m1(x):
            val += rec(m1)
            for m12 in extension_range_m12(m1, x):
                val -= rec(m12)
        memo[x] = val
        return val

    return rec(m)


def _sum_S_at_half_indices(P1: list[int], A: int, B: int) -> int:
    # sum of S[m1//2 - 1] for m1 in [A, B]: the index advances every other
    # m1, so split by parity and read each piece off P1.
    out = 0
    te0, te1 = (A + 1) // 2, B // 2  # even m1 = 2t
    if te0 <= te1:
        out += P1[te1 - 1] - (P1[te0 - 2] if te0 >= 2 else 0)
    to0, to1 = A // 2, (B - 1) // 2  # odd m1 = 2t + 1
    if to0 <= to1:
        out += P1[to1 - 1] - (P1[to0 - 2] if to0 >= 2 else 0)
    return out


def build_table(M: int, table: CountTable | None = None) -> CountTable:
    """Tabulate a_1..a_M bottom-up in amortized O(1) big-int ops per entry.

    The outer sum of the recurrence is one prefix-sum difference.  The
    subtraction terms exist only for m1 with 3*m1 >= 2m + 1; over that run
    their upper index 2*m1 - m - 1 advances by two per step (covered by the
    stride-two prefix Q) and their lower index floor(m1/2) repeats each
    value twice (covered by the prefix-of-prefix P1).  Extending an already
    populated table computes only the new entries and never rewrites an old
    one.
    """
    _require_positive(M, "M")
    if table is None:
        table = CountTable()
    memo, S, P1, Q = table._memo, table._S, table._P1, table._Q
    for m in range(table.dense_limit + 1, M + 1):
        n = m.bit_length() - 1
        lo = m >> 1
        hi = min((m + (1 << (n - 1)) - 1) >> 1, (1 << n) - 1)
        val = S[hi] - S[lo - 1]
        m1s = max(lo, (2 * m + 3) // 3)  # first m1 with a nonempty inner range
        if m1s <= hi:
            i0, i1 = 2 * m1s - m - 1, 2 * hi - m - 1
            val -= Q[i1] - (Q[i0 - 2] if i0 >= 2 else 0)
            val += _sum_S_at_half_indices(P1, m1s, hi)
        memo[m] = val
        S.append(S[-1] + val)
        P1.append(P1[-1] + S[-1])
        Q.append(S[-1] + Q[-2])
    return table


def a_simple(m: int, table: CountTable | None = None) -> int:
    """Upper-half shortcut: a_m = sum of a_i over floor(m/2) <= i <= 2^n - 1.

    Valid exactly on the window 2^n + 2^(n-1) - 1 <= m < 2^(n+1), where
    every truncation extends and nothing is overcounted; elsewhere a
    :class:`DomainError`.  Always equals :func:`a` on its domain.
    """
    _require_positive(m)
    if not in_upper_half(m):
        raise DomainError(
            f"m={m} is not in an upper-half window 2^n + 2^(n-1) - 1 <= m <= 2^(n+1) - 1"
        )
    if table is None:
        table = CountTable()
    n = m.bit_length() - 1
    lo, hi = m >> 1, (1 << n) - 1
    if hi <= table.dense_limit:
        return table.range_sum(lo, hi)
    return sum(a(i, table) for i in range(lo, hi + 1))


class BinarySeries:
    """Cached values of the doubling recurrence b_0 = 1, b_j = b_(j-1) + b_(j//2).

    b_j counts the partitions of 2j into powers of two and equals the x^j
    coefficient of (1-x)^-1 * prod_{j>=0} (1-x^(2^j))^-1; the test suite
    holds the two routes together (see :func:`gf_coefficients`).
    """

    def __init__(self) -> None:
        self._b = [1]

    def value(self, j: int) -> int:
        if j < 0:
            raise ValueError(f"series index must be nonnegative, got {j}")
        seq = self._b
        while len(seq) <= j:
            seq.append(seq[-1] + seq[len(seq) >> 1])
        return seq[j]

    def prefix(self, j: int) -> list[int]:
        """b_0..b_j as a fresh list."""
        self.value(j)
        return self._b[: j + 1]

    def coefficients(self, N: int) -> list[int]:
        """Series coefficients 0..N via the truncated product; computed
        independently of the recurrence cache."""
        return gf_coefficients(N)


def b(j: int, series: BinarySeries | None = None) -> int:
    """b_j of the doubling recurrence, extending the given cache as needed."""
    return (series if series is not None else BinarySeries()).value(j)


def gf_coefficients(N: int) -> list[int]:
    """Coefficients x^0..x^N of (1-x)^-1 * prod_{j>=0} (1-x^(2^j))^-1.

    Each factor (1 - x^(2^j))^-1 is one in-place strided accumulation on the
    truncated prefix; factors with 2^j > N are identities there and are
    skipped.  The final (1-x)^-1 is a plain prefix sum.  Factor order is
    immaterial (and tested as such).
    """
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    c = [0] * (N + 1)
    c[0] = 1
    step = 1
    while step <= N:
        for i in range(step, N + 1):
            c[i] += c[i - step]
        step <<= 1
    for i in range(1, N + 1):
        c[i] += c[i - 1]
    return c


def a_upper_half_via_b(m: int, series: BinarySeries | None = None) -> int:
    """Closed form on the upper half: a_m = b_floor(k/2), k = 2^(n+1) - 1 - m.

    Domain is the same window as :func:`a_simple`; always equals :func:`a`
    there.
    """
    _require_positive(m)
    if not in_upper_half(m):
        raise DomainError(
            f"m={m} is not in an upper-half window 2^n + 2^(n-1) - 1 <= m <= 2^(n+1) - 1"
        )
    n = m.bit_length() - 1
    k = (2 << n) - 1 - m
    return b(k >> 1, series)


def defect(
    m: int,
    table: CountTable | None = None,
    series: BinarySeries | None = None,
) -> int:
    """How far the series overshoots the true count:

        defect(m) = b_floor(k/2) - a_m,   k = 2^(n+1) - 1 - m.

    Zero on every upper-half window; positive on the lower halves, where no
    generating function is known.  defect(1) = 0 by convention.
    """
    _require_positive(m)
    if m == 1:
        return 0
    n = m.bit_length() - 1
    k = (2 << n) - 1 - m
    return b(k >> 1, series) - a(m, table)


def a_even_pairing_check(m: int, table: CountTable | None = None) -> bool:
    """Whether a_m == a_(m+1); contractually always true for even m with
    2^n + 2^(n-1) <= m < 2^(n+1) (both upper-half sums start at the same
    floor).  Odd or out-of-window m is a :class:`DomainError`."""
    _require_positive(m)
    if m % 2:
        raise DomainError(f"pairing check needs even m, got {m}")
    n = m.bit_length() - 1
    if not (3 << (n - 1)) <= m < (2 << n):
        raise DomainError(
            f"m={m} outside the pairing window 2^n + 2^(n-1) <= m < 2^(n+1)"
        )
    return a(m, table) == a(m + 1, table)
