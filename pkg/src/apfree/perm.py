"""Permutations in one-line notation and the 3AP test.

A permutation of {1, ..., n} contains a 3AP if some values x, y, z with
x + z = 2y appear at strictly increasing positions i < j < k. Permutations
with no such triple are called 3AP-free. Both the reversal and the value
complement v -> n+1-v preserve 3AP-freeness, since x + z = 2y holds exactly
when (n+1-x) + (n+1-z) = 2(n+1-y).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import NotAPermutation


class APWitness(NamedTuple):
    """1-based positions i < j < k whose values satisfy v_i + v_k = 2 v_j."""

    i: int
    j: int
    k: int


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n}, stored as the tuple of its values.

    Instances are immutable and validated on construction; use ``validate``
    to build one from untrusted input.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        n = len(self.values)
        if n == 0:
            raise NotAPermutation("empty sequence")
        seen = [False] * (n + 1)
        for v in self.values:
            if not isinstance(v, int) or v < 1 or v > n:
                raise NotAPermutation(f"value {v!r} outside 1..{n}")
            if seen[v]:
                raise NotAPermutation(f"duplicate value {v}")
            seen[v] = True

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        return format_oneline(self)


def validate(values: Iterable[int]) -> Permutation:
    """Build a Permutation, raising NotAPermutation for invalid input."""
    return Permutation(tuple(values))


def parse_oneline(text: str) -> Permutation:
    """Parse comma-separated one-line notation, e.g. "4,2,1,3".

    Whitespace is rejected rather than stripped, so shell arguments never
    need quoting.
    """
    if not text or any(c not in "0123456789," for c in text):
        raise NotAPermutation(f"not comma-separated integers: {text!r}")
    try:
        values = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise NotAPermutation(f"not comma-separated integers: {text!r}") from None
    return validate(values)


def format_oneline(p: Permutation) -> str:
    return ",".join(str(v) for v in p.values)


def values_3ap_free(values: Sequence[int]) -> bool:
    """3AP test on a raw value sequence, assumed to be a valid permutation.

    Scans middle positions j and asks, for each earlier endpoint, whether the
    completing value sits to the right of j. Runs in O(n^2); fast enough for
    single-permutation checks, which are not the counting hot path.
    """
    n = len(values)
    pos = [0] * (n + 1)
    for idx, v in enumerate(values):
        pos[v] = idx
    for j in range(1, n - 1):
        vj2 = 2 * values[j]
        for i in range(j):
            w = vj2 - values[i]
            if 1 <= w <= n and pos[w] > j:
                return False
    return True


def find_3ap(p: Permutation) -> Optional[APWitness]:
    """Return the lexicographically smallest 3AP witness, or None if 3AP-free.

    For a fixed pair of positions (i, j) the completing value 2 v_j - v_i is
    unique, so scanning i, then j, in increasing order and returning the
    first hit yields the smallest witness under (i, j, k) ordering.
    """
    values = p.values
    n = len(values)
    pos = [0] * (n + 1)
    for idx, v in enumerate(values):
        pos[v] = idx
    for i in range(n - 2):
        vi = values[i]
        for j in range(i + 1, n - 1):
            w = 2 * values[j] - vi
            if 1 <= w <= n and pos[w] > j:
                return APWitness(i + 1, j + 1, pos[w] + 1)
    return None


def is_3ap_free(p: Permutation) -> bool:
    """True iff the permutation contains no 3AP."""
    return values_3ap_free(p.values)


def reverse(p: Permutation) -> Permutation:
    """The reversed permutation (v_n, ..., v_1)."""
    return Permutation(p.values[::-1])


def complement(p: Permutation) -> Permutation:
    """The value complement (n+1-v_1, ..., n+1-v_n)."""
    n = len(p.values)
    return Permutation(tuple(n + 1 - v for v in p.values))
