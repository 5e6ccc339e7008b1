"""Combining maps that build large 3AP-free permutations from small ones.

Given 3AP-free permutations a and b of {1, ..., k}, the even block
(2a_1, ..., 2a_k) and the odd block (2b_1 - 1, ..., 2b_k - 1) concatenated
in either order form a 3AP-free permutation of {1, ..., 2k}: a progression
with endpoints of mixed parity has an odd sum, and one with endpoints in
the same block needs its middle value either inside that block (pulling
back to a 3AP in a or b) or in the other block, which lies entirely
outside the endpoints' position range.

The odd-length variant places n even values from a permutation of
{1, ..., n} and n+1 odd values from a permutation of {1, ..., n+1}. The
same parity argument applies, but since this map is not part of the
package's trusted core it re-checks every output and fails loudly rather
than ever returning an unverified witness.
"""

from __future__ import annotations

from .errors import ConstructionViolation, InputNot3APFree, LengthMismatch
from .perm import Permutation, is_3ap_free
from .table import ThetaTable

EVEN_BLOCK_FIRST = "even_block_first"
ODD_BLOCK_FIRST = "odd_block_first"
ORDERS = (EVEN_BLOCK_FIRST, ODD_BLOCK_FIRST)


def _check_order(order: str):
    if order not in ORDERS:
        raise ValueError(f"order must be one of {ORDERS}, got {order!r}")


def _require_free(p: Permutation, label: str):
    if not is_3ap_free(p):
        raise InputNot3APFree(f"input {label} contains a 3AP: {p}")


def double(a: Permutation, b: Permutation,
           order: str = EVEN_BLOCK_FIRST) -> Permutation:
    """Combine two 3AP-free permutations of {1, ..., k} into one of {1, ..., 2k}.

    a supplies the even values (doubled), b the odd values (doubled minus
    one); `order` picks which block comes first. Inputs are re-checked:
    the guarantee on the output is conditional on 3AP-free inputs, so
    trusting callers here could forge witnesses.
    """
    _check_order(order)
    if len(a) != len(b):
        raise LengthMismatch(f"blocks must have equal length, got {len(a)} and {len(b)}")
    _require_free(a, "a")
    _require_free(b, "b")
    evens = tuple(2 * v for v in a.values)
    odds = tuple(2 * v - 1 for v in b.values)
    merged = evens + odds if order == EVEN_BLOCK_FIRST else odds + evens
    return Permutation(merged)


def double_odd(a: Permutation, b: Permutation,
               order: str = EVEN_BLOCK_FIRST) -> Permutation:
    """Odd-length analogue: |a| = n evens and |b| = n+1 odds give 2n+1 values.

    The output is verified to be 3AP-free; a failure raises
    ConstructionViolation instead of returning a bad witness.
    """
    _check_order(order)
    if len(b) != len(a) + 1:
        raise LengthMismatch(
            f"odd-block input must be exactly one longer, got |a|={len(a)}, |b|={len(b)}"
        )
    _require_free(a, "a")
    _require_free(b, "b")
    evens = tuple(2 * v for v in a.values)
    odds = tuple(2 * v - 1 for v in b.values)
    merged = evens + odds if order == EVEN_BLOCK_FIRST else odds + evens
    result = Permutation(merged)
    if not is_3ap_free(result):
        raise ConstructionViolation(
            f"odd doubling of {a} and {b} produced a 3AP: {result}"
        )
    return result


def count_via_doubling(k: int, tbl: ThetaTable) -> int:
    """Constructive lower bound for the count at 2k: twice the square of
    the count at k, since all doubled outputs over all input pairs and
    both block orders are pairwise distinct."""
    v = tbl.value(k)
    return 2 * v * v
