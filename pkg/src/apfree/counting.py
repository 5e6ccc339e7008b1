"""Exact counting of 3AP-free permutations.

Two independent routes are provided. The oracle enumerates all n!
permutations and filters with the quadratic 3AP test; it is the ground
truth for small n. The pruned counter builds permutations left to right
and never extends a prefix with a value that would close a 3AP as the
rightmost element, so every completed sequence is 3AP-free by
construction and none is missed.

The pruning state is a bitmask of still-placeable values. Once a pair
(u at position i, w at position j > i) exists, the value 2w - u is dead
for every later position, so the allowed set only shrinks along a search
path and can be passed down functionally. Branches whose allowed set is
already smaller than the number of open positions are abandoned early;
this does not change the count, since such branches admit no completion.
"""

from __future__ import annotations

import itertools
import multiprocessing
from dataclasses import dataclass
from typing import Iterator, Optional

from . import dataio
from .errors import OracleRangeExceeded, ResourceLimitExceeded, ValueUnavailable
from .perm import values_3ap_free
from .table import PROVENANCE_COMPUTED, ThetaTable

ORACLE_CEILING_DEFAULT = 10
SPLIT_DEPTH_DEFAULT = 2

POLICY_LOOKUP_ONLY = "lookup_only"
POLICY_COMPUTE_IF_MISSING = "compute_if_missing"


@dataclass(frozen=True)
class CountJob:
    """Parameters for one pruned count.

    split_depth is the prefix length at which the search tree is cut into
    independent subtrees; worker_count processes count subtrees in
    parallel. Neither affects the result. node_budget, if set, caps the
    number of search nodes each subtree task may visit; exhausting it is
    a hard ResourceLimitExceeded, never a truncated count.
    """

    n: int
    worker_count: int = 1
    split_depth: int = SPLIT_DEPTH_DEFAULT
    node_budget: Optional[int] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.worker_count < 1:
            raise ValueError(f"worker_count must be >= 1, got {self.worker_count}")
        if not 0 <= self.split_depth <= self.n:
            raise ValueError(
                f"split_depth must be in 0..{self.n}, got {self.split_depth}"
            )


class _NodeBudget:
    __slots__ = ("remaining",)

    def __init__(self, limit: int):
        self.remaining = limit

    def charge(self):
        self.remaining -= 1
        if self.remaining < 0:
            raise ResourceLimitExceeded("node budget exhausted")


def count_oracle(n: int, ceiling: int = ORACLE_CEILING_DEFAULT) -> int:
    """Count by enumerating all n! permutations and filtering.

    Deliberately brute force; serves as the independent cross-check for
    the pruned counter. Raises OracleRangeExceeded for n above `ceiling`
    (default 10) to stop accidental factorial blowups.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > ceiling:
        raise OracleRangeExceeded(
            f"oracle ceiling is {ceiling}, asked for n={n}; "
            f"raise `ceiling` explicitly if you really want this"
        )
    return sum(1 for p in itertools.permutations(range(1, n + 1))
               if values_3ap_free(p))


def _blocked_mask(n: int, prefix: tuple[int, ...], v: int) -> int:
    """Values that placing v after `prefix` kills for all later positions."""
    fm = 0
    for u in prefix:
        w = 2 * v - u
        if 0 < w <= n:
            fm |= 1 << w
    return fm


def _count_subtree(n: int, prefix: tuple[int, ...], allowed: int,
                   budget: Optional[_NodeBudget]) -> int:
    if budget is not None:
        budget.charge()
    t = len(prefix)
    if t == n:
        return 1
    need = n - t - 1
    total = 0
    m = allowed
    while m:
        b = m & -m
        m ^= b
        v = b.bit_length() - 1
        child = (allowed ^ b) & ~_blocked_mask(n, prefix, v)
        if child.bit_count() >= need:
            total += _count_subtree(n, prefix + (v,), child, budget)
    return total


def _subtree_roots(n: int, depth: int,
                   budget: Optional[_NodeBudget]) -> list[tuple[tuple[int, ...], int]]:
    """All viable (prefix, allowed) states at the given prefix length."""
    full = (1 << (n + 1)) - 2
    roots = [((), full)]
    for level in range(depth):
        need = n - level - 1
        nxt = []
        for prefix, allowed in roots:
            if budget is not None:
                budget.charge()
            m = allowed
            while m:
                b = m & -m
                m ^= b
                v = b.bit_length() - 1
                child = (allowed ^ b) & ~_blocked_mask(n, prefix, v)
                if child.bit_count() >= need:
                    nxt.append((prefix + (v,), child))
        roots = nxt
    return roots


def _count_task(args: tuple[int, tuple[int, ...], int, Optional[int]]) -> int:
    n, prefix, allowed, budget_limit = args
    budget = _NodeBudget(budget_limit) if budget_limit is not None else None
    return _count_subtree(n, prefix, allowed, budget)


def count_pruned(job: CountJob) -> int:
    """Exact count of 3AP-free permutations of {1, ..., job.n}.

    The search tree is split at job.split_depth into independent prefix
    subtrees whose exact counts are summed, sequentially or across
    job.worker_count processes. Addition of exact integers commutes, so
    the result is identical for every worker_count and split_depth.
    """
    n = job.n
    budget = _NodeBudget(job.node_budget) if job.node_budget is not None else None
    roots = _subtree_roots(n, job.split_depth, budget)
    if job.worker_count == 1 or len(roots) <= 1:
        return sum(_count_subtree(n, prefix, allowed, budget)
                   for prefix, allowed in roots)
    tasks = [(n, prefix, allowed, job.node_budget) for prefix, allowed in roots]
    with multiprocessing.Pool(job.worker_count) as pool:
        return sum(pool.map(_count_task, tasks))


def free_permutations(n: int) -> Iterator[tuple[int, ...]]:
    """Yield every 3AP-free permutation of {1, ..., n} in lexicographic order."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")

    def walk(prefix: tuple[int, ...], allowed: int) -> Iterator[tuple[int, ...]]:
        t = len(prefix)
        if t == n:
            yield prefix
            return
        need = n - t - 1
        m = allowed
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            child = (allowed ^ b) & ~_blocked_mask(n, prefix, v)
            if child.bit_count() >= need:
                yield from walk(prefix + (v,), child)

    return walk((), (1 << (n + 1)) - 2)


def count_verified(n: int) -> int:
    """Diagnostic mode: enumerate accepted sequences and re-test each one.

    Confirms that the pruning is sound, i.e. everything the counter
    accepts is genuinely 3AP-free. Only sensible for small n.
    """
    total = 0
    for p in free_permutations(n):
        if not values_3ap_free(p):
            raise AssertionError(f"counter accepted a sequence with a 3AP: {p}")
        total += 1
    return total


def theta(n: int, tbl: ThetaTable, policy: str = POLICY_LOOKUP_ONLY, *,
          worker_count: int = 1, split_depth: Optional[int] = None,
          node_budget: Optional[int] = None) -> int:
    """Exact count for n from the table, optionally computing on a miss.

    Under compute_if_missing the pruned counter runs, the result is
    stored with provenance "computed", and the table is persisted to its
    cache path when it has one.
    """
    if policy not in (POLICY_LOOKUP_ONLY, POLICY_COMPUTE_IF_MISSING):
        raise ValueError(f"unknown policy {policy!r}")
    e = tbl.entry(n)
    if e is not None:
        return e.value
    if policy == POLICY_LOOKUP_ONLY:
        raise ValueUnavailable(f"no count for n={n} and policy is lookup_only")
    depth = min(SPLIT_DEPTH_DEFAULT, n) if split_depth is None else split_depth
    value = count_pruned(CountJob(n, worker_count, depth, node_budget))
    tbl.insert(n, value, PROVENANCE_COMPUTED)
    if tbl.cache_path is not None:
        dataio.save_table(tbl, tbl.cache_path)
    return value
