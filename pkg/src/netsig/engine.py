"""Failure-signature engine.

Scores failure orders by M, the minimum number of link failures at which the
network goes down when the order's blocks fail left to right, and aggregates
a histogram of M over the full order space (exact mode) or over the n!
single-link permutations (classic mode).

Only the histogram is ever stored: counts are exact integers, merged by
addition, so parallel runs are bit-identical to single-worker runs.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations

from ._bitgraph import BitGraph
from .combinatorics import (
    FailureOrder,
    check_failure_order,
    iter_base_partitions,
    n_star,
)
from .errors import EnumerationCapError, UnsupportedModeError
from .graph import Network

# Exhaustive enumeration guards: the order count is ~2.8e10 at 12 links and
# 10! = 3.6e6 permutations is the comfortable classic-mode ceiling.
DEFAULT_EXACT_CAP = 12
DEFAULT_CLASSIC_CAP = 10

M_MODES = ("exact-subset", "paper-greedy")


@dataclass(frozen=True)
class TSignature:
    """Histogram of M normalized to a probability vector.

    counts[i-1] is the exact number of scored orders with M=i; total is the
    order count (exact mode), n! (classic mode) or the sample size (sampled
    mode); values is the floating projection counts/total.
    """

    n: int
    counts: tuple[int, ...]
    total: int
    mode: str
    m_mode: str

    def __post_init__(self):
        if len(self.counts) != self.n:
            raise ValueError("counts length must equal the link count")
        if sum(self.counts) != self.total:
            raise ValueError("counts must sum to total")

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(c / self.total for c in self.counts)


@dataclass(frozen=True)
class SampledTSignature(TSignature):
    """TSignature plus per-component binomial standard errors."""

    std_error: tuple[float, ...] = ()


@dataclass(frozen=True)
class MResult:
    order: FailureOrder
    M: int


def _check_m_mode(net: Network, m_mode: str) -> None:
    if m_mode not in M_MODES:
        raise ValueError(f"unknown m_mode {m_mode!r}; expected one of {M_MODES}")
    if m_mode == "paper-greedy" and len(net.terminals) != 2:
        raise UnsupportedModeError(
            "paper-greedy M is two-terminal only; use exact-subset"
        )


def _order_m(bg: BitGraph, order, m_mode: str, cache: dict) -> int:
    """M for one failure order: full sizes of the surviving prefix blocks
    plus the minimum (or greedy) count inside the first fatal block."""
    removed = 0
    m = 0
    for block in order:
        block_mask = 0
        for link in block:
            block_mask |= 1 << (link - 1)
        if bg.connected(removed | block_mask):
            removed |= block_mask
            m += len(block)
        else:
            if m_mode == "paper-greedy":
                return m + bg.greedy_count(removed, block_mask)
            return m + bg.min_subset_size(removed, tuple(sorted(block)), cache)
    raise AssertionError("removing every link must disconnect a valid network")


def calculate_m(net: Network, order: FailureOrder, m_mode: str = "exact-subset") -> MResult:
    """Score one failure order against the network."""
    check_failure_order(order, net.n)
    _check_m_mode(net, m_mode)
    bg = BitGraph(net, build_table=False)
    return MResult(order=order, M=_order_m(bg, order, m_mode, {}))


def _count_partition(bg, blocks, counts, factorials, m_mode, cache) -> None:
    """Add every permutation of `blocks` to the M histogram.

    Depth-first over block-sequence prefixes: once a prefix's next block is
    fatal, M is fixed for every completion, so (#remaining-1)! orders are
    counted at once instead of being walked individually.
    """
    masks = []
    for block in blocks:
        mask = 0
        for link in block:
            mask |= 1 << (link - 1)
        masks.append(mask)
    sizes = [len(block) for block in blocks]
    indices = list(range(len(blocks)))

    def descend(removed, failed, remaining):
        completions = factorials[len(remaining) - 1]
        for pos, i in enumerate(remaining):
            merged = removed | masks[i]
            if bg.connected(merged):
                descend(merged, failed + sizes[i], remaining[:pos] + remaining[pos + 1 :])
            else:
                if m_mode == "paper-greedy":
                    m = failed + bg.greedy_count(removed, masks[i])
                else:
                    m = failed + bg.min_subset_size(removed, blocks[i], cache)
                counts[m - 1] += completions

    descend(0, 0, indices)


def _stream_partition(bg, blocks, counts, m_mode, cache, limit) -> int:
    """Walk permutations of `blocks` literally, in lexicographic index
    order, scoring at most `limit` of them.  Returns the number scored."""
    done = 0
    for order in permutations(blocks):
        if done >= limit:
            break
        counts[_order_m(bg, order, m_mode, cache) - 1] += 1
        done += 1
    return done


def _histogram_worker(args):
    net, m_mode, classic, worker_id, workers, order_limit = args
    bg = BitGraph(net, build_table=True)
    counts = [0] * net.n
    cache: dict = {}
    factorials = [math.factorial(i) for i in range(net.n + 1)]
    if classic:
        singletons = tuple((i,) for i in range(1, net.n + 1))
        partitions = iter((singletons,))
    else:
        partitions = iter_base_partitions(net.n)
    offset = 0  # global stream position, tracked identically in every worker
    for index, blocks in enumerate(partitions):
        k = len(blocks)
        span = factorials[k]
        if order_limit is not None and offset >= order_limit:
            break
        if index % workers == worker_id:
            if order_limit is None:
                _count_partition(bg, blocks, counts, factorials, m_mode, cache)
            else:
                _stream_partition(bg, blocks, counts, m_mode, cache, order_limit - offset)
        offset += span
    return counts


def _run_histogram(net, m_mode, classic, workers, order_limit):
    jobs = [
        (net, m_mode, classic, worker_id, workers, order_limit)
        for worker_id in range(workers)
    ]
    if workers == 1:
        results = [_histogram_worker(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_histogram_worker, jobs))
    counts = [0] * net.n
    for partial in results:
        for i, c in enumerate(partial):
            counts[i] += c
    return tuple(counts)


def exact_tsignature(
    net: Network,
    m_mode: str = "exact-subset",
    max_links: int = DEFAULT_EXACT_CAP,
    workers: int = 1,
    order_limit: int | None = None,
) -> TSignature:
    """Exact batch-failure signature over all n* failure orders.

    Deterministic and independent of `workers` (per-worker histograms merge
    by exact integer addition).  `order_limit` restricts the scan to the
    first orders of the canonical enumeration stream (partial histogram,
    used for consistency checks); the full run prunes shared prefixes and is
    much faster than scoring orders one by one.
    """
    _check_m_mode(net, m_mode)
    if net.n > max_links:
        raise EnumerationCapError(
            f"{net.n} links means {n_star(net.n):,} orders; raise max_links to "
            f"opt in, or use sampling"
        )
    if workers < 1:
        raise ValueError("workers must be >= 1")
    counts = _run_histogram(net, m_mode, False, workers, order_limit)
    total = n_star(net.n) if order_limit is None else min(order_limit, n_star(net.n))
    return TSignature(n=net.n, counts=counts, total=total, mode="exact", m_mode=m_mode)


def parallel_exact_tsignature(
    net: Network,
    m_mode: str = "exact-subset",
    workers: int = 1,
    max_links: int = DEFAULT_EXACT_CAP,
) -> TSignature:
    """Multi-process exact signature; bit-identical to the single-worker run."""
    return exact_tsignature(net, m_mode=m_mode, max_links=max_links, workers=workers)


def classic_signature(
    net: Network,
    m_mode: str = "exact-subset",
    max_links: int = DEFAULT_CLASSIC_CAP,
    workers: int = 1,
) -> TSignature:
    """Classic signature: the same pipeline restricted to the n! single-link
    permutations; counts[i-1] is the number of permutations whose i-th
    failure downs the network."""
    _check_m_mode(net, m_mode)
    if net.n > max_links:
        raise EnumerationCapError(
            f"{net.n} links means {math.factorial(net.n):,} permutations; "
            f"raise max_links to opt in"
        )
    if workers < 1:
        raise ValueError("workers must be >= 1")
    counts = _run_histogram(net, m_mode, True, workers, None)
    return TSignature(
        n=net.n,
        counts=counts,
        total=math.factorial(net.n),
        mode="classic",
        m_mode=m_mode,
    )
