"""Exhaustive computation of f_r(n) for tiny n.

Edges of K_n^(r) are bits of a Python int; every candidate block is the
bitmask of its transversals. The search branches on the smallest uncovered
edge, so each exact cover is reached along exactly one path.
"""
from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass
from math import comb, factorial

from .constructions import baseline_cover
from .errors import InvalidArity
from .hypergraph import Block, Cover, _iter_block_edges, complete


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 50_000_000
    time_limit: float = 600.0

    def __post_init__(self):
        if self.max_nodes <= 0 or self.time_limit <= 0:
            raise ValueError("search budget must be positive")


@dataclass
class SearchResult:
    minimum: int
    witness: Cover
    nodes_explored: int
    exhausted: bool

    def to_json(self) -> dict:
        return {
            "minimum": self.minimum,
            "exhausted": self.exhausted,
            "nodes_explored": self.nodes_explored,
            "witness": self.witness.to_json(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def _set_partitions(items: tuple[int, ...], k: int):
    """Partitions of ``items`` into exactly k nonempty blocks, each block in
    order of first appearance (restricted growth strings)."""
    n = len(items)
    if k > n or (k == 0) != (n == 0):
        return
    labels = [0] * n

    def rec(i: int, used: int):
        if n - i < k - used:
            return
        if i == n:
            if used == k:
                parts = [[] for _ in range(k)]
                for v, lab in zip(items, labels):
                    parts[lab].append(v)
                yield tuple(tuple(p) for p in parts)
            return
        for lab in range(min(used + 1, k)):
            labels[i] = lab
            yield from rec(i + 1, max(used, lab + 1))

    yield from rec(0, 0)


def enumerate_blocks(n: int, r: int) -> list[Block]:
    """Every complete r-partite r-graph on a subset of range(n), sorted."""
    if r < 1 or r > n:
        raise InvalidArity(f"need 1 <= r <= n, got r={r}, n={n}")
    out = []
    for w in range(r, n + 1):
        for subset in itertools.combinations(range(n), w):
            for parts in _set_partitions(subset, r):
                out.append(Block(parts))
    out.sort()
    return out


class _Search:
    def __init__(self, n: int, r: int, budget: SearchBudget, lex_least: bool, blocks: list[Block] | None):
        self.budget = budget
        self.lex_least = lex_least
        edges = list(itertools.combinations(range(n), r))
        self.index = {e: i for i, e in enumerate(edges)}
        self.full = (1 << len(edges)) - 1
        self.blocks = enumerate_blocks(n, r) if blocks is None else list(blocks)
        self.masks = []
        for b in self.blocks:
            m = 0
            for e in _iter_block_edges(b):
                m |= 1 << self.index[e]
            self.masks.append(m)
        self.max_edges = max(b.edge_count() for b in self.blocks)
        self.by_edge: list[list[int]] = [[] for _ in edges]
        for bi, m in enumerate(self.masks):
            while m:
                low = m & -m
                self.by_edge[low.bit_length() - 1].append(bi)
                m ^= low
        self.nodes = 0
        self.aborted = False
        self.deadline = 0.0

    def run(self, incumbent: tuple[Block, ...]) -> tuple[Block, ...]:
        self.best = tuple(sorted(incumbent))
        self.deadline = time.monotonic() + self.budget.time_limit
        self._dfs(0, [])
        return self.best

    def _dfs(self, covered: int, chosen: list[int]) -> None:
        if self.aborted:
            return
        self.nodes += 1
        if self.nodes >= self.budget.max_nodes or (self.nodes & 0xFFF == 0 and time.monotonic() > self.deadline):
            self.aborted = True
            return
        if covered == self.full:
            cand = tuple(sorted(self.blocks[i] for i in chosen))
            if len(cand) < len(self.best) or (len(cand) == len(self.best) and cand < self.best):
                self.best = cand
            return
        uncovered = self.full.bit_count() - covered.bit_count()
        bound = len(chosen) + -(-uncovered // self.max_edges)
        # ties are explored only when hunting for the lexicographically least witness
        if bound > len(self.best) or (bound == len(self.best) and not self.lex_least):
            return
        free = ~covered & self.full
        e = (free & -free).bit_length() - 1
        for bi in self.by_edge[e]:
            if self.masks[bi] & covered:
                continue
            chosen.append(bi)
            self._dfs(covered | self.masks[bi], chosen)
            chosen.pop()


def exact_min_cover(
    n: int,
    r: int,
    budget: SearchBudget | None = None,
    lex_least: bool = True,
    blocks: list[Block] | None = None,
) -> SearchResult:
    """Minimum number of blocks partitioning K_n^(r), by branch and bound.

    The baseline construction seeds the incumbent. With ``lex_least`` the
    witness is the lexicographically least optimal cover (sorted block
    list), which makes it independent of the order of ``blocks`` (default:
    :func:`enumerate_blocks`).
    ``exhausted`` is False when the budget ran out; the witness is then the
    best cover found so far.
    """
    if r < 1 or r > n:
        raise InvalidArity(f"need 1 <= r <= n, got r={r}, n={n}")
    budget = budget or SearchBudget()
    s = _Search(n, r, budget, lex_least, blocks)
    best = s.run(baseline_cover(range(n), r).blocks)
    witness = Cover(complete(n, r), best, "exact-search")
    return SearchResult(len(best), witness, s.nodes, not s.aborted)


def partition_count(w: int, r: int) -> int:
    """Stirling number of the second kind via inclusion-exclusion."""
    return sum((-1) ** j * comb(r, j) * (r - j) ** w for j in range(r + 1)) // factorial(r)


def block_count(n: int, r: int) -> int:
    """len(enumerate_blocks(n, r)) in closed form."""
    return sum(comb(n, w) * partition_count(w, r) for w in range(r, n + 1))
