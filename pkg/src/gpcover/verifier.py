"""Brute-force check that a cover partitions its target edge family."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .errors import ArityMismatch
from .hypergraph import Cover, Edge, EdgeFamily, _iter_block_edges, family_edges

SAMPLE_LIMIT = 20


@dataclass
class VerificationReport:
    family_size: int
    covered_once: int
    uncovered: list[Edge] = field(default_factory=list)
    multiply_covered: list[tuple[Edge, int]] = field(default_factory=list)
    foreign: list[Edge] = field(default_factory=list)
    block_edge_total: int = 0

    @property
    def is_exact(self) -> bool:
        return not (self.uncovered or self.multiply_covered or self.foreign)

    def to_json(self) -> dict:
        return {
            "is_exact": self.is_exact,
            "family_size": self.family_size,
            "covered_once": self.covered_once,
            "block_edge_total": self.block_edge_total,
            "uncovered": [list(e) for e in self.uncovered],
            "multiply_covered": [[list(e), m] for e, m in self.multiply_covered],
            "foreign": [list(e) for e in self.foreign],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


class _ColexRanker:
    """Colexicographic rank of r-subsets of an ordered ground set."""

    def __init__(self, ground: tuple[int, ...], r: int):
        self.pos = {v: i for i, v in enumerate(ground)}
        self.r = r
        self.size = comb(len(ground), r)
        # binom[i][j] = C(i, j)
        self._binom = [[comb(i, j) for j in range(r + 1)] for i in range(len(ground) + 1)]

    def rank(self, edge: Edge) -> int | None:
        try:
            ps = sorted(self.pos[v] for v in edge)
        except KeyError:
            return None
        return sum(self._binom[p][i + 1] for i, p in enumerate(ps))


def verify_exact_cover(c: Cover, f: EdgeFamily | None = None) -> VerificationReport:
    """Tally how often each edge of ``f`` (default: the cover's own family)
    is hit by the blocks of ``c``."""
    f = c.family if f is None else f
    for b in c.blocks:
        if b.r != f.r:
            raise ArityMismatch(f"block with {b.r} parts against a {f.r}-uniform family")

    ranker = _ColexRanker(f.ground(), f.r)
    members = np.zeros(ranker.size, dtype=bool)
    for e in family_edges(f):
        members[ranker.rank(e)] = True

    ranks: list[int] = []
    foreign: list[Edge] = []
    total = 0
    for b in c.blocks:
        for e in _iter_block_edges(b):
            total += 1
            k = ranker.rank(e)
            if k is None or not members[k]:
                if len(foreign) < SAMPLE_LIMIT:
                    foreign.append(e)
            else:
                ranks.append(k)
    mult = np.bincount(np.asarray(ranks, dtype=np.int64), minlength=ranker.size)

    uncovered: list[Edge] = []
    multiple: list[tuple[Edge, int]] = []
    covered_once = 0
    # family_edges is lexicographic, so samples come out in a stable order
    for e in family_edges(f):
        m = int(mult[ranker.rank(e)])
        if m == 1:
            covered_once += 1
        elif m == 0:
            if len(uncovered) < SAMPLE_LIMIT:
                uncovered.append(e)
        elif len(multiple) < SAMPLE_LIMIT:
            multiple.append((e, m))
    return VerificationReport(
        family_size=int(members.sum()),
        covered_once=covered_once,
        uncovered=uncovered,
        multiply_covered=multiple,
        foreign=foreign,
        block_edge_total=total,
    )


def count_blocks(c: Cover) -> int:
    return len(c.blocks)
