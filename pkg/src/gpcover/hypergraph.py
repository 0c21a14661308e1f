"""Vertices, edges, blocks, covers and edge families.

Vertices are plain non-negative ints and an edge is a strictly increasing
tuple of them. A block is a complete multipartite hypergraph given by its
parts; its edges are the transversals picking one vertex from every part.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from math import comb, prod
from typing import Iterable, Iterator, Sequence, Union

from .errors import EmptyPart, OverlappingParts

Edge = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Block:
    """Complete r-partite r-graph with parts sorted internally and ordered
    by their minimum element. ``Block(())`` is the empty block: it has no
    parts and exactly one edge, the empty set."""

    parts: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.parts)

    def vertices(self) -> frozenset[int]:
        return frozenset(v for part in self.parts for v in part)

    def edge_count(self) -> int:
        return prod(len(p) for p in self.parts)

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.parts]


EMPTY_BLOCK = Block(())


def make_block(parts: Iterable[Iterable[int]]) -> Block:
    """Validate and canonicalize ``parts`` into a :class:`Block`."""
    normalized = []
    seen: set[int] = set()
    for part in parts:
        p = tuple(sorted(set(part)))
        if not p:
            raise EmptyPart("block parts must be nonempty")
        if seen.intersection(p):
            raise OverlappingParts(f"vertex {min(seen.intersection(p))} lies in two parts")
        seen.update(p)
        normalized.append(p)
    normalized.sort(key=lambda p: p[0])
    return Block(tuple(normalized))


def _iter_block_edges(b: Block) -> Iterator[Edge]:
    for choice in itertools.product(*b.parts):
        yield tuple(sorted(choice))


def block_edges(b: Block) -> list[Edge]:
    """All transversals of ``b`` in lexicographic order."""
    return sorted(_iter_block_edges(b))


# -- edge families ----------------------------------------------------------


@dataclass(frozen=True)
class CompleteFamily:
    """All r-subsets of an ordered vertex list."""

    vertices: tuple[int, ...]
    r: int

    @property
    def n(self) -> int:
        return len(self.vertices)

    def ground(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertices))

    def size(self) -> int:
        return comb(self.n, self.r)

    def contains(self, edge: Edge) -> bool:
        return len(edge) == self.r and all(v in self._vset for v in edge)

    @property
    def _vset(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def to_json(self) -> dict:
        return {"kind": "complete", "vertices": list(self.vertices), "r": self.r}


@dataclass(frozen=True)
class MixedProfileFamily:
    """Subsets X of S+T with (|X & S|, |X & T|) among ``profiles``."""

    S: tuple[int, ...]
    T: tuple[int, ...]
    profiles: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if set(self.S) & set(self.T):
            raise ValueError("S and T must be disjoint")
        sums = {a + b for a, b in self.profiles}
        if len(sums) > 1:
            raise ValueError(f"profiles {sorted(self.profiles)} do not share one uniformity")
        if any(a < 0 or b < 0 for a, b in self.profiles):
            raise ValueError("profile entries must be non-negative")

    @property
    def r(self) -> int:
        if not self.profiles:
            return 0
        a, b = next(iter(self.profiles))
        return a + b

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.S + self.T

    @property
    def n(self) -> int:
        return len(self.S) + len(self.T)

    def ground(self) -> tuple[int, ...]:
        return tuple(sorted(self.S + self.T))

    def size(self) -> int:
        return sum(comb(len(self.S), a) * comb(len(self.T), b) for a, b in self.profiles)

    def contains(self, edge: Edge) -> bool:
        s, t = set(self.S), set(self.T)
        if any(v not in s and v not in t for v in edge):
            return False
        a = sum(1 for v in edge if v in s)
        return (a, len(edge) - a) in self.profiles

    def to_json(self) -> dict:
        return {
            "kind": "mixed",
            "S": list(self.S),
            "T": list(self.T),
            "profiles": [list(p) for p in sorted(self.profiles)],
        }


EdgeFamily = Union[CompleteFamily, MixedProfileFamily]


def complete(n: int, r: int) -> CompleteFamily:
    return CompleteFamily(tuple(range(n)), r)


def mixed_profile(S: Sequence[int], T: Sequence[int], profiles: Iterable[tuple[int, int]]) -> MixedProfileFamily:
    return MixedProfileFamily(tuple(S), tuple(T), frozenset((int(a), int(b)) for a, b in profiles))


def family_edges(f: EdgeFamily) -> list[Edge]:
    """Every member edge exactly once, in lexicographic order."""
    if isinstance(f, CompleteFamily):
        return list(itertools.combinations(f.ground(), f.r))
    S, T = sorted(f.S), sorted(f.T)
    out = []
    for a, b in f.profiles:
        for xs in itertools.combinations(S, a):
            for ys in itertools.combinations(T, b):
                out.append(tuple(sorted(xs + ys)))
    out.sort()
    return out


def family_from_json(obj: dict) -> EdgeFamily:
    if obj["kind"] == "complete":
        return CompleteFamily(tuple(obj["vertices"]), int(obj["r"]))
    if obj["kind"] == "mixed":
        return mixed_profile(obj["S"], obj["T"], [tuple(p) for p in obj["profiles"]])
    raise ValueError(f"unknown family kind {obj['kind']!r}")


# -- covers -----------------------------------------------------------------


@dataclass(frozen=True)
class Cover:
    """Blocks meant to partition ``family``; ``construction`` records how
    they were produced."""

    family: EdgeFamily
    blocks: tuple[Block, ...]
    construction: str = ""

    @property
    def n(self) -> int:
        return self.family.n

    @property
    def r(self) -> int:
        return self.family.r

    def __len__(self) -> int:
        return len(self.blocks)

    def canonical_blocks(self) -> tuple[Block, ...]:
        return tuple(sorted(self.blocks))

    def same_blocks(self, other: "Cover") -> bool:
        """Multiset equality of canonical blocks."""
        return self.canonical_blocks() == other.canonical_blocks()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "construction": self.construction,
            "family": self.family.to_json(),
            "blocks": [b.to_json() for b in self.blocks],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def cover_from_json(obj: dict) -> Cover:
    """Inverse of :meth:`Cover.to_json`. Without a ``family`` key the target
    is taken to be all r-subsets of ``range(n)``."""
    fam = family_from_json(obj["family"]) if "family" in obj else complete(int(obj["n"]), int(obj["r"]))
    blocks = tuple(make_block(parts) for parts in obj["blocks"])
    return Cover(fam, blocks, obj.get("construction", ""))


def loads_cover(text: str) -> Cover:
    return cover_from_json(json.loads(text))
