"""Explicit exact covers of complete and mixed-profile hypergraphs.

All constructions take an *ordered* vertex list; sub-constructions on a
slice of that list inherit its order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .errors import GroundSetOverlap, InvalidArity, OddProfile, TooSmall
from .hypergraph import (
    EMPTY_BLOCK,
    Block,
    CompleteFamily,
    Cover,
    make_block,
    mixed_profile,
)

STRATEGIES = ("baseline", "halving", "odd-pairing")


@dataclass(frozen=True)
class ConstructionStrategy:
    """Which construction to run and when recursion stops.

    ``base_threshold=None`` means ``max(2r, 8)``. ``product_pairs`` lists the
    pair indices of the odd pairing that are covered by products instead of
    interval blocks; ``None`` picks the middle pair when r = 1 (mod 4).
    """

    name: str = "halving"
    base_threshold: int | None = None
    product_pairs: frozenset[int] | None = None

    def __post_init__(self):
        if self.name not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.name!r}; expected one of {STRATEGIES}")
        if self.base_threshold is not None and self.base_threshold < 1:
            raise ValueError("base_threshold must be positive")

    def threshold(self, r: int) -> int:
        if self.base_threshold is None:
            return max(2 * r, 8)
        return max(self.base_threshold, r)

    def pairs_for(self, r: int) -> frozenset[int]:
        if self.product_pairs is not None:
            return frozenset(self.product_pairs)
        if r % 4 == 1 and r >= 5:
            return frozenset({(r - 1) // 4})
        return frozenset()

    def label(self) -> str:
        parts = [self.name]
        if self.base_threshold is not None:
            parts.append(f"threshold={self.base_threshold}")
        if self.product_pairs is not None:
            parts.append("product_pairs=" + ",".join(map(str, sorted(self.product_pairs))))
        return ";".join(parts)


ALL_LEMMA1 = ConstructionStrategy("odd-pairing", product_pairs=frozenset())


def identity_cover(vertices: Sequence[int] = ()) -> Cover:
    """The 0-uniform cover: one empty block covering the empty edge."""
    return Cover(CompleteFamily(tuple(vertices), 0), (EMPTY_BLOCK,), "identity")


def _empty_cover(vertices: Sequence[int], r: int) -> Cover:
    return Cover(CompleteFamily(tuple(vertices), r), (), "empty")


def _fixed_positions(n: int, h: int, need_tail: bool) -> Iterator[tuple[int, ...]]:
    """Indices u_1 < ... < u_h in range(n) with nonempty gaps before each
    u_i (and after u_h when ``need_tail``)."""
    span = n - h - (1 if need_tail else 0)
    if span < h:
        return
    for c in itertools.combinations(range(span), h):
        yield tuple(ci + i + 1 for i, ci in enumerate(c))


def _interval_parts(seq: Sequence[int], fixed: tuple[int, ...]) -> tuple[list[tuple[int, ...]], tuple[int, ...]]:
    parts: list[tuple[int, ...]] = []
    prev = 0
    for u in fixed:
        parts.append(tuple(seq[prev:u]))
        parts.append((seq[u],))
        prev = u + 1
    return parts, tuple(seq[prev:])


def baseline_cover(vertices: Sequence[int], r: int) -> Cover:
    """Fix the vertices sitting at the even positions of every edge.

    Each block alternates an interval of the vertex order with a single
    fixed vertex; for odd r a final interval above the last fixed vertex
    closes the block. Blocks with an empty interval are skipped.
    """
    if isinstance(vertices, int):
        raise TypeError("pass a vertex sequence, e.g. range(n)")
    vs = tuple(vertices)
    n = len(vs)
    if r < 1 or r > n:
        raise InvalidArity(f"need 1 <= r <= n, got r={r}, n={n}")
    h = r // 2
    odd = r % 2 == 1
    blocks = []
    for fixed in _fixed_positions(n, h, odd):
        parts, tail = _interval_parts(vs, fixed)
        if odd:
            parts.append(tail)
        blocks.append(make_block(parts))
    return Cover(CompleteFamily(vs, r), tuple(blocks), "baseline")


def baseline_count(n: int, r: int) -> int:
    """Closed-form block count of :func:`baseline_cover`."""
    if r % 2 == 0:
        return comb(n - r // 2, r // 2)
    return comb(n - (r + 1) // 2, (r - 1) // 2)


def _lemma1_blocks(S: tuple[int, ...], T: tuple[int, ...], a: int, b: int) -> list[Block]:
    s_choices = [_interval_parts(S, f) for f in _fixed_positions(len(S), a // 2, False)]
    t_choices = [_interval_parts(T, f) for f in _fixed_positions(len(T), b // 2, False)]
    blocks = []
    for s_parts, s_tail in s_choices:
        for t_parts, t_tail in t_choices:
            tail = s_tail + t_tail
            if tail:
                blocks.append(make_block(s_parts + t_parts + [tail]))
    return blocks


def _lemma1_family(S, T, a: int, b: int):
    return mixed_profile(S, T, [(a, b + 1), (a + 1, b)])


def lemma1_cover(S: Sequence[int], T: Sequence[int], a: int, b: int) -> Cover:
    """Cover profiles (a, b+1) and (a+1, b) of the split (S, T) at once.

    Pick a/2 vertices of S and b/2 of T; the block alternates intervals and
    the picked vertices within each side and ends with one part holding
    everything after the last pick on both sides. Candidates with an empty
    part are discarded, so at most C(|S|, a/2) * C(|T|, b/2) blocks remain.
    """
    S, T = tuple(S), tuple(T)
    if a % 2 or b % 2 or a < 0 or b < 0:
        raise OddProfile(f"a and b must be even and non-negative, got a={a}, b={b}")
    if len(S) <= a or len(T) <= b:
        raise TooSmall(f"need |S| > a and |T| > b, got |S|={len(S)}, |T|={len(T)}, a={a}, b={b}")
    if set(S) & set(T):
        raise GroundSetOverlap("S and T must be disjoint")
    return Cover(_lemma1_family(S, T, a, b), tuple(_lemma1_blocks(S, T, a, b)), f"lemma1;a={a};b={b}")


def lemma1_count(p: int, q: int, a: int, b: int) -> int:
    """Exact number of blocks :func:`lemma1_cover` emits for |S|=p, |T|=q.

    Every choice with nonempty intervals survives except those where both
    tails are empty, i.e. the last pick is the last vertex on both sides.
    """
    al, be = a // 2, b // 2

    def _choices(m, k):
        return comb(m - k, k) if m >= k else 0

    def _ends_at_last(m, k):
        if k == 0:
            return 1 if m == 0 else 0
        return comb(m - k - 1, k - 1) if m - k - 1 >= k - 1 >= 0 else 0

    return _choices(p, al) * _choices(q, be) - _ends_at_last(p, al) * _ends_at_last(q, be)


def product_cover(cA: Cover, cB: Cover) -> Cover:
    """Join every block of ``cA`` with every block of ``cB``.

    Both inputs must cover complete families on disjoint ground sets; the
    result covers the single profile (r_A, r_B) of the split. A 0-uniform
    identity cover on either side returns the other cover unchanged.
    """
    A, B = cA.family.vertices, cB.family.vertices
    if set(A) & set(B):
        raise GroundSetOverlap("product_cover needs disjoint ground sets")
    if cA.r == 0 and cA.blocks == (EMPTY_BLOCK,):
        return cB
    if cB.r == 0 and cB.blocks == (EMPTY_BLOCK,):
        return cA
    if not (isinstance(cA.family, CompleteFamily) and isinstance(cB.family, CompleteFamily)):
        raise TypeError("product_cover is defined for covers of complete families")
    blocks = tuple(Block(tuple(sorted(x.parts + y.parts))) for x in cA.blocks for y in cB.blocks)
    fam = mixed_profile(A, B, [(cA.r, cB.r)])
    return Cover(fam, blocks, f"product({cA.construction}|{cB.construction})")


def _sub_cover(vertices: tuple[int, ...], j: int, strategy: ConstructionStrategy) -> Cover:
    """Cover of all j-subsets of ``vertices`` as used inside the recursion."""
    if j == 0:
        return identity_cover(vertices)
    if j > len(vertices):
        return _empty_cover(vertices, j)
    if j % 2 == 1 or j <= 4:
        return baseline_cover(vertices, j)
    return halving_cover(vertices, j, strategy)


def _split(vertices: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    h = (len(vertices) + 1) // 2
    return vertices[:h], vertices[h:]


def halving_cover(vertices: Sequence[int], m: int, strategy: ConstructionStrategy | None = None) -> Cover:
    """Split the ordered vertices in two halves and cover every profile
    (i, m-i) by a product of recursive covers of the halves."""
    strategy = strategy or ConstructionStrategy("halving")
    vs = tuple(vertices)
    if m < 2 or m % 2:
        raise InvalidArity(f"halving needs an even uniformity >= 2, got {m}")
    if len(vs) < m:
        raise InvalidArity(f"need n >= m, got n={len(vs)}, m={m}")
    if len(vs) <= strategy.threshold(m):
        return baseline_cover(vs, m)
    A, B = _split(vs)
    blocks: list[Block] = []
    for i in range(m + 1):
        if i > len(A) or m - i > len(B):
            continue
        blocks.extend(product_cover(_sub_cover(A, i, strategy), _sub_cover(B, m - i, strategy)).blocks)
    return Cover(CompleteFamily(vs, m), tuple(blocks), f"halving;threshold={strategy.threshold(m)}")


def odd_pairing_cover(vertices: Sequence[int], r: int, strategy: ConstructionStrategy | None = None) -> Cover:
    """Cover all r-subsets (r odd) after one split into halves S, T.

    Pair t groups the profiles (2t, r-2t) and (2t+1, r-2t-1). It is covered
    either by interval blocks (one family for both profiles) or, for the
    pairs in ``strategy.pairs_for(r)``, by two product covers.
    """
    strategy = strategy or ConstructionStrategy("odd-pairing")
    vs = tuple(vertices)
    if r % 2 == 0 or r < 1:
        raise InvalidArity(f"odd pairing needs an odd uniformity, got {r}")
    if len(vs) < r:
        raise InvalidArity(f"need n >= r, got n={len(vs)}, r={r}")
    S, T = _split(vs)
    k = (r - 1) // 2
    products = strategy.pairs_for(r)
    blocks: list[Block] = []
    for t in range(k + 1):
        if t in products:
            for i in (2 * t, 2 * t + 1):
                if i <= len(S) and r - i <= len(T):
                    blocks.extend(product_cover(_sub_cover(S, i, strategy), _sub_cover(T, r - i, strategy)).blocks)
        else:
            blocks.extend(_lemma1_blocks(S, T, 2 * t, r - 1 - 2 * t))
    label = "odd-pairing;product_pairs=" + ",".join(map(str, sorted(products)))
    return Cover(CompleteFamily(vs, r), tuple(blocks), label)


def construct(n: int, r: int, strategy: ConstructionStrategy | None = None) -> Cover:
    """Dispatch on ``strategy.name`` for the vertex set ``range(n)``."""
    strategy = strategy or ConstructionStrategy("odd-pairing" if r % 2 else "halving")
    vs = tuple(range(n))
    if strategy.name == "baseline":
        cover = baseline_cover(vs, r)
    elif strategy.name == "halving":
        cover = halving_cover(vs, r, strategy)
    else:
        cover = odd_pairing_cover(vs, r, strategy)
    return Cover(cover.family, cover.blocks, strategy.label() if strategy.name != "baseline" else "baseline")
