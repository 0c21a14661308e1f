import itertools
import random

import pytest

from gpcover.constructions import baseline_count
from gpcover.errors import InvalidArity
from gpcover.search import SearchBudget, block_count, enumerate_blocks, exact_min_cover, partition_count
from gpcover.verifier import verify_exact_cover


def _stirling2(n, k):
    """Stirling numbers of the second kind from the triangle recurrence."""
    row = [1] + [0] * k
    for _ in range(n):
        row = [0] + [j * row[j] + row[j - 1] for j in range(1, k + 1)]
    return row[k]


def _brute_blocks(n, r):
    found = set()
    for w in range(r, n + 1):
        for subset in itertools.combinations(range(n), w):
            for labels in itertools.product(range(r), repeat=w):
                if len(set(labels)) == r:
                    parts = frozenset(
                        frozenset(v for v, lab in zip(subset, labels) if lab == j) for j in range(r)
                    )
                    found.add(parts)
    return found


@pytest.mark.parametrize("n, r, count", [(3, 3, 1), (4, 2, 25), (6, 3, 350)])
def test_enumerate_blocks_counts(n, r, count):
    blocks = enumerate_blocks(n, r)
    assert len(blocks) == count == block_count(n, r)
    assert len(set(blocks)) == count
    assert blocks == sorted(blocks)


@pytest.mark.parametrize("n", range(1, 6))
def test_enumerate_blocks_matches_brute_force(n):
    for r in range(1, n + 1):
        got = {frozenset(frozenset(p) for p in b.parts) for b in enumerate_blocks(n, r)}
        assert got == _brute_blocks(n, r)


def test_partition_count_matches_triangle():
    for n in range(0, 12):
        for k in range(0, n + 1):
            assert partition_count(n, k) == _stirling2(n, k)


@pytest.mark.parametrize("n, r, expected", [(4, 2, 3), (5, 3, 3), (6, 3, 4), (3, 2, 2)])
def test_exact_minimum_small(n, r, expected):
    res = exact_min_cover(n, r)
    assert res.exhausted
    assert res.minimum == expected == len(res.witness)
    assert verify_exact_cover(res.witness).is_exact


@pytest.mark.parametrize("m", range(1, 6))
def test_n_equals_r_needs_one_block(m):
    assert exact_min_cover(m, m).minimum == 1


def test_f4_of_small_n_does_not_exceed_baseline():
    res = exact_min_cover(5, 4)
    assert res.exhausted
    assert res.minimum <= baseline_count(5, 4)
    assert verify_exact_cover(res.witness).is_exact


def test_witness_independent_of_block_order():
    blocks = enumerate_blocks(5, 3)
    ref = exact_min_cover(5, 3)
    rng = random.Random(7)
    for _ in range(3):
        rng.shuffle(blocks)
        res = exact_min_cover(5, 3, blocks=list(blocks))
        assert res.minimum == ref.minimum
        assert res.witness.blocks == ref.witness.blocks


def test_witness_is_lexicographically_least():
    ref = exact_min_cover(5, 2)
    plain = exact_min_cover(5, 2, lex_least=False)
    assert ref.minimum == plain.minimum == 4
    assert ref.witness.blocks <= tuple(sorted(plain.witness.blocks))


def test_budget_exhaustion_returns_incumbent():
    res = exact_min_cover(6, 2, SearchBudget(max_nodes=5))
    assert not res.exhausted
    assert res.minimum == 5
    assert verify_exact_cover(res.witness).is_exact


def test_search_rejects_bad_arity():
    with pytest.raises(InvalidArity):
        exact_min_cover(3, 4)
    with pytest.raises(ValueError):
        SearchBudget(max_nodes=0)
