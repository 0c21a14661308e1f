import itertools
from collections import Counter

import pytest

ACCEPTANCE_LINES: list[str] = []


def brute_exact(blocks, ground, r, member=None):
    """Independent exactness oracle: every r-subset of ``ground`` accepted by
    ``member`` is hit exactly once and nothing else is hit."""
    member = member or (lambda e: True)
    hits = Counter()
    for b in blocks:
        for choice in itertools.product(*b.parts):
            hits[frozenset(choice)] += 1
    targets = {frozenset(e) for e in itertools.combinations(ground, r) if member(e)}
    return set(hits) == targets and all(m == 1 for m in hits.values())


def profile_member(S, profiles):
    S = set(S)

    def member(e):
        a = sum(1 for v in e if v in S)
        return (a, len(e) - a) in profiles

    return member


@pytest.fixture
def acceptance_report():
    def record(label: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" -- {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
