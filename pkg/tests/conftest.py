"""Session-scoped corpora shared between test modules.

The atlases enumerate small graphs up to isomorphism with well-known class
counts asserted, so the exhaustive suites below really do cover every small
graph once.
"""

import random

import pytest

import oracles


@pytest.fixture(scope="session")
def atlas6():
    """All graphs (connected or not) on 1..6 vertices, one per class."""
    atlas = oracles.graph_atlas(6)
    assert [len(atlas[n]) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]
    return atlas


@pytest.fixture(scope="session")
def connected_atlas6(atlas6):
    out = {}
    for n, classes in atlas6.items():
        keep = []
        for rows in classes:
            edges = oracles.rows_to_edges(rows)
            if oracles.connected(n, edges):
                keep.append(edges)
        out[n] = keep
    assert [len(out[n]) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]
    return out


@pytest.fixture(scope="session")
def diam2_atlas7(atlas6):
    """Connected diameter-<=2 graphs on 7 vertices, one per class, built by
    extending the 6-vertex atlas with every possible new neighborhood."""
    found = set()
    for rows in atlas6[6]:
        base = oracles.rows_to_edges(rows)
        for mask in range(1, 1 << 6):
            edges = base + tuple((u, 6) for u in range(6) if mask >> u & 1)
            rows7 = [0] * 7
            for u, v in edges:
                rows7[u] |= 1 << v
                rows7[v] |= 1 << u
            if not oracles.diameter_at_most_2(rows7):
                continue
            if not oracles.connected(7, edges):
                continue
            found.add(oracles.canonical_form(7, edges))
    # spot-check coverage: random diameter-2 graphs must already be present
    rng = random.Random(20260816)
    for _ in range(60):
        while True:
            edges = tuple((u, v) for u in range(7) for v in range(u + 1, 7)
                          if rng.random() < 0.55)
            rows7 = [0] * 7
            for u, v in edges:
                rows7[u] |= 1 << v
                rows7[v] |= 1 << u
            if oracles.connected(7, edges) and \
                    oracles.diameter_at_most_2(rows7):
                break
        assert oracles.canonical_form(7, edges) in found
    return [oracles.rows_to_edges(rows) for rows in sorted(found)]


@pytest.fixture(scope="session")
def weighted_corpus():
    """500 seeded random connected weighted graphs with m <= 12, as
    (n, edges, lengths, s, t) tuples."""
    rng = random.Random(99173)
    out = []
    while len(out) < 500:
        n = rng.randint(3, 8)
        want = rng.randint(n - 1, min(12, n * (n - 1) // 2))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        edges = sorted(pairs[:want])
        if not oracles.connected(n, edges):
            continue
        lengths = [rng.randint(1, 4) for _ in edges]
        s = rng.randrange(n)
        t = (s + 1 + rng.randrange(n - 1)) % n
        out.append((n, edges, lengths, s, t))
    return out
