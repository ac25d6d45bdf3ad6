"""Shared oracles and corpora.

The oracles here deliberately avoid the library's bitmask machinery:
they work on vertex tuples and try everything, so a bug in the fast
path cannot hide in its own mirror image.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

import pytest

from cosq.core import Hypergraph


def edge_sets(h: Hypergraph) -> list[frozenset[int]]:
    return [frozenset(vs) for vs in h.vertex_lists()]


def naive_co2(h: Hypergraph, ell: int) -> int:
    """Sum of squared ell-set codegrees by direct enumeration."""
    edges = edge_sets(h)
    total = 0
    for sub in combinations(range(1, h.n + 1), ell):
        s = frozenset(sub)
        d = sum(1 for e in edges if s <= e)
        total += d * d
    return total


def naive_degree_sum(h: Hypergraph, ell: int) -> int:
    edges = edge_sets(h)
    return sum(
        sum(1 for e in edges if frozenset(sub) <= e)
        for sub in combinations(range(1, h.n + 1), ell)
    )


def _naive_sdr(sets: list[frozenset[int]]) -> bool:
    for pick in product(*sets):
        if len(set(pick)) == len(sets):
            return True
    return not sets


def naive_contains_pattern(h: Hypergraph, kind: str, s: int) -> bool:
    """Try every ordered s-tuple of distinct edges against the raw
    definitions; exponential, cross-check only."""
    edges = edge_sets(h)
    if len(edges) < s:
        return False
    cycle = kind.endswith("cycle")
    flavor = kind.split("-")[0]

    def adjacent(a: int, b: int) -> bool:
        return b - a == 1 or (cycle and a == 0 and b == s - 1)

    for tup in permutations(range(len(edges)), s):
        ms = [edges[i] for i in tup]
        if flavor == "berge":
            if cycle:
                links = [ms[i] & ms[(i + 1) % s] for i in range(s)]
            else:
                links = [ms[i] & ms[i + 1] for i in range(s - 1)]
            if all(links) and _naive_sdr(links):
                return True
            continue
        ok = True
        for a in range(s):
            for b in range(a + 1, s):
                inter = ms[a] & ms[b]
                if adjacent(a, b):
                    good = len(inter) == 1 if flavor == "linear" else bool(inter)
                else:
                    good = not inter
                if not good:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        if cycle and s == 3 and ms[0] & ms[1] & ms[2]:
            continue
        return True
    return False


def naive_matching_number(h: Hypergraph) -> int:
    edges = edge_sets(h)
    best = 0
    for r in range(len(edges), 0, -1):
        for group in combinations(edges, r):
            union = set()
            total = 0
            for e in group:
                union |= e
                total += len(e)
            if len(union) == total:
                return r
    return best


def naive_covering_number(h: Hypergraph) -> int:
    edges = edge_sets(h)
    if not edges:
        return 0
    verts = sorted(set().union(*edges))
    for r in range(0, len(verts) + 1):
        for cover in combinations(verts, r):
            cs = set(cover)
            if all(e & cs for e in edges):
                return r
    raise AssertionError("unreachable")


@pytest.fixture(scope="session")
def small_random_hypergraphs() -> list[Hypergraph]:
    """Deterministic mixed corpus for cross-checking detectors."""
    from cosq.corpus import random_hypergraph

    rng = random.Random(1405)
    out = []
    for _ in range(120):
        k = rng.randint(2, 4)
        n = rng.randint(k + 1, 9)
        from cosq.combinat import binom

        m = rng.randint(0, min(binom(n, k), 10))
        out.append(random_hypergraph(rng, n, k, m))
    return out
