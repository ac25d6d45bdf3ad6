"""Seeded random hypergraph generation for test corpora.

Core computations are deterministic and seed-free; randomness lives
here only, behind explicit seeds, so corpora regenerate identically.
"""

from __future__ import annotations

import random

from .combinat import binom, iter_subsets
from .core import Hypergraph

MATERIALIZE_CAP = 200_000


def random_hypergraph(rng: random.Random, n: int, k: int, m: int) -> Hypergraph:
    """m distinct uniformly chosen k-edges on 1..n."""
    total = binom(n, k)
    if not 0 <= m <= total:
        raise ValueError(f"cannot pick {m} distinct edges from C({n},{k}) = {total}")
    if total <= MATERIALIZE_CAP:
        edges = rng.sample(list(iter_subsets(n, k)), m)
    else:
        chosen: set[int] = set()
        verts = list(range(1, n + 1))
        while len(chosen) < m:
            mask = 0
            for v in rng.sample(verts, k):
                mask |= 1 << v
            chosen.add(mask)
        edges = list(chosen)
    return Hypergraph.from_masks(n, k, edges)


def random_instance(
    rng: random.Random,
    n_range: tuple[int, int] = (4, 16),
    k_range: tuple[int, int] = (2, 5),
    max_edges: int = 64,
) -> Hypergraph:
    """One random instance with n, k, and edge count drawn from ranges."""
    k = rng.randint(*k_range)
    n = rng.randint(max(n_range[0], k + 1), n_range[1])
    m = rng.randint(0, min(binom(n, k), max_edges))
    return random_hypergraph(rng, n, k, m)
