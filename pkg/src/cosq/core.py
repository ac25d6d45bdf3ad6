"""Exact codegree computations on k-uniform hypergraphs.

A hypergraph is an immutable (n, k, edges) triple with edges stored as
ascending bitmasks (vertex i is bit i), i.e. in colex order.  The
codegree of a vertex set S is the number of edges containing S.  The
central quantity is the sum of squared codegrees over all (k-1)-sets,
written co2 here; summing codegrees themselves at level l always gives
C(k, l) * |edges|, which tests lean on as a cheap full-surface check.

Everything is integer arithmetic; nothing here rounds.

Text format, used by the CLI and the service:

    # optional comments
    n k
    v1 v2 ... vk        (strictly increasing labels, one edge per line)

Duplicate edges are an error; the writer emits edges in colex order, so
parse/format round-trips are byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .combinat import binom, check_mask, mask_of, rank_subset, vertices_of


@dataclass(frozen=True)
class Hypergraph:
    """k-uniform hypergraph on 1..n; edges are ascending bitmasks."""

    n: int
    k: int
    edges: tuple[int, ...]

    def __post_init__(self):
        n, k = self.n, self.k
        if not (isinstance(n, int) and isinstance(k, int)):
            raise ValueError("n and k must be integers")
        if not (2 <= k < n <= 64):
            raise ValueError(f"need 2 <= k < n <= 64, got n={n} k={k}")
        prev = -1
        for e in self.edges:
            check_mask(e, n)
            if e.bit_count() != k:
                raise ValueError(
                    f"edge {sorted(vertices_of(e))} has {e.bit_count()} vertices, expected {k}"
                )
            if e <= prev:
                raise ValueError("edges must be strictly ascending masks (duplicates?)")
            prev = e

    @classmethod
    def from_masks(cls, n: int, k: int, masks: Iterable[int]) -> "Hypergraph":
        ms = sorted(masks)
        for a, b in zip(ms, ms[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {vertices_of(a)}")
        return cls(n, k, tuple(ms))

    @classmethod
    def from_vertex_lists(cls, n: int, k: int, lists: Iterable[Iterable[int]]) -> "Hypergraph":
        return cls.from_masks(n, k, (mask_of(vs) for vs in lists))

    def edge_count(self) -> int:
        return len(self.edges)

    def vertex_lists(self) -> list[tuple[int, ...]]:
        return [vertices_of(e) for e in self.edges]


@dataclass(frozen=True)
class CodegreeVector:
    """Codegrees of all ell-sets, keyed by colex rank; absent rank = 0."""

    n: int
    k: int
    ell: int
    entries: Mapping[int, int] = field(default_factory=dict)

    def entry(self, rank: int) -> int:
        if not 0 <= rank < binom(self.n, self.ell):
            raise ValueError(f"rank {rank} out of range for C({self.n},{self.ell})")
        return self.entries.get(rank, 0)

    def total(self) -> int:
        return sum(self.entries.values())

    def l2sq(self) -> int:
        return sum(d * d for d in self.entries.values())

    def max(self) -> int:
        return max(self.entries.values(), default=0)

    def support(self) -> list[int]:
        return sorted(self.entries)


def _check_level(k: int, ell: int) -> None:
    if not 0 <= ell <= k:
        raise ValueError(f"level must satisfy 0 <= ell <= k, got {ell}")


def codegree(h: Hypergraph, s_mask: int) -> int:
    """Number of edges containing the vertex set s_mask."""
    check_mask(s_mask, h.n)
    return sum(1 for e in h.edges if e & s_mask == s_mask)


def _sub_counts(h: Hypergraph, ell: int) -> dict[int, int]:
    """mask -> codegree over all ell-subsets that occur inside edges."""
    counts: dict[int, int] = {}
    if ell == 0:
        return {0: len(h.edges)} if h.edges else {}
    if ell == h.k - 1:
        # hot path: drop one vertex at a time
        for e in h.edges:
            rest = e
            while rest:
                b = rest & -rest
                rest ^= b
                sub = e ^ b
                counts[sub] = counts.get(sub, 0) + 1
        return counts
    if ell == h.k:
        return {e: 1 for e in h.edges}
    for e in h.edges:
        for pick in combinations(vertices_of(e), ell):
            sub = 0
            for v in pick:
                sub |= 1 << v
            counts[sub] = counts.get(sub, 0) + 1
    return counts


def codegree_vector(h: Hypergraph, ell: int | None = None) -> CodegreeVector:
    """Codegrees of every ell-set (default ell = k-1), keyed by colex rank."""
    if ell is None:
        ell = h.k - 1
    _check_level(h.k, ell)
    counts = _sub_counts(h, ell)
    entries = {rank_subset(mask, ell): d for mask, d in counts.items()}
    return CodegreeVector(h.n, h.k, ell, entries)


def co2(h: Hypergraph, ell: int | None = None) -> int:
    """Sum of squared codegrees over all ell-sets (default ell = k-1)."""
    if ell is None:
        ell = h.k - 1
    _check_level(h.k, ell)
    return sum(d * d for d in _sub_counts(h, ell).values())


def co2_delta(h: Hypergraph, e_mask: int) -> int:
    """Increment of co2 at level k-1 when edge e_mask joins h.

    co2(h + e) == co2(h) + co2_delta(h, e).  The new edge lifts each of
    its k codegrees d to d+1, adding 2d+1 apiece.
    """
    check_mask(e_mask, h.n)
    if e_mask.bit_count() != h.k:
        raise ValueError(f"edge must have exactly {h.k} vertices")
    if e_mask in h.edges:
        raise ValueError("edge already present")
    delta = 0
    rest = e_mask
    while rest:
        b = rest & -rest
        rest ^= b
        sub = e_mask ^ b
        d = sum(1 for f in h.edges if f & sub == sub)
        delta += 2 * d + 1
    return delta


def add_edge(h: Hypergraph, e_mask: int) -> Hypergraph:
    """New hypergraph with one more edge."""
    if e_mask in h.edges:
        raise ValueError("edge already present")
    return Hypergraph.from_masks(h.n, h.k, h.edges + (e_mask,))


# --- text format ---------------------------------------------------------


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the text format; errors carry 1-based line numbers."""
    header: tuple[int, int] | None = None
    masks: list[int] = []
    seen: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers, got {raw!r}") from None
        if header is None:
            if len(nums) != 2:
                raise ValueError(f"line {lineno}: header must be 'n k'")
            n, k = nums
            if not (2 <= k < n <= 64):
                raise ValueError(f"line {lineno}: need 2 <= k < n <= 64, got n={n} k={k}")
            header = (n, k)
            continue
        n, k = header
        if len(nums) != k:
            raise ValueError(f"line {lineno}: expected {k} labels, got {len(nums)}")
        if any(not 1 <= v <= n for v in nums):
            raise ValueError(f"line {lineno}: labels must lie in 1..{n}")
        if any(a >= b for a, b in zip(nums, nums[1:])):
            raise ValueError(f"line {lineno}: labels must be strictly increasing")
        mask = mask_of(nums)
        if mask in seen:
            raise ValueError(f"line {lineno}: duplicate of edge on line {seen[mask]}")
        seen[mask] = lineno
        masks.append(mask)
    if header is None:
        raise ValueError("empty input: missing 'n k' header")
    return Hypergraph.from_masks(header[0], header[1], masks)


def format_hypergraph(h: Hypergraph) -> str:
    """Canonical text form: header, then edges in colex order."""
    lines = [f"{h.n} {h.k}"]
    for e in h.edges:
        lines.append(" ".join(str(v) for v in vertices_of(e)))
    return "\n".join(lines) + "\n"


def load_hypergraph(path: str) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_hypergraph(fh.read())


def save_hypergraph(h: Hypergraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_hypergraph(h))
