"""Exact predicates and parameters: intersection properties, matching
and covering numbers, and containment of six path/cycle pattern kinds.

Pattern semantics, for s edges E_0..E_{s-1} (paths index linearly,
cycles wrap):

  linear    consecutive intersections have size exactly 1, all other
            pairs are disjoint; a linear 3-cycle additionally needs its
            three junction vertices distinct, i.e. empty triple
            intersection (automatic for s >= 4).
  minimal   consecutive intersections nonempty, all other pairs
            disjoint; a minimal cycle additionally has no vertex lying
            in every edge (again automatic for s >= 4).
  berge     consecutive intersections nonempty AND there is a system of
            distinct representatives: a path needs s-1 distinct
            connector vertices v_i in E_{i-1} cap E_i, a cycle needs s
            of them cyclically.

Paths have s edges (not s-1).  Every detector is exact; tests compare
against a permutation-oracle that tries all orderings of all s-subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .combinat import binom, mask_of, vertices_of
from .core import Hypergraph

PATTERN_KINDS = (
    "berge-path",
    "berge-cycle",
    "minimal-path",
    "minimal-cycle",
    "linear-path",
    "linear-cycle",
)


@dataclass(frozen=True)
class PatternSpec:
    """One of the six pattern kinds with its edge count s."""

    kind: str
    s: int

    def __post_init__(self):
        if self.kind not in PATTERN_KINDS:
            raise ValueError(f"unknown pattern kind {self.kind!r}; choose from {PATTERN_KINDS}")
        least = 3 if self.kind.endswith("cycle") else 2
        if self.s < least:
            raise ValueError(f"{self.kind} needs s >= {least}, got s={self.s}")

    @property
    def is_cycle(self) -> bool:
        return self.kind.endswith("cycle")

    @property
    def flavor(self) -> str:
        return self.kind.split("-")[0]


@dataclass(frozen=True)
class Witness:
    """Edges (as indices into H.edges) realizing a structure, with the
    connector/junction vertices where the pattern kind defines them."""

    role: str
    edge_indices: tuple[int, ...]
    vertices: tuple[int, ...] = ()


def pattern_feasible(n: int, k: int, p: PatternSpec) -> None:
    """Raise if no (n, k) hypergraph can possibly contain the pattern.

    The checks are necessary conditions (vertex demands and edge
    supply); passing them does not promise a realization exists.
    """
    s = p.s
    if binom(n, k) < s:
        raise ValueError(f"pattern needs {s} distinct edges but C({n},{k}) = {binom(n, k)}")
    need = 0
    if p.kind == "linear-path":
        need = s * (k - 1) + 1
    elif p.kind == "linear-cycle":
        need = s * (k - 1)
    elif p.kind == "minimal-path":
        # edges 0, 2, 4, ... are pairwise disjoint
        need = ((s + 1) // 2) * k
    elif p.kind == "minimal-cycle":
        need = (s * k + 1) // 2 if s == 3 else (s // 2) * k
    elif p.kind == "berge-path":
        need = max(k, s - 1)
    elif p.kind == "berge-cycle":
        need = max(k, s)
    if n < need:
        raise ValueError(f"{p.kind} with s={p.s} needs n >= {need}, got n={n}")


# --- intersection predicates ---------------------------------------------


def is_t_intersecting(h: Hypergraph, t: int) -> bool:
    """Every pair of distinct edges shares >= t vertices."""
    if t < 1:
        raise ValueError(f"need t >= 1, got t={t}")
    edges = h.edges
    for i in range(len(edges)):
        ei = edges[i]
        for j in range(i + 1, len(edges)):
            if (ei & edges[j]).bit_count() < t:
                return False
    return True


def is_d_wise_t_intersecting(h: Hypergraph, d: int, t: int) -> bool:
    """Every d edges (with repetition, so effectively every min(d, m)
    distinct edges) share >= t vertices."""
    if d < 2:
        raise ValueError(f"need d >= 2, got d={d}")
    if t < 1:
        raise ValueError(f"need t >= 1, got t={t}")
    m = len(h.edges)
    if m == 0:
        return True
    r = min(d, m)
    for group in combinations(h.edges, r):
        inter = -1
        for e in group:
            inter &= e
        if inter.bit_count() < t:
            return False
    return True


def common_intersection(h: Hypergraph) -> int:
    """Mask of vertices lying in every edge; empty families are refused."""
    if not h.edges:
        raise ValueError("common intersection of an empty family is undefined")
    inter = -1
    for e in h.edges:
        inter &= e
    return inter


# --- matching and covering ------------------------------------------------


def matching_number(h: Hypergraph) -> int:
    """Exact max number of pairwise disjoint edges (branch and bound)."""
    masks = h.edges
    m = len(masks)
    if m == 0:
        return 0
    # greedy packing gives the initial incumbent and a hot start
    best = 0
    used = 0
    for e in masks:
        if not e & used:
            used |= e
            best += 1
    universe = m

    def rec(start: int, used: int, count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        avail = 0
        free = []
        for i in range(start, universe):
            if not masks[i] & used:
                free.append(i)
                avail += 1
        # even taking every remaining disjoint edge cannot help
        if count + avail <= best:
            return
        for pos, i in enumerate(free):
            if count + (avail - pos) <= best:
                return
            rec(i + 1, used | masks[i], count + 1)

    rec(0, 0, 0)
    return best


def covering_number(h: Hypergraph) -> int:
    """Exact min size of a vertex set meeting every edge."""
    masks = list(h.edges)
    if not masks:
        return 0

    # greedy cover: repeatedly take a max-degree vertex
    def greedy(remaining: list[int]) -> int:
        size = 0
        while remaining:
            counts: dict[int, int] = {}
            for e in remaining:
                for v in vertices_of(e):
                    counts[v] = counts.get(v, 0) + 1
            v = max(counts, key=lambda x: (counts[x], -x))
            bit = 1 << v
            remaining = [e for e in remaining if not e & bit]
            size += 1
        return size

    best = greedy(masks)

    def rec(remaining: list[int], size: int) -> None:
        nonlocal best
        if not remaining:
            if size < best:
                best = size
            return
        if size + 1 >= best:
            return
        # every cover must hit the first uncovered edge somewhere
        for v in vertices_of(remaining[0]):
            bit = 1 << v
            rec([e for e in remaining if not e & bit], size + 1)

    rec(masks, 0)
    return best


# --- pattern containment ---------------------------------------------------


def _adjacent(i: int, j: int, s: int, cycle: bool) -> bool:
    if abs(i - j) == 1:
        return True
    return cycle and abs(i - j) == s - 1


def _pair_ok(flavor: str, inter: int, adjacent: bool) -> bool:
    if adjacent:
        if flavor == "linear":
            return inter.bit_count() == 1
        return inter != 0
    if flavor == "berge":
        return True
    return inter == 0


def _sdr_exists(sets: list[int]) -> tuple[int, ...] | None:
    """Distinct representatives, one per set, or None.  Returns the
    chosen vertices in the original set order."""
    order = sorted(range(len(sets)), key=lambda i: sets[i].bit_count())
    chosen = [0] * len(sets)

    def rec(pos: int, used: int) -> bool:
        if pos == len(order):
            return True
        avail = sets[order[pos]] & ~used
        while avail:
            b = avail & -avail
            avail ^= b
            chosen[order[pos]] = b.bit_length() - 1
            if rec(pos + 1, used | b):
                return True
        return False

    if rec(0, 0):
        return tuple(chosen)
    return None


def _completion(edges: list[int], p: PatternSpec) -> tuple[int, ...] | None:
    """Final whole-tuple conditions; returns connector vertices (may be
    empty) if the placed tuple realizes the pattern, else None."""
    s = p.s
    flavor = p.flavor
    if flavor == "berge":
        if p.is_cycle:
            sets = [edges[i] & edges[(i + 1) % s] for i in range(s)]
        else:
            sets = [edges[i] & edges[i + 1] for i in range(s - 1)]
        return _sdr_exists(sets)
    if s == 3 and p.is_cycle:
        # distinct junctions / no global vertex, both = empty triple meet
        if edges[0] & edges[1] & edges[2]:
            return None
    if flavor == "linear":
        if p.is_cycle:
            junctions = [edges[i] & edges[(i + 1) % s] for i in range(s)]
        else:
            junctions = [edges[i] & edges[i + 1] for i in range(s - 1)]
        return tuple(j.bit_length() - 1 for j in junctions)
    return ()


def _search_pattern(
    edge_masks: tuple[int, ...] | list[int],
    p: PatternSpec,
    order: list[int],
    required: int | None = None,
    required_positions: tuple[int, ...] | None = None,
) -> Witness | None:
    """DFS over pattern positions.  `order` fixes candidate preference
    (correctness never depends on it).  With `required`, only
    realizations using that edge index are sought, pinned in turn at
    each position in required_positions."""
    s = p.s
    cycle = p.is_cycle
    flavor = p.flavor
    placed = [0] * s
    placed_idx = [-1] * s

    def rec(pos: int, used: frozenset[int], pin_at: int) -> Witness | None:
        if pos == s:
            verts = _completion(placed, p)
            if verts is None:
                return None
            return Witness("pattern", tuple(placed_idx), verts)
        cands = order if pos != pin_at else [required]
        for i in cands:
            if i in used:
                continue
            e = edge_masks[i]
            ok = True
            for j in range(pos):
                if not _pair_ok(flavor, placed[j] & e, _adjacent(j, pos, s, cycle)):
                    ok = False
                    break
            if not ok:
                continue
            placed[pos] = e
            placed_idx[pos] = i
            w = rec(pos + 1, used | {i}, pin_at)
            if w is not None:
                return w
        return None

    if required is None:
        return rec(0, frozenset(), -1)
    for pin in required_positions or range(s):
        w = rec(0, frozenset(), pin)
        if w is not None:
            return w
    return None


def _degree_sum_order(h: Hypergraph) -> list[int]:
    # vertex-degree sums, descending; ties break on index for determinism
    deg: dict[int, int] = {}
    for e in h.edges:
        for v in vertices_of(e):
            deg[v] = deg.get(v, 0) + 1
    sums = [sum(deg[v] for v in vertices_of(e)) for e in h.edges]
    return sorted(range(len(h.edges)), key=lambda i: (-sums[i], i))


def contains_pattern(h: Hypergraph, p: PatternSpec) -> Witness | None:
    """A witness realization if H contains the pattern, else None."""
    pattern_feasible(h.n, h.k, p)
    if len(h.edges) < p.s:
        return None
    return _search_pattern(h.edges, p, _degree_sum_order(h))


def is_pattern_free(h: Hypergraph, p: PatternSpec) -> bool:
    return contains_pattern(h, p) is None


def creates_pattern(edge_masks: list[int], new_mask: int, p: PatternSpec) -> bool:
    """Given a pattern-free edge list, does appending new_mask create
    the pattern?  Only realizations through the new edge are searched;
    cycles pin it at position 0 (rotation), paths at the first half of
    positions (reflection)."""
    masks = list(edge_masks) + [new_mask]
    req = len(masks) - 1
    if p.is_cycle:
        pins: tuple[int, ...] = (0,)
    else:
        pins = tuple(range((p.s + 1) // 2))
    order = list(range(len(masks)))
    return _search_pattern(masks, p, order, required=req, required_positions=pins) is not None
