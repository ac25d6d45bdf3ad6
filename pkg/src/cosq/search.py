"""Certified maximum-co2 search under downward-closed constraints.

The optimum of co2 over families satisfying a downward-closed
constraint is attained at a maximal family, because adding any edge
strictly increases co2.  The engine therefore enumerates families by
canonical extension: edges carry their colex rank, a family is built by
appending edges of strictly increasing rank, and every family
corresponds to exactly one chain, so nothing is visited twice and the
set of optima found is complete.

Branch-and-bound prunes a node when the quadratic codegree bound,
evaluated at min(m_now + |addable|, valid L1 cap), falls strictly below
the incumbent; ties are never pruned, which keeps complete optima sets.
The comparison is done in integers by cross-multiplying with
C(n-1, k-1), so no rationals appear in the hot loop.

Constraints that are decided by edge pairs (t-intersecting, matching
number at most 1, two-edge patterns) become precomputed compatibility
bitmasks; the rest re-check each candidate against the grown family
(downward closure makes the one-new-edge check sufficient).

Brute-force mode is the same chain walk with no bound pruning and no
seeded incumbent; only constraint violations cut branches.  It serves
as the oracle for the branch-and-bound mode.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import combinations

from .combinat import binom, iter_subsets, rank_subset
from .core import Hypergraph, co2
from .props import PatternSpec, contains_pattern, creates_pattern, pattern_feasible

SEARCH_SPACE_CAP = 2_000_000  # edges materialized per search
BRUTE_FORCE_CAP = 30  # brute force wants C(n,k) at most this


# --- constraints -----------------------------------------------------------


class Constraint:
    """Downward-closed property of an edge set (masks over one n, k)."""

    pairwise_exact = False  # True when pair_ok alone decides membership
    has_pair_filter = False  # True when pair_ok is a useful necessary test

    def validate(self, n: int, k: int) -> None:
        pass

    def pair_ok(self, a: int, b: int) -> bool:
        return True

    def add_ok(self, cur: list[int], new: int) -> bool:
        """Whether cur + [new] stays valid, given cur valid and all
        pairs already screened by pair_ok."""
        return True

    def full_check(self, masks: list[int], n: int, k: int) -> bool:
        raise NotImplementedError

    def l1_cap(self, n: int, k: int) -> int | None:
        """A proven cap on the size of valid families, or None."""
        return None

    def describe(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class TIntersecting(Constraint):
    t: int = 1

    pairwise_exact = True
    has_pair_filter = True

    def validate(self, n, k):
        if not 1 <= self.t <= k:
            raise ValueError(f"t-intersecting needs 1 <= t <= k, got t={self.t}")

    def pair_ok(self, a, b):
        return (a & b).bit_count() >= self.t

    def full_check(self, masks, n, k):
        return all(self.pair_ok(a, b) for a, b in combinations(masks, 2))

    def l1_cap(self, n, k):
        t = self.t
        if t == k:
            return 1  # two distinct k-sets share fewer than k vertices
        if t == 1:
            return binom(n - 1, k - 1) if n >= 2 * k else None
        return binom(n - t, k - t) if n >= (t + 1) * (k - t + 1) else None

    def describe(self):
        return f"t-intersecting(t={self.t})"


@dataclass(frozen=True)
class DWiseTIntersecting(Constraint):
    d: int
    t: int

    has_pair_filter = True

    @property
    def pairwise_exact(self):  # type: ignore[override]
        return self.d == 2

    def validate(self, n, k):
        if self.d < 2:
            raise ValueError(f"d-wise needs d >= 2, got d={self.d}")
        if not 1 <= self.t <= k:
            raise ValueError(f"d-wise needs 1 <= t <= k, got t={self.t}")

    def pair_ok(self, a, b):
        # d-tuples may repeat edges, so every pair must already work
        return (a & b).bit_count() >= self.t

    def add_ok(self, cur, new):
        r = min(self.d, len(cur) + 1)
        if r <= 1:
            return True
        for group in combinations(cur, r - 1):
            inter = new
            for e in group:
                inter &= e
            if inter.bit_count() < self.t:
                return False
        return True

    def full_check(self, masks, n, k):
        if not masks:
            return True
        r = min(self.d, len(masks))
        for group in combinations(masks, r):
            inter = -1
            for e in group:
                inter &= e
            if inter.bit_count() < self.t:
                return False
        return True

    def l1_cap(self, n, k):
        # d-wise t-intersecting families are pairwise t-intersecting
        return TIntersecting(self.t).l1_cap(n, k)

    def describe(self):
        return f"d-wise-t-intersecting(d={self.d},t={self.t})"


def _exists_matching(masks: list[int], size: int) -> bool:
    """Any `size` pairwise disjoint edges among masks?"""
    if size <= 0:
        return True
    m = len(masks)

    def rec(start: int, used: int, need: int) -> bool:
        avail = [i for i in range(start, m) if not masks[i] & used]
        if len(avail) < need:
            return False
        for pos, i in enumerate(avail):
            if len(avail) - pos < need:
                return False
            if need == 1 or rec(i + 1, used | masks[i], need - 1):
                return True
        return False

    return rec(0, 0, size)


@dataclass(frozen=True)
class MatchingAtMost(Constraint):
    s: int

    @property
    def pairwise_exact(self):  # type: ignore[override]
        return self.s == 1  # matching number <= 1 is exactly intersecting

    @property
    def has_pair_filter(self):  # type: ignore[override]
        return self.s == 1

    def validate(self, n, k):
        if self.s < 1:
            raise ValueError(f"matching-at-most needs s >= 1, got s={self.s}")

    def pair_ok(self, a, b):
        if self.s == 1:
            return bool(a & b)
        return True

    def add_ok(self, cur, new):
        if self.s == 1:
            return True  # pair masks already enforce it
        # an (s+1)-matching appearing now must use `new` plus s disjoint
        # old edges, so it suffices to look for those
        return not _exists_matching([f for f in cur if not f & new], self.s)

    def full_check(self, masks, n, k):
        return not _exists_matching(list(masks), self.s + 1)

    def l1_cap(self, n, k):
        if self.s >= n // k:
            return binom(n, k)  # vacuous: no family has a larger matching
        if n >= (2 * self.s + 1) * k - self.s:
            return binom(n, k) - binom(n - self.s, k)
        return None

    def describe(self):
        return f"matching-at-most(s={self.s})"


@dataclass(frozen=True)
class PatternFree(Constraint):
    pattern: PatternSpec

    @property
    def pairwise_exact(self):  # type: ignore[override]
        return self.pattern.s == 2

    @property
    def has_pair_filter(self):  # type: ignore[override]
        return self.pattern.s == 2

    def validate(self, n, k):
        pattern_feasible(n, k, self.pattern)

    def pair_ok(self, a, b):
        p = self.pattern
        if p.s != 2:
            return True
        inter = (a & b).bit_count()
        if p.kind == "linear-path":
            return inter != 1
        # a 2-edge minimal or berge path is just two meeting edges
        return inter == 0

    def add_ok(self, cur, new):
        if self.pattern.s == 2:
            return True
        return not creates_pattern(cur, new, self.pattern)

    def full_check(self, masks, n, k):
        h = Hypergraph.from_masks(n, k, masks)
        return contains_pattern(h, self.pattern) is None

    def l1_cap(self, n, k):
        p = self.pattern
        if p.s != 3:
            return None
        if p.kind == "minimal-path" and k >= 3 and n >= 2 * k:
            return binom(n - 1, k - 1)
        if p.kind == "minimal-cycle" and k >= 3 and 2 * n >= 3 * k:
            return binom(n - 1, k - 1)
        if p.kind == "linear-cycle" and k == 3 and n >= 6:
            return binom(n - 1, 2)
        return None

    def describe(self):
        return f"pattern-free({self.pattern.kind},s={self.pattern.s})"


@dataclass(frozen=True)
class Conjunction(Constraint):
    parts: tuple[Constraint, ...] = ()

    @property
    def pairwise_exact(self):  # type: ignore[override]
        return all(p.pairwise_exact for p in self.parts)

    @property
    def has_pair_filter(self):  # type: ignore[override]
        return any(p.has_pair_filter for p in self.parts)

    def validate(self, n, k):
        for p in self.parts:
            p.validate(n, k)

    def pair_ok(self, a, b):
        return all(p.pair_ok(a, b) for p in self.parts)

    def add_ok(self, cur, new):
        return all(p.add_ok(cur, new) for p in self.parts if not p.pairwise_exact)

    def full_check(self, masks, n, k):
        return all(p.full_check(masks, n, k) for p in self.parts)

    def l1_cap(self, n, k):
        caps = [c for c in (p.l1_cap(n, k) for p in self.parts) if c is not None]
        return min(caps) if caps else None

    def describe(self):
        if not self.parts:
            return "unconstrained"
        return " & ".join(p.describe() for p in self.parts)


def _leaves(c: Constraint) -> list[Constraint]:
    if isinstance(c, Conjunction):
        out = []
        for p in c.parts:
            out.extend(_leaves(p))
        return out
    return [c]


# --- problems and results --------------------------------------------------


@dataclass(frozen=True)
class SearchProblem:
    n: int
    k: int
    constraint: Constraint = Conjunction()
    mode: str = "branch-and-bound"  # or "brute-force"
    node_budget: int = 10**9
    time_budget_s: float | None = None
    workers: int = 1
    optima_cap: int = 64
    # incumbents must additionally have common intersection smaller than
    # this t (conjecture probes over nontrivial families); None = report all
    require_nontrivial: int | None = None
    allow_large: bool = False  # lifts the brute-force size guard

    def __post_init__(self):
        if self.mode not in ("branch-and-bound", "brute-force"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.node_budget < 1:
            raise ValueError("node budget must be >= 1")
        if self.optima_cap < 1:
            raise ValueError("optima cap must be >= 1")


@dataclass(frozen=True)
class SearchResult:
    problem: SearchProblem
    value: int  # -1 when no family passed the report filter
    optima: tuple[tuple[int, ...], ...]  # colex edge-rank tuples, sorted
    optima_count: int  # distinct optima encountered (may exceed the cap)
    optima_complete: bool
    nodes: int
    certified: bool
    workers: int

    def optimum_hypergraphs(self) -> list[Hypergraph]:
        edges = None
        out = []
        for ranks in self.optima:
            if edges is None:
                edges = list(iter_subsets(self.problem.n, self.problem.k))
            out.append(
                Hypergraph(self.problem.n, self.problem.k, tuple(edges[r] for r in ranks))
            )
        return out


class _BudgetExceeded(Exception):
    pass


def _family_passes_filter(masks: list[int], t: int | None) -> bool:
    if t is None:
        return True
    if not masks:
        return False
    inter = -1
    for e in masks:
        inter &= e
    return inter.bit_count() < t


def _nontrivial_l1_cap(n: int, k: int, t: int) -> int | None:
    from .bounds import l1_bounds  # local import: bounds has no search dep

    if not 1 <= t < k:
        return None
    bound = l1_bounds("hm", n, k) if t == 1 else l1_bounds("t-hm", n, k, t=t)
    return bound.value_int if bound.valid else None


def _seed_state(problem: SearchProblem) -> tuple[int, list[tuple[int, ...]]]:
    """Best named family satisfying constraint and filter: (value, rank
    tuples attaining it).  (-1, []) when nothing qualifies."""
    from .families import FamilySpec, build

    n, k = problem.n, problem.k
    c = problem.constraint
    specs = [FamilySpec("star", n, k, t=1)]
    for part in _leaves(c):
        if isinstance(part, (TIntersecting, DWiseTIntersecting)) and part.t > 1:
            specs.append(FamilySpec("star", n, k, t=part.t))
        if isinstance(part, MatchingAtMost):
            specs.append(FamilySpec("hitting", n, k, s=part.s))
        if isinstance(part, PatternFree) and part.pattern.s >= 4:
            half = (part.pattern.s - 1) // 2
            if half >= 1:
                specs.append(FamilySpec("hitting", n, k, s=half))
    t = problem.require_nontrivial
    if t is not None and 1 <= t < k and n >= k + 1 and n >= t + 2:
        specs.append(FamilySpec("hilton-milner", n, k, t=t))
        specs.append(FamilySpec("frequency", n, k, t=t))
    best = -1
    tuples: set[tuple[int, ...]] = set()
    for spec in specs:
        try:
            fam = build(spec)
        except ValueError:
            continue
        masks = list(fam.edges)
        if not c.full_check(masks, n, k):
            continue
        if not _family_passes_filter(masks, t):
            continue
        value = co2(fam)
        if value < best:
            continue
        ranks = tuple(sorted(rank_subset(e, k) for e in masks))
        if value > best:
            best = value
            tuples = {ranks}
        else:
            tuples.add(ranks)
    return best, sorted(tuples)


# --- engine ----------------------------------------------------------------


class _Engine:
    def __init__(self, problem: SearchProblem):
        self.p = problem
        n, k = problem.n, problem.k
        problem.constraint.validate(n, k)
        if binom(n, k) > SEARCH_SPACE_CAP:
            raise ValueError(
                f"search space C({n},{k}) = {binom(n, k)} exceeds cap {SEARCH_SPACE_CAP}"
            )
        self.edges: list[int] = list(iter_subsets(n, k))
        m_all = len(self.edges)
        sub_index = {s: i for i, s in enumerate(iter_subsets(n, k - 1))}
        self.edge_subs: list[tuple[int, ...]] = []
        for e in self.edges:
            subs = []
            rest = e
            while rest:
                b = rest & -rest
                rest ^= b
                subs.append(sub_index[e ^ b])
            self.edge_subs.append(tuple(subs))
        self.n_subs = len(sub_index)

        c = problem.constraint
        self.full_mask = (1 << m_all) - 1
        if c.has_pair_filter:
            compat = [0] * m_all
            for i in range(m_all):
                ei = self.edges[i]
                row = 0
                for j in range(i + 1, m_all):
                    if c.pair_ok(ei, self.edges[j]):
                        row |= 1 << j
                compat[i] = row
            self.compat: list[int] | None = compat
        else:
            self.compat = None

        self.pairwise_exact = c.pairwise_exact
        self.prune = problem.mode == "branch-and-bound"
        cap = c.l1_cap(n, k)
        filt = problem.require_nontrivial
        if filt is not None:
            fcap = _nontrivial_l1_cap(n, k, filt)
            if fcap is not None:
                cap = fcap if cap is None else min(cap, fcap)
        self.m_cap = m_all if cap is None else min(cap, m_all)
        # integer comparison scaffolding for the quadratic bound at k-1:
        #   bound(m) = k m^2 / B + (k-1)(n-k) m  with  B = C(n-1, k-1);
        # prune a child iff bound(min(m', cap)) * B < incumbent * B
        self.B = binom(n - 1, k - 1)
        self.ub_num = [
            k * m * m + (k - 1) * (n - k) * m * self.B for m in range(self.m_cap + 1)
        ]
        self.require_nontrivial = filt

    # -- incumbent bookkeeping ------------------------------------------

    def reset_state(self, seed: tuple[int, list[tuple[int, ...]]] | None = None):
        if seed is not None and self.prune:
            self.inc = seed[0]
            self.optima = set(seed[1][: self.p.optima_cap])
            self.found = len(seed[1])
        else:
            self.inc = -1
            self.optima = set()
            self.found = 0
        self.nodes = 0
        self.deadline = (
            None
            if self.p.time_budget_s is None
            else time.monotonic() + self.p.time_budget_s
        )

    def consider(self, ranks: tuple[int, ...], value: int, fam_masks: list[int]):
        if value < self.inc or not _family_passes_filter(fam_masks, self.require_nontrivial):
            return
        if value > self.inc:
            self.inc = value
            self.optima = {ranks}
            self.found = 1
            return
        if ranks in self.optima:
            return
        self.found += 1
        if len(self.optima) < self.p.optima_cap:
            self.optima.add(ranks)

    # -- tree walk --------------------------------------------------------

    def run_roots(self, roots: list[int], budget: int) -> bool:
        """Explore the given first-edge subtrees; True when completed."""
        self.budget = budget
        edges = self.edges
        try:
            self.tick()
            self.consider((), 0, [])
            for i in roots:
                child_a = self.child_candidates(i, self.full_mask, [])
                if self.prune and self.skip_by_bound(1, child_a):
                    continue
                codeg = [0] * self.n_subs
                for s in self.edge_subs[i]:
                    codeg[s] = 1
                self.walk((i,), [edges[i]], child_a, 1, self.p.k, codeg)
            return True
        except _BudgetExceeded:
            return False

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExceeded
        if self.deadline is not None and not self.nodes % 1024:
            if time.monotonic() > self.deadline:
                raise _BudgetExceeded

    def child_candidates(self, i: int, a_mask: int, fam_masks: list[int]) -> int:
        """Candidate set for fam + edges[i], given the parent candidate
        set a_mask (which contains i)."""
        child = a_mask & (self.full_mask << (i + 1))
        if self.compat is not None:
            child &= self.compat[i]
        if not self.pairwise_exact and child:
            c = self.p.constraint
            grown = fam_masks + [self.edges[i]]
            keep = 0
            rest = child
            while rest:
                b = rest & -rest
                rest ^= b
                if c.add_ok(grown, self.edges[b.bit_length() - 1]):
                    keep |= b
            child = keep
        return child

    def skip_by_bound(self, m_child: int, child_a: int) -> bool:
        if m_child > self.m_cap:
            return True  # cap exceeded: no countable descendant exists
        reach = m_child + child_a.bit_count()
        if reach > self.m_cap:
            reach = self.m_cap
        return self.ub_num[reach] < self.inc * self.B

    def walk(self, ranks, fam_masks, a_mask, m, value, codeg):
        self.tick()
        self.consider(ranks, value, fam_masks)
        rest = a_mask
        edges = self.edges
        while rest:
            b = rest & -rest
            rest ^= b
            i = b.bit_length() - 1
            child_a = self.child_candidates(i, a_mask, fam_masks)
            if self.prune and self.skip_by_bound(m + 1, child_a):
                continue
            delta = 0
            subs = self.edge_subs[i]
            for s in subs:
                delta += 2 * codeg[s] + 1
                codeg[s] += 1
            fam_masks.append(edges[i])
            self.walk(ranks + (i,), fam_masks, child_a, m + 1, value + delta, codeg)
            fam_masks.pop()
            for s in subs:
                codeg[s] -= 1


# --- drivers ---------------------------------------------------------------


def _run_single(
    problem: SearchProblem,
    roots: list[int] | None = None,
    seed: tuple[int, list[tuple[int, ...]]] | None = None,
):
    eng = _Engine(problem)
    if seed is None and problem.mode == "branch-and-bound":
        seed = _seed_state(problem)
    eng.reset_state(seed)
    completed = eng.run_roots(
        roots if roots is not None else list(range(len(eng.edges))),
        problem.node_budget,
    )
    return eng.inc, sorted(eng.optima), eng.found, eng.nodes, completed


def _worker(args):
    problem, roots, seed = args
    return _run_single(problem, roots, seed)


def max_co2(problem: SearchProblem) -> SearchResult:
    """Exact constrained maximum of co2 with certificates.

    Certified results have every optimum re-validated from scratch.  A
    node-budget or deadline overrun returns the incumbent uncertified.
    """
    if problem.mode == "brute-force":
        return brute_force_co2(problem)
    workers = problem.workers
    m_all = binom(problem.n, problem.k)
    if workers > 1 and m_all > workers:
        seed = _seed_state(problem)
        split: list[list[int]] = [[] for _ in range(workers)]
        for i in range(m_all):
            split[i % workers].append(i)
        sub = replace(problem, node_budget=max(1, problem.node_budget // workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_worker, [(sub, r, seed) for r in split]))
        value = max(p[0] for p in parts)
        merged: set[tuple[int, ...]] = set()
        found = 0
        hit = 0
        for v, opt, cnt, _nodes, _ok in parts:
            if v == value:
                merged.update(opt)
                found += cnt
                hit += 1
        # every worker starts from the same seed optima, so the ones
        # still tying the final value were counted hit times, not once
        if value == seed[0]:
            found -= (hit - 1) * len(seed[1])
        optima = sorted(merged)[: problem.optima_cap]
        result = SearchResult(
            problem,
            value,
            tuple(optima),
            found,
            found <= problem.optima_cap,
            sum(p[3] for p in parts),
            all(p[4] for p in parts),
            workers,
        )
    else:
        value, optima, found, nodes, completed = _run_single(problem)
        result = SearchResult(
            problem,
            value,
            tuple(optima),
            found,
            found <= problem.optima_cap,
            nodes,
            completed,
            1,
        )
    if result.certified:
        _revalidate(result)
    return result


def brute_force_co2(problem: SearchProblem) -> SearchResult:
    """Plain chain enumeration with constraint cutoff only (the oracle
    for branch-and-bound).  Guarded to small edge spaces."""
    if binom(problem.n, problem.k) > BRUTE_FORCE_CAP and not problem.allow_large:
        raise ValueError(
            f"brute force wants C(n,k) <= {BRUTE_FORCE_CAP}, got "
            f"C({problem.n},{problem.k}) = {binom(problem.n, problem.k)}; "
            "set allow_large to override"
        )
    problem = replace(problem, mode="brute-force")
    value, optima, found, nodes, completed = _run_single(problem)
    result = SearchResult(
        problem,
        value,
        tuple(optima),
        found,
        found <= problem.optima_cap,
        nodes,
        completed,
        1,
    )
    if result.certified:
        _revalidate(result)
    return result


def _revalidate(result: SearchResult) -> None:
    """Re-check every reported optimum from scratch: constraint by the
    full predicate, value by core recomputation."""
    p = result.problem
    for h in result.optimum_hypergraphs():
        if not p.constraint.full_check(list(h.edges), p.n, p.k):
            raise RuntimeError("certified optimum fails its constraint on re-check")
        if co2(h) != result.value:
            raise RuntimeError("certified optimum fails co2 re-computation")
        if not _family_passes_filter(list(h.edges), p.require_nontrivial):
            raise RuntimeError("certified optimum fails the report filter on re-check")
