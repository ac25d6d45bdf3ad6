"""Named extremal families and their exact closed-form codegree sums.

All constructions pin their distinguished vertices to the lowest labels
(the t-star contains 1..t, the hitting family meets 1..s, and so on),
which keeps builds canonical and lets searches compare against them
up to relabeling.

Family kinds:

  empty          no edges
  complete       all C(n, k) edges
  star           all k-sets containing 1..t
  hitting        all k-sets meeting 1..s
  hilton-milner  k-sets containing 1..t that meet {t+1..k+1}, plus the
                 t edges ({1..k+1} minus i) for i in 1..t
  frequency      k-sets containing at least t+1 of 1..t+2
  fano           the 7 lines of the projective plane of order 2 (n=7, k=3)
  from-file      parsed from the text format

Closed forms (proved by counting codegrees one orbit at a time):

  co2_star_closed(n,k,t)     = C(n-t, k-t) * (t + (n-k+1)(k-t))
  co2_hitting_closed(n,k,s)  = s^2 C(n-s, k-1)
                               + (n-k+1)^2 (C(n, k-1) - C(n-s, k-1))

At t=1 and s=1 both collapse to the full-star value
C(n-1, k-1) * (1 + (n-k+1)(k-1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinat import binom, iter_subsets, mask_of
from .core import Hypergraph, load_hypergraph

FAMILY_KINDS = (
    "empty",
    "complete",
    "star",
    "hitting",
    "hilton-milner",
    "frequency",
    "fano",
    "from-file",
)

# short names accepted at the tool boundary
KIND_ALIASES = {"b": "hitting", "hm": "hilton-milner", "a": "frequency"}


def canonical_kind(name: str) -> str:
    return KIND_ALIASES.get(name, name)

# lines of the unique 2-(7,3,1) design, frozen as vertex lists
FANO_LINES = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 6, 7],
    [2, 4, 6],
    [2, 5, 7],
    [3, 4, 7],
    [3, 5, 6],
]

# builds materialize every edge; refuse universes past this size
_BUILD_CAP = 5_000_000


@dataclass(frozen=True)
class FamilySpec:
    """Which family to build.  t serves star/hilton-milner/frequency, s serves hitting."""

    kind: str
    n: int | None = None
    k: int | None = None
    t: int | None = None
    s: int | None = None
    path: str | None = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}; choose from {FAMILY_KINDS}")


@dataclass(frozen=True)
class FamilySize:
    """Edge count, plus the first-order size estimate where one is known."""

    count: int
    main_term: int | None = None
    ratio: Fraction | None = None


def _need_nk(spec: FamilySpec) -> tuple[int, int]:
    if spec.n is None or spec.k is None:
        raise ValueError(f"family kind {spec.kind!r} needs n and k")
    n, k = spec.n, spec.k
    if not (2 <= k < n <= 64):
        raise ValueError(f"need 2 <= k < n <= 64, got n={n} k={k}")
    return n, k


def _check_cap(n: int, k: int) -> None:
    if binom(n, k) > _BUILD_CAP:
        raise ValueError(f"C({n},{k}) = {binom(n, k)} edges is past the build cap {_BUILD_CAP}")


def build(spec: FamilySpec) -> Hypergraph:
    """Materialize the family as a Hypergraph in canonical edge order."""
    kind = spec.kind
    if kind == "from-file":
        if not spec.path:
            raise ValueError("from-file needs a path")
        return load_hypergraph(spec.path)
    if kind == "fano":
        if (spec.n, spec.k) not in ((None, None), (7, 3)):
            raise ValueError("fano is only defined for n=7, k=3")
        return Hypergraph.from_vertex_lists(7, 3, FANO_LINES)

    n, k = _need_nk(spec)
    if kind == "empty":
        return Hypergraph(n, k, ())
    _check_cap(n, k)
    if kind == "complete":
        return Hypergraph(n, k, tuple(iter_subsets(n, k)))
    if kind == "star":
        t = spec.t
        if t is None or not 1 <= t <= k:
            raise ValueError(f"star needs 1 <= t <= k, got t={t}")
        base = mask_of(range(1, t + 1))
        return Hypergraph.from_masks(
            n, k, (base | rest for rest in _shift_subsets(t, n, k - t))
        )
    if kind == "hitting":
        s = spec.s
        if s is None or not 1 <= s <= n:
            raise ValueError(f"hitting needs 1 <= s <= n, got s={s}")
        smask = mask_of(range(1, s + 1))
        return Hypergraph.from_masks(
            n, k, (e for e in iter_subsets(n, k) if e & smask)
        )
    if kind == "hilton-milner":
        t = spec.t
        if t is None or not 1 <= t < k:
            raise ValueError(f"hilton-milner needs 1 <= t < k, got t={t}")
        if n < k + 1:
            raise ValueError("hilton-milner needs n >= k + 1")
        base = mask_of(range(1, t + 1))
        window = mask_of(range(t + 1, k + 2))
        masks = [
            base | rest for rest in _shift_subsets(t, n, k - t) if rest & window
        ]
        full = mask_of(range(1, k + 2))
        masks.extend(full ^ (1 << i) for i in range(1, t + 1))
        return Hypergraph.from_masks(n, k, masks)
    if kind == "frequency":
        t = spec.t
        if t is None or not 1 <= t <= k - 1:
            raise ValueError(f"frequency needs 1 <= t <= k - 1, got t={t}")
        if n < t + 2:
            raise ValueError("frequency needs n >= t + 2")
        window = mask_of(range(1, t + 3))
        return Hypergraph.from_masks(
            n,
            k,
            (e for e in iter_subsets(n, k) if (e & window).bit_count() >= t + 1),
        )
    raise ValueError(f"unknown family kind {kind!r}")


def _shift_subsets(lo: int, n: int, size: int):
    """All size-subsets of {lo+1 .. n} as masks."""
    for rest in iter_subsets(n - lo, size):
        yield rest << lo


def family_size(spec: FamilySpec) -> FamilySize:
    """Size by explicit construction; frequency and hilton-milner also
    report the ratio against their first-order term (t+2) resp. (k-t+1)
    times C(n, k-t-1)."""
    h = build(spec)
    count = h.edge_count()
    if spec.kind in ("frequency", "hilton-milner"):
        n, k, t = spec.n, spec.k, spec.t
        assert n is not None and k is not None and t is not None
        factor = (t + 2) if spec.kind == "frequency" else (k - t + 1)
        main = factor * binom(n, k - t - 1)
        ratio = Fraction(count, main) if main else None
        return FamilySize(count, main, ratio)
    return FamilySize(count)


def co2_star_closed(n: int, k: int, t: int) -> int:
    """Exact co2 of the full t-star, no enumeration.

    Pure arithmetic, so n is not capped the way constructed families are.
    """
    if not 2 <= k < n:
        raise ValueError(f"need 2 <= k < n, got n={n} k={k}")
    if not 1 <= t <= k:
        raise ValueError(f"need 1 <= t <= k, got t={t}")
    return binom(n - t, k - t) * (t + (n - k + 1) * (k - t))


def co2_hitting_closed(n: int, k: int, s: int) -> int:
    """Exact co2 of the family of k-sets meeting 1..s, no enumeration.

    Pure arithmetic, so n is not capped the way constructed families are.
    """
    if not 2 <= k < n:
        raise ValueError(f"need 2 <= k < n, got n={n} k={k}")
    if not 1 <= s <= n:
        raise ValueError(f"need 1 <= s <= n, got s={s}")
    hit = binom(n, k - 1) - binom(n - s, k - 1)
    return s * s * binom(n - s, k - 1) + (n - k + 1) ** 2 * hit
