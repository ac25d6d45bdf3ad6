"""Exact rational evaluation of the degree-sum bounds and slack reports.

Everything is a Python int or fractions.Fraction; no floats, so
slack == 0 is a trustworthy equality detector.

The quadratic codegree bound at level ell for an m-edge k-uniform
hypergraph on n vertices is

    C(k,l) C(k-1,l) / C(n-1,l) * m^2  +  C(k-1,l-1) C(n-l-1,k-l) * m

which at l = k-1 collapses to  k/C(n-1,k-1) * m^2 + (k-1)(n-k) * m.
It is monotone in m, which is what licenses its use as a search pruner
capped by any valid edge-count bound.

The l1 registry evaluates the classical family-size bounds with an
explicit validity flag; out-of-range parameters yield the value flagged
invalid rather than an error, so heuristics can keep using them while
certified paths must require valid=True.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinat import binom
from .core import Hypergraph, co2

Rational = Fraction


def bey_rhs(n: int, k: int, ell: int, m: int) -> Fraction:
    """Right side of the quadratic codegree bound, exact."""
    if not (0 <= ell <= k < n):
        raise ValueError(f"need 0 <= ell <= k < n, got n={n} k={k} ell={ell}")
    if m < 0:
        raise ValueError(f"need m >= 0, got m={m}")
    quad = Fraction(binom(k, ell) * binom(k - 1, ell), binom(n - 1, ell))
    lin = binom(k - 1, ell - 1) * binom(n - ell - 1, k - ell)
    return quad * m * m + lin * m


@dataclass(frozen=True)
class BeyCheck:
    """One instance of the inequality, with slack."""

    n: int
    k: int
    ell: int
    m: int
    lhs: int
    rhs: Fraction

    @property
    def slack(self) -> Fraction:
        return self.rhs - self.lhs


def check_bey(h: Hypergraph, ell: int | None = None) -> BeyCheck:
    """Verify the inequality on a concrete hypergraph; a violation would
    mean an implementation bug, so it aborts loudly."""
    if ell is None:
        ell = h.k - 1
    if not 0 <= ell <= h.k:
        raise ValueError(f"need 0 <= ell <= k, got ell={ell}")
    lhs = co2(h, ell)
    rhs = bey_rhs(h.n, h.k, ell, len(h.edges))
    if lhs > rhs:
        raise RuntimeError(
            f"codegree bound violated: lhs={lhs} > rhs={rhs} at n={h.n} k={h.k} ell={ell}"
        )
    return BeyCheck(h.n, h.k, ell, len(h.edges), lhs, rhs)


def ekr_l2_bound(n: int, k: int) -> int:
    """co2 cap for intersecting families (sharp for n >= 2k): the full
    star value C(n-1,k-1)(1 + (n-k+1)(k-1))."""
    if not 2 <= k < n:
        raise ValueError(f"need 2 <= k < n, got n={n} k={k}")
    return binom(n - 1, k - 1) * (1 + (n - k + 1) * (k - 1))


def t_star_l2_bound(n: int, k: int, t: int) -> int:
    """co2 of the full t-star, the conjectured cap for t-intersecting
    families (proved for large n); equals ekr_l2_bound at t=1."""
    if not 2 <= k < n:
        raise ValueError(f"need 2 <= k < n, got n={n} k={k}")
    if not 1 <= t <= k:
        raise ValueError(f"need 1 <= t <= k, got t={t}")
    return binom(n - t, k - t) * (t + (n - k + 1) * (k - t))


@dataclass(frozen=True)
class L1Bound:
    """A named family-size bound: exact value plus hypothesis status."""

    name: str
    value: Fraction
    valid: bool
    hypothesis: str

    @property
    def value_int(self) -> int:
        if self.value.denominator != 1:
            raise ValueError(f"{self.name} bound is not an integer: {self.value}")
        return int(self.value)


def _l1_ekr(n: int, k: int) -> L1Bound:
    return L1Bound("ekr", Fraction(binom(n - 1, k - 1)), n >= 2 * k, "n >= 2k")


def _l1_t_ekr(n: int, k: int, t: int) -> L1Bound:
    if not 1 <= t < k:
        raise ValueError(f"need 1 <= t < k, got t={t}")
    return L1Bound(
        "t-ekr",
        Fraction(binom(n - t, k - t)),
        n >= (t + 1) * (k - t + 1),
        "n >= (t+1)(k-t+1)",
    )


def _l1_hm(n: int, k: int) -> L1Bound:
    value = binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1
    return L1Bound("hm", Fraction(value), n > 2 * k, "n > 2k")


def _l1_t_hm(n: int, k: int, t: int) -> L1Bound:
    if not 1 <= t < k:
        raise ValueError(f"need 1 <= t < k, got t={t}")
    a = _count_frequency(n, k, t)
    h = _count_near_star(n, k, t)
    return L1Bound(
        "t-hm",
        Fraction(max(a, h)),
        n > (t + 1) * (k - t + 1),
        "n > (t+1)(k-t+1)",
    )


def _count_frequency(n: int, k: int, t: int) -> int:
    # k-sets with at least t+1 of the first t+2 vertices
    return sum(binom(t + 2, j) * binom(n - t - 2, k - j) for j in (t + 1, t + 2))


def _count_near_star(n: int, k: int, t: int) -> int:
    # k-sets containing [t] and meeting {t+1..k+1}, plus t special edges
    return binom(n - t, k - t) - binom(n - k - 1, k - t) + t


def _l1_emc(n: int, k: int, s: int) -> L1Bound:
    if s < 1:
        raise ValueError(f"need s >= 1, got s={s}")
    value = binom(n, k) - binom(n - s, k)
    return L1Bound("emc", Fraction(value), n >= (2 * s + 1) * k - s, "n >= (2s+1)k-s")


def _l1_fk(n: int, k: int, s: int) -> L1Bound:
    # stability bound for matching number s with covering number > s;
    # u is defined by n = (u+s-1)(k-1) + s + k and need not be integral
    if s < 1:
        raise ValueError(f"need s >= 1, got s={s}")
    u = Fraction(n - s - k, k - 1) - s + 1
    valid = u >= s + 1
    if u <= 0:
        return L1Bound("fk", Fraction(0), False, "u >= s+1 (u <= 0 here)")
    value = binom(n, k) - binom(n - s, k) - (u - s - 1) / u * binom(n - s - k, k - 1)
    return L1Bound("fk", value, valid, "u = (n-s-k)/(k-1) - s + 1 >= s+1")


L1_BOUND_NAMES = ("ekr", "t-ekr", "hm", "t-hm", "emc", "fk")


def l1_bounds(name: str, n: int, k: int, t: int | None = None, s: int | None = None) -> L1Bound:
    """Evaluate a named family-size bound with its validity flag."""
    if not 2 <= k < n:
        raise ValueError(f"need 2 <= k < n, got n={n} k={k}")
    if name == "ekr":
        return _l1_ekr(n, k)
    if name == "t-ekr":
        if t is None:
            raise ValueError("t-ekr needs t")
        return _l1_t_ekr(n, k, t)
    if name == "hm":
        return _l1_hm(n, k)
    if name == "t-hm":
        if t is None:
            raise ValueError("t-hm needs t")
        return _l1_t_hm(n, k, t)
    if name == "emc":
        if s is None:
            raise ValueError("emc needs s")
        return _l1_emc(n, k, s)
    if name == "fk":
        if s is None:
            raise ValueError("fk needs s")
        return _l1_fk(n, k, s)
    raise ValueError(f"unknown bound name {name!r}; choose from {L1_BOUND_NAMES}")


def sigma_upper(pi: Fraction, k: int) -> Fraction:
    """Scaled-density cap pi*(pi/k + 1 - 1/k) from a Turan density pi."""
    pi = Fraction(pi)
    if not 0 < pi <= 1:
        raise ValueError(f"need 0 < pi <= 1, got {pi}")
    if k < 2:
        raise ValueError(f"need k >= 2, got k={k}")
    return pi * (pi / k + 1 - Fraction(1, k))


def de_caen_pi(t: int, k: int) -> Fraction:
    """Turan density upper bound 1 - 1/C(t-1,k-1) for the complete
    k-uniform hypergraph on t vertices."""
    if not t > k >= 2:
        raise ValueError(f"need t > k >= 2, got t={t} k={k}")
    return 1 - Fraction(1, binom(t - 1, k - 1))


def sigma_Kt(t: int, k: int) -> Fraction:
    """Scaled-density cap for the complete k-graph on t vertices,
    written out directly: (1 - 1/C)(1 - 1/(kC)) with C = C(t-1,k-1).
    Must agree with sigma_upper(de_caen_pi(t,k), k) identically."""
    if not t > k >= 2:
        raise ValueError(f"need t > k >= 2, got t={t} k={k}")
    c = binom(t - 1, k - 1)
    return (1 - Fraction(1, c)) * (1 - Fraction(1, k * c))


@dataclass(frozen=True)
class BoundReport:
    """Instance-level report: the quadratic bound plus every named L2
    cap whose property hypothesis the instance actually satisfies."""

    n: int
    k: int
    ell: int
    m: int
    co2_value: int
    bey: BeyCheck
    named: tuple[tuple[str, Fraction, bool, Fraction], ...]  # (name, value, valid, slack)


def bound_report(h: Hypergraph, ell: int | None = None) -> BoundReport:
    """check_bey plus the star-value caps that apply.

    A cap is listed only when the instance has the required property
    (pairwise intersection at least t); `valid` records whether n lies
    in the proven range.  Valid caps with negative slack abort loudly.
    """
    bey = check_bey(h, ell)
    value = co2(h)
    named: list[tuple[str, Fraction, bool, Fraction]] = []
    if h.edges:
        t_min = h.k if len(h.edges) == 1 else min(
            (a & b).bit_count() for i, a in enumerate(h.edges) for b in h.edges[i + 1 :]
        )
        if t_min >= 1:
            star = ekr_l2_bound(h.n, h.k)
            named.append(("ekr-l2", Fraction(star), h.n >= 2 * h.k, Fraction(star - value)))
        if t_min >= 2:
            cap = t_star_l2_bound(h.n, h.k, t_min)
            # proven only for unquantified large n, so never flagged valid
            named.append((f"t-star-l2(t={t_min})", Fraction(cap), False, Fraction(cap - value)))
    report = BoundReport(h.n, h.k, bey.ell, bey.m, value, bey, tuple(named))
    for name, _value, valid, slack in report.named:
        if valid and slack < 0:
            raise RuntimeError(f"valid bound {name} violated by {-slack}")
    return report
