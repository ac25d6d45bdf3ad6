from fractions import Fraction

import pytest

from cosq.core import Hypergraph, co2
from cosq.families import FamilySpec, build
from cosq.verify import (
    CLAIM_NAMES,
    is_full_frequency,
    is_full_near_star,
    is_full_star,
    iso_classes,
    verify_claim,
)


def test_claim_registry():
    with pytest.raises(ValueError):
        verify_claim("no-such-claim", n=7, k=3)
    with pytest.raises(ValueError):
        verify_claim("ekr-l2", n=7)  # k missing
    assert "ekr-l2" in CLAIM_NAMES


# --- recognizers ------------------------------------------------------------


def test_is_full_star():
    assert is_full_star(build(FamilySpec("star", 7, 3, t=1)))
    assert is_full_star(build(FamilySpec("star", 8, 4, t=2)), t=2)
    assert not is_full_star(build(FamilySpec("hilton-milner", 7, 3, t=1)))
    # right count, wrong structure: drop one star edge, add an off edge
    star = build(FamilySpec("star", 7, 3, t=1))
    masks = list(star.edges[:-1])
    from cosq.combinat import mask_of

    masks.append(mask_of([5, 6, 7]))
    assert not is_full_star(Hypergraph.from_masks(7, 3, masks))


def test_is_full_near_star():
    assert is_full_near_star(build(FamilySpec("hilton-milner", 7, 3, t=1)))
    assert is_full_near_star(build(FamilySpec("hilton-milner", 9, 4, t=1)))
    assert not is_full_near_star(build(FamilySpec("star", 7, 3, t=1)))
    assert not is_full_near_star(build(FamilySpec("frequency", 9, 4, t=1)))


def test_is_full_frequency():
    assert is_full_frequency(build(FamilySpec("frequency", 7, 3, t=1)))
    assert is_full_frequency(build(FamilySpec("frequency", 9, 3, t=1)))
    assert not is_full_frequency(build(FamilySpec("star", 7, 3, t=1)))
    # recognition is window-agnostic: relabeling the family moves the
    # window but keeps it recognizable
    freq = build(FamilySpec("frequency", 7, 3, t=1))
    swapped = Hypergraph.from_vertex_lists(
        7, 3, [[{3: 7, 7: 3}.get(v, v) for v in e] for e in freq.vertex_lists()]
    )
    assert is_full_frequency(swapped)


def test_hm_and_frequency_same_profile_distinct_labelings():
    # for k = 3 they are isomorphic with equal co2, yet not equal as
    # labeled families, so each recognizer sticks to its own shape
    hm = build(FamilySpec("hilton-milner", 7, 3, t=1))
    freq = build(FamilySpec("frequency", 7, 3, t=1))
    assert hm.edge_count() == freq.edge_count()
    assert co2(hm) == co2(freq)
    assert hm != freq
    assert not is_full_frequency(hm)
    assert not is_full_near_star(freq)


def test_iso_classes():
    star1 = build(FamilySpec("star", 5, 2, t=1))
    star2 = Hypergraph.from_vertex_lists(
        5, 2, [[2, 1], [2, 3], [2, 4], [2, 5]]
    )
    tri = Hypergraph.from_vertex_lists(5, 2, [[1, 2], [1, 3], [2, 3]])
    groups = iso_classes([star1, star2, tri])
    assert sorted(sorted(g) for g in groups) == [[0, 1], [2]]
    with pytest.raises(ValueError):
        iso_classes([build(FamilySpec("star", 9, 3, t=1))])


# --- claims -----------------------------------------------------------------


def test_ekr_l2_claim_pass_unique():
    rep = verify_claim("ekr-l2", n=7, k=3)
    assert rep.status == "PASS"
    assert rep.claimed == rep.computed == 165
    assert rep.unique is True
    assert rep.certified
    assert all(is_full_star(h) for h in rep.certificates)


def test_ekr_l2_claim_boundary_tie():
    rep = verify_claim("ekr-l2", n=4, k=2)
    assert rep.status == "PASS"
    assert rep.computed == 12
    assert rep.unique is False  # the triangle ties the star
    assert rep.notes  # out-of-range annotation present (n = 2k)


def test_min_cycle_claim():
    rep = verify_claim("min-3-cycle", n=5, k=3)
    assert rep.status == "PASS"
    assert rep.computed == 42
    assert rep.unique is True


def test_pattern_claims_6_3():
    for claim in ("min-3-path", "lin-3-cycle"):
        rep = verify_claim(claim, n=6, k=3)
        assert rep.status == "PASS"
        assert rep.computed == 90
        assert rep.unique is False  # complete on 5 of 6 vertices ties


def test_emc_ratio_claim():
    rep = verify_claim("emc-ratio", n=60, k=3, s=2)
    assert rep.status == "PASS"
    assert abs(rep.computed - 1) <= Fraction(3, 20)
    tight = verify_claim("emc-ratio", n=60, k=3, s=2, tol=Fraction(1, 10**6))
    assert tight.status == "FAIL"
    with pytest.raises(ValueError):
        verify_claim("emc-ratio", n=4, k=3, s=2)


def test_hm_claim_report_mode():
    rep = verify_claim("hm-l2-conjecture", n=9, k=3)
    assert rep.status == "REPORT"
    assert rep.claimed == rep.computed  # near-star and frequency agree at k=3
    assert rep.unique is None
    assert len(rep.certificates) == 2


def test_hm_claim_alias_and_search():
    rep = verify_claim("hm-l2-check", n=7, k=3, search=True)
    assert rep.claim == "hm-l2-conjecture"
    assert rep.status == "REPORT"
    hm = build(FamilySpec("hilton-milner", 7, 3, t=1))
    assert rep.computed == co2(hm) == 123
    assert rep.unique is True
    assert rep.certified


def test_hm_claim_range_check():
    with pytest.raises(ValueError):
        verify_claim("hm-l2-conjecture", n=6, k=3)  # needs n > 2k


def test_t_int_claim():
    rep = verify_claim("t-int-l2-conjecture", n=8, k=3, t=2)
    assert rep.status == "REPORT"
    assert rep.computed == rep.claimed == 48
    assert rep.unique is True
    assert rep.certified


def test_uncertified_on_budget():
    rep = verify_claim("ekr-l2", n=7, k=3, node_budget=2)
    assert rep.status == "UNCERTIFIED"
    assert not rep.certified
    assert rep.unique is None
