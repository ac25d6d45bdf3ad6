import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import naive_co2, naive_degree_sum
from cosq.combinat import binom, mask_of
from cosq.core import (
    Hypergraph,
    add_edge,
    co2,
    co2_delta,
    codegree,
    codegree_vector,
    format_hypergraph,
    load_hypergraph,
    parse_hypergraph,
    save_hypergraph,
)
from cosq.families import FamilySpec, build

STAR_733 = build(FamilySpec("star", 7, 3, t=1))
FANO = build(FamilySpec("fano"))


def hg(n, k, *edges):
    return Hypergraph.from_vertex_lists(n, k, edges)


# --- construction ----------------------------------------------------------


def test_rejects_bad_shape():
    with pytest.raises(ValueError):
        Hypergraph(3, 3, ())  # k = n
    with pytest.raises(ValueError):
        Hypergraph(65, 2, ())
    with pytest.raises(ValueError):
        hg(5, 3, [1, 2])  # wrong edge size
    with pytest.raises(ValueError):
        hg(4, 2, [1, 5])  # label out of range


def test_rejects_duplicates_and_order():
    with pytest.raises(ValueError):
        Hypergraph.from_masks(5, 2, [mask_of([1, 2]), mask_of([1, 2])])
    with pytest.raises(ValueError):
        Hypergraph(5, 2, (mask_of([2, 3]), mask_of([1, 2])))  # not ascending


def test_edges_stored_in_colex_order():
    h = hg(5, 2, [4, 5], [1, 2], [2, 3])
    assert h.vertex_lists() == [(1, 2), (2, 3), (4, 5)]


# --- codegrees -------------------------------------------------------------


def test_codegree_single_sets():
    assert codegree(STAR_733, mask_of([1])) == 15
    assert codegree(STAR_733, mask_of([2])) == 5
    assert codegree(STAR_733, mask_of([1, 2])) == 5
    assert codegree(STAR_733, mask_of([2, 3])) == 1
    assert codegree(STAR_733, 0) == 15


def test_co2_known_values():
    assert co2(STAR_733) == 165
    assert co2(FANO) == 21  # every pair lies in exactly one line
    assert co2(Hypergraph(6, 3, ())) == 0


def test_codegree_vector_entries():
    vec = codegree_vector(FANO, 2)
    assert vec.total() == 21
    assert vec.l2sq() == 21
    assert vec.max() == 1
    assert len(vec.support()) == 21
    with pytest.raises(ValueError):
        vec.entry(binom(7, 2))


def test_codegree_vector_levels():
    vec0 = codegree_vector(FANO, 0)
    assert vec0.total() == 7 and vec0.l2sq() == 49
    veck = codegree_vector(FANO, 3)
    assert veck.total() == 7 and veck.l2sq() == 7 and veck.max() == 1
    with pytest.raises(ValueError):
        codegree_vector(FANO, 4)


def test_co2_matches_naive_on_smalls(small_random_hypergraphs):
    for h in small_random_hypergraphs[:40]:
        for ell in range(0, h.k + 1):
            assert co2(h, ell) == naive_co2(h, ell)


def test_degree_sum_identity(small_random_hypergraphs):
    # sum of ell-codegrees counts (edge, subset) pairs: C(k, ell) * m
    for h in small_random_hypergraphs[:40]:
        for ell in range(0, h.k + 1):
            vec = codegree_vector(h, ell)
            assert vec.total() == binom(h.k, ell) * h.edge_count()
            assert vec.total() == naive_degree_sum(h, ell)


def test_co2_delta_tracks_co2():
    h = Hypergraph(6, 3, ())
    total = 0
    for e in build(FamilySpec("star", 6, 3, t=1)).edges:
        total += co2_delta(h, e)
        h = add_edge(h, e)
        assert co2(h) == total


def test_add_edge_rejects_duplicate():
    h = hg(5, 2, [1, 2])
    with pytest.raises(ValueError):
        add_edge(h, mask_of([1, 2]))
    with pytest.raises(ValueError):
        co2_delta(h, mask_of([1, 2]))


# --- text format -----------------------------------------------------------


def test_parse_format_roundtrip():
    text = format_hypergraph(STAR_733)
    assert parse_hypergraph(text) == STAR_733
    assert format_hypergraph(parse_hypergraph(text)) == text


def test_parse_comments_and_blanks():
    h = parse_hypergraph("# hi\n\n5 2\n1 2  # edge\n\n2 3\n")
    assert h.vertex_lists() == [(1, 2), (2, 3)]


def test_parse_header_only():
    h = parse_hypergraph("6 3\n")
    assert h.edge_count() == 0 and co2(h) == 0


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ValueError, match="line 2"):
        parse_hypergraph("5 2\n1 2 3\n")
    with pytest.raises(ValueError, match="line 3"):
        parse_hypergraph("5 2\n1 2\n2 1\n")
    with pytest.raises(ValueError, match="line 3.*line 2"):
        parse_hypergraph("5 2\n1 2\n1 2\n")
    with pytest.raises(ValueError, match="line 1"):
        parse_hypergraph("5\n")
    with pytest.raises(ValueError, match="integers"):
        parse_hypergraph("5 2\n1 x\n")
    with pytest.raises(ValueError, match="empty"):
        parse_hypergraph("# nothing\n")


def test_save_load(tmp_path):
    path = str(tmp_path / "fano.hg")
    save_hypergraph(FANO, path)
    assert load_hypergraph(path) == FANO


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=3, max_value=9).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.integers(min_value=2, max_value=n - 1),
        )
    ),
    st.randoms(use_true_random=False),
)
def test_random_roundtrip_and_identity(nk, rng):
    from cosq.corpus import random_hypergraph

    n, k = nk
    m = rng.randint(0, min(binom(n, k), 8))
    h = random_hypergraph(rng, n, k, m)
    assert parse_hypergraph(format_hypergraph(h)) == h
    vec = codegree_vector(h)
    assert vec.total() == k * m
    assert co2(h) == naive_co2(h, k - 1)
