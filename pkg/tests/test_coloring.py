import math

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from knotcolor import corpus, exactla
from knotcolor.coloring import (
    Coloring,
    brute_force_colorings,
    build_precoloring,
    canonical_form,
    check_coloring,
    coloring_from_edges,
    coloring_matrix,
    colorings,
    count_colorings,
    determinant,
    elementary_divisors,
    is_coloring,
    is_n_colorable,
    nullity,
    precoloring_matrix,
    relabel_equivalent,
    trivial_coloring,
)
from knotcolor.errors import NotAColoring, SearchSpaceTooLarge, ZeroCrossingDiagram
from knotcolor.exactla import IntMatrix
from oracles import leibniz_det, nullity_by_count, search_colorings

FIG8_PRE = [[1, -2, 1, 0], [-2, 1, 0, 1], [1, 0, -2, 1], [0, 1, 1, -2]]


def test_figure_eight_precoloring(fig8):
    pre = precoloring_matrix(fig8)
    assert relabel_equivalent(pre, IntMatrix.from_rows(FIG8_PRE))
    assert canonical_form(pre) == canonical_form(IntMatrix.from_rows(FIG8_PRE))


def test_trefoil_rows(trefoil):
    for row in precoloring_matrix(trefoil).to_rows():
        assert sorted(row) == [-2, 1, 1]


def test_constant_vector_in_kernel(corpus_name):
    d = corpus.load(corpus_name)
    if not d.crossings:
        return
    pre = precoloring_matrix(d)
    assert all(s == 0 for s in pre.row_sums())


def test_zero_crossing_has_no_precoloring():
    with pytest.raises(ZeroCrossingDiagram):
        build_precoloring(corpus.load("unknot"))
    assert coloring_matrix(corpus.load("unknot")).shape == (0, 0)


@pytest.mark.parametrize("name, det", [
    ("trefoil", 3), ("figure8", 5), ("unknot", 1), ("unknot_kink", 1), ("knot_6_2", 11),
    ("pretzel_3_3_m3", 9), ("pretzel_m2_3_7", 1),
])
def test_determinants(name, det):
    d = corpus.load(name)
    assert determinant(d) == det
    rows = coloring_matrix(d).to_rows()
    oracle = leibniz_det(rows) if len(rows) <= 8 else sympy.Matrix(rows).det()
    assert abs(oracle) == det


def test_every_minor_gives_the_determinant(corpus_name):
    d = corpus.load(corpus_name)
    if not d.crossings:
        return
    c = d.crossing_count
    dets = {abs(exactla.det(build_precoloring(d, i, j).matrix)) for i in range(c) for j in range(c)}
    assert dets == {determinant(d)}


@pytest.mark.parametrize("name, p, k", [
    ("figure8", 5, 1), ("figure8", 3, 0), ("trefoil", 3, 1), ("trefoil", 2, 0),
    ("pretzel_3_3_m3", 3, 2), ("knot_6_2", 11, 1),
])
def test_nullities(name, p, k):
    d = corpus.load(name)
    assert nullity(d, p) == k
    m = coloring_matrix(d)
    assert nullity_by_count(m.to_rows(), m.cols, p) == k


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_prime_coloring_count(corpus_name, p):
    d = corpus.load(corpus_name)
    assert count_colorings(d, p) == p ** (nullity(d, p) + 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_colorings_match_bruteforce(corpus_name, n):
    d = corpus.load(corpus_name)
    k = max(d.crossing_count, 1)
    if n**k > 10**5:
        expected = sorted(
            tuple((c + t) % n for c in base)
            for base in search_colorings(d, n) for t in range(n)
        )
    else:
        expected = [c.colors for c in brute_force_colorings(d, n)]
    got = colorings(d, n)
    assert [c.colors for c in got] == sorted(set(expected))
    assert count_colorings(d, n) == len(got)


def test_trefoil_three_colorings(trefoil):
    cols = colorings(trefoil, 3)
    assert len(cols) == 9
    assert sum(not c.is_trivial for c in cols) == 6
    for c in cols:
        assert c.is_trivial or sorted(c.colors) == [0, 1, 2]


def test_figure_eight_five_colorings(fig8):
    cols = colorings(fig8, 5)
    assert len(cols) == 25
    assert any(c.colors[:3] == (2, 0, 4) for c in cols)


def test_invariance_across_diagrams():
    for knot, names in corpus.by_knot().items():
        ds = [corpus.load(n) for n in names]
        assert {determinant(d) for d in ds} == {corpus.DETERMINANTS[knot]}
        for n in (2, 3, 4, 5, 6, 9):
            assert len({count_colorings(d, n) for d in ds}) == 1


@pytest.mark.parametrize("n", range(2, 31))
def test_colorability_matches_gcd(corpus_name, n):
    d = corpus.load(corpus_name)
    assert is_n_colorable(d, n) == (math.gcd(n, determinant(d)) > 1)


def test_colorability_rejects_small_n(trefoil):
    with pytest.raises(ValueError):
        is_n_colorable(trefoil, 1)


def test_divisors(fig8):
    assert elementary_divisors(fig8) == [1, 1, 5]
    assert math.prod(elementary_divisors(corpus.load("pretzel_3_3_m3"))) == 9


@given(st.sampled_from(corpus.names()), st.integers(2, 12), st.data())
def test_colorings_closed_under_linear_combination(name, n, data):
    d = corpus.load(name)
    cols = colorings(d, n)
    a = data.draw(st.sampled_from(cols))
    b = data.draw(st.sampled_from(cols))
    k = data.draw(st.integers(0, n - 1))
    assert is_coloring(d, a + b)
    assert is_coloring(d, a * k)
    assert is_coloring(d, trivial_coloring(d, n, k))


def test_check_coloring_rejects(trefoil):
    with pytest.raises(NotAColoring):
        check_coloring(trefoil, Coloring(3, (0, 0, 1)))
    assert not is_coloring(trefoil, Coloring(3, (0, 1)))


def test_coloring_from_edges(trefoil):
    from knotcolor.diagram import strands
    colors = {e: s.id for s in strands(trefoil) for e in s.edges}
    assert coloring_from_edges(trefoil, 3, colors).colors == (0, 1, 2)
    colors[1] = (colors[1] + 1) % 3
    with pytest.raises(NotAColoring):
        coloring_from_edges(trefoil, 3, colors)


def test_bruteforce_limit(fig8):
    with pytest.raises(SearchSpaceTooLarge):
        brute_force_colorings(fig8, 10, limit=1000)
