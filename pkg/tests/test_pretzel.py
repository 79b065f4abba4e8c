import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from knotcolor import exactla
from knotcolor.coloring import (
    brute_force_colorings,
    colorings,
    count_colorings,
    determinant,
    is_coloring,
    nullity,
)
from knotcolor.diagram import faces, strands
from knotcolor.errors import InvalidPretzelSpec, NotAKnot, NotInNullspace, NotPrime
from knotcolor.exactla import ModVector
from knotcolor.goeritz import goeritz_determinant
from knotcolor.pretzel import (
    PretzelSpec,
    all_specs,
    build_A,
    closes_to_knot,
    determinant_sweep,
    is_pretzel_spec,
    pretzel_coloring_correspondence,
    pretzel_determinant,
    pretzel_diagram,
    pretzel_layout,
    pretzel_nullity,
    sweep_row,
    top_left_strand,
    twist_differences,
)
from oracles import leibniz_det

P = PretzelSpec.parse

twists = st.lists(st.integers(-6, 6).filter(bool), min_size=1, max_size=5)


def knot_specs(max_m=4, max_q=4):
    return st.lists(st.integers(-max_q, max_q).filter(bool), min_size=1, max_size=max_m) \
        .map(lambda q: PretzelSpec(tuple(q))).filter(closes_to_knot)


@pytest.mark.parametrize("text, rows", [
    ("P(3,3,-3)", [[1, 1, 1], [-3, 3, 0], [-3, 0, -3]]),
    ("P(5)", [[1]]),
    ("P(2, 3)", [[1, 1], [-2, 3]]),
])
def test_build_A(text, rows):
    assert build_A(P(text)).A.to_rows() == rows


@pytest.mark.parametrize("text", ["P()", "P(1,0,2)", "Q(1,2)", "P(1,x)", "3,3"])
def test_bad_specs(text):
    with pytest.raises(InvalidPretzelSpec):
        P(text)


def test_spec_shape():
    assert is_pretzel_spec("P(1,x)")
    assert not is_pretzel_spec("trefoil.pd")


def test_spec_round_trip():
    assert str(P(" P( 3 , 3,-3 ) ")) == "P(3,3,-3)"
    assert P("P(1,2,3)").rotated() == P("P(2,3,1)")


@pytest.mark.parametrize("text, det", [("P(3,3,-3)", 9), ("P(-2,3,7)", 1), ("P(4)", 1), ("P(1,1,1)", 3)])
def test_determinant(text, det):
    s = P(text)
    assert pretzel_determinant(s) == det
    assert abs(leibniz_det(build_A(s).A.to_rows())) == det


@given(twists)
def test_determinant_formula_matches_A(q):
    s = PretzelSpec(tuple(q))
    assert pretzel_determinant(s) == abs(exactla.det(build_A(s).A))
    # the closed form is q_1...q_m (1/q_1 + ... + 1/q_m)
    assert pretzel_determinant(s) == abs(math.prod(q) * sum(Fraction(1, x) for x in q))


@pytest.mark.parametrize("text, p, k", [
    ("P(3,3,-3)", 3, 2), ("P(-2,3,7)", 5, 0), ("P(3,5,7)", 3, 0), ("P(3,3,-3)", 2, 0),
])
def test_nullity(text, p, k):
    s = P(text)
    assert pretzel_nullity(s, p) == k
    assert exactla.nullspace_mod_p(build_A(s).A, p)[0] == k


def test_nullity_needs_prime():
    with pytest.raises(NotPrime):
        pretzel_nullity(P("P(1,1,1)"), 4)


@given(twists, st.sampled_from([2, 3, 5, 7, 11]))
def test_nullity_formula_matches_A(q, p):
    s = PretzelSpec(tuple(q))
    assert pretzel_nullity(s, p) == exactla.nullspace_mod_p(build_A(s).A, p)[0]


@given(twists, st.integers(0, 4))
def test_rotation_invariance(q, k):
    s = PretzelSpec(tuple(q))
    r = s.rotated(k)
    assert pretzel_determinant(r) == pretzel_determinant(s)
    for p in (2, 3, 5, 7):
        assert pretzel_nullity(r, p) == pretzel_nullity(s, p)


def test_link_rejected():
    assert not closes_to_knot(P("P(2,2)"))
    with pytest.raises(NotAKnot):
        pretzel_diagram(P("P(2,2)"))


def test_trefoil_as_pretzel():
    d = pretzel_diagram(P("P(1,1,1)"))
    assert d.crossing_count == 3
    assert determinant(d) == 3


def test_three_three_minus_three():
    d = pretzel_diagram(P("P(3,3,-3)"))
    assert d.crossing_count == 9
    assert determinant(d) == 9
    assert goeritz_determinant(faces(d)) == 9
    assert nullity(d, 3) == 2
    assert len(brute_force_colorings(d, 3)) == 27


@given(knot_specs())
def test_generated_diagrams(s):
    d = pretzel_diagram(s)
    assert d.crossing_count == sum(abs(x) for x in s.q)
    assert len(faces(d).regions) == d.crossing_count + 2
    row = sweep_row(s)
    assert row.ok, row


def test_knot_closure_rule():
    # one even twist region, or none and an odd number of regions
    for s in all_specs(3, 3):
        evens = sum(1 for x in s.q if x % 2 == 0)
        expected = evens == 1 or (evens == 0 and s.m % 2 == 1)
        assert closes_to_knot(s) == expected, s


@pytest.mark.parametrize("text, n", [("P(3,3,-3)", 3), ("P(1,1,1)", 3), ("P(-2,3,7)", 5),
                                     ("P(1,2,3)", 11), ("P(3,3,-3)", 9), ("P(1,1,1)", 6)])
def test_correspondence_is_a_bijection(text, n):
    s = P(text)
    layout = pretzel_layout(s)
    d = layout.diagram
    A = build_A(s).A
    kernel = exactla.solve_mod_n(A, n)
    made = set()
    for v in kernel:
        for base in range(n):
            col = pretzel_coloring_correspondence(s, n, v, base, layout)
            assert is_coloring(d, col)
            assert col[top_left_strand(layout)] == base
            assert twist_differences(layout, col) == v
            made.add(col.colors)
    assert len(made) == len(kernel) * n
    assert made == {c.colors for c in colorings(d, n)}
    assert count_colorings(d, n) == len(made)


def test_correspondence_rejects_non_solutions():
    s = P("P(1,1,1)")
    # A (1,1,1) = (3, 0, 0): a solution mod 3 only
    pretzel_coloring_correspondence(s, 3, (1, 1, 1), 0)
    with pytest.raises(NotInNullspace):
        pretzel_coloring_correspondence(s, 5, (1, 1, 1), 0)


def test_three_three_minus_three_colorings():
    s = P("P(3,3,-3)")
    kernel = exactla.solve_mod_n(build_A(s).A, 3)
    assert len(kernel) == 9
    cols = {pretzel_coloring_correspondence(s, 3, v, b).colors for v in kernel for b in range(3)}
    assert len(cols) == 27


@given(knot_specs(max_m=3, max_q=3), st.integers(2, 7), st.data())
def test_correspondence_linear(s, n, data):
    layout = pretzel_layout(s)
    kernel = exactla.solve_mod_n(build_A(s).A, n)
    u = data.draw(st.sampled_from(kernel))
    v = data.draw(st.sampled_from(kernel))
    a, b = data.draw(st.integers(0, n - 1)), data.draw(st.integers(0, n - 1))
    cu = pretzel_coloring_correspondence(s, n, u, a, layout)
    cv = pretzel_coloring_correspondence(s, n, v, b, layout)
    assert pretzel_coloring_correspondence(s, n, u + v, a + b, layout) == cu + cv


def test_strand_count_of_generated():
    d = pretzel_diagram(P("P(-2,3,7)"))
    assert len(strands(d)) == 12


def test_small_sweep():
    cases, bad = determinant_sweep(3, 3)
    assert cases == 6 + 36 + 216 and bad == []


def test_pretzel_modvector():
    s = P("P(3,3,-3)")
    with pytest.raises(NotInNullspace):
        pretzel_coloring_correspondence(s, 3, ModVector(3, (1, 0)), 0)
