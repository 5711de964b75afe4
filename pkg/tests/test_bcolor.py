import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bchroma import families as fam
from bchroma.bcolor import (
    Coloring,
    ColoringError,
    PhiTimeout,
    SearchTimeout,
    b_spectrum,
    b_vertices,
    chromatic_number,
    feasible_k,
    is_b_coloring,
    is_proper,
    m_bound,
    oracle_spectrum,
    pairwise_bound,
    phi,
    phi_oracle,
)
from bchroma.graph import build_graph, relabel, underlying


@st.composite
def small_graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [p for p, keep in zip(pairs, mask) if keep])


def naive_b_colorable(g, k):
    """Independent check over all k^n assignments, no symmetry reduction."""
    for colors in itertools.product(range(1, k + 1), repeat=g.n):
        if set(colors) != set(range(1, k + 1)):
            continue
        if any(colors[u - 1] == colors[v - 1] for u, v in g.edges()):
            continue
        ok = True
        for c in range(1, k + 1):
            if not any(
                colors[v - 1] == c and {colors[u - 1] for u in g.neighbors(v)} >= set(range(1, k + 1)) - {c}
                for v in g.vertices
            ):
                ok = False
                break
        if ok:
            return True
    return False


# -- checkers ----------------------------------------------------------------

def test_is_proper_examples():
    assert is_proper(fam.complete(3), Coloring(3, (1, 2, 3)))
    assert not is_proper(fam.complete(3), Coloring(2, (1, 1, 2)))
    assert is_proper(fam.edgeless(4), Coloring(1, (1, 1, 1, 1)))


def test_is_proper_size_mismatch():
    with pytest.raises(ColoringError):
        is_proper(fam.complete(3), Coloring(2, (1, 2)))


def test_b_vertices_examples():
    bv = b_vertices(fam.cycle(5), Coloring(3, (1, 2, 3, 1, 2)))
    assert 3 in bv[3]
    bv = b_vertices(fam.path(3), Coloring(2, (1, 2, 1)))
    assert bv[2] == {2} and bv[1] == {1, 3}
    bv = b_vertices(fam.complete(4), Coloring(4, (1, 2, 3, 4)))
    assert all(bv[c] == {c} for c in range(1, 5))


def test_b_vertices_single_color_is_vacuous():
    assert b_vertices(fam.edgeless(3), Coloring(1, (1, 1, 1))) == {1: frozenset({1, 2, 3})}


def test_b_vertices_rejects_bad_colorings():
    with pytest.raises(ColoringError):
        b_vertices(fam.path(3), Coloring(2, (1, 1, 2)))
    with pytest.raises(ColoringError):
        b_vertices(fam.path(3), Coloring(3, (1, 2, 1)))


def test_is_b_coloring_examples():
    assert is_b_coloring(fam.cycle(4), Coloring(2, (1, 2, 1, 2)), 2)
    assert is_b_coloring(fam.path(5), Coloring(3, (1, 2, 3, 1, 2)), 3)
    assert not is_b_coloring(fam.complete(3), Coloring(3, (1, 2, 3)), 4)


def test_pairwise_definition_is_weaker():
    # P_4 colored 2,1,3,2: every class pair is joined, but class 2 has no b-vertex
    g, c = fam.path(4), Coloring(3, (2, 1, 3, 2))
    assert is_b_coloring(g, c, 3, definition="pairwise")
    assert not is_b_coloring(g, c, 3)


# -- bounds ----------------------------------------------------------------

@pytest.mark.parametrize("g, expected", [(fam.complete(4), 4), (fam.cycle(4), 3), (fam.star(5), 2), (fam.path(4), 2)])
def test_m_bound(g, expected):
    assert m_bound(g) == expected


def test_pairwise_bound():
    assert pairwise_bound(fam.complete(4)) == 4
    assert pairwise_bound(fam.path(4)) == 3
    assert pairwise_bound(fam.edgeless(3)) == 1


# -- feasibility and phi -----------------------------------------------------

def test_feasible_k_cycle4():
    c = feasible_k(fam.cycle(4), 2)
    assert c is not None and is_b_coloring(fam.cycle(4), c, 2)
    assert feasible_k(fam.cycle(4), 3) is None


def test_feasible_k_path4_has_no_three_b_coloring():
    # the coloring (2,1,3,2) sometimes quoted for P_4 fails: class 2 is {v1, v4},
    # both endpoints of degree 1 < k - 1
    assert not is_b_coloring(fam.path(4), Coloring(3, (2, 1, 3, 2)), 3)
    assert feasible_k(fam.path(4), 3) is None
    assert naive_b_colorable(fam.path(4), 3) is False


def test_feasible_k_range():
    with pytest.raises(ValueError):
        feasible_k(fam.path(3), 0)
    with pytest.raises(ValueError):
        feasible_k(fam.path(3), 4)


def test_feasible_k_budget_timeout():
    with pytest.raises(SearchTimeout):
        feasible_k(fam.set_graph(4), 10, budget=5)


def test_phi_timeout_reports_range():
    with pytest.raises(PhiTimeout) as info:
        phi(fam.set_graph(4), budget=3)
    assert info.value.undecided
    assert max(info.value.undecided) == m_bound(fam.set_graph(4))


@pytest.mark.parametrize(
    "g, expected",
    [
        (fam.complete(5), 5),
        (fam.path(3), 2),
        (underlying(fam.jaco(fam.JacoParams(5, 1, 0))), 3),
        (fam.cycle(5), 3),
        (fam.complete_bipartite(3, 3), 2),
        (fam.edgeless(4), 1),
        (fam.complete(1), 1),
    ],
)
def test_phi_and_oracle_examples(g, expected):
    assert phi(g).phi == expected
    assert phi_oracle(g) == expected


def test_phi_jaco5_against_naive_enumeration():
    g = underlying(fam.jaco(fam.JacoParams(5, 1, 0)))
    ks = {k for k in range(1, 6) if naive_b_colorable(g, k)}
    assert max(ks) == 3


def test_phi_result_witness():
    res = phi(fam.cycle(5))
    assert is_b_coloring(fam.cycle(5), res.witness, res.phi)
    assert sorted(res.b_vertices) == [1, 2, 3]
    for color, v in res.b_vertices.items():
        assert res.witness.color(v) == color
    d = res.to_dict()
    assert d["phi"] == 3 and d["k"] == 3 and set(d["b_vertices"]) == {"1", "2", "3"}


def test_phi_is_deterministic():
    g = fam.helm(5)
    assert phi(g) == phi(g)


def test_oracle_cap():
    with pytest.raises(ValueError):
        phi_oracle(fam.path(10))


def test_spectrum_examples():
    assert b_spectrum(fam.path(5)).feasible == {2, 3}
    assert b_spectrum(fam.complete(4)).feasible == {4}
    assert b_spectrum(fam.cycle(4)).feasible == {2}
    assert oracle_spectrum(fam.path(5)) == {2, 3}
    assert oracle_spectrum(fam.cycle(4)) == {2}


def test_spectrum_can_have_gaps():
    # the 3-cube admits b-colorings with 2 and 4 colors but not 3
    cube = build_graph(8, [(a + 1, b + 1) for a in range(8) for b in range(a + 1, 8) if bin(a ^ b).count("1") == 1])
    assert oracle_spectrum(cube) == {2, 4}
    assert b_spectrum(cube).feasible == {2, 4}


def test_oracle_against_naive_on_small_graphs():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(2, 6)
        g = build_graph(n, [p for p in itertools.combinations(range(1, n + 1), 2) if rng.random() < 0.5])
        naive = {k for k in range(1, n + 1) if naive_b_colorable(g, k)}
        assert oracle_spectrum(g) == naive


def test_chromatic_number():
    assert chromatic_number(fam.cycle(5)) == 3
    assert chromatic_number(fam.complete_bipartite(3, 3)) == 2
    assert chromatic_number(fam.wheel(5)) == 4


def test_coloring_json_roundtrip():
    c = Coloring(3, (1, 2, 3, 1))
    assert Coloring.from_json('{"k": 3, "colors": [1, 2, 3, 1]}') == c
    assert Coloring.from_dict(c.to_dict()) == c
    with pytest.raises(ColoringError):
        Coloring.from_json('{"colors": [1]}')
    with pytest.raises(ColoringError):
        Coloring(2, (1, 3))


# -- properties ----------------------------------------------------------------

@settings(max_examples=150, deadline=None)
@given(small_graphs())
def test_solver_matches_oracle(g):
    for definition in ("standard", "pairwise"):
        spectrum = oracle_spectrum(g, definition)
        assert phi(g, definition=definition).phi == max(spectrum)
        for k in range(1, g.n + 1):
            assert (feasible_k(g, k, definition=definition) is not None) == (k in spectrum)


@settings(max_examples=150, deadline=None)
@given(small_graphs())
def test_bound_sandwich(g):
    res = phi(g)
    delta = max(g.degree(v) for v in g.vertices)
    assert chromatic_number(g) <= res.phi <= m_bound(g) <= delta + 1
    assert is_b_coloring(g, res.witness, res.phi)
    assert all(g.degree(v) >= res.phi - 1 for v in res.b_vertices.values())


@settings(max_examples=100, deadline=None)
@given(small_graphs(min_n=2), st.randoms(use_true_random=False))
def test_color_permutation_invariance(g, rnd):
    res = phi(g)
    perm = list(range(1, res.phi + 1))
    rnd.shuffle(perm)
    renamed = Coloring(res.phi, tuple(perm[c - 1] for c in res.witness.colors))
    assert is_proper(g, renamed)
    assert is_b_coloring(g, renamed, res.phi)
    arbitrary = Coloring(g.n, tuple(rnd.randint(1, g.n) for _ in g.vertices))
    shuffled = list(range(1, g.n + 1))
    rnd.shuffle(shuffled)
    moved = Coloring(g.n, tuple(shuffled[c - 1] for c in arbitrary.colors))
    assert is_proper(g, arbitrary) == is_proper(g, moved)
    assert is_b_coloring(g, arbitrary) == is_b_coloring(g, moved)


@settings(max_examples=100, deadline=None)
@given(small_graphs(min_n=2), st.randoms(use_true_random=False))
def test_phi_invariant_under_relabeling(g, rnd):
    labels = list(g.vertices)
    rnd.shuffle(labels)
    h = relabel(g, dict(zip(g.vertices, labels)))
    assert phi(h).phi == phi(g).phi
