import random

import pytest

from strongodd.colorings import Coloring, is_strong_odd, neighborhood_histogram
from strongodd.constructive import (
    ConstructionError,
    ProvenanceLog,
    c5_box_c5_table,
    color_cycle,
    color_direct_complete,
    color_tree,
    color_tree_constrained,
    color_unicyclic,
    compose_lexicographic,
    compose_product_coloring,
    cycle_pattern,
    decompose_unicyclic,
    is_odd_tree,
    nordhaus_gaddum,
    plan_rooted_tree,
)
from strongodd.graphs import (
    Graph,
    complement,
    join,
    make_complete,
    make_cycle,
    make_path,
    make_star,
    product,
)
from strongodd.randgen import random_odd_tree, random_tree, random_unicyclic
from strongodd.solver import brute_force_chi_so, chi_so_exact


def test_is_odd_tree():
    assert is_odd_tree(make_star(3))
    assert not is_odd_tree(make_path(4))
    assert is_odd_tree(make_complete(2))


def test_rooted_plan_orders_parents_first():
    t = random_tree(30, random.Random(8))
    plan = plan_rooted_tree(t)
    pos = {v: i for i, v in enumerate(plan.bfs_order)}
    for v in range(t.n):
        if plan.parent[v] >= 0:
            assert pos[plan.parent[v]] < pos[v]


def test_color_tree_examples():
    assert color_tree(make_star(3)).k == 2
    phi = color_tree(make_path(4))
    assert phi.k == 3
    assert is_strong_odd(make_path(4), phi) == []


def test_tree_dichotomy_on_random_corpus():
    rng = random.Random(41)
    for i in range(150):
        t = random_tree(rng.randint(2, 60), rng)
        phi = color_tree(t)
        assert is_strong_odd(t, phi) == []
        assert (phi.k == 2) == is_odd_tree(t)
    for i in range(40):
        t = random_odd_tree(rng.randint(0, 25), rng)
        assert is_odd_tree(t)
        phi = color_tree(t)
        assert is_strong_odd(t, phi) == [] and phi.k == 2


def test_color_tree_rejects_non_tree():
    with pytest.raises(ConstructionError):
        color_tree(make_cycle(4))


def test_cycle_patterns_match_formula_and_oracle():
    for n in range(3, 10):
        phi = color_cycle(n)
        expected = 3 if n % 3 == 0 else (5 if n == 5 else 4)
        assert phi.k == expected
        assert is_strong_odd(make_cycle(n), phi) == []
        assert brute_force_chi_so(make_cycle(n)) == expected
    assert cycle_pattern(9) == (0, 1, 2, 0, 1, 2, 0, 1, 2)
    assert cycle_pattern(5) == (0, 1, 2, 3, 4)


def test_cycle_pattern_is_square_proper():
    for n in range(3, 30):
        pat = cycle_pattern(n)
        for i in range(n):
            assert pat[i] != pat[(i + 1) % n]
            assert pat[i] != pat[(i + 2) % n]


def test_decompose_unicyclic():
    # five-cycle with one pendant vertex
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (2, 5)])
    dec = decompose_unicyclic(g)
    assert len(dec.cycle) == 5
    assert dec.pendant_roots == {2: (5,)}
    # bare cycle
    dec = decompose_unicyclic(make_cycle(6))
    assert dec.pendant_roots == {}
    # tadpole: six-cycle plus a path of three
    g = Graph.from_edges(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5),
                             (3, 6), (6, 7), (7, 8)])
    dec = decompose_unicyclic(g)
    assert len(dec.cycle) == 6
    assert dec.tree_vertices[6] == (6, 7, 8)
    with pytest.raises(ConstructionError):
        decompose_unicyclic(make_path(4))


def test_color_unicyclic_examples():
    assert color_unicyclic(make_cycle(5)).k == 5
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (2, 5)])
    phi = color_unicyclic(g)
    assert is_strong_odd(g, phi) == [] and phi.k == 4


def test_color_unicyclic_random_corpus():
    rng = random.Random(77)
    for _ in range(150):
        g = random_unicyclic(rng.randint(3, 60), rng)
        phi = color_unicyclic(g)
        assert is_strong_odd(g, phi) == []
        dec = decompose_unicyclic(g)
        cap = 5 if (len(dec.cycle) == 5 and not dec.pendant_roots) else 4
        assert phi.k <= cap


def test_color_tree_constrained_cases():
    # a root with two children: they take the two other palette colors
    t = make_star(2)
    colors = color_tree_constrained(t, 0, 1, 0, (1, 2, 3))
    assert colors[0] == 1 and {colors[1], colors[2]} == {2, 3}
    # three children: monochromatic
    t = make_star(3)
    colors = color_tree_constrained(t, 0, 2, 0, (1, 2, 3))
    assert len({colors[1], colors[2], colors[3]}) == 1
    with pytest.raises(ConstructionError):
        color_tree_constrained(t, 0, 0, 0, (1, 2, 3))
    with pytest.raises(ConstructionError):
        color_tree_constrained(t, 0, 1, 1, (1, 2, 3))


def test_linear_time_step_counters():
    rng = random.Random(3)
    t = random_tree(400, rng)
    log = ProvenanceLog()
    color_tree(t, log)
    assert log.steps <= 10 * t.n
    g = random_unicyclic(400, rng)
    log = ProvenanceLog()
    color_unicyclic(g, log)
    assert log.steps <= 10 * g.n


def test_compose_product_coloring_bounds():
    g, h = make_cycle(6), make_cycle(6)
    phi = color_cycle(6)
    for kind in ("cartesian", "direct", "strong"):
        composed = compose_product_coloring(g, phi, h, phi, kind)
        assert is_strong_odd(product(g, h, kind), composed) == []
        assert composed.k <= phi.k * phi.k
    with pytest.raises(ConstructionError):
        compose_product_coloring(g, Coloring((0,) * 6), h, phi, "cartesian")
    with pytest.raises(ConstructionError):
        compose_product_coloring(g, phi, h, phi, "lexicographic")


def test_compose_lexicographic():
    # trivial left factor: the restricted coloring itself must verify
    k1 = make_complete(1)
    h = make_path(6)
    apex = chi_so_exact(join(make_complete(1), h)).witness
    phi = compose_lexicographic(k1, Coloring((0,)), h, apex)
    assert is_strong_odd(product(k1, h, "lexicographic"), phi) == []
    # bound chi_so(G) * (chi_so(H + K1) - 1)
    g = make_cycle(6)
    phi_g = color_cycle(6)
    h = make_complete(2)
    apex = chi_so_exact(join(make_complete(1), h)).witness
    composed = compose_lexicographic(g, phi_g, h, apex)
    assert is_strong_odd(product(g, h, "lexicographic"), composed) == []
    assert composed.k <= phi_g.k * (apex.k - 1) == 6


def test_direct_complete_values():
    cases = {(3, 3): 9, (4, 3): 3, (4, 6): 4, (2, 2): 2, (5, 5): 25, (3, 4): 3}
    for (p, q), expected in cases.items():
        phi = color_direct_complete(p, q)
        d = product(make_complete(p), make_complete(q), "direct")
        assert is_strong_odd(d, phi) == []
        assert phi.k == expected
    with pytest.raises(ConstructionError):
        color_direct_complete(1, 3)


def test_c5_grid_table():
    phi = c5_box_c5_table()
    # spot-check three fixed cells of the published table
    assert phi.colors[0] == 0
    assert phi.colors[5] == 3
    assert phi.colors[24] == 1
    f = product(make_cycle(5), make_cycle(5), "cartesian")
    assert is_strong_odd(f, phi) == [] and phi.k == 5
    for v in range(25):
        hist = neighborhood_histogram(f, phi, v)
        assert all(c == 1 for c in hist.values())


def _all_strong_odd_colorings(g):
    """Exhaustive canonical enumeration (properness-pruned restricted
    growth), independent of the search engine."""
    assignment = [0] * g.n
    out = []

    def rec(v, used):
        if v == g.n:
            phi = Coloring(tuple(assignment))
            if not is_strong_odd(g, phi):
                out.append(phi)
            return
        for c in range(used + 1):
            if any(assignment[u] == c for u in g.adj[v] if u < v):
                continue
            assignment[v] = c
            rec(v + 1, max(used, c + 1))

    rec(0, 0)
    return out


def test_direct_complete_odd_side_never_repeats_in_column():
    # with an odd second factor, no column (fixed first coordinate) of
    # the direct product can use a color twice, in any strong odd coloring
    for p, q in [(2, 3), (3, 3), (4, 3)]:
        d = product(make_complete(p), make_complete(q), "direct")
        colorings = _all_strong_odd_colorings(d)
        assert colorings
        for phi in colorings:
            for g_idx in range(p):
                column = [phi.colors[g_idx * q + h] for h in range(q)]
                assert len(set(column)) == len(column), (p, q, phi.colors)


def test_nordhaus_gaddum_witnesses():
    for which, expected in (("H1", 3), ("H2", 9)):
        g, phi, phi_c = nordhaus_gaddum(1, which)
        assert g.n == 9
        assert is_strong_odd(g, phi) == [] and phi.k == expected
        assert is_strong_odd(complement(g), phi_c) == [] and phi_c.k == expected
    with pytest.raises(ConstructionError):
        nordhaus_gaddum(0, "H1")
