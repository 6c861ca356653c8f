import json
import random
from itertools import product

import pytest

from majpart.graph import BLUE, RED, color_degree
from majpart.instances import SAT_EXAMPLE, NAE_EXAMPLE, CnfFormula, Hypergraph3, MalformedFormula
from majpart.partition import KPartition, verify_bicolor_cut, verify_connected_cut, verify_majority
from majpart.reductions import (
    K44_BLUE_CYCLE,
    K44_RED_CYCLE,
    PartitionInvalid,
    WitnessInvalid,
    lift_witness,
    project_witness,
    reduce_h3c_majority3,
    reduce_nae_connected,
    reduce_sat_bicolor,
    reduce_sat_majority2,
)
from majpart.solvers import exact_bicolor_cut, exact_connected_cut, exact_majority

from oracles import brute_3colorable, brute_nae, brute_sat, random_formula


def _assignments(n):
    for bits in product((False, True), repeat=n):
        yield {i + 1: b for i, b in enumerate(bits)}


def _red_degrees(g):
    return [color_degree(g, v, RED) for v in range(g.n)]


def test_sat_bicolor_example_counts():
    r = reduce_sat_bicolor(SAT_EXAMPLE)
    g = r.graph
    assert g.n == 2 * 4 + 2 * 3 + 8 == 22
    assert len(g.color_edges(RED)) == 4 + 3 + 4
    assert all(d == 1 for d in _red_degrees(g))  # perfect matching
    assert json.loads(r.roles_json())["roles"]["1"] == "w_1"


def test_sat_bicolor_lift_and_project_example():
    r = reduce_sat_bicolor(SAT_EXAMPLE)
    phi = {1: True, 2: True, 3: True}
    p = lift_witness(r, phi)
    assert verify_bicolor_cut(r.graph, p).ok
    back = project_witness(r, p)
    assert SAT_EXAMPLE.satisfies(back)


def test_sat_bicolor_rejects_bad_witness_and_partition():
    f = CnfFormula(3, ((1, 2, 3),))
    r = reduce_sat_bicolor(f)
    with pytest.raises(WitnessInvalid):
        lift_witness(r, {1: False, 2: False, 3: False})
    with pytest.raises(PartitionInvalid):
        project_witness(r, KPartition(2, (1,) * r.graph.n))
    with pytest.raises(MalformedFormula):
        reduce_sat_bicolor(CnfFormula(3, ((1, -1, 2),)))


def test_sat_majority2_example():
    r = reduce_sat_majority2(SAT_EXAMPLE)
    g = r.graph
    assert r.meta["q"] == {"1": 2, "2": 2, "3": 2}
    for j in range(1, 5):
        assert color_degree(g, r.vertex(f"w_{j}"), BLUE) == 4
    p = lift_witness(r, {1: True, 2: True, 3: True})
    assert verify_majority(g, p).ok
    assert SAT_EXAMPLE.satisfies(project_witness(r, p))


def test_sat_majority2_red_edges_match_except_at_z1():
    f = SAT_EXAMPLE
    g = reduce_sat_majority2(f).graph
    r = reduce_sat_majority2(f)
    z1 = r.vertex("z_1")
    degs = _red_degrees(g)
    assert degs[z1] == f.m + 1
    assert all(d == 1 for v, d in enumerate(degs) if v != z1)


@pytest.mark.parametrize("seed", range(40))
def test_sat_lifts_verify_on_random_formulas(seed):
    rng = random.Random(seed)
    n, m = rng.randint(3, 5), rng.randint(1, 5)
    f = CnfFormula(n, tuple(random_formula(rng, n, m)))
    models = [a for a in _assignments(n) if f.satisfies(a)]
    for make in (reduce_sat_bicolor, reduce_sat_majority2):
        r = make(f)
        for a in models[:4]:
            p = lift_witness(r, a)
            assert f.satisfies(project_witness(r, p))


def test_h3c_single_edge_and_lift():
    h = Hypergraph3(3, ((0, 1, 2),))
    r = reduce_h3c_majority3(h)
    assert r.graph.n == 7
    p = lift_witness(r, [1, 2, 3])
    assert verify_majority(r.graph, p).ok
    assert project_witness(r, p) == [1, 2, 3]
    with pytest.raises(WitnessInvalid):
        lift_witness(r, [1, 1, 1])


def test_h3c_lifts_for_every_proper_coloring():
    h = Hypergraph3(5, ((0, 1, 2), (1, 2, 3), (2, 3, 4), (0, 3, 4)))
    r = reduce_h3c_majority3(h)
    assert r.graph.n == 5 + 4 * 4
    for colors in product((1, 2, 3), repeat=5):
        if h.is_proper_coloring(colors):
            p = lift_witness(r, colors)
            assert h.is_proper_coloring(project_witness(r, p))


def test_h3c_k4_complete_agrees_with_oracle():
    from itertools import combinations

    h = Hypergraph3(4, tuple(combinations(range(4), 3)))
    r = reduce_h3c_majority3(h)
    assert exact_majority(r.graph, 3).sat == brute_3colorable(4, h.edges)


def test_nae_example():
    r = reduce_nae_connected(NAE_EXAMPLE)
    assert r.graph.n == 3 * 3 + 8 == 17
    assert r.meta["e5"] == {"1": [1, 1], "2": [1, 2], "3": [1, 3], "4": [2, 3]}
    # the two Hamilton cycles on the K_{4,4} are edge-disjoint and cover it
    pairs = set()
    for cycle in (K44_BLUE_CYCLE, K44_RED_CYCLE):
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            assert a[0] != b[0]
            pairs.add(frozenset((a, b)))
    assert len(pairs) == 16
    sat = [a for a in _assignments(4) if NAE_EXAMPLE.nae_satisfies(a)]
    assert sat
    p = lift_witness(r, sat[0])
    assert verify_connected_cut(r.graph, p) == (True, True)
    assert NAE_EXAMPLE.nae_satisfies(project_witness(r, p))


@pytest.mark.parametrize("seed", range(30))
def test_nae_equivalence_random(seed):
    rng = random.Random(1000 + seed)
    n, m = rng.randint(3, 4), rng.randint(1, 3)
    f = CnfFormula(n, tuple(random_formula(rng, n, m)))
    r = reduce_nae_connected(f)
    assert r.graph.n == 3 * r.normalization.formula.m + 8
    out = exact_connected_cut(r.graph)
    assert out.sat == brute_nae(n, f.clauses)
    if out.sat:
        assert f.nae_satisfies(project_witness(r, out.witness))


@pytest.mark.parametrize("seed", range(20))
def test_sat_bicolor_equivalence_random(seed):
    rng = random.Random(2000 + seed)
    n, m = rng.randint(3, 4), rng.randint(1, 4)
    f = CnfFormula(n, tuple(random_formula(rng, n, m)))
    r = reduce_sat_bicolor(f)
    out = exact_bicolor_cut(r.graph)
    assert out.sat == brute_sat(n, f.clauses)
    if out.sat:
        assert f.satisfies(project_witness(r, out.witness))


def test_unsatisfiable_formula_gives_no_bicolor_cut():
    # all 8 sign patterns on three variables
    f = CnfFormula(3, tuple(tuple(s * (i + 1) for i, s in enumerate(signs)) for signs in product((1, -1), repeat=3)))
    assert not brute_sat(3, f.clauses)
    assert not exact_bicolor_cut(reduce_sat_bicolor(f).graph).sat
