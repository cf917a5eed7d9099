import random

import pytest

from contractlab import Graph, PatternSpec, contracts_to, is_connected, verify_witness
from contractlab.dcs import TwoDCSSolution, check_2dcs, p4_contractible, solve_2dcs
from contractlab.search import SearchBudgetExceeded

from oracles import all_graphs, brute_2dcs, contraction_shapes, random_graph


def path(n):
    vs = [str(i) for i in range(1, n + 1)]
    return Graph(vs, zip(vs, vs[1:]))


def cycle(n):
    vs = [str(i) for i in range(1, n + 1)]
    return Graph(vs, zip(vs, vs[1:] + vs[:1]))


STAR = Graph.from_edges([("s", "l1"), ("s", "l2"), ("s", "l3")])


def test_2dcs_on_a_path():
    g = Graph.from_edges([("a", "b"), ("b", "c"), ("c", "d")])
    sol = solve_2dcs(g, ["a"], ["d"])
    assert sol is not None and check_2dcs(g, ["a"], ["d"], sol)
    assert solve_2dcs(g, ["a", "c"], ["b"]) is None


def test_2dcs_star_has_no_split():
    assert solve_2dcs(STAR, ["l1", "l2"], ["s"]) is None
    assert solve_2dcs(STAR, ["l1", "l2"], ["l3"]) is not None


def test_2dcs_on_c6():
    g = cycle(6)
    sol = solve_2dcs(g, ["1", "3"], ["5"])
    assert sol is not None and {"1", "2", "3"} <= sol.a1 and "5" in sol.a2
    assert check_2dcs(g, ["1", "3"], ["5"], sol)
    assert solve_2dcs(g, ["1", "4"], ["2", "5"]) is None


@pytest.mark.parametrize("z1, z2", [([], ["1"]), (["1"], []), (["1", "2"], ["2"])])
def test_2dcs_rejects_bad_terminals(z1, z2):
    with pytest.raises(ValueError):
        solve_2dcs(path(4), z1, z2)


def test_check_2dcs_rejects_bad_solutions():
    g = path(4)
    assert not check_2dcs(g, ["1"], ["4"], TwoDCSSolution({"1", "3"}, {"2", "4"}))
    assert not check_2dcs(g, ["1"], ["4"], TwoDCSSolution({"1"}, {"2", "3"}))
    assert not check_2dcs(g, ["1"], ["4"], TwoDCSSolution({"4", "3"}, {"1", "2"}))


def test_2dcs_matches_full_enumeration():
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randint(2, 9)
        g = random_graph(rng, n, rng.choice([0.25, 0.4, 0.6]))
        vs = list(g.vertices)
        rng.shuffle(vs)
        k1 = rng.randint(1, min(2, n - 1))
        k2 = rng.randint(1, min(2, n - k1))
        z1, z2 = vs[:k1], vs[k1:k1 + k2]
        sol = solve_2dcs(g, z1, z2)
        every = brute_2dcs(g, z1, z2)
        assert (sol is None) == (not every)
        if sol is not None:
            assert check_2dcs(g, z1, z2, sol)
            assert (sol.a1, sol.a2) in every


def test_2dcs_budget():
    g = Graph.from_edges([(str(i), str(j)) for i in range(12) for j in range(i + 1, 12) if (i + j) % 3])
    with pytest.raises(SearchBudgetExceeded):
        solve_2dcs(g, ["0"], ["1"], budget=0)


def test_p4_examples():
    ws = p4_contractible(path(4))
    assert ws is not None and [sorted(ws[c]) for c in ws.pattern.labels] == [["1"], ["2"], ["3"], ["4"]]
    assert p4_contractible(STAR) is None
    assert p4_contractible(cycle(6)) is None
    assert contracts_to(cycle(6), PatternSpec.path(4)) is None
    assert p4_contractible(Graph.from_edges([("a", "b"), ("c", "d"), ("d", "e"), ("e", "f")])) is None


def test_p4_witness_is_valid_on_long_path():
    g = path(7)
    ws = p4_contractible(g)
    assert verify_witness(g, ws) and ws["p1"] == {"1"}


@pytest.mark.parametrize("n", range(1, 6))
def test_p4_matches_partition_oracle(n):
    for g in all_graphs(n):
        expected = ("path", 4) in contraction_shapes(g)
        ws = p4_contractible(g)
        assert (ws is not None) == expected
        if ws is not None:
            assert verify_witness(g, ws)


def test_p4_accepts_a_custom_solver():
    calls = []

    def solver(g, z1, z2, *, budget=None):
        calls.append((frozenset(z1), frozenset(z2)))
        return solve_2dcs(g, z1, z2, budget=budget)

    assert p4_contractible(path(5), solver=solver) is not None
    assert calls


def test_p4_matches_generic_search_on_seven_vertices():
    rng = random.Random(17)
    for _ in range(150):
        g = random_graph(rng, 7, rng.choice([0.25, 0.35, 0.5]))
        ws = p4_contractible(g)
        assert (ws is not None) == (contracts_to(g, PatternSpec.path(4)) is not None)
        if ws is not None:
            assert verify_witness(g, ws)


def test_2dcs_matches_enumeration_with_twelve_free_vertices():
    rng = random.Random(23)
    for _ in range(25):
        g = random_graph(rng, 14, rng.choice([0.2, 0.3]))
        vs = list(g.vertices)
        rng.shuffle(vs)
        z1, z2 = vs[:1], vs[1:2]
        sol = solve_2dcs(g, z1, z2)
        every = brute_2dcs(g, z1, z2)
        assert (sol is None) == (not every)
        if sol is not None:
            assert check_2dcs(g, z1, z2, sol)
