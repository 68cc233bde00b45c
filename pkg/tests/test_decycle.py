import pytest

from cubicbip.core import OddCycleWitness
from cubicbip.decycle import (
    CASE_1_1,
    CASE_1_2,
    CASE_2_1,
    CASE_2_2,
    DEG3_ABSORB,
    PathP,
    alternating_path,
    bipartize,
    break_cycle,
    find_path,
    meets_threshold,
    new_independent_set,
    non_alternating_path,
    odd_cycle_through_edge,
    shrink_certificate,
    solve,
    threshold_size,
    verify_solution,
)
from cubicbip.errors import (
    BadStart,
    IterationCapExceeded,
    KOutOfRange,
    NotAlternating,
    NotTripartite,
    ResultNotIndependent,
    ThresholdNotMet,
)
from cubicbip.gen import GenSpec, named, random_cubic
from cubicbip.residuum import complement, free_sets, residuum

from . import oracles
from .fixtures import (
    ABSORB,
    ABSORB_I,
    BLOCKED,
    BLOCKED_I,
    DIAMOND_END,
    DIAMOND_END_I,
    SEVEN_CYCLE_I,
    TYPE_TWO_I,
    seven_cycle,
    type_two,
)


def _shrinks(G, I, J):
    before, after = oracles.residuum(G, I), oracles.residuum(G, J)
    return after < before


def _path(G, S, vertices):
    return PathP(tuple(vertices), tuple(v in S for v in vertices))


def test_threshold_helpers():
    assert [threshold_size(n) for n in (10, 12, 20, 24)] == [4, 5, 8, 10]
    assert meets_threshold(20, 8) and not meets_threshold(22, 8)


# path selection and the three procedures ------------------------------------


def test_find_path_seven_cycle():
    G, I = seven_cycle(), SEVEN_CYCLE_I
    C = residuum(G, I).shortest_cycle()
    assert C.vertices == (0, 13, 14)
    P = find_path(G, I, C, free_sets(G, I))
    assert P.vertices == (0, 1, 2, 3, 4, 5, 6)
    assert P.in_set == (False, True, False, True, False, False, True)
    assert P.last == 6


def test_alternating_path_break_and_block():
    G, I = seven_cycle(), SEVEN_CYCLE_I
    P = _path(G, I, range(7))
    # 4 and 5 are consecutive non-members
    assert alternating_path(G, P, 0, I) == 4
    # resuming at 5 runs to the end
    assert alternating_path(G, P, 5, I) == 6
    with pytest.raises(BadStart):
        alternating_path(G, P, 1, I)
    Q = _path(BLOCKED, BLOCKED_I, (0, 1, 2, 3))
    assert alternating_path(BLOCKED, Q, 0, BLOCKED_I) == 2


def test_new_independent_set_prefix_and_full():
    G, I = seven_cycle(), SEVEN_CYCLE_I
    F = free_sets(G, I)
    P = _path(G, I, range(7))
    assert new_independent_set(G, P, 0, 4, I, F) == (I - {1, 3}) | {0, 2}
    with pytest.raises(NotAlternating):
        new_independent_set(G, P, 0, 6, I, F)


def test_new_independent_set_swaps_diamond():
    G, I = type_two(), TYPE_TWO_I
    F = free_sets(G, I)
    # path ending on u = 0 from its outer neighbour 4, with x = 6 released
    S = I - {6}
    P = _path(G, S, (4, 0))
    assert new_independent_set(G, P, 0, 1, S, F) == {4, 2, 8}
    assert new_independent_set(G, P, 0, 1, S, F, use_b=True) == {4, 3, 8}


def test_new_independent_set_detects_conflict():
    G, I = seven_cycle(), SEVEN_CYCLE_I
    F = free_sets(G, I)
    # 5 should be a member to be swapped out
    with pytest.raises(NotAlternating):
        new_independent_set(G, _path(G, I, (4, 5)), 0, 1, I, F)
    # 7 would join next to 12
    with pytest.raises(ResultNotIndependent):
        new_independent_set(G, _path(G, I, (7, 11, 4)), 0, 2, I, F)


def test_odd_cycle_through_edge():
    G, I = seven_cycle(), SEVEN_CYCLE_I
    S = complement(G, (I - {1, 3}) | {0, 2})
    c = odd_cycle_through_edge(G, S, 3, 4)
    assert c == OddCycleWitness((3, 4, 5, 7, 8, 9, 10))
    assert odd_cycle_through_edge(G, complement(G, I), 4, 5) is None


def test_odd_cycle_through_edge_is_shortest():
    for seed in range(10):
        G = random_cubic(GenSpec(14, seed))
        S = complement(G, {0})
        cycles = oracles.odd_cycles(G, S)
        for x, y in G.edges():
            if x in S and y in S:
                through = [c for c in cycles if frozenset((x, y)) in c]
                got = odd_cycle_through_edge(G, S, x, y)
                if not through:
                    assert got is None
                else:
                    assert len(got) == min(len(c) for c in through)
                    assert (x, y) in got.edges() or (y, x) in got.edges()


def test_case_2_2_follows_cycle_back_to_path():
    G, I = seven_cycle(), SEVEN_CYCLE_I
    S = (I - {1, 3}) | {0, 2}
    P = _path(G, I, range(7))
    out = non_alternating_path(G, P, 4, S)
    assert out.case == CASE_2_2
    assert out.cycle.vertices == (3, 4, 5, 7, 8, 9, 10)
    assert out.out == 5 and out.J == S


def test_case_2_2_cuts_at_degree_three():
    G = seven_cycle()
    S = (SEVEN_CYCLE_I - {1, 3, 11}) | {0, 2}
    P = _path(G, SEVEN_CYCLE_I, range(7))
    out = non_alternating_path(G, P, 4, S)
    # 4 has residual degree 3 once 11 is out of the set
    assert out.case == CASE_2_2 and out.J == S | {4} and out.out == P.last


def test_case_2_1_no_cycle_through_edge():
    G = seven_cycle()
    S = frozenset({0, 2, 6, 7, 11, 15, 21})
    P = _path(G, S, range(7))
    out = non_alternating_path(G, P, 4, S)
    assert out.case == CASE_2_1 and out.J == S and out.cycle is None


def test_non_alternating_path_rejects_member_edge():
    G, I = seven_cycle(), SEVEN_CYCLE_I
    with pytest.raises(NotAlternating):
        non_alternating_path(G, _path(G, I, range(7)), 1, I)


# whole rounds on the fixtures -------------------------------------------------


@pytest.mark.parametrize(
    "G, I, cases, path, J",
    [
        (seven_cycle(), SEVEN_CYCLE_I, (CASE_2_2, CASE_1_1), (0, 1, 2, 3, 4, 5, 6), {0, 2, 5, 11, 12, 15, 21}),
        (BLOCKED, BLOCKED_I, (CASE_1_2,), (0, 1, 2, 3), {0, 3, 4, 15, 16, 19}),
        (DIAMOND_END, DIAMOND_END_I, (CASE_1_1,), (0, 1), {0, 3, 15, 16, 17, 19, 22}),
        (ABSORB, ABSORB_I, (DEG3_ABSORB,), (), ABSORB_I | {9}),
    ],
    ids=["seven_cycle", "blocked", "diamond_end", "absorb"],
)
def test_break_cycle_fixtures(G, I, cases, path, J):
    C = residuum(G, I).shortest_cycle()
    got, rec = break_cycle(G, I, C, require_threshold=False)
    assert rec.cases == cases and rec.path == path and got == J
    assert len(got) >= len(I)
    assert _shrinks(G, I, got)
    assert shrink_certificate(G, I, got)


def test_break_cycle_threshold_guard():
    G, I = seven_cycle(), SEVEN_CYCLE_I
    C = residuum(G, I).shortest_cycle()
    with pytest.raises(ThresholdNotMet):
        break_cycle(G, I, C)
    # the absorb fixture sits exactly on the threshold
    assert meets_threshold(ABSORB.n, len(ABSORB_I))
    break_cycle(ABSORB, ABSORB_I, residuum(ABSORB, ABSORB_I).shortest_cycle())


def test_shrink_certificate_matches_enumeration():
    for seed in range(6):
        G = random_cubic(GenSpec(12, seed))
        sets = oracles.independent_sets(G)
        sets = [S for S in sets if len(S) >= 3][:40]
        for I in sets:
            for J in sets:
                if len(J) >= len(I):
                    assert shrink_certificate(G, I, J) == _shrinks(G, I, J)


def test_bipartize_fixture_and_cap():
    J, trace = bipartize(ABSORB, ABSORB_I)
    assert residuum(ABSORB, J).is_empty and trace.final == J
    assert trace.cases_taken()[0] == DEG3_ABSORB and trace.count >= 1
    with pytest.raises(IterationCapExceeded):
        bipartize(ABSORB, ABSORB_I, max_rounds=0)
    with pytest.raises(ThresholdNotMet):
        bipartize(BLOCKED, BLOCKED_I)


# solve ------------------------------------------------------------------------


def test_solve_petersen():
    G = named("petersen")
    r = solve(G, 4)
    rest = complement(G, r.independent_set)
    assert r.verified and r.route == "direct" and r.alpha == 4
    # six vertices, three disjoint edges
    assert len(rest) == 6 and all(sum(u in rest for u in G.adj[v]) == 1 for v in rest)
    assert solve(G, 3).verified
    with pytest.raises(KOutOfRange):
        solve(G, 5)
    with pytest.raises(KOutOfRange):
        solve(G, 2)


@pytest.mark.parametrize("name", ["k33", "k4", "moebius_kantor"])
def test_solve_rejects_out_of_class(name):
    with pytest.raises(NotTripartite):
        solve(named(name), 2)


def test_solve_threshold_not_met():
    G = next(
        g for g in (random_cubic(GenSpec(n, s)) for n in (10, 12, 14) for s in range(100))
        if not meets_threshold(g.n, oracles.brute_alpha(g))
    )
    with pytest.raises(ThresholdNotMet):
        solve(G, G.n // 3)


def test_solve_routes_and_json():
    routes = set()
    for seed in range(10):
        G = random_cubic(GenSpec(18, seed))
        alpha = oracles.brute_alpha(G)
        if not meets_threshold(18, alpha):
            continue
        for k in range((18 - alpha) // 2, alpha + 1):
            r = solve(G, k)
            routes.add(r.route)
            assert verify_solution(G, r.independent_set, k)
            assert oracles.brute_bipartite(G, complement(G, r.independent_set))
            doc = r.to_json()
            assert doc["schema"] == 1 and doc["k"] == k and doc["verified"] is True
            assert doc["coloring_sizes"] == [k, -(-(18 - k) // 2), (18 - k) // 2]
    assert routes == {"direct", "reduce", "split"}
