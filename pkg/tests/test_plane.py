import pytest
from hypothesis import given, strategies as st

from godeaux3.plane import (PlaneCurve, PlaneError, PointCluster,
                            admissible_base, cremona_orbit_connect,
                            degree_budget, fa_ladder_checks,
                            homaloidal_eliminate, quadratic_transform,
                            ruled_constraints, singular_fiber_count_bound,
                            solve_multiplicity_system, state_from_solution)

PRINTED_SOLUTIONS = [
    (3, {1: 7}),
    (4, {2: 2, 1: 6}),
    (5, {2: 5, 1: 3}),
    (6, {3: 1, 2: 6, 1: 1}),
    (7, {3: 3, 2: 5}),
    (8, {3: 6, 2: 2}),
    (9, {4: 1, 3: 7}),
]


def brute_force_oracle(c1, c2, max_points, d_hi=12, j_max=6):
    """Independent check: direct nested loops over the s_j grid."""
    found = []
    for d0 in range(0, d_hi + 1):
        t_sq, t_lin = d0 * d0 - c1, 3 * d0 - c2
        if t_sq < 0 or t_lin < 0:
            continue
        ranges = [range(0, max_points + 1)] * j_max
        stack = [(1, {}, 0, 0, 0)]
        while stack:
            j, acc, pts, lin, sq = stack.pop()
            if j > j_max:
                if lin == t_lin and sq == t_sq:
                    found.append((d0, {k: v for k, v in acc.items() if v}))
                continue
            for s in ranges[j - 1]:
                npts = pts + s
                nlin = lin + j * s
                nsq = sq + j * j * s
                if npts > max_points or nlin > t_lin or nsq > t_sq:
                    break
                nd = dict(acc)
                nd[j] = s
                stack.append((j + 1, nd, npts, nlin, nsq))
    return sorted(found, key=lambda x: (x[0], sorted(x[1].items())))


def test_solutions_match_printed_list():
    sols = solve_multiplicity_system(2, 2, 8)
    assert sols == PRINTED_SOLUTIONS


def test_solver_matches_oracle():
    assert solve_multiplicity_system(2, 2, 8) == brute_force_oracle(2, 2, 8)
    # and on a couple of other systems
    for c1, c2, mp in ((1, 1, 8), (2, 3, 8), (0, 2, 6)):
        got = sorted(solve_multiplicity_system(c1, c2, mp),
                     key=lambda x: (x[0], sorted(x[1].items())))
        assert got == brute_force_oracle(c1, c2, mp)


def test_no_solutions_outside_degree_window():
    sols = solve_multiplicity_system(2, 2, 8, d_range=(0, 20))
    assert min(d for d, _ in sols) == 3
    assert max(d for d, _ in sols) == 9


def test_plane_curve_basics():
    c = PlaneCurve("B0", 9, (4, 3, 3, 3, 3, 3, 3, 3))
    assert c.self_int() == 81 - 16 - 7 * 9 == 2
    assert c.genus() == 28 - 6 - 7 * 3 == 1
    other = PlaneCurve("L", 1, (1, 1, 0, 0, 0, 0, 0, 0))
    assert c.dot(other) == 9 - 7
    with pytest.raises(PlaneError):
        PlaneCurve("bad", 2, (-1, 0, 0))  # negative multiplicity needs the flag
    PlaneCurve("ok", 0, (-1, 1, 0), virtual=True)


def test_point_cluster_invariants():
    cluster = PointCluster(("P1", "P2", "P3"), (("P2", "P1"),), ("P1",))
    assert cluster.parents("P2") == ["P1"]
    with pytest.raises(PlaneError):
        PointCluster(("P1", "P2"), (("P1", "P2"), ("P2", "P1")))  # cycle
    with pytest.raises(PlaneError):
        PointCluster(("P1", "P2"), (("P1", "P2"),), ("P1",))  # planar with parent


def test_proximity_inequality():
    cluster = PointCluster(("P1", "P2"), (("P2", "P1"),))
    good = PlaneCurve("c", 3, (2, 1))
    bad = PlaneCurve("c", 3, (1, 2))
    assert cluster.proximity_ok(good)
    assert not cluster.proximity_ok(bad)
    assert cluster.proximity_ok(PlaneCurve("v", 0, (-1, 1), virtual=True))


def _single_curve_setup(degree, mults):
    points = tuple(f"P{i}" for i in range(1, len(mults) + 1))
    return PointCluster(points), [PlaneCurve("C", degree, tuple(mults))]


def test_quadratic_transform_printed_move():
    # the degree-9 solution maps to the degree-8 one
    cluster, curves = _single_curve_setup(9, (4, 3, 3, 3, 3, 3, 3, 3))
    _, new = quadratic_transform(cluster, curves, ("P1", "P2", "P3"))
    assert new[0].degree == 8
    assert sorted(new[0].mults, reverse=True) == [3, 3, 3, 3, 3, 3, 2, 2]


def test_quadratic_transform_involution():
    cluster, curves = _single_curve_setup(9, (4, 3, 3, 3, 3, 3, 3, 3))
    _, once = quadratic_transform(cluster, curves, ("P1", "P2", "P3"))
    _, twice = quadratic_transform(cluster, once, ("P1", "P2", "P3"), check=False)
    assert twice[0].degree == curves[0].degree
    assert twice[0].mults == curves[0].mults


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_transform_involution_random(m1, m2, m3):
    d = 7
    mults = (m1, m2, m3, 1, 1)
    cluster = PointCluster(("P1", "P2", "P3", "P4", "P5"))
    curve = PlaneCurve("C", d, mults, virtual=True)
    _, once = quadratic_transform(cluster, [curve], ("P1", "P2", "P3"), check=False)
    _, twice = quadratic_transform(cluster, once, ("P1", "P2", "P3"), check=False)
    assert twice[0].mults == curve.mults and twice[0].degree == d


def test_transform_preserves_invariants():
    cluster = PointCluster(tuple(f"P{i}" for i in range(1, 9)))
    b0 = PlaneCurve("B0", 9, (4, 3, 3, 3, 3, 3, 3, 3))
    e1 = PlaneCurve("E1", 3, (1, 1, 1, 1, 1, 1, 1, 1))
    _, new = quadratic_transform(cluster, [b0, e1], ("P1", "P2", "P3"))
    assert new[0].self_int() == b0.self_int()
    assert new[0].dot(new[1]) == b0.dot(e1)
    assert new[1].genus() == e1.genus()


def test_inadmissible_base_triples():
    cluster = PointCluster(tuple(f"P{i}" for i in range(1, 9)))
    flat = [PlaneCurve("C", 9, (3, 3, 3, 0, 0, 0, 0, 0))]
    ok, why = admissible_base(flat, cluster, ("P1", "P2", "P3"))
    assert not ok and "non-collinear" in why
    prox = PointCluster(("P1", "P2", "P3"), (("P2", "P1"),))
    ok, why = admissible_base([PlaneCurve("C", 2, (1, 1, 1))], prox,
                              ("P1", "P2", "P3"))
    assert not ok and "proximate" in why


def test_lemma_move_on_the_middle_sixtuple():
    # base at P1, P2, P8 turns (8,1,1,0,0,0) into the tuple with the line at
    # the other slot of the pencil-orthogonal pair
    from godeaux3.delpezzo import table_8pt

    table = table_8pt("8-1-1-0-0-0")
    _, rows = quadratic_transform(table.cluster, list(table.rows), ("P1", "P2", "P8"))
    degrees = tuple(r.degree for r in rows)
    assert degrees == (8, 1, 0, 0, 1, 0)
    by = {r.name: r for r in rows}
    assert by["E2"].mults == (-1, 0, 0, 0, 0, 0, 0, 0)
    assert by["E4"].mults == (0, 1, 0, 0, 0, 0, 1, 1)


def test_orbit_connects_all_solutions():
    sols = solve_multiplicity_system(2, 2, 8)
    chains = cremona_orbit_connect(sols)
    assert len(chains) == 7
    assert max(len(p) for p in chains.values()) <= 6


def test_orbit_pairwise_within_six_moves():
    # every quadratic transform is an involution, so each certified move is
    # reversible; pairwise distances use the undirected move graph
    sols = solve_multiplicity_system(2, 2, 8)
    states = [state_from_solution(d, s) for d, s in sols]
    from godeaux3.plane import _moves

    adjacency: dict[tuple, set] = {}
    frontier = list(states)
    seen = set(states)
    while frontier:
        s = frontier.pop()
        for _, t in _moves(s):
            adjacency.setdefault(s, set()).add(t)
            adjacency.setdefault(t, set()).add(s)
            if t not in seen:
                seen.add(t)
                frontier.append(t)
    for start in states:
        dist = {start: 0}
        queue = [start]
        while queue:
            cur = queue.pop(0)
            for t in adjacency.get(cur, ()):
                if t not in dist:
                    dist[t] = dist[cur] + 1
                    queue.append(t)
        assert all(dist.get(s, 99) <= 6 for s in states)


def test_orbit_moves_preserve_budget():
    # the anticanonical pairing 3d - sum(m) is preserved by every move
    from godeaux3.plane import _moves

    state = state_from_solution(9, {4: 1, 3: 7})
    seen = {state}
    frontier = [state]
    while frontier:
        nxt = []
        for s in frontier:
            for _, t in _moves(s):
                assert 3 * t[0] - sum(t[1]) == 3 * s[0] - sum(s[1])
                assert t[0] ** 2 - sum(m * m for m in t[1]) == \
                    s[0] ** 2 - sum(m * m for m in s[1])
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt


def test_degree_budget():
    assert degree_budget(7) == 21
    assert degree_budget(6) == 18
    with pytest.raises(PlaneError):
        degree_budget(5)


def test_homaloidal_generic():
    res = homaloidal_eliminate("generic")
    assert res["verdict"] == "contradiction"
    assert res["poly"] == (36, -12, 1)  # the exact square (d - 6)^2
    assert res["min_points"] >= 11


def test_homaloidal_full_system():
    res = homaloidal_eliminate("A'=N")
    assert res["verdict"] == "contradiction"
    assert res["d"] == 6 and res["required_degree"] == 10


def test_ruled_constraints():
    assert ruled_constraints(2) == {"a_ok": True, "c_dot_n": 1, "alpha": 3,
                                    "beta_sum": 25, "beta_min": 6}
    assert not ruled_constraints(3)["a_ok"]
    assert ruled_constraints(0)["beta_sum"] == 13


def test_singular_fiber_count_bound():
    assert singular_fiber_count_bound(2, 6) == 3
    assert singular_fiber_count_bound(1, 3) == 2
    assert singular_fiber_count_bound(0, 0) == 2
    with pytest.raises(PlaneError):
        singular_fiber_count_bound(3, 9)


def test_fa_ladder_identities():
    deep = fa_ladder_checks(1, 3)
    assert deep["squares"] == [0, 3, 4, 3]
    assert deep["c_dot_n"] == 4
    assert deep["branch_coeffs"] == {"c": 12, "f": 19, "delta": -6}
    for a in (0, 1, 2):
        assert fa_ladder_checks(a, 3)["c_dot_n"] == 7 - 3 * a
        assert fa_ladder_checks(a, 3)["branch_coeffs"]["f"] == 6 * a + 13
    middle = fa_ladder_checks(1, 2)
    assert middle["n_square"] == 4
    assert middle["c_dot_n"] == 3


def test_branch_assignment_validation():
    from godeaux3.plane import BranchAssignment

    BranchAssignment((("B0", 1), ("F", 1), ("H", 2)))
    BranchAssignment((("F", 2), ("H", 1)))
    with pytest.raises(PlaneError):
        BranchAssignment((("F", 1), ("H", 1)))
    with pytest.raises(PlaneError):
        BranchAssignment((("E1", 0),))


def test_ruled_model_type():
    from godeaux3.plane import RuledModel

    deep = RuledModel(1, 3)
    assert deep.section_dot_n == 4 and deep.is_nef_admissible()
    assert not RuledModel(3, 3).is_nef_admissible()
    middle = RuledModel(2, 2)
    assert middle.section_dot_n == 5 - 2 * 2
