"""End-to-end checks of the Python bindings against frozen values."""

from fractions import Fraction

import pytest

import supertoken as st


def test_graph_basics():
    g = st.Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    assert g.order == 5
    assert g.size == 5
    assert g.edges == [(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]
    assert g.neighbors(1) == [2, 5]
    assert g.diameter() == 2
    assert g.radius() == 2
    assert g.bfs_distances(1) == [-1, 0, 1, 2, 2, 1]
    assert g.distance_matrix()[0] == [0, 1, 2, 2, 1]
    with pytest.raises(ValueError):
        st.Graph(3, [(1, 2)])  # disconnected


def test_graph_text_round_trip():
    g = st.Graph.path(4)
    text = st.graph_to_text(g)
    assert text == "4 3\n1 2\n2 3\n3 4\n"
    back = st.graph_from_text("# a comment\n" + text)
    assert back.edges == g.edges


def test_worked_distance_instance():
    g = st.Graph.cycle(6)
    r = st.supertoken_distance(g, "310212", "201132")
    assert r.distance == 4
    assert len(r.moves) == 4
    # replaying the moves transforms x into y, one base edge at a time
    counts = list(st.TokenConfig("310212").counts)
    for a, b in r.moves:
        assert g.has_edge(a, b)
        counts[a - 1] -= 1
        counts[b - 1] += 1
        assert counts[a - 1] >= 0
    assert counts == list(st.TokenConfig("201132").counts)


def test_token_config_conversions():
    assert st.TokenConfig("10,0,2").label() == "10,0,2"
    assert st.config_index(st.TokenConfig("200")) == 1
    # str and list arguments convert implicitly
    assert st.dist_complete([2, 0, 3], [1, 4, 0]) == 4
    assert st.ecc_complete("122") == 4
    with pytest.raises(ValueError):
        st.supertoken_distance(st.Graph.path(2), "11", "101011")


def test_closed_forms_and_orders():
    assert st.supertoken_order(10, 10) == 92378
    assert st.binomial(60, 30) == 118264581564861424
    assert st.diam_complete(3, 5) == 5
    assert st.rad_complete(3, 5) == 4
    assert len(st.enumerate_configs(4, 2)) == 10


def test_explicit_builds():
    stg = st.build_supertoken(st.Graph.cycle(5), 2)
    assert stg.graph.order == 15
    assert stg.graph.size == 25
    assert stg.configs[0].label() == "20000"
    tg = st.build_token_graph(st.Graph.complete(5), 2)
    assert tg.graph.order == 10
    assert tg.graph.size == 30
    with pytest.raises(st.SizeCapError):
        st.build_supertoken(st.Graph.complete(40), 20)


def test_determinants():
    assert st.distance_determinant(st.Graph.cycle(5)) == 6
    assert st.distance_determinant(st.Graph.cycle(6)) == 0
    assert st.tree_det_formula(9) == 1024
    assert st.unicyclic_odd_det_formula(1, 1) == Fraction(-7)
    t = st.random_tree(9, seed=5)
    assert st.distance_determinant(t) == st.tree_det_formula(9)
    assert st.random_tree(9, seed=5).edges == t.edges  # deterministic


def test_assignment():
    a = st.solve_assignment([[4, 1], [2, 9]])
    assert a.total_weight == 3
    assert a.row_to_col == [1, 0]
    flat = st.solve_assignment([[5] * 4 for _ in range(4)])
    assert flat.row_to_col == [0, 1, 2, 3]  # lexicographic tie-break


def test_metric_dimension():
    res = st.metric_dimension(st.build_supertoken(st.Graph.cycle(5), 2).graph)
    assert res.exact and res.dimension == 3
    assert res.witness == [1, 2, 15]
    assert st.is_resolving(
        st.build_supertoken(st.Graph.cycle(5), 2).graph, res.witness
    )
    assert st.metric_dimension(st.Graph.cycle(5)).dimension == 2


def test_feasibility():
    k3 = st.Graph.complete(3)
    yes = st.feasibility([2, 4, 4], k3, 5)
    assert yes.feasible and yes.config.label() == "311"
    no = st.feasibility([1, 3, 3], k3, 5)
    assert not no.feasible
    assert no.solution == [Fraction(5, 2), Fraction(1, 2), Fraction(1, 2)]
    with pytest.raises(st.SingularMatrixError):
        st.feasibility([1, 2, 3, 2], st.Graph.cycle(4), 2)


def test_word_graphs():
    g = st.build_gdc(3, 2)
    assert g.graph.order == 9
    assert len(g.graph.neighbors(5)) == 8  # the all-middle word sees everyone
    plus = st.build_gdc_plus(4, 2)
    assert plus.graph.order == 18
    assert plus.labels[16] == "w1"
    assert plus.graph.neighbors(17) == [1, 2, 3, 4]
    assert st.gdc_distance([4, 1], [1, 1]) == 3
    assert st.word_index(4, 2, st.parse_word("41")) == 13
    assert st.lower_bound_dim(18, 4) == 2
    assert st.check_inequality_kn(6, 2) and not st.check_inequality_kn(6, 3)


def test_canonical_landmarks():
    c5 = st.Graph.cycle(5)
    report = st.verify_supertoken_dim_bound(c5, 2)
    assert report.canonical_resolves and report.reduced_resolves
    assert report.position_sums_constant and report.expected_position_sum == 12
    bad = st.verify_supertoken_dim_bound(st.Graph.cycle(6), 2)
    assert bad.distance_matrix_singular and not bad.canonical_resolves
    labels = [c.label() for group in bad.collisions for c in group]
    assert labels == ["100100", "010010", "001001"]
    pos = st.position_via_matrix("11000", c5)
    assert pos == [st.supertoken_distance(c5, "11000", l.label()).distance
                   for l in st.canonical_landmarks(5, 2)]


def test_isomorphism_to_token_graph():
    stg = st.build_supertoken(st.Graph.path(5), 2)
    tg = st.build_token_graph(st.Graph.path(6), 2)
    mapping = [0]
    for config in stg.configs:
        spots = [v for v, c in enumerate(config.counts, start=1) for _ in range(c)]
        target = [spots[0], spots[1] + 1]
        mapping.append(tg.subsets.index(target) + 1)
    assert st.is_edge_preserving_bijection(stg.graph, tg.graph, mapping)


def test_verify_suites():
    names = st.verify_suite_names()
    assert names == ["theorem1", "gdc", "complete", "general", "dimbounds",
                     "feasibility"]
    records = st.run_verify_suite("feasibility")
    assert records and all(r.verdict == "PASS" for r in records)
    assert all(r.suite == "feasibility" for r in records)
