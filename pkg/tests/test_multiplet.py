from collections import Counter

import pytest

from f4verma.checks import EXPECTED_LEVELS
from f4verma.exact import LinForm, SignClass, sign_class
from f4verma.fixtures import FixtureFormatError, match_fixtures, parse_fixtures
from f4verma.multiplet import (
    arrow_labels, dumps_json, enumeration_side, from_json, generate, is_acyclic,
    is_weakly_connected, ks_pairing, orbit_quotient_oracle, to_dot, to_json,
)
from f4verma.parabolic import ks_dual
from f4verma.verma import Weight, hc_param, root_basis

M = [LinForm.basis(n) for n in range(1, 5)]
GENERIC = (2, 3, 5, 7)


def test_sizes(graph):
    assert len(graph.nodes) == 96
    assert len(graph.edges) == 370
    assert len(graph.diagram_edges) == 160
    assert graph.level_histogram() == EXPECTED_LEVELS
    assert sum(EXPECTED_LEVELS) == 96


def _gram_orbit(rs, start):
    """Orbit of a root-basis vector under reflections s_i(x) = x - 2(x,a_i)/(a_i,a_i) a_i."""
    d = rs.data
    simple = [d.simple(i) for i in range(1, 5)]
    seen, frontier = {start}, [start]
    while frontier:
        nxt = []
        for x in frontier:
            for a in simple:
                k = 2 * d.inner(x, a) / d.inner(a, a)
                y = tuple(xi - k * ai for xi, ai in zip(x, a))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def test_orbit_oracle_independent(graph, rs):
    start = tuple(f.const for f in root_basis(Weight.concrete(GENERIC), rs))
    orbit = _gram_orbit(rs, start)
    assert len(orbit) == 1152
    d = rs.data
    dominant = {
        x for x in orbit if all(d.inner(x, d.simple(i)) > 0 for i in (1, 2, 4))
    }
    assert len(dominant) == 1152 // 12
    generated = {
        tuple(f.const for f in root_basis(n.weight.evaluate(GENERIC), rs)) for n in graph.nodes
    }
    assert generated == dominant


def test_orbit_oracle_symbolic(graph, rs):
    assert orbit_quotient_oracle(rs=rs) == {n.weight for n in graph.nodes}


def test_node_weights_distinct(graph):
    assert len({n.weight for n in graph.nodes}) == 96
    assert len({n.signature for n in graph.nodes}) == 96


def test_sign_definiteness(graph, rs):
    for n in graph.nodes:
        negatives = 0
        for beta in rs.positive:
            cls = sign_class(hc_param(n.weight, beta, rs))
            assert cls in (SignClass.POSITIVE, SignClass.NEGATIVE)
            negatives += cls is SignClass.NEGATIVE
        assert negatives == n.level


def test_fixture_bijection(report):
    assert report.ok, report.failures()
    assert report.matched == 96
    assert report.summary() == "96/96 signatures matched"
    assert len(report.results) == 48


def test_fixture_corrections(report):
    fixed = {r.entry.index for r in report.corrections()}
    assert fixed == {"3,1", "4,1", "4,3", "6,3", "7,6", "9,5"}
    by_index = {r.entry.index: r for r in report.results}
    # the literal reading of 6,5 already agrees; the alternative must not
    assert [rd.tag for rd in by_index["6,5"].confirmed] == ["literal"]
    assert [rd.tag for rd in by_index["6,5"].rejected] == ["alt-half-m24"]
    for idx in ("4,1", "7,6", "9,5"):
        assert {rd.tag for rd in by_index[idx].rejected} == {"literal"}


def test_corrected_95_value(graph):
    s = graph.node_by_name("χ^-_{9,5}").signature
    assert s.c == M[1] + M[2] / 2


def test_perturbed_fixture_fails(graph_raw):
    from importlib import resources

    text = resources.files("f4verma.data").joinpath("f4_signatures.txt").read_text(encoding="utf-8")
    bad = text.replace(
        "2,2 | - | m1 | m2+m3+m4 | -m1-m2-1/2*m3 | m3 |",
        "2,2 | - | m1 | m2+m3+m4 | -m1-m2-1/2*m3 | m3+m4 |",
    )
    assert bad != text
    rep = match_fixtures(graph_raw, parse_fixtures(bad))
    assert not rep.ok
    assert rep.matched == 94
    assert any(f.startswith("χ^-_{2,2}") for f in rep.failures())


def test_fixture_format_errors():
    with pytest.raises(FixtureFormatError):
        parse_fixtures("0 | - | m1 | m2 | m3\n")
    with pytest.raises(FixtureFormatError):
        parse_fixtures("0 | * | m1 | m2 | m3 | m4 | literal\n")
    with pytest.raises(FixtureFormatError):
        parse_fixtures("0 | - | m1 | m2 | q3 | m4 | literal\n")


def test_names_and_sides(graph):
    names = [n.name for n in graph.nodes]
    assert None not in names and len(set(names)) == 96
    for n in graph.nodes:
        expected = enumeration_side(n.level)
        if expected is not None:
            assert n.side == expected
        assert n.name.startswith(f"χ^{n.side}_")
    middle = Counter(n.side for n in graph.nodes if n.level == 10)
    assert middle == {"-": 4, "+": 4}


def test_minus_names_with_positive_c(graph):
    odd = sorted(n.name for n in graph.nodes if n.side == "-" and n.signature.side == "+")
    assert odd == sorted(
        f"χ^-_{{{k}}}" for k in ("7,2", "8,6", "8,7", "9,3", "9,5", "9,6", "10,4")
    )


def test_ks_pairing(graph):
    pairs = ks_pairing(graph)
    assert len(pairs) == 48
    by_id = {n.id: n for n in graph.nodes}
    seen = set()
    for a, b in pairs:
        assert a != b
        assert by_id[a].level + by_id[b].level == 20
        assert ks_dual(by_id[a].signature) == by_id[b].signature
        assert by_id[a].name[3:] == by_id[b].name[3:]
        seen |= {a, b}
    assert seen == set(by_id)


def test_arrows(graph):
    rep = arrow_labels(graph)
    assert rep.ok and not rep.violations
    level = {n.id: n.level for n in graph.nodes}
    for e in graph.diagram_edges:
        assert level[e.dst] == level[e.src] + 1
        assert e.arrow_level in (1, 2, 3, 4)
        assert e.degree == M[e.arrow_level - 1]
    assert Counter(e.arrow_level for e in graph.diagram_edges) == Counter(
        e.arrow_level for e in rep.labeled
    )
    assert is_weakly_connected(graph)
    assert is_acyclic(graph)


def test_edges_are_embeddings(graph, rs):
    level = {n.id: n.level for n in graph.nodes}
    for e in graph.edges:
        assert sign_class(e.degree) is SignClass.POSITIVE
        assert e.degree == hc_param(graph.nodes[e.src].weight, e.root, rs)
        assert level[e.dst] > level[e.src]


def test_local_shape(graph):
    top = graph.node_by_name("χ^-_0")
    out = [e for e in graph.diagram_edges if e.src == top.id]
    assert [e.arrow_level for e in out] == [3]
    bottom = max(n.level for n in graph.nodes)
    has_out = {e.src for e in graph.diagram_edges}
    has_in = {e.dst for e in graph.diagram_edges}
    for n in graph.nodes:
        if n.level < bottom:
            assert n.id in has_out
        if n.level > 0:
            assert n.id in has_in


def test_weight_norms_constant(graph, rs):
    d = rs.data
    norms = {
        d.norm([f.const for f in root_basis(n.weight.evaluate(GENERIC), rs)]) for n in graph.nodes
    }
    assert len(norms) == 1


def test_exports_deterministic(graph):
    again = generate()
    from f4verma.fixtures import assign_names, load_fixtures

    assign_names(again, match_fixtures(again, load_fixtures()))
    assert dumps_json(graph) == dumps_json(again)
    assert to_dot(graph) == to_dot(again)


def test_json_roundtrip(graph):
    obj = to_json(graph)
    assert obj["params"] == "symbolic"
    assert len(obj["diagram_edges"]) == 160
    back = from_json(obj)
    assert to_json(back) == obj


def test_dot_layout(graph):
    dot = to_dot(graph)
    assert dot.startswith("digraph")
    assert dot.count("rank=same") == 21
    assert dot.count("->") == 160


@pytest.mark.parametrize("labels", [(1, 1, 1, 1), (2, 1, 3, 1)])
def test_concrete_matches_symbolic(graph, entries, labels):
    gc = generate(labels)
    assert len(gc.nodes) == 96
    assert gc.level_histogram() == EXPECTED_LEVELS
    assert len(gc.diagram_edges) == 160
    assert {n.weight for n in gc.nodes} == {n.weight.evaluate(labels) for n in graph.nodes}
    rep = match_fixtures(gc, entries)
    assert rep.ok, rep.failures()


def test_concrete_rejects_bad_labels():
    for bad in [(0, 1, 1, 1), (1, 1, 1), (1, -2, 1, 1)]:
        with pytest.raises(ValueError):
            generate(bad)


def test_conformal_weights(graph):
    top, dual = graph.node_by_name("χ^-_0"), graph.node_by_name("χ^+_0")
    assert top.signature.d.evaluate((1, 1, 1, 1)) == 0
    assert dual.signature.d.evaluate((1, 1, 1, 1)) == 7
    assert dual.level == 20
