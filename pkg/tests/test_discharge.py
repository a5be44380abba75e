"""Charges, rules R1-R11 and the conservation audit."""

import pytest

from choosability_verifier.config import LOCALITY_FALLBACK_RADIUS
from choosability_verifier.configs import match_all
from choosability_verifier.discharge import (
    UNIT,
    apply_rules,
    audit,
    case_branch,
    explain_element,
    face,
    initial_charges,
    locality_misses,
    parse_element,
    render,
    rule_instances,
    vertex,
)
from choosability_verifier.exceptions import (
    DisconnectedGraphError,
    RulesAlreadyAppliedError,
    UnknownElementError,
)
from choosability_verifier.graph import generate_planar, parse_rotation

from .conftest import SOLIDS

# ---------------------------------------------------------------------------
# Totals
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("name", SOLIDS)
def test_totals_are_minus_twelve_and_conserved(solid, name):
    g = solid(name)
    start = initial_charges(g)
    final = apply_rules(g, start)
    assert start.total() == -12 * UNIT
    assert final.total() == start.total()


def test_dodecahedron_split_of_the_initial_charge(dodecahedron):
    start = initial_charges(dodecahedron)
    assert sum(start.vertex_charge.values()) == -60 * UNIT
    assert sum(start.face_charge.values()) == 48 * UNIT


def test_render_is_an_exact_fraction():
    assert render(-36) == "-3"
    assert render(6) == "1/2"
    assert render(4) == "1/3"
    assert render(3) == "1/4"


def test_disconnected_graph_is_rejected():
    g = parse_rotation("1: 2\n2: 1\n3: 4\n4: 3\n")
    with pytest.raises(DisconnectedGraphError):
        initial_charges(g)


def test_rules_apply_only_once(tetrahedron):
    final = apply_rules(tetrahedron, initial_charges(tetrahedron))
    with pytest.raises(RulesAlreadyAppliedError):
        apply_rules(tetrahedron, final)


def test_apply_rules_leaves_the_input_ledger_untouched(cube):
    start = initial_charges(cube)
    apply_rules(cube, start)
    assert not start.applied
    assert start.log == []


# ---------------------------------------------------------------------------
# Rules
# ---------------------------------------------------------------------------


def test_no_transfers_on_triangulations_below_degree_seven(icosahedron, octahedron):
    assert rule_instances(icosahedron) == []
    assert rule_instances(octahedron) == []
    final = apply_rules(icosahedron, initial_charges(icosahedron))
    assert set(final.vertex_charge.values()) == {-UNIT}


def test_four_faces_give_one_to_each_corner(cube):
    transfers = rule_instances(cube)
    assert len(transfers) == 24
    assert {t.rule for t in transfers} == {"R1"}
    final = apply_rules(cube, initial_charges(cube))
    assert set(final.vertex_charge.values()) == {0}
    assert set(final.face_charge.values()) == {-2 * UNIT}


def test_large_faces_give_two_per_corner(dodecahedron):
    transfers = rule_instances(dodecahedron)
    assert {(t.rule, t.amount) for t in transfers} == {("R2", 2 * UNIT)}
    final = apply_rules(dodecahedron, initial_charges(dodecahedron))
    assert set(final.vertex_charge.values()) == {3 * UNIT}
    assert set(final.face_charge.values()) == {-6 * UNIT}


def test_face_appearances_count_with_multiplicity():
    # path 1-2-3: one face of degree 4 whose walk visits 2 twice
    g = parse_rotation("1: 2\n2: 1 3\n3: 2\n")
    by_target = {t.target.id: t for t in rule_instances(g)}
    assert by_target[2].multiplicity == 2
    assert by_target[2].amount == 2 * UNIT
    assert by_target[1].multiplicity == by_target[3].multiplicity == 1
    final = apply_rules(g, initial_charges(g))
    assert final.total() == -12 * UNIT


def test_e2_neighbor_receives_one_half(e2_host):
    picked = [t for t in rule_instances(e2_host) if t.source == vertex(2) and t.target == vertex(1)]
    assert len(picked) == 1
    assert (picked[0].rule, picked[0].amount) == ("R6", UNIT // 2)


# ---------------------------------------------------------------------------
# Audit
# ---------------------------------------------------------------------------


def test_tetrahedron_audit(tetrahedron):
    report = audit(tetrahedron)
    assert report.initial_total == report.final_total == "-12"
    assert [(n.element, n.charge) for n in report.negatives] == [
        ("v1", "-3"), ("v2", "-3"), ("v3", "-3"), ("v4", "-3"),
    ]
    assert report.configs_found["C1"] == 6
    assert not report.contradiction_flag
    assert report.locality_misses == []


def test_cube_negatives_are_faces(cube):
    report = audit(cube)
    assert [n.charge for n in report.negatives] == ["-2"] * 6
    assert all(n.element.startswith("f") for n in report.negatives)
    assert report.locality_misses == []


def test_per_component_audit():
    g = parse_rotation("1: 2\n2: 1\n3: 4\n4: 3\n")
    report = audit(g, per_component=True)
    assert report.components == 2
    assert report.initial_total == report.final_total == "-24"
    assert report.configs_found == {"C1": 2}
    assert "f0@1" in [n.element for n in report.negatives]


def test_audit_json_uses_camel_case(octahedron):
    text = audit(octahedron).to_json()
    assert '"initialTotal": "-12"' in text
    assert '"contradictionFlag": false' in text


def test_locality_misses_with_no_matches(tetrahedron):
    final = apply_rules(tetrahedron, initial_charges(tetrahedron))
    assert locality_misses(tetrahedron, final, {}, 2) == ["v1", "v2", "v3", "v4"]
    assert locality_misses(tetrahedron, final, match_all(tetrahedron), 0) == []


def _audit_generated(seeds, n, deletions):
    for seed in seeds:
        g = generate_planar(seed, n, 8, deletions=deletions)
        report = audit(g, radius=LOCALITY_FALLBACK_RADIUS)
        assert report.initial_total == report.final_total == "-12", f"seed {seed}"
        assert not report.contradiction_flag, f"seed {seed}"
        assert sum(f.degree for f in g.faces) == 2 * g.num_edges


def test_generated_graphs_conserve_charge():
    _audit_generated(range(3), 40, 0.0)
    _audit_generated(range(3, 6), 40, 0.15)


@pytest.mark.slow
def test_hundred_generated_graphs_are_locally_covered():
    for seed in range(100):
        g = generate_planar(seed, 200, 8, deletions=0.1 if seed % 2 else 0.0)
        report = audit(g, radius=LOCALITY_FALLBACK_RADIUS)
        assert report.initial_total == report.final_total == "-12"
        assert not report.contradiction_flag
        assert report.locality_misses == [], f"seed {seed}"


# ---------------------------------------------------------------------------
# Elements and case labels
# ---------------------------------------------------------------------------


def test_parse_element(cube):
    assert parse_element(cube, "7") == vertex(7)
    assert parse_element(cube, "v7") == vertex(7)
    assert parse_element(cube, "f:3") == face(3)
    assert parse_element(cube, "F3") == face(3)
    for bad in ("f:6", "99", "x"):
        with pytest.raises(UnknownElementError):
            parse_element(cube, bad)


def test_case_branch_labels(tetrahedron, cube, octahedron, icosahedron, dodecahedron):
    assert case_branch(tetrahedron, vertex(1)) == "vertex, d=3, three incident triangles"
    assert case_branch(cube, vertex(1)) == "vertex, d=3, three faces of degree 4"
    assert case_branch(octahedron, vertex(1)) == "vertex, d=4, four incident triangles"
    assert case_branch(icosahedron, vertex(1)) == (
        "vertex, d=5, five incident triangles, no degree-6 neighbor"
    )
    assert case_branch(dodecahedron, face(0)).startswith("face, d=5")
    assert case_branch(tetrahedron, face(0)) == "face, d=3: gives nothing"


def test_case_branch_for_degree_eight(e2_host):
    label = case_branch(e2_host, vertex(2))
    assert label.startswith("vertex, d=8, ")


def test_explain_face(cube):
    explanation = explain_element(cube, face(0))
    assert explanation.element == "f0"
    assert explanation.initial_charge == "2"
    assert explanation.final_charge == "-2"
    assert len(explanation.transfers) == 4
    assert explanation.branch == "face, d=4: gives 1 to each incident vertex of degree at most 5"


def test_explain_vertex_without_transfers(tetrahedron):
    explanation = explain_element(tetrahedron, vertex(1))
    assert explanation.initial_charge == explanation.final_charge == "-3"
    assert explanation.transfers == []
