#!/usr/bin/env python3
"""
Tests for the action catalog, orbit simplices and catalog JSON.
"""

import json
import math

import pytest

from core.catalog import (
    Multiplicity,
    PointInB,
    RootSystemKind,
    build_simplex,
    candidate_walls,
    export_catalog,
    find_action,
    import_catalog,
    instantiate,
    load_catalog,
    root_label,
    roots_span_plane,
)
from core.errors import CatalogIntegrityError, UnknownActionError

SQRT3 = math.sqrt(3.0)
ALL_IDS = [action.id for action in load_catalog()]


def test_catalog_has_unique_rows():
    assert len(ALL_IDS) == 36
    assert len(set(ALL_IDS)) == len(ALL_IDS)
    assert ALL_IDS[0] == "rho1_SO3_SU3_SO3"


def test_find_action_unknown_id():
    with pytest.raises(UnknownActionError):
        find_action("no_such_action")


def test_root_labels():
    assert root_label(1, 0) == "α"
    assert root_label(2, 1) == "2α+β"
    assert root_label(3, 2) == "3α+2β"


def test_multiplicity_parse_and_evaluate():
    assert Multiplicity.parse(4).evaluate() == 4
    assert Multiplicity.parse("2q-4").evaluate({"q": 5}) == 6
    assert Multiplicity.parse("4q-4j-4").evaluate({"q": 3, "j": 2}) == 0
    assert str(Multiplicity.parse("q-2")) == "q-2"
    with pytest.raises(CatalogIntegrityError):
        Multiplicity.parse("q-2").evaluate({})


@pytest.mark.parametrize("action_id", ALL_IDS)
def test_every_row_builds_a_triangle(action_id):
    action = find_action(action_id)
    assert roots_span_plane(action)
    simplex = build_simplex(action)
    assert len(simplex.vertices) == 3
    assert list(simplex.vertices) == sorted(simplex.vertices)
    assert simplex.inradius() > 0.0
    assert simplex.clearance(simplex.incenter()) > 0.0
    for edge in simplex.edges:
        assert simplex.contains(edge.point_at(edge.length / 2))


def test_rho1_simplex(rho1):
    simplex = build_simplex(rho1)
    a = math.pi / (2 * SQRT3)
    expected = [(0.0, -a), (0.0, a), (math.pi / 2, 0.0)]
    for vertex, (x1, x2) in zip(simplex.vertices, expected):
        assert vertex.x1 == pytest.approx(x1, abs=1e-12)
        assert vertex.x2 == pytest.approx(x2, abs=1e-12)
    assert simplex.edges[0].wall.label == "α=0"
    assert not simplex.contains(PointInB(-0.1, 0.0))


def test_candidate_walls_follow_families(rho1):
    labels = sorted(wall.label for wall in candidate_walls(rho1))
    # V root α gives 0 and π levels, H roots give ±π/2
    assert "α=0" in labels
    assert "β=-π/2" in labels
    assert "α+β=π/2" in labels


def test_instantiate_parametric_row():
    base = find_action("SOq2_SUq2_SU2Uq")
    instance = instantiate(base, q=5)
    assert instance.id == "SOq2_SUq2_SU2Uq[q=5]"
    assert instance.param_values == {"q": 5}
    assert instance.table31 is None
    build_simplex(instance)


def test_instantiate_rejects_bad_parameters(rho1):
    base = find_action("SOq2_SUq2_SU2Uq")
    with pytest.raises(CatalogIntegrityError):
        instantiate(base, q=2)
    with pytest.raises(CatalogIntegrityError):
        instantiate(base, j=2)
    with pytest.raises(CatalogIntegrityError):
        instantiate(rho1, q=3)


def test_catalog_json_round_trip():
    document = export_catalog()
    data = json.loads(document)
    assert [entry["id"] for entry in data["actions"]] == ALL_IDS
    entry = data["actions"][0]
    for key in ("id", "display_name", "dual_name", "l_star_name", "kind", "basis", "roots",
                "params", "table31", "known_inconsistencies"):
        assert key in entry
    assert set(entry["roots"][0]) == {"p", "q", "mult_total", "mult_v", "mult_h"}

    actions = import_catalog(document)
    assert actions == load_catalog()
    assert export_catalog(actions) == document


def test_import_rejects_mismatched_basis():
    data = json.loads(export_catalog())
    data["actions"][0]["basis"] = [[1.0, 0.0], [0.0, 1.0]]
    with pytest.raises(CatalogIntegrityError):
        import_catalog(json.dumps(data))


def test_kind_bases():
    assert RootSystemKind.A2.basis == ((2.0, 0.0), (-1.0, SQRT3))
    assert len(RootSystemKind.BC2.positive_system) == 6
