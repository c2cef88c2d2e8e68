import json

import pytest

qpt = pytest.importorskip("qpt")

PENCIL = "2x^2 + 3xy + yz - z^2 + w^2 ; 4x^2 - 2xy + y^2 - 2yz + 2z^2"


def test_group_orders():
    assert qpt.gl2_order(8) == 1536
    assert qpt.sl2_order(4) == 48


def test_congruence_invariants():
    d = qpt.congruence_invariants("7; [[1,1],[0,1]]; [[3,0],[0,5]]; [[6,0],[0,6]]")
    assert d["index"] == 8
    assert d["genus"] == 0
    assert d["cusps"] == 2


def test_level_bound():
    line = "27; [[10,9],[5,10]]; [[11,0],[0,5]]; [[26,0],[0,26]]"
    assert qpt.level_bound(line) == 81


def test_census_modulus_2():
    classes = qpt.census(2, 0)
    assert len(classes) == 3
    assert all(c["genus"] == 0 and c["level"] == 2 for c in classes)


def test_pencil_quartic_and_jacobian():
    q = qpt.pencil_quartic(PENCIL)
    assert q["coefficients"] == ["7/4", "-17/2", "9", "2", "0"]
    assert q["I"] == "132"
    assert q["J"] == "-3024"
    assert qpt.jacobian(PENCIL)["j"] == "287496"


def test_conic():
    bad = qpt.solve_conic("4x^2-2xy+y^2-2yz+2z^2")
    assert not bad["soluble"]
    assert bad["obstruction"] == "oo"
    good = qpt.solve_conic("x^2+y^2-z^2")
    assert good["soluble"]
    assert "witness" in good


def test_local_solubility():
    r = qpt.locally_soluble("y^2 = -(65536x^4+128)")
    assert not r["soluble"]
    assert r["obstruction"] == "oo"
    assert qpt.locally_soluble("y^2 = x^4 + 1")["soluble"]


def test_point_counts():
    assert qpt.count_points("x^2 + y^2 + z^2", 3, 1) == 4
    assert qpt.ec_count("y^2 = x^3 - 2x", 5) == 10
    assert qpt.ap("y^2 = x^3 - 2x", 5) == -4


def test_cs_logic():
    assert qpt.cs_bound(2, 1, 2, 1) == 5
    assert qpt.unique_genus1_quotient(6)
    assert not qpt.unique_genus1_quotient(5)


def test_verdict():
    bundle = {
        "label": "16.96.5.ec.1",
        "genus": 5,
        "rules": [
            {"name": "pointless_conic", "inputs": "", "outcome": "yes", "refs": ""},
            {"name": "jacobian_positive_rank_factor", "inputs": "", "outcome": "no", "refs": ""},
        ],
    }
    v = qpt.verdict(json.dumps(bundle))
    assert v["infinitely_many_quadratic_points"] == "no"
    assert v["hyperelliptic"] == "no"
