import json
import random

import pytest

from arrowpoly.arrow import arrow_normalized
from arrowpoly.colorability import (
    COLORABLE,
    NOT_COLORABLE,
    UNKNOWN,
    alternation_system,
    criteria_verdict,
    diagram_colorable,
    obstructions,
    solve_gf2,
    verify_witness,
)
from arrowpoly.gauss import parse_code
from arrowpoly.moves import random_code
from arrowpoly.parity import odd_crossings
from arrowpoly.poly import ArrowPoly, parse_poly


def test_solve_gf2_small():
    # x0 ^ x1 = 1, x1 = 1  ->  x0 = 0, x1 = 1
    assert solve_gf2([0b111, 0b110], 2) == [0, 1]
    # x0 = 0 and x0 = 1 is inconsistent
    assert solve_gf2([0b01, 0b11], 1) is None


def test_solve_gf2_free_variables_zero():
    # x0 ^ x1 = 1 with x1 free
    assert solve_gf2([0b1011], 3) == [1, 0, 0]


def test_system_shape():
    code = parse_code("O1+U2+O3+U1+O2+U3+")
    system = alternation_system(code)
    assert system.n_arcs == 6
    assert len(system.rows) == 9


def test_classical_witnesses_verify(classical):
    for code in classical.values():
        w = diagram_colorable(code)
        assert w is not None
        assert verify_witness(code, w)


def test_flipped_witness_fails(classical):
    code = classical["trefoil"]
    w = list(diagram_colorable(code))
    w[0] ^= 1
    assert not verify_witness(code, w)
    assert not verify_witness(code, w[:-1])


def test_virtual_trefoil_diagram_not_colorable():
    assert diagram_colorable(parse_code("O1+O2+U1+U2+")) is None


def test_criteria_virtual_trefoil():
    v = criteria_verdict(parse_code("O1+O2+U1+U2+"))
    assert v.verdict == NOT_COLORABLE
    assert "C1" in v.criteria()
    assert v.obstructions[0].value == 2


def test_c3_summand_reported():
    code = parse_code("O1+O2+U1+U2+")
    poly = parse_poly("A^2*K2 + K1^2")
    found = obstructions(code, poly)
    c3 = [o for o in found if o.criterion == "C3"]
    assert [o.summand for o in c3] == ["A^2*K2"]


def test_c2_once_per_degree():
    code = parse_code("")
    poly = parse_poly("K1 + A^4*K1 + K3 + K1^2")
    c2 = [o.value for o in obstructions(code, poly) if o.criterion == "C2"]
    assert c2 == [1, 3]


def test_unknown_json():
    v = criteria_verdict(parse_code(""), ArrowPoly.const(1))
    assert v.verdict == COLORABLE
    fake = type(v)(UNKNOWN)
    assert fake.to_json() == {"verdict": "Unknown", "diagram_check": "failed"}


def test_verdict_json_roundtrip(virtual):
    v = criteria_verdict(virtual["4.96"])
    text = json.dumps(v.to_json(), sort_keys=True)
    assert json.loads(text)["verdict"] == NOT_COLORABLE


def test_soundness_on_random_codes():
    rng = random.Random(17)
    seen = 0
    for _ in range(150):
        code = random_code(rng, rng.randint(0, 6))
        w = diagram_colorable(code)
        if w is None:
            continue
        seen += 1
        assert verify_witness(code, w)
        assert odd_crossings(code) == []
        assert obstructions(code, arrow_normalized(code)) == []
    assert seen > 0
