import random

import pytest
from hypothesis import given, settings, strategies as st

from arrowpoly.arrow import arrow_bracket, arrow_normalized
from arrowpoly.gauss import parse_code, serialize
from arrowpoly.moves import (
    ALL_KINDS,
    R1_ADD,
    R1_REMOVE,
    R2_ADD,
    R2_REMOVE,
    R3,
    InvalidSite,
    MoveStep,
    apply,
    enumerate_sites,
    r3_signs,
    random_code,
    random_walk,
    same_code,
)
from arrowpoly.parity import odd_writhe


def test_r1_remove_kink():
    (site,) = enumerate_sites(parse_code("O1+U1+"), R1_REMOVE)
    assert serialize(apply(parse_code("O1+U1+"), site)) == ""


def test_r1_add_sites_on_unknot():
    sites = enumerate_sites(parse_code(""), R1_ADD)
    assert len(sites) == 4
    for s in sites:
        out = apply(parse_code(""), s)
        assert out.n_crossings == 1
        assert arrow_normalized(out) == 1


def test_r2_add_preserves_bracket(classical):
    code = classical["trefoil"]
    base = arrow_bracket(code)
    sites = enumerate_sites(code, R2_ADD)
    assert sites
    for s in random.Random(1).sample(sites, 25):
        assert arrow_bracket(apply(code, s)) == base


def test_r2_remove_needs_opposite_signs():
    same = parse_code("O1+O2+U1+U2+")
    assert enumerate_sites(same, R2_REMOVE) == []
    step = MoveStep(R2_REMOVE, (1, 2), pairs=(((0, 0), (0, 1)), ((0, 2), (0, 3))))
    with pytest.raises(InvalidSite):
        apply(same, step)
    opposite = parse_code("O1+O2-U1+U2-")
    (site,) = enumerate_sites(opposite, R2_REMOVE)
    assert serialize(apply(opposite, site)) == ""


def test_invalid_site():
    code = parse_code("O1+U2+O3+U1+O2+U3+")
    with pytest.raises(InvalidSite):
        apply(code, MoveStep(R1_REMOVE, (1,), pairs=(((0, 0), (0, 1)),)))
    with pytest.raises(InvalidSite):
        apply(code, MoveStep(R3, (1, 2, 3), pairs=(((0, 0), (0, 1)),) * 3))
    with pytest.raises(InvalidSite):
        apply(code, MoveStep(R1_ADD, (1,), gaps=((0, 0),), roles=("O", "U"), signs=(1,)))
    with pytest.raises(ValueError):
        enumerate_sites(code, "R4")


def test_r3_signs_are_consistent():
    seen = set()
    for bits in range(16):
        s = r3_signs(*(bool(bits >> k & 1) for k in range(4)))
        assert all(x in (1, -1) for x in s)
        seen.add(s)
    assert len(seen) > 1


def test_r3_preserves_bracket():
    rng = random.Random(4)
    hits = 0
    while hits < 20:
        code = random_code(rng, rng.randint(3, 6))
        for q in random_walk(code, 6, rng.randrange(10**6), (R2_ADD, R3), 10)[1:]:
            for s in enumerate_sites(q, R3):
                assert arrow_bracket(apply(q, s)) == arrow_bracket(q)
                hits += 1
    assert hits >= 20


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 5), st.integers(0, 2**32), st.sampled_from(ALL_KINDS))
def test_inverse_law(n, seed, kind):
    rng = random.Random(seed)
    code = random_code(rng, n, rng.choice((1, 2)))
    sites = enumerate_sites(code, kind)
    if not sites:
        return
    step = rng.choice(sites)
    after = apply(code, step)
    back = apply(after, step.inverse)
    assert same_code(back, code)


def test_walk_length_and_invariants():
    code = random_code(random.Random(9), 4)
    path = random_walk(code, 12, seed=3, max_crossings=8)
    assert len(path) == 13
    j = odd_writhe(code)
    p = arrow_normalized(code)
    for q in path:
        assert q.n_crossings <= 8
        assert odd_writhe(q) == j
        assert arrow_normalized(q) == p


def test_same_code_rotation():
    assert same_code(parse_code("O1+U2+O3+U1+O2+U3+"), parse_code("U2+O3+U1+O2+U3+O1+"))
    assert not same_code(parse_code("O1+U2+O3+U1+O2+U3+"), parse_code("O1-U2-O3-U1-O2-U3-"))
