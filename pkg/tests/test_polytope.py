import random
from fractions import Fraction

import pytest

from toricfan import (
    UnimodularMap,
    delta_j,
    geometry,
    hirzebruch,
    lattice_count,
    normal_fan,
    obstruction,
    parse_polytope,
    polytope_from_heights,
    serialize_polytope,
    validate_polytope,
    xj_fan,
)
from toricfan.errors import EmptyPolytope, NotAmple, ParseError
from toricfan.polytope import parse_heights

from conftest import FIXTURES, random_polytope

SQUARE = [(1, -1), (1, 1), (-1, 1), (-1, -1)]
SIMPLEX = [(0, 0), (1, 0), (0, 1)]


def test_validate_polytope():
    p = validate_polytope(SQUARE)
    assert len(p) == 4
    with pytest.raises(ParseError):
        validate_polytope([(0, 0), (1, 0)])
    with pytest.raises(ParseError):
        validate_polytope(list(reversed(SQUARE)))  # clockwise
    with pytest.raises(ParseError):
        validate_polytope([(0, 0), (1, 0), (2, 0), (0, 1)])  # collinear


def test_normal_fan():
    assert normal_fan(SQUARE) == xj_fan(0)
    assert normal_fan(SIMPLEX).rays == ((-1, -1), (1, 0), (0, 1))


def test_polytope_from_heights_square():
    p = polytope_from_heights(hirzebruch(0), {v: 1 for v in hirzebruch(0).rays})
    assert set(p.vertices) == {(1, 1), (-1, 1), (-1, -1), (1, -1)}


def test_polytope_from_heights_errors():
    f = hirzebruch(0)
    with pytest.raises(EmptyPolytope):
        polytope_from_heights(f, {v: -1 for v in f.rays})
    # zero height on opposite rays collapses a direction: not ample
    h = {(1, 0): 0, (-1, 0): 0, (0, 1): 1, (0, -1): 1}
    with pytest.raises((NotAmple, EmptyPolytope)):
        polytope_from_heights(f, h)
    with pytest.raises(ParseError):
        polytope_from_heights(f, {(1, 0): 1})


def test_lattice_count_square():
    p = validate_polytope(SQUARE)
    for k in range(5):
        count, (sx, sy) = lattice_count(p, k)
        assert count == (2 * k + 1) ** 2
        assert (sx, sy) == (0, 0)


def test_lattice_count_simplex():
    p = validate_polytope(SIMPLEX)
    for k in range(1, 6):
        count, _ = lattice_count(p, k)
        assert count == (k + 1) * (k + 2) // 2


def test_geometry():
    assert geometry(validate_polytope(SQUARE)) == (4, (0, 0))
    vol, mom = geometry(validate_polytope(SIMPLEX))
    assert vol == Fraction(1, 2)
    assert mom == (Fraction(1, 6), Fraction(1, 6))


def test_obstruction_simplex():
    r = obstruction(validate_polytope(SIMPLEX))
    assert r.ehrhart == (1, Fraction(3, 2), Fraction(1, 2))
    assert r.mabuchi_vanishes and r.futaki_vanishes
    assert all(c == (0, 0) for c in r.f_coeffs)


def test_volume_is_leading_ehrhart_coefficient():
    rng = random.Random(40)
    for _ in range(20):
        p = random_polytope(rng)
        r = obstruction(p)
        assert r.volume == r.ehrhart[2] == geometry(p)[0]


def test_interpolation_matches_direct_counts():
    rng = random.Random(41)
    for _ in range(5):
        p = random_polytope(rng)
        r = obstruction(p)
        for k in range(5, 13):
            expected = r.ehrhart[0] + r.ehrhart[1] * k + r.ehrhart[2] * k * k
            assert lattice_count(p, k)[0] == expected


def test_delta_j():
    for j in range(3):
        p = delta_j(j)
        assert normal_fan(p.vertices) == xj_fan(j)
        _, mom = geometry(p)
        assert mom == (0, 0)
    assert geometry(delta_j(0))[0] == 4


def test_symmetric_polytope_vanishing():
    # fixed by both coordinate reflections => all obstruction coefficients die
    r = obstruction(validate_polytope(SQUARE))
    assert r.moment == (0, 0)
    assert all(c == (0, 0) for c in r.f_coeffs)
    assert r.mabuchi_vanishes


def test_equivariance_under_shear():
    rng = random.Random(42)
    for _ in range(10):
        p = random_polytope(rng)
        m = UnimodularMap(1, 1, 0, 1)
        q = validate_polytope([m.apply(v) for v in p.vertices])
        rp, rq = obstruction(p), obstruction(q)
        assert rq.volume == rp.volume and rq.ehrhart == rp.ehrhart
        assert rq.moment == (rp.moment[0] + rp.moment[1], rp.moment[1])
        assert rq.futaki_vanishes == rp.futaki_vanishes


def test_parse_serialize_polytope():
    p = parse_polytope((FIXTURES / "delta1.polytope").read_text())
    assert parse_polytope(serialize_polytope(p)) == p
    assert p == delta_j(1)


def test_parse_heights():
    h = parse_heights((FIXTURES / "F1_trapezoid.heights").read_text())
    assert h == {(0, -1): 0, (1, 0): 0, (0, 1): 1, (-1, -1): 2}
    with pytest.raises(ParseError):
        parse_heights("1 0\n")


def test_trapezoid_futaki_nonzero():
    f = hirzebruch(1)
    h = parse_heights((FIXTURES / "F1_trapezoid.heights").read_text())
    r = obstruction(polytope_from_heights(f, h))
    assert r.volume == Fraction(5, 2)
    assert r.moment == (Fraction(19, 6), Fraction(-4, 3))
    assert r.f_coeffs[1] == (Fraction(1, 6), Fraction(-1, 3))
    assert not r.futaki_vanishes and not r.mabuchi_vanishes
