import random

import pytest

from toricfan import (
    UnimodularMap,
    apply_map,
    blow_down,
    blow_up,
    hirzebruch,
    is_isomorphic,
    p2,
    parse_fan,
    replay,
    self_intersections,
    serialize_fan,
    symmetry_group,
    validate,
)
from toricfan.errors import (
    ClockwiseFan,
    DuplicateRay,
    IndexOutOfRange,
    NonPrimitiveRay,
    NotComplete,
    NotContractible,
    NotUnimodular,
    ParseError,
    TooFewRays,
)
from toricfan.fan import contractible_rays

from conftest import FIXTURES, random_blowup_fan

F2_RAYS = [(0, -1), (1, 0), (0, 1), (-1, -2)]


def test_validate_canonicalizes():
    f = validate([(1, 0), (0, 1), (-1, -2), (0, -1)])
    assert f.rays == ((-1, -2), (0, -1), (1, 0), (0, 1))
    # starting ray does not matter
    assert validate(F2_RAYS) == f


def test_validate_rejections():
    with pytest.raises(TooFewRays):
        validate([(1, 0), (0, 1)])
    with pytest.raises(NonPrimitiveRay):
        validate([(2, 4), (0, 1), (-1, -1)])
    with pytest.raises(DuplicateRay):
        validate([(1, 0), (0, 1), (-1, -1), (1, 0)])
    with pytest.raises(ClockwiseFan):
        validate(list(reversed(F2_RAYS)))
    with pytest.raises(NotUnimodular) as exc:
        validate([(1, 0), (0, 1), (-1, -3)])
    assert isinstance(exc.value.index, int)
    with pytest.raises(NotComplete):
        # all adjacent determinants are +1 but the list winds twice
        validate([(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (1, 2), (-1, -1)])


def test_self_intersections():
    f = validate(F2_RAYS)
    by_ray = dict(zip(f.rays, self_intersections(f)))
    # the two fiber rays have 0; the sections have -2 and +2
    assert by_ray == {(-1, -2): 0, (0, -1): -2, (1, 0): 0, (0, 1): 2}
    assert self_intersections(p2()) == [1, 1, 1]


def test_blow_up_inserts_sum():
    f = validate(F2_RAYS)
    i = f.index_of((1, 0))
    g, step = blow_up(f, i)
    assert step.inserted == (1, 1)
    assert set(g.rays) == set(f.rays) | {(1, 1)}
    assert self_intersections(g)[g.index_of((1, 1))] == -1
    with pytest.raises(IndexOutOfRange):
        blow_up(f, 4)


def test_blow_down():
    f = validate(F2_RAYS)
    g, _ = blow_up(f, f.index_of((1, 0)))
    back, step = blow_down(g, g.index_of((1, 1)))
    assert back == f and step.inserted == (1, 1)
    with pytest.raises(NotContractible):
        blow_down(g, g.index_of((0, 1)))
    with pytest.raises(TooFewRays):
        blow_down(p2(), 0)


def test_contractible_rays_are_minus_one_curves():
    rng = random.Random(10)
    for _ in range(50):
        f = random_blowup_fan(rng, 6)
        for i in contractible_rays(f):
            assert self_intersections(f)[i] == -1
            blow_down(f, i)  # must not raise


def test_replay():
    rng = random.Random(11)
    f = hirzebruch(1)
    g, steps = f, []
    for _ in range(5):
        g, step = blow_up(g, rng.randrange(len(g)))
        steps.append(step)
    assert replay(f, steps) == g


def test_isomorphism():
    assert is_isomorphic(hirzebruch(1), hirzebruch(2)) is None
    assert is_isomorphic(hirzebruch(0), hirzebruch(2)) is None
    # Bl(P2) is F_1
    bl, _ = blow_up(p2(), 0)
    m = is_isomorphic(bl, hirzebruch(1))
    assert m is not None
    assert apply_map(bl, m) == hirzebruch(1)


def test_apply_map_orientation():
    f = validate(F2_RAYS)
    flip = UnimodularMap(1, 0, 0, -1)  # det -1
    g = apply_map(f, flip)
    assert is_isomorphic(f, g) is not None


def test_symmetry_group_sizes():
    assert len(symmetry_group(validate(F2_RAYS))) == 2
    assert len(symmetry_group(hirzebruch(0))) == 8
    assert len(symmetry_group(p2())) == 6


def test_parse_and_serialize():
    text = (FIXTURES / "F2.fan").read_text()
    f = parse_fan(text)
    assert f == validate(F2_RAYS)
    assert parse_fan(serialize_fan(f)) == f
    with pytest.raises(ParseError):
        parse_fan("1 0\n0 1 2\n")
    with pytest.raises(ParseError):
        parse_fan("1 0\nx y\n-1 -1\n")


def test_parse_ignores_comments_and_blanks():
    f = parse_fan("# header\n\n1 0  # e1\n0 1\n-1 -1\n")
    assert f == p2()
