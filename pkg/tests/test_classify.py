import random

import pytest

from toricfan import (
    blow_up,
    hirzebruch,
    iteration_invariants,
    minimal_models,
    minimal_n,
    p2,
    replay,
    validate,
    xj_fan,
)
from toricfan.classify import ModelTag
from toricfan.errors import IsProjectivePlane

from conftest import random_blowup_fan


def tags(f):
    return {str(tag) for tag, _ in minimal_models(f)}


def test_hirzebruch_is_its_own_model():
    for n in (0, 2, 3):
        f = hirzebruch(n)
        assert tags(f) == {f"Hirzebruch({n})"}
        assert minimal_n(f) == n


def test_f1_counts_as_blown_up_p2():
    # F_1 contracts to P2, and the minimal Hirzebruch description is n = 1
    f = hirzebruch(1)
    assert tags(f) == {"P2"}
    assert minimal_n(f) == 1


def test_blowup_of_f2_at_sigma1():
    # blowing up the cone between the (+2)- and 0-rays of F_2 yields a
    # surface that is also a one-point blow-up of P2
    f = validate([(0, -1), (1, 0), (0, 1), (-1, -2)])
    g, _ = blow_up(f, f.rays.index((0, 1)))
    assert tags(g) == {"Hirzebruch(2)", "P2"}
    assert minimal_n(g) == 1


def test_witnesses_replay_to_the_fan():
    rng = random.Random(20)
    for _ in range(30):
        f = random_blowup_fan(rng, 5)
        for _, seq in minimal_models(f):
            assert replay(seq.base, seq.steps) == f
            assert seq.result == f


def test_x1_models():
    assert tags(xj_fan(1)) == {"Hirzebruch(0)", "Hirzebruch(2)", "P2"}
    assert minimal_n(xj_fan(1)) == 0


def test_p2_needs_a_blow_up_first():
    with pytest.raises(IsProjectivePlane):
        minimal_n(p2())


def test_iteration_invariants_hirzebruch():
    for n in (0, 2, 3):
        report = iteration_invariants(hirzebruch(n))
        assert (report.n_min, report.l, report.l0) == (n, 0, 1)


def test_iteration_invariants_one_blowup():
    f, _ = blow_up(hirzebruch(0), 0)
    report = iteration_invariants(f)
    assert report.n_min == 0
    assert report.l == 1 and report.l0 == 2


def test_l_is_maximized_over_witnesses():
    # X_2 admits skewed product descriptions with longer insertion chains
    # than the coordinate one, so l exceeds the mediant depth bound 2
    report = iteration_invariants(xj_fan(2))
    assert report.n_min == 0
    assert report.l >= 2
    assert report.l0 == report.l + 1


def test_model_tag_rendering():
    assert str(ModelTag("P2")) == "P2"
    assert str(ModelTag("Hirzebruch", 3)) == "Hirzebruch(3)"


def test_n_min_zero_iff_product_subfan():
    from toricfan.stabilize import _f0_bases

    rng = random.Random(21)
    for _ in range(40):
        f = random_blowup_fan(rng, 6)
        has_basis = next(_f0_bases(f), None) is not None
        assert (minimal_n(f) == 0) == has_basis
