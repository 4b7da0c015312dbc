# SPDX-License-Identifier: Apache-2.0

import pytest

import angleforge as af


def test_preset_constants():
    ctx = af.preset("pi4")
    assert ctx.degree == 1
    assert (ctx.c1, ctx.c2, ctx.c3) == (2, 2, 361)
    assert af.preset("sqrt2").c3 == 112386528081


def test_big_integers_round_trip():
    ctx = af.preset("sqrt2")
    x = [7**60, -(3**70)]
    assert ctx.mul(x, [1, 0]) == x
    assert ctx.mul([0, 1], [0, 1]) == [2, 0]
    assert ctx.sign([-1, 1]) == 1
    assert ctx.to_decimal([0, 1], 20).startswith("1.4142135623730950488")


def test_normalize():
    nt = af.normalize_tangent([-1, 0, 2], ("0", "1"))
    assert nt["minpoly"] == [-2, 0, 1]
    assert nt["b"] == 2


def test_construct_and_count():
    ctx = af.preset("pi4")
    assert af.expected_count(ctx, 2) == 700
    fam = af.construct(ctx, 2)
    assert len(fam["triples"]) == 700
    report = af.count(ctx, fam["points"])
    assert report["total"] >= 700
    assert sum(report["per_apex"]) == report["total"]
    assert af.count(ctx, fam["points"], method="brute")["total"] == report["total"]


def test_angles_and_directions():
    ctx = af.preset("pi4")
    assert af.angle_at(ctx, ([0], [0]), ([1], [0]), ([1], [1])) == "theta_plus"
    assert af.count_distinct_directions(ctx, af.gen_G(ctx, 1)) == 8
    assert af.size_for_n(ctx, 5776) == 3


def test_errors():
    with pytest.raises(af.InputError):
        af.Context([-1, 1], 0, ("1/2", "3/2"))
    with pytest.raises(ValueError):
        af.count(af.preset("pi4"), [([0], [0]), ([0], [0])])
    with pytest.raises(af.BudgetExceeded):
        af.construct(af.preset("pi4"), 40, triple_budget=10)


def test_cli_round_trip():
    code, out, err = af.run_cli(["verify-ungar", "--preset", "pi4", "--t", "1"])
    assert code == 0, err
    assert out.splitlines()[1] == "1,9,8,8,pass"
    code, _, err = af.run_cli(["construct"])
    assert code == 1 and '"exit_code":1' in err
