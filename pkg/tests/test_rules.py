"""Rule catalog, node conventions, interval mapping, serialization."""

import json
from fractions import Fraction as F

import pytest

from peanoquad import (
    BadInterval,
    MissingDerivative,
    ParamOutOfDomain,
    Polynomial,
    Scalar,
    UnknownRule,
    apply_rule,
    catalog_names,
    family,
    make_rule,
    map_rule_to_interval,
    rule_from_json,
    rule_to_json,
    sqrt,
)

ALL_FIXED = [
    make_rule("ostrowski", x=F(1, 4)),
    make_rule("mp3", x=F(2, 5)),
    make_rule("mod3", x=F(1, 2), lam=F(1, 4)),
    make_rule("mod3_opt", x=F(1, 5)),
    make_rule("simpson"),
    make_rule("dcr", lam=F(1, 3), x=F(1, 5)),
    make_rule("gs2", x=F(2, 3)),
    make_rule("gauss_legendre2"),
    make_rule("franjic", x=F(3, 5)),
    make_rule("radau2"),
    make_rule("alomari2", lam=F(1, 4), x=F(-1, 2), y=F(1, 2)),
    make_rule("alomari4", lam=F(1, 5), x=F(2, 3)),
    make_rule("lobatto4"),
    make_rule("liu_park", x=F(1, 2)),
    make_rule("liu_park_gauss"),
    make_rule("dragomir_sofo", x=F(2, 5)),
    make_rule("q44", lam=F(1, 3), gamma=F(1, 10), delta=F(-1, 20), x=F(1, 2)),
]


def test_simpson_nodes():
    s = make_rule("simpson")
    assert [(x.as_fraction(), w.as_fraction()) for x, w in s.value_nodes] == [
        (F(-1), F(1, 3)),
        (F(0), F(4, 3)),
        (F(1), F(1, 3)),
    ]
    assert s.deriv_nodes == ()


def test_mod3_lambda_zero_is_trapezoid():
    r = make_rule("mod3", x=F(1, 7), lam=0)
    assert [(x.as_fraction(), w.as_fraction()) for x, w in r.value_nodes] == [
        (F(-1), F(1)),
        (F(1), F(1)),
    ]


def test_liu_park_derivative_weights():
    r = make_rule("liu_park", x=F(1, 2))
    assert [(y.as_fraction(), w.as_fraction()) for y, w in r.deriv_nodes] == [
        (F(-1, 2), F(1, 4)),
        (F(1, 2), F(-1, 4)),
    ]


def test_gauss_legendre2_is_gs2_at_sqrt_third():
    gl = make_rule("gauss_legendre2")
    node = gl.value_nodes[1][0]
    assert node == sqrt(Scalar(F(1, 3)))
    assert gl.value_nodes[1][1].as_fraction() == 1


@pytest.mark.parametrize("rule", ALL_FIXED, ids=lambda r: r.name)
def test_weight_sums_to_two(rule):
    total = rule.weight_sum()
    assert total.is_rational and total.as_fraction() == 2


@pytest.mark.parametrize(
    "name,params",
    [
        ("gs2", {"x": F(2, 5)}),
        ("simpson", {}),
        ("alomari4", {"lam": F(1, 5), "x": F(2, 3)}),
        ("liu_park", {"x": F(1, 2)}),
        ("gauss_legendre2", {}),
        ("lobatto4", {}),
        ("liu_park_gauss", {}),
        ("q44", {"lam": F(1, 3), "gamma": F(1, 10), "delta": F(-1, 20), "x": F(1, 2)}),
    ],
)
def test_symmetric_rules_mirror(name, params):
    rule = make_rule(name, **params)
    vals = [(x, w) for x, w in rule.value_nodes]
    for (x, w), (xr, wr) in zip(vals, reversed(vals)):
        assert (x + xr).is_exact_zero() or (x + xr).zero_within(F(1, 10**30))
        assert (w - wr).is_exact_zero() or (w - wr).zero_within(F(1, 10**30))
    ders = [(y, w) for y, w in rule.deriv_nodes]
    for (y, w), (yr, wr) in zip(ders, reversed(ders)):
        assert (y + yr).is_exact_zero() or (y + yr).zero_within(F(1, 10**30))
        assert (w + wr).is_exact_zero() or (w + wr).zero_within(F(1, 10**30))


def test_admissibility_errors():
    with pytest.raises(ParamOutOfDomain):
        make_rule("dcr", lam=1, x=0)  # empty node window at lambda = 1
    with pytest.raises(ParamOutOfDomain):
        make_rule("dcr", lam=F(1, 2), x=F(9, 10))
    with pytest.raises(ParamOutOfDomain):
        make_rule("alomari2", lam=F(1, 4), x=F(1, 2), y=F(-1, 2))
    with pytest.raises(ParamOutOfDomain):
        make_rule("ostrowski", x=2)
    with pytest.raises(ParamOutOfDomain):
        make_rule("q44", lam=F(3, 2), gamma=0, delta=0, x=F(1, 2))


def test_unknown_rule_and_params():
    with pytest.raises(UnknownRule):
        make_rule("not_a_rule")
    with pytest.raises(UnknownRule):
        make_rule("simpson", x=1)
    with pytest.raises(UnknownRule):
        make_rule("gs2")  # missing x
    with pytest.raises(UnknownRule):
        family("simpson")  # fixed rule, no free node


def test_apply_simpson_exact_on_quadratic():
    s = make_rule("simpson")
    assert apply_rule(s, Polynomial([0, 0, 1])).as_fraction() == F(2, 3)


def test_apply_liu_park_gauss_odd_function():
    val = apply_rule(make_rule("liu_park_gauss"), Polynomial([0, 0, 0, 1]))
    assert val.zero_within(F(1, 10**30)) or val.is_exact_zero()


def test_apply_radau2_on_cubic():
    # direct evaluation: (1/2)(-1) + (3/2)(1/27) = -4/9
    val = apply_rule(make_rule("radau2"), Polynomial([0, 0, 0, 1]))
    assert val.as_fraction() == F(-4, 9)


def test_apply_requires_derivative_for_birkhoff_rules():
    lp = make_rule("liu_park", x=F(1, 2))
    with pytest.raises(MissingDerivative):
        apply_rule(lp, lambda t: float(t) ** 2)
    # polynomials derive themselves
    assert apply_rule(lp, Polynomial([0, 0, 1])).as_fraction() == F(3, 4)


def test_map_ostrowski_zero_is_midpoint_rule():
    m = map_rule_to_interval(make_rule("ostrowski", x=0), 2, 5)
    (node, weight), = m.value_nodes
    assert node.as_fraction() == F(7, 2)
    assert weight.as_fraction() == 3


def test_map_simpson_to_shifted_interval_is_identity_scaling():
    m = map_rule_to_interval(make_rule("simpson"), 0, 2)
    assert [(x.as_fraction(), w.as_fraction()) for x, w in m.value_nodes] == [
        (F(0), F(1, 3)),
        (F(1), F(4, 3)),
        (F(2), F(1, 3)),
    ]


def test_map_scales_derivative_weights_quadratically():
    lp = make_rule("liu_park", x=F(1, 2))
    m = map_rule_to_interval(lp, 0, 1)  # h = 1/2
    assert [(y.as_fraction(), w.as_fraction()) for y, w in m.deriv_nodes] == [
        (F(1, 4), F(1, 16)),
        (F(3, 4), F(-1, 16)),
    ]


def test_map_bad_interval():
    with pytest.raises(BadInterval):
        map_rule_to_interval(make_rule("simpson"), 1, 1)


def test_mapped_rule_integrates_polynomials_exactly():
    s = make_rule("simpson")  # degree 3
    p = Polynomial([1, -2, F(3, 7), 5])
    a, b = F(-1, 3), F(7, 4)
    assert apply_rule(s, p, a, b) == p.definite_integral(a, b)


def test_json_round_trip_rational_bit_exact():
    r = make_rule("mod3", x=F(5, 17), lam=F(3, 11))
    r2 = rule_from_json(rule_to_json(r))
    assert r2.name == r.name
    assert all(a == b and wa == wb for (a, wa), (b, wb) in zip(r2.value_nodes, r.value_nodes))
    assert r2.params["x"].as_fraction() == F(5, 17)
    assert r2.params["lambda"].as_fraction() == F(3, 11)


def test_json_round_trip_sqrt_nodes():
    r = make_rule("gauss_legendre2")
    r2 = rule_from_json(rule_to_json(r))
    assert all(a == b for (a, _), (b, _) in zip(r2.value_nodes, r.value_nodes))
    data = json.loads(rule_to_json(r))
    assert data["value_nodes"][1][0] == "1/3*sqrt(3)"


def test_catalog_listing_is_deterministic():
    names = catalog_names()
    assert names == catalog_names()
    assert "simpson" in names and "q44" in names and "lobatto4" in names


def test_family_domains():
    fam = family("gs2")
    assert str(fam.domain) == "(0, 1]"
    assert fam.generic_degree == 1
    with pytest.raises(ParamOutOfDomain):
        fam.build(0)
    fam = family("dcr", lam=F(1, 3))
    assert fam.domain.lo == F(-1, 2) and fam.domain.hi == F(1, 2)
    with pytest.raises(ParamOutOfDomain):
        family("dcr", lam=F(9, 10))  # empty node window


def test_merged_degenerate_rules():
    # alomari4 at x = 1 collapses onto the trapezoid
    r = make_rule("alomari4", lam=F(1, 6), x=1)
    assert [(x.as_fraction(), w.as_fraction()) for x, w in r.value_nodes] == [
        (F(-1), F(1)),
        (F(1), F(1)),
    ]
    # liu_park at x = 0 drops its zero derivative weights
    r = make_rule("liu_park", x=0)
    assert r.deriv_nodes == ()
    assert [(x.as_fraction(), w.as_fraction()) for x, w in r.value_nodes] == [
        (F(-1), F(1, 2)),
        (F(0), F(1)),
        (F(1), F(1, 2)),
    ]
    # dragomir_sofo at x = 0 has no derivative term either
    assert make_rule("dragomir_sofo", x=0).deriv_nodes == ()
