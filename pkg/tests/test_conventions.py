import itertools

import pytest
from hypothesis import given, strategies as st

from motsign import (
    Bidegree,
    CoefMode,
    Convention,
    EPS,
    MINUS_EPS,
    MINUS_ONE,
    ModeMismatchError,
    ONE,
    ParseError,
    PRESET_NAMES,
    base_commutation,
    commutation_unit,
    convention,
    convention_from_json,
    convention_to_json,
    error_factor,
    super_degree,
    twist_ratio,
    unit_mul,
    unit_pow,
    unit_twist,
)

GRID = [Bidegree(p, q) for p in range(-4, 5) for q in range(-4, 5)]

TAU = Bidegree(0, -1)
NU = Bidegree(3, 2)
TAU0 = Bidegree(1, 0)
ETA = Bidegree(1, 1)


def test_presets_resolve():
    assert convention("reference").twist == unit_twist(ONE)
    assert convention("deligne").twist == unit_twist(ONE)
    assert convention("minus-one").twist == unit_twist(MINUS_ONE)
    assert convention("epsilon").twist == unit_twist(EPS)
    assert convention("bernstein").twist == unit_twist(EPS)
    assert convention("minus-epsilon").twist == unit_twist(MINUS_EPS)
    assert convention("u=-1").name == "minus-one"
    assert convention("u=eps").name == "epsilon"
    with pytest.raises(ParseError):
        convention("koszul")


def test_base_commutation_examples():
    assert base_commutation(ETA, ETA) == EPS
    assert base_commutation(Bidegree(1, 0), Bidegree(0, -1)) == MINUS_ONE
    for b in (Bidegree(1, 2), Bidegree(-3, 0), Bidegree(0, 0)):
        assert base_commutation(Bidegree(0, 0), b) == ONE


def test_commutation_unit_quoted_signs():
    ref = convention("reference")
    eps_conv = convention("epsilon")
    assert commutation_unit(ref, TAU, NU) == MINUS_ONE
    assert commutation_unit(eps_conv, TAU, NU) == MINUS_EPS
    assert commutation_unit(ref, TAU0, TAU) == MINUS_ONE
    total_sign = convention("minus-one", CoefMode("-1"))
    assert commutation_unit(total_sign, TAU0, TAU) == ONE
    assert commutation_unit(ref, ETA, ETA) == EPS


def test_commutation_unit_total_degree_formula_under_minus_one_mode():
    for name in ("minus-one", "epsilon"):
        conv = convention(name, CoefMode("-1"))
        for a, b in itertools.product(GRID[::3], GRID[::3]):
            assert commutation_unit(conv, a, b) == unit_pow(MINUS_ONE, a.p * b.p)


def test_commutation_unit_epsilon_closed_form():
    conv = convention("epsilon")
    for a, b in itertools.product(GRID[::3], GRID[::3]):
        expected = unit_mul(
            unit_pow(MINUS_ONE, a.p * b.p),
            unit_pow(MINUS_EPS, a.q * b.p + a.p * b.q + a.q * b.q),
        )
        assert commutation_unit(conv, a, b) == expected


def test_reference_commutation_is_base_commutation():
    ref = convention("reference")
    for a, b in itertools.product(GRID[::5], GRID[::5]):
        assert commutation_unit(ref, a, b) == base_commutation(a, b)


def test_commutation_unit_skew_symmetric():
    for name in PRESET_NAMES:
        conv = convention(name)
        for a, b in itertools.product(GRID[::4], GRID[::4]):
            assert unit_mul(commutation_unit(conv, a, b), commutation_unit(conv, b, a)) == ONE


def test_error_factor_examples():
    # exponent a2 b1 + a1 b2 = -3 - 2 = -5, odd
    assert error_factor(Bidegree(-1, -1), NU) == EPS
    assert error_factor(Bidegree(3, 0), Bidegree(7, 0)) == ONE
    assert error_factor(ETA, ETA) == ONE


def test_error_factor_is_ratio_of_commutation_units():
    ref = convention("reference")
    eps_conv = convention("epsilon")
    for a, b in itertools.product(GRID[::3], GRID[::3]):
        ratio = unit_mul(commutation_unit(eps_conv, a, b), commutation_unit(ref, a, b).inverse())
        assert error_factor(a, b) == ratio


def test_twist_ratio_examples():
    ratio = twist_ratio(convention("reference"), convention("epsilon"))
    assert ratio.cocycle == unit_twist(EPS)
    assert not ratio.is_coboundary
    assert ratio.witness is None

    same = twist_ratio(convention("epsilon"), convention("epsilon"))
    assert same.cocycle == unit_twist(ONE)
    assert same.is_coboundary

    cross = twist_ratio(convention("minus-one"), convention("minus-epsilon"))
    assert cross.cocycle == unit_twist(EPS)
    assert not cross.is_coboundary


def test_twist_ratio_mode_mismatch():
    with pytest.raises(ModeMismatchError):
        twist_ratio(convention("reference"), convention("epsilon", CoefMode("-1")))


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
def test_super_degree_gives_deligne_penalty(a, b, c, d):
    # commuting degree a + b*sigma past c + d*sigma costs (-1)^(ac) eps^(bd)
    penalty = base_commutation(super_degree(a, b), super_degree(c, d))
    assert penalty == unit_mul(unit_pow(MINUS_ONE, a * c), unit_pow(EPS, b * d))


def test_convention_json_roundtrip():
    conv = convention("epsilon", CoefMode("-1", 8))
    doc = convention_to_json(conv)
    loaded = convention_from_json(doc)
    assert loaded.twist == conv.twist
    assert loaded.mode == conv.mode

    from_unit = convention_from_json({"u": "-eps", "mode": {"eps": "generic", "modulus": 0}})
    assert from_unit.twist == unit_twist(MINUS_EPS)

    with pytest.raises(ParseError):
        convention_from_json({"mode": {"eps": "generic"}})
    with pytest.raises(ParseError):
        convention_from_json({"u": "1", "twist": {"m11": "1", "m12": "1", "m21": "1", "m22": "1"}})


def test_custom_convention_commutation():
    # twisting by a symmetric cocycle never changes the commutation law
    from motsign import BilinearCocycle

    symmetric = BilinearCocycle(MINUS_ONE, EPS, EPS, MINUS_EPS)
    conv = Convention("custom", symmetric)
    ref = convention("reference")
    for a, b in itertools.product(GRID[::6], GRID[::6]):
        assert commutation_unit(conv, a, b) == commutation_unit(ref, a, b)
