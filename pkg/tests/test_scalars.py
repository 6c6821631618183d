from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qblocks.scalars import (
    HALF,
    INT,
    IRR,
    CosetClass,
    Scalar,
    coordinate_sign,
    coset_class,
)

PI = Scalar.symbol("pi")


def rationals(max_num=60, max_den=12):
    return st.builds(
        Fraction,
        st.integers(min_value=-max_num, max_value=max_num),
        st.integers(min_value=1, max_value=max_den),
    )


def scalars():
    coeffs = st.dictionaries(
        st.sampled_from(["pi", "e", "s"]), rationals(), max_size=3)
    return st.builds(Scalar, rationals(), coeffs)


def test_text_format_examples():
    assert Scalar(Fraction(3, 2)).text() == "3/2"
    assert PI.text() == "0+pi*1"
    assert (-1 - PI + 0 * PI).text() == "-1+pi*-1"
    assert Scalar.parse("3/2") == Scalar(Fraction(3, 2))
    assert Scalar.parse("0+pi*1") == PI
    assert Scalar.parse("-1+pi*-1") == Scalar(-1) - PI


def test_parse_rejects_garbage():
    for bad in ["", "pi", "1+pi", "1+*2", "1+2pi*1", "1/0", "1+pi*1/0", "one"]:
        with pytest.raises(ValueError):
            Scalar.parse(bad)


def test_symbols_normalized():
    s = Scalar(0, [("pi", Fraction(1)), ("pi", Fraction(-1)), ("e", Fraction(2))])
    assert s == Scalar(0, {"e": Fraction(2)})
    assert Scalar(1, {"pi": Fraction(0)}) == Scalar(1)


def test_bad_symbol_names_rejected():
    with pytest.raises(ValueError):
        Scalar.symbol("2pi")
    with pytest.raises(ValueError):
        Scalar.symbol("a b")


@given(scalars())
def test_text_round_trip(a):
    assert Scalar.parse(a.text()) == a


@given(scalars(), scalars(), scalars())
def test_vector_space_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a - a == Scalar(0)
    assert (a + b) * Fraction(3, 7) == a * Fraction(3, 7) + b * Fraction(3, 7)
    assert a * Fraction(2) * Fraction(1, 2) == a


def test_comparison_needs_rational_difference():
    assert Scalar(1) + PI < Scalar(2) + PI
    with pytest.raises(TypeError):
        PI < Scalar(1)


def test_is_integer():
    assert Scalar(3).is_integer()
    assert not Scalar(Fraction(1, 2)).is_integer()
    assert not PI.is_integer()
    assert (PI - PI + 4).is_integer()


def test_coset_kinds():
    assert coset_class(Scalar(0)).kind == INT
    assert coset_class(Scalar(-7)).kind == INT
    assert coset_class(Scalar(Fraction(1, 2))).kind == HALF
    assert coset_class(Scalar(Fraction(-3, 2))).kind == HALF
    assert coset_class(Scalar(Fraction(1, 5))).kind == IRR
    assert coset_class(PI).kind == IRR
    assert coset_class(PI * Fraction(1, 2)).kind == IRR


@given(scalars(), scalars())
def test_same_coset_iff_integer_difference(a, b):
    assert (coset_class(a) == coset_class(b)) == (a - b).is_integer()


@given(scalars())
def test_pairing_involution(a):
    cls = coset_class(a)
    assert cls.paired().paired() == cls
    assert cls.paired() == coset_class(-a)
    if cls.kind in (INT, HALF):
        assert cls.paired() == cls
    else:
        assert cls.paired() != cls


@given(scalars())
def test_exactly_one_plus_representative_per_pair(a):
    cls = coset_class(a)
    if cls.kind == IRR:
        assert cls.is_plus_representative() != cls.paired().is_plus_representative()
    assert cls.pair_representative() == cls.paired().pair_representative()


def test_irr_representative_reduced():
    cls = coset_class(Scalar(Fraction(7, 5)))
    assert cls.rep_rational == Fraction(2, 5)
    assert coset_class(Scalar(Fraction(-3, 5), {"pi": Fraction(1)})).rep_rational == Fraction(2, 5)


def test_labels():
    assert coset_class(Scalar(4)).label() == "INT"
    assert coset_class(Scalar(Fraction(-1, 2))).label() == "HALF"
    assert coset_class(Scalar(Fraction(1, 5))).label() == "IRR(1/5)"
    assert coset_class(Scalar(Fraction(4, 5))).label() == "IRR(1/5)"
    assert coset_class(PI).label() == "IRR(pi)"
    assert coset_class(-PI).label() == "IRR(pi)"
    assert coset_class(PI * Fraction(1, 2)).label() == "IRR(pi*1/2)"
    assert coset_class(Scalar(Fraction(1, 2)) + PI).label() == "IRR(1/2+pi)"


def test_coordinate_signs():
    assert coordinate_sign(Scalar(3)) == 1
    assert coordinate_sign(Scalar(-1)) == 1
    assert coordinate_sign(Scalar(Fraction(3, 2))) == 1
    assert coordinate_sign(Scalar(Fraction(-3, 2))) == -1
    assert coordinate_sign(Scalar(Fraction(1, 5))) == 1
    assert coordinate_sign(Scalar(Fraction(-1, 5))) == -1
    assert coordinate_sign(PI) == 1
    assert coordinate_sign(PI - 1) == 1
    assert coordinate_sign(1 - PI) == -1
    assert coordinate_sign(-PI) == -1


@given(scalars())
def test_sign_flips_under_negation_off_self_paired(a):
    if coset_class(a).kind == IRR:
        assert coordinate_sign(a) == -coordinate_sign(-a)


def test_invalid_coset_construction():
    with pytest.raises(ValueError):
        CosetClass(IRR, Fraction(1, 2))
    with pytest.raises(ValueError):
        CosetClass(IRR, Fraction(3, 2), (("pi", Fraction(1)),))
    with pytest.raises(ValueError):
        CosetClass("WILD")
