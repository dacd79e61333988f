from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arfcurves.errors import DomainError, InputError, TruncationError
from arfcurves.series import (EXACT, SeriesTuple, TruncatedSeries, parse_series,
                              valuation)


def series(text, variable="t", truncation=64):
    return TruncatedSeries({}, truncation) if text == "0" else parse_series(
        text, variable, truncation)


def test_constructor_drops_zero_and_beyond_truncation():
    f = TruncatedSeries({2: 0, 3: 1, 9: 5}, 8)
    assert f.coefficients == {3: Fraction(1)}
    assert f.truncation == 8


def test_constructor_rejects_negative_exponent_and_truncation():
    with pytest.raises(DomainError):
        TruncatedSeries({-1: 1}, 8)
    with pytest.raises(TruncationError):
        TruncatedSeries({0: 1}, 0)


def test_addition_keeps_smaller_truncation():
    f = TruncatedSeries({1: 1}, 10)
    g = TruncatedSeries({1: -1, 4: 2}, 6)
    h = f + g
    assert h.coefficients == {4: Fraction(2)}
    assert h.truncation == 6


def test_product_truncation_tracks_orders():
    f = series("t^4")
    g = series("t^6+t^7")
    assert (f * g).truncation == min(64 + 6, 64 + 4)
    assert (f * g).coefficients == {10: Fraction(1), 11: Fraction(1)}


def test_product_collision_reveals_depth_thirteen():
    f = series("t^4")
    g = series("t^6+t^7")
    h = g * g - f * f * f
    assert h.order() == 13
    assert h.coefficients == {13: Fraction(2), 14: Fraction(1)}


def test_division_golden():
    g = series("t^6+t^7")
    f = series("t^4")
    q = g / f
    assert q.coefficients == {2: Fraction(1), 3: Fraction(1)}
    assert q.truncation == 60


def test_division_geometric_tail():
    q = series("1", truncation=12) / series("1+t", truncation=12)
    assert [q.coefficients[e] for e in range(6)] == [
        Fraction((-1) ** e) for e in range(6)]


def test_division_requires_dividend_order():
    with pytest.raises(DomainError):
        series("t^2") / series("t^3")
    with pytest.raises(DomainError):
        series("t^2") / TruncatedSeries({}, 64)


def test_division_of_zero_keeps_truncation_bookkeeping():
    q = TruncatedSeries({}, 64) / series("t^4")
    assert q.is_zero()
    assert q.truncation == 60


def test_division_truncation_exhausted():
    with pytest.raises(TruncationError):
        TruncatedSeries({}, 2) / series("t^3")


def test_division_inverts_multiplication():
    f = series("t^2+3t^3+1/2*t^5")
    g = series("t^3+t^4")
    assert ((f * g) / g).coefficients == f.coefficients


def test_valuation_golden_pairs():
    t = series("t^4")
    u = series("u^2", "u")
    assert valuation(SeriesTuple([t, u])) == (4, 2)
    one_t = series("1+t")
    one_u = series("1+u", "u")
    assert valuation(SeriesTuple([one_t, one_u])) == (0, 0)
    assert valuation(SeriesTuple([series("t^6+t^7"), series("u^5", "u")])) == (6, 5)


def test_valuation_undecidable_names_component():
    element = SeriesTuple([series("t^2"), TruncatedSeries({}, 32)])
    with pytest.raises(TruncationError, match="component 2"):
        valuation(element)


def test_tuple_arithmetic_is_componentwise():
    a = SeriesTuple([series("t"), series("u^2", "u")])
    b = SeriesTuple([series("t^3"), series("u", "u")])
    assert (a * b).components[0] == series("t^4", truncation=65)
    assert (a + b).components[1].coefficients == {1: Fraction(1), 2: Fraction(1)}
    with pytest.raises(DomainError):
        a + SeriesTuple([series("t")])


def test_parse_series_forms():
    assert series("t").coefficients == {1: Fraction(1)}
    assert series("5").coefficients == {0: Fraction(5)}
    assert series("2u^2", "u").coefficients == {2: Fraction(2)}
    assert series("2*u^2", "u").coefficients == {2: Fraction(2)}
    assert series("3/2*t^3").coefficients == {3: Fraction(3, 2)}
    assert series("t^6+t^7").coefficients == {6: Fraction(1), 7: Fraction(1)}
    assert series("1-2t+3t^2").coefficients == {
        0: Fraction(1), 1: Fraction(-2), 2: Fraction(3)}
    assert series("-t^2+t^2").coefficients == {}
    assert parse_series("0", "t", 64).is_zero()


def test_parse_series_positioned_errors():
    with pytest.raises(InputError, match=r"unknown variable 'u'.*position 5"):
        parse_series("t^4+u^2", "t", 64)
    with pytest.raises(InputError, match=r"negative exponents.*position 3"):
        parse_series("t^-2", "t", 64)
    with pytest.raises(InputError, match="exponent"):
        parse_series("t^", "t", 64)
    with pytest.raises(InputError, match="dangling"):
        parse_series("t^2+", "t", 64)
    with pytest.raises(InputError, match="empty"):
        parse_series("   ", "t", 64)
    with pytest.raises(InputError, match="unexpected character"):
        parse_series("t?2", "t", 64)
    with pytest.raises(InputError, match="truncation"):
        parse_series("t^70", "t", 64)
    with pytest.raises(InputError, match="variable"):
        parse_series("2*", "t", 64)


def test_to_string_round_trips():
    for text in ("t^4", "t^6+t^7", "2*t^2", "1/2*t^3-t^5", "1-2*t", "0"):
        rendered = series(text).to_string("t") if text != "0" else "0"
        assert series(rendered).coefficients == series(text).coefficients


@given(st.dictionaries(st.integers(0, 30), st.fractions(), max_size=6),
       st.dictionaries(st.integers(0, 30), st.fractions(), max_size=6))
def test_product_commutes_and_respects_known_terms(cf, cg):
    f = TruncatedSeries(cf, 32)
    g = TruncatedSeries(cg, 32)
    assert f * g == g * f
    exact_f = TruncatedSeries(cf, EXACT)
    exact_g = TruncatedSeries(cg, EXACT)
    product = f * g
    exact = exact_f * exact_g
    for exponent, coefficient in product.coefficients.items():
        assert exact.coefficients.get(exponent, 0) == coefficient
