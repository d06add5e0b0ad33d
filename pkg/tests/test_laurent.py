import pytest
from hypothesis import given

from ballotkl.laurent import (
    CASE_A, ONE, T, TN, ZERO, Laurent, angle, bracket, case_b, in_gamma_minus,
)

from conftest import case_b_laurents, laurents


def test_no_zero_coefficients_stored():
    p = Laurent({(1, 0): 2, (2, 0): 0}) + Laurent({(1, 0): -2})
    assert p == ZERO
    assert p.terms == {}


def test_bar_examples():
    assert ONE.bar() == ONE
    assert (T + TN ** -1).bar() == T ** -1 + TN


@given(laurents)
def test_bar_is_involution(p):
    assert p.bar().bar() == p


@given(laurents, laurents, laurents)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO


@given(laurents, laurents)
def test_bar_is_ring_map(p, q):
    assert (p * q).bar() == p.bar() * q.bar()
    assert (p + q).bar() == p.bar() + q.bar()


def test_in_gamma_minus_examples():
    assert in_gamma_minus(T ** -1, CASE_A)
    assert in_gamma_minus(T ** -1, case_b(2))
    assert in_gamma_minus(TN ** -1, CASE_A)
    assert in_gamma_minus(T ** -1 * TN ** 5, CASE_A)
    assert not in_gamma_minus(ONE)
    assert in_gamma_minus(ONE, allow_one=True)
    assert not in_gamma_minus(TN)
    with pytest.raises(ValueError):
        in_gamma_minus(TN, case_b(1))


@given(laurents)
def test_gamma_split_recombines(p):
    plus, one, minus = p.gamma_split()
    assert plus + one + minus == p
    assert minus.in_gamma_minus()
    assert plus.bar().in_gamma_minus()


def test_specialize_examples():
    assert TN.specialize(3) == T ** 3
    case_a = 1 + 2 * T ** 2 + 2 * T ** 4 + T ** 6 - TN ** 2 * T ** 4 - TN ** 2 * T ** 6
    # substituting tN = t at m = 1 collapses t^6 against -tN^2 t^4
    assert case_a.specialize(1) == 1 + 2 * T ** 2 + 2 * T ** 4 - T ** 8
    assert case_a.specialize(1) != 1 + 2 * T ** 2 + 2 * T ** 4 + T ** 6


@given(laurents)
def test_specialize_commutes_with_bar(p):
    for m in (1, 2, 3):
        assert p.bar().specialize(m) == p.specialize(m).bar()


@given(laurents)
def test_swap_tN_is_involution(p):
    assert p.swap_tN().swap_tN() == p
    assert TN.swap_tN() == T * TN ** -1


def test_bracket_and_angle():
    assert bracket(1) == ONE
    assert bracket(2) == T + T ** -1
    assert angle(0) == ONE
    assert angle(2) == T ** 2 + T ** -2
    for m in range(11):
        assert bracket(-m) == -bracket(m)
        assert bracket(m) * (T - T ** -1) == T ** m - T ** -m


@given(case_b_laurents)
def test_exact_div_roundtrip(p):
    for m in (1, 2, 3):
        assert (p * bracket(m)).exact_div(bracket(m)) == p


def test_exact_div_rejects_remainder():
    with pytest.raises(ValueError):
        (T + 2).exact_div(bracket(2))


def test_pow():
    assert (T * TN) ** -2 == Laurent.mono(-2, -2)
    assert (1 + T) ** 2 == 1 + 2 * T + T ** 2
    with pytest.raises(ValueError):
        (1 + T) ** -1


def test_text_format_ascending():
    p = 1 + 2 * T ** 2 + 2 * T ** 4 + T ** 6 - TN ** 2 * T ** 4 - TN ** 2 * T ** 6
    assert str(p) == "1 + 2*t^2 + 2*t^4 - t^4*tN^2 + t^6 - t^6*tN^2"
    assert str(ZERO) == "0"
    assert str(-T ** -1) == "-t^-1"


@given(laurents)
def test_json_roundtrip(p):
    assert Laurent.from_json(p.to_json()) == p


def test_case_objects():
    assert CASE_A.tN == TN
    assert case_b(2).tN == T ** 2
    with pytest.raises(ValueError):
        case_b(0)
