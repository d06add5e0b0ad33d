import pytest
from hypothesis import given, settings, strategies as st

from ballotkl.hecke import (
    HeckeAction, bar_module, bold_t, canonical_basis, capacity_table,
    extract_P, factorized_A_minus, factorized_tilde_C, p_polynomial,
    tilde_C_factors,
)
from ballotkl.laurent import CASE_A, ONE, T, TN, case_b
from ballotkl.linkpattern import varpi_A
from ballotkl.strings import MINUS, PLUS, all_strings, bruhat_leq
from ballotkl.vector import ModuleVector, basis

from conftest import laurents

CASES = [CASE_A, case_b(1), case_b(2), case_b(3)]
ACTIONS = [HeckeAction(e, c) for e in (PLUS, MINUS) for c in CASES]


def test_generator_examples():
    minus = HeckeAction(MINUS, CASE_A)
    assert minus.apply(1, basis("11")) == basis("11").scale(-T ** -1)
    assert HeckeAction(PLUS, CASE_A).apply(1, basis("11")) == basis("11").scale(T)
    assert minus.apply(3, basis("121")) == basis("122")
    assert minus.apply(3, basis("122")) == basis("121") + basis("122").scale(TN - TN ** -1)
    assert minus.apply(1, basis("12")) == basis("21")
    with pytest.raises(ValueError):
        minus.apply(3, basis("11"))


@st.composite
def vectors(draw, n):
    coeffs = draw(st.lists(laurents, min_size=2 ** n, max_size=2 ** n))
    return ModuleVector(dict(zip(all_strings(n), coeffs)))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.just(n), vectors(n))),
       st.sampled_from(ACTIONS))
def test_quadratic_relation(nv, action):
    n, v = nv
    for i in range(1, n + 1):
        q = action.param(i, n)
        tv = action.apply(i, v)
        assert action.apply(i, tv) - tv.scale(q) + (tv - v.scale(q)).scale(q ** -1) == ModuleVector()
        assert action.apply_inv(i, tv) == v


def test_braid_relations_on_module():
    for action in ACTIONS:
        for a in all_strings(3):
            v = basis(a)
            assert action.apply_word([1, 2, 1], v) == action.apply_word([2, 1, 2], v)
            assert action.apply_word([2, 3, 2, 3], v) == action.apply_word([3, 2, 3, 2], v)
            assert action.apply_word([1, 3], v) == action.apply_word([3, 1], v)


def test_bold_t():
    assert bold_t("221121", CASE_A) == T ** 10 * TN ** 3
    assert bold_t("221121", case_b(2)) == T ** 16


def test_bar_involution():
    for action in ACTIONS:
        for n in range(1, 5):
            assert bar_module(basis("1" * n), action) == basis("1" * n)
            for a in all_strings(n):
                assert bar_module(bar_module(basis(a), action), action) == basis(a)


def test_canonical_basis_properties():
    for action in ACTIONS:
        for n in range(1, 5):
            for b in all_strings(n):
                C = canonical_basis(b, action)
                assert C[b] == ONE
                assert bar_module(C, action) == C
                for a, c in C.items():
                    assert bruhat_leq(a, b)
                    assert a == b or c.in_gamma_minus()


def test_canonical_basis_small():
    minus_a = HeckeAction(MINUS, CASE_A)
    assert canonical_basis("1", minus_a) == basis("1")
    assert canonical_basis("2", minus_a) == basis("2") + basis("1").scale(TN ** -1)
    assert canonical_basis("2", HeckeAction(MINUS, case_b(1))) == basis("2") + basis("1").scale(T ** -1)


def test_bar_invariance_of_varpi():
    action = HeckeAction(MINUS, CASE_A)
    for n in range(1, 5):
        for b in all_strings(n):
            assert bar_module(varpi_A(b), action) == varpi_A(b)


def test_extract_P_example():
    want = 1 + 2 * T ** 2 + 2 * T ** 4 + T ** 6 - TN ** 2 * T ** 4 - TN ** 2 * T ** 6
    assert p_polynomial("111111", "211212", PLUS, CASE_A) == want
    C = canonical_basis("2121", HeckeAction(PLUS, CASE_A))
    assert extract_P(C, "2121", "2121", CASE_A) == ONE
    assert p_polynomial("2111", "1112", PLUS, CASE_A) == 0


def test_factorized_A_minus():
    assert factorized_A_minus("111") == basis("111")
    assert factorized_A_minus("112") == basis("112") + basis("111").scale(TN ** -1)
    for n in range(1, 6):
        for a in all_strings(n):
            assert factorized_A_minus(a) == varpi_A(a)


def test_capacity_table_example():
    assert capacity_table("11111") == {}
    r = capacity_table("21122")
    assert [r[i, i - 1] for i in range(1, 6)] == [1, 2, 3, 4, 5]
    assert r[5, 0] == 1
    assert (r[4, 1], r[5, 2]) == (2, 3)
    assert tilde_C_factors("21122") == [(5, 1), (4, 2), (5, 3), (1, 1), (2, 2), (3, 3), (4, 4), (5, 5)]


def test_capacity_increases_up_columns():
    for n in range(1, 7):
        for a in all_strings(n):
            r = capacity_table(a)
            for (i, j), v in r.items():
                if (i, j + 2) in r:
                    assert r[i, j + 2] > v


def test_tilde_C_is_plus_canonical_basis():
    plus, minus = HeckeAction(PLUS, CASE_A), HeckeAction(MINUS, CASE_A)
    assert factorized_tilde_C("1111") == basis("1111")
    differs_from_minus = 0
    for n in range(1, 5):
        for a in all_strings(n):
            c = factorized_tilde_C(a, PLUS)
            assert c == canonical_basis(a, plus)
            differs_from_minus += c != canonical_basis(a, minus)
    assert differs_from_minus > 0
