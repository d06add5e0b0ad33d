from hypothesis import given

from ballotkl.hecke import HeckeAction
from ballotkl.laurent import ONE, T, TN, angle, case_b
from ballotkl.linkpattern import (
    link_pattern_A, link_pattern_B, match_arcs,
    p_minus_closed_form_A, p_minus_closed_form_B, varpi, varpi_A, varpi_B,
)
from ballotkl.strings import MINUS, all_strings
from ballotkl.vector import basis

from conftest import binary_strings


def arcs_by_removal(alpha):
    """Repeatedly delete an adjacent 2...1 pair (ignoring deleted letters)."""
    live = list(range(1, len(alpha) + 1))
    arcs = []
    changed = True
    while changed:
        changed = False
        for k in range(len(live) - 1):
            i, j = live[k], live[k + 1]
            if alpha[i - 1] == "2" and alpha[j - 1] == "1":
                arcs.append((i, j))
                del live[k:k + 2]
                changed = True
                break
    return sorted(arcs)


@given(binary_strings(max_size=8))
def test_arc_matching_is_order_independent(a):
    arcs, ones, twos = match_arcs(a)
    assert arcs == arcs_by_removal(a)
    rest = "".join(a[p - 1] for p in sorted(ones + twos))
    assert "21" not in rest


def test_link_pattern_A_example():
    lp = link_pattern_A("1221222112")
    assert lp.arcs == ((3, 4), (6, 9), (7, 8))
    assert lp.o_marks == (2, 10) and lp.e_marks == (5,)
    assert lp.circled_ones == (1,)
    assert link_pattern_A("1111").circled_ones == (1, 2, 3, 4)
    assert link_pattern_A("1111").arcs == ()


def test_link_pattern_B_example():
    lp = link_pattern_B("122212222112", 2)
    assert lp.arcs == ((4, 5), (8, 11), (9, 10))
    assert lp.labeled_verticals == {7: 1, 12: 2}
    assert lp.dotted_pairs == ((3, 6),)
    assert lp.circled_ones == (1,) and lp.circled_twos == (2,)
    assert link_pattern_B("111", 2).circled_ones == (1, 2, 3)


def test_link_pattern_B_partitions_positions():
    for n in range(1, 9):
        for a in all_strings(n):
            for m in (1, 2, 3):
                lp = link_pattern_B(a, m)
                assert len(lp.circled_twos) <= 1
                used = [p for arc in lp.arcs for p in arc] + list(lp.labeled_verticals)
                used += [p for d in lp.dotted_pairs for p in d]
                used += list(lp.circled_ones) + list(lp.circled_twos)
                assert sorted(used) == list(range(1, n + 1))


def test_varpi_examples():
    assert varpi_A("1111") == basis("1111")
    assert varpi_A("1212") == (basis("1212") + basis("1122").scale(T ** -1)
                               + basis("1211").scale(TN ** -1)
                               + basis("1121").scale(T ** -1 * TN ** -1))
    assert varpi_B("111", 2) == basis("111")
    assert varpi_B("2", 1) == basis("2") + basis("1").scale(T ** -1)


def test_closed_form_examples():
    assert p_minus_closed_form_A("1212", "1212") == ONE
    assert p_minus_closed_form_A("1122", "1212") == T ** -1
    assert p_minus_closed_form_A("1121", "1212") == T ** -1 * TN ** -1
    assert p_minus_closed_form_B("2", "2", 2) == ONE
    assert p_minus_closed_form_B("1", "2", 2) == T ** -2


def test_closed_form_matches_expansion():
    for m in (None, 1, 2, 3):
        case = case_b(m) if m else None
        for n in range(1, 6):
            for b in all_strings(n):
                if case is None:
                    v = varpi_A(b)
                    cf = lambda a: p_minus_closed_form_A(a, b)
                else:
                    v = varpi_B(b, m)
                    cf = lambda a: p_minus_closed_form_B(a, b, m)
                for a in all_strings(n):
                    assert cf(a) == v[a]
                    if v[a]:
                        assert v[a].is_monomial()


def test_staircase_recurrence_case_B():
    # varpi(2^{l+1}) = (T_N + t^-m) varpi(2^l 1)
    #     - sum_k (-1)^{m-k} <k-1> varpi(2^{l-m+k-1} 1 2^{m-k+1})
    for m in (1, 2, 3):
        action = HeckeAction(MINUS, case_b(m))
        for l in range(0, 6):
            n = l + 1
            base = varpi_B("2" * l + "1", m)
            rhs = action.apply(n, base) + base.scale(T ** -m)
            for k in range(max(1, m - l + 1), m + 1):
                s = "2" * (l - m + k - 1) + "1" + "2" * (m - k + 1)
                rhs = rhs - varpi_B(s, m).scale(angle(k - 1) * (-1) ** (m - k))
            assert varpi_B("2" * (l + 1), m) == rhs


def test_varpi_dispatch():
    assert varpi("1212", case_b(2)) == varpi_B("1212", 2)
