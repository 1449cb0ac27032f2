from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gtzlab.systems import HighestWeight
from gtzlab.tableaux import (BTableau, NonIntegerDimension, b_tableau_weight, branching_check,
                             branching_terms, enumerate_b_tableaux, enumerate_gl_tableaux, full_dim,
                             gl_tableau_weight, weyl_dim)
from conftest import A, B


def brute_gl(top):
    """Nested loops over every candidate row, keeping the interlacing ones."""
    n = len(top)
    count = 0
    for mid in product(range(top[0] + 1), repeat=n - 1):
        if not all(top[i] >= mid[i] >= top[i + 1] for i in range(n - 1)):
            continue
        for bot in product(range(top[0] + 1), repeat=n - 2):
            if all(mid[i] >= bot[i] >= mid[i + 1] for i in range(n - 2)):
                count += 1
    return count


def brute_b(weight):
    top = [Fraction(x, 2) for x in weight.entries]
    n = len(top)
    half = Fraction(1, 2) if weight.is_half else 0
    grid = [half + k for k in range(int(top[0] - half) + 1)]
    count = 0
    for mid in product(grid, repeat=n):
        if not all(top[i] >= mid[i] >= (top[i + 1] if i + 1 < n else 0) for i in range(n)):
            continue
        for bot in product(grid, repeat=n - 1):
            if all(mid[i] >= bot[i] >= mid[i + 1] for i in range(n - 1)):
                count += 1 if (half == 0 and mid[-1] == 0) else 2
    return count


def gt_pattern_count(top):
    """Number of full GT patterns under ``top``: the gl dimension."""
    if len(top) == 1:
        return 1
    total = 0
    ranges = [range(top[i + 1], top[i] + 1) for i in range(len(top) - 1)]
    for row in product(*ranges):
        total += gt_pattern_count(row)
    return total


@pytest.mark.parametrize("top,count", [((1, 0, 0), 3), ((0, 0, 0), 1), ((1, 1, 0), 3), ((2, 1, 0), 8)])
def test_gl_counts(top, count):
    assert len(enumerate_gl_tableaux(top)) == count == brute_gl(top)


@pytest.mark.parametrize("weight,count", [(B(1, 0), 3), (B(1, 1), 4), (B("1/2", "1/2"), 2), (B(0, 0), 1)])
def test_b_counts(weight, count):
    assert len(enumerate_b_tableaux(weight)) == count


b2 = st.tuples(st.integers(0, 3), st.integers(0, 3), st.booleans())


@settings(max_examples=40, deadline=None)
@given(b2)
def test_b_count_against_nested_loops(draw):
    hi, lo, half = draw
    hi, lo = max(hi, lo), min(hi, lo)
    w = HighestWeight("B", 2, (2 * hi + half, 2 * lo + half))
    assert len(enumerate_b_tableaux(w)) == brute_b(w)


def test_b_count_rank3_nested_loops():
    for w in (B(2, 1, 0), B(1, 1, 1), B("3/2", "1/2", "1/2")):
        assert len(enumerate_b_tableaux(w)) == brute_b(w)


def test_tableau_rows_interlace():
    for t in enumerate_b_tableaux(B(2, 1)):
        assert t.top[0] >= t.middle[0] >= t.top[1] >= t.middle[1] >= 0
        assert t.middle[0] >= t.bottom[0] >= t.middle[1]


@pytest.mark.parametrize("weight,dim", [((1, 0), 5), ((1, 1), 10), (("1/2", "1/2"), 4), ((0, 0), 1),
                                        ((2, 0), 14)])
def test_weyl_b2_examples(weight, dim):
    assert weyl_dim("B", 2, [Fraction(x) for x in weight]) == dim


@pytest.mark.parametrize("a,b", [(a, b) for a in range(5) for b in range(a + 1)])
def test_weyl_b2_closed_form(a, b):
    for half in (0, Fraction(1, 2)):
        x, y = a + half, b + half
        closed = (2 * x + 3) * (2 * y + 1) * (x - y + 1) * (x + y + 2) / 6
        assert weyl_dim("B", 2, [x, y]) == closed


@pytest.mark.parametrize("top", [(1, 0, 0), (2, 1, 0), (3, 1, 0), (2, 2, 1, 0), (3, 2, 0, 0)])
def test_weyl_gl_against_pattern_count(top):
    assert weyl_dim("A", len(top) - 1, top) == gt_pattern_count(top)


def test_weyl_small_and_bad_input():
    assert weyl_dim("B", 0, []) == 1
    with pytest.raises(ValueError):
        weyl_dim("B", 2, [1])
    with pytest.raises(NonIntegerDimension):
        weyl_dim("A", 1, [Fraction(1, 2), 0])


def test_b_tableau_weight_variants():
    t = BTableau((2, 2), (2, 2), (2,), 0)
    assert b_tableau_weight(t, "printed") == (2, 6)
    assert b_tableau_weight(t, "proof_diff") == (2, 2)
    assert b_tableau_weight(t, "sigma_neg") == (2, 2)
    t1 = BTableau((2, 2), (2, 2), (2,), 1)
    assert b_tableau_weight(t1, "sigma_neg") == (2, 0)
    with pytest.raises(ValueError):
        b_tableau_weight(t, "other")


def test_gl_tableau_weight():
    t = enumerate_gl_tableaux((1, 0, 0))[0]
    assert gl_tableau_weight(t) == t.bottom + (sum(t.middle) - sum(t.bottom),)


@pytest.mark.parametrize("weight,dim", [(B(1, 0), 5), (B(1, 1), 10), (B("1/2", "1/2"), 4), (A(2, 1), 8)])
def test_branching_sum(weight, dim):
    terms = branching_terms(weight)
    assert sum(m * d for _, m, d in terms) == full_dim(weight) == dim


def test_branching_check_at_11():
    out = branching_check(B(1, 1))
    assert out["WEYL-BRANCH"]["status"] == "PASS"
    assert out["WESS-printed"]["status"] == "FAIL"
    assert out["WESS-sigma_neg"]["status"] == "PASS"
    assert out["LOWROW-MULTISET"]["status"] == "PASS"
    assert [2, 6] in out["WESS-printed"]["details"]["tableau_multiset"]


def test_branching_check_gl_has_no_wess():
    out = branching_check(A(2, 1))
    assert set(out) == {"WEYL-BRANCH", "LOWROW-MULTISET"}
    assert out["LOWROW-MULTISET"]["status"] == "PASS"
