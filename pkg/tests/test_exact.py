import pytest
from hypothesis import given, settings, strategies as st

from mpcolor.exact import SearchBudgetExceeded, chi_t_exact, is_kt_colorable
from mpcolor.gen import iter_profiles
from mpcolor.instance import make_instance, verify_coloring

from oracles import naive_chi, naive_colorable


COUNTER7 = make_instance([13, 8, 3, 3, 3, 3], 7)


def test_counterexample_not_two_colorable():
    assert not is_kt_colorable(COUNTER7, 2).colorable


def test_counterexample_three_colorable():
    res = is_kt_colorable(COUNTER7, 3)
    assert res.colorable
    assert verify_coloring(COUNTER7, res.witness).valid
    assert res.witness.counts == ((13, 0, 0, 0, 0, 0), (0, 4, 3, 3, 0, 0), (0, 4, 0, 0, 3, 3))


@pytest.mark.parametrize("sizes,t", [([4, 3, 1], 1), ([9, 9, 9, 2], 3), ([1] * 7, 2)])
def test_s_colors_always_suffice(sizes, t):
    inst = make_instance(sizes, t)
    assert is_kt_colorable(inst, inst.s).colorable


def test_bad_k():
    with pytest.raises(ValueError):
        is_kt_colorable(COUNTER7, 0)


@pytest.mark.parametrize("sizes,t,chi", [
    ([13, 8, 3, 3, 3, 3], 7, 3),
    ([15, 9, 4, 4, 3, 3], 8, 3),
    ([1] * 11, 2, 4),
    ([1] * 12, 5, 2),
])
def test_chi_examples(sizes, t, chi):
    out = chi_t_exact(make_instance(sizes, t))
    assert out.chi == chi
    assert out.witness.k == chi
    assert verify_coloring(make_instance(sizes, t), out.witness).valid


def test_budget_is_explicit():
    inst = make_instance([5, 5, 4, 4, 3, 3, 2], 4)
    with pytest.raises(SearchBudgetExceeded) as err:
        chi_t_exact(inst, budget=2)
    assert err.value.lower is not None and err.value.lower <= err.value.upper


def test_deterministic():
    inst = make_instance([7, 6, 5, 3, 2, 2], 4)
    assert chi_t_exact(inst) == chi_t_exact(inst)


def oracle_suite():
    for t in range(0, 5):
        for profile in iter_profiles(4, 6):
            yield profile, t


@pytest.mark.parametrize("t", range(0, 5))
def test_agrees_with_naive_enumerator(t):
    for profile in iter_profiles(4, 6):
        out = chi_t_exact(make_instance(profile, t))
        assert out.chi == naive_chi(profile, t), profile
        assert verify_coloring(make_instance(profile, t), out.witness).valid


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 5), min_size=1, max_size=4), st.integers(0, 4), st.integers(1, 4))
def test_decision_agrees_with_naive(sizes, t, k):
    inst = make_instance(sizes, t)
    assert is_kt_colorable(inst, k).colorable == naive_colorable(inst.part_sizes, t, k)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(1, 8), min_size=1, max_size=4), st.integers(0, 6), st.integers(1, 8))
def test_monotonicity(sizes, t, extra):
    chi = chi_t_exact(make_instance(sizes, t)).chi
    assert chi_t_exact(make_instance(sizes, t + 1)).chi <= chi
    assert chi_t_exact(make_instance(sizes + [extra], t)).chi >= chi
