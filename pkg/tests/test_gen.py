from math import comb

import pytest

from mpcolor.exact import chi_t_exact
from mpcolor.gen import (CertificateError, _certified, certify_chi, count_profiles,
                         gen_counterexample_even, gen_counterexample_odd, gen_random,
                         gen_tightness, iter_profiles)
from mpcolor.greedy import greedy_color_count
from mpcolor.instance import make_instance, verify_coloring


def test_odd_t7():
    inst, g = gen_counterexample_odd(7)
    assert inst.part_sizes == (13, 8, 3, 3, 3, 3)
    assert g.counts == ((13, 0, 0, 0, 0, 0), (0, 4, 3, 3, 0, 0), (0, 4, 0, 0, 3, 3))
    assert greedy_color_count(inst) == 4


def test_odd_t9():
    inst, g = gen_counterexample_odd(9)
    assert inst.part_sizes == (17, 10, 4, 4, 4, 4)
    assert g.k == 3 and verify_coloring(inst, g).valid


def test_even_t8():
    inst, g = gen_counterexample_even(8)
    assert inst.part_sizes == (15, 9, 4, 4, 3, 3)
    assert g.counts == ((15, 0, 0, 0, 0, 0), (0, 4, 4, 4, 0, 0), (0, 5, 0, 0, 3, 3))
    assert chi_t_exact(inst).chi == 3
    assert greedy_color_count(inst) == 4


@pytest.mark.parametrize("t", [5, 6, 8, 10])
def test_odd_rejects(t):
    with pytest.raises(ValueError):
        gen_counterexample_odd(t)


@pytest.mark.parametrize("t", [6, 7, 9])
def test_even_rejects(t):
    with pytest.raises(ValueError):
        gen_counterexample_even(t)


def test_unverified_certificate_refused():
    with pytest.raises(CertificateError):
        _certified(make_instance([2, 2], 1), [(2, 2)])


@pytest.mark.parametrize("t", [7, 8, 9, 10, 11])
def test_certificate_matches_search(t):
    gen = gen_counterexample_odd if t % 2 else gen_counterexample_even
    inst, g = gen(t)
    assert certify_chi(inst, g) == chi_t_exact(inst).chi == 3


@pytest.mark.parametrize("args,parts", [
    (("G1", 2, 5, 3), (7, 7, 1, 1, 1)),
    (("G2", 2, 4, 3), (6, 6, 3, 3)),
    (("G1", 1, 1, 1), (3,)),
])
def test_tightness(args, parts):
    assert gen_tightness(*args).part_sizes == parts


@pytest.mark.parametrize("args", [("G1", 0, 2, 1), ("G2", 3, 2, 1), ("G3", 1, 2, 1)])
def test_tightness_rejects(args):
    with pytest.raises(ValueError):
        gen_tightness(*args)


def test_random_golden():
    inst = gen_random(1, 4, 6, 4)
    assert (inst.original_sizes, inst.t) == ((5, 1), 3)
    assert gen_random(1, 4, 6, 4) == inst


def test_random_seeds_differ():
    assert len({(gen_random(seed, 6, 9, 8).part_sizes, gen_random(seed, 6, 9, 8).t)
                for seed in range(50)}) > 40


def test_random_respects_caps():
    for seed in range(200):
        inst = gen_random(seed, 3, 5, 2)
        assert inst.s <= 3 and max(inst.part_sizes) <= 5 and 1 <= inst.t <= 2


def test_profile_count_is_bounded_partition_count():
    for s_max in range(1, 5):
        for n_max in range(1, 7):
            profiles = list(iter_profiles(s_max, n_max))
            assert len(set(profiles)) == len(profiles) == count_profiles(s_max, n_max)
            assert all(list(p) == sorted(p, reverse=True) for p in profiles)
            by_size = sum(comb(n_max + s - 1, s) for s in range(1, s_max + 1))
            assert by_size == len(profiles)


def test_enumeration_mode_walks_everything():
    seen = {(gen_random(i, 3, 4, 2, enumerate_mode=True).part_sizes,
             gen_random(i, 3, 4, 2, enumerate_mode=True).t)
            for i in range(count_profiles(3, 4) * 2)}
    assert len(seen) == count_profiles(3, 4) * 2
    assert gen_random(0, 3, 4, 2, enumerate_mode=True) == \
        gen_random(count_profiles(3, 4) * 2, 3, 4, 2, enumerate_mode=True)
