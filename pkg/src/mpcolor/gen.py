"""Named instance families, their certified colorings, and instance samplers."""

from __future__ import annotations

import random
from itertools import combinations_with_replacement, islice
from math import comb
from typing import Iterator

from .bounds import counting_lower_bound
from .instance import CountColoring, MultipartiteInstance, make_instance, verify_coloring


class CertificateError(AssertionError):
    """A generated coloring failed verification."""


def _certified(inst: MultipartiteInstance, rows) -> CountColoring:
    col = CountColoring(tuple(tuple(r) for r in rows))
    verdict = verify_coloring(inst, col)
    if not verdict.valid:
        raise CertificateError(f"generated coloring is invalid: {verdict.violations}")
    return col


def gen_counterexample_odd(t: int) -> tuple[MultipartiteInstance, CountColoring]:
    """K(2t-1, t+1, h, h, h, h) with h = (t-1)/2, and a 3-coloring of it.

    Greedy needs 4 colors on this graph.
    """
    if t < 7 or t % 2 == 0:
        raise ValueError(f"t must be odd and >= 7, got {t}")
    h = (t - 1) // 2
    inst = make_instance([2 * t - 1, t + 1, h, h, h, h], t)
    rows = [
        (2 * t - 1, 0, 0, 0, 0, 0),
        (0, (t + 1) // 2, h, h, 0, 0),
        (0, (t + 1) // 2, 0, 0, h, h),
    ]
    return inst, _certified(inst, rows)


def gen_counterexample_even(t: int) -> tuple[MultipartiteInstance, CountColoring]:
    """K(2t-1, t+1, t/2, t/2, t/2-1, t/2-1) with a machine-checked 3-coloring."""
    if t < 8 or t % 2 == 1:
        raise ValueError(f"t must be even and >= 8, got {t}")
    h = t // 2
    inst = make_instance([2 * t - 1, t + 1, h, h, h - 1, h - 1], t)
    rows = [
        (2 * t - 1, 0, 0, 0, 0, 0),
        (0, h, h, h, 0, 0),
        (0, h + 1, 0, 0, h - 1, h - 1),
    ]
    return inst, _certified(inst, rows)


def gen_counterexample(t: int) -> tuple[MultipartiteInstance, CountColoring]:
    return gen_counterexample_odd(t) if t % 2 else gen_counterexample_even(t)


def certify_chi(inst: MultipartiteInstance, col: CountColoring) -> int | None:
    """chi_t without search, if a valid coloring meets the counting lower bound.

    Every class either stays inside one part or has at most 2t vertices, so
    k classes cover at most k * max(n_1, 2t) vertices.
    """
    if not verify_coloring(inst, col).valid:
        return None
    return col.k if counting_lower_bound(inst) == col.k else None


def gen_tightness(kind: str, r: int, s: int, t: int) -> MultipartiteInstance:
    """G1: r parts of 2t+1 plus s-r singletons.  G2: r parts of 2t plus s-r parts of t."""
    if r < 1 or s < r:
        raise ValueError(f"need 1 <= r <= s, got r={r}, s={s}")
    if t < 1:
        raise ValueError(f"t={t} must be positive")
    kind = kind.upper()
    if kind == "G1":
        return make_instance([2 * t + 1] * r + [1] * (s - r), t)
    if kind == "G2":
        return make_instance([2 * t] * r + [t] * (s - r), t)
    raise ValueError(f"unknown family {kind!r}; expected G1 or G2")


def iter_profiles(s_max: int, n_max: int) -> Iterator[tuple[int, ...]]:
    """All non-increasing part profiles with 1..s_max parts of size 1..n_max."""
    for s in range(1, s_max + 1):
        yield from combinations_with_replacement(range(n_max, 0, -1), s)


def count_profiles(s_max: int, n_max: int) -> int:
    # multisets of size s from n_max values, summed over s = 1..s_max
    return comb(n_max + s_max, s_max) - 1


def gen_random(seed: int, s_max: int, n_max: int, t_max: int,
               enumerate_mode: bool = False) -> MultipartiteInstance:
    """Reproducible instance within the caps.

    In enumeration mode ``seed`` is an index into the sequence of all
    (profile, t) pairs, t running fastest over 1..t_max; indices wrap.
    """
    if min(s_max, n_max, t_max) < 1:
        raise ValueError("caps must be positive")
    if enumerate_mode:
        total = count_profiles(s_max, n_max) * t_max
        idx = seed % total
        profile = next(islice(iter_profiles(s_max, n_max), idx // t_max, None))
        return make_instance(profile, idx % t_max + 1)
    rng = random.Random(seed)
    s = rng.randint(1, s_max)
    parts = [rng.randint(1, n_max) for _ in range(s)]
    return make_instance(parts, rng.randint(1, t_max))
