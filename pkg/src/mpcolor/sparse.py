"""Maximum t-sparse sets of complete multi-partite graphs.

A set touching parts j_1..j_i with x_j vertices from each is t-sparse iff
``sum(x) - x_j <= t`` for every touched part.  With parts sorted
non-increasing, the best set touching exactly i parts uses the first i
parts and is found in closed form; the overall maximum compares the whole
first part against those, for i = 2 .. min(s, t+1).
"""

from __future__ import annotations

from typing import Sequence

from .instance import MultipartiteInstance, SparseSelection


class OpCounter:
    """Counts elementary arithmetic steps; used to check complexity claims."""

    def __init__(self):
        self.ops = 0

    def tick(self, n: int = 1) -> None:
        self.ops += n


def _fill(caps: Sequence[int], budget: int, floor: int, ops: OpCounter | None) -> list[int]:
    # Water-fill from the first part: take as much as possible while leaving
    # `floor` for every later slot.  caps is non-increasing and every cap >= floor.
    out = []
    m = len(caps)
    for j, cap in enumerate(caps):
        x = min(cap, budget - (m - 1 - j) * floor)
        out.append(x)
        budget -= x
        if ops is not None:
            ops.tick()
    assert budget == 0
    return out


def solve_lp_sizes(i: int, sizes: Sequence[int], t: int,
                   ops: OpCounter | None = None) -> tuple[list[int], int]:
    """Closed-form optimum of LP(i) on sorted sizes.

    Returns the picks for the first ``i`` parts (non-increasing, all >= 1)
    and the optimal value M_i.
    """
    if t < 1:
        raise ValueError("LP(i) needs t >= 1")
    if not 2 <= i <= min(len(sizes), t + 1):
        raise ValueError(f"i={i} out of range 2..{min(len(sizes), t + 1)}")
    n_i = sizes[i - 1]
    level = t // (i - 1)
    if ops is not None:
        ops.tick(2)
    if n_i <= level:
        head = sizes[: i - 1]
        budget = min(t, sum(head))
        if ops is not None:
            ops.tick(i)
        picks = _fill(head, budget, n_i, ops) + [n_i]
        value = n_i + budget
    else:
        picks = _fill(sizes[: i - 1], t, level, ops) + [level]
        value = t + level
    return picks, value


def solve_lp(i: int, inst: MultipartiteInstance, ops: OpCounter | None = None) -> SparseSelection:
    """LP(i) as a selection over all parts of ``inst`` (zeros past part i)."""
    if i > inst.s:
        raise ValueError(f"i={i} exceeds the number of parts {inst.s}")
    picks, _ = solve_lp_sizes(i, inst.part_sizes, inst.t, ops)
    return SparseSelection(tuple(picks) + (0,) * (inst.s - i))


def max_t_sparse_sizes(sizes: Sequence[int], t: int,
                       ops: OpCounter | None = None) -> list[int]:
    """Picks of a maximum t-sparse set for non-increasing ``sizes``.

    Candidates are ordered i = 1 (whole first part), 2, ..., min(s, t+1);
    the first candidate of maximum size wins.
    """
    n1 = sizes[0]
    best = [n1] + [0] * (len(sizes) - 1)
    if t == 0 or n1 >= 2 * t:
        # no multi-part set beats 2t vertices; with t = 0 none exists at all
        return best
    best_value = n1
    for i in range(2, min(len(sizes), t + 1) + 1):
        picks, value = solve_lp_sizes(i, sizes, t, ops)
        if ops is not None:
            ops.tick()
        if value > best_value:
            best_value = value
            best = picks + [0] * (len(sizes) - i)
    return best


def max_t_sparse(inst: MultipartiteInstance, ops: OpCounter | None = None) -> SparseSelection:
    """Maximum t-sparse set of ``inst`` as per-part picks (canonical order)."""
    return SparseSelection(tuple(max_t_sparse_sizes(inst.part_sizes, inst.t, ops)))


def beta_t(inst: MultipartiteInstance) -> int:
    """Order of the largest t-sparse set."""
    return max_t_sparse(inst).size
