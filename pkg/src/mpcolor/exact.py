"""Exact t-relaxed chromatic number by branch and bound over count matrices.

Parts are processed largest first.  Each part is split into at most k
color counts.  A color's future only depends on its running total T and the
smallest positive contribution mu it has received so far:

* adding m > 0 vertices of a new part is legal iff T == 0 or m <= t + mu - T
  (and T <= t, which holds for every color that is still open);
* once T > t the color can never touch another part (closed).

Colors with identical (T, mu) are interchangeable, so within such a group
the counts given to the current part are kept non-increasing.  States that
were refuted are memoised on the multiset of color states.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .bounds import bounds_report
from .instance import CountColoring, MultipartiteInstance

DEFAULT_BUDGET = 10_000_000

_EMPTY = (0, 0)
_CLOSED = (-1, 0)


class SearchBudgetExceeded(RuntimeError):
    """The node budget ran out before the question was settled."""

    def __init__(self, nodes_explored: int, lower: int | None = None, upper: int | None = None):
        self.nodes_explored = nodes_explored
        self.lower = lower
        self.upper = upper
        msg = f"inconclusive after {nodes_explored} nodes"
        if lower is not None:
            msg += f"; chi_t in [{lower}, {upper}]"
        super().__init__(msg)


@dataclass(frozen=True)
class Feasibility:
    colorable: bool
    witness: CountColoring | None
    nodes_explored: int

    def __bool__(self):
        return self.colorable


@dataclass(frozen=True)
class SolveOutcome:
    chi: int
    witness: CountColoring
    nodes_explored: int


class _Search:
    def __init__(self, sizes, t, k, budget, nodes=0):
        self.sizes = list(sizes)
        self.t = t
        self.k = k
        self.budget = budget
        self.nodes = nodes
        self.suffix = [sum(self.sizes[h:]) for h in range(len(self.sizes) + 1)]
        self.m = [[0] * len(self.sizes) for _ in range(k)]
        self.failed = set()

    def run(self) -> bool:
        return self._node(0, [_EMPTY] * self.k)

    def _node(self, h, states):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise SearchBudgetExceeded(self.nodes)
        if h == len(self.sizes):
            return True
        key = (h, tuple(sorted(states)))
        if key in self.failed:
            return False

        t = self.t
        rem = self.suffix[h]
        n_h = self.sizes[h]
        cap = 0
        for T, mu in states:
            if T == 0:
                cap += max(n_h, 2 * t)
            elif T > 0:
                cap += t + mu - T
        if cap < rem:
            self.failed.add(key)
            return False

        # open colors first (fullest first), then the empty ones
        order = sorted((c for c in range(self.k) if states[c][0] >= 0),
                       key=lambda c: (states[c][0] == 0, -states[c][0], -states[c][1], c))
        caps = []
        for c in order:
            T, mu = states[c]
            caps.append(n_h if T == 0 else min(n_h, t + mu - T))
        tail = [0] * (len(order) + 1)
        for p in range(len(order) - 1, -1, -1):
            tail[p] = tail[p + 1] + caps[p]

        for c in range(self.k):
            self.m[c][h] = 0
        if self._split(h, order, caps, tail, 0, n_h, n_h, states, list(states)):
            return True
        self.failed.add(key)
        return False

    def _split(self, h, order, caps, tail, p, rem, limit, states, new_states):
        if rem == 0:
            return self._node(h + 1, new_states)
        if p == len(order) or tail[p] < rem:
            return False
        c = order[p]
        T, mu = states[c]
        hi = min(rem, caps[p])
        if p > 0 and states[order[p - 1]] == states[c]:
            hi = min(hi, limit)
        lo = max(0, rem - tail[p + 1])
        t = self.t
        for x in range(hi, lo - 1, -1):
            if x == 0:
                new_states[c] = states[c]
            elif T == 0:
                new_states[c] = (x, x) if x <= t else _CLOSED
            else:
                total = T + x
                new_states[c] = (total, min(mu, x)) if total <= t else _CLOSED
            self.m[c][h] = x
            if self._split(h, order, caps, tail, p + 1, rem - x, x, states, new_states):
                return True
        self.m[c][h] = 0
        new_states[c] = states[c]
        return False


def canonical_rows(rows) -> tuple[tuple[int, ...], ...]:
    """Drop unused colors and order classes by (first part used, count there desc)."""
    rows = [tuple(r) for r in rows if any(r)]

    def key(row):
        first = next(h for h, x in enumerate(row) if x)
        return (first, -row[first], tuple(-x for x in row))

    return tuple(sorted(rows, key=key))


def _run(sizes, t, k, budget, nodes):
    limit = sys.getrecursionlimit()
    need = 4 * (len(sizes) + 1) * (k + 2) + 200
    if need > limit:
        sys.setrecursionlimit(need)
    search = _Search(sizes, t, k, budget, nodes)
    ok = search.run()
    witness = CountColoring(canonical_rows(search.m)) if ok else None
    return ok, witness, search.nodes


def is_kt_colorable(inst: MultipartiteInstance, k: int,
                    budget: int | None = DEFAULT_BUDGET) -> Feasibility:
    """Decide whether ``inst`` has a t-relaxed coloring with at most ``k`` colors.

    The witness lists only the colors it actually uses.  Raises
    ``SearchBudgetExceeded`` if more than ``budget`` nodes are needed.
    """
    if k < 1:
        raise ValueError(f"k={k} must be >= 1")
    ok, witness, nodes = _run(inst.part_sizes, inst.t, k, budget, 0)
    return Feasibility(ok, witness, nodes)


def chi_t_exact(inst: MultipartiteInstance, budget: int | None = DEFAULT_BUDGET) -> SolveOutcome:
    """Smallest k admitting a t-relaxed k-coloring, with a witness.

    The search starts at the best closed-form lower bound and moves up one
    color at a time; ``budget`` caps the total node count over all k.  On
    exhaustion ``SearchBudgetExceeded`` carries the bounds established so far.
    Practical up to roughly 40 vertices for t <= 8.
    """
    rep = bounds_report(inst)
    upper = min(rep.upper, inst.s)
    nodes = 0
    k = rep.lower
    while True:
        try:
            ok, witness, nodes = _run(inst.part_sizes, inst.t, k, budget, nodes)
        except SearchBudgetExceeded as exc:
            raise SearchBudgetExceeded(exc.nodes_explored, k, upper) from None
        if ok:
            assert witness.k == k
            return SolveOutcome(k, witness, nodes)
        k += 1
