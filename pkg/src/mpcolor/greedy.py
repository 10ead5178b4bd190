"""Greedy t-relaxed coloring: repeatedly remove a maximum t-sparse set."""

from __future__ import annotations

from dataclasses import dataclass

from .instance import CountColoring, MultipartiteInstance, SparseSelection
from .sparse import OpCounter, max_t_sparse_sizes


@dataclass(frozen=True)
class GreedyResult:
    coloring: CountColoring
    # trace[i] is the selection that became color i+1, over canonical parts
    trace: tuple[SparseSelection, ...]
    # residual part sizes (canonical order) after each extraction
    residuals: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return self.coloring.k


def greedy_coloring(inst: MultipartiteInstance, ops: OpCounter | None = None) -> GreedyResult:
    """Color ``inst`` by extracting maximum t-sparse sets until nothing is left.

    Residual parts keep their identity; after every extraction the
    remaining non-empty parts are re-sorted with a stable sort.
    """
    remaining = list(inst.part_sizes)
    alive = list(range(inst.s))  # canonical part ids, sorted by remaining size
    rows, residuals = [], []
    while alive:
        sizes = [remaining[h] for h in alive]
        picks = max_t_sparse_sizes(sizes, inst.t, ops)
        row = [0] * inst.s
        for h, x in zip(alive, picks):
            row[h] = x
            remaining[h] -= x
        rows.append(tuple(row))
        residuals.append(tuple(remaining))
        alive = [h for h in alive if remaining[h] > 0]
        alive.sort(key=lambda h: -remaining[h])
    return GreedyResult(
        coloring=CountColoring(tuple(rows)),
        trace=tuple(SparseSelection(r) for r in rows),
        residuals=tuple(residuals),
    )


def greedy_color_count(inst: MultipartiteInstance) -> int:
    return greedy_coloring(inst).k
