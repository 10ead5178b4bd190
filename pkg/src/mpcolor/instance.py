"""Complete multi-partite instances, count-matrix colorings and validity checks.

A complete multi-partite graph K(n_1, ..., n_s) is fully described by its
part sizes, and vertices inside one part are interchangeable.  Colorings are
therefore stored as count matrices ``counts[r][h]`` = number of vertices of
part ``h`` that receive color ``r``.  Column ``h`` always refers to the
instance's canonical (non-increasing) part order; ``MultipartiteInstance.order``
maps it back to the order the parts were given in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class InstanceError(ValueError):
    """Raised for malformed instance data."""


class ColoringShapeError(ValueError):
    """Raised when a count matrix does not structurally fit an instance."""


@dataclass(frozen=True)
class MultipartiteInstance:
    part_sizes: tuple[int, ...]
    t: int
    # order[h] is the original position of canonical part h
    order: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.order:
            object.__setattr__(self, "order", tuple(range(len(self.part_sizes))))
        _check_sizes(self.part_sizes, self.t)
        if any(a < b for a, b in zip(self.part_sizes, self.part_sizes[1:])):
            raise InstanceError("part_sizes must be non-increasing; use make_instance")
        if sorted(self.order) != list(range(len(self.part_sizes))):
            raise InstanceError("order must be a permutation of part indices")

    @property
    def s(self) -> int:
        return len(self.part_sizes)

    @property
    def n(self) -> int:
        return sum(self.part_sizes)

    @property
    def max_degree(self) -> int:
        """Delta(G) = n - n_s: a vertex of the smallest part sees everything else."""
        return self.n - self.part_sizes[-1]

    @property
    def chromatic_number(self) -> int:
        return self.s

    clique_number = chromatic_number

    @property
    def original_sizes(self) -> tuple[int, ...]:
        out = [0] * self.s
        for h, j in enumerate(self.order):
            out[j] = self.part_sizes[h]
        return tuple(out)

    def with_t(self, t: int) -> "MultipartiteInstance":
        return MultipartiteInstance(self.part_sizes, t, self.order)

    def to_original_columns(self, row: Sequence[int]) -> list[int]:
        """Permute a per-part vector from canonical to original part order."""
        out = [0] * self.s
        for h, j in enumerate(self.order):
            out[j] = row[h]
        return out

    def from_original_columns(self, row: Sequence[int]) -> list[int]:
        return [row[j] for j in self.order]


def _check_sizes(sizes: Sequence[int], t: int) -> None:
    if len(sizes) == 0:
        raise InstanceError("an instance needs at least one part")
    for x in sizes:
        if isinstance(x, bool) or not isinstance(x, int):
            raise InstanceError(f"part size {x!r} is not an integer")
        if x < 1:
            raise InstanceError(f"part size {x} must be >= 1")
    if isinstance(t, bool) or not isinstance(t, int):
        raise InstanceError(f"t={t!r} is not an integer")
    if t < 0:
        raise InstanceError(f"t={t} must be non-negative")


def make_instance(sizes: Iterable[int], t: int) -> MultipartiteInstance:
    """Build an instance from part sizes in any order.

    Parts are sorted non-increasing (stable, so equal parts keep their
    relative order) and the permutation is kept for label expansion.

    >>> make_instance([3, 8, 13, 3, 3, 3], 7).part_sizes
    (13, 8, 3, 3, 3, 3)
    """
    sizes = list(sizes)
    _check_sizes(sizes, t)
    order = sorted(range(len(sizes)), key=lambda j: -sizes[j])
    return MultipartiteInstance(tuple(sizes[j] for j in order), t, tuple(order))


@dataclass(frozen=True)
class CountColoring:
    counts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.counts)
        object.__setattr__(self, "counts", rows)
        if not rows:
            raise ColoringShapeError("a coloring needs at least one color")
        width = len(rows[0])
        for r, row in enumerate(rows):
            if len(row) != width:
                raise ColoringShapeError(f"row {r} has {len(row)} entries, expected {width}")
            if any(isinstance(x, bool) or not isinstance(x, int) or x < 0 for x in row):
                raise ColoringShapeError(f"row {r} must hold non-negative integers: {row}")
            if not any(row):
                raise ColoringShapeError(f"color {r} is unused (all-zero row)")

    @property
    def k(self) -> int:
        return len(self.counts)

    @property
    def class_sizes(self) -> list[int]:
        return [sum(row) for row in self.counts]

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.counts]


@dataclass(frozen=True)
class SparseSelection:
    """Per-part pick counts of a t-sparse vertex set."""

    picks: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(self.picks)

    def check(self, inst: MultipartiteInstance) -> None:
        """Raise ``AssertionError`` unless the selection is a t-sparse set of ``inst``."""
        assert len(self.picks) == inst.s, (self.picks, inst.part_sizes)
        total = self.size
        for x, n in zip(self.picks, inst.part_sizes):
            assert 0 <= x <= n, (self.picks, inst.part_sizes)
            assert x == 0 or total - x <= inst.t, (self.picks, inst.t)


def is_t_sparse(picks: Sequence[int], t: int) -> bool:
    total = sum(picks)
    return all(total - x <= t for x in picks if x > 0)


@dataclass(frozen=True)
class Violation:
    color: int
    part: int
    excess: int  # same-colored neighbours beyond t for vertices of this part


@dataclass(frozen=True)
class Verdict:
    violations: tuple[Violation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid


def check_shape(inst: MultipartiteInstance, col: CountColoring) -> None:
    if any(len(row) != inst.s for row in col.counts):
        raise ColoringShapeError(
            f"coloring has {len(col.counts[0])} columns, instance has {inst.s} parts"
        )
    for h, n in enumerate(inst.part_sizes):
        got = sum(row[h] for row in col.counts)
        if got != n:
            raise ColoringShapeError(f"part {h} has {n} vertices but {got} are colored")


def verify_coloring(inst: MultipartiteInstance, col: CountColoring) -> Verdict:
    """Check that every color class is t-sparse.

    A vertex of part h with color r has (T_r - m_{r,h}) neighbours of the
    same color, T_r being the size of class r.  Structural problems raise
    ``ColoringShapeError``; t-violations are reported in the verdict.
    """
    check_shape(inst, col)
    bad = []
    for r, row in enumerate(col.counts):
        total = sum(row)
        for h, m in enumerate(row):
            if m > 0 and total - m > inst.t:
                bad.append(Violation(r, h, total - m - inst.t))
    return Verdict(tuple(bad))


def expand_labels(inst: MultipartiteInstance, col: CountColoring) -> list[list[int]]:
    """Per-vertex colors (1-based), one list per part in original order.

    Inside a part, vertices take colors in ascending color index, in
    consecutive blocks of size m_{r,h}.
    """
    check_shape(inst, col)
    by_canonical = []
    for h in range(inst.s):
        labels = []
        for r, row in enumerate(col.counts):
            labels.extend([r + 1] * row[h])
        by_canonical.append(labels)
    return inst.to_original_columns(by_canonical)


def collapse_labels(inst: MultipartiteInstance, labels: Sequence[Sequence[int]]) -> CountColoring:
    """Inverse of ``expand_labels``: aggregate per-vertex colors into counts."""
    if len(labels) != inst.s:
        raise ColoringShapeError(f"expected {inst.s} parts, got {len(labels)}")
    k = max((c for part in labels for c in part), default=0)
    rows = [[0] * inst.s for _ in range(k)]
    for h, j in enumerate(inst.order):
        for c in labels[j]:
            if c < 1:
                raise ColoringShapeError(f"color labels are 1-based, got {c}")
            rows[c - 1][h] += 1
    return CountColoring(tuple(tuple(r) for r in rows))


def coloring_from_original(inst: MultipartiteInstance, rows: Sequence[Sequence[int]]) -> CountColoring:
    """Build a coloring whose columns follow the original part order."""
    for row in rows:
        if len(row) != inst.s:
            raise ColoringShapeError(f"row {list(row)} does not have {inst.s} entries")
    return CountColoring(tuple(tuple(inst.from_original_columns(row)) for row in rows))
