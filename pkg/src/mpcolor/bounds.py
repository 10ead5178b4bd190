"""Closed-form bounds and formulas for the t-relaxed chromatic number."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .instance import MultipartiteInstance


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class BoundsReport:
    r: int          # parts with at least 2t vertices
    sigma: int      # vertices in the remaining parts
    lower_2t: int   # r + ceil(sigma / 2t)
    upper_2t: int   # r + ceil(sigma / (t+1))
    upper_delta: int  # ceil((Delta + 1) / (t+1))
    lower_chi: int    # ceil(s / (t+1))

    @property
    def lower(self) -> int:
        return max(self.lower_2t, self.lower_chi)

    @property
    def upper(self) -> int:
        return min(self.upper_2t, self.upper_delta)

    def as_dict(self) -> dict:
        return asdict(self)


def bounds_report(inst: MultipartiteInstance) -> BoundsReport:
    """All closed-form bounds for ``inst``.

    With t = 0 every part counts as large, so both 2t-bounds equal s.
    """
    t = inst.t
    large = [n for n in inst.part_sizes if n >= 2 * t]
    r = len(large)
    sigma = inst.n - sum(large)
    if t == 0:
        lower_2t = upper_2t = r
    else:
        lower_2t = r + ceil_div(sigma, 2 * t)
        upper_2t = r + ceil_div(sigma, t + 1)
    return BoundsReport(
        r=r,
        sigma=sigma,
        lower_2t=lower_2t,
        upper_2t=upper_2t,
        upper_delta=ceil_div(inst.max_degree + 1, t + 1),
        lower_chi=ceil_div(inst.s, t + 1),
    )


def color_class_cap(r_parts: int, t: int) -> int:
    """Largest possible color class that meets exactly ``r_parts`` parts."""
    if r_parts < 2:
        raise ValueError("a class inside a single part has no cap; need r_parts >= 2")
    if t < 0:
        raise ValueError(f"t={t} must be non-negative")
    return t + t // (r_parts - 1)


def counting_lower_bound(inst: MultipartiteInstance) -> int:
    """ceil(n / c) where c bounds every class: a single part, or at most 2t."""
    if inst.t == 0:
        return inst.s
    return ceil_div(inst.n, max(inst.part_sizes[0], 2 * inst.t))


def chi_1_formula(inst: MultipartiteInstance) -> int:
    """chi_1 = s - r + ceil(r/2), r being the number of single-vertex parts.

    The instance's own ``t`` is ignored.
    """
    singles = sum(1 for n in inst.part_sizes if n == 1)
    return inst.s - singles + ceil_div(singles, 2)
