"""Infimum (min-plus) convolution of gap functions and step functions.

(I_1 <> ... <> I_n)(k) is the minimum of I_1(k_1) + ... + I_n(k_n) over integer
splits k_1 + ... + k_n = k.  Every function here is nonincreasing, has slope -1
below 0, and vanishes beyond a finite cutoff, so the minimum is attained inside
a finite window: pushing any argument above its cutoff or below the window's
lower end can only raise the sum.  Brute force within the window is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .gapset import GapFunction, GapSet, gap_function_eval

__all__ = ["StepFunction", "inf_conv_eval", "inf_conv_pair", "inf_conv_n"]


@dataclass(frozen=True)
class StepFunction:
    """Nonincreasing integer function tabulated on [0, K_max], zero beyond.

    Closed-form tails: genus - k for k <= 0 and 0 for k >= K_max.  The table is
    normalized to the smallest cutoff, so values ends with exactly one zero
    (a lone zero for the zero function).  Steps down may exceed 1 in general;
    convolutions of gap functions are always 1-Lipschitz.
    """

    genus: int
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        if not values:
            raise ValueError("values must be nonempty")
        for v in values:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"values must be nonnegative integers, got {v!r}")
        if values[0] != self.genus:
            raise ValueError(f"values[0] = {values[0]} must equal genus {self.genus}")
        if values[-1] != 0:
            raise ValueError("values must end at 0")
        for i in range(len(values) - 1):
            if values[i] < values[i + 1]:
                raise ValueError(f"values must be nonincreasing, rise at index {i}")
        while len(values) >= 2 and values[-2] == 0:
            values = values[:-1]
        object.__setattr__(self, "values", values)

    @property
    def cutoff(self) -> int:
        """K_max, the smallest k >= 0 from which the function is identically zero."""
        return len(self.values) - 1

    def __call__(self, k: int) -> int:
        if k <= 0:
            return self.genus - k
        if k >= len(self.values):
            return 0
        return self.values[k]

    @classmethod
    def from_gap_set(cls, gap_set: GapSet) -> "StepFunction":
        return cls(gap_set.genus, GapFunction(gap_set).table())

    def to_json_dict(self) -> dict:
        return {"genus": self.genus, "values": list(self.values)}


ConvInput = Union[GapSet, GapFunction, StepFunction]


def _as_step(x: ConvInput) -> StepFunction:
    if isinstance(x, StepFunction):
        return x
    if isinstance(x, GapFunction):
        return StepFunction(x.genus, x.table())
    if isinstance(x, GapSet):
        return StepFunction.from_gap_set(x)
    raise TypeError(f"expected GapSet, GapFunction, or StepFunction, got {type(x).__name__}")


def _as_gap_set(x: ConvInput) -> GapSet:
    if isinstance(x, GapFunction):
        return x.gap_set
    if isinstance(x, GapSet):
        return x
    raise TypeError(f"expected GapSet or GapFunction, got {type(x).__name__}")


def _is_unit_step(values: Sequence[int]) -> bool:
    return all(values[i] - values[i + 1] <= 1 for i in range(len(values) - 1))


def _pair_table_unit(va: Sequence[int], vb: Sequence[int]) -> list:
    """Min-plus table of two 1-Lipschitz step tables on [0, Ka + Kb].

    With both inputs 1-Lipschitz, moving an argument below 0 (or above k) trades
    a guaranteed +1 against a drop of at most 1, so splits stay in [0, k].
    """
    ka = len(va) - 1
    kb = len(vb) - 1
    out = []
    for k in range(ka + kb + 1):
        lo = k - kb if k > kb else 0
        hi = ka if ka < k else k
        best = va[lo] + vb[k - lo]
        for x in range(lo + 1, hi + 1):
            v = va[x] + vb[k - x]
            if v < best:
                best = v
        out.append(best)
    return out


def _pair_table_general(va: Sequence[int], vb: Sequence[int], ga: int, gb: int) -> list:
    """Min-plus table for arbitrary step tables, allowing negative arguments.

    A step larger than 1 can make a negative argument (slope -1 tail on one
    side, big drop on the other) beat every split in [0, k], so x scans the
    full window [k - Kb, Ka]; outside it one side is pinned at 0 while the
    other can only grow.
    """
    ka = len(va) - 1
    kb = len(vb) - 1
    out = []
    for k in range(ka + kb + 1):
        best = None
        for x in range(k - kb, ka + 1):
            y = k - x
            v = (va[x] if x >= 0 else ga - x) + (vb[y] if y >= 0 else gb - y)
            if best is None or v < best:
                best = v
        out.append(best)
    return out


def inf_conv_pair(a: ConvInput, b: ConvInput) -> StepFunction:
    """Pairwise infimum convolution, tabulated on [0, Ka + Kb]."""
    sa = _as_step(a)
    sb = _as_step(b)
    if _is_unit_step(sa.values) and _is_unit_step(sb.values):
        table = _pair_table_unit(sa.values, sb.values)
    else:
        table = _pair_table_general(sa.values, sb.values, sa.genus, sb.genus)
    return StepFunction(table[0], tuple(table))


def inf_conv_n(gap_sets: Sequence[ConvInput]) -> StepFunction:
    """Left fold of inf_conv_pair over the inputs; order does not matter."""
    if not gap_sets:
        raise ValueError("at least one input required")
    acc = _as_step(gap_sets[0])
    for x in gap_sets[1:]:
        acc = inf_conv_pair(acc, x)
    return acc


def inf_conv_eval(gap_sets: Sequence[ConvInput], k: int) -> int:
    """Direct n-ary minimization, the independent oracle for the pairwise fold.

    Each chosen argument scans [remaining - (cutoff sum of the rest), cutoff_i];
    the last argument takes the remainder and is evaluated in closed form.  For
    k at or beyond the cutoff sum every term can sit at 0.
    """
    sets = [_as_gap_set(x) for x in gap_sets]
    if not sets:
        raise ValueError("at least one input required")
    n = len(sets)
    cutoffs = [gs.max_gap + 1 for gs in sets]
    if k >= sum(cutoffs):
        return 0
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + cutoffs[i]

    def best_from(i: int, remaining: int) -> int:
        if i == n - 1:
            return gap_function_eval(sets[i], remaining)
        best = None
        for x in range(remaining - suffix[i + 1], cutoffs[i] + 1):
            v = gap_function_eval(sets[i], x) + best_from(i + 1, remaining - x)
            if best is None or v < best:
                best = v
        return best

    return best_from(0, k)
