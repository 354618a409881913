"""The partial-reflection map between balanced paths and unbalanced paths.

Forward: decompose the path at its peaks and reflect every down segment
upward about the horizontal line through its peak, leaving the upruns
alone. The result never re-touches the baseline and ends at twice the
input's maximum height. Down-starting inputs are handled by reflecting
about the baseline, mapping, and reflecting back.

Inverse: reflect back down segment by segment, each time locating the
reflection line from the current endpoint and taking the rightmost strict
crossing of that line (touch points do not count).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from . import decompose as _dec
from .errors import (
    NoCrossingError,
    NotBalancedError,
    NotUnbalancedError,
    OddLengthError,
    PreconditionError,
)
from .path import (
    DOWN,
    UP,
    LatticePath,
    PathClass,
    classify,
    concat,
    max_height,
    reflect_all,
)

Point = Tuple[int, int]  # (vertex index, height)


class Direction(Enum):
    FORWARD = "Forward"
    INVERSE = "Inverse"


@dataclass(frozen=True)
class BijectionTrace:
    """Peak points, segment endpoints and reflection lines recorded while
    mapping, in discovery order (global peak / final endpoint first)."""

    b_points: Tuple[Point, ...]
    g_points: Tuple[Point, ...]
    reflection_lines: Tuple[int, ...]
    direction: Direction
    conjugated: bool = False


def _empty_trace(direction: Direction) -> BijectionTrace:
    return BijectionTrace((), (), (), direction)


def _conjugate_trace(t: BijectionTrace) -> BijectionTrace:
    # reflection about the baseline negates every recorded height and line
    return BijectionTrace(
        b_points=tuple((i, -h) for i, h in t.b_points),
        g_points=tuple((i, -h) for i, h in t.g_points),
        reflection_lines=tuple(-lvl for lvl in t.reflection_lines),
        direction=t.direction,
        conjugated=True,
    )


def phi(p: LatticePath) -> Tuple[LatticePath, BijectionTrace]:
    """Map a balanced path to an unbalanced path of the same length."""
    if p.length == 0:
        return p, _empty_trace(Direction.FORWARD)
    if p.end_height != 0:
        raise NotBalancedError("input path must end at height 0")
    if p.steps[0] == DOWN:
        image, trace = phi(reflect_all(p))
        return reflect_all(image), _conjugate_trace(trace)

    d = _dec.decompose(p)
    steps: List[int] = []
    seg_ends = []
    for up_len, seg in d.parts:
        steps.extend([UP] * up_len)
        steps.extend(-s for s in seg.steps.steps)
        seg_ends.append(seg.start_index + seg.steps.length)
    image = LatticePath(tuple(steps))

    ih = image.heights
    b_points = tuple(zip(d.peak_indices, d.peak_heights))[::-1]
    g_points = tuple((j, ih[j]) for j in seg_ends)[::-1]
    trace = BijectionTrace(
        b_points=b_points,
        g_points=g_points,
        reflection_lines=tuple(h for _, h in b_points),
        direction=Direction.FORWARD,
    )
    return image, trace


def phi_inverse(p: LatticePath) -> Tuple[LatticePath, BijectionTrace]:
    """Recover the balanced path whose image is p (unbalanced, even length)."""
    if p.length == 0:
        return p, _empty_trace(Direction.INVERSE)
    if p.length % 2:
        raise OddLengthError("unbalanced image paths have even length")
    cls = classify(p)
    if cls is PathClass.DOWN_UNBALANCED:
        pre, trace = phi_inverse(reflect_all(p))
        return reflect_all(pre), _conjugate_trace(trace)
    if cls is not PathClass.UP_UNBALANCED:
        raise NotUnbalancedError(f"input path is {cls.value}, expected unbalanced")

    steps = list(p.steps)
    h = list(p.heights)
    g = p.length
    level = h[-1] // 2
    b_points: List[Point] = []
    g_points: List[Point] = [(g, h[-1])]
    lines: List[int] = [level]

    while True:
        b = _rightmost_crossing_scan(h, level, g)
        if b is None:
            raise NoCrossingError(f"no crossing of level {level} left of index {g}")
        b_points.append((b, level))
        for j in range(b, g):
            steps[j] = -steps[j]
        for j in range(b + 1, g + 1):
            h[j] = 2 * level - h[j]
        j = b - 1
        while j >= 0 and steps[j] == UP:
            j -= 1
        if j < 0:
            break
        g = j + 1
        level = h[g]
        g_points.append((g, level))
        lines.append(level)

    return (
        LatticePath(tuple(steps)),
        BijectionTrace(tuple(b_points), tuple(g_points), tuple(lines), Direction.INVERSE),
    )


def _rightmost_crossing_scan(h: List[int], level: int, search_end: int) -> int | None:
    for j in range(search_end - 1, 0, -1):
        if h[j] == level and (h[j - 1] - level) * (h[j + 1] - level) < 0:
            return j
    return None


# --- trace-free step-level variants, used by the exhaustive census ---
# These deliberately re-derive the map straight from step lists so the
# census does not pay for path objects; tests pin them to phi/phi_inverse.


def _heights_of(steps: List[int]) -> List[int]:
    h = [0] * (len(steps) + 1)
    acc = 0
    for i, s in enumerate(steps):
        acc += s
        h[i + 1] = acc
    return h


def _forward_steps(steps: List[int]) -> List[int]:
    """phi on a raw balanced step list, without trace capture."""
    if not steps:
        return []
    if steps[0] == DOWN:
        return [-s for s in _forward_steps([-s for s in steps])]
    h = _heights_of(steps)
    out = [-s for s in steps]
    # flip everything, then restore the uprun feeding each peak
    b = max(range(len(h)), key=lambda j: (h[j], -j))
    prev_peaks = [b]
    while True:
        s_idx = b
        while s_idx > 0 and steps[s_idx - 1] == UP:
            s_idx -= 1
        if s_idx == 0:
            break
        m = max(h[: s_idx + 1])
        b = h.index(m)
        prev_peaks.append(b)
    prev_y = 0
    for b in reversed(prev_peaks):
        y = h[b]
        for j in range(b - (y - prev_y), b):
            out[j] = UP
        prev_y = y
    return out


def _inverse_steps(steps: List[int]) -> List[int]:
    """phi_inverse on a raw unbalanced step list, without trace capture."""
    if not steps:
        return []
    if sum(steps) < 0:
        return [-s for s in _inverse_steps([-s for s in steps])]
    out = list(steps)
    h = _heights_of(out)
    g = len(out)
    level = h[-1] // 2
    while True:
        b = _rightmost_crossing_scan(h, level, g)
        if b is None:
            raise NoCrossingError(f"no crossing of level {level} left of index {g}")
        for j in range(b, g):
            out[j] = -out[j]
        for j in range(b + 1, g + 1):
            h[j] = 2 * level - h[j]
        j = b - 1
        while j >= 0 and out[j] == UP:
            j -= 1
        if j < 0:
            return out
        g = j + 1
        level = h[g]


def verify_roundtrip(p: LatticePath) -> bool:
    """True iff mapping there and back reproduces p exactly."""
    cls = classify(p)
    if cls is PathClass.BALANCED:
        return phi_inverse(phi(p)[0])[0] == p
    if cls in (PathClass.UP_UNBALANCED, PathClass.DOWN_UNBALANCED):
        return phi(phi_inverse(p)[0])[0] == p
    raise NotUnbalancedError("path is neither balanced nor unbalanced")


def compose_law_check(t1: LatticePath, t2: LatticePath) -> bool:
    """Check phi(t1 + t2) == phi(t1) + reflect_all(t2).

    Requires t1 nonempty balanced and up-starting, t2 balanced, and t2 no
    higher than t1 (so the global peak of the joined path stays in t1).
    """
    if t1.length == 0:
        raise PreconditionError("t1 must be nonempty")
    if t1.end_height != 0:
        raise PreconditionError("t1 must be balanced")
    if t1.steps[0] == DOWN:
        raise PreconditionError("t1 must start with an upstep")
    if t2.end_height != 0:
        raise PreconditionError("t2 must be balanced")
    if max_height(t2)[0] > max_height(t1)[0]:
        raise PreconditionError("t2 must not be higher than t1")
    lhs = phi(concat(t1, t2))[0]
    rhs = concat(phi(t1)[0], reflect_all(t2))
    return lhs == rhs
