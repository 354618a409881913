"""Peak decomposition of an up-starting balanced path.

Every such path splits uniquely as

    [upsteps, seg_m, upsteps, seg_{m-1}, ..., upsteps, seg_1]

where each intermediate segment is a "down-Dyck" piece (starts with a
downstep, never rises above its start level, returns to it) and the final
segment is "down-unbalanced" (same, but ends strictly below its start level,
at absolute height 0). The peak in front of each segment is the leftmost
highest vertex of the region it closes off.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from .errors import (
    DownStartError,
    EmptyPathError,
    NotBalancedError,
    ValidationError,
)
from .path import DOWN, UP, LatticePath


class SegmentKind(Enum):
    DOWN_DYCK = "DownDyck"
    DOWN_UNBALANCED = "DownUnbalanced"


@dataclass(frozen=True)
class Segment:
    """A down-Dyck or down-unbalanced fragment, located in its parent path."""

    kind: SegmentKind
    steps: LatticePath
    start_index: int


@dataclass(frozen=True)
class Decomposition:
    """Alternating (uprun, segment) parts plus the peak vertices.

    peak_indices/peak_heights run left-to-right along the path, i.e. from
    the lowest peak to the global maximum; the global maximum is last and
    fronts the down-unbalanced segment.
    """

    parts: Tuple[Tuple[int, Segment], ...]
    peak_indices: Tuple[int, ...]
    peak_heights: Tuple[int, ...]


def find_peaks(p: LatticePath) -> List[int]:
    """Peak vertex indices in discovery order (global maximum first).

    The global maximum (leftmost if tied) comes first; each later peak is
    the leftmost highest vertex of the prefix that ends where the previous
    peak's final ascent begins. Discovery stops once no downstep remains to
    the left.
    """
    h = p.heights
    peaks = []
    b = max(range(len(h)), key=lambda j: (h[j], -j))
    while True:
        peaks.append(b)
        s = b
        while s > 0 and p.steps[s - 1] == UP:
            s -= 1
        if s == 0:
            return peaks
        m = max(h[: s + 1])
        b = h.index(m)


def decompose(p: LatticePath) -> Decomposition:
    """Split an up-starting balanced path into upruns and down segments."""
    if p.length == 0:
        raise EmptyPathError("cannot decompose the empty path")
    if p.end_height != 0:
        raise NotBalancedError("path does not end at height 0")
    if p.steps[0] == DOWN:
        raise DownStartError("path starts with a downstep; reflect it first")

    h = p.heights
    asc = find_peaks(p)[::-1]
    parts = []
    prev_y = 0
    for k, b in enumerate(asc):
        y = h[b]
        if k + 1 < len(asc):
            nb = asc[k + 1]
            seg_end = nb - (h[nb] - y)
            kind = SegmentKind.DOWN_DYCK
        else:
            seg_end = p.length
            kind = SegmentKind.DOWN_UNBALANCED
        seg = Segment(kind, LatticePath(p.steps[b:seg_end]), b)
        parts.append((y - prev_y, seg))
        prev_y = y
    return Decomposition(
        parts=tuple(parts),
        peak_indices=tuple(asc),
        peak_heights=tuple(h[b] for b in asc),
    )


def validate(d: Decomposition) -> List[str]:
    """All invariant violations of a decomposition; empty when it is valid."""
    violations = []
    if not d.parts:
        return ["decomposition has no parts"]
    if len(d.parts) != len(d.peak_indices) or len(d.parts) != len(d.peak_heights):
        violations.append("parts and peak lists have different lengths")
        return violations

    pos = 0
    level = 0
    for k, (up_len, seg) in enumerate(d.parts):
        last = k == len(d.parts) - 1
        if up_len < 1:
            violations.append(f"part {k}: uprun length {up_len} < 1")
        expected_kind = SegmentKind.DOWN_UNBALANCED if last else SegmentKind.DOWN_DYCK
        if seg.kind is not expected_kind:
            violations.append(f"part {k}: segment kind {seg.kind.value}, expected {expected_kind.value}")
        pos += up_len
        level += up_len
        if d.peak_indices[k] != pos:
            violations.append(f"part {k}: peak index {d.peak_indices[k]}, uprun ends at {pos}")
        if d.peak_heights[k] != level:
            violations.append(f"part {k}: peak height {d.peak_heights[k]}, uprun reaches {level}")
        if seg.start_index != pos:
            violations.append(f"part {k}: segment start {seg.start_index}, expected {pos}")
        rel = seg.steps.heights
        if seg.steps.length == 0:
            violations.append(f"part {k}: empty segment")
        elif seg.steps.steps[0] != DOWN:
            violations.append(f"part {k}: segment does not start with a downstep")
        if any(x > 0 for x in rel):
            violations.append(f"part {k}: segment rises above its start level")
        if seg.kind is SegmentKind.DOWN_DYCK and rel[-1] != 0:
            violations.append(f"part {k}: down-Dyck segment ends at relative height {rel[-1]}, not 0")
        if seg.kind is SegmentKind.DOWN_UNBALANCED and rel[-1] >= 0:
            violations.append(f"part {k}: down-unbalanced segment ends at relative height {rel[-1]}, not < 0")
        pos += seg.steps.length
        level += rel[-1]

    heights = list(d.peak_heights)
    if any(a >= b for a, b in zip(heights, heights[1:])):
        violations.append("peak heights do not strictly increase along the path")
    if level != 0:
        violations.append(f"recomposed path ends at height {level}, not 0")
    return violations


def recompose(d: Decomposition) -> LatticePath:
    """Rebuild the parent path from a decomposition, checking invariants."""
    violations = validate(d)
    if violations:
        raise ValidationError(violations[0])
    steps = []
    for up_len, seg in d.parts:
        steps.extend([UP] * up_len)
        steps.extend(seg.steps.steps)
    return LatticePath(tuple(steps))
