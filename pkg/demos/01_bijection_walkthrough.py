#!/usr/bin/env python3
"""Walk through the partial-reflection map on one path, step by step.

We take the balanced path UDUUDD, decompose it at its peaks, apply the
map, then run the inverse and watch it rediscover the peaks from the
rightmost crossings.
"""

from dyckflip import (
    decompose,
    format_path,
    parse_path,
    phi,
    phi_inverse,
    RenderSpec,
    render_ascii,
)

p = parse_path("UDUUDD")
print("input:", format_path(p))
print(render_ascii(RenderSpec(path=p)))

d = decompose(p)
print("peak decomposition (upruns alternating with down segments):")
for up_len, seg in d.parts:
    print(f"  {up_len} upstep(s), then {seg.kind.value} segment {format_path(seg.steps)}")
print("peaks (index, height):", list(zip(d.peak_indices, d.peak_heights)))
print()

image, trace = phi(p)
print("image:", format_path(image))
print("reflection lines used:", list(trace.reflection_lines))
print("segment endpoints in the image:", list(trace.g_points))
print(render_ascii(RenderSpec(path=image, trace=trace)))

# The image never re-touches the baseline and ends at twice the input's
# maximum height; the inverse recovers the input exactly.
back, itrace = phi_inverse(image)
print("inverse recovers:", format_path(back))
print("crossings found (index, level):", list(itrace.b_points))
assert back == p
