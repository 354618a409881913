#!/usr/bin/env python3
"""Emit figure-style SVGs for a path, its image, and the inverse trace.

Writes three files into ./figures/: the input path with its peaks, the
mapped path with reflection lines, and the inverse with the crossing
points it used.
"""

from pathlib import Path

from dyckflip import RenderSpec, parse_path, phi, phi_inverse, render_svg

out_dir = Path("figures")
out_dir.mkdir(exist_ok=True)

p = parse_path("UDUUDDUUUDDD")
image, forward = phi(p)
_, inverse = phi_inverse(image)

for name, spec in {
    "input_with_peaks.svg": RenderSpec(path=p, trace=forward, show_lines=False, show_axes=True),
    "image_with_lines.svg": RenderSpec(path=image, trace=forward, show_axes=True),
    "inverse_crossings.svg": RenderSpec(path=image, trace=inverse, show_axes=True),
}.items():
    target = out_dir / name
    target.write_text(render_svg(spec))
    print("wrote", target)
