import xml.etree.ElementTree as ET

import pytest

from dyckflip import (
    LatticePath,
    RangeError,
    RenderSpec,
    parse_path,
    phi,
    phi_inverse,
    render_ascii,
    render_svg,
)


def svg_root(doc):
    return ET.fromstring(doc)


def polyline_points(doc):
    root = svg_root(doc)
    ns = "{http://www.w3.org/2000/svg}"
    polyline = root.find(f"{ns}polyline")
    return polyline.get("points").split()


class TestAscii:
    def test_smallest(self):
        assert render_ascii(RenderSpec(path=parse_path("UD"))) == "/\\\n"

    def test_ascending_rows(self):
        assert render_ascii(RenderSpec(path=parse_path("UU"))) == " /\n/\n"

    def test_peaks_marked(self):
        p = parse_path("UDUUDD")
        _, trace = phi(p)
        art = render_ascii(RenderSpec(path=p, trace=trace, show_lines=False))
        rows = art.splitlines()
        marks = {
            (r, c)
            for r, row in enumerate(rows)
            for c, ch in enumerate(row)
            if ch == "B"
        }
        assert {c for _, c in marks} == {1, 4}

    def test_empty(self):
        assert render_ascii(RenderSpec(path=LatticePath(()))) == ""

    def test_below_baseline(self):
        art = render_ascii(RenderSpec(path=parse_path("DU")))
        assert art == "\\/\n"

    def test_axes_gutter(self):
        art = render_ascii(RenderSpec(path=parse_path("UU"), show_axes=True))
        assert art == "  1| /\n  0|/\n"

    def test_oversize_rejected(self):
        with pytest.raises(RangeError):
            render_ascii(RenderSpec(path=LatticePath((1,) * 121)))

    def test_deterministic(self):
        spec = RenderSpec(path=parse_path("UDUUDD"), trace=phi(parse_path("UDUUDD"))[1])
        assert render_ascii(spec) == render_ascii(spec)


class TestSvg:
    def test_smallest_coordinates(self):
        doc = render_svg(RenderSpec(path=parse_path("UD"), cell_size=10))
        assert polyline_points(doc) == ["0,10", "10,0", "20,10"]

    def test_empty_path_is_valid_document(self):
        doc = render_svg(RenderSpec(path=LatticePath(())))
        assert polyline_points(doc) == ["0,0"]

    def test_reflection_line_from_inverse_trace(self):
        p = parse_path("UUDUUU")
        _, trace = phi_inverse(p)
        doc = render_svg(RenderSpec(path=p, trace=trace, cell_size=10))
        root = svg_root(doc)
        ns = "{http://www.w3.org/2000/svg}"
        dashed = [el for el in root.findall(f"{ns}line") if el.get("stroke-dasharray")]
        # first reflection line sits at level 2 = end height / 2
        assert dashed[0].get("y1") == str((4 - 2) * 10)

    @pytest.mark.parametrize("text", ["UD", "UUDD", "UDUUDD", "DUUDDU"])
    def test_wellformed_and_vertex_count(self, text):
        p = parse_path(text)
        _, trace = phi(p)
        doc = render_svg(RenderSpec(path=p, trace=trace, show_axes=True))
        assert len(polyline_points(doc)) == p.length + 1

    def test_vertices_reproduce_height_profile(self):
        p = parse_path("UDDUUD")
        cell = 7
        doc = render_svg(RenderSpec(path=p, cell_size=cell))
        top = max(p.heights)
        for j, pt in enumerate(polyline_points(doc)):
            x, y = map(int, pt.split(","))
            assert x == j * cell
            assert y == (top - p.heights[j]) * cell

    def test_allowed_elements_only(self):
        p = parse_path("UDUUDD")
        _, trace = phi(p)
        doc = render_svg(RenderSpec(path=p, trace=trace, show_axes=True))
        tags = {el.tag.split("}")[1] for el in svg_root(doc).iter()}
        assert tags <= {"svg", "polyline", "line", "circle", "text"}

    def test_deterministic(self):
        spec = RenderSpec(path=parse_path("UDUUDD"), trace=phi(parse_path("UDUUDD"))[1])
        assert render_svg(spec) == render_svg(spec)
