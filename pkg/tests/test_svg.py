import xml.etree.ElementTree as ET

from inscribed_orbits.geometry import build_polygon, solve_periodic_orbit
from inscribed_orbits.oracle import list_canonical_orbits
from inscribed_orbits.svg import PALETTE, SvgOptions, emit_gallery_svg, emit_svg

NS = {"svg": "http://www.w3.org/2000/svg"}


def orbits(k, n):
    g = build_polygon(k)
    return g, [solve_periodic_orbit(g, w) for w in list_canonical_orbits(k, n)]


def test_triangle_three_periodics():
    g, obs = orbits(1, 3)
    root = ET.fromstring(emit_svg(g, obs))
    assert root.get("viewBox")
    paths = root.findall("svg:path", NS)
    assert [p.get("class") for p in paths] == ["polygon", "orbit", "orbit"]
    assert [p.get("stroke") for p in paths[1:]] == list(PALETTE[:2])
    assert [t.text for t in root.findall("svg:text", NS)] == ["1", "2", "3"]


def test_empty_orbit_list_is_outline_only():
    root = ET.fromstring(emit_svg(build_polygon(2), []))
    assert [p.get("class") for p in root.findall("svg:path", NS)] == ["polygon"]


def test_labels_optional_and_viewbox_margin():
    g = build_polygon(2)
    root = ET.fromstring(emit_svg(g, [], SvgOptions(labels=False)))
    assert not root.findall("svg:text", NS)
    x0, y0, w, h = map(float, root.get("viewBox").split())
    xs, ys = g.vertices[:, 0], -g.vertices[:, 1]
    span_x, span_y = xs.max() - xs.min(), ys.max() - ys.min()
    assert abs(w - 1.1 * span_x) < 1e-5 and abs(h - 1.1 * span_y) < 1e-5
    assert abs(x0 - (xs.min() - 0.05 * span_x)) < 1e-5


def test_deterministic_output():
    g, obs = orbits(2, 4)
    assert emit_svg(g, obs) == emit_svg(g, obs)
    assert emit_gallery_svg(g, obs) == emit_gallery_svg(g, obs)


def test_gallery_panels():
    g, obs = orbits(1, 5)
    root = ET.fromstring(emit_gallery_svg(g, obs))
    groups = root.findall("svg:g", NS)
    assert len(groups) == 6
    assert all(len(grp.findall("svg:path[@class='orbit']", NS)) == 1 for grp in groups)
