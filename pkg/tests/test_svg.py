import re
import subprocess
import sys
from fractions import Fraction as F

import pytest
from shapely.geometry import Polygon
from shapely.ops import unary_union

from kkmsperner.fixtures import FIG1_IDS
from kkmsperner.kkm import build_cover
from kkmsperner.subdivision import edgewise_subdivision, trivial_subdivision
from kkmsperner.svg import UnsupportedDimensionError, piece_regions, render_svg


def regions_union(sub, labels, label):
    cover = build_cover(sub, labels)
    polys = [Polygon([(float(p[1]) + float(p[2]) / 2, float(p[2])) for p in corners])
             for _, _, corners in piece_regions(cover, sub, label)]
    return unary_union(polys)


def components(geom):
    return len(geom.geoms) if hasattr(geom, "geoms") else 1


def test_left_panel(fig1_instance):
    svg = render_svg(*fig1_instance)
    assert svg.count('class="cell"') + svg.count('class="cell complete"') == 7
    assert svg.count('class="cell complete"') == 1
    assert svg.count("<text") == 8


def test_overlay_c1_has_two_components(fig1_instance):
    sub, labels = fig1_instance
    assert components(regions_union(sub, labels, 1)) == 2
    svg = render_svg(sub, labels, overlay=1)
    assert svg.count('class="piece"') == 7  # e1 and d share a cell; 1 + 3 + 3 regions


def test_overlay_structure_c2_c3(fig1_instance):
    sub, labels = fig1_instance
    assert components(regions_union(sub, labels, 2)) == 1
    assert components(regions_union(sub, labels, 3)) == 1
    # C_3 is the quadrilateral around e3 with exact corners at weight 1/3
    corners = {tuple(c) for _, _, cs in piece_regions(build_cover(sub, labels), sub, 3) for c in cs}
    e3, d, e, c = (sub.vertices[FIG1_IDS[k]] for k in ("e3", "d", "e", "c"))
    for q in (d, e, c):
        assert tuple(F(1, 3) * a + F(2, 3) * b for a, b in zip(e3, q)) in corners


def test_region_corner_weights(fig1_instance):
    sub, labels = fig1_instance
    cover = build_cover(sub, labels)
    from kkmsperner.geometry import solve_barycentric
    for cell, vertex, corners in piece_regions(cover, sub, 1):
        k = cell.index(vertex)
        ws = [solve_barycentric(sub.points(cell), p)[k] for p in corners]
        assert ws[0] == 1 and all(w == F(1, 3) for w in ws[1:])


def test_trivial_fully_shaded():
    svg = render_svg(trivial_subdivision(3), (1, 2, 3))
    assert svg.count('class="cell complete"') == 1
    # corners land on (0,0), (W,0), (W/2, W*sqrt(3)/2), flipped and shifted by the margin
    assert 'points="24.000000,370.410162 424.000000,370.410162 224.000000,24.000000"' in svg


def test_rejects_other_dimensions():
    with pytest.raises(UnsupportedDimensionError):
        render_svg(edgewise_subdivision(4, 1))


def test_fixed_precision(fig1_instance):
    svg = render_svg(*fig1_instance, overlay=2)
    coords = re.findall(r'(?<![\w-])(?:points|cx|cy|x|y)="([^"]*)"', svg)
    numbers = [v for c in coords for v in re.split(r"[ ,]", c)]
    assert numbers and all(re.fullmatch(r"-?\d+\.\d{6}", x) for x in numbers)


def test_byte_identical_across_processes(fig1_instance):
    code = ("import sys; from kkmsperner.fixtures import fig1; from kkmsperner.svg import render_svg;"
            "sys.stdout.write(render_svg(*fig1(), overlay=1))")
    outs = {subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                           env={"PYTHONHASHSEED": str(seed), "PATH": ""}, check=True).stdout
            for seed in (0, 1, 2)}
    assert outs == {render_svg(*fig1_instance, overlay=1)}
