"""Points CSV, profile JSON, and SVG writers/parsers."""

from fractions import Fraction as F

import pytest

from afframe import DiscreteCurve, generate_koch, planar_curvatures, space_invariants
from afframe.formats import (
    ParseError,
    SvgStyle,
    curve_to_svg,
    dumps_points_csv,
    dumps_profile_json,
    loads_points_csv,
    loads_profile_json,
    parse_init,
)


def test_csv_round_trip_rational():
    curve = DiscreteCurve([(0, 0), (F(1, 2), 3), (-2, F(7, 3)), (1, 1)])
    text = dumps_points_csv(curve)
    assert text.splitlines()[0] == "# dim=2 closed=false"
    assert loads_points_csv(text) == curve
    assert dumps_points_csv(loads_points_csv(text)) == text


def test_csv_round_trip_float_and_closed():
    curve = DiscreteCurve([(0.0, 0.25), (1.5, 0.8660254037844386), (2.0, -1.0)], closed=True)
    text = dumps_points_csv(curve)
    assert "closed=true" in text
    again = loads_points_csv(text)
    assert again.closed and again.points == curve.points


def test_csv_without_header_infers_dim():
    curve = loads_points_csv("0,0,1\n1,0,1\n1,1,1\n2,1,1\n")
    assert curve.dim == 3 and not curve.closed and curve.exact


def test_csv_rejects_mixing_and_junk():
    with pytest.raises(ParseError):
        loads_points_csv("1/2,0\n0.5,1\n")
    with pytest.raises(ParseError):
        loads_points_csv("a,b\n")
    with pytest.raises(ParseError):
        loads_points_csv("1,2\n1,2,3\n")
    with pytest.raises(ParseError):
        loads_points_csv("")


def test_parse_init():
    pts = parse_init("0,0;1,0;1.5,0.8660254")
    assert pts[2] == (1.5, 0.8660254)
    pts = parse_init("0,0;1,0;1/2,3")
    assert pts[2] == (F(1, 2), F(3))
    with pytest.raises(ParseError):
        parse_init("0,0;1,0")
    with pytest.raises(ParseError):
        parse_init("0,0;1,0;1/2,0.5")
    forced = parse_init("0,0;1,0;1.5,2", force_exact=True)
    assert forced[2] == (F(3, 2), F(2))


def test_profile_json_round_trip_rational():
    prof = planar_curvatures(generate_koch([(0, 0), (1, 0), (1, 1)], 3))
    text = dumps_profile_json(prof)
    assert loads_profile_json(text) == prof
    assert dumps_profile_json(loads_profile_json(text)) == text


def test_profile_json_round_trip_with_tau_and_null():
    space = space_invariants(DiscreteCurve([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]))
    assert loads_profile_json(dumps_profile_json(space)) == space
    flat = planar_curvatures(DiscreteCurve([(0, 0), (1, 0), (2, 0), (3, 0)]))
    text = dumps_profile_json(flat)
    assert '"kappa_bar":null' in text
    assert loads_profile_json(text) == flat


def test_profile_json_rejects_malformed():
    with pytest.raises(ParseError):
        loads_profile_json("not json")
    with pytest.raises(ParseError):
        loads_profile_json('{"dim":2,"closed":false}')
    with pytest.raises(ParseError):
        loads_profile_json('{"dim":4,"closed":false,"entries":[]}')
    with pytest.raises(ParseError):
        loads_profile_json('{"dim":2,"closed":false,"entries":[{"k":2,"kappa":null,"kappa_bar":"1"}]}')


def test_svg_vertex_count_and_determinism():
    curve = generate_koch([(0.0, 0.0), (1.0, 0.0), (1.5, 0.8660254)], 3)
    svg = curve_to_svg(curve)
    assert svg == curve_to_svg(curve)
    coords = svg.split('points="')[1].split('"')[0]
    assert len(coords.split()) == len(curve)
    assert "<polyline" in svg and "viewBox" in svg


def test_svg_closed_curve_is_polygon():
    square = DiscreteCurve([(0, 0), (1, 0), (1, 1), (0, 1)], closed=True)
    svg = curve_to_svg(square, SvgStyle(stroke="crimson"))
    assert "<polygon" in svg and 'stroke="crimson"' in svg
