"""File formats: points CSV, profile JSON, and SVG rendering.

All writers are deterministic so identical inputs give byte-identical files.
Rational values travel as "p/q" strings (or bare integers); decimal literals
put a file in float mode, and the two may not mix.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .frame import DiscreteCurve, InvariantProfile, ProfileEntry, Scalar

_INT_RE = re.compile(r"[+-]?\d+\Z")
_RATIONAL_RE = re.compile(r"[+-]?\d+/\d+\Z")
_DECIMAL_RE = re.compile(r"[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?\Z")


class ParseError(ValueError):
    """Malformed points or profile text."""


def _classify_token(token: str) -> str:
    if _INT_RE.match(token):
        return "int"
    if _RATIONAL_RE.match(token):
        return "rational"
    if _DECIMAL_RE.match(token):
        return "decimal"
    raise ParseError(f"cannot parse coordinate {token!r}")


def parse_scalars(tokens: list[str]) -> list[Scalar]:
    """Parse coordinate tokens, deciding exact vs float for the whole batch."""
    kinds = [_classify_token(t) for t in tokens]
    if "rational" in kinds and "decimal" in kinds:
        raise ParseError("rational and decimal literals may not mix")
    if "decimal" in kinds:
        return [float(t) for t in tokens]
    return [Fraction(t) for t in tokens]


def format_scalar(value: Scalar) -> str:
    if isinstance(value, Fraction):
        return str(value)
    return repr(value)


def parse_init(text: str, force_exact: bool = False, force_float: bool = False):
    """Parse "x,y;x,y;x,y" (or the 3-coordinate form) into three points."""
    groups = [g.strip() for g in text.split(";") if g.strip()]
    if len(groups) != 3:
        raise ParseError("init must list exactly 3 points separated by ';'")
    tokens = []
    arity = None
    for g in groups:
        coords = [c.strip() for c in g.split(",")]
        if arity is None:
            arity = len(coords)
        elif len(coords) != arity:
            raise ParseError("init points have inconsistent dimension")
        tokens.extend(coords)
    if arity not in (2, 3):
        raise ParseError("init points must be 2- or 3-dimensional")
    values = parse_scalars(tokens)
    if force_exact:
        values = [Fraction(v) if isinstance(v, float) else v for v in values]
    if force_float:
        values = [float(v) for v in values]
    points = [tuple(values[i * arity : (i + 1) * arity]) for i in range(3)]
    return points


def dumps_points_csv(curve: DiscreteCurve) -> str:
    lines = [f"# dim={curve.dim} closed={'true' if curve.closed else 'false'}"]
    for p in curve.points:
        lines.append(",".join(format_scalar(c) for c in p))
    return "\n".join(lines) + "\n"


def loads_points_csv(text: str) -> DiscreteCurve:
    dim = None
    closed = False
    rows: list[list[str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            for token in line[1:].split():
                if token.startswith("dim="):
                    dim = int(token[4:])
                elif token.startswith("closed="):
                    closed = token[7:] == "true"
            continue
        coords = [c.strip() for c in line.split(",")]
        if rows and len(coords) != len(rows[0]):
            raise ParseError(f"line {lineno}: inconsistent coordinate count")
        rows.append(coords)
    if not rows:
        raise ParseError("no points in file")
    arity = len(rows[0])
    if dim is None:
        dim = arity
    if dim != arity:
        raise ParseError(f"header dim={dim} but rows have {arity} coordinates")
    values = parse_scalars([t for row in rows for t in row])
    points = [tuple(values[i * arity : (i + 1) * arity]) for i in range(len(rows))]
    try:
        return DiscreteCurve(tuple(points), dim=dim, closed=closed)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _value_to_json(value: Scalar | None):
    if value is None:
        return None
    if isinstance(value, Fraction):
        return str(value)
    return value


def _value_from_json(value):
    if value is None:
        return None
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {value!r}") from exc
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    raise ParseError(f"bad numeric value {value!r}")


def dumps_profile_json(profile: InvariantProfile) -> str:
    entries = []
    for e in profile.entries:
        record = {
            "k": e.k,
            "kappa": _value_to_json(e.kappa),
            "kappa_bar": _value_to_json(e.kappa_bar),
        }
        if profile.dim == 3:
            record["tau"] = _value_to_json(e.tau)
        entries.append(record)
    doc = {"dim": profile.dim, "closed": profile.closed, "entries": entries}
    return json.dumps(doc, separators=(",", ":")) + "\n"


def loads_profile_json(text: str) -> InvariantProfile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid profile JSON: {exc}") from exc
    try:
        dim = int(doc["dim"])
        closed = bool(doc["closed"])
        raw_entries = doc["entries"]
    except (KeyError, TypeError) as exc:
        raise ParseError("profile JSON needs dim, closed, entries") from exc
    if dim not in (2, 3):
        raise ParseError(f"profile dim must be 2 or 3, got {dim}")
    entries = []
    for rec in raw_entries:
        try:
            entry = ProfileEntry(
                k=int(rec["k"]),
                kappa=_value_from_json(rec["kappa"]),
                kappa_bar=_value_from_json(rec["kappa_bar"]),
                tau=_value_from_json(rec.get("tau")) if dim == 3 else None,
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad profile entry {rec!r}") from exc
        if entry.kappa is None:
            raise ParseError("kappa may not be null")
        entries.append(entry)
    return InvariantProfile(dim=dim, closed=closed, entries=tuple(entries))


def dumps_points_json(curve: DiscreteCurve) -> str:
    doc = {
        "dim": curve.dim,
        "closed": curve.closed,
        "points": [[_value_to_json(c) for c in p] for p in curve.points],
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


@dataclass(frozen=True)
class SvgStyle:
    stroke: str = "black"
    stroke_width_frac: float = 1 / 512  # fraction of the larger bbox extent
    margin_frac: float = 0.05


def curve_to_svg(curve: DiscreteCurve, style: SvgStyle = SvgStyle()) -> str:
    """Single polyline (polygon when closed) fitted to the bounding box.

    3-dimensional curves are projected onto their first two coordinates.
    The y axis is flipped so the drawing matches mathematical orientation.
    """
    pts = [(float(p[0]), -float(p[1])) for p in curve.points]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    extent = max(max_x - min_x, max_y - min_y, 1e-9)
    pad = style.margin_frac * extent
    view = (min_x - pad, min_y - pad, (max_x - min_x) + 2 * pad, (max_y - min_y) + 2 * pad)
    stroke_width = style.stroke_width_frac * extent
    coords = " ".join(f"{x:.10g},{y:.10g}" for x, y in pts)
    tag = "polygon" if curve.closed else "polyline"
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{view[0]:.10g} {view[1]:.10g} {view[2]:.10g} {view[3]:.10g}">\n'
        f'  <{tag} points="{coords}" fill="none" '
        f'stroke="{style.stroke}" stroke-width="{stroke_width:.10g}"/>\n'
        "</svg>\n"
    )
