"""Discrete moving-frame invariants of polygonal curves in dimension 2 and 3.

Curvatures and torsions are ratios of edge/position determinants, so curves
carry their arithmetic mode in their coordinates: ``fractions.Fraction``
everywhere means exact results, ``float`` everywhere means binary64 with a
scaled zero tolerance for the degeneracy tests.  The two modes never mix
inside one curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[Fraction, float]
Vec = tuple[Scalar, ...]

DEFAULT_ZERO_TOL = 1e-12


class AdmissibilityError(ValueError):
    """A position-vector determinant vanished where the frame needs it."""

    def __init__(self, index: int):
        super().__init__(f"curve is not centroaffine admissible at k={index}")
        self.index = index


class DegenerateInputError(ValueError):
    """Collinear or coincident initial data."""


def as_scalar(value) -> Scalar:
    """Coerce to the curve arithmetic: int/Fraction stay exact, float stays float."""
    if isinstance(value, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError("float coordinates must be finite")
        return value
    raise TypeError(f"unsupported scalar type {type(value).__name__}")


def _coerce_vec(point, dim: int | None = None) -> Vec:
    vec = tuple(as_scalar(c) for c in point)
    if dim is not None and len(vec) != dim:
        raise ValueError(f"expected a {dim}-dimensional point, got {len(vec)} coordinates")
    return vec


@dataclass(frozen=True)
class DiscreteCurve:
    """Ordered vertex list of a polygonal curve, open or closed."""

    points: tuple[Vec, ...]
    dim: int | None = None
    closed: bool = False

    def __post_init__(self):
        pts = tuple(_coerce_vec(p) for p in self.points)
        if not pts:
            raise ValueError("a discrete curve needs at least one point")
        dim = self.dim if self.dim is not None else len(pts[0])
        if dim not in (2, 3):
            raise ValueError(f"dimension must be 2 or 3, got {dim}")
        if any(len(p) != dim for p in pts):
            raise ValueError("all points must share the curve dimension")
        modes = {isinstance(c, Fraction) for p in pts for c in p}
        if len(modes) > 1:
            raise ValueError("rational and float coordinates may not mix in one curve")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "dim", dim)

    @property
    def exact(self) -> bool:
        return isinstance(self.points[0][0], Fraction)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class ProfileEntry:
    """Invariants at vertex k (1-based): kappa, kappa_bar, and tau in dim 3.

    ``kappa_bar is None`` marks the locally-straight case where only
    kappa = 0 is defined.
    """

    k: int
    kappa: Scalar
    kappa_bar: Scalar | None
    tau: Scalar | None = None


@dataclass(frozen=True)
class InvariantProfile:
    dim: int
    closed: bool
    entries: tuple[ProfileEntry, ...]

    def kappas(self) -> list[Scalar]:
        return [e.kappa for e in self.entries]

    @property
    def exact(self) -> bool:
        return all(
            isinstance(v, Fraction)
            for e in self.entries
            for v in (e.kappa, e.kappa_bar, e.tau)
            if v is not None
        )

    def __len__(self) -> int:
        return len(self.entries)


def _sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def det2(u: Vec, v: Vec) -> Scalar:
    return u[0] * v[1] - u[1] * v[0]


def _det2_scale(u, v):
    # |det| is at most this up to a small constant; the zero test is relative to it
    return max(abs(u[0]), abs(u[1])) * max(abs(v[0]), abs(v[1]))


def det3(a: Vec, b: Vec, c: Vec) -> Scalar:
    """Determinant of the 3x3 matrix with columns a, b, c."""
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - b[0] * (a[1] * c[2] - a[2] * c[1])
        + c[0] * (a[1] * b[2] - a[2] * b[1])
    )


def _det3_scale(a, b, c):
    return (
        max(abs(v) for v in a) * max(abs(v) for v in b) * max(abs(v) for v in c)
    )


def _is_zero(value, scale, exact: bool, tol: float) -> bool:
    if exact or value == 0:
        return value == 0
    return abs(value) <= tol * scale


def require_noncollinear(p1, p2, p3, zero_tol: float = DEFAULT_ZERO_TOL) -> None:
    """Raise DegenerateInputError unless the three points span the plane they sit in."""
    a = _coerce_vec(p1)
    b = _coerce_vec(p2, len(a))
    c = _coerce_vec(p3, len(a))
    u, v = _sub(b, a), _sub(c, b)
    if len(a) == 2:
        d, scale = det2(u, v), _det2_scale(u, v)
    else:
        # cross-product components; collinear iff all vanish
        comps = [
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        ]
        d = max(abs(x) for x in comps)
        scale = max(abs(x) for x in u) * max(abs(x) for x in v)
    exact = isinstance(d, Fraction)
    if _is_zero(d, scale, exact, zero_tol):
        raise DegenerateInputError("initial points are collinear")


def edge_tangents(curve: DiscreteCurve) -> list[Vec]:
    """Consecutive point differences; closed curves wrap around (mod p)."""
    pts = curve.points
    if len(pts) < 2:
        raise ValueError("edge tangents need at least 2 points")
    n = len(pts)
    if curve.closed:
        return [_sub(pts[(i + 1) % n], pts[i]) for i in range(n)]
    return [_sub(pts[i + 1], pts[i]) for i in range(n - 1)]


def _vertex_range(curve: DiscreteCurve) -> range:
    # 1-based vertex indices carrying invariants: every vertex when closed,
    # 2..M-2 when open.
    if curve.closed:
        return range(1, len(curve) + 1)
    return range(2, len(curve) - 1)


def planar_curvatures(curve: DiscreteCurve, zero_tol: float = DEFAULT_ZERO_TOL) -> InvariantProfile:
    """First and second curvatures of a planar curve.

    At vertex k they are det[t_k, t_{k+1}]/det[t_{k-1}, t_k] and
    det[t_{k-1}, t_{k+1}]/det[t_{k-1}, t_k].  Where the denominator vanishes
    the curve is locally straight: kappa = 0 and kappa_bar is undefined.
    """
    if curve.dim != 2:
        raise ValueError("planar_curvatures needs a 2-dimensional curve")
    m = len(curve)
    if curve.closed and m < 3:
        raise ValueError("closed planar curve needs at least 3 points")
    if not curve.closed and m < 4:
        raise ValueError("open planar curve needs at least 4 points")
    tangents = edge_tangents(curve)
    nt = len(tangents)
    exact = curve.exact
    zero: Scalar = Fraction(0) if exact else 0.0
    entries = []
    for k in _vertex_range(curve):
        if curve.closed:
            tm, t0, tp = (tangents[(k - 2) % nt], tangents[(k - 1) % nt], tangents[k % nt])
        else:
            tm, t0, tp = tangents[k - 2], tangents[k - 1], tangents[k]
        d = det2(tm, t0)
        if _is_zero(d, _det2_scale(tm, t0), exact, zero_tol):
            entries.append(ProfileEntry(k=k, kappa=zero, kappa_bar=None))
        else:
            entries.append(ProfileEntry(k=k, kappa=det2(t0, tp) / d, kappa_bar=det2(tm, tp) / d))
    return InvariantProfile(dim=2, closed=curve.closed, entries=tuple(entries))


def space_invariants(curve: DiscreteCurve, zero_tol: float = DEFAULT_ZERO_TOL) -> InvariantProfile:
    """Curvatures and torsions of a space curve from position determinants.

    kappa_k = [r_k, r_{k+1}, r_{k+2}] / [r_{k-1}, r_k, r_{k+1}],
    kappa_bar_k = [r_{k+1}, t_{k-1}, r_{k+2}] / [r_{k-1}, r_k, r_{k+1}],
    tau_k = [t_{k-1}, t_k, t_{k+1}] / [r_{k-1}, r_k, r_{k+1}].
    """
    if curve.dim != 3:
        raise ValueError("space_invariants needs a 3-dimensional curve")
    m = len(curve)
    if m < 4:
        raise ValueError("space curve needs at least 4 points")
    pts = curve.points
    exact = curve.exact
    entries = []
    for k in _vertex_range(curve):
        i = k - 1
        if curve.closed:
            rm, r0, rp, rq = (pts[(i - 1) % m], pts[i], pts[(i + 1) % m], pts[(i + 2) % m])
        else:
            rm, r0, rp, rq = pts[i - 1], pts[i], pts[i + 1], pts[i + 2]
        denom = det3(rm, r0, rp)
        if _is_zero(denom, _det3_scale(rm, r0, rp), exact, zero_tol):
            raise AdmissibilityError(k)
        tm, t0, tp = _sub(r0, rm), _sub(rp, r0), _sub(rq, rp)
        entries.append(
            ProfileEntry(
                k=k,
                kappa=det3(r0, rp, rq) / denom,
                kappa_bar=det3(rp, tm, rq) / denom,
                tau=det3(tm, t0, tp) / denom,
            )
        )
    return InvariantProfile(dim=3, closed=curve.closed, entries=tuple(entries))


def _normalize_chain(init, rows, dim: int, width: int):
    """Coerce init points and invariant rows to one arithmetic mode."""
    pts = [_coerce_vec(p, dim) for p in init]
    if len(pts) != 3:
        raise ValueError("chain reconstruction needs exactly 3 initial points")
    table = []
    for j, row in enumerate(rows):
        vals = tuple(row)
        if len(vals) != width:
            raise ValueError(f"invariant row {j} must have {width} values")
        if any(v is None for v in vals):
            raise ValueError(f"invariant row {j} has an undefined value")
        table.append(tuple(as_scalar(v) for v in vals))
    exact = all(isinstance(c, Fraction) for p in pts for c in p) and all(
        isinstance(v, Fraction) for row in table for v in row
    )
    if not exact:
        pts = [tuple(float(c) for c in p) for p in pts]
        table = [tuple(float(v) for v in row) for row in table]
    return pts, table


def _chain_point(r1: Vec, r2: Vec, r3: Vec, kappa, kappa_bar, tau) -> Vec:
    # r_{k+2} = kappa r_{k-1} + (-kappa - kappa_bar) r_k + (tau + kappa_bar + 1) r_{k+1}
    c1, c2, c3 = kappa, -kappa - kappa_bar, tau + kappa_bar + 1
    return tuple(c1 * a + c2 * b + c3 * c for a, b, c in zip(r1, r2, r3))


def _profile_rows(profile, width: int):
    """Accept an InvariantProfile or an iterable of value tuples."""
    if isinstance(profile, InvariantProfile):
        if width == 2:
            return [(e.kappa, e.kappa_bar) for e in profile.entries]
        return [(e.kappa, e.kappa_bar, e.tau) for e in profile.entries]
    return [tuple(row) for row in profile]


def reconstruct_planar(init, invariants) -> DiscreteCurve:
    """Grow a planar curve from 3 starting points and (kappa, kappa_bar) pairs."""
    rows = _profile_rows(invariants, 2)
    pts, table = _normalize_chain(init, rows, 2, 2)
    if len({pts[0], pts[1], pts[2]}) != 3:
        raise DegenerateInputError("initial points must be pairwise distinct")
    zero = Fraction(0) if (pts and isinstance(pts[0][0], Fraction)) else 0.0
    for kappa, kappa_bar in table:
        pts.append(_chain_point(pts[-3], pts[-2], pts[-1], kappa, kappa_bar, zero))
    return DiscreteCurve(tuple(pts), dim=2)


def reconstruct_space(init, invariants, enforce_admissibility: bool = False) -> DiscreteCurve:
    """Grow a space curve from 3 starting points and (kappa, kappa_bar, tau) triples."""
    rows = _profile_rows(invariants, 3)
    pts, table = _normalize_chain(init, rows, 3, 3)
    if enforce_admissibility:
        d = det3(*pts)
        if _is_zero(d, _det3_scale(*pts), isinstance(d, Fraction), DEFAULT_ZERO_TOL):
            raise AdmissibilityError(2)
    for kappa, kappa_bar, tau in table:
        pts.append(_chain_point(pts[-3], pts[-2], pts[-1], kappa, kappa_bar, tau))
    return DiscreteCurve(tuple(pts), dim=3)


def inverse_step(window, invariants) -> Vec:
    """Recover r_{k-1} from (r_k, r_{k+1}, r_{k+2}) and the step invariants.

    Inverts the forward chain exactly: needs kappa != 0.  ``invariants`` is
    (kappa, kappa_bar) or (kappa, kappa_bar, tau); the missing tau is 0.
    """
    vals = tuple(invariants)
    if len(vals) == 2:
        vals = vals + (0,)
    if len(vals) != 3:
        raise ValueError("invariants must be (kappa, kappa_bar[, tau])")
    pts, (row,) = _normalize_chain(window, [vals], len(tuple(window[0])), 3)
    kappa, kappa_bar, tau = row
    if kappa == 0:
        raise ZeroDivisionError("kappa = 0: chain step is not invertible")
    rk, rk1, rk2 = pts
    c_q = 1 / kappa
    c_p = -(tau + 1 + kappa_bar) / kappa
    c_0 = 1 + kappa_bar / kappa
    return tuple(c_q * a + c_p * b + c_0 * c for a, b, c in zip(rk2, rk1, rk))


def reconstruct_from_profile(init, profile: InvariantProfile) -> DiscreteCurve:
    """Rebuild the full curve a profile was measured on, starting at ``init``.

    Open profiles (entries k = 2..M-2) replay every entry.  Closed profiles
    carry one entry per vertex; the entries at k = 1, p-1, p only restate the
    wrap-around, so the polygon is rebuilt from k = 2..p-2 and closed.
    """
    ks = [e.k for e in profile.entries]
    if profile.closed:
        p = len(profile.entries)
        if ks != list(range(1, p + 1)):
            raise ValueError("closed profile must cover vertices 1..p in order")
        used = profile.entries[1 : p - 2]
    else:
        if ks != list(range(2, 2 + len(ks))):
            raise ValueError("open profile must cover vertices 2..M-2 in order")
        used = profile.entries
    if profile.dim == 2:
        rows = [(e.kappa, e.kappa_bar) for e in used]
        curve = reconstruct_planar(init, rows)
    else:
        rows = [(e.kappa, e.kappa_bar, e.tau) for e in used]
        curve = reconstruct_space(init, rows)
    if profile.closed:
        return DiscreteCurve(curve.points, dim=profile.dim, closed=True)
    return curve


def apply_affine(curve: DiscreteCurve, matrix, translation=None) -> DiscreteCurve:
    """Map every point through x -> M x + b, preserving open/closed structure."""
    d = curve.dim
    rows = [tuple(as_scalar(v) for v in r) for r in matrix]
    if len(rows) != d or any(len(r) != d for r in rows):
        raise ValueError(f"matrix must be {d}x{d}")
    if translation is None:
        translation = (0,) * d
    b = _coerce_vec(translation, d)
    exact = curve.exact and all(
        isinstance(v, Fraction) for r in rows for v in r
    ) and all(isinstance(v, Fraction) for v in b)
    if not exact:
        rows = [tuple(float(v) for v in r) for r in rows]
        b = tuple(float(v) for v in b)
        pts = [tuple(float(c) for c in p) for p in curve.points]
    else:
        pts = list(curve.points)
    mapped = tuple(
        tuple(sum(r[j] * p[j] for j in range(d)) + b[i] for i, r in enumerate(rows))
        for p in pts
    )
    return DiscreteCurve(mapped, dim=d, closed=curve.closed)


def reverse_curve(curve: DiscreteCurve) -> DiscreteCurve:
    return DiscreteCurve(curve.points[::-1], dim=curve.dim, closed=curve.closed)


def embed_planar(curve: DiscreteCurve, height=1) -> DiscreteCurve:
    """Lift a planar curve to the z = height plane in 3-space."""
    if curve.dim != 2:
        raise ValueError("embed_planar needs a 2-dimensional curve")
    h = as_scalar(height)
    if curve.exact and not isinstance(h, Fraction):
        raise ValueError("height must be rational for an exact curve")
    if not curve.exact:
        h = float(h)
    pts = tuple(p + (h,) for p in curve.points)
    return DiscreteCurve(pts, dim=3, closed=curve.closed)
