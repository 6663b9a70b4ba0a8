"""Equivalence decisions on discrete curves via invariant profiles, with
explicit affine-map recovery as an independent witness.

Profile equality is the authoritative criterion; a recovered map (when one
exists) confirms it constructively.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .frame import (
    DegenerateInputError,
    DiscreteCurve,
    InvariantProfile,
    Scalar,
    Vec,
    _sub,
    planar_curvatures,
    space_invariants,
)

PLANAR_AFFINE = "planar-affine"
CENTROAFFINE = "centroaffine"
CYCLIC = "cyclic"


@dataclass(frozen=True)
class AffineWitness:
    matrix: tuple[tuple[Scalar, ...], ...]
    translation: tuple[Scalar, ...]

    def apply(self, point: Vec) -> Vec:
        d = len(self.translation)
        return tuple(
            sum(self.matrix[i][j] * point[j] for j in range(d)) + self.translation[i]
            for i in range(d)
        )


@dataclass(frozen=True)
class EquivalenceReport:
    equivalent: bool
    mode: str
    witness: AffineWitness | None
    max_deviation: Scalar
    shift: int = 0
    reason: str = ""


def _values(entry, dim: int):
    if dim == 2:
        return (entry.kappa, entry.kappa_bar)
    return (entry.kappa, entry.kappa_bar, entry.tau)


def _entry_deviation(ea, eb, dim: int):
    """Max absolute difference across the entry values, or None when one side
    has an undefined kappa_bar and the other does not."""
    dev = 0
    for va, vb in zip(_values(ea, dim), _values(eb, dim)):
        if va is None or vb is None:
            if va is not vb:
                return None
            continue
        dev = max(dev, abs(va - vb))
    return dev


def _match_profiles(a: InvariantProfile, b: InvariantProfile, tol, cyclic: bool):
    """Return (equal, shift, max_deviation) over the best alignment."""
    n = len(a.entries)
    exact = a.exact and b.exact
    limit = 0 if exact else tol
    best_dev = None
    for shift in range(n) if cyclic else (0,):
        dev = 0
        for i in range(n):
            d = _entry_deviation(a.entries[i], b.entries[(i + shift) % n], a.dim)
            if d is None:
                dev = None
                break
            dev = max(dev, d)
            if dev > limit:
                break
        if dev is not None and dev <= limit:
            return True, shift, dev
        if dev is not None and (best_dev is None or dev < best_dev):
            best_dev = dev
    return False, 0, best_dev if best_dev is not None else 0


def profiles_equal(
    a: InvariantProfile, b: InvariantProfile, tol: Scalar = 0, cyclic: bool = False
) -> bool:
    """Entrywise profile equality; exact for rational profiles, |delta| <= tol
    for floats; cyclic compares all rotations.  Differing lengths are simply
    unequal; differing dim or closedness is a shape error."""
    if a.dim != b.dim:
        raise ValueError("profiles have different dimensions")
    if len(a.entries) != len(b.entries):
        return False
    if a.closed != b.closed:
        raise ValueError("profiles differ in closedness")
    equal, _, _ = _match_profiles(a, b, tol, cyclic)
    return equal


def _rank_extend(basis: list[Vec], candidate: Vec, exact: bool, tol: float) -> bool:
    """Gaussian-elimination rank test: does candidate extend the basis?"""
    row = list(candidate)
    for b in basis:
        b = list(b)
        pivot_col = next(i for i, v in enumerate(b) if v != 0)
        if row[pivot_col] != 0:
            factor = row[pivot_col] / b[pivot_col]
            row = [r - factor * v for r, v in zip(row, b)]
    scale = max((abs(v) for v in candidate), default=0)
    if exact:
        return any(v != 0 for v in row)
    return any(abs(v) > tol * max(1.0, float(scale)) for v in row)


def _independent_subset(points, dim: int, exact: bool, tol: float, affine: bool):
    """Indices of dim+1 affinely independent points (or dim linearly
    independent ones when affine=False)."""
    if affine:
        origin = points[0]
        chosen = [0]
        basis: list[Vec] = []
        for j in range(1, len(points)):
            v = _sub(points[j], origin)
            if _rank_extend(basis, v, exact, tol):
                basis = _eliminate(basis, v)
                chosen.append(j)
                if len(chosen) == dim + 1:
                    return chosen
        return None
    chosen = []
    basis = []
    for j in range(len(points)):
        v = points[j]
        if _rank_extend(basis, v, exact, tol):
            basis = _eliminate(basis, v)
            chosen.append(j)
            if len(chosen) == dim:
                return chosen
    return None


def _eliminate(basis: list[Vec], new: Vec) -> list[Vec]:
    row = list(new)
    for b in basis:
        pivot_col = next(i for i, v in enumerate(b) if v != 0)
        if row[pivot_col] != 0:
            factor = row[pivot_col] / b[pivot_col]
            row = [r - factor * v for r, v in zip(row, b)]
    return basis + [tuple(row)]


def _mat_inverse(cols: list[Vec], dim: int):
    """Inverse of the matrix whose columns are ``cols`` via Gauss-Jordan."""
    aug = [[cols[j][i] for j in range(dim)] + [1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    one = Fraction(1) if isinstance(cols[0][0], Fraction) else 1.0
    aug = [[one * v for v in row] for row in aug]
    for col in range(dim):
        pivot = max(range(col, dim), key=lambda r: abs(aug[r][col]))
        if aug[pivot][col] == 0:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(dim):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [tuple(row[dim:]) for row in aug]


def _mat_mul(a, b, dim: int):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(dim)) for j in range(dim))
        for i in range(dim)
    )


def _solve_map(src, dst, dim: int, affine: bool):
    """Matrix (and translation when affine) sending the src frame to dst."""
    if affine:
        p_cols = [_sub(src[i + 1], src[0]) for i in range(dim)]
        b_cols = [_sub(dst[i + 1], dst[0]) for i in range(dim)]
    else:
        p_cols = list(src)
        b_cols = list(dst)
    p_inv = _mat_inverse(p_cols, dim)
    if p_inv is None:
        return None
    b_mat = tuple(tuple(b_cols[j][i] for j in range(dim)) for i in range(dim))
    matrix = _mat_mul(b_mat, p_inv, dim)
    if affine:
        image = tuple(sum(matrix[i][j] * src[0][j] for j in range(dim)) for i in range(dim))
        translation = tuple(d - v for d, v in zip(dst[0], image))
    else:
        zero = Fraction(0) if isinstance(matrix[0][0], Fraction) else 0.0
        translation = (zero,) * dim
    return AffineWitness(matrix=matrix, translation=translation)


def _verify_witness(witness, a_pts, b_pts, exact: bool, tol: float) -> bool:
    for p, q in zip(a_pts, b_pts):
        image = witness.apply(p)
        if exact:
            if tuple(image) != tuple(q):
                return False
        else:
            scale = max(1.0, max(abs(v) for v in q))
            if any(abs(x - y) > tol * scale for x, y in zip(image, q)):
                return False
    return True


def recover_affine_map(
    a: DiscreteCurve, b: DiscreteCurve, tol: float = 1e-9, linear_only: bool = False
) -> AffineWitness | None:
    """Affine map sending a's points onto b's pointwise, or None.

    Solves on the first affinely independent (dim+1)-subset of a, then
    verifies every remaining point (exactly in rational mode).
    """
    if a.dim != b.dim:
        raise ValueError("curves have different dimensions")
    if len(a) != len(b):
        raise ValueError("curves have different point counts")
    if len(a) < a.dim + 1:
        raise ValueError(f"need at least {a.dim + 1} points")
    exact = a.exact and b.exact
    idx = _independent_subset(a.points, a.dim, exact, tol, affine=not linear_only)
    if idx is None:
        raise DegenerateInputError("no affinely independent point subset")
    src = [a.points[i] for i in idx]
    dst = [b.points[i] for i in idx]
    witness = _solve_map(src, dst, a.dim, affine=not linear_only)
    if witness is None:
        return None
    if not exact:
        matrix = tuple(tuple(float(v) for v in row) for row in witness.matrix)
        translation = tuple(float(v) for v in witness.translation)
        witness = AffineWitness(matrix=matrix, translation=translation)
    if _verify_witness(witness, a.points, b.points, exact, tol):
        return witness
    return None


def _rotate_points(curve: DiscreteCurve, shift: int) -> DiscreteCurve:
    pts = curve.points
    rotated = pts[shift:] + pts[:shift]
    return DiscreteCurve(rotated, dim=curve.dim, closed=curve.closed)


def are_equivalent(
    a: DiscreteCurve, b: DiscreteCurve, mode: str | None = None, tol: Scalar = 1e-9
) -> EquivalenceReport:
    """Decide equivalence by comparing invariant profiles; closed curves are
    compared cyclically.  On success an explicit map is attempted as witness.
    """
    if a.dim != b.dim:
        raise ValueError("curves have different dimensions")
    if a.closed != b.closed:
        raise ValueError("curves differ in closedness")
    if mode is None:
        mode = PLANAR_AFFINE if a.dim == 2 else CENTROAFFINE
    if mode == PLANAR_AFFINE and a.dim != 2:
        raise ValueError("planar-affine mode needs 2-dimensional curves")
    if mode == CENTROAFFINE and a.dim != 3:
        raise ValueError("centroaffine mode needs 3-dimensional curves")
    if mode not in (PLANAR_AFFINE, CENTROAFFINE):
        raise ValueError(f"unknown mode {mode!r}")
    profile = planar_curvatures if mode == PLANAR_AFFINE else space_invariants
    pa, pb = profile(a), profile(b)
    cyclic = a.closed
    reported_mode = CYCLIC if cyclic else mode
    if len(pa.entries) != len(pb.entries):
        return EquivalenceReport(
            False, reported_mode, None, 0, reason="profiles have different lengths"
        )
    equal, shift, dev = _match_profiles(pa, pb, tol, cyclic)
    witness = None
    if equal and len(a) == len(b):
        target = _rotate_points(b, shift) if shift else b
        try:
            witness = recover_affine_map(
                a, target, tol=float(tol), linear_only=(mode == CENTROAFFINE)
            )
        except (ValueError, ZeroDivisionError):
            witness = None
    reason = "" if equal else "invariant profiles differ"
    return EquivalenceReport(equal, reported_mode, witness, dev, shift=shift, reason=reason)
