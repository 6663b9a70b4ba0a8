"""Affine Koch curves: binary codes, index formulas, counts, and generation.

A code element marks two consecutive vertices: ``1`` is a sharp angle pair
with (kappa, kappa_bar) = (-1, -1), (-1, 1), and ``0`` an obtuse pair with
all four values 1.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .frame import (
    DegenerateInputError,
    DiscreteCurve,
    InvariantProfile,
    Scalar,
    reconstruct_planar,
    reconstruct_space,
    require_noncollinear,
)

SHARP_PAIR = ((Fraction(-1), Fraction(-1)), (Fraction(-1), Fraction(1)))
OBTUSE_PAIR = ((Fraction(1), Fraction(1)), (Fraction(1), Fraction(1)))


@dataclass(frozen=True)
class KochCounts:
    points: int
    sharp_pairs: int
    obtuse_pairs: int
    elements: int


def _require_step(n: int) -> None:
    if n < 2:
        raise ValueError(f"step must be >= 2, got {n}")


def code_length(n: int) -> int:
    _require_step(n)
    return 2 * 4 ** (n - 2) - 1


def koch_code(n: int) -> str:
    """Binary code at step n, grown by C -> C 0 C 1 C 0 C from the base "1"."""
    _require_step(n)
    code = "1"
    for _ in range(n - 2):
        code = code + "0" + code + "1" + code + "0" + code
    return code


def is_sharp_element(n: int, idx: int) -> bool:
    """Closed-form classifier: element idx is sharp iff idx = 4^i * odd."""
    length = code_length(n)
    if not 1 <= idx <= length:
        raise ValueError(f"index {idx} out of range 1..{length}")
    while idx % 4 == 0:
        idx //= 4
    return idx % 2 == 1


def sharp_point_positions(n: int) -> list[int]:
    """Vertex numbers of sharp points at step n: 4^(n-2-i) * (4j-2) + 1."""
    _require_step(n)
    positions = set()
    for i in range(n - 1):
        base = 4 ** (n - 2 - i)
        for j in range(1, 4**i + 1):
            positions.add(base * (4 * j - 2) + 1)
    return sorted(positions)


def koch_counts(n: int) -> KochCounts:
    _require_step(n)
    return KochCounts(
        points=4 ** (n - 1) + 1,
        sharp_pairs=(4 ** (n - 1) - 1) // 3,
        obtuse_pairs=(4 ** (n - 1) - 4) // 6,
        elements=code_length(n),
    )


def pair_invariants(code: str) -> list[tuple[Scalar, Scalar]]:
    """Expand a binary code to the per-vertex (kappa, kappa_bar) sequence."""
    rows: list[tuple[Scalar, Scalar]] = []
    for bit in code:
        if bit == "1":
            rows.extend(SHARP_PAIR)
        elif bit == "0":
            rows.extend(OBTUSE_PAIR)
        else:
            raise ValueError(f"invalid code element {bit!r}")
    return rows


def _match_pair(first, second, tol: float) -> str | None:
    """Classify two profile entries as a sharp or obtuse pair, else None."""
    for bit, pair in (("1", SHARP_PAIR), ("0", OBTUSE_PAIR)):
        ok = True
        for entry, (kappa, kappa_bar) in zip((first, second), pair):
            if entry.kappa_bar is None:
                ok = False
                break
            if isinstance(entry.kappa, Fraction):
                ok = entry.kappa == kappa and entry.kappa_bar == kappa_bar
            else:
                ok = (
                    abs(entry.kappa - kappa) <= tol
                    and abs(entry.kappa_bar - kappa_bar) <= tol
                )
            if not ok:
                break
        if ok:
            return bit
    return None


def decode_profile(profile: InvariantProfile, tol: float = 1e-9) -> str:
    """Read the binary code back off an open curve's curvature profile."""
    if profile.closed:
        raise ValueError("decode_profile expects an open-curve profile")
    entries = profile.entries
    if len(entries) % 2 != 0:
        raise ValueError("profile length is odd: not an angle-pair curve")
    bits = []
    for j in range(0, len(entries), 2):
        bit = _match_pair(entries[j], entries[j + 1], tol)
        if bit is None:
            raise ValueError(f"entries at k={entries[j].k} do not form an angle pair")
        bits.append(bit)
    return "".join(bits)


def generate_koch(init, n: int) -> DiscreteCurve:
    """Affine Koch curve at step n from three non-collinear starting points."""
    _require_step(n)
    require_noncollinear(*init)
    return reconstruct_planar(init, pair_invariants(koch_code(n)))


def extend_space_koch(init, n: int, tau_ratio=0, enforce_admissibility: bool = False) -> DiscreteCurve:
    """Space curve carrying the Koch invariants with torsions tau = tau_ratio * kappa."""
    _require_step(n)
    rows = [
        (kappa, kappa_bar, tau_ratio * kappa)
        for kappa, kappa_bar in pair_invariants(koch_code(n))
    ]
    return reconstruct_space(init, rows, enforce_admissibility=enforce_admissibility)


def standard_koch_init(r1, r2) -> tuple[float, float]:
    """Third starting point that makes the generated curve the classical Koch
    curve: r2 rotated-offset by 60 degrees, so float arithmetic."""
    x1, y1 = (float(c) for c in r1)
    x2, y2 = (float(c) for c in r2)
    if (x1, y1) == (x2, y2):
        raise DegenerateInputError("the two starting points coincide")
    c, s = math.cos(math.pi / 3), math.sin(math.pi / 3)
    dx, dy = x2 - x1, y2 - y1
    return (x2 + c * dx - s * dy, y2 + s * dx + c * dy)


def classical_koch_oracle(n: int) -> DiscreteCurve:
    """Middle-third construction on the unit segment; independent test oracle."""
    if n < 1:
        raise ValueError(f"step must be >= 1, got {n}")
    c, s = math.cos(math.pi / 3), math.sin(math.pi / 3)
    pts = [(0.0, 0.0), (1.0, 0.0)]
    for _ in range(n - 1):
        refined = [pts[0]]
        for (ax, ay), (bx, by) in zip(pts, pts[1:]):
            ux, uy = (bx - ax) / 3, (by - ay) / 3
            m1 = (ax + ux, ay + uy)
            m2 = (ax + 2 * ux, ay + 2 * uy)
            apex = (m1[0] + c * ux - s * uy, m1[1] + s * ux + c * uy)
            refined.extend([m1, apex, m2, (bx, by)])
        pts = refined
    return DiscreteCurve(tuple(pts), dim=2)


def random_koch_code(n: int, seed: int) -> str:
    """Seeded shuffle of the step-n element multiset (same 1:0 proportions).

    Utility for stochastic variants; no geometric regularity is implied.
    """
    counts = koch_counts(n)
    elements = ["1"] * counts.sharp_pairs + ["0"] * counts.obtuse_pairs
    random.Random(seed).shuffle(elements)
    return "".join(elements)
