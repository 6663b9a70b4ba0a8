"""Affine Koch snowflakes: cyclic binary codes and closed-curve generation.

The step-n code has 6 * 4^(n-2) elements; stepping inserts "101" after every
element of the previous code.  Elements decode to the same sharp/obtuse
angle pairs as the Koch curve.
"""

from __future__ import annotations

from fractions import Fraction

from .frame import DiscreteCurve, InvariantProfile, reconstruct_planar, require_noncollinear
from .koch import _match_pair, pair_invariants


class ClosureError(RuntimeError):
    """Generation failed to return to its starting triple."""


def _require_step(n: int) -> None:
    if n < 2:
        raise ValueError(f"step must be >= 2, got {n}")


def code_length(n: int) -> int:
    _require_step(n)
    return 6 * 4 ** (n - 2)


def snowflake_code(n: int) -> str:
    _require_step(n)
    code = "111111"
    for _ in range(n - 2):
        code = "".join(e + "101" for e in code)
    return code


def snowflake_one_positions(n: int) -> list[int]:
    """Code positions holding a 1: 4^l * (2k-1) + 1 plus the three seeds
    4^(n-1) * (k-1) / 2 + 1."""
    _require_step(n)
    positions = set()
    for l in range(n - 1):
        base = 4**l
        for k in range(1, 3 * 4 ** (n - 2 - l) + 1):
            positions.add(base * (2 * k - 1) + 1)
    for k in (1, 2, 3):
        positions.add(4 ** (n - 1) * (k - 1) // 2 + 1)
    return sorted(positions)


def snowflake_sharp_positions(n: int) -> list[int]:
    """Vertex numbers of sharp points: 4^l * (4k-2) + 1 plus the three
    corners 4^(n-1) * (k-1) + 1."""
    _require_step(n)
    positions = set()
    for l in range(n - 1):
        base = 4**l
        for k in range(1, 3 * 4 ** (n - 2 - l) + 1):
            positions.add(base * (4 * k - 2) + 1)
    for k in (1, 2, 3):
        positions.add(4 ** (n - 1) * (k - 1) + 1)
    return sorted(positions)


def generate_snowflake(init, n: int, closure_tol: float = 1e-9) -> DiscreteCurve:
    """Closed snowflake with 3 * 4^(n-1) points.

    The chain overshoots by three points which must land back on the starting
    triple (exactly in rational mode); they are checked and dropped.
    """
    _require_step(n)
    require_noncollinear(*init)
    chain = reconstruct_planar(init, pair_invariants(snowflake_code(n)))
    pts = chain.points
    body, tail = pts[:-3], pts[-3:]
    if chain.exact:
        if tail != pts[:3]:
            raise ClosureError("exact generation did not close onto the initial triple")
    else:
        scale = max(1.0, max(abs(c) for p in pts[:3] for c in p))
        err = max(abs(a - b) for p, q in zip(tail, pts[:3]) for a, b in zip(p, q))
        if err > closure_tol * scale:
            raise ClosureError(f"closure error {err:.3e} exceeds tolerance")
    return DiscreteCurve(body, dim=2, closed=True)


def decode_profile(profile: InvariantProfile, tol: float = 1e-9) -> str:
    """Read the cyclic code off a closed curve's profile.

    Generation puts the first vertex of pair j at vertex 2j, so pairs are
    read starting from vertex 2, wrapping the final pair back to vertex 1.
    """
    if not profile.closed:
        raise ValueError("decode_profile expects a closed-curve profile")
    entries = profile.entries
    p = len(entries)
    if p % 2 != 0:
        raise ValueError("closed profile length is odd: not an angle-pair curve")
    bits = []
    for j in range(p // 2):
        first = entries[(1 + 2 * j) % p]
        second = entries[(2 + 2 * j) % p]
        bit = _match_pair(first, second, tol)
        if bit is None:
            raise ValueError(f"entries at k={first.k} do not form an angle pair")
        bits.append(bit)
    return "".join(bits)
