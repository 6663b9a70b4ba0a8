"""Affine Hilbert curves: inflection counts, letter codes, index
classification, the parity-alternating curvature iteration, and generation.

Only inflection points are kept, so kappa_bar = 0 at every vertex and a
Hilbert curve is described by its kappa sequence alone.  Three independent
constructions of that sequence live here and are cross-validated by the
tests: the letter-word recurrence, the closed-form index classifier, and
the parity-step array iteration.
"""

from __future__ import annotations

from fractions import Fraction

from .frame import (
    DiscreteCurve,
    InvariantProfile,
    Scalar,
    reconstruct_planar,
    reconstruct_space,
    require_noncollinear,
)

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)

# kappa runs of the base symbols and of the aggregated letters.
SYMBOL_KAPPAS: dict[str, tuple[Fraction, ...]] = {
    "1": (Fraction(1),),
    "A": (Fraction(-2), Fraction(1), HALF),
    "B": (Fraction(-1), Fraction(1), Fraction(-1)),
    "C": (Fraction(2), Fraction(1), -HALF),
    "D": (Fraction(3), Fraction(1), THIRD),
}
LETTER_SYMBOLS: dict[str, str] = {
    "P": "ABC",
    "S": "C1",
    "T": "D",
    "U": "1A",
    "V": "1B1",
}
LETTER_KAPPAS: dict[str, tuple[Fraction, ...]] = {
    letter: tuple(v for sym in syms for v in SYMBOL_KAPPAS[sym])
    for letter, syms in LETTER_SYMBOLS.items()
}
KAPPA_VALUE_SET = frozenset(
    (Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), HALF, -HALF, Fraction(3), THIRD)
)


def _require_step(n: int, minimum: int = 2) -> None:
    if n < minimum:
        raise ValueError(f"step must be >= {minimum}, got {n}")


def inflection_count(n: int) -> int:
    """Number of inflection points at step n: (4^(n+1) + 4) / 5 for odd n,
    (4^(n+1) + 6) / 5 for even n."""
    _require_step(n, 1)
    return (4 ** (n + 1) + (4 if n % 2 else 6)) // 5


def symbol_length(n: int) -> int:
    """Length of the step-n symbol sequence over {1, A, B, C, D}."""
    _require_step(n)
    return (6 * 4 ** (n - 1) + (1 if n % 2 == 0 else -1)) // 5


def word_length(n: int) -> int:
    _require_step(n)
    return 2 * 4 ** (n - 2) - 1


def expand_word(n: int) -> str:
    """Step-n word over {P, S, T, U, V}, grown from K_2 = "P".

    Stepping to an odd word joins four copies with S, T, U; stepping to an
    even word joins with U, V, S.
    """
    _require_step(n)
    word = "P"
    for target in range(3, n + 1):
        j1, j2, j3 = ("S", "T", "U") if target % 2 else ("U", "V", "S")
        word = word + j1 + word + j2 + word + j3 + word
    return word


def word_to_symbols(word: str) -> str:
    """Letter word -> symbol sequence over {1, A, B, C, D} with the boundary 1s."""
    return "1" + "".join(LETTER_SYMBOLS[w] for w in word) + "1"


def classify_index(n: int, idx: int) -> str:
    """Letter at position idx of the step-n word, in closed form.

    Odd positions are P.  Otherwise strip idx = 4^e * m with m not divisible
    by 4: an odd m gives T (e odd) or V (e even); an even m = 2 m' gives S
    when (e even, m' = 1 mod 4) or (e odd, m' = 3 mod 4), else U.
    """
    length = word_length(n)
    if not 1 <= idx <= length:
        raise ValueError(f"index {idx} out of range 1..{length}")
    if idx % 2 == 1:
        return "P"
    e, m = 0, idx
    while m % 4 == 0:
        m //= 4
        e += 1
    if m % 2 == 1:
        return "T" if e % 2 == 1 else "V"
    half = m // 2
    if (e % 2 == 0 and half % 4 == 1) or (e % 2 == 1 and half % 4 == 3):
        return "S"
    return "U"


def letter_counts(n: int) -> dict[str, int]:
    """Closed-form letter counts of the step-n word."""
    _require_step(n)
    if n % 2 == 0:
        m = n // 2
        return {
            "P": 4 ** (2 * m - 2),
            "S": (4 ** (2 * m - 2) - 1) // 3,
            "T": (4 ** (2 * m - 1) - 4) // 15,
            "U": (4 ** (2 * m - 2) - 1) // 3,
            "V": (4 ** (2 * m - 2) - 1) // 15,
        }
    m = (n - 1) // 2
    return {
        "P": 4 ** (2 * m - 1),
        "S": (4 ** (2 * m - 1) - 1) // 3,
        "T": (4 ** (2 * m) - 1) // 15,
        "U": (4 ** (2 * m - 1) - 1) // 3,
        "V": (4 ** (2 * m - 1) - 4) // 15,
    }


def hilbert_kappa_sequence(n: int) -> list[Fraction]:
    """Per-vertex kappa values at step n: a boundary 1, the expanded word,
    and a closing 1 -- N(n) - 3 values in total."""
    _require_step(n)
    values: list[Fraction] = [Fraction(1)]
    for letter in expand_word(n):
        values.extend(LETTER_KAPPAS[letter])
    values.append(Fraction(1))
    return values


def _step_for_length(length: int, parity: str) -> int:
    m = 1 if parity == "odd" else 2
    while True:
        expect = inflection_count(m) - 3
        if expect == length:
            return m
        if expect > length:
            raise ValueError(f"no {parity} step has a kappa sequence of length {length}")
        m += 2


def parity_step_kappas(kappas, from_step_parity: str) -> list[Fraction]:
    """Advance a kappa sequence one step via the parity-specific index maps.

    ``kappas`` must be the full step-m sequence (vertices 2..N(m)-2) for
    some m of the stated parity.  The odd->even map splices the A, B, C runs
    between shifted copies; the even->odd map splices C, D, A and restores
    the overwritten last value (saved before any write) at two places.
    Returns the step-(m+1) sequence.
    """
    if from_step_parity not in ("odd", "even"):
        raise ValueError("from_step_parity must be 'odd' or 'even'")
    vals = [Fraction(v) for v in kappas]
    m = _step_for_length(len(vals), from_step_parity)
    n_now = inflection_count(m)
    n_next = inflection_count(m + 1)
    out: list[Fraction | None] = [None] * (n_next - 3)

    def get(x: int) -> Fraction:
        return vals[x - 2]

    def put(x: int, v) -> None:
        out[x - 2] = Fraction(v)

    a_run, b_run, c_run, d_run = (
        LETTER_KAPPAS["P"][0:3],
        LETTER_KAPPAS["P"][3:6],
        LETTER_KAPPAS["P"][6:9],
        SYMBOL_KAPPAS["D"],
    )
    if from_step_parity == "odd":
        q = n_now
        for x in range(2, q - 1):
            put(x, get(x))
        for off, v in enumerate(a_run):
            put(q - 1 + off, v)
        for l in range(2, q - 2):
            put(q + l, get(l + 1))
        for off, v in enumerate(b_run):
            put(2 * q - 2 + off, v)
        for l in range(1, q - 3):
            put(2 * q + l, get(l + 1))
        for off, v in enumerate(c_run):
            put(3 * q - 3 + off, v)
        for l in range(1, q - 2):
            put(3 * q - 1 + l, get(l + 1))
    else:
        q = n_now
        saved = get(q - 2)
        for x in range(2, q - 2):
            put(x, get(x))
        for off, v in enumerate(c_run):
            put(q - 2 + off, v)
        for l in range(1, q - 3):
            put(q + l, get(l + 1))
        for off, v in enumerate(d_run):
            put(2 * q - 3 + off, v)
        for l in range(1, q - 4):
            put(2 * q - 1 + l, get(l + 2))
        put(3 * q - 5, saved)
        for off, v in enumerate(a_run):
            put(3 * q - 4 + off, v)
        for l in range(1, q - 4):
            put(3 * q - 2 + l, get(l + 2))
        put(4 * q - 6, saved)
    if any(v is None for v in out):
        raise AssertionError("parity step left unassigned positions")
    return [v for v in out if v is not None]


def generate_hilbert(init, n: int) -> DiscreteCurve:
    """Affine Hilbert curve at step n: N(n) points grown from three
    non-collinear starting points with r_{k+2} = kappa (r_{k-1} - r_k) + r_{k+1}."""
    _require_step(n)
    require_noncollinear(*init)
    rows = [(kappa, 0) for kappa in hilbert_kappa_sequence(n)]
    return reconstruct_planar(init, rows)


def standard_hilbert_init(r1, r2):
    """Third starting point for the classical Hilbert curve: 90-degree turn,
    exact whenever r1, r2 are rational."""
    from .frame import _coerce_vec

    a = _coerce_vec(r1, 2)
    b = _coerce_vec(r2, 2)
    if a == b:
        raise ValueError("the two starting points coincide")
    dx, dy = b[0] - a[0], b[1] - a[1]
    return (b[0] - dy, b[1] + dx)


def decode_kappas(profile: InvariantProfile, tol: float = 1e-9) -> list[Scalar]:
    """Kappa sequence of a decoded Hilbert curve; requires kappa_bar = 0
    (within tol in float mode) at every vertex."""
    out = []
    for e in profile.entries:
        if e.kappa_bar is None:
            raise ValueError(f"kappa_bar undefined at k={e.k}: not a Hilbert profile")
        bad = e.kappa_bar != 0 if isinstance(e.kappa_bar, Fraction) else abs(e.kappa_bar) > tol
        if bad:
            raise ValueError(f"kappa_bar != 0 at k={e.k}: not a Hilbert profile")
        out.append(e.kappa)
    return out


def extend_space_hilbert(
    init, n: int, bar_ratio=0, tau_ratio=0, enforce_admissibility: bool = False
) -> DiscreteCurve:
    """Space curve carrying the Hilbert kappas with kappa_bar = bar_ratio * kappa
    and tau = tau_ratio * kappa."""
    _require_step(n)
    rows = [
        (kappa, bar_ratio * kappa, tau_ratio * kappa)
        for kappa in hilbert_kappa_sequence(n)
    ]
    return reconstruct_space(init, rows, enforce_admissibility=enforce_admissibility)


def _d2xy(side: int, d: int) -> tuple[int, int]:
    # Standard Hilbert index -> cell walk on a side x side grid.
    x = y = 0
    t = d
    s = 1
    while s < side:
        rx = 1 & (t // 2)
        ry = 1 & (t ^ rx)
        if ry == 0:
            if rx == 1:
                x = s - 1 - x
                y = s - 1 - y
            x, y = y, x
        x += s * rx
        y += s * ry
        t //= 4
        s *= 2
    return x, y


def classical_hilbert_oracle(n: int) -> DiscreteCurve:
    """Classical unit-grid Hilbert polyline with collinear interior vertices
    removed; independent test oracle with inflection_count(n) points."""
    _require_step(n, 1)
    side = 2**n
    raw = [_d2xy(side, d) for d in range(side * side)]
    kept = [raw[0]]
    for i in range(1, len(raw) - 1):
        (x0, y0), (x1, y1), (x2, y2) = raw[i - 1], raw[i], raw[i + 1]
        if (x1 - x0) * (y2 - y1) != (y1 - y0) * (x2 - x1):
            kept.append(raw[i])
    kept.append(raw[-1])
    return DiscreteCurve(tuple(kept), dim=2)
