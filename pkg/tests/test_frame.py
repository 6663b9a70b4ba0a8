"""Core invariant extraction and chain reconstruction.

Expected values for the hand fixtures were computed with the Leibniz-sum
determinant oracle below (independent of the cofactor implementation) and
frozen here.
"""

import math
import random
from fractions import Fraction as F
from itertools import permutations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from afframe import (
    AdmissibilityError,
    DegenerateInputError,
    DiscreteCurve,
    apply_affine,
    edge_tangents,
    embed_planar,
    inverse_step,
    planar_curvatures,
    reconstruct_from_profile,
    reconstruct_planar,
    reconstruct_space,
    reverse_curve,
    space_invariants,
)
import util


def leibniz_det(cols):
    """Sum over permutations; the independent determinant oracle."""
    n = len(cols)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = sign
        for col, row in enumerate(perm):
            term *= cols[col][row]
        total += term
    return total


fractions_st = st.fractions(min_value=-10, max_value=10, max_denominator=8)


# --- edge tangents -------------------------------------------------------


def test_edge_tangents_open():
    c = DiscreteCurve([(0.0, 0.0), (1.0, 0.0), (1.5, math.sqrt(3) / 2)])
    t = edge_tangents(c)
    assert t[0] == (1.0, 0.0)
    assert t[1] == pytest.approx((0.5, 0.8660254037844386))


def test_edge_tangents_closed_wraps():
    c = DiscreteCurve([(0, 0), (1, 0), (0, 1)], closed=True)
    t = edge_tangents(c)
    assert len(t) == 3
    assert t[2] == (F(0), F(-1))


def test_edge_tangents_single_point_errors():
    with pytest.raises(ValueError):
        edge_tangents(DiscreteCurve([(0, 0)]))


# --- planar curvatures ---------------------------------------------------


def test_sharp_angle_pair_float():
    pts = [(0.0, 0.0), (1.0, 0.0), (1.5, math.sqrt(3) / 2), (2.0, 0.0), (3.0, 0.0)]
    prof = planar_curvatures(DiscreteCurve(pts))
    assert [e.k for e in prof.entries] == [2, 3]
    assert prof.entries[0].kappa == pytest.approx(-1)
    assert prof.entries[0].kappa_bar == pytest.approx(-1)
    assert prof.entries[1].kappa == pytest.approx(-1)
    assert prof.entries[1].kappa_bar == pytest.approx(1)


def test_collinear_vertex_has_undefined_kappa_bar():
    prof = planar_curvatures(DiscreteCurve([(0, 0), (1, 0), (2, 0), (3, 0)]))
    (entry,) = prof.entries
    assert entry.k == 2
    assert entry.kappa == 0
    assert entry.kappa_bar is None


def test_planar_rational_fixture():
    # frozen from the determinant oracle: t = (1,0),(0,1),(-1,1),(-2,0)
    pts = [(0, 0), (1, 0), (1, 1), (0, 2), (-2, 2)]
    t = [tuple(F(b[i] - a[i]) for i in range(2)) for a, b in zip(pts, pts[1:])]
    assert leibniz_det([t[1], t[2]]) / leibniz_det([t[0], t[1]]) == F(1)
    assert leibniz_det([t[0], t[2]]) / leibniz_det([t[0], t[1]]) == F(1)
    assert leibniz_det([t[2], t[3]]) / leibniz_det([t[1], t[2]]) == F(2)
    prof = planar_curvatures(DiscreteCurve(pts))
    assert [(e.kappa, e.kappa_bar) for e in prof.entries] == [(F(1), F(1)), (F(2), F(2))]


def test_planar_needs_dim2_and_enough_points():
    with pytest.raises(ValueError):
        planar_curvatures(DiscreteCurve([(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 1, 1)]))
    with pytest.raises(ValueError):
        planar_curvatures(DiscreteCurve([(0, 0), (1, 0), (1, 1)]))


# --- space invariants ----------------------------------------------------

E1, E2, E3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def test_space_fixture_frozen_from_oracle():
    r4 = (1, 1, 1)
    d = leibniz_det([E1, E2, E3])
    assert leibniz_det([E2, E3, r4]) / d == F(1)
    t1 = (-1, 1, 0)
    assert leibniz_det([E3, t1, r4]) / d == F(-2)
    t2, t3 = (0, -1, 1), (1, 1, 0)
    assert leibniz_det([t1, t2, t3]) / d == F(2)
    prof = space_invariants(DiscreteCurve([E1, E2, E3, r4]))
    (entry,) = prof.entries
    assert (entry.kappa, entry.kappa_bar, entry.tau) == (F(1), F(-2), F(2))


def test_space_admissibility_error_carries_index():
    with pytest.raises(AdmissibilityError) as err:
        space_invariants(DiscreteCurve([E1, E2, (1, 1, 0), (0, 1, 1), (1, 0, 1)]))
    assert err.value.index == 2


@settings(max_examples=60)
@given(st.lists(st.tuples(fractions_st, fractions_st, fractions_st), min_size=4, max_size=4))
def test_curvature_tangent_form_identity(pts):
    """The kappa_bar numerator with t_{k+1} equals the one with r_{k+2}, and
    the position-vector denominator equals [r_k, t_{k-1}, t_k]."""
    r1, r2, r3, r4 = pts
    t1, t2, t3 = (
        tuple(b - a for a, b in zip(r1, r2)),
        tuple(b - a for a, b in zip(r2, r3)),
        tuple(b - a for a, b in zip(r3, r4)),
    )
    assert leibniz_det([r2, t1, t2]) == leibniz_det([r1, r2, r3])
    assert leibniz_det([r3, t1, t3]) == leibniz_det([r3, t1, r4])
    assert leibniz_det([r3, t2, t3]) == leibniz_det([r2, r3, r4])


def test_planar_embedding_has_zero_torsion():
    init2 = [(0, 0), (1, 0), (1, 1)]
    planar = reconstruct_planar(init2, [(F(1), F(1)), (F(-1), F(2)), (F(3), F(-1))])
    lifted = embed_planar(planar)
    prof3 = space_invariants(lifted)
    prof2 = planar_curvatures(planar)
    assert all(e.tau == 0 for e in prof3.entries)
    assert [(a.kappa, a.kappa_bar) for a in prof2.entries] == [
        (b.kappa, b.kappa_bar) for b in prof3.entries
    ]


# --- reconstruction ------------------------------------------------------


def test_reconstruct_planar_sharp_pair_appends_koch_motif():
    init = [(0.0, 0.0), (1.0, 0.0), (1.5, math.sqrt(3) / 2)]
    c = reconstruct_planar(init, [(-1, -1), (-1, 1)])
    assert c.points[3] == pytest.approx((2.0, 0.0))
    assert c.points[4] == pytest.approx((3.0, 0.0))


def test_reconstruct_planar_empty_profile_is_identity():
    init = [(0, 0), (1, 0), (1, 1)]
    c = reconstruct_planar(init, [])
    assert c.points == ((F(0), F(0)), (F(1), F(0)), (F(1), F(1)))


def test_reconstruct_planar_hand_fixture():
    c = reconstruct_planar([(0, 0), (1, 0), (1, 1)], [(1, 1)])
    assert c.points[3] == (F(0), F(2))


def test_reconstruct_planar_rejects_undefined_kappa_bar():
    with pytest.raises(ValueError):
        reconstruct_planar([(0, 0), (1, 0), (1, 1)], [(F(1), None)])


def test_reconstruct_planar_rejects_repeated_init():
    with pytest.raises(DegenerateInputError):
        reconstruct_planar([(0, 0), (0, 0), (1, 1)], [(1, 1)])


def test_reconstruct_space_fixture_and_tau_zero_reduction():
    c = reconstruct_space([E1, E2, E3], [(1, -2, 2)])
    assert c.points[3] == (F(1), F(1), F(1))
    # tau = 0 keeps an embedded curve in its plane
    init = [(0, 0, 1), (1, 0, 1), (1, 1, 1)]
    rows = [(F(2), F(1), F(0)), (F(-1), F(1, 2), F(0))]
    c3 = reconstruct_space(init, rows)
    assert all(p[2] == 1 for p in c3.points)
    c2 = reconstruct_planar([p[:2] for p in init], [r[:2] for r in rows])
    assert [p[:2] for p in c3.points] == list(c2.points)


def test_reconstruct_space_empty_profile_is_identity():
    c = reconstruct_space([E1, E2, E3], [])
    assert len(c) == 3


def test_reconstruct_space_admissibility_optin():
    flat = [(0, 0, 0), (1, 0, 0), (2, 0, 0)]
    reconstruct_space(flat, [(1, 1, 1)])  # total without enforcement
    with pytest.raises(AdmissibilityError):
        reconstruct_space(flat, [(1, 1, 1)], enforce_admissibility=True)


# --- inverse step --------------------------------------------------------


def test_inverse_step_fixture():
    assert inverse_step([E2, E3, (1, 1, 1)], (1, -2, 2)) == (F(1), F(0), F(0))


def test_inverse_step_kappa_zero_errors():
    with pytest.raises(ZeroDivisionError):
        inverse_step([E1, E2, E3], (0, 1, 1))


def test_forward_then_inverse_is_identity_100_trials():
    rng = random.Random(20240817)
    for _ in range(100):
        window = [util.rand_point(rng, 3) for _ in range(3)]
        kappa = util.rand_fraction(rng)
        if kappa == 0:
            kappa = F(1)
        kbar, tau = util.rand_fraction(rng), util.rand_fraction(rng)
        forward = reconstruct_space(window, [(kappa, kbar, tau)])
        assert inverse_step(forward.points[1:], (kappa, kbar, tau)) == tuple(
            F(x) for x in window[0]
        )


# --- round trips and invariance ------------------------------------------


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(fractions_st, fractions_st), min_size=4, max_size=10))
def test_planar_round_trip(pts):
    curve = DiscreteCurve([tuple(p) for p in pts])
    prof = planar_curvatures(curve)
    assume(all(e.kappa_bar is not None for e in prof.entries))
    rebuilt = reconstruct_planar(curve.points[:3], prof)
    assert rebuilt.points == curve.points


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(fractions_st, fractions_st, fractions_st), min_size=4, max_size=10))
def test_space_round_trip(pts):
    curve = DiscreteCurve([tuple(p) for p in pts])
    try:
        prof = space_invariants(curve)
    except AdmissibilityError:
        assume(False)
    rebuilt = reconstruct_space(curve.points[:3], prof)
    assert rebuilt.points == curve.points


def test_closed_profile_round_trip():
    square = DiscreteCurve([(0, 0), (2, 1), (1, 3), (-1, 2)], closed=True)
    prof = planar_curvatures(square)
    assert len(prof.entries) == 4
    rebuilt = reconstruct_from_profile(square.points[:3], prof)
    assert rebuilt.closed and rebuilt.points == square.points


def test_centroaffine_invariance_exact():
    rng = random.Random(7)
    curve = DiscreteCurve([E1, E2, E3, (1, 1, 1), (2, -1, 1), (1, 2, 2)])
    base = space_invariants(curve)
    for _ in range(20):
        m = util.rand_invertible_matrix(rng, 3)
        mapped = space_invariants(apply_affine(curve, m))
        assert [(e.kappa, e.kappa_bar, e.tau) for e in mapped.entries] == [
            (e.kappa, e.kappa_bar, e.tau) for e in base.entries
        ]


def test_affine_invariance_planar_exact():
    rng = random.Random(8)
    curve = DiscreteCurve([(0, 0), (1, 0), (1, 1), (0, 2), (-2, 2), (1, 5)])
    base = planar_curvatures(curve)
    for _ in range(20):
        m = util.rand_invertible_matrix(rng, 2)
        b = util.rand_point(rng, 2)
        mapped = planar_curvatures(apply_affine(curve, m, b))
        assert [(e.kappa, e.kappa_bar) for e in mapped.entries] == [
            (e.kappa, e.kappa_bar) for e in base.entries
        ]


def test_translation_changes_space_invariants():
    curve = DiscreteCurve([E1, E2, E3, (1, 1, 1)])
    shifted = apply_affine(curve, ((1, 0, 0), (0, 1, 0), (0, 0, 1)), (1, 1, 1))
    a = space_invariants(curve).entries[0]
    b = space_invariants(shifted).entries[0]
    assert (a.kappa, a.kappa_bar, a.tau) != (b.kappa, b.kappa_bar, b.tau)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(fractions_st, fractions_st), min_size=5, max_size=9))
def test_reversal_exchanges_kappa_with_reciprocal(pts):
    curve = DiscreteCurve([tuple(p) for p in pts])
    m = len(curve)
    fwd = planar_curvatures(curve)
    assume(all(e.kappa_bar is not None and e.kappa != 0 for e in fwd.entries))
    rev = planar_curvatures(reverse_curve(curve))
    by_k = {e.k: e for e in fwd.entries}
    for entry in rev.entries:
        partner = by_k[m - entry.k]
        assert entry.kappa == 1 / partner.kappa
        assert entry.kappa_bar == partner.kappa_bar / partner.kappa


# --- mode handling -------------------------------------------------------


def test_modes_may_not_mix():
    with pytest.raises(ValueError):
        DiscreteCurve([(0, 0), (F(1, 2), 0.5), (1, 1), (2, 2)])


def test_float_curve_rejects_nan():
    with pytest.raises(ValueError):
        DiscreteCurve([(0.0, 0.0), (float("nan"), 1.0), (1.0, 1.0), (2.0, 0.0)])


def test_float_zero_tolerance_is_scaled():
    # nearly-collinear triple: determinant 1e-30 against unit operands
    pts = [(0.0, 0.0), (1.0, 0.0), (2.0, 1e-30), (3.0, 0.0)]
    prof = planar_curvatures(DiscreteCurve(pts))
    assert prof.entries[0].kappa_bar is None
    prof = planar_curvatures(DiscreteCurve(pts), zero_tol=1e-40)
    assert prof.entries[0].kappa_bar is not None
