"""Shared randomized-fixture helpers; everything is seeded for determinism."""

import random
from fractions import Fraction

from afframe.frame import det2, det3, _sub


def rand_fraction(rng: random.Random, span: int = 12, max_den: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def rand_point(rng, dim=2, span=12, max_den=6):
    return tuple(rand_fraction(rng, span, max_den) for _ in range(dim))


def rand_noncollinear_init(rng, span=12, max_den=6):
    while True:
        p1, p2, p3 = (rand_point(rng, 2, span, max_den) for _ in range(3))
        if det2(_sub(p2, p1), _sub(p3, p2)) != 0:
            return [p1, p2, p3]


def rand_spanning_init3(rng, span=12, max_den=6):
    while True:
        pts = [rand_point(rng, 3, span, max_den) for _ in range(3)]
        if det3(*pts) != 0:
            return pts


def rand_invertible_matrix(rng, dim, span=8, max_den=4):
    while True:
        m = tuple(
            tuple(rand_fraction(rng, span, max_den) for _ in range(dim)) for _ in range(dim)
        )
        if dim == 2:
            d = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        else:
            d = det3(tuple(r[0] for r in m), tuple(r[1] for r in m), tuple(r[2] for r in m))
        if d != 0:
            return m
