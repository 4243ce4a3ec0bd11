"""Shared exact helpers: random polytopes, an independent 2D vertex oracle,
random unimodular matrices, and group conjugation."""

import functools
import random
from fractions import Fraction
from math import lcm

from toriclct.geometry import (HalfSpace, HPolytope, mat_mul, mat_vec,
                               primitive_vector, solve_square_system)
from toriclct.toric import GroupAction, RaySet


def hpoly(rows):
    """Halfspaces from (a_1, ..., a_n, b) rows meaning <a, w> >= b."""
    return HPolytope(tuple(HalfSpace(tuple(r[:-1]), r[-1]) for r in rows))


def random_bounded_poly(rng: random.Random) -> HPolytope:
    # a box keeps it bounded, offsets <= -1 keep the origin interior
    rows = [(1, 0, rng.randint(-5, -1)), (-1, 0, rng.randint(-5, -1)),
            (0, 1, rng.randint(-5, -1)), (0, -1, rng.randint(-5, -1))]
    for _ in range(rng.randint(0, 4)):
        a, b = rng.randint(-4, 4), rng.randint(-4, 4)
        if a or b:
            rows.append((a, b, rng.randint(-5, -1)))
    return hpoly(rows)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def oracle_vertices_2d(poly) -> set:
    """Vertices of a bounded 2D H-polytope, independently of
    enumerate_vertices: all feasible pairwise boundary intersections, one
    farthest candidate per direction from the lowest point, then an exact
    angular-sort scan that pops non-left turns."""
    hs = poly.halfspaces
    pts = set()
    for i in range(len(hs)):
        for j in range(i + 1, len(hs)):
            x = solve_square_system((hs[i].normal, hs[j].normal),
                                    (hs[i].offset, hs[j].offset))
            if x is not None and poly.contains(x):
                pts.add(x)
    if len(pts) <= 2:
        return pts
    pivot = min(pts, key=lambda p: (p[1], p[0]))
    farthest = {}
    for p in pts:
        if p == pivot:
            continue
        d = (p[0] - pivot[0], p[1] - pivot[1])
        den = lcm(d[0].denominator, d[1].denominator)
        direction = primitive_vector((int(d[0] * den), int(d[1] * den)))
        r2 = d[0] * d[0] + d[1] * d[1]
        if direction not in farthest or farthest[direction][0] < r2:
            farthest[direction] = (r2, p)

    def by_angle(a, b):
        c = _cross(pivot, a, b)
        return -1 if c > 0 else 1

    order = sorted((p for _, p in farthest.values()),
                   key=functools.cmp_to_key(by_angle))
    hull = [pivot]
    for q in order:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], q) <= 0:
            hull.pop()
        hull.append(q)
    return set(hull)


def random_unimodular(rng: random.Random, n: int):
    """Product of elementary integer row operations: |det| = 1 by
    construction."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(rng.randint(6, 12)):
        op = rng.randrange(3)
        i, j = rng.randrange(n), rng.randrange(n)
        if op == 0 and i != j:
            k = rng.choice((-3, -2, -1, 1, 2, 3))
            m[i] = [x + k * y for x, y in zip(m[i], m[j])]
        elif op == 1:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-x for x in m[i]]
    return tuple(tuple(row) for row in m)


def inverse_unimodular(m):
    n = len(m)
    cols = []
    for j in range(n):
        x = solve_square_system(m, tuple(int(i == j) for i in range(n)))
        assert all(c.denominator == 1 for c in x)
        cols.append([c.numerator for c in x])
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def transform_rays(u, rays: RaySet) -> RaySet:
    return RaySet(tuple(mat_vec(u, v) for v in rays))


def conjugate_group(u, u_inv, group: GroupAction) -> GroupAction:
    return GroupAction(tuple(sorted(
        mat_mul(mat_mul(u, g), u_inv) for g in group.elements)))
