"""Exact constructors for the geometric hypergraphs.

All predicates are evaluated on Python integers; there is no floating point
anywhere in construction. Regions are closed (boundary points included).
Inputs that violate general position are rejected, never perturbed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .errors import DegenerateInput, InputError
from .hypergraph import Hypergraph, IntervalHypergraph


def orient(a, b, c) -> int:
    """Twice the signed area of triangle abc (positive when counter-clockwise)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def incircle(a, b, c, d) -> int:
    """Positive if d lies inside the circle through a, b, c (abc counter-clockwise)."""
    adx, ady = a[0] - d[0], a[1] - d[1]
    bdx, bdy = b[0] - d[0], b[1] - d[1]
    cdx, cdy = c[0] - d[0], c[1] - d[1]
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    return (alift * (bdx * cdy - cdx * bdy)
            + blift * (cdx * ady - adx * cdy)
            + clift * (adx * bdy - bdx * ady))


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def sign_sqrt_sum(a: int, b: int, k: int) -> int:
    """Sign of ``a + b * sqrt(k)`` for integers with ``k >= 0``."""
    sa = _sign(a)
    sb = _sign(b) if k else 0
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with b^2 k
    return sa * _sign(a * a - b * b * k)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _sorted_family(edges: Iterable) -> list[tuple[int, ...]]:
    return sorted({tuple(sorted(e)) for e in edges if e}, key=lambda e: (len(e), e))


def _with_boundary_subsets(inside: Iterable[int], boundary: list[int]):
    inside = frozenset(inside)
    for r in range(len(boundary) + 1):
        for extra in combinations(boundary, r):
            s = inside.union(extra)
            if s:
                yield s


@dataclass(frozen=True)
class PointSet:
    """Integer points in the plane with general-position flags."""

    points: tuple[tuple[int, int], ...]
    no_three_collinear: bool = field(init=False)
    no_four_cocircular: bool = field(init=False)

    def __post_init__(self):
        pts = tuple((p[0], p[1]) for p in self.points)
        for p in pts:
            if not (_is_int(p[0]) and _is_int(p[1])):
                raise InputError(f"point {p} must have integer coordinates")
        if len(set(pts)) != len(pts):
            raise InputError("duplicate points")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "no_three_collinear", collinear_triple(pts) is None)
        object.__setattr__(self, "no_four_cocircular",
                           self.no_three_collinear and cocircular_quadruple(pts) is None)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]


def collinear_triple(pts):
    for i, j, k in combinations(range(len(pts)), 3):
        if orient(pts[i], pts[j], pts[k]) == 0:
            return (i, j, k)
    return None


def cocircular_quadruple(pts):
    for i, j, k, m in combinations(range(len(pts)), 4):
        if incircle(pts[i], pts[j], pts[k], pts[m]) == 0:
            return (i, j, k, m)
    return None


def as_point_set(points) -> PointSet:
    return points if isinstance(points, PointSet) else PointSet(tuple(points))


def convex_hull(points) -> list[int]:
    """Indices of the strict convex hull vertices, counter-clockwise."""
    pts = as_point_set(points).points
    order = sorted(range(len(pts)), key=lambda i: pts[i])
    if len(order) <= 2:
        return order

    def chain(seq):
        out: list[int] = []
        for i in seq:
            while len(out) >= 2 and orient(pts[out[-2]], pts[out[-1]], pts[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(reversed(order))
    return lower[:-1] + upper[:-1]


def in_convex_position(points) -> bool:
    pts = as_point_set(points)
    return len(convex_hull(pts)) == len(pts)


def build_interval_hypergraph(n: int) -> IntervalHypergraph:
    """Points 0..n-1 on a line with every discrete interval as a hyperedge."""
    if not _is_int(n) or n < 1:
        raise InputError("interval hypergraph needs n >= 1")
    return IntervalHypergraph(range(n))


def build_halfplane_hypergraph(points) -> Hypergraph:
    """Subsets cut off by closed halfplanes.

    Any cut can be moved until its boundary line passes through two points p,
    q; the cut is then the points strictly on one side plus any subset of
    {p, q}. So for every pair and both sides all four boundary choices are
    emitted, plus the full set.
    """
    pts = as_point_set(points)
    if not pts.no_three_collinear:
        raise DegenerateInput(f"collinear points {collinear_triple(pts.points)}")
    n = len(pts)
    edges: set = set()
    if n:
        edges.add(frozenset(range(n)))
    for i, j in combinations(range(n), 2):
        left, right = [], []
        for m in range(n):
            if m in (i, j):
                continue
            (left if orient(pts[i], pts[j], pts[m]) > 0 else right).append(m)
        for side in (left, right):
            edges.update(_with_boundary_subsets(side, [i, j]))
    return Hypergraph(n, _sorted_family(edges))


def build_disc_hypergraph(points) -> Hypergraph:
    """Subsets cut off by closed discs.

    Candidate boundary circles are the circumcircles of all triples and the
    diametral circles of all pairs; each contributes its strict interior
    together with every subset of the points on it. Singletons and the full
    set are always cut.
    """
    pts = as_point_set(points)
    if not pts.no_three_collinear:
        raise DegenerateInput(f"collinear points {collinear_triple(pts.points)}")
    if not pts.no_four_cocircular:
        raise DegenerateInput(f"cocircular points {cocircular_quadruple(pts.points)}")
    P = pts.points
    n = len(P)
    edges: set = {frozenset([v]) for v in range(n)}
    if n:
        edges.add(frozenset(range(n)))
    for i, j, k in combinations(range(n), 3):
        sgn = _sign(orient(P[i], P[j], P[k]))
        inside = []
        for m in range(n):
            if m in (i, j, k):
                continue
            if sgn * incircle(P[i], P[j], P[k], P[m]) > 0:
                inside.append(m)
        edges.update(_with_boundary_subsets(inside, [i, j, k]))
    for i, j in combinations(range(n), 2):
        p, q = P[i], P[j]
        inside, on = [], [i, j]
        for m in range(n):
            if m in (i, j):
                continue
            d = P[m]
            dot = (d[0] - p[0]) * (d[0] - q[0]) + (d[1] - p[1]) * (d[1] - q[1])
            if dot < 0:
                inside.append(m)
            elif dot == 0:
                on.append(m)
        edges.update(_with_boundary_subsets(inside, on))
    return Hypergraph(n, _sorted_family(edges))


@dataclass(frozen=True)
class DiscFamily:
    """Closed discs given by integer center and positive integer squared radius."""

    discs: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        discs = tuple((d[0], d[1], d[2]) for d in self.discs)
        for d in discs:
            if not all(_is_int(x) for x in d):
                raise InputError(f"disc {d} must have integer data")
            if d[2] <= 0:
                raise InputError(f"disc {d} must have a positive squared radius")
        if len(set(discs)) != len(discs):
            raise InputError("duplicate discs")
        object.__setattr__(self, "discs", discs)

    def __len__(self):
        return len(self.discs)

    def __getitem__(self, i):
        return self.discs[i]

    def contains(self, i: int, x, y, scale: int = 1) -> bool:
        """Whether the point (x/scale, y/scale) lies in disc i."""
        cx, cy, r2 = self.discs[i]
        dx, dy = x - scale * cx, y - scale * cy
        return dx * dx + dy * dy <= scale * scale * r2


def as_disc_family(discs) -> DiscFamily:
    return discs if isinstance(discs, DiscFamily) else DiscFamily(tuple(discs))


def circle_relation(a, b) -> str:
    """'cross', 'tangent', 'nested' or 'disjoint' for two discs (cx, cy, r2)."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    D = dx * dx + dy * dy
    s = D - a[2] - b[2]
    lhs, rhs = s * s, 4 * a[2] * b[2]
    if lhs < rhs:
        return "cross"
    if lhs == rhs:
        return "tangent"
    return "nested" if s < 0 else "disjoint"


def _crossing_sides(a, b, c):
    """Position of disc ``c`` relative to the two crossing points of circles a, b.

    Returns two signs (one per crossing point): negative when the point is
    strictly inside ``c``, zero on its boundary, positive outside.
    """
    dx, dy = b[0] - a[0], b[1] - a[1]
    D = dx * dx + dy * dy
    m = D + a[2] - b[2]
    K = 4 * D * a[2] - m * m
    wx, wy = a[0] - c[0], a[1] - c[1]
    ux, uy = 2 * D * wx + m * dx, 2 * D * wy + m * dy
    A = ux * ux + uy * uy + K * D - 4 * D * D * c[2]
    B = 2 * (-ux * dy + uy * dx)
    return sign_sqrt_sum(A, B, K), sign_sqrt_sum(A, -B, K)


def build_region_hypergraph(discs) -> Hypergraph:
    """Coverage sets of the faces of a disc arrangement.

    Every face touches either a crossing point of two circles or a circle that
    crosses nothing. Near a crossing point of circles i and j the four
    quadrants see the discs strictly containing the point plus any subset of
    {i, j}; around an isolated circle the two sides see the discs containing
    that circle, with and without the disc itself.
    """
    fam = as_disc_family(discs)
    D = fam.discs
    n = len(D)
    relation = {}
    for i, j in combinations(range(n), 2):
        rel = circle_relation(D[i], D[j])
        if rel == "tangent":
            raise DegenerateInput(f"discs {i} and {j} are tangent")
        relation[i, j] = relation[j, i] = rel
    edges: set = set()
    for i, j in combinations(range(n), 2):
        if relation[i, j] != "cross":
            continue
        deep = ([], [])
        for k in range(n):
            if k in (i, j):
                continue
            for side, sgn in enumerate(_crossing_sides(D[i], D[j], D[k])):
                if sgn == 0:
                    raise DegenerateInput(f"circles {i}, {j} and {k} share a point")
                if sgn < 0:
                    deep[side].append(k)
        for side in deep:
            edges.update(_with_boundary_subsets(side, [i, j]))
    for i in range(n):
        if any(relation[i, j] == "cross" for j in range(n) if j != i):
            continue
        around = [j for j in range(n) if j != i and relation[i, j] == "nested" and D[j][2] > D[i][2]]
        edges.update(_with_boundary_subsets(around, [i]))
    return Hypergraph(n, _sorted_family(edges))


def region_general_position(discs) -> str | None:
    """None when the family is accepted by :func:`build_region_hypergraph`, else the reason."""
    try:
        build_region_hypergraph(discs)
    except DegenerateInput as exc:
        return str(exc)
    return None


def random_point_set(n: int, seed: int, span: int = 30, cocircular_free: bool = True,
                     max_tries: int = 1000) -> PointSet:
    """Random integer points in ``[0, span]^2`` in general position."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        raw = set()
        while len(raw) < n:
            raw.add((rng.randint(0, span), rng.randint(0, span)))
        pts = PointSet(tuple(sorted(raw, key=lambda p: (rng.random(), p))))
        if pts.no_three_collinear and (pts.no_four_cocircular or not cocircular_free):
            return pts
    raise DegenerateInput(f"no general-position point set after {max_tries} tries")


def random_convex_point_set(n: int, seed: int, radius: int = 1000, max_tries: int = 1000) -> PointSet:
    """Random integer points near a circle, accepted only in strictly convex general position."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(n))
        raw = {(round(radius * math.cos(a)), round(radius * math.sin(a))) for a in angles}
        if len(raw) < n:
            continue
        pts = PointSet(tuple(sorted(raw, key=lambda p: (rng.random(), p))))
        if pts.no_three_collinear and in_convex_position(pts.points):
            return pts
    raise DegenerateInput(f"no convex point set after {max_tries} tries")


def random_disc_family(n: int, seed: int, span: int = 30, max_r: int = 10,
                       max_tries: int = 1000) -> DiscFamily:
    """Random integer discs in general position (no tangencies, no triple points)."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        raw = set()
        while len(raw) < n:
            r = rng.randint(2, max_r)
            raw.add((rng.randint(0, span), rng.randint(0, span), r * r + rng.randint(0, r)))
        fam = DiscFamily(tuple(sorted(raw, key=lambda d: (rng.random(), d))))
        if region_general_position(fam) is None:
            return fam
    raise DegenerateInput(f"no general-position disc family after {max_tries} tries")
