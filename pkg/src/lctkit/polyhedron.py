"""Exact geometry of Newton polyhedra of monomial ideals.

A Newton polyhedron is stored as the nonnegative orthant cut by a finite
list of half-spaces ``a . x >= b`` with ``a >= 0`` coprime integers and
``b > 0``.  Facets are found by brute force over ``n``-subsets of the
homogenized generators and coordinate rays, which is exact and fast enough
for the small dimensions this package targets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    InfiniteColength,
    InfiniteThreshold,
    NegativeCoordinate,
    ZeroDirection,
)
from .ideal import ExponentVector, MonomialIdeal

Rational = Fraction

_INT64_LIMIT = 2**62


@dataclass(frozen=True, order=True)
class HalfSpace:
    """The closed half-space ``normal . x >= offset``."""

    normal: tuple[int, ...]
    offset: int

    def evaluate(self, p: Sequence) -> Fraction | int:
        return sum(a * c for a, c in zip(self.normal, p))

    def contains(self, p: Sequence) -> bool:
        return self.evaluate(p) >= self.offset

    def to_dict(self) -> dict:
        return {"normal": list(self.normal), "offset": self.offset}


def _permutation_parities(k: int) -> list[tuple[tuple[int, ...], int]]:
    out = []
    for perm in permutations(range(k)):
        inversions = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        out.append((perm, -1 if inversions % 2 else 1))
    return out


def _batched_det(M: np.ndarray) -> np.ndarray:
    """Exact determinants of a stack of small integer matrices (Leibniz)."""
    k = M.shape[-1]
    if k == 0:
        return np.ones(M.shape[0], dtype=M.dtype)
    total = None
    for perm, sign in _permutation_parities(k):
        term = M[:, 0, perm[0]]
        for row in range(1, k):
            term = term * M[:, row, perm[row]]
        term = term if sign > 0 else -term
        total = term if total is None else total + term
    return total


def _null_vectors(M: np.ndarray) -> np.ndarray:
    """Generalized cross products of a stack of ``k x (k+1)`` matrices.

    Row ``j`` of the result is orthogonal to every row of ``M[j]``; it is
    zero exactly when the rows of ``M[j]`` are linearly dependent.
    """
    k1 = M.shape[-1]
    cols = []
    for j in range(k1):
        minor = np.delete(M, j, axis=2)
        d = _batched_det(minor)
        cols.append(d if j % 2 == 0 else -d)
    return np.stack(cols, axis=1)


def _primitive(vec: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for c in vec:
        g = math.gcd(g, int(c))
    return tuple(int(c) // g for c in vec) if g > 1 else tuple(int(c) for c in vec)


def _dtype_for(max_abs: int, k: int):
    # bound on |a . x| for a built from k x k minors of entries <= max_abs
    bound = (k + 1) * math.factorial(k) * max(max_abs, 1) ** (k + 1)
    return np.int64 if bound < _INT64_LIMIT else object


_DIRECT_LIMIT = 12


def enumerate_facets(generators: Sequence[ExponentVector], n: int) -> tuple[HalfSpace, ...]:
    """Facets with positive offset of ``conv(generators) + R^n_{>=0}``.

    Large generator sets are handled by growing a set of known vertices:
    facets of the partial hull that some generator violates are repaired by
    adding the lexicographically smallest generator minimizing that facet's
    normal, which is always a vertex.  The loop stops once every generator
    satisfies every facet, so the answer is exact.
    """
    generators = list(generators)
    if len(generators) <= _DIRECT_LIMIT:
        return _facets_brute_force(generators, n)
    known = {min(generators, key=lambda g: (sum(g), g))}
    for i in range(n):
        known.add(min(generators, key=lambda g: (g[i], sum(g), g)))
    while True:
        facets = _facets_brute_force(sorted(known), n)
        added = False
        for f in facets:
            values = [f.evaluate(g) for g in generators]
            low = min(values)
            if low < f.offset:
                best = min(g for g, v in zip(generators, values) if v == low)
                if best not in known:
                    known.add(best)
                    added = True
        if not added:
            return facets


def _facets_brute_force(generators: Sequence[ExponentVector], n: int) -> tuple[HalfSpace, ...]:
    gens = np.array(generators, dtype=object)
    m = len(generators)
    dtype = _dtype_for(max(max(g) for g in generators), n)
    lifted = np.zeros((m + n, n + 1), dtype=dtype)
    lifted[:m, :n] = gens
    lifted[:m, n] = 1
    lifted[m:, :n] = np.eye(n, dtype=np.int64)
    gen_rows = lifted[:m]

    found: set[HalfSpace] = set()
    combos = combinations(range(m + n), n)
    chunk = 20000
    while True:
        batch = [c for _, c in zip(range(chunk), combos)]
        if not batch:
            break
        # every facet contains a vertex, so skip subsets made only of rays
        batch = [c for c in batch if c[0] < m]
        if not batch:
            continue
        idx = np.array(batch, dtype=np.int64)
        C = _null_vectors(lifted[idx])
        normals = C[:, :n]
        # sign of each candidate so that generators land on the >= side
        vals = C @ gen_rows.T
        pos = np.all(vals >= 0, axis=1) & np.all(normals >= 0, axis=1)
        neg = np.all(vals <= 0, axis=1) & np.all(normals <= 0, axis=1)
        nonzero = np.any(normals != 0, axis=1)
        for j in np.nonzero((pos | neg) & nonzero)[0]:
            c = C[j] if pos[j] else -C[j]
            offset = -int(c[n])
            if offset <= 0:
                continue
            prim = _primitive(list(c[:n]) + [offset])
            found.add(HalfSpace(prim[:n], prim[n]))
    return tuple(sorted(found))


def _rank(rows: list[Sequence]) -> int:
    mat = [[Fraction(c) for c in r] for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                f = mat[i][col] / mat[rank][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def polytope_volume(points: Sequence[Sequence], d: int) -> Fraction:
    """Exact ``d``-dimensional volume of the convex hull of ``points`` in ``R^d``."""
    pts = sorted({tuple(Fraction(c) for c in p) for p in points})
    if d == 0:
        return Fraction(1)
    if len(pts) <= d:
        return Fraction(0)
    if d == 1:
        return pts[-1][0] - pts[0][0]
    if d == 2:
        return _polygon_area(pts)
    # pyramids from the centroid over each facet, facets measured in projection
    centroid = tuple(sum(p[i] for p in pts) / len(pts) for i in range(d))
    facets: dict[tuple, list] = {}
    for subset in combinations(range(len(pts)), d):
        p0 = pts[subset[0]]
        diffs = [[a - b for a, b in zip(pts[i], p0)] for i in subset[1:]]
        normal = _cross(diffs)
        if not any(normal):
            continue
        offset = sum(a * b for a, b in zip(normal, p0))
        side = [sum(a * b for a, b in zip(normal, q)) - offset for q in pts]
        if all(s >= 0 for s in side) or all(s <= 0 for s in side):
            key = _canonical_plane(normal, offset)
            if key not in facets:
                facets[key] = [q for q, s in zip(pts, side) if s == 0]
    total = Fraction(0)
    for (normal, offset), on_facet in facets.items():
        k = max(range(d), key=lambda i: abs(normal[i]))
        height = abs(sum(a * c for a, c in zip(normal, centroid)) - offset)
        proj = [q[:k] + q[k + 1:] for q in on_facet]
        total += height * polytope_volume(proj, d - 1) / (d * abs(normal[k]))
    return total


def _polygon_area(pts: list[tuple]) -> Fraction:
    # Andrew's monotone chain on sorted points, then the shoelace formula
    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        return Fraction(0)
    twice = sum(
        hull[i][0] * hull[(i + 1) % len(hull)][1] - hull[(i + 1) % len(hull)][0] * hull[i][1]
        for i in range(len(hull))
    )
    return abs(Fraction(twice)) / 2


def _cross(rows: list[list[Fraction]]) -> list[Fraction]:
    d = len(rows) + 1
    out = []
    for j in range(d):
        minor = [r[:j] + r[j + 1:] for r in rows]
        det = _det(minor)
        out.append(det if j % 2 == 0 else -det)
    return out


def _det(M: list[list[Fraction]]) -> Fraction:
    k = len(M)
    if k == 0:
        return Fraction(1)
    A = [list(r) for r in M]
    det = Fraction(1)
    for col in range(k):
        pivot = next((i for i in range(col, k) if A[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            A[col], A[pivot] = A[pivot], A[col]
            det = -det
        det *= A[col][col]
        for i in range(col + 1, k):
            f = A[i][col] / A[col][col]
            if f:
                A[i] = [a - f * b for a, b in zip(A[i], A[col])]
    return det


def _canonical_plane(normal: list[Fraction], offset: Fraction) -> tuple:
    # dividing by the signed leading entry identifies n and -n
    scale = next(c for c in normal if c != 0)
    return tuple(c / scale for c in normal), offset / scale


def _as_point(p: Sequence, n: int) -> tuple[Fraction, ...]:
    if len(p) != n:
        raise DimensionMismatch(f"point has {len(p)} coordinates, polyhedron lives in R^{n}")
    point = tuple(Fraction(c) for c in p)
    if any(c < 0 for c in point):
        raise NegativeCoordinate(f"point {p} has a negative coordinate")
    return point


class NewtonPolyhedron:
    """Newton polyhedron of a monomial ideal, with its facets precomputed."""

    __slots__ = ("dimension", "vertex_generators", "facets", "axis_intercepts", "_vertices")

    def __init__(self, ideal: MonomialIdeal):
        n = ideal.dimension
        self.dimension = n
        self.vertex_generators = ideal.generators
        self.facets = enumerate_facets(ideal.generators, n)
        self.axis_intercepts = _axis_intercepts(ideal.generators, n)
        self._vertices = None

    def __repr__(self):
        return f"NewtonPolyhedron(dimension={self.dimension}, facets={len(self.facets)})"

    @property
    def vertices(self) -> tuple[ExponentVector, ...]:
        """Generators that are vertices of the polyhedron."""
        if self._vertices is None:
            n = self.dimension
            verts = []
            for g in self.vertex_generators:
                tight = [f.normal for f in self.facets if f.evaluate(g) == f.offset]
                tight += [tuple(int(i == j) for j in range(n)) for i in range(n) if g[i] == 0]
                if len(tight) >= n and _rank(tight) == n:
                    verts.append(g)
            self._vertices = tuple(verts)
        return self._vertices

    def contains(self, p: Sequence) -> bool:
        point = _as_point(p, self.dimension)
        return all(f.contains(point) for f in self.facets)

    def has_finite_colength(self) -> bool:
        return all(r is not None for r in self.axis_intercepts)

    def equals(self, other: NewtonPolyhedron) -> bool:
        if self.dimension != other.dimension:
            raise DimensionMismatch("polyhedra live in different dimensions")
        return all(other.contains(g) for g in self.vertex_generators) and all(
            self.contains(g) for g in other.vertex_generators
        )

    def __eq__(self, other):
        if not isinstance(other, NewtonPolyhedron):
            return NotImplemented
        return self.dimension == other.dimension and self.equals(other)

    def __hash__(self):
        # facets of a full-dimensional polyhedron are canonical
        return hash((self.dimension, self.facets))

    def ray_threshold(self, v: Sequence) -> Fraction:
        """Smallest ``t > 0`` with ``t * v`` in the polyhedron."""
        direction = _as_point(v, self.dimension)
        if not any(direction):
            raise ZeroDirection("direction vector is zero")
        best = Fraction(0)
        for f in self.facets:
            dot = f.evaluate(direction)
            if dot == 0:
                raise InfiniteThreshold(f"ray {tuple(v)} never crosses facet {f}")
            best = max(best, Fraction(f.offset) / dot)
        return best

    def covolume(self) -> Fraction:
        """Volume of the part of the orthant lying outside the polyhedron."""
        if not self.has_finite_colength():
            raise InfiniteColength("polyhedron misses a coordinate axis")
        n = self.dimension
        total = Fraction(0)
        for f in self.facets:
            on_facet = [g for g in self.vertex_generators if f.evaluate(g) == f.offset]
            k = max(range(n), key=lambda i: f.normal[i])
            proj = [g[:k] + g[k + 1:] for g in on_facet]
            total += Fraction(f.offset, n * f.normal[k]) * polytope_volume(proj, n - 1)
        return total

    def to_dict(self) -> dict:
        return {
            "facets": [f.to_dict() for f in self.facets],
            "intercepts": list(self.axis_intercepts),
        }


def _axis_intercepts(generators, n: int) -> tuple[int | None, ...]:
    out: list[int | None] = [None] * n
    for g in generators:
        support = [i for i, c in enumerate(g) if c]
        if len(support) == 1:
            i = support[0]
            if out[i] is None or g[i] < out[i]:
                out[i] = g[i]
    return tuple(out)


@lru_cache(maxsize=4096)
def from_ideal(ideal: MonomialIdeal) -> NewtonPolyhedron:
    return NewtonPolyhedron(ideal)


def contains(P: NewtonPolyhedron, p: Sequence) -> bool:
    return P.contains(p)


def axis_intercepts(P: NewtonPolyhedron) -> tuple[int | None, ...]:
    return P.axis_intercepts


def has_finite_colength(P: NewtonPolyhedron) -> bool:
    return P.has_finite_colength()


def equals(P: NewtonPolyhedron, Q: NewtonPolyhedron) -> bool:
    return P.equals(Q)


def ray_threshold(P: NewtonPolyhedron, v: Sequence) -> Fraction:
    return P.ray_threshold(v)


def covolume(P: NewtonPolyhedron) -> Fraction:
    return P.covolume()
