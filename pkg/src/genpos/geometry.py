"""Exact geometric primitives: points, hyperplanes, flats and predicates.

Coordinates are fractions.Fraction throughout, so degeneracy questions
(collinear? cohyperplanar? concurrent?) have exact yes/no answers.  All
values are immutable after construction; randomized operations take an
explicit seed and are deterministic given it.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    Vector,
    dot,
    frac,
    integerize,
    matrix_rank,
    determinant,
    nullspace,
    rref,
    vec_sub,
    vector,
)

Point = tuple[Fraction, ...]


def as_point(coords) -> Point:
    return vector(coords)


class CertificationBudgetExceeded(RuntimeError):
    """Raised when resampling fails to produce a certified generic map."""


@dataclass(frozen=True)
class Hyperplane:
    """Affine hyperplane {x : normal . x = offset} in canonical form.

    Canonical means: integer entries, gcd(normal + offset) = 1, and the
    first nonzero normal entry positive.  Two hyperplanes are equal as
    point sets iff they are equal as values, which makes deduplication a
    dictionary lookup.
    """

    normal: tuple[int, ...]
    offset: int

    @classmethod
    def from_coeffs(cls, normal, offset) -> "Hyperplane":
        coeffs = integerize(tuple(frac(x) for x in normal) + (frac(offset),))
        normal_part = coeffs[:-1]
        if all(x == 0 for x in normal_part):
            raise ValueError("hyperplane normal must be nonzero")
        lead = next(x for x in normal_part if x != 0)
        if lead < 0:
            coeffs = tuple(-x for x in coeffs)
        return cls(normal=coeffs[:-1], offset=coeffs[-1])

    @property
    def dim(self) -> int:
        return len(self.normal)

    def eval(self, p: Point) -> Fraction:
        return dot(self.normal, p) - self.offset

    def side(self, p: Point) -> int:
        v = self.eval(p)
        return (v > 0) - (v < 0)

    def contains(self, p: Point) -> bool:
        return self.eval(p) == 0


@dataclass(frozen=True)
class Flat:
    """Affine flat in canonical form: rref direction rows plus a basepoint
    whose pivot coordinates are zero.  Equality of flats as point sets is
    structural equality of the dataclass.
    """

    dim_flat: int
    basepoint: Point
    directions: tuple[Vector, ...]

    @classmethod
    def through(cls, pts) -> "Flat":
        pts = [as_point(p) for p in pts]
        if not pts:
            raise ValueError("need at least one point")
        base = pts[0]
        diffs = [vec_sub(p, base) for p in pts[1:]]
        rows, pivots = rref(diffs) if diffs else ([], [])
        b = list(base)
        for row, p in zip(rows, pivots):
            c = b[p]
            if c != 0:
                b = [x - c * y for x, y in zip(b, row)]
        return cls(dim_flat=len(rows), basepoint=tuple(b), directions=tuple(rows))

    def _reduce(self, v: Vector) -> Vector:
        v = list(v)
        for row in self.directions:
            p = next(i for i, x in enumerate(row) if x == 1)
            c = v[p]
            if c != 0:
                v = [x - c * y for x, y in zip(v, row)]
        return tuple(v)

    def contains_point(self, p) -> bool:
        return all(x == 0 for x in self._reduce(vec_sub(as_point(p), self.basepoint)))

    def contains_flat(self, other: "Flat") -> bool:
        if other.dim_flat > self.dim_flat:
            return False
        if not self.contains_point(other.basepoint):
            return False
        return all(all(x == 0 for x in self._reduce(d)) for d in other.directions)


@dataclass(frozen=True)
class PointSet:
    """A finite point set of fixed dimension, optionally carrying a declared
    bound ``ell`` on the number of points any hyperplane may contain."""

    dim: int
    points: tuple[Point, ...]
    ell: int | None = None

    @classmethod
    def of(cls, rows, ell: int | None = None) -> "PointSet":
        pts = tuple(as_point(r) for r in rows)
        if not pts:
            raise ValueError("point set must be nonempty")
        dim = len(pts[0])
        return cls(dim=dim, points=pts, ell=ell)

    def __post_init__(self):
        if any(len(p) != self.dim for p in self.points):
            raise ValueError("points have mixed dimensions")
        if len(set(self.points)) != len(self.points):
            raise ValueError("duplicate points")

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def subset(self, indices) -> "PointSet":
        return PointSet(dim=self.dim, points=tuple(self.points[i] for i in indices))


def orientation(pts) -> int:
    """Sign of the determinant of the homogeneous (d+1)x(d+1) matrix of
    d+1 points in dimension d; 0 iff the points are affinely dependent."""
    pts = [as_point(p) for p in pts]
    d = len(pts[0])
    if len(pts) != d + 1 or any(len(p) != d for p in pts):
        raise ValueError("orientation needs exactly d+1 points of dimension d")
    det = determinant([(Fraction(1),) + p for p in pts])
    return (det > 0) - (det < 0)


def affine_rank(pts) -> int:
    """Dimension of the affine hull (0 for a single point)."""
    pts = [as_point(p) for p in pts]
    if not pts:
        raise ValueError("affine_rank of empty point list")
    base = pts[0]
    return matrix_rank([vec_sub(p, base) for p in pts[1:]])


def is_general_position(ps: PointSet) -> bool:
    """True iff no hyperplane contains more than d points, i.e. every
    (d+1)-subset has full affine rank d."""
    d = ps.dim
    if len(ps) <= d:
        return True
    return all(
        affine_rank([ps.points[i] for i in idx]) == d
        for idx in itertools.combinations(range(len(ps)), d + 1)
    )


def dualize(ps: PointSet) -> list[Hyperplane]:
    """Point-hyperplane duality (a_1..a_d) -> {x_d = a_1 x_1 + ... +
    a_{d-1} x_{d-1} - a_d}.

    Incidence preserving: p lies on the dual of q iff q lies on the dual
    of p.  Points sharing their first d-1 coordinates map to hyperplanes
    parallel in the x_d direction.
    """
    if ps.dim < 2:
        raise ValueError("duality needs dimension >= 2")
    out = []
    for p in ps.points:
        normal = tuple(p[:-1]) + (Fraction(-1),)
        out.append(Hyperplane.from_coeffs(normal, p[-1]))
    return out


def hyperplane_through(pts) -> Hyperplane:
    """The unique hyperplane spanned by points of affine rank d-1."""
    pts = [as_point(p) for p in pts]
    base = pts[0]
    diffs = [vec_sub(p, base) for p in pts[1:]]
    kernel = nullspace(diffs)
    if len(kernel) != 1:
        raise ValueError("points do not span a unique hyperplane")
    normal = kernel[0]
    return Hyperplane.from_coeffs(normal, dot(normal, base))


def extend_flat_to_hyperplane(flat: Flat, dim: int) -> Hyperplane:
    """Some hyperplane containing the flat (canonical but otherwise
    arbitrary); used for certificate output on degenerate inputs."""
    if flat.dim_flat > dim - 1:
        raise ValueError("flat is not contained in any hyperplane")
    rows = list(flat.directions)
    unit = [tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)]
    for extra in unit:
        if len(rows) == dim - 1:
            break
        if matrix_rank(rows + [extra]) > len(rows):
            rows.append(extra)
    normal = nullspace(rows)[0]
    return Hyperplane.from_coeffs(normal, dot(normal, flat.basepoint))


def generic_projection(
    ps: PointSet, target_dim: int, seed, max_attempts: int = 64
) -> PointSet:
    """Project to ``target_dim`` by a random rational linear map, certified
    generic at this input: for every (d+1)-subset the image is affinely
    dependent iff the preimage has affine rank <= d-1.  Resamples until the
    exhaustive certificate passes.
    """
    m, d = ps.dim, target_dim
    if not (m >= d >= 1):
        raise ValueError("need source dim >= target dim >= 1")
    rng = random.Random(seed)
    n = len(ps)
    subsets = list(itertools.combinations(range(n), d + 1)) if n >= d + 1 else []
    pre_low = [
        affine_rank([ps.points[i] for i in idx]) <= d - 1 for idx in subsets
    ]
    for attempt in range(max_attempts):
        span = 10 * (attempt + 1)
        mat = [
            [Fraction(rng.randint(-span, span)) for _ in range(m)] for _ in range(d)
        ]
        images = [tuple(dot(row, p) for row in mat) for p in ps.points]
        if len(set(images)) != n:
            continue
        ok = all(
            (affine_rank([images[i] for i in idx]) <= d - 1) == low
            for idx, low in zip(subsets, pre_low)
        )
        if ok:
            return PointSet(dim=d, points=tuple(images))
    raise CertificationBudgetExceeded(
        f"no certified generic projection found in {max_attempts} attempts"
    )
