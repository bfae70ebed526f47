"""Open convex cones with their linear-automorphism Lie algebras.

A cone is described by a basis of the Lie algebra g(Omega) of its linear
automorphism group, an interior point, and an exact boundary description
(product of polyhedral and Lorentzian factors). The catalog covers the
homogeneous cones without lines in dimensions up to four: the orthants, the
three- and four-dimensional Lorentz cones, and the mixed Lorentz-times-ray
cone.

Custom cones are accepted with a user-supplied basis and are trusted: checking
that a given basis really spans the full automorphism algebra of the cone is
out of scope (the basis is taken as input data).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .errors import ValidationError
from .linalg import Matrix, from_real_rows


class Region(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class PolyhedralFactor:
    """Intersection of strict half spaces: all functionals positive."""

    functionals: tuple[tuple[Fraction, ...], ...]

    def classify(self, x: Sequence[Fraction]) -> Region:
        strict = True
        for f in self.functionals:
            v = sum(a * b for a, b in zip(f, x))
            if v < 0:
                return Region.OUTSIDE
            if v == 0:
                strict = False
        return Region.INTERIOR if strict else Region.BOUNDARY


@dataclass(frozen=True)
class LorentzFactor:
    """x[c0]^2 - sum of squares over the other coords positive, x[c0] positive."""

    coords: tuple[int, ...]

    def classify(self, x: Sequence[Fraction]) -> Region:
        head = x[self.coords[0]]
        q = head * head
        for c in self.coords[1:]:
            q -= x[c] * x[c]
        if q < 0 or head < 0:
            return Region.OUTSIDE
        if q > 0 and head > 0:
            return Region.INTERIOR
        return Region.BOUNDARY


BoundaryFactor = Union[PolyhedralFactor, LorentzFactor]


def _frac_vec(v: Sequence[Union[int, Fraction]]) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class ConeSpec:
    name: str
    k: int
    g_basis: tuple[Matrix, ...]
    interior_point: tuple[Fraction, ...]
    boundary: tuple[BoundaryFactor, ...]
    annihilators: tuple[tuple[Fraction, ...], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValidationError("cone dimension must be at least 1")
        if len(self.interior_point) != self.k:
            raise ValidationError("interior point has wrong length")
        for m in self.g_basis:
            if (m.nrows, m.ncols) != (self.k, self.k):
                raise ValidationError("g_basis matrices must be k x k")
            if not m.is_real():
                raise ValidationError("g_basis matrices must be real")
        basis_rows = [m.vectorize() for m in self.g_basis]
        stacked = Matrix.from_rows(basis_rows) if basis_rows else None
        if stacked is None or stacked.rank() != len(self.g_basis):
            raise ValidationError("g_basis is linearly dependent or empty")
        ident = Matrix.identity(self.k).vectorize()
        with_id = Matrix.from_rows(basis_rows + [list(ident)])
        if with_id.rank() != stacked.rank():
            raise ValidationError("g_basis must contain the scalar matrices in its span")
        if not self.annihilators:
            anns = tuple(
                tuple(x.re for x in v) for v in stacked.nullspace_basis()
            )
            object.__setattr__(self, "annihilators", anns)
        if len(self.annihilators) != self.k * self.k - len(self.g_basis):
            raise ValidationError("annihilator count mismatch")
        for a in self.annihilators:
            for m in self.g_basis:
                pair = sum(c * x.re for c, x in zip(a, m.vectorize()))
                if pair != 0:
                    raise ValidationError("annihilator does not kill g_basis")
        if classify_point(self, self.interior_point) is not Region.INTERIOR:
            raise ValidationError("interior point is not interior")

    @property
    def dim_g(self) -> int:
        return len(self.g_basis)


def classify_point(cone: ConeSpec, x: Sequence[Union[int, Fraction]]) -> Region:
    """Exact location of a point relative to the closed cone.

    The cone is a product of its boundary factors, so the point is interior
    exactly when it is interior for all factors, and on the boundary when it
    lies in every closure while touching at least one factor boundary.
    """
    if len(x) != cone.k:
        raise ValidationError("point has wrong dimension")
    xx = _frac_vec(x)
    regions = [f.classify(xx) for f in cone.boundary]
    if any(r is Region.OUTSIDE for r in regions):
        return Region.OUTSIDE
    if all(r is Region.INTERIOR for r in regions):
        return Region.INTERIOR
    return Region.BOUNDARY


def contains_in_closure(cone: ConeSpec, x: Sequence[Union[int, Fraction]]) -> Region:
    """Alias for :func:`classify_point`; kept for call-site readability."""
    return classify_point(cone, x)


def membership_constraints(cone: ConeSpec) -> Matrix:
    """Annihilator functionals stacked as a matrix on row-major vectorized k x k matrices.

    A real matrix M lies in span(g_basis) exactly when this matrix times
    vec(M) vanishes.
    """
    if not cone.annihilators:
        return Matrix.zeros(0, cone.k * cone.k)
    return from_real_rows(cone.annihilators)


def in_g_omega(cone: ConeSpec, m: Matrix) -> bool:
    if (m.nrows, m.ncols) != (cone.k, cone.k):
        raise ValidationError("matrix has wrong shape")
    if not m.is_real():
        return False
    vec = [x.re for x in m.vectorize()]
    return all(
        sum(c * x for c, x in zip(a, vec)) == 0 for a in cone.annihilators
    )


def isotropy_bound(k: int) -> Fraction:
    """Dimension cap for g(Omega) of a k-dimensional cone without lines."""
    if k < 1:
        raise ValidationError("k must be at least 1")
    return Fraction(k * k, 2) - Fraction(k, 2) + 1


def _unit(k: int, i: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(k))


def _e_matrix(k: int, i: int, j: int) -> Matrix:
    return from_real_rows(
        [[1 if (r, c) == (i, j) else 0 for c in range(k)] for r in range(k)]
    )


def half_line() -> ConeSpec:
    """The positive ray in R^1; automorphisms are the positive scalars."""
    return ConeSpec(
        name="ray",
        k=1,
        g_basis=(from_real_rows([[1]]),),
        interior_point=(Fraction(1),),
        boundary=(PolyhedralFactor(((Fraction(1),),)),),
    )


def orthant(k: int) -> ConeSpec:
    """Positive orthant in R^k; its automorphism algebra is the diagonal matrices."""
    if k == 1:
        return half_line()
    return ConeSpec(
        name=f"orthant{k}",
        k=k,
        g_basis=tuple(_e_matrix(k, i, i) for i in range(k)),
        interior_point=tuple(Fraction(1) for _ in range(k)),
        boundary=(PolyhedralFactor(tuple(_unit(k, i) for i in range(k))),),
    )


def _lorentz3_generators() -> tuple[Matrix, ...]:
    ident = Matrix.identity(3)
    p = from_real_rows([[0, 1, 0], [1, 0, 0], [0, 0, 0]])
    q = from_real_rows([[0, 0, 1], [0, 0, 0], [1, 0, 0]])
    r = from_real_rows([[0, 0, 0], [0, 0, 1], [0, -1, 0]])
    return (ident, p, q, r)


def lorentz3() -> ConeSpec:
    """Three-dimensional Lorentz cone; scalars plus the (1,2) pseudo-orthogonal algebra."""
    return ConeSpec(
        name="lorentz3",
        k=3,
        g_basis=_lorentz3_generators(),
        interior_point=(Fraction(1), Fraction(0), Fraction(0)),
        boundary=(LorentzFactor((0, 1, 2)),),
    )


def lorentz4() -> ConeSpec:
    """Four-dimensional Lorentz cone; scalars plus the (1,3) pseudo-orthogonal algebra."""
    gens = [Matrix.identity(4)]
    for j in (1, 2, 3):
        gens.append(_e_matrix(4, 0, j) + _e_matrix(4, j, 0))
    for i, j in ((1, 2), (1, 3), (2, 3)):
        gens.append(_e_matrix(4, i, j) - _e_matrix(4, j, i))
    return ConeSpec(
        name="lorentz4",
        k=4,
        g_basis=tuple(gens),
        interior_point=(Fraction(1), Fraction(0), Fraction(0), Fraction(0)),
        boundary=(LorentzFactor((0, 1, 2, 3)),),
    )


def lorentz3_times_ray() -> ConeSpec:
    """Product of the 3-dimensional Lorentz cone with a ray, block-diagonal algebra."""

    def embed(m: Matrix) -> Matrix:
        rows = [[m.entry(i, j).re for j in range(3)] + [0] for i in range(3)]
        rows.append([0, 0, 0, 0])
        return from_real_rows(rows)

    gens = tuple(embed(m) for m in _lorentz3_generators()) + (_e_matrix(4, 3, 3),)
    return ConeSpec(
        name="lorentz3xray",
        k=4,
        g_basis=gens,
        interior_point=(Fraction(1), Fraction(0), Fraction(0), Fraction(1)),
        boundary=(
            LorentzFactor((0, 1, 2)),
            PolyhedralFactor((_unit(4, 3),)),
        ),
    )


_CATALOG = {
    "omega1": lambda: _renamed(orthant(2), "omega1"),
    "omega2": lambda: _renamed(orthant(3), "omega2"),
    "omega3": lambda: _renamed(lorentz3(), "omega3"),
    "omega4": lambda: _renamed(orthant(4), "omega4"),
    "omega5": lambda: _renamed(lorentz3_times_ray(), "omega5"),
    "omega6": lambda: _renamed(lorentz4(), "omega6"),
}

CATALOG_IDS = tuple(sorted(_CATALOG))


def _renamed(cone: ConeSpec, name: str) -> ConeSpec:
    return ConeSpec(
        name=name,
        k=cone.k,
        g_basis=cone.g_basis,
        interior_point=cone.interior_point,
        boundary=cone.boundary,
        annihilators=cone.annihilators,
    )


def catalog_cone(cone_id: str) -> ConeSpec:
    key = cone_id.strip().lower()
    if key not in _CATALOG:
        raise ValidationError(
            f"unknown catalog cone {cone_id!r}; expected one of {', '.join(CATALOG_IDS)}"
        )
    return _CATALOG[key]()
