"""Polynomial vector fields realizing the graded components, with exact brackets.

Fields live on C^n with coordinates z_1..z_k, w_1..w_m; every component is a
polynomial of total degree at most two with Gaussian-rational coefficients.
The Euler field weights z by one and w by one half, and each materialized
generator is an exact eigenvector of its adjoint action.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ValidationError
from .graded import GradedSolutions, SiegelDomainSpec
from .linalg import GR_I, GR_ONE, GR_ZERO, GaussianRational, in_span
from .poly import Polynomial

GRADES = (Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1))


@dataclass(frozen=True)
class PolyVectorField:
    n: int
    components: tuple[Polynomial, ...]
    grade: Optional[Fraction] = None
    label: str = ""

    def __post_init__(self) -> None:
        if len(self.components) != self.n:
            raise ValidationError("need one component per coordinate")
        for p in self.components:
            if p.nvars != self.n:
                raise ValidationError("component variable count mismatch")

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components)

    def scale(self, c) -> "PolyVectorField":
        return PolyVectorField(self.n, tuple(p * c for p in self.components), self.grade, self.label)

    def __sub__(self, other: "PolyVectorField") -> "PolyVectorField":
        return PolyVectorField(
            self.n, tuple(a - b for a, b in zip(self.components, other.components))
        )

    def format(self, names: Sequence[str]) -> str:
        return "(" + ", ".join(p.format(names) for p in self.components) + ")"

    def __str__(self) -> str:
        return self.format(_default_names(self.n, self.n))


def _default_names(n: int, k: int) -> list[str]:
    return [f"z{i+1}" for i in range(k)] + [f"w{i+1}" for i in range(n - k)]


def coordinate_names(spec: SiegelDomainSpec) -> list[str]:
    return _default_names(spec.n, spec.k)


def euler_field(spec: SiegelDomainSpec) -> PolyVectorField:
    """z . d/dz + (1/2) w . d/dw, the grading field."""
    n, k = spec.n, spec.k
    comps = []
    for i in range(n):
        var = Polynomial.variable(n, i)
        comps.append(var if i < k else var * Fraction(1, 2))
    return PolyVectorField(n, tuple(comps), Fraction(0), "euler")


def _complex_basis(m: int) -> list[list[GaussianRational]]:
    out = []
    for i in range(m):
        e = [GR_ZERO] * m
        e[i] = GR_ONE
        out.append(e)
        ie = [GR_ZERO] * m
        ie[i] = GR_I
        out.append(ie)
    return out


def materialize(spec: SiegelDomainSpec, sols: GradedSolutions) -> tuple[PolyVectorField, ...]:
    """Explicit generators for all five graded components, in weight order."""
    n, k, m = spec.n, spec.k, spec.m
    comps = spec.form.components
    zero = Polynomial.zero(n)
    fields: list[PolyVectorField] = []

    # weight -1: constant translations of the z-block
    for t in range(k):
        parts = [zero] * n
        parts[t] = Polynomial.constant(n, 1)
        fields.append(PolyVectorField(n, tuple(parts), Fraction(-1), f"g-1[{t}]"))

    # weight -1/2: 2i H(b, w) . d/dz + b . d/dw over the coordinate b's
    two_i = GR_I + GR_I
    for idx, b in enumerate(_complex_basis(m)):
        parts = [zero] * n
        for t in range(k):
            acc = zero
            for l in range(m):
                coeff = GR_ZERO
                for v in range(m):
                    coeff = coeff + b[v].conjugate() * comps[t].entry(v, l)
                if not coeff.is_zero():
                    acc = acc + Polynomial.variable(n, k + l) * (two_i * coeff)
            parts[t] = acc
        for l in range(m):
            if not b[l].is_zero():
                parts[k + l] = Polynomial.constant(n, b[l])
        fields.append(PolyVectorField(n, tuple(parts), Fraction(-1, 2), f"g-1/2[{idx}]"))

    # weight 0: (Az) . d/dz + (Bw) . d/dw
    for idx, (a_mat, b_mat) in enumerate(sols.g0.basis):
        parts = []
        for t in range(k):
            acc = zero
            for l in range(k):
                if not a_mat.entry(t, l).is_zero():
                    acc = acc + Polynomial.variable(n, l) * a_mat.entry(t, l)
            parts.append(acc)
        for l in range(m):
            acc = zero
            for p in range(m):
                if not b_mat.entry(l, p).is_zero():
                    acc = acc + Polynomial.variable(n, k + p) * b_mat.entry(l, p)
            parts.append(acc)
        fields.append(PolyVectorField(n, tuple(parts), Fraction(0), f"g0[{idx}]"))

    # weight 1/2: 2i H(Phi(conj z), w) . d/dz + (Phi z + c(w,w)) . d/dw
    for idx, el in enumerate(sols.g_half.basis):
        parts = []
        for t in range(k):
            acc = zero
            for i in range(k):
                for l in range(m):
                    coeff = GR_ZERO
                    for v in range(m):
                        coeff = coeff + el.phi.entry(v, i).conjugate() * comps[t].entry(v, l)
                    coeff = two_i * coeff
                    if not coeff.is_zero():
                        acc = acc + (
                            Polynomial.variable(n, i) * Polynomial.variable(n, k + l)
                        ) * coeff
            parts.append(acc)
        for l in range(m):
            acc = zero
            for t in range(k):
                if not el.phi.entry(l, t).is_zero():
                    acc = acc + Polynomial.variable(n, t) * el.phi.entry(l, t)
            for i in range(m):
                for j in range(i, m):
                    coeff = el.c.coefficient(l, i, j)
                    if coeff.is_zero():
                        continue
                    mult = 1 if i == j else 2
                    acc = acc + (
                        Polynomial.variable(n, k + i) * Polynomial.variable(n, k + j)
                    ) * (coeff * mult)
            parts.append(acc)
        fields.append(PolyVectorField(n, tuple(parts), Fraction(1, 2), f"g1/2[{idx}]"))

    # weight 1: a(z,z) . d/dz + b(z,w) . d/dw
    for idx, el in enumerate(sols.g_one.basis):
        parts = []
        for l in range(k):
            acc = zero
            for i in range(k):
                for j in range(i, k):
                    coeff = el.a.coefficient(l, i, j)
                    if coeff.is_zero():
                        continue
                    mult = 1 if i == j else 2
                    acc = acc + (
                        Polynomial.variable(n, i) * Polynomial.variable(n, j)
                    ) * (coeff * mult)
            parts.append(acc)
        for l in range(m):
            acc = zero
            for t in range(k):
                for p in range(m):
                    coeff = el.b.coefficient(l, t, p)
                    if not coeff.is_zero():
                        acc = acc + (
                            Polynomial.variable(n, t) * Polynomial.variable(n, k + p)
                        ) * coeff
            parts.append(acc)
        fields.append(PolyVectorField(n, tuple(parts), Fraction(1), f"g1[{idx}]"))

    return tuple(fields)


def bracket(x: PolyVectorField, y: PolyVectorField) -> PolyVectorField:
    """Holomorphic vector-field bracket [X, Y] = X(Y) - Y(X), exact."""
    if x.n != y.n:
        raise ValidationError("fields live on different spaces")
    n = x.n
    comps = []
    for c in range(n):
        acc = Polynomial.zero(n)
        for u in range(n):
            acc = acc + x.components[u] * y.components[c].diff(u)
            acc = acc - y.components[u] * x.components[c].diff(u)
        comps.append(acc)
    grade = None
    if x.grade is not None and y.grade is not None:
        grade = x.grade + y.grade
    return PolyVectorField(n, tuple(comps), grade if grade in GRADES else None)


def _real_coefficient_vectors(fields: Sequence[PolyVectorField]):
    keys: set = set()
    for f in fields:
        for c_idx, p in enumerate(f.components):
            for mono, _ in p.terms:
                keys.add((c_idx, mono))
    ordered = sorted(keys)
    vectors = []
    for f in fields:
        vec = []
        for c_idx, mono in ordered:
            coeff = f.components[c_idx].coefficient(mono)
            vec.append(GaussianRational(coeff.re, Fraction(0)))
            vec.append(GaussianRational(coeff.im, Fraction(0)))
        vectors.append(vec)
    return vectors


def in_real_span(basis: Sequence[PolyVectorField], candidate: PolyVectorField) -> bool:
    """Membership of a field in the real linear span of the given fields."""
    if candidate.is_zero():
        return True
    vectors = _real_coefficient_vectors(list(basis) + [candidate])
    width = len(vectors[-1])
    return in_span(vectors[:-1], vectors[-1], width)


@dataclass(frozen=True)
class GradingReport:
    passed: bool
    failures: tuple[str, ...]
    eigen_checked: int
    pairs_checked: int


def check_grading(spec: SiegelDomainSpec, fields: Sequence[PolyVectorField]) -> GradingReport:
    """Verify the eigenvalue relations and bracket closure of a generator set.

    Each labeled field X of weight nu must satisfy [euler, X] = nu X exactly,
    and the bracket of two generators must land in the real span of the
    generators of the summed weight whenever that weight is one of the five;
    brackets falling outside the weight range are not checked.
    """
    euler = euler_field(spec)
    failures = []
    graded = [f for f in fields if f.grade is not None]
    eigen = 0
    for f in graded:
        eigen += 1
        if not (bracket(euler, f) - f.scale(f.grade)).is_zero():
            failures.append(f"eigenvalue relation fails for {f.label or 'unlabeled field'}")
    by_grade: dict[Fraction, list[PolyVectorField]] = {}
    for f in graded:
        by_grade.setdefault(f.grade, []).append(f)
    pairs = 0
    items = sorted(by_grade.items())
    for gi, (mu, group_mu) in enumerate(items):
        for nu, group_nu in items[gi:]:
            target_grade = mu + nu
            if target_grade not in GRADES:
                continue
            target = by_grade.get(target_grade, [])
            for f1 in group_mu:
                for f2 in group_nu:
                    if f1 is f2:
                        continue
                    pairs += 1
                    br = bracket(f1, f2)
                    if not in_real_span(target, br):
                        failures.append(
                            f"[{f1.label}, {f2.label}] escapes the weight-{target_grade} span"
                        )
    return GradingReport(not failures, tuple(failures), eigen, pairs)


def jacobi_defect(x: PolyVectorField, y: PolyVectorField, z: PolyVectorField) -> PolyVectorField:
    """[x,[y,z]] + [y,[z,x]] + [z,[x,y]]; zero for honest vector fields."""
    return PolyVectorField(
        x.n,
        tuple(
            a + b + c
            for a, b, c in zip(
                bracket(x, bracket(y, z)).components,
                bracket(y, bracket(z, x)).components,
                bracket(z, bracket(x, y)).components,
            )
        ),
    )
