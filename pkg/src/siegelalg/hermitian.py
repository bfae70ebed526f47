"""Vector-valued Hermitian form families and the cone-compatibility check.

A family holds k Hermitian m x m matrices H_1..H_k; the form evaluates as
H(w, w')_j = conj(w)^T H_j w', anti-linear in the first slot. The family is
compatible with a cone when H(w, w) lies in the closed cone minus the origin
for every nonzero w.

Positive semidefiniteness is decided exactly through the characteristic
polynomial: det(tI - M) has real coefficients for Hermitian M, and M is PSD
precisely when those coefficients weakly alternate in sign. No eigenvalues are
ever computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .cones import ConeSpec, LorentzFactor, Region, classify_point
from .errors import NoCombinationFoundError, ValidationError
from .linalg import (
    GR_I,
    GR_ONE,
    GR_ZERO,
    GaussianRational,
    Matrix,
    Scalar,
    stack_rows,
)

VERIFIED_EXACT = "verified-exact"
VERIFIED_ON_SAMPLES = "verified-on-samples"
COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class HermitianFamily:
    k: int
    m: int
    components: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        if len(self.components) != self.k:
            raise ValidationError("component count must equal k")
        for c in self.components:
            if (c.nrows, c.ncols) != (self.m, self.m):
                raise ValidationError("components must be m x m")

    @staticmethod
    def from_matrices(components: Sequence[Matrix]) -> "HermitianFamily":
        k = len(components)
        m = components[0].nrows if k else 0
        return HermitianFamily(k, m, tuple(components))


@dataclass(frozen=True)
class HermitianViolation:
    component: int
    position: tuple[int, int]


def validate(family: HermitianFamily) -> list[HermitianViolation]:
    """Exact Hermitian-symmetry check; returns one entry per violating cell."""
    out = []
    for idx, comp in enumerate(family.components):
        for i in range(family.m):
            for j in range(i, family.m):
                if comp.entry(i, j) != comp.entry(j, i).conjugate():
                    out.append(HermitianViolation(idx, (j, i)))
    return out


def evaluate(
    family: HermitianFamily,
    w: Sequence[Scalar],
    w2: Optional[Sequence[Scalar]] = None,
) -> tuple[GaussianRational, ...]:
    """The vector H(w, w2), anti-linear in w; w2 defaults to w."""
    left = [GaussianRational.of(x).conjugate() for x in w]
    right = [GaussianRational.of(x) for x in (w2 if w2 is not None else w)]
    if len(left) != family.m or len(right) != family.m:
        raise ValidationError("argument length must equal m")
    out = []
    for comp in family.components:
        acc = GR_ZERO
        for i in range(family.m):
            for j in range(family.m):
                acc = acc + left[i] * comp.entry(i, j) * right[j]
        out.append(acc)
    return tuple(out)


def evaluate_real(family: HermitianFamily, w: Sequence[Scalar]) -> tuple[Fraction, ...]:
    """H(w, w) as a real vector; valid for Hermitian components."""
    vals = evaluate(family, w)
    for v in vals:
        if v.im != 0:
            raise ValidationError("H(w,w) not real; family is not Hermitian")
    return tuple(v.re for v in vals)


def char_poly(m: Matrix) -> list[Fraction]:
    """Coefficients [c_0, ..., c_d] of det(tI - M) for Hermitian M.

    Uses the trace recursion (Faddeev-LeVerrier), which stays in exact
    rational arithmetic; Hermitian input guarantees real coefficients.
    """
    d = m.nrows
    if m.ncols != d:
        raise ValidationError("characteristic polynomial needs a square matrix")
    coeffs = [Fraction(0)] * (d + 1)
    coeffs[d] = Fraction(1)
    aux = m
    for i in range(1, d + 1):
        tr = GR_ZERO
        for t in range(d):
            tr = tr + aux.entry(t, t)
        if tr.im != 0:
            raise ValidationError("matrix is not Hermitian")
        c = -tr.re / i
        coeffs[d - i] = c
        if i < d:
            aux = m @ (aux + Matrix.identity(d).scale(c))
    return coeffs


def is_psd(m: Matrix) -> bool:
    """Exact positive semidefiniteness via sign alternation of det(tI - M)."""
    coeffs = char_poly(m)
    d = len(coeffs) - 1
    return all(
        (coeffs[i] if (d - i) % 2 == 0 else -coeffs[i]) >= 0 for i in range(d + 1)
    )


def is_pd(m: Matrix) -> bool:
    if m.nrows == 0:
        return True
    coeffs = char_poly(m)
    return is_psd(m) and coeffs[0] != 0


def negative_direction(m: Matrix) -> Optional[tuple[GaussianRational, ...]]:
    """A vector w with conj(w)^T M w < 0, or None when M is PSD.

    Found by exact congruence diagonalization (no square roots): repeatedly
    pick a basis vector with nonzero self-pairing, split the rest off, and
    read the signs of the diagonal values.
    """
    d = m.nrows
    basis = [list(Matrix.identity(d).row(i)) for i in range(d)]

    def pairing(u: list[GaussianRational], v: list[GaussianRational]) -> GaussianRational:
        acc = GR_ZERO
        for i in range(d):
            for j in range(d):
                acc = acc + u[i].conjugate() * m.entry(i, j) * v[j]
        return acc

    remaining = basis
    while remaining:
        pivot_idx = None
        for i, b in enumerate(remaining):
            val = pairing(b, b)
            if val.re != 0:
                pivot_idx = i
                break
        if pivot_idx is None:
            # all self-pairings vanish: either the form is zero here or some
            # off-diagonal pairing can be rotated onto the diagonal
            fixed = False
            for i in range(len(remaining)):
                for j in range(i + 1, len(remaining)):
                    g = pairing(remaining[i], remaining[j])
                    if g.is_zero():
                        continue
                    if g.re != 0:
                        remaining[i] = [a + b for a, b in zip(remaining[i], remaining[j])]
                    else:
                        remaining[i] = [
                            a + GR_I * b for a, b in zip(remaining[i], remaining[j])
                        ]
                    fixed = True
                    break
                if fixed:
                    break
            if not fixed:
                return None
            continue
        piv = remaining.pop(pivot_idx)
        val = pairing(piv, piv)
        if val.re < 0:
            return tuple(piv)
        reduced = []
        for b in remaining:
            t = pairing(piv, b) / val
            reduced.append([bb - t * pp for bb, pp in zip(b, piv)])
        remaining = reduced
    return None


@dataclass(frozen=True)
class OmegaHermitianVerdict:
    kind: str
    samples: int = 0
    witness: Optional[tuple[GaussianRational, ...]] = None

    def is_counterexample(self) -> bool:
        return self.kind == COUNTEREXAMPLE


class _Lcg:
    """Deterministic linear congruential stream; reproducible across runs."""

    def __init__(self, seed: int) -> None:
        self.state = (seed * 2654435761 + 1) % (1 << 31)

    def next_int(self, lo: int, hi: int) -> int:
        self.state = (1103515245 * self.state + 12345) % (1 << 31)
        return lo + self.state % (hi - lo + 1)

    def next_fraction(self) -> Fraction:
        return Fraction(self.next_int(-16, 16), self.next_int(1, 16))

    def next_vector(self, m: int) -> tuple[GaussianRational, ...]:
        return tuple(
            GaussianRational(self.next_fraction(), self.next_fraction()) for _ in range(m)
        )


def _basis_like_vectors(m: int) -> list[tuple[GaussianRational, ...]]:
    vecs = []
    for i in range(m):
        e = [GR_ZERO] * m
        e[i] = GR_ONE
        vecs.append(tuple(e))
        ie = [GR_ZERO] * m
        ie[i] = GR_I
        vecs.append(tuple(ie))
    for i in range(m):
        for j in range(i + 1, m):
            s = [GR_ZERO] * m
            s[i] = GR_ONE
            s[j] = GR_ONE
            vecs.append(tuple(s))
            t = [GR_ZERO] * m
            t[i] = GR_ONE
            t[j] = GR_I
            vecs.append(tuple(t))
    return vecs


def is_omega_hermitian(
    family: HermitianFamily,
    cone: ConeSpec,
    samples: int = 32,
    seed: int = 0,
) -> OmegaHermitianVerdict:
    """Decide (or sample-check) membership of H(w,w) in the closed cone minus zero.

    For purely polyhedral cones the check is exact: each boundary functional
    pulls the family back to a single Hermitian matrix that must be PSD, and
    the components must have no common kernel. Cones with a Lorentzian factor
    are checked on a deterministic sample set instead, and the verdict says so;
    sampling cannot prove the universal statement.
    """
    if family.k != cone.k:
        raise ValidationError("family and cone dimensions differ")
    if family.m == 0:
        return OmegaHermitianVerdict(VERIFIED_EXACT)
    polyhedral = all(not isinstance(f, LorentzFactor) for f in cone.boundary)
    if polyhedral:
        for factor in cone.boundary:
            for functional in factor.functionals:
                combo = Matrix.zeros(family.m, family.m)
                for coeff, comp in zip(functional, family.components):
                    combo = combo + comp.scale(coeff)
                witness = negative_direction(combo)
                if witness is not None:
                    return OmegaHermitianVerdict(COUNTEREXAMPLE, witness=witness)
        kernel = stack_rows(family.components).nullspace_basis()
        if kernel:
            return OmegaHermitianVerdict(COUNTEREXAMPLE, witness=kernel[0])
        return OmegaHermitianVerdict(VERIFIED_EXACT)
    rng = _Lcg(seed)
    candidates = _basis_like_vectors(family.m)
    for _ in range(samples):
        v = rng.next_vector(family.m)
        if any(not x.is_zero() for x in v):
            candidates.append(v)
    for w in candidates:
        values = evaluate(family, w)
        if any(v.im != 0 for v in values):
            return OmegaHermitianVerdict(COUNTEREXAMPLE, witness=w)
        real = tuple(v.re for v in values)
        if all(v == 0 for v in real):
            return OmegaHermitianVerdict(COUNTEREXAMPLE, witness=w)
        if classify_point(cone, real) is Region.OUTSIDE:
            return OmegaHermitianVerdict(COUNTEREXAMPLE, witness=w)
    return OmegaHermitianVerdict(VERIFIED_ON_SAMPLES, samples=len(candidates))


def _dual_interior_candidate(cone: ConeSpec) -> list[Fraction]:
    c = [Fraction(0)] * cone.k
    for factor in cone.boundary:
        if isinstance(factor, LorentzFactor):
            c[factor.coords[0]] += 1
        else:
            for functional in factor.functionals:
                for i, val in enumerate(functional):
                    c[i] += val
    return c


def positive_definite_combination(
    family: HermitianFamily, cone: ConeSpec
) -> tuple[Fraction, ...]:
    """Coefficients c with sum(c_j H_j) positive definite.

    Starts from a dual-interior direction read off the boundary description
    (all-ones for orthant factors, the time axis for Lorentzian factors) and
    falls back to a bounded perturbation search. Failure of the whole search
    signals a degenerate family for this cone.
    """
    if family.m < 1:
        raise ValidationError("positive combination needs m >= 1")
    if family.k != cone.k:
        raise ValidationError("family and cone dimensions differ")

    def combo_pd(c: Sequence[Fraction]) -> bool:
        total = Matrix.zeros(family.m, family.m)
        for coeff, comp in zip(c, family.components):
            total = total + comp.scale(coeff)
        return is_pd(total)

    base = _dual_interior_candidate(cone)
    candidates = [tuple(base), tuple(Fraction(1) for _ in range(cone.k))]
    for eps in (Fraction(1, 2), Fraction(1, 4), Fraction(1, 8), Fraction(1, 16)):
        for j in range(cone.k):
            for sign in (1, -1):
                cand = list(base)
                cand[j] += sign * eps
                candidates.append(tuple(cand))
    for cand in candidates:
        if combo_pd(cand):
            return cand
    raise NoCombinationFoundError(
        f"no positive-definite combination found for cone {cone.name}"
    )
