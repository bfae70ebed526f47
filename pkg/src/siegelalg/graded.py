"""Graded components of the automorphism algebra of a Siegel domain.

The automorphism algebra of S(Omega, H) splits into five eigenspaces of the
Euler field, with weights -1, -1/2, 0, 1/2, 1. The weight -1 and -1/2 pieces
are free (dimensions k and 2(n-k)); the other three are cut out by linear
conditions on matrix and bilinear-form coefficients:

* weight 0: pairs (A, B) with A in g(Omega) and A H(w,w') = H(Bw,w') + H(w,Bw')
  for all w, w' (B is "associated" to A);
* weight 1/2: a C-linear map Phi and a symmetric C-bilinear c, with the map
  x -> Im H(w0, Phi x) landing in g(Omega) for every w0 and a compatibility
  identity linking c to Phi;
* weight 1: a symmetric real bilinear a and a C-bilinear b subject to cone
  membership, association, a trace-reality condition, and a three-argument
  symmetry identity.

All universally quantified conditions here are polynomial of known multidegree
in the quantified vectors, so instantiating at coordinate vectors (and their
i-multiples) plus coefficient matching is exact, never a sampling argument.
Unknowns are realified (a complex unknown is its ordered pair of real parts);
each solver assembles one rational linear system and reads the answer off an
exact nullspace. Bases are therefore reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .cones import ConeSpec
from .errors import ValidationError
from .hermitian import HermitianFamily, validate
from .linalg import (
    GR_I,
    GR_ONE,
    GR_ZERO,
    GaussianRational,
    Matrix,
    Scalar,
    from_real_rows,
)


@dataclass(frozen=True)
class SiegelDomainSpec:
    """The pair (cone, Hermitian family) plus the dimensions (n, k)."""

    n: int
    k: int
    cone: ConeSpec
    form: HermitianFamily

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.n:
            raise ValidationError("need 1 <= k <= n")
        if self.cone.k != self.k:
            raise ValidationError("cone dimension must equal k")
        if self.form.k != self.k or self.form.m != self.n - self.k:
            raise ValidationError("Hermitian family must have k components on C^(n-k)")
        bad = validate(self.form)
        if bad:
            where = ", ".join(f"component {v.component} at {v.position}" for v in bad)
            raise ValidationError(f"family is not Hermitian: {where}")

    @property
    def m(self) -> int:
        return self.n - self.k


# ---------------------------------------------------------------------------
# linear expressions in real unknowns

class _Lin:
    """Complex-linear expression in a fixed list of real unknowns."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: list[GaussianRational]) -> None:
        self.coeffs = coeffs

    @staticmethod
    def zero(n: int) -> "_Lin":
        return _Lin([GR_ZERO] * n)

    @staticmethod
    def real_unknown(n: int, idx: int) -> "_Lin":
        coeffs = [GR_ZERO] * n
        coeffs[idx] = GR_ONE
        return _Lin(coeffs)

    @staticmethod
    def complex_unknown(n: int, re_idx: int, im_idx: int) -> "_Lin":
        coeffs = [GR_ZERO] * n
        coeffs[re_idx] = GR_ONE
        coeffs[im_idx] = GR_I
        return _Lin(coeffs)

    def __add__(self, other: "_Lin") -> "_Lin":
        return _Lin([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "_Lin") -> "_Lin":
        return _Lin([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def scaled(self, c: Scalar) -> "_Lin":
        cc = GaussianRational.of(c)
        return _Lin([a * cc for a in self.coeffs])

    def conj(self) -> "_Lin":
        # valid because the unknowns are real
        return _Lin([a.conjugate() for a in self.coeffs])

    def im_part(self) -> "_Lin":
        return _Lin([GaussianRational(a.im, Fraction(0)) for a in self.coeffs])


class _System:
    """Homogeneous rational linear system collected row by row."""

    def __init__(self, nunknowns: int) -> None:
        self.n = nunknowns
        self.rows: list[list[Fraction]] = []

    def require_zero(self, expr: _Lin) -> None:
        self.rows.append([c.re for c in expr.coeffs])
        self.rows.append([c.im for c in expr.coeffs])

    def require_real_zero(self, expr: _Lin) -> None:
        self.rows.append([c.re for c in expr.coeffs])

    def solutions(self) -> list[list[Fraction]]:
        if self.n == 0:
            return []
        if not self.rows:
            basis = []
            for i in range(self.n):
                v = [Fraction(0)] * self.n
                v[i] = Fraction(1)
                basis.append(v)
            return basis
        matrix = from_real_rows(self.rows)
        return [[x.re for x in v] for v in matrix.nullspace_basis()]


def _basis_and_i_multiples(m: int) -> list[list[GaussianRational]]:
    out = []
    for u in range(m):
        e = [GR_ZERO] * m
        e[u] = GR_ONE
        out.append(e)
        ie = [GR_ZERO] * m
        ie[u] = GR_I
        out.append(ie)
    return out


def _sym_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i, n)]


# ---------------------------------------------------------------------------
# solution containers

@dataclass(frozen=True)
class SymBilinear:
    """Symmetric bilinear form coefficients, packed over index pairs i <= j.

    The quadratic evaluation uses the doubled off-diagonal convention:
    value_l(u, u) = sum_i c[l,ii] u_i^2 + 2 sum_{i<j} c[l,ij] u_i u_j.
    """

    out_dim: int
    in_dim: int
    coeffs: tuple[tuple[GaussianRational, ...], ...]

    def coefficient(self, l: int, i: int, j: int) -> GaussianRational:
        if i > j:
            i, j = j, i
        return self.coeffs[l][_sym_pairs(self.in_dim).index((i, j))]

    def apply(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple[GaussianRational, ...]:
        uu = [GaussianRational.of(x) for x in u]
        vv = [GaussianRational.of(x) for x in v]
        out = []
        for l in range(self.out_dim):
            acc = GR_ZERO
            for idx, (i, j) in enumerate(_sym_pairs(self.in_dim)):
                c = self.coeffs[l][idx]
                if i == j:
                    acc = acc + c * uu[i] * vv[i]
                else:
                    acc = acc + c * (uu[i] * vv[j] + uu[j] * vv[i])
            out.append(acc)
        return tuple(out)

    def quad(self, u: Sequence[Scalar]) -> tuple[GaussianRational, ...]:
        return self.apply(u, u)

    def is_zero(self) -> bool:
        return all(c.is_zero() for row in self.coeffs for c in row)


@dataclass(frozen=True)
class Bilinear:
    """Plain bilinear coefficients value_l = sum_{i,j} c[l][i][j] u_i v_j."""

    out_dim: int
    left_dim: int
    right_dim: int
    coeffs: tuple[tuple[tuple[GaussianRational, ...], ...], ...]

    def coefficient(self, l: int, i: int, j: int) -> GaussianRational:
        return self.coeffs[l][i][j]

    def apply(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple[GaussianRational, ...]:
        uu = [GaussianRational.of(x) for x in u]
        vv = [GaussianRational.of(x) for x in v]
        out = []
        for l in range(self.out_dim):
            acc = GR_ZERO
            for i in range(self.left_dim):
                for j in range(self.right_dim):
                    acc = acc + self.coeffs[l][i][j] * uu[i] * vv[j]
            out.append(acc)
        return tuple(out)

    def is_zero(self) -> bool:
        return all(c.is_zero() for plane in self.coeffs for row in plane for c in row)


@dataclass(frozen=True)
class G0Solution:
    basis: tuple[tuple[Matrix, Matrix], ...]
    dim: int


@dataclass(frozen=True)
class LSolution:
    basis: tuple[Matrix, ...]
    s: int


@dataclass(frozen=True)
class GHalfElement:
    phi: Matrix          # m x k, the C-linear map on the z-block
    c: SymBilinear       # symmetric C-bilinear on the w-block


@dataclass(frozen=True)
class GHalfSolution:
    basis: tuple[GHalfElement, ...]
    dim: int


@dataclass(frozen=True)
class GOneElement:
    a: SymBilinear       # symmetric real bilinear on the z-block
    b: Bilinear          # C-bilinear mixing z and w


@dataclass(frozen=True)
class GOneSolution:
    basis: tuple[GOneElement, ...]
    dim: int


@dataclass(frozen=True)
class GradedDims:
    d_m1: int
    d_mhalf: int
    d_0: int
    d_half: int
    d_1: int
    total: int

    def as_dict(self) -> dict:
        return {
            "g_m1": self.d_m1,
            "g_mhalf": self.d_mhalf,
            "g_0": self.d_0,
            "g_half": self.d_half,
            "g_1": self.d_1,
            "total": self.total,
        }


# ---------------------------------------------------------------------------
# shared constraint: B associated to A

def _emit_association(
    system: _System,
    components: Sequence[Matrix],
    a_rows: list[list[_Lin]],
    b_entries: list[list[_Lin]],
    m: int,
) -> None:
    """Rows for sum_l A[j][l] H_l = B^* H_j + H_j B, for every component j."""
    k = len(components)
    for j in range(k):
        hj = components[j]
        for u in range(m):
            for v in range(m):
                lhs = _Lin.zero(system.n)
                for l in range(k):
                    coeff = components[l].entry(u, v)
                    if not coeff.is_zero():
                        lhs = lhs + a_rows[j][l].scaled(coeff)
                rhs = _Lin.zero(system.n)
                for t in range(m):
                    c1 = hj.entry(t, v)
                    if not c1.is_zero():
                        rhs = rhs + b_entries[t][u].conj().scaled(c1)
                    c2 = hj.entry(u, t)
                    if not c2.is_zero():
                        rhs = rhs + b_entries[t][v].scaled(c2)
                system.require_zero(lhs - rhs)


def _annihilator_rows(
    system: _System, cone: ConeSpec, entry_grid: list[list[_Lin]]
) -> None:
    """Rows forcing a real k x k expression matrix into g(Omega)."""
    k = cone.k
    for functional in cone.annihilators:
        acc = _Lin.zero(system.n)
        for j in range(k):
            for l in range(k):
                coeff = functional[j * k + l]
                if coeff != 0:
                    acc = acc + entry_grid[j][l].scaled(coeff)
        system.require_real_zero(acc)


# ---------------------------------------------------------------------------
# solvers

@lru_cache(maxsize=None)
def solve_g0(spec: SiegelDomainSpec) -> G0Solution:
    """Pairs (A, B): A in g(Omega) with B associated to A.

    A is parametrized in cone coordinates, which builds the cone membership
    into the unknowns; the association identity is matched entry by entry.
    All solvers cache on the (immutable) domain, so repeated analyses of one
    domain cost one solve.
    """
    k, m = spec.k, spec.m
    gbasis = spec.cone.g_basis
    gdim = len(gbasis)
    n_unknowns = gdim + 2 * m * m
    system = _System(n_unknowns)

    a_rows = []
    for j in range(k):
        row = []
        for l in range(k):
            coeffs = [GR_ZERO] * n_unknowns
            for p in range(gdim):
                coeffs[p] = gbasis[p].entry(j, l)
            row.append(_Lin(coeffs))
        a_rows.append(row)
    b_entries = [
        [
            _Lin.complex_unknown(n_unknowns, gdim + 2 * (u * m + v), gdim + 2 * (u * m + v) + 1)
            for v in range(m)
        ]
        for u in range(m)
    ]
    _emit_association(system, spec.form.components, a_rows, b_entries, m)

    basis = []
    for sol in system.solutions():
        a_mat = Matrix.zeros(k, k)
        for p in range(gdim):
            a_mat = a_mat + gbasis[p].scale(sol[p])
        b_mat = Matrix.from_rows(
            [
                [
                    GaussianRational(sol[gdim + 2 * (u * m + v)], sol[gdim + 2 * (u * m + v) + 1])
                    for v in range(m)
                ]
                for u in range(m)
            ]
        ) if m else Matrix.zeros(0, 0)
        basis.append((a_mat, b_mat))
    return G0Solution(tuple(basis), len(basis))


@lru_cache(maxsize=None)
def solve_L(spec: SiegelDomainSpec) -> LSolution:
    """Matrices skew-Hermitian with respect to every component of the family."""
    k, m = spec.k, spec.m
    n_unknowns = 2 * m * m
    system = _System(n_unknowns)
    a_rows = [[_Lin.zero(n_unknowns) for _ in range(k)] for _ in range(k)]
    b_entries = [
        [
            _Lin.complex_unknown(n_unknowns, 2 * (u * m + v), 2 * (u * m + v) + 1)
            for v in range(m)
        ]
        for u in range(m)
    ]
    _emit_association(system, spec.form.components, a_rows, b_entries, m)
    basis = []
    for sol in system.solutions():
        basis.append(
            Matrix.from_rows(
                [
                    [
                        GaussianRational(sol[2 * (u * m + v)], sol[2 * (u * m + v) + 1])
                        for v in range(m)
                    ]
                    for u in range(m)
                ]
            )
        )
    return LSolution(tuple(basis), len(basis))


@lru_cache(maxsize=None)
def solve_g_half(spec: SiegelDomainSpec) -> GHalfSolution:
    """The weight-1/2 component: pairs (Phi, c).

    Membership of the induced real maps is instantiated at coordinate vectors
    and their i-multiples (the dependence is real-linear); the compatibility
    identity between c and Phi is matched on monomial coefficients, which is
    exact because both sides are polynomial in conj(w) and w' only.
    """
    k, m = spec.k, spec.m
    if m == 0:
        return GHalfSolution((), 0)
    components = spec.form.components
    pairs = _sym_pairs(m)
    pair_index = {p: idx for idx, p in enumerate(pairs)}
    n_phi = 2 * m * k
    n_unknowns = n_phi + 2 * m * len(pairs)
    system = _System(n_unknowns)

    phi = [
        [_Lin.complex_unknown(n_unknowns, 2 * (v * k + t), 2 * (v * k + t) + 1) for t in range(k)]
        for v in range(m)
    ]

    def c_lin(l: int, i: int, j: int) -> _Lin:
        base = n_phi + 2 * (l * len(pairs) + pair_index[(min(i, j), max(i, j))])
        return _Lin.complex_unknown(n_unknowns, base, base + 1)

    # cone membership of [x -> Im H(w0, Phi x)] for w0 in the coordinate set
    for w0 in _basis_and_i_multiples(m):
        grid = []
        for j in range(k):
            row = []
            for l in range(k):
                acc = _Lin.zero(n_unknowns)
                for v in range(m):
                    wc = w0[v].conjugate()
                    if wc.is_zero():
                        continue
                    for vp in range(m):
                        coeff = wc * components[j].entry(v, vp)
                        if not coeff.is_zero():
                            acc = acc + phi[vp][l].scaled(coeff)
                row.append(acc.im_part())
            grid.append(row)
        _annihilator_rows(system, spec.cone, grid)

    # compatibility of c with Phi: match coefficients of conj(w)_u w'_i w'_j
    two_i = GR_I + GR_I
    for j in range(k):
        hj = components[j]
        phibar_h = [
            [
                sum(
                    (phi[v][t].conj().scaled(hj.entry(v, l)) for v in range(m)),
                    _Lin.zero(n_unknowns),
                )
                for l in range(m)
            ]
            for t in range(k)
        ]
        for u in range(m):
            for (i, jp) in pairs:
                mult = 1 if i == jp else 2
                lhs = _Lin.zero(n_unknowns)
                for l in range(m):
                    coeff = hj.entry(u, l)
                    if not coeff.is_zero():
                        lhs = lhs + c_lin(l, i, jp).scaled(coeff * mult)
                rhs = _Lin.zero(n_unknowns)
                for t in range(k):
                    ht = components[t]
                    c1 = ht.entry(u, i)
                    if not c1.is_zero():
                        rhs = rhs + phibar_h[t][jp].scaled(c1)
                    if i != jp:
                        c2 = ht.entry(u, jp)
                        if not c2.is_zero():
                            rhs = rhs + phibar_h[t][i].scaled(c2)
                system.require_zero(lhs - rhs.scaled(two_i))

    basis = []
    for sol in system.solutions():
        phi_mat = Matrix.from_rows(
            [
                [GaussianRational(sol[2 * (v * k + t)], sol[2 * (v * k + t) + 1]) for t in range(k)]
                for v in range(m)
            ]
        )
        c_coeffs = tuple(
            tuple(
                GaussianRational(
                    sol[n_phi + 2 * (l * len(pairs) + idx)],
                    sol[n_phi + 2 * (l * len(pairs) + idx) + 1],
                )
                for idx in range(len(pairs))
            )
            for l in range(m)
        )
        basis.append(GHalfElement(phi_mat, SymBilinear(m, m, c_coeffs)))
    return GHalfSolution(tuple(basis), len(basis))


@lru_cache(maxsize=None)
def solve_g1(spec: SiegelDomainSpec) -> GOneSolution:
    """The weight-1 component: pairs (a, b).

    Four condition families: cone membership of x -> a(x0, x); association of
    the half-coefficient maps w -> b(x0, w)/2; reality of their traces; cone
    membership of the mixed maps built from b; and the three-argument symmetry
    identity, matched on monomial coefficients.
    """
    k, m = spec.k, spec.m
    components = spec.form.components
    spairs = _sym_pairs(k)
    spair_index = {p: idx for idx, p in enumerate(spairs)}
    n_a = k * len(spairs)
    n_unknowns = n_a + 2 * k * m * m
    system = _System(n_unknowns)

    def a_lin(l: int, i: int, j: int) -> _Lin:
        return _Lin.real_unknown(
            n_unknowns, l * len(spairs) + spair_index[(min(i, j), max(i, j))]
        )

    def b_lin(l: int, t: int, p: int) -> _Lin:
        base = n_a + 2 * (l * k * m + t * m + p)
        return _Lin.complex_unknown(n_unknowns, base, base + 1)

    half = Fraction(1, 2)
    for t in range(k):
        # membership of x -> a(e_t, x)
        grid = [[a_lin(l, t, j) for j in range(k)] for l in range(k)]
        _annihilator_rows(system, spec.cone, grid)
        if m:
            # association of w -> b(e_t, w)/2 to a(e_t, .)
            a_rows = [[a_lin(j, t, l) for l in range(k)] for j in range(k)]
            b_entries = [
                [b_lin(lp, t, p).scaled(half) for p in range(m)] for lp in range(m)
            ]
            _emit_association(system, components, a_rows, b_entries, m)
            # reality of the trace
            trace = _Lin.zero(n_unknowns)
            for l in range(m):
                trace = trace + b_lin(l, t, l)
            system.require_real_zero(trace.im_part())

    if m:
        # membership of x -> Im H(w1, b(x, w0)) for coordinate pairs (w0, w1)
        vectors = _basis_and_i_multiples(m)
        for w0 in vectors:
            for w1 in vectors:
                grid = []
                for j in range(k):
                    row = []
                    for t in range(k):
                        acc = _Lin.zero(n_unknowns)
                        for v in range(m):
                            wc = w1[v].conjugate()
                            if wc.is_zero():
                                continue
                            for l in range(m):
                                coeff = wc * components[j].entry(v, l)
                                if coeff.is_zero():
                                    continue
                                for p in range(m):
                                    if not w0[p].is_zero():
                                        acc = acc + b_lin(l, t, p).scaled(coeff * w0[p])
                        row.append(acc.im_part())
                    grid.append(row)
                _annihilator_rows(system, spec.cone, grid)

        # three-argument symmetry, matched on conj(w)_u conj(w')_v w''_i w''_j
        wpairs = _sym_pairs(m)
        for j in range(k):
            hj = components[j]
            for u in range(m):
                for v in range(m):
                    for (i, jp) in wpairs:
                        lhs = _Lin.zero(n_unknowns)
                        for l in range(m):
                            cjl = hj.entry(u, l)
                            if cjl.is_zero():
                                continue
                            for t in range(k):
                                ht = components[t]
                                c1 = ht.entry(v, i)
                                if not c1.is_zero():
                                    lhs = lhs + b_lin(l, t, jp).scaled(cjl * c1)
                                if i != jp:
                                    c2 = ht.entry(v, jp)
                                    if not c2.is_zero():
                                        lhs = lhs + b_lin(l, t, i).scaled(cjl * c2)
                        rhs = _Lin.zero(n_unknowns)
                        for l in range(m):
                            for t in range(k):
                                ht = components[t]
                                c1 = ht.entry(u, i) * hj.entry(l, jp)
                                if not c1.is_zero():
                                    rhs = rhs + b_lin(l, t, v).conj().scaled(c1)
                                if i != jp:
                                    c2 = ht.entry(u, jp) * hj.entry(l, i)
                                    if not c2.is_zero():
                                        rhs = rhs + b_lin(l, t, v).conj().scaled(c2)
                        system.require_zero(lhs - rhs)

    basis = []
    for sol in system.solutions():
        a_coeffs = tuple(
            tuple(
                GaussianRational(sol[l * len(spairs) + idx], Fraction(0))
                for idx in range(len(spairs))
            )
            for l in range(k)
        )
        b_coeffs = tuple(
            tuple(
                tuple(
                    GaussianRational(
                        sol[n_a + 2 * (l * k * m + t * m + p)],
                        sol[n_a + 2 * (l * k * m + t * m + p) + 1],
                    )
                    for p in range(m)
                )
                for t in range(k)
            )
            for l in range(m)
        )
        basis.append(
            GOneElement(SymBilinear(k, k, a_coeffs), Bilinear(m, k, m, b_coeffs))
        )
    return GOneSolution(tuple(basis), len(basis))


@dataclass(frozen=True)
class GradedSolutions:
    g0: G0Solution
    skew: LSolution
    g_half: GHalfSolution
    g_one: GOneSolution
    dims: GradedDims


def graded_dims(spec: SiegelDomainSpec) -> GradedDims:
    return solve_all(spec).dims


def solve_all(spec: SiegelDomainSpec) -> GradedSolutions:
    g0 = solve_g0(spec)
    skew = solve_L(spec)
    g_half = solve_g_half(spec)
    g_one = solve_g1(spec)
    d_m1 = spec.k
    d_mhalf = 2 * spec.m
    dims = GradedDims(
        d_m1,
        d_mhalf,
        g0.dim,
        g_half.dim,
        g_one.dim,
        d_m1 + d_mhalf + g0.dim + g_half.dim + g_one.dim,
    )
    return GradedSolutions(g0, skew, g_half, g_one, dims)
