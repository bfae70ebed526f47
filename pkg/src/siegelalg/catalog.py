"""Builders for the named domain families, classification, and verification.

Every domain analyzed here is a Siegel presentation: a cone from the built-in
catalog plus an explicit Hermitian family. Ball products get the block
realization (one rank-one block per factor); the two- and three-parameter
families over the quadrant and the rank-one families over the three
dimensional cones carry their defining parameter vectors.

The classification driver enumerates this fixed candidate list, not all
homogeneous cones and forms; the report says so in its note field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from .bounds import BoundReport, bound_chain, closed_form_bound, closed_form_sweep, s_from_multiplicities
from .cones import ConeSpec, catalog_cone, half_line, isotropy_bound, orthant
from .errors import ValidationError
from .fields import check_grading, jacobi_defect, materialize
from .graded import GradedDims, SiegelDomainSpec, solve_all, solve_L
from .hermitian import (
    COUNTEREXAMPLE,
    HermitianFamily,
    is_omega_hermitian,
    OmegaHermitianVerdict,
)
from .homogeneity import (
    GENERICALLY_OPEN_ORBITS,
    NOT_TRANSITIVE,
    HomogeneityVerdict,
    homogeneity_verdict,
)
from .linalg import Matrix, from_real_rows

ConeProvider = Callable[[str], ConeSpec]

_TUBE_LABELS = {
    "omega1": "B1xB1",
    "omega2": "B1xB1xB1",
    "omega3": "T3",
    "omega4": "B1xB1xB1xB1",
    "omega5": "B1xT3",
    "omega6": "T4",
}


@dataclass(frozen=True)
class DomainId:
    kind: str
    n: Optional[int] = None
    factors: Optional[tuple[int, ...]] = None
    v: Optional[tuple[Fraction, ...]] = None
    params: Optional[tuple[Fraction, Fraction, Fraction, Fraction]] = None
    cone_id: Optional[str] = None

    @property
    def label(self) -> str:
        if self.kind == "ball":
            return f"B{self.n}"
        if self.kind == "ball-product":
            return "x".join(f"B{p}" for p in self.factors)
        if self.kind in ("d1", "d2"):
            return f"{self.kind.upper()}(n={self.n})"
        if self.kind in ("d3", "d4"):
            return f"{self.kind.upper()}({','.join(str(x) for x in self.params)})"
        if self.kind in ("d5", "d6"):
            return f"{self.kind.upper()}({','.join(str(x) for x in self.v)})"
        if self.kind == "tube":
            return _TUBE_LABELS.get(self.cone_id, f"Tube({self.cone_id})")
        raise ValidationError(f"unknown domain kind {self.kind!r}")


def ball(n: int) -> DomainId:
    return DomainId("ball", n=n)


def ball_product(*factors: int) -> DomainId:
    return DomainId("ball-product", factors=tuple(factors))


def d1(n: int) -> DomainId:
    return DomainId("d1", n=n)


def d2(n: int) -> DomainId:
    return DomainId("d2", n=n)


def _params4(values: Sequence[Union[int, Fraction]]) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in values)


def d3(alpha, beta, gamma, delta) -> DomainId:
    return DomainId("d3", n=4, params=_params4((alpha, beta, gamma, delta)))


def d4(alpha, beta, gamma, delta) -> DomainId:
    return DomainId("d4", n=5, params=_params4((alpha, beta, gamma, delta)))


def d5(v: Sequence[Union[int, Fraction]]) -> DomainId:
    return DomainId("d5", n=4, v=tuple(Fraction(x) for x in v))


def d6(v: Sequence[Union[int, Fraction]]) -> DomainId:
    return DomainId("d6", n=4, v=tuple(Fraction(x) for x in v))


def t3() -> DomainId:
    return DomainId("tube", cone_id="omega3")


def t4() -> DomainId:
    return DomainId("tube", cone_id="omega6")


def tube(cone_id: str) -> DomainId:
    return DomainId("tube", cone_id=cone_id)


def _diag(values: Sequence[Union[int, Fraction]]) -> Matrix:
    n = len(values)
    return from_real_rows(
        [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
    )


def _empty_family(k: int) -> HermitianFamily:
    return HermitianFamily(k, 0, tuple(Matrix.zeros(0, 0) for _ in range(k)))


def _rank_one_family(v: Sequence[Fraction]) -> HermitianFamily:
    return HermitianFamily.from_matrices([_diag([x]) for x in v])


def build(domain: DomainId, cones: ConeProvider = catalog_cone) -> SiegelDomainSpec:
    """Siegel presentation of a named domain; validates the parameters."""
    kind = domain.kind
    if kind == "ball":
        n = domain.n
        if n is None or n < 1:
            raise ValidationError("ball dimension must be at least 1")
        return SiegelDomainSpec(
            n, 1, half_line(), HermitianFamily.from_matrices([Matrix.identity(n - 1)])
        )
    if kind == "ball-product":
        factors = domain.factors
        if not factors or any(p < 1 for p in factors):
            raise ValidationError("ball factors must be positive")
        if len(factors) == 1:
            return build(ball(factors[0]), cones)
        k = len(factors)
        m = sum(p - 1 for p in factors)
        comps = []
        offset = 0
        for p in factors:
            block = p - 1
            comps.append(
                from_real_rows(
                    [
                        [1 if (i == j and offset <= i < offset + block) else 0 for j in range(m)]
                        for i in range(m)
                    ]
                )
            )
            offset += block
        cone = {2: "omega1", 3: "omega2", 4: "omega4"}.get(k)
        cone_spec = cones(cone) if cone else orthant(k)
        return SiegelDomainSpec(k + m, k, cone_spec, HermitianFamily.from_matrices(comps))
    if kind in ("d1", "d2"):
        n = domain.n
        if n is None or n < 3:
            raise ValidationError("need n >= 3 for the quadrant families")
        second = Matrix.identity(n - 2) if kind == "d2" else Matrix.zeros(n - 2, n - 2)
        return SiegelDomainSpec(
            n, 2, cones("omega1"),
            HermitianFamily.from_matrices([Matrix.identity(n - 2), second]),
        )
    if kind in ("d3", "d4"):
        alpha, beta, gamma, delta = domain.params
        if min(alpha, beta, gamma, delta) < 0:
            raise ValidationError("parameters must be nonnegative")
        if alpha * delta - beta * gamma == 0:
            raise ValidationError("parameter determinant must be nonzero")
        if kind == "d3":
            fam = HermitianFamily.from_matrices(
                [_diag([alpha, beta]), _diag([gamma, delta])]
            )
            return SiegelDomainSpec(4, 2, cones("omega1"), fam)
        fam = HermitianFamily.from_matrices(
            [_diag([alpha, beta, beta]), _diag([gamma, delta, delta])]
        )
        return SiegelDomainSpec(5, 2, cones("omega1"), fam)
    if kind == "d5":
        v = domain.v
        if len(v) != 3 or min(v) < 0 or all(x == 0 for x in v):
            raise ValidationError("need a nonzero nonnegative 3-vector")
        return SiegelDomainSpec(4, 3, cones("omega2"), _rank_one_family(v))
    if kind == "d6":
        v = domain.v
        if len(v) != 3 or v[0] <= 0 or v[0] * v[0] < v[1] * v[1] + v[2] * v[2]:
            raise ValidationError(
                "need v1 > 0 and v1^2 >= v2^2 + v3^2"
            )
        return SiegelDomainSpec(4, 3, cones("omega3"), _rank_one_family(v))
    if kind == "tube":
        cone_spec = cones(domain.cone_id)
        return SiegelDomainSpec(cone_spec.k, cone_spec.k, cone_spec, _empty_family(cone_spec.k))
    raise ValidationError(f"unknown domain kind {kind!r}")


@dataclass(frozen=True)
class DomainReport:
    label: str
    spec: SiegelDomainSpec
    dims: GradedDims
    s: int
    bounds: BoundReport
    homogeneity: HomogeneityVerdict
    omega_hermitian: OmegaHermitianVerdict


def analyze(domain: DomainId, cones: ConeProvider = catalog_cone) -> DomainReport:
    spec = build(domain, cones)
    sols = solve_all(spec)
    bounds = bound_chain(
        spec.n, spec.k, sols.skew.s, spec.cone.dim_g, sols.dims.d_half, sols.dims.d_1
    )
    return DomainReport(
        label=domain.label,
        spec=spec,
        dims=sols.dims,
        s=sols.skew.s,
        bounds=bounds,
        homogeneity=homogeneity_verdict(spec),
        omega_hermitian=is_omega_hermitian(spec.form, spec.cone),
    )


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class CandidateEntry:
    label: str
    k: int
    status: str   # "homogeneous" | "pruned-not-transitive" | "pruned-by-bound"
    total: Optional[int] = None
    margin: Optional[Fraction] = None


@dataclass(frozen=True)
class ClassifyReport:
    n: int
    target: int
    note: str
    entries: tuple[CandidateEntry, ...]
    homogeneous: tuple[tuple[str, int], ...]
    survivors_at_target: tuple[str, ...]


def _candidate_ids(n: int) -> list[DomainId]:
    out = [ball(n)]
    if n == 2:
        out.append(tube("omega1"))
        return out
    # cone dimension two
    out.append(ball_product(n - 1, 1))
    out.append(d2(n))
    if n == 4:
        out.extend([ball_product(2, 2), d3(1, 0, 1, 1), d3(1, 1, 0, 1)])
    if n == 5:
        out.extend([ball_product(3, 2), d4(1, 0, 1, 1), d4(1, 1, 0, 1)])
    # cone dimension three and four (absent or pruned for n >= 5)
    if n == 3:
        out.extend([tube("omega2"), t3()])
    if n == 4:
        out.extend(
            [
                ball_product(2, 1, 1),
                d5((1, 1, 0)),
                d5((1, 1, 1)),
                d6((1, 1, 0)),
                d6((2, 1, 0)),
                tube("omega4"),
                tube("omega5"),
                t4(),
            ]
        )
    return out


def classify(n: int, cones: ConeProvider = catalog_cone) -> ClassifyReport:
    """Candidate table for homogeneous domains of dimension n, 2 <= n <= 5.

    Follows the catalog case split: one candidate family per cone and
    eigenvalue pattern, with high cone dimensions removed by the closed-form
    bound when n >= 5. Survivors at the target are the homogeneous entries
    whose exact total equals n^2 - 2.
    """
    if not 2 <= n <= 5:
        raise ValidationError("classification supports 2 <= n <= 5")
    target = n * n - 2
    entries: list[CandidateEntry] = []
    homogeneous: list[tuple[str, int]] = []
    for domain in _candidate_ids(n):
        report = analyze(domain, cones)
        if report.homogeneity.verdict == NOT_TRANSITIVE:
            entries.append(
                CandidateEntry(domain.label, report.spec.k, "pruned-not-transitive")
            )
            continue
        entries.append(
            CandidateEntry(domain.label, report.spec.k, "homogeneous", report.dims.total)
        )
        homogeneous.append((domain.label, report.dims.total))
    if n >= 5:
        for k in range(3, n + 1):
            margin = closed_form_bound(n, k) - target
            entries.append(
                CandidateEntry(f"(any domain with k={k})", k, "pruned-by-bound", margin=margin)
            )
    survivors = tuple(label for label, total in homogeneous if total == target)
    return ClassifyReport(
        n=n,
        target=target,
        note=(
            "candidates enumerated from the built-in catalog families only; "
            "this reproduces the known case analysis, not a search over all cones"
        ),
        entries=tuple(entries),
        homogeneous=tuple(homogeneous),
        survivors_at_target=survivors,
    )


# ---------------------------------------------------------------------------
# the verification driver

EXPECTED: dict[str, object] = {
    "cone_dim_omega1": 2,
    "cone_dim_omega2": 3,
    "cone_dim_omega3": 4,
    "cone_dim_omega4": 4,
    "cone_dim_omega5": 5,
    "cone_dim_omega6": 7,
    "isotropy_bound_k2": Fraction(2),
    "isotropy_bound_k3": Fraction(4),
    "isotropy_bound_k4": Fraction(7),
    "isotropy_cap_respected": True,
    # the cap is attained at k=2 as well: dim g(omega1) = 2 = bound(2)
    "isotropy_equality_cases": ["omega1", "omega3", "omega6"],
    "ball_total_n2": 8,
    "ball_total_n3": 15,
    "ball_total_n4": 24,
    "ball_total_n5": 35,
    "tube_total_omega2": 9,
    "t3_total": 10,
    "tube_total_omega4": 12,
    "tube_total_omega5": 13,
    "t4_total": 15,
    "d1_total_n4": 18,
    "d2_verdict": NOT_TRANSITIVE,
    "d2_a_part_dim": 1,
    "d3_1011_ghalf": 0,
    "d3_1011_g1": 0,
    "d3_1101_ghalf": 0,
    "d3_1101_g1": 0,
    "d3_totals_within_branch_bound": True,
    "d4_separable_total": 23,
    "d4_1011_ghalf": 0,
    "d4_1011_g1": 0,
    "d4_1101_ghalf": 0,
    "d4_1101_g1": 0,
    "d4_totals_within_branch_bound": True,
    "d5_axis_totals": [14, 14, 14],
    "d5_multi_verdicts": [NOT_TRANSITIVE, NOT_TRANSITIVE],
    "d6_s": 1,
    "d6_g0": 4,
    "d6_ghalf": 0,
    "d6_g1": 1,
    "d6_g1_matches_known_basis": True,
    "d6_total": 10,
    "d6_interior_verdict": NOT_TRANSITIVE,
    "skew_count_formula_matches_solver": True,
    "high_cone_margins_all_negative": True,
    "d3_branch_bound": Fraction(12),
    "d4_branch_bound": Fraction(17),
    "d6_branch_bound": Fraction(13),
    "bound_chain_sound_on_catalog": True,
    "grading_ball3": True,
    "grading_d6": True,
    "bracket_identities_d6": True,
    "classify_n2": {"B2": 8, "B1xB1": 6},
    "classify_n3": {"B3": 15, "B2xB1": 11, "B1xB1xB1": 9, "T3": 10},
    "classify_n4_survivors": ["B2xB1xB1"],
    "classify_n5_survivors": ["B3xB2"],
}

D6_KNOWN_QUADRATIC = {
    (0, 0, 0): Fraction(1), (0, 0, 1): Fraction(-1), (0, 1, 1): Fraction(1),
    (0, 2, 2): Fraction(1),
    (1, 0, 0): Fraction(-1), (1, 0, 1): Fraction(1), (1, 1, 1): Fraction(-1),
    (1, 2, 2): Fraction(1),
    (2, 0, 2): Fraction(1), (2, 1, 2): Fraction(-1),
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    expected: object
    computed: object
    passed: bool


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple[CheckResult, ...]
    passed: int
    failed: int

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)


def _d6_basis_matches(sols) -> bool:
    if sols.g_one.dim != 1:
        return False
    el = sols.g_one.basis[0]
    if not el.b.is_zero():
        return False
    scale = None
    for l in range(3):
        for i in range(3):
            for j in range(i, 3):
                coeff = el.a.coefficient(l, i, j)
                known = D6_KNOWN_QUADRATIC.get((l, i, j), Fraction(0))
                if known == 0:
                    if not coeff.is_zero():
                        return False
                    continue
                if coeff.im != 0:
                    return False
                ratio = coeff.re / known
                if scale is None:
                    scale = ratio
                elif ratio != scale:
                    return False
    return scale is not None and scale != 0


def _partitions(total: int):
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _partitions(total - first):
            if not rest or rest[0] >= first:
                yield (first,) + rest


def _skew_formula_agrees(cones: ConeProvider) -> bool:
    quadrant = cones("omega1")
    for n in (4, 5, 6):
        for mults in _partitions(n - 2):
            eigs = []
            for value, mult in enumerate(mults, start=1):
                eigs.extend([value] * mult)
            fam = HermitianFamily.from_matrices(
                [Matrix.identity(n - 2), _diag(eigs)]
            )
            spec = SiegelDomainSpec(n, 2, quadrant, fam)
            if solve_L(spec).s != s_from_multiplicities(n, mults):
                return False
    return True


def _bound_chain_sound(cones: ConeProvider) -> bool:
    domains = [
        ball(2), ball(3), ball(4),
        tube("omega1"), tube("omega2"), t3(), tube("omega4"), tube("omega5"), t4(),
        d1(4), d2(4),
        d3(1, 0, 1, 1), d3(1, 1, 0, 1),
        d4(1, 0, 0, 1), d4(1, 0, 1, 1), d4(1, 1, 0, 1),
        d5((1, 0, 0)), d5((1, 1, 0)), d5((1, 1, 1)),
        d6((1, 1, 0)), d6((2, 1, 0)),
        ball_product(2, 1), ball_product(3, 2), ball_product(2, 1, 1),
    ]
    for domain in domains:
        report = analyze(domain, cones)
        total = report.dims.total
        b = report.bounds
        if not (
            total <= b.component_bound
            and total <= b.graded_cap_bound
            and total <= b.skew_cap_bound
            and total <= b.closed_form_bound
        ):
            return False
        if report.dims.d_half > 2 * report.spec.m or report.dims.d_1 > report.spec.k:
            return False
        if report.s > report.spec.m * report.spec.m:
            return False
        if report.omega_hermitian.kind == COUNTEREXAMPLE:
            return False
    return True


def _grading_ok(spec: SiegelDomainSpec) -> bool:
    sols = solve_all(spec)
    return check_grading(spec, materialize(spec, sols)).passed


def _bracket_identities_d6(cones: ConeProvider) -> bool:
    spec = build(d6((1, 1, 0)), cones)
    fields = materialize(spec, solve_all(spec))
    for i in range(len(fields)):
        for j in range(i + 1, len(fields)):
            from .fields import bracket

            lhs = bracket(fields[i], fields[j])
            rhs = bracket(fields[j], fields[i])
            if not all((a + b).is_zero() for a, b in zip(lhs.components, rhs.components)):
                return False
    for i in range(len(fields)):
        for j in range(i + 1, len(fields)):
            for l in range(j + 1, len(fields)):
                if not jacobi_defect(fields[i], fields[j], fields[l]).is_zero():
                    return False
    return True


def verify_paper(
    expected: Optional[dict] = None,
    cones: Optional[ConeProvider] = None,
) -> VerifyReport:
    """Run the complete acceptance battery and report expected vs computed.

    ``expected`` overrides individual expectations (for negative controls);
    ``cones`` substitutes the catalog lookup everywhere, so a deliberately
    broken cone shows up as failures in every check that consumes it.
    """
    exp = dict(EXPECTED)
    if expected:
        exp.update(expected)
    provider: ConeProvider = cones if cones is not None else catalog_cone

    computed: dict[str, object] = {}

    for cone_id in ("omega1", "omega2", "omega3", "omega4", "omega5", "omega6"):
        computed[f"cone_dim_{cone_id}"] = provider(cone_id).dim_g
    for k in (2, 3, 4):
        computed[f"isotropy_bound_k{k}"] = isotropy_bound(k)
    computed["isotropy_cap_respected"] = all(
        provider(cid).dim_g <= isotropy_bound(provider(cid).k)
        for cid in ("omega1", "omega2", "omega3", "omega4", "omega5", "omega6")
    )
    computed["isotropy_equality_cases"] = [
        cid
        for cid in ("omega1", "omega2", "omega3", "omega4", "omega5", "omega6")
        if provider(cid).dim_g == isotropy_bound(provider(cid).k)
    ]

    for n in (2, 3, 4, 5):
        computed[f"ball_total_n{n}"] = analyze(ball(n), provider).dims.total
    computed["tube_total_omega2"] = analyze(tube("omega2"), provider).dims.total
    computed["t3_total"] = analyze(t3(), provider).dims.total
    computed["tube_total_omega4"] = analyze(tube("omega4"), provider).dims.total
    computed["tube_total_omega5"] = analyze(tube("omega5"), provider).dims.total
    computed["t4_total"] = analyze(t4(), provider).dims.total

    computed["d1_total_n4"] = analyze(d1(4), provider).dims.total
    d2_report = analyze(d2(4), provider)
    computed["d2_verdict"] = d2_report.homogeneity.verdict
    computed["d2_a_part_dim"] = d2_report.homogeneity.a_part_dim

    d3_totals_ok = True
    for tag, params in (("1011", (1, 0, 1, 1)), ("1101", (1, 1, 0, 1))):
        spec = build(d3(*params), provider)
        sols = solve_all(spec)
        computed[f"d3_{tag}_ghalf"] = sols.dims.d_half
        computed[f"d3_{tag}_g1"] = sols.dims.d_1
        d3_totals_ok = d3_totals_ok and sols.dims.total <= 10
    computed["d3_totals_within_branch_bound"] = d3_totals_ok

    computed["d4_separable_total"] = analyze(d4(1, 0, 0, 1), provider).dims.total
    d4_totals_ok = True
    for tag, params in (("1011", (1, 0, 1, 1)), ("1101", (1, 1, 0, 1))):
        spec = build(d4(*params), provider)
        sols = solve_all(spec)
        computed[f"d4_{tag}_ghalf"] = sols.dims.d_half
        computed[f"d4_{tag}_g1"] = sols.dims.d_1
        d4_totals_ok = d4_totals_ok and sols.dims.total <= 15
    computed["d4_totals_within_branch_bound"] = d4_totals_ok

    computed["d5_axis_totals"] = [
        analyze(d5(tuple(1 if i == j else 0 for i in range(3))), provider).dims.total
        for j in range(3)
    ]
    computed["d5_multi_verdicts"] = [
        analyze(d5(v), provider).homogeneity.verdict for v in ((1, 1, 0), (1, 1, 1))
    ]

    d6_spec = build(d6((1, 1, 0)), provider)
    d6_sols = solve_all(d6_spec)
    computed["d6_s"] = d6_sols.skew.s
    computed["d6_g0"] = d6_sols.dims.d_0
    computed["d6_ghalf"] = d6_sols.dims.d_half
    computed["d6_g1"] = d6_sols.dims.d_1
    computed["d6_g1_matches_known_basis"] = _d6_basis_matches(d6_sols)
    computed["d6_total"] = d6_sols.dims.total
    computed["d6_interior_verdict"] = analyze(d6((2, 1, 0)), provider).homogeneity.verdict

    computed["skew_count_formula_matches_solver"] = _skew_formula_agrees(provider)
    computed["high_cone_margins_all_negative"] = all(
        e.margin < 0 for e in closed_form_sweep(16)
    )
    computed["d3_branch_bound"] = bound_chain(4, 2, 2, 2, 0, 2).component_bound
    computed["d4_branch_bound"] = bound_chain(5, 2, 5, 2, 0, 2).component_bound
    computed["d6_branch_bound"] = bound_chain(4, 3, 1, 4, 0, 3).component_bound
    computed["bound_chain_sound_on_catalog"] = _bound_chain_sound(provider)

    computed["grading_ball3"] = _grading_ok(build(ball(3), provider))
    computed["grading_d6"] = _grading_ok(d6_spec)
    computed["bracket_identities_d6"] = _bracket_identities_d6(provider)

    computed["classify_n2"] = dict(classify(2, provider).homogeneous)
    computed["classify_n3"] = dict(classify(3, provider).homogeneous)
    computed["classify_n4_survivors"] = list(classify(4, provider).survivors_at_target)
    computed["classify_n5_survivors"] = list(classify(5, provider).survivors_at_target)

    checks = []
    for name, expected_value in exp.items():
        value = computed.get(name)
        checks.append(CheckResult(name, expected_value, value, value == expected_value))
    passed = sum(1 for c in checks if c.passed)
    return VerifyReport(tuple(checks), passed, len(checks) - passed)
