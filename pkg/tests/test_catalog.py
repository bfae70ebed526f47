"""Domain builders, classification tables, and the verification driver."""

import pytest

from siegelalg.catalog import (
    analyze,
    ball,
    ball_product,
    build,
    classify,
    d1,
    d2,
    d3,
    d4,
    d5,
    d6,
    t3,
    t4,
    tube,
    verify_paper,
)
from siegelalg.cones import ConeSpec, catalog_cone
from siegelalg.errors import ValidationError
from siegelalg.graded import graded_dims
from siegelalg.hermitian import COUNTEREXAMPLE


class TestBuild:
    def test_ball_realization(self):
        spec = build(ball(4))
        assert (spec.n, spec.k, spec.m) == (4, 1, 3)
        assert spec.form.components[0] == spec.form.components[0].conj_transpose()

    def test_d6_realization(self):
        spec = build(d6((1, 1, 0)))
        assert (spec.n, spec.k, spec.m) == (4, 3, 1)
        assert spec.cone.name == "omega3"

    def test_ball_product_blocks(self):
        spec = build(ball_product(3, 2))
        assert (spec.n, spec.k, spec.m) == (5, 2, 3)
        # first factor occupies the first two w-coordinates
        assert [spec.form.components[0].entry(i, i).re for i in range(3)] == [1, 1, 0]
        assert [spec.form.components[1].entry(i, i).re for i in range(3)] == [0, 0, 1]

    def test_ball_product_oracle_total(self):
        # oracle: d(B^3 x B^2) = 15 + 8
        assert graded_dims(build(ball_product(3, 2))).total == 23

    def test_single_factor_product_is_ball(self):
        assert build(ball_product(3)) == build(ball(3))

    def test_tube_aliases(self):
        assert build(t3()) == build(tube("omega3"))
        assert build(t4()) == build(tube("omega6"))

    @pytest.mark.parametrize(
        "bad",
        [
            d3(1, 0, 0, 0),       # determinant zero
            d3(1, 2, 1, 2),       # determinant zero
            d3(-1, 0, 1, 1),      # negative parameter
            d5((0, 0, 0)),        # zero vector
            d6((0, 1, 0)),        # v1 not positive
            d6((1, 1, 1)),        # outside the closed cone
            ball(0),
            d1(2),
        ],
    )
    def test_invalid_parameters(self, bad):
        with pytest.raises(ValidationError):
            build(bad)

    def test_unknown_tube_cone(self):
        with pytest.raises(ValidationError):
            build(tube("omega7"))

    def test_builds_are_compatible_with_their_cones(self):
        domains = [
            ball(3), ball_product(2, 1, 1), d1(4), d2(4),
            d3(1, 0, 1, 1), d4(1, 1, 0, 1), d5((1, 0, 0)), d6((1, 1, 0)),
            t3(), t4(),
        ]
        for domain in domains:
            report = analyze(domain)
            assert report.omega_hermitian.kind != COUNTEREXAMPLE


class TestLabels:
    def test_ball_product_label(self):
        assert ball_product(2, 1, 1).label == "B2xB1xB1"

    def test_tube_labels(self):
        assert t3().label == "T3"
        assert tube("omega5").label == "B1xT3"

    def test_parameter_labels(self):
        assert d6((1, 1, 0)).label == "D6(1,1,0)"
        assert d3(1, 0, 1, 1).label == "D3(1,0,1,1)"


class TestAnalyze:
    def test_totals_respect_bounds(self):
        for domain in (ball(3), d6((1, 1, 0)), ball_product(2, 2), t4()):
            report = analyze(domain)
            total = report.dims.total
            assert total <= report.bounds.component_bound
            assert total <= report.bounds.graded_cap_bound
            assert total <= report.bounds.skew_cap_bound
            assert total <= report.bounds.closed_form_bound

    def test_d1_report(self):
        report = analyze(d1(4))
        assert report.dims.total == 18
        assert report.homogeneity.verdict == "generically-open-orbits"


class TestClassify:
    def test_n2(self):
        assert dict(classify(2).homogeneous) == {"B2": 8, "B1xB1": 6}

    def test_n3(self):
        assert dict(classify(3).homogeneous) == {
            "B3": 15, "B2xB1": 11, "B1xB1xB1": 9, "T3": 10
        }

    def test_n4_survivors(self):
        report = classify(4)
        assert report.survivors_at_target == ("B2xB1xB1",)
        table = dict(report.homogeneous)
        assert table["B2xB1xB1"] == 14
        assert table["T4"] == 15
        assert table["B2xB2"] == 16

    def test_n5_survivors(self):
        report = classify(5)
        assert report.survivors_at_target == ("B3xB2",)
        assert any(e.status == "pruned-by-bound" and e.margin < 0 for e in report.entries)

    def test_pruned_candidates_are_not_transitive(self):
        report = classify(4)
        pruned = [e for e in report.entries if e.status == "pruned-not-transitive"]
        assert {e.label for e in pruned} == {
            "D2(n=4)", "D3(1,0,1,1)", "D3(1,1,0,1)",
            "D5(1,1,0)", "D5(1,1,1)", "D6(2,1,0)",
        }

    def test_factor_permutation_invariance(self):
        a = graded_dims(build(ball_product(2, 1, 1)))
        b = graded_dims(build(ball_product(1, 2, 1)))
        c = graded_dims(build(ball_product(1, 1, 2)))
        assert a.total == b.total == c.total
        assert a.d_0 == b.d_0 == c.d_0

    def test_out_of_range(self):
        with pytest.raises(ValidationError):
            classify(6)
        with pytest.raises(ValidationError):
            classify(1)


class TestVerifyPaper:
    def test_fresh_build_all_pass(self):
        report = verify_paper()
        assert report.failed == 0
        assert report.passed == len(report.checks)

    def test_perturbed_expectation_fails_alone(self):
        report = verify_paper(expected={"d6_total": 11})
        assert [c.name for c in report.failures()] == ["d6_total"]

    def test_truncated_cone_fails_many(self):
        def truncated(cone_id):
            cone = catalog_cone(cone_id)
            if cone_id == "omega3":
                return ConeSpec(
                    cone.name, cone.k, cone.g_basis[:3],
                    cone.interior_point, cone.boundary,
                )
            return cone

        report = verify_paper(cones=truncated)
        failed = {c.name for c in report.failures()}
        assert len(failed) > 1
        assert "cone_dim_omega3" in failed
        assert "t3_total" in failed
