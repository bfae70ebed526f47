"""Cone catalog, membership, and the isotropy dimension bound."""

from fractions import Fraction

import pytest

from siegelalg.cones import (
    CATALOG_IDS,
    ConeSpec,
    PolyhedralFactor,
    Region,
    catalog_cone,
    contains_in_closure,
    half_line,
    in_g_omega,
    isotropy_bound,
    membership_constraints,
    orthant,
)
from siegelalg.errors import ValidationError
from siegelalg.linalg import Matrix, from_real_rows

EXPECTED_DIMS = {
    "omega1": 2,
    "omega2": 3,
    "omega3": 4,
    "omega4": 4,
    "omega5": 5,
    "omega6": 7,
}


class TestCatalog:
    @pytest.mark.parametrize("cone_id,dim", sorted(EXPECTED_DIMS.items()))
    def test_dims(self, cone_id, dim):
        assert catalog_cone(cone_id).dim_g == dim

    def test_unknown_id(self):
        with pytest.raises(ValidationError):
            catalog_cone("omega9")

    @pytest.mark.parametrize("cone_id", CATALOG_IDS)
    def test_annihilator_counts(self, cone_id):
        cone = catalog_cone(cone_id)
        assert len(cone.annihilators) == cone.k * cone.k - cone.dim_g

    @pytest.mark.parametrize("cone_id", CATALOG_IDS)
    def test_basis_plus_annihilators_fill_matrix_space(self, cone_id):
        cone = catalog_cone(cone_id)
        rows = [ [x.re for x in m.vectorize()] for m in cone.g_basis ]
        rows += [list(a) for a in cone.annihilators]
        assert from_real_rows(rows).rank() == cone.k * cone.k

    @pytest.mark.parametrize("cone_id", CATALOG_IDS)
    def test_flow_smoke_check(self, cone_id):
        # first-order check that each generator is tangent to the cone:
        # (I + tA) x stays interior for small rational t
        cone = catalog_cone(cone_id)
        for a in cone.g_basis:
            for t in (Fraction(1, 8), Fraction(-1, 8), Fraction(1, 16), Fraction(-1, 16)):
                moved = (Matrix.identity(cone.k) + a.scale(t)).apply(cone.interior_point)
                assert contains_in_closure(cone, [x.re for x in moved]) is Region.INTERIOR


class TestIsotropyBound:
    @pytest.mark.parametrize("k,expect", [(2, 2), (3, 4), (4, 7)])
    def test_values(self, k, expect):
        assert isotropy_bound(k) == expect

    def test_bound_respected_with_known_equality_cases(self):
        for cone_id, dim in EXPECTED_DIMS.items():
            cone = catalog_cone(cone_id)
            assert dim <= isotropy_bound(cone.k)
        assert catalog_cone("omega3").dim_g == isotropy_bound(3)
        assert catalog_cone("omega6").dim_g == isotropy_bound(4)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValidationError):
            isotropy_bound(0)


class TestMembership:
    def test_diagonal_in_orthant_algebra(self):
        cone = catalog_cone("omega1")
        assert in_g_omega(cone, from_real_rows([[1, 0], [0, 5]]))

    def test_offdiagonal_excluded(self):
        cone = catalog_cone("omega1")
        assert not in_g_omega(cone, from_real_rows([[0, 1], [0, 0]]))

    def test_lorentz3_generator_shape(self):
        cone = catalog_cone("omega3")
        member = from_real_rows([[0, 1, 0], [1, 0, 0], [0, 0, 0]])
        assert in_g_omega(cone, member)
        assert not in_g_omega(cone, from_real_rows(
            [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]
        ))

    def test_constraint_matrix_shape(self):
        cone = catalog_cone("omega3")
        constraints = membership_constraints(cone)
        assert (constraints.nrows, constraints.ncols) == (5, 9)
        member = from_real_rows([[0, 0, 0], [0, 0, 1], [0, -1, 0]])
        assert all(x.is_zero() for x in constraints.apply(member.vectorize()))


class TestClosure:
    def test_orthant_interior(self):
        assert contains_in_closure(catalog_cone("omega1"), [1, 1]) is Region.INTERIOR

    def test_lorentz_boundary(self):
        assert contains_in_closure(catalog_cone("omega3"), [1, 1, 0]) is Region.BOUNDARY

    def test_lorentz_outside(self):
        assert contains_in_closure(catalog_cone("omega3"), [0, 1, 0]) is Region.OUTSIDE

    def test_mixed_cone(self):
        omega5 = catalog_cone("omega5")
        assert contains_in_closure(omega5, [1, 0, 0, 1]) is Region.INTERIOR
        assert contains_in_closure(omega5, [1, 0, 0, 0]) is Region.BOUNDARY
        assert contains_in_closure(omega5, [1, 2, 0, 1]) is Region.OUTSIDE

    def test_origin_is_boundary(self):
        assert contains_in_closure(catalog_cone("omega3"), [0, 0, 0]) is Region.BOUNDARY

    def test_dimension_mismatch(self):
        with pytest.raises(ValidationError):
            contains_in_closure(catalog_cone("omega1"), [1, 2, 3])


class TestValidation:
    def test_scalars_required(self):
        with pytest.raises(ValidationError):
            ConeSpec(
                name="bad",
                k=2,
                g_basis=(from_real_rows([[1, 0], [0, 0]]),),
                interior_point=(Fraction(1), Fraction(1)),
                boundary=(PolyhedralFactor(((Fraction(1), Fraction(0)),
                                            (Fraction(0), Fraction(1)))),),
            )

    def test_interior_point_checked(self):
        with pytest.raises(ValidationError):
            ConeSpec(
                name="bad",
                k=1,
                g_basis=(from_real_rows([[1]]),),
                interior_point=(Fraction(-1),),
                boundary=(PolyhedralFactor(((Fraction(1),),)),),
            )

    def test_orthant_one_is_half_line(self):
        assert orthant(1).k == half_line().k == 1
