"""Exact computation of graded automorphism algebras of Siegel domains.

The package computes, in exact rational arithmetic, the five graded
components of the holomorphic automorphism algebra of a Siegel domain of the
second kind, the associated dimension-bound chain, and infinitesimal
transitivity verdicts for the cone action, together with a catalog of the
classical low-dimensional domain families and a verification driver for
their published dimension table.
"""

from .bounds import (
    BoundReport,
    bound_chain,
    closed_form_bound,
    closed_form_sweep,
    s_from_multiplicities,
)
from .catalog import (
    DomainId,
    DomainReport,
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
from .cones import (
    ConeSpec,
    Region,
    catalog_cone,
    contains_in_closure,
    in_g_omega,
    isotropy_bound,
    membership_constraints,
)
from .errors import NoCombinationFoundError, ValidationError
from .fields import (
    PolyVectorField,
    bracket,
    check_grading,
    euler_field,
    materialize,
)
from .graded import (
    G0Solution,
    GHalfSolution,
    GOneSolution,
    GradedDims,
    GradedSolutions,
    LSolution,
    SiegelDomainSpec,
    graded_dims,
    solve_all,
    solve_g0,
    solve_g1,
    solve_g_half,
    solve_L,
)
from .hermitian import (
    HermitianFamily,
    is_omega_hermitian,
    positive_definite_combination,
    validate,
)
from .homogeneity import (
    GENERICALLY_OPEN_ORBITS,
    NOT_TRANSITIVE,
    HomogeneityVerdict,
    a_part_basis,
    generic_orbit_rank,
    homogeneity_verdict,
)
from .linalg import GaussianRational, Matrix, gr
from .poly import Polynomial, PolyMatrix, generic_rank
from .serialize import load_domain_spec, spec_to_json

__all__ = [
    "BoundReport",
    "ConeSpec",
    "DomainId",
    "DomainReport",
    "G0Solution",
    "GENERICALLY_OPEN_ORBITS",
    "GHalfSolution",
    "GOneSolution",
    "GaussianRational",
    "GradedDims",
    "GradedSolutions",
    "HermitianFamily",
    "HomogeneityVerdict",
    "LSolution",
    "Matrix",
    "NOT_TRANSITIVE",
    "NoCombinationFoundError",
    "PolyMatrix",
    "PolyVectorField",
    "Polynomial",
    "Region",
    "SiegelDomainSpec",
    "ValidationError",
    "a_part_basis",
    "analyze",
    "ball",
    "ball_product",
    "bound_chain",
    "bracket",
    "build",
    "catalog_cone",
    "check_grading",
    "classify",
    "closed_form_bound",
    "closed_form_sweep",
    "contains_in_closure",
    "d1",
    "d2",
    "d3",
    "d4",
    "d5",
    "d6",
    "euler_field",
    "generic_orbit_rank",
    "generic_rank",
    "gr",
    "graded_dims",
    "homogeneity_verdict",
    "in_g_omega",
    "is_omega_hermitian",
    "isotropy_bound",
    "load_domain_spec",
    "materialize",
    "membership_constraints",
    "positive_definite_combination",
    "s_from_multiplicities",
    "solve_L",
    "solve_all",
    "solve_g0",
    "solve_g1",
    "solve_g_half",
    "spec_to_json",
    "t3",
    "t4",
    "tube",
    "validate",
    "verify_paper",
]
