"""JSON encoding and decoding for domain inputs and reports.

Rationals travel as strings "p/q" (bare "p" when the denominator is one);
complex entries as {"re": "p/q", "im": "r/s"}. No floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Union

from .cones import (
    ConeSpec,
    LorentzFactor,
    PolyhedralFactor,
    catalog_cone,
)
from .errors import ValidationError
from .graded import GradedSolutions, SiegelDomainSpec
from .hermitian import HermitianFamily, is_omega_hermitian
from .linalg import GaussianRational, Matrix


def fraction_to_str(x: Fraction) -> str:
    return str(x)


def fraction_from_json(value: Union[str, int]) -> Fraction:
    if isinstance(value, bool):
        raise ValidationError("expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"bad rational literal {value!r}") from exc
    raise ValidationError(f"bad rational value {value!r} (floats are not accepted)")


def gaussian_to_json(z: GaussianRational) -> dict:
    return {"re": fraction_to_str(z.re), "im": fraction_to_str(z.im)}


def gaussian_from_json(value) -> GaussianRational:
    if isinstance(value, dict):
        re = fraction_from_json(value.get("re", 0))
        im = fraction_from_json(value.get("im", 0))
        return GaussianRational(re, im)
    return GaussianRational(fraction_from_json(value), Fraction(0))


def matrix_to_json(m: Matrix) -> list:
    return [[gaussian_to_json(x) for x in row] for row in m.entries]


def real_matrix_to_json(m: Matrix) -> list:
    return [[fraction_to_str(x.re) for x in row] for row in m.entries]


def matrix_from_json(rows, expect_shape: Optional[tuple[int, int]] = None) -> Matrix:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ValidationError("matrix must be a list of rows")
    m = Matrix.from_rows(
        [[gaussian_from_json(x) for x in row] for row in rows]
    ) if rows else Matrix.zeros(0, 0)
    if expect_shape is not None and (m.nrows, m.ncols) != expect_shape:
        raise ValidationError(f"matrix shape {m.nrows}x{m.ncols} != expected {expect_shape}")
    return m


def _factor_to_json(factor) -> dict:
    if isinstance(factor, LorentzFactor):
        return {"kind": "lorentz", "coords": list(factor.coords)}
    return {
        "kind": "polyhedral",
        "functionals": [[fraction_to_str(x) for x in f] for f in factor.functionals],
    }


def _factor_from_json(doc) -> Union[PolyhedralFactor, LorentzFactor]:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ValidationError("boundary factor must carry a 'kind'")
    if doc["kind"] == "lorentz":
        return LorentzFactor(tuple(int(c) for c in doc["coords"]))
    if doc["kind"] == "polyhedral":
        return PolyhedralFactor(
            tuple(tuple(fraction_from_json(x) for x in f) for f in doc["functionals"])
        )
    raise ValidationError(f"unknown boundary kind {doc['kind']!r}")


def cone_to_json(cone: ConeSpec) -> dict:
    return {
        "name": cone.name,
        "k": cone.k,
        "g_basis": [real_matrix_to_json(m) for m in cone.g_basis],
        "interior_point": [fraction_to_str(x) for x in cone.interior_point],
        "boundary": {"factors": [_factor_to_json(f) for f in cone.boundary]},
    }


def cone_from_json(doc) -> ConeSpec:
    """Catalog id string or a full custom description."""
    if isinstance(doc, str):
        return catalog_cone(doc)
    if not isinstance(doc, dict):
        raise ValidationError("cone must be a catalog id or an object")
    if set(doc) == {"cone"}:
        return cone_from_json(doc["cone"])
    k = int(doc["k"])
    g_basis = tuple(
        matrix_from_json(rows, (k, k)) for rows in doc["g_basis"]
    )
    interior = tuple(fraction_from_json(x) for x in doc["interior_point"])
    boundary_doc = doc["boundary"]
    if isinstance(boundary_doc, dict) and "factors" in boundary_doc:
        factors = tuple(_factor_from_json(f) for f in boundary_doc["factors"])
    elif isinstance(boundary_doc, list):
        factors = tuple(_factor_from_json(f) for f in boundary_doc)
    else:
        factors = (_factor_from_json(boundary_doc),)
    return ConeSpec(
        name=str(doc.get("name", "custom")),
        k=k,
        g_basis=g_basis,
        interior_point=interior,
        boundary=factors,
    )


def family_to_json(family: HermitianFamily) -> list:
    return [matrix_to_json(c) for c in family.components]


def family_from_json(doc, k: int, m: int) -> HermitianFamily:
    if not isinstance(doc, list) or len(doc) != k:
        raise ValidationError(f"'H' must be a list of {k} matrices")
    comps = tuple(matrix_from_json(rows, (m, m)) for rows in doc)
    return HermitianFamily(k, m, comps)


def spec_to_json(spec: SiegelDomainSpec) -> dict:
    return {
        "n": spec.n,
        "k": spec.k,
        "cone": spec.cone.name if spec.cone.name.startswith("omega") else cone_to_json(spec.cone),
        "H": family_to_json(spec.form),
    }


def load_domain_spec(doc: dict, samples: int = 32, seed: int = 0) -> SiegelDomainSpec:
    """Parse and fully validate a domain document {"n", "k", "cone", "H"}.

    Structural invariants raise immediately; a cone-compatibility
    counterexample for the Hermitian family is also a validation error and
    names the witness vector.
    """
    if not isinstance(doc, dict):
        raise ValidationError("domain document must be an object")
    missing = {"n", "k", "cone", "H"} - set(doc)
    if missing:
        raise ValidationError(f"domain document missing keys: {sorted(missing)}")
    n, k = int(doc["n"]), int(doc["k"])
    cone = cone_from_json(doc["cone"])
    family = family_from_json(doc["H"], k, n - k)
    spec = SiegelDomainSpec(n, k, cone, family)
    verdict = is_omega_hermitian(family, cone, samples=samples, seed=seed)
    if verdict.is_counterexample():
        witness = "(" + ", ".join(str(x) for x in verdict.witness) + ")"
        raise ValidationError(
            f"family is not compatible with the cone: H(w,w) leaves the closed "
            f"cone minus zero at w = {witness}"
        )
    return spec


def solutions_bases_to_json(sols: GradedSolutions) -> dict:
    """Explicit generator data, gated behind a CLI flag to keep reports small."""
    g0 = [
        {"A": real_matrix_to_json(a), "B": matrix_to_json(b)}
        for a, b in sols.g0.basis
    ]
    g_half = []
    for el in sols.g_half.basis:
        m = el.c.in_dim
        g_half.append(
            {
                "phi": matrix_to_json(el.phi),
                "c": [
                    [[gaussian_to_json(el.c.coefficient(l, i, j)) for j in range(m)]
                     for i in range(m)]
                    for l in range(el.c.out_dim)
                ],
            }
        )
    g_one = []
    for el in sols.g_one.basis:
        k = el.a.in_dim
        g_one.append(
            {
                "a": [
                    [[fraction_to_str(el.a.coefficient(l, i, j).re) for j in range(k)]
                     for i in range(k)]
                    for l in range(el.a.out_dim)
                ],
                "b": [
                    [[gaussian_to_json(el.b.coefficient(l, i, j)) for j in range(el.b.right_dim)]
                     for i in range(el.b.left_dim)]
                    for l in range(el.b.out_dim)
                ],
            }
        )
    return {"g_0": g0, "g_half": g_half, "g_1": g_one}
