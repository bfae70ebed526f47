"""Exact scalars and dense linear algebra over the Gaussian rationals.

Every quantity in this package is either a rational number (``fractions.Fraction``)
or a Gaussian rational (complex number with rational real and imaginary parts).
No floating point is used anywhere: ranks and nullspace dimensions are the
answers, so a single rounding error could flip a result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import ValidationError

Scalar = Union[int, Fraction, "GaussianRational"]


def _frac(x: Union[int, Fraction]) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(x: Scalar) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(_frac(x), Fraction(0))

    def __add__(self, other: Scalar) -> "GaussianRational":
        o = GaussianRational.of(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "GaussianRational":
        o = GaussianRational.of(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Scalar) -> "GaussianRational":
        return GaussianRational.of(other) - self

    def __mul__(self, other: Scalar) -> "GaussianRational":
        o = GaussianRational.of(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "GaussianRational":
        o = GaussianRational.of(other)
        d = o.abs2()
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational(o.re / d, -o.im / d)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, an exact nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


GR_ZERO = GaussianRational(Fraction(0), Fraction(0))
GR_ONE = GaussianRational(Fraction(1), Fraction(0))
GR_I = GaussianRational(Fraction(0), Fraction(1))


def gr(re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0) -> GaussianRational:
    """Shorthand constructor for Gaussian rationals."""
    return GaussianRational(_frac(re), _frac(im))


@dataclass(frozen=True)
class RrefResult:
    matrix: "Matrix"
    rank: int
    pivots: tuple[int, ...]


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix with Gaussian-rational entries.

    Matrices of any shape are allowed, including zero rows or columns, which
    occur naturally for tube domains (empty Hermitian families).
    """

    nrows: int
    ncols: int
    entries: tuple[tuple[GaussianRational, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.nrows:
            raise ValidationError("row count mismatch")
        for row in self.entries:
            if len(row) != self.ncols:
                raise ValidationError("column count mismatch")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Scalar]], real: bool = False) -> "Matrix":
        """Build a matrix from nested sequences.

        With ``real=True`` the entries are required to have zero imaginary part;
        a violation is a validation error, not a silent truncation.
        """
        ent = tuple(tuple(GaussianRational.of(x) for x in row) for row in rows)
        nrows = len(ent)
        ncols = len(ent[0]) if nrows else 0
        if real:
            for i, row in enumerate(ent):
                for j, x in enumerate(row):
                    if x.im != 0:
                        raise ValidationError(
                            f"entry ({i},{j}) = {x} is not real"
                        )
        return Matrix(nrows, ncols, ent)

    @staticmethod
    def zeros(nrows: int, ncols: int) -> "Matrix":
        return Matrix(nrows, ncols, tuple(tuple(GR_ZERO for _ in range(ncols)) for _ in range(nrows)))

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(
            n, n,
            tuple(tuple(GR_ONE if i == j else GR_ZERO for j in range(n)) for i in range(n)),
        )

    def entry(self, i: int, j: int) -> GaussianRational:
        return self.entries[i][j]

    def row(self, i: int) -> tuple[GaussianRational, ...]:
        return self.entries[i]

    def is_real(self) -> bool:
        return all(x.im == 0 for row in self.entries for x in row)

    def is_hermitian(self) -> bool:
        if self.nrows != self.ncols:
            return False
        return all(
            self.entries[i][j] == self.entries[j][i].conjugate()
            for i in range(self.nrows)
            for j in range(self.nrows)
        )

    def transpose(self) -> "Matrix":
        return Matrix(
            self.ncols, self.nrows,
            tuple(tuple(self.entries[i][j] for i in range(self.nrows)) for j in range(self.ncols)),
        )

    def conj_transpose(self) -> "Matrix":
        return Matrix(
            self.ncols, self.nrows,
            tuple(
                tuple(self.entries[i][j].conjugate() for i in range(self.nrows))
                for j in range(self.ncols)
            ),
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._require_same_shape(other)
        return Matrix(
            self.nrows, self.ncols,
            tuple(
                tuple(a + b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            ),
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._require_same_shape(other)
        return Matrix(
            self.nrows, self.ncols,
            tuple(
                tuple(a - b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            ),
        )

    def scale(self, c: Scalar) -> "Matrix":
        cc = GaussianRational.of(c)
        return Matrix(
            self.nrows, self.ncols,
            tuple(tuple(x * cc for x in row) for row in self.entries),
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValidationError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        rows = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = GR_ZERO
                for t in range(self.ncols):
                    acc = acc + self.entries[i][t] * other.entries[t][j]
                row.append(acc)
            rows.append(tuple(row))
        return Matrix(self.nrows, other.ncols, tuple(rows))

    def apply(self, v: Sequence[Scalar]) -> tuple[GaussianRational, ...]:
        """Matrix-vector product."""
        if len(v) != self.ncols:
            raise ValidationError("vector length mismatch")
        vv = [GaussianRational.of(x) for x in v]
        out = []
        for i in range(self.nrows):
            acc = GR_ZERO
            for t in range(self.ncols):
                acc = acc + self.entries[i][t] * vv[t]
            out.append(acc)
        return tuple(out)

    def vectorize(self) -> tuple[GaussianRational, ...]:
        """Row-major flattening."""
        return tuple(x for row in self.entries for x in row)

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    def _require_same_shape(self, other: "Matrix") -> None:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValidationError("shape mismatch")

    def rref(self) -> RrefResult:
        """Reduced row echelon form over the exact scalar field.

        Deterministic: columns are scanned left to right and the first row with
        a nonzero entry (top to bottom) becomes the pivot row.
        """
        rows = [list(r) for r in self.entries]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            pr = None
            for i in range(r, self.nrows):
                if not rows[i][c].is_zero():
                    pr = i
                    break
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            inv = GR_ONE / rows[r][c]
            rows[r] = [x * inv for x in rows[r]]
            for i in range(self.nrows):
                if i != r and not rows[i][c].is_zero():
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        reduced = Matrix(self.nrows, self.ncols, tuple(tuple(row) for row in rows))
        return RrefResult(reduced, len(pivots), tuple(pivots))

    def rank(self) -> int:
        return self.rref().rank

    def nullspace_basis(self) -> list[tuple[GaussianRational, ...]]:
        """Deterministic basis of the right kernel.

        Each free column, taken in column order, is set to one in turn; the
        count always equals ``ncols - rank``.
        """
        res = self.rref()
        pivot_set = set(res.pivots)
        free_cols = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for f in free_cols:
            v = [GR_ZERO] * self.ncols
            v[f] = GR_ONE
            for r_idx, p in enumerate(res.pivots):
                v[p] = -res.matrix.entries[r_idx][f]
            basis.append(tuple(v))
        return basis

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(x) for x in row) for row in self.entries) + "]"


def stack_rows(matrices: Iterable[Matrix]) -> Matrix:
    """Vertical concatenation; all blocks must share a column count."""
    mats = list(matrices)
    if not mats:
        raise ValidationError("nothing to stack")
    ncols = mats[0].ncols
    rows: list[tuple[GaussianRational, ...]] = []
    for m in mats:
        if m.ncols != ncols:
            raise ValidationError("column mismatch in stack")
        rows.extend(m.entries)
    return Matrix(len(rows), ncols, tuple(rows))


def from_real_rows(rows: Sequence[Sequence[Union[int, Fraction]]]) -> Matrix:
    return Matrix.from_rows(rows, real=True)


def span_rank(vectors: Sequence[Sequence[Scalar]], width: int) -> int:
    """Rank of the span of the given coefficient vectors."""
    if not vectors:
        return 0
    m = Matrix.from_rows(vectors)
    if m.ncols != width:
        raise ValidationError("vector width mismatch")
    return m.rank()


def in_span(vectors: Sequence[Sequence[Scalar]], candidate: Sequence[Scalar], width: int) -> bool:
    """Exact membership of ``candidate`` in the linear span of ``vectors``."""
    cand = [GaussianRational.of(x) for x in candidate]
    if all(x.is_zero() for x in cand):
        return True
    if not vectors:
        return False
    base = span_rank(vectors, width)
    extended = list(vectors) + [cand]
    return span_rank(extended, width) == base
