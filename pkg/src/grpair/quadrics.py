"""Quadratic forms on ∧²V: Plücker quadrics, translates, pencils.

A quadric is stored as a symmetric 10x10 matrix A with q(α) = αᵀAα
(no factor 1/2), so its polarization is αᵀAβ and its singular locus is
the projectivized kernel of A.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactalg import (
    Field,
    FieldMismatch,
    GF,
    Matrix,
    PrimeField,
    Subspace,
    kernel_basis,
    rank,
)
from .exterior import (
    INDICES,
    KVector,
    PAIRS,
    second_exterior_power,
    sort_sign,
    two_vector_coords,
)

DIM = len(PAIRS)
SYM_ENTRIES = tuple((i, j) for i in range(DIM) for j in range(i, DIM))


class Quadric:
    __slots__ = ("matrix",)

    def __init__(self, matrix: Matrix):
        if matrix.shape != (DIM, DIM):
            raise ValueError(f"quadrics on ∧²V are {DIM}x{DIM}, got {matrix.rows}x{matrix.cols}")
        if not matrix.is_symmetric():
            raise ValueError("quadric matrix must be symmetric")
        self.matrix = matrix

    @property
    def field(self) -> Field:
        return self.matrix.field

    def __call__(self, alpha: Sequence):
        F = self.field
        a = [F.convert(x) for x in alpha]
        Aa = self.matrix.apply(a)
        r = F.zero()
        for x, y in zip(a, Aa):
            r = F.add(r, F.mul(x, y))
        return r

    def gradient(self, alpha: Sequence) -> tuple:
        """2Aα."""
        F = self.field
        return tuple(F.mul(2, x) for x in self.matrix.apply(alpha))

    @property
    def rank(self) -> int:
        return rank(self.matrix)

    @property
    def corank(self) -> int:
        return DIM - self.rank

    def kernel(self) -> Subspace:
        return kernel_basis(self.matrix)

    def coefficient_vector(self) -> tuple:
        """The 55 upper-triangular entries; a faithful linear coordinate."""
        e = self.matrix.entries
        return tuple(e[i][j] for i, j in SYM_ENTRIES)

    def combine(self, lam, other: "Quadric", mu) -> "Quadric":
        return Quadric(self.matrix.scale(lam) + other.matrix.scale(mu))

    def pullback(self, m: Matrix) -> "Quadric":
        """q ∘ m, i.e. the matrix mᵀ A m."""
        return Quadric(m.T @ self.matrix @ m)

    def __eq__(self, other):
        return isinstance(other, Quadric) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"Quadric(rank={self.rank}, {self.field})"


@dataclass(frozen=True)
class QuadricSpace:
    quadrics: tuple
    tag: str = "Gr"

    def __post_init__(self):
        qs = tuple(self.quadrics)
        object.__setattr__(self, "quadrics", qs)
        if not qs:
            raise ValueError("empty quadric space")
        F = qs[0].field
        if any(q.field != F for q in qs):
            raise FieldMismatch("quadrics over different fields")
        if rank(Matrix([q.coefficient_vector() for q in qs], F)) != len(qs):
            raise ValueError("quadrics are linearly dependent")

    @property
    def field(self) -> Field:
        return self.quadrics[0].field

    def __len__(self):
        return len(self.quadrics)

    def __iter__(self):
        return iter(self.quadrics)

    def span(self) -> Subspace:
        return Subspace([q.coefficient_vector() for q in self.quadrics], len(SYM_ENTRIES), self.field)


def _as_vector(v, field: Field) -> tuple:
    if isinstance(v, KVector):
        if v.degree != 1 or v.dual:
            raise ValueError("expected a vector in V")
        return v.coords()
    return tuple(field.convert(x) for x in v)


def plucker_quadric(v, field: Field | None = None) -> Quadric:
    """q_v(α) = α ∧ α ∧ v read against vol_V.

    A_{IJ} is the volume coefficient of e_I ∧ e_J ∧ v.
    """
    if field is None:
        field = v.field if isinstance(v, KVector) else None
    if field is None:
        raise ValueError("field required for a raw coordinate vector")
    F = field
    vv = _as_vector(v, F)
    if len(vv) != len(INDICES):
        raise ValueError("v must have 5 coordinates")
    rows = []
    for I in PAIRS:
        row = []
        for J in PAIRS:
            acc = F.zero()
            for k, c in zip(INDICES, vv):
                if F.is_zero(c):
                    continue
                s = sort_sign(I + J + (k,))
                if s:
                    acc = F.add(acc, c if s > 0 else F.neg(c))
            row.append(acc)
        rows.append(row)
    return Quadric(Matrix(rows, F))


def grassmannian_quadrics(field: Field) -> QuadricSpace:
    """The five Plücker quadrics q_{e_1}, ..., q_{e_5}."""
    qs = []
    for i in range(5):
        e = [0] * 5
        e[i] = 1
        qs.append(plucker_quadric(e, field))
    return QuadricSpace(tuple(qs), "Gr")


def translate_quadric_space(g: Matrix, tag: str = "gGr") -> QuadricSpace:
    """Quadrics cutting out M·Gr, where M = g (10x10) or ∧²g (5x5).

    Members are q_{e_i} ∘ M⁻¹, with matrices M⁻ᵀ A_i M⁻¹.
    """
    M = second_exterior_power(g) if g.shape == (5, 5) else g
    if M.shape != (DIM, DIM):
        raise ValueError(f"expected a 5x5 or 10x10 matrix, got {g.rows}x{g.cols}")
    try:
        Minv = M.inverse()
    except ZeroDivisionError:
        raise ValueError("translate by a singular matrix") from None
    base = grassmannian_quadrics(M.field)
    return QuadricSpace(tuple(q.pullback(Minv) for q in base), tag)


def stacked_rank(spaces: Sequence[QuadricSpace]) -> int:
    if not spaces:
        raise ValueError("no quadric spaces given")
    F = spaces[0].field
    if any(s.field != F for s in spaces):
        raise FieldMismatch("quadric spaces over different fields")
    rows = [q.coefficient_vector() for s in spaces for q in s]
    return rank(Matrix(rows, F))


def projective_span_dim(spaces: Sequence[QuadricSpace]) -> int:
    return stacked_rank(spaces) - 1


def common_singular_vector(q1: Quadric, q2: Quadric):
    """A nonzero vector in ker A1 ∩ ker A2, or None."""
    if q1.field != q2.field:
        raise FieldMismatch(f"{q1.field} vs {q2.field}")
    meet = q1.kernel().intersection(q2.kernel())
    if meet.dim == 0:
        return None
    return meet.basis[-1]


def projective_line_points(p: int):
    """The p+1 points of P¹(F_p), normalized: (1, μ) then (0, 1)."""
    return [(1, mu) for mu in range(p)] + [(0, 1)]


def is_proportional(q1: Quadric, q2: Quadric) -> bool:
    return rank(Matrix([q1.coefficient_vector(), q2.coefficient_vector()], q1.field)) < 2


def pencil_corank_profile(q1: Quadric, q2: Quadric, p: int | None = None):
    """Corank of λq1 + μq2 at every point (λ:μ) of P¹(F_p)."""
    F = q1.field
    if not isinstance(F, PrimeField):
        raise ValueError("pencil profiles are computed over a prime field")
    if p is not None and GF(p) != F:
        raise FieldMismatch(f"quadrics over {F}, requested p={p}")
    if q2.field != F:
        raise FieldMismatch(f"{q1.field} vs {q2.field}")
    if is_proportional(q1, q2):
        raise ValueError("proportional quadrics do not span a pencil")
    return [((lam, mu), q1.combine(lam, q2, mu).corank) for lam, mu in projective_line_points(F.p)]


def top_three_corank_sum(profile) -> int:
    cs = sorted((c for _, c in profile), reverse=True)
    return sum(cs[:3])


def corank_sum_exceeds(profile, n: int = DIM) -> bool:
    """True when three members of the pencil have corank sum exceeding n."""
    return top_three_corank_sum(profile) > n


def wedge_with_V(W: Subspace) -> Subspace:
    """The subspace W ∧ V of ∧²V."""
    F = W.field
    vecs = []
    for w in W.basis:
        for j in range(5):
            e = [0] * 5
            e[j] = 1
            vecs.append(two_vector_coords(w, e, F))
    return Subspace(vecs, DIM, F)


def psi_hyperplane(W: Subspace) -> KVector:
    """Covector cutting out Gr ∩ P(W∧V) for a 3-dimensional W ⊂ V.

    The annihilator of the 9-dimensional W∧V, returned in canonical
    (reduced echelon) scaling.
    """
    if W.ambient != 5:
        raise ValueError("W must be a subspace of V")
    if W.dim != 3:
        raise ValueError(f"W must be 3-dimensional, got dimension {W.dim}")
    WV = wedge_with_V(W)
    if WV.dim != DIM - 1:
        raise AssertionError(f"dim W∧V = {WV.dim}, expected {DIM - 1}")
    ann = WV.annihilator()
    return KVector.from_coords(2, ann.basis[0], W.field, dual=True)
