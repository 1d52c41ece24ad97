"""Exterior algebra of V = F^5 with basis e_1..e_5.

Basis k-vectors are indexed by strictly increasing tuples drawn from
``1..5`` in lexicographic order; for k = 2 that gives the ten positions
``(1,2), (1,3), ..., (4,5)`` used as coordinates on the Plücker space.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Mapping, Sequence

from .exactalg import Field, FieldMismatch, Matrix, QQ

N = 5
INDICES = tuple(range(1, N + 1))
BASIS = {k: tuple(combinations(INDICES, k)) for k in range(N + 1)}
POSITION = {k: {t: i for i, t in enumerate(BASIS[k])} for k in range(N + 1)}
PAIRS = BASIS[2]
PAIR_INDEX = POSITION[2]
VOL = INDICES


def sort_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq``; 0 if an entry repeats."""
    if len(set(seq)) != len(seq):
        return 0
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


@dataclass(frozen=True)
class KVector:
    """Element of ∧^k V (``dual=False``) or ∧^k V∨ (``dual=True``).

    ``coeffs`` maps sorted index tuples to raw field values; zeros are
    dropped on construction.
    """

    degree: int
    coeffs: Mapping[tuple, object]
    field: Field = QQ
    dual: bool = False
    _items: tuple = dc_field(init=False, repr=False, compare=True)

    def __post_init__(self):
        if not 0 <= self.degree <= N:
            raise ValueError(f"degree {self.degree} outside 0..{N}")
        F = self.field
        clean = {}
        for t, c in self.coeffs.items():
            t = tuple(t)
            if len(t) != self.degree or list(t) != sorted(set(t)) or not set(t) <= set(INDICES):
                raise ValueError(f"bad index tuple {t} for degree {self.degree}")
            c = F.convert(c)
            if not F.is_zero(c):
                clean[t] = c
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "_items", tuple(sorted(clean.items())))

    def __hash__(self):
        return hash((self.degree, self.field, self.dual, self._items))

    @classmethod
    def basis(cls, idx: Sequence[int], field: Field = QQ, dual: bool = False) -> "KVector":
        """Signed basis element e_{i1} ∧ ... ∧ e_{ik} for any index order."""
        s = sort_sign(idx)
        return cls(len(idx), {tuple(sorted(idx)): s} if s else {}, field, dual)

    @classmethod
    def from_coords(cls, degree: int, coords: Sequence, field: Field = QQ, dual: bool = False) -> "KVector":
        """From a dense coordinate vector in lex basis order."""
        if len(coords) != len(BASIS[degree]):
            raise ValueError(f"expected {len(BASIS[degree])} coordinates")
        return cls(degree, dict(zip(BASIS[degree], coords)), field, dual)

    @classmethod
    def vector(cls, coords: Sequence, field: Field = QQ) -> "KVector":
        return cls.from_coords(1, coords, field)

    @classmethod
    def zero(cls, degree: int, field: Field = QQ, dual: bool = False) -> "KVector":
        return cls(degree, {}, field, dual)

    def coords(self) -> tuple:
        z = self.field.zero()
        return tuple(self.coeffs.get(t, z) for t in BASIS[self.degree])

    def coefficient(self, idx: Sequence[int]):
        s = sort_sign(idx)
        if not s:
            return self.field.zero()
        c = self.coeffs.get(tuple(sorted(idx)), self.field.zero())
        return c if s > 0 else self.field.neg(c)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _compatible(self, other: "KVector"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.dual != other.dual:
            raise ValueError("cannot combine vectors and covectors")

    def __add__(self, other: "KVector") -> "KVector":
        self._compatible(other)
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        F = self.field
        out = dict(self.coeffs)
        for t, c in other.coeffs.items():
            out[t] = F.add(out.get(t, F.zero()), c)
        return KVector(self.degree, out, F, self.dual)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "KVector":
        F = self.field
        c = F.convert(c)
        return KVector(self.degree, {t: F.mul(c, x) for t, x in self.coeffs.items()}, F, self.dual)

    def __rmul__(self, c):
        return self.scale(c)

    def __xor__(self, other):
        return wedge(self, other)

    def __str__(self):
        return format_kvector(self)


def wedge(a: KVector, b: KVector) -> KVector:
    a._compatible(b)
    F = a.field
    deg = a.degree + b.degree
    if deg > N:
        raise ValueError(f"degree {a.degree}+{b.degree} exceeds {N}")
    out: dict = {}
    for s, x in a.coeffs.items():
        for t, y in b.coeffs.items():
            sign = sort_sign(s + t)
            if sign:
                key = tuple(sorted(s + t))
                v = F.mul(x, y)
                out[key] = F.add(out.get(key, F.zero()), v if sign > 0 else F.neg(v))
    return KVector(deg, out, F, a.dual)


def pair(cov: KVector, vec: KVector):
    """⟨cov, vec⟩ with ⟨e^I, e_J⟩ = δ_IJ; returns a raw field value."""
    if cov.field != vec.field:
        raise FieldMismatch(f"{cov.field} vs {vec.field}")
    if not cov.dual or vec.dual:
        raise ValueError("pair expects (covector, vector)")
    if cov.degree != vec.degree:
        raise ValueError("degree mismatch")
    F = cov.field
    r = F.zero()
    for t, c in cov.coeffs.items():
        x = vec.coeffs.get(t)
        if x is not None:
            r = F.add(r, F.mul(c, x))
    return r


def volume_coefficient(w: KVector):
    """Coefficient of e_1∧...∧e_5 (or its dual) in a top-degree element."""
    if w.degree != N:
        raise ValueError("not a top-degree element")
    return w.coeffs.get(VOL, w.field.zero())


def dualize(a: KVector) -> KVector:
    """Basis isomorphism e_I <-> e^I."""
    return KVector(a.degree, a.coeffs, a.field, not a.dual)


def contract_I(w: KVector) -> KVector:
    """The isomorphism ∧^4 V∨ -> V fixed by ⟨I w, e^j⟩ = vol-coefficient of w ∧ e^j."""
    if not w.dual:
        raise ValueError("contract_I expects a covector")
    if w.degree != 4:
        raise ValueError("contract_I expects degree 4")
    F = w.field
    coords = [volume_coefficient(wedge(w, KVector.basis((j,), F, dual=True))) for j in INDICES]
    return KVector.vector(coords, F)


def is_decomposable(a: KVector) -> bool:
    if a.degree != 2:
        raise ValueError("decomposability is tested on 2-vectors")
    return wedge(a, a).is_zero()


def second_exterior_power(g: Matrix) -> Matrix:
    """∧²g in the lex basis: entry ((i,j),(k,l)) = g_ik g_jl - g_il g_jk."""
    if g.shape != (N, N):
        raise ValueError(f"expected a {N}x{N} matrix, got {g.rows}x{g.cols}")
    F = g.field
    e = g.entries
    rows = []
    for i, j in PAIRS:
        gi, gj = e[i - 1], e[j - 1]
        rows.append(
            tuple(F.sub(F.mul(gi[k - 1], gj[l - 1]), F.mul(gi[l - 1], gj[k - 1])) for k, l in PAIRS)
        )
    return Matrix._raw(tuple(rows), F, len(PAIRS))


def _term(c, F, t) -> tuple[bool, str]:
    neg = False
    if hasattr(F, "signed"):
        c = F.signed(c)
    if c < 0:
        neg, c = True, -c
    label = "e{" + ",".join(map(str, t)) + "}"
    return neg, label if c == 1 else f"{F.fmt(c)}·{label}"


def format_kvector(a: KVector) -> str:
    """Signed sum such as ``3·e{1,3} − 2·e{4,5}``."""
    if not a.coeffs:
        return "0"
    parts = []
    for t in BASIS[a.degree]:
        if t not in a.coeffs:
            continue
        neg, s = _term(a.coeffs[t], a.field, t)
        if a.dual:
            s = s.replace("e{", "e^{")
        if not parts:
            parts.append(("−" if neg else "") + s)
        else:
            parts.append(("− " if neg else "+ ") + s)
    return " ".join(parts)


def two_vector_coords(a: Sequence, b: Sequence, field: Field) -> tuple:
    """Plücker coordinates of a ∧ b for a, b in V (raw)."""
    F = field
    a = [F.convert(x) for x in a]
    b = [F.convert(x) for x in b]
    return tuple(F.sub(F.mul(a[i - 1], b[j - 1]), F.mul(a[j - 1], b[i - 1])) for i, j in PAIRS)


# wedge of two 2-vectors into ∧^4, as a sparse sign table: for each 4-subset
# (position in BASIS[4]) the list of (I, J, sign) with e_I ∧ e_J = sign·e_K.
WEDGE22 = tuple(
    tuple(
        (PAIR_INDEX[s], PAIR_INDEX[t], sort_sign(s + t))
        for s in PAIRS
        for t in PAIRS
        if tuple(sorted(s + t)) == K and sort_sign(s + t)
    )
    for K in BASIS[4]
)


def wedge22(alpha: Sequence, beta: Sequence, field: Field) -> tuple:
    """∧^4-coordinates of α ∧ β for two coordinate 2-vectors."""
    F = field
    out = []
    for terms in WEDGE22:
        acc = F.zero()
        for i, j, s in terms:
            v = F.mul(alpha[i], beta[j])
            acc = F.add(acc, v if s > 0 else F.neg(v))
        out.append(acc)
    return tuple(out)
