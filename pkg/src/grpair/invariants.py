"""The SL(V)-invariant tensor Γ ∈ (∧²V)^{⊗5} and the function f(g) = (Γ̃, gΓ).

f is invariant under g -> ∧²h · g · ∧²h' for h, h' in SL(V) but not under
g -> g^{-t}; that asymmetry separates Gr ∩ gGr from Gr ∩ g^{-t}Gr.

Slots of Γ are indexed by positions 0..9 of the lex basis of ∧²V.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Mapping

import numpy as np

from .exactalg import Field, Matrix, PrimeField, QQ, Scalar, det, random_sl
from .exterior import (
    KVector,
    PAIR_INDEX,
    PAIRS,
    contract_I,
    second_exterior_power,
    wedge,
)

DIM = len(PAIRS)


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..5}, stored as its image tuple."""

    images: tuple
    sign: int = dc_field(init=False)

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation")
        im = self.images
        inv = sum(1 for i in range(len(im)) for j in range(i + 1, len(im)) if im[i] > im[j])
        object.__setattr__(self, "sign", -1 if inv % 2 else 1)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self * other)(i) = self(other(i))."""
        return Permutation(tuple(self(other(i)) for i in range(1, len(self.images) + 1)))


def symmetric_group(n: int = 5):
    return [Permutation(p) for p in permutations(range(1, n + 1))]


@dataclass(frozen=True)
class Tensor5:
    """Sparse integer tensor in (∧²V)^{⊗5} or (∧²V∨)^{⊗5}."""

    coeffs: Mapping[tuple, int]
    dual: bool = False

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {k: v for k, v in self.coeffs.items() if v})

    def __eq__(self, other):
        return isinstance(other, Tensor5) and self.dual == other.dual and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.dual, tuple(sorted(self.coeffs.items()))))

    def __len__(self):
        return len(self.coeffs)

    def permute_slots(self, perm) -> "Tensor5":
        """New tensor with slot ``perm[k]`` of the old one moved to slot k."""
        return Tensor5({tuple(t[perm[k]] for k in range(5)): c for t, c in self.coeffs.items()}, self.dual)

    def dualized(self) -> "Tensor5":
        return Tensor5(dict(self.coeffs), not self.dual)

    def dense(self, dtype=object) -> np.ndarray:
        T = np.zeros((DIM,) * 5, dtype=dtype)
        for t, c in self.coeffs.items():
            T[t] = c
        return T

    def proportionality(self, other: "Tensor5"):
        """The scalar c with self = c·other, or None if not proportional."""
        if set(self.coeffs) != set(other.coeffs):
            return None
        if not self.coeffs:
            return Fraction(1)
        k0 = next(iter(self.coeffs))
        c = Fraction(self.coeffs[k0], other.coeffs[k0])
        if all(Fraction(v, other.coeffs[k]) == c for k, v in self.coeffs.items()):
            return c
        return None


def _signed_pair(a: int, b: int):
    """(position of e_ab, sign) with e_ba = -e_ab; None for a == b."""
    if a == b:
        return None
    if a < b:
        return PAIR_INDEX[(a, b)], 1
    return PAIR_INDEX[(b, a)], -1


@lru_cache(maxsize=None)
def build_gamma() -> Tensor5:
    """Γ as the signed double sum over S5 x S5."""
    out: dict = {}
    perms = [(p.images, p.sign) for p in symmetric_group()]
    for s, ss in perms:
        first = (_signed_pair(s[0], s[1]), _signed_pair(s[2], s[3]))
        for t, ts in perms:
            fifth = _signed_pair(s[4], t[4])
            if fifth is None:
                continue
            slots = first + (_signed_pair(t[0], t[1]), _signed_pair(t[2], t[3]), fifth)
            sign = ss * ts
            for _, sg in slots:
                sign *= sg
            key = tuple(pos for pos, _ in slots)
            out[key] = out.get(key, 0) + sign
    return Tensor5(out)


def build_gamma_tilde() -> Tensor5:
    """Γ̃ = image of Γ under the basis isomorphism V -> V∨ (same table)."""
    return build_gamma().dualized()


@lru_cache(maxsize=None)
def build_gamma_from_def() -> Tensor5:
    """Γ from Γ(ω1..ω5) = (I(ω1∧ω2) ∧ I(ω3∧ω4), ω5) on dual basis covectors."""
    cov = [KVector.basis(P, QQ, dual=True) for P in PAIRS]
    contracted = {}
    for i, j in product(range(DIM), repeat=2):
        w = wedge(cov[i], cov[j])
        contracted[i, j] = contract_I(w)
    out = {}
    for (i1, i2), u in contracted.items():
        if u.is_zero():
            continue
        for (i3, i4), u2 in contracted.items():
            if u2.is_zero():
                continue
            bivector = wedge(u, u2)
            for i5, P in enumerate(PAIRS):
                c = bivector.coeffs.get(P)
                if c:
                    out[i1, i2, i3, i4, i5] = int(c)
    return Tensor5(out)


def gamma_scale() -> Fraction:
    """The constant c with build_gamma() = c · build_gamma_from_def()."""
    c = build_gamma().proportionality(build_gamma_from_def())
    if c is None:
        raise AssertionError("the two constructions of Γ are not proportional")
    return c


# --- evaluation ------------------------------------------------------------


def _mode_products(T: np.ndarray, G: np.ndarray, mod: int | None) -> np.ndarray:
    """Apply G to every slot of T: (G^{⊗5} T)."""
    for k in range(5):
        T = np.moveaxis(np.tensordot(G, T, axes=([1], [k])), 0, k)
        if mod is not None:
            T %= mod
    return T


def _int_matrix(g: Matrix):
    """Integer array and denominator D with g = G / D (G integral)."""
    F = g.field
    if isinstance(F, PrimeField):
        return np.array(g.tolist(), dtype=np.int64), 1
    D = 1
    for r in g.entries:
        for x in r:
            D = D * x.denominator // np.gcd(D, x.denominator) if x.denominator != 1 else D
    G = np.empty((g.rows, g.cols), dtype=object)
    for i, r in enumerate(g.entries):
        for j, x in enumerate(r):
            G[i, j] = int(x * D)
    return G, D


def apply_to_tensor(g: Matrix, tensor: Tensor5) -> Tensor5:
    """(g^{⊗5}) applied to a tensor; over F_p coefficients are residues."""
    if g.shape != (DIM, DIM):
        raise ValueError("expected a 10x10 matrix")
    F = g.field
    G, D = _int_matrix(g)
    if isinstance(F, PrimeField):
        T = _mode_products(tensor.dense(np.int64) % F.p, G, F.p)
    else:
        if D != 1:
            raise ValueError("apply_to_tensor needs an integral matrix over Q")
        T = _mode_products(tensor.dense(object), G, None)
    idx = np.argwhere(T != 0)
    return Tensor5({tuple(int(x) for x in t): int(T[tuple(t)]) for t in idx}, tensor.dual)


def f_evaluate(g: Matrix) -> Scalar:
    """f(g) = Σ Γ̃_I Γ_J ∏_k g[I_k, J_k]; degree-5 homogeneous in g."""
    if g.shape != (DIM, DIM):
        raise ValueError(f"f is defined on {DIM}x{DIM} matrices")
    F = g.field
    gamma = build_gamma()
    G, D = _int_matrix(g)
    if isinstance(F, PrimeField):
        T = _mode_products(gamma.dense(np.int64), G, F.p)
        val = int((T * build_gamma_tilde().dense(np.int64)).sum() % F.p)
        return Scalar(val, F)
    T = _mode_products(gamma.dense(object), G, None)
    val = int((T * build_gamma_tilde().dense(object)).sum())
    return Scalar(Fraction(val, D**5), F)


def f_evaluate_naive(g: Matrix) -> Scalar:
    """Direct double sum over the supports; independent of the dense path."""
    F = g.field
    e = g.entries
    gamma = build_gamma()
    tilde = build_gamma_tilde()
    total = F.zero()
    for I, a in tilde.coeffs.items():
        rows = [e[i] for i in I]
        for J, b in gamma.coeffs.items():
            prod = F.convert(a * b)
            for r, j in zip(rows, J):
                prod = F.mul(prod, r[j])
                if F.is_zero(prod):
                    break
            total = F.add(total, prod)
    return Scalar(total, F)


def f_pgl(g: Matrix) -> Scalar:
    """f(g)² / det(g): invariant under scaling g."""
    d = det(g)
    if d.is_zero():
        raise ValueError("f_pgl undefined for singular g")
    return f_evaluate(g) ** 2 / d


# --- diagonal polynomial ----------------------------------------------------


@dataclass(frozen=True)
class MultiPoly10:
    """Integer polynomial in the ten variables x_ij, i < j (lex order)."""

    coeffs: Mapping[tuple, int]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {k: v for k, v in self.coeffs.items() if v})

    def degrees(self) -> set:
        return {sum(e) for e in self.coeffs}

    def is_homogeneous(self, d: int) -> bool:
        return self.degrees() == {d}

    def coefficient(self, monomial: Mapping[tuple, int]) -> int:
        """Coefficient of ∏ x_P^k given as ``{(i, j): k}``."""
        e = [0] * DIM
        for P, k in monomial.items():
            e[PAIR_INDEX[tuple(sorted(P))]] += k
        return self.coeffs.get(tuple(e), 0)

    def evaluate(self, values, field: Field = QQ) -> Scalar:
        F = field
        vals = [F.convert(v) for v in values]
        total = F.zero()
        for e, c in self.coeffs.items():
            t = F.convert(c)
            for v, k in zip(vals, e):
                for _ in range(k):
                    t = F.mul(t, v)
            total = F.add(total, t)
        return Scalar(total, F)

    def __len__(self):
        return len(self.coeffs)


@lru_cache(maxsize=None)
def f_diagonal_polynomial() -> MultiPoly10:
    """Σ_{σ,σ'} x_{σ1σ2} x_{σ3σ4} x_{σ'1σ'2} x_{σ'3σ'4} x_{σ5σ'5}, x_ji = x_ij.

    Terms with σ5 = σ'5 carry x_ii, which is zero (e_ii = 0).
    """
    out: dict = {}
    perms = list(permutations(range(1, 6)))
    for s in perms:
        for t in perms:
            if s[4] == t[4]:
                continue
            e = [0] * DIM
            for a, b in ((s[0], s[1]), (s[2], s[3]), (t[0], t[1]), (t[2], t[3]), (s[4], t[4])):
                e[PAIR_INDEX[(min(a, b), max(a, b))]] += 1
            key = tuple(e)
            out[key] = out.get(key, 0) + 1
    return MultiPoly10(out)


# --- distinguishing g from g^{-t} ----------------------------------------


@dataclass
class DistinguishReport:
    seed: int
    prime: int
    trials: int
    unequal: int
    values: list

    @property
    def rate(self) -> float:
        return self.unequal / self.trials if self.trials else 0.0

    @property
    def passed(self) -> bool:
        # at least 19 of every 20 draws must separate g from g^{-t}
        return self.unequal >= 1 and 20 * self.unequal >= 19 * self.trials


def distinguish_inverse_transpose(seed: int = 42, trials: int = 20, p: int = 10007) -> DistinguishReport:
    """Compare f(g) with f(g^{-t}) for random g in SL(10, F_p)."""
    from .exactalg import GF

    F = GF(p)
    rng = random.Random(seed)
    values = []
    unequal = 0
    for _ in range(trials):
        g = random_sl(DIM, F, rng)
        a = f_evaluate(g).value
        b = f_evaluate(g.inverse_transpose()).value
        values.append((a, b))
        unequal += a != b
    return DistinguishReport(seed, p, trials, unequal, values)


def wedge2_sl(field: Field, rng) -> Matrix:
    """∧²h for a random shear-built h in SL(5)."""
    return second_exterior_power(random_sl(5, field, rng))
