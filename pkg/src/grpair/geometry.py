"""Finite-field models of Gr(2,5), X_g = Gr ∩ gGr, Y_g and the degenerations Z_v.

Points of P⁹(F_p) are int64 rows of length 10 whose first nonzero entry
is 1.  Point sets are always returned sorted lexicographically so that
results do not depend on how they were produced.

Translate convention: for an invertible 10x10 matrix g, ``gGr`` is the
image g·Gr, cut out by the quadrics q ∘ g⁻¹.  With this convention the
zero locus of ∧²(s_id + t·s_v) at t = 1 is Gr ∩ (id+v)⁻¹Gr.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations, product

import numpy as np

from .exactalg import GF, Matrix, PrimeField, random_invertible, random_matrix, rank
from .exterior import PAIRS, WEDGE22, second_exterior_power
from .quadrics import QuadricSpace, grassmannian_quadrics, translate_quadric_space

DIM = len(PAIRS)
_PI = np.array([i - 1 for i, _ in PAIRS])
_PJ = np.array([j - 1 for _, j in PAIRS])


def gaussian_binomial_25(q: int) -> int:
    return (q**5 - 1) * (q**4 - 1) // ((q**2 - 1) * (q - 1))


def _field(p) -> PrimeField:
    F = p if isinstance(p, PrimeField) else GF(int(p))
    return F


def plucker(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Rows of Plücker coordinates of a_n ∧ b_n."""
    return (a[:, _PI] * b[:, _PJ] - a[:, _PJ] * b[:, _PI]) % p


def normalize_points(pts: np.ndarray, p: int) -> np.ndarray:
    """Scale each nonzero row so its first nonzero entry is 1."""
    pts = np.asarray(pts, dtype=np.int64) % p
    nz = pts != 0
    if not nz.any(axis=1).all():
        raise ValueError("zero vector is not a projective point")
    first = pts[np.arange(len(pts)), nz.argmax(axis=1)]
    inv = np.array([0] + [pow(x, -1, p) for x in range(1, p)], dtype=np.int64)
    return pts * inv[first][:, None] % p


def sort_points(pts: np.ndarray, *others):
    order = np.lexsort(pts.T[::-1]) if len(pts) else np.zeros(0, dtype=np.int64)
    if others:
        return (pts[order],) + tuple(o[order] for o in others)
    return pts[order]


def enumerate_grassmannian(p: int, with_frames: bool = False):
    """All points of Gr(2,5)(F_p), from reduced echelon 2x5 representatives.

    Returns the (N, 10) point array, plus the (N, 2, 5) frame array when
    ``with_frames`` is set.
    """
    F = _field(p)
    p = F.p
    all_a, all_b = [], []
    for c1, c2 in combinations(range(5), 2):
        free_a = [j for j in range(c1 + 1, 5) if j != c2]
        free_b = list(range(c2 + 1, 5))
        nfree = len(free_a) + len(free_b)
        vals = np.array(list(product(range(p), repeat=nfree)), dtype=np.int64).reshape(p**nfree, nfree)
        n = len(vals)
        a = np.zeros((n, 5), dtype=np.int64)
        b = np.zeros((n, 5), dtype=np.int64)
        a[:, c1] = 1
        b[:, c2] = 1
        if free_a:
            a[:, free_a] = vals[:, : len(free_a)]
        if free_b:
            b[:, free_b] = vals[:, len(free_a) :]
        all_a.append(a)
        all_b.append(b)
    a = np.concatenate(all_a)
    b = np.concatenate(all_b)
    pts = plucker(a, b, p)
    # echelon frames give first nonzero coordinate (c1, c2) equal to 1
    assert (normalize_points(pts, p) == pts).all()
    frames = np.stack([a, b], axis=1)
    pts, frames = sort_points(pts, frames)
    if with_frames:
        return pts, frames
    return pts


_CACHE: dict = {}


def grassmannian_cached(p: int):
    if p not in _CACHE:
        _CACHE[p] = enumerate_grassmannian(p, with_frames=True)
    return _CACHE[p]


def quadric_arrays(space: QuadricSpace) -> np.ndarray:
    return np.array([q.matrix.tolist() for q in space], dtype=np.int64)


def evaluate_quadrics(Q: np.ndarray, pts: np.ndarray, p: int) -> np.ndarray:
    """(N, k) values of k quadrics (k, 10, 10) at N points."""
    out = np.empty((len(pts), len(Q)), dtype=np.int64)
    for i, A in enumerate(Q):
        out[:, i] = ((pts @ A) % p * pts).sum(axis=1) % p
    return out


def on_all(Q: np.ndarray, pts: np.ndarray, p: int) -> np.ndarray:
    if len(pts) == 0:
        return np.zeros(0, dtype=bool)
    return (evaluate_quadrics(Q, pts, p) == 0).all(axis=1)


@dataclass
class TranslateModel:
    """The pair Gr, g·Gr over F_p for an invertible 10x10 (or 5x5, via ∧²) g."""

    g: Matrix
    gr: QuadricSpace = field(init=False, repr=False)
    translate: QuadricSpace = field(init=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.g.field, PrimeField):
            raise ValueError("finite-field models need a prime field")
        self.translate = translate_quadric_space(self.g)
        if self.g.shape == (5, 5):
            self.g = second_exterior_power(self.g)
        self.gr = grassmannian_quadrics(self.g.field)

    @property
    def p(self) -> int:
        return self.g.field.p

    def inverse_transpose(self) -> "TranslateModel":
        return TranslateModel(self.g.inverse_transpose())

    def quadrics(self) -> list:
        """The ten quadrics spanning |I_X(2)|."""
        return list(self.gr) + list(self.translate)

    def in_translate(self, pts: np.ndarray) -> np.ndarray:
        return on_all(quadric_arrays(self.translate), pts, self.p)


def intersection_points(model: TranslateModel, p: int | None = None) -> np.ndarray:
    """Points of Gr(F_p) on which the five translate quadrics vanish."""
    if p is not None and p != model.p:
        raise ValueError(f"model is over F_{model.p}, not F_{p}")
    pts, _ = grassmannian_cached(model.p)
    return pts[model.in_translate(pts)]


def x_points(g: Matrix) -> np.ndarray:
    return intersection_points(TranslateModel(g))


def y_points(g: Matrix) -> np.ndarray:
    return intersection_points(TranslateModel(g).inverse_transpose())


def jacobian_rank_at(pt, quadrics) -> int:
    """Rank of the gradient rows 2Aα of the given quadrics at α."""
    F = quadrics[0].field
    alpha = [F.convert(int(x)) for x in pt]
    for q in quadrics:
        if not F.is_zero(q(alpha)):
            raise ValueError("point does not lie on all quadrics")
    return rank(Matrix([q.gradient(alpha) for q in quadrics], F))


def jacobian_ranks(pts: np.ndarray, quadrics) -> list:
    return [jacobian_rank_at(pt, quadrics) for pt in pts]


# --- degenerations ----------------------------------------------------------


def wedge22_array(alpha: np.ndarray, beta: np.ndarray, p: int) -> np.ndarray:
    """(N, 5) ∧⁴-coordinates of α_n ∧ β_n."""
    out = np.zeros((len(alpha), len(WEDGE22)), dtype=np.int64)
    for k, terms in enumerate(WEDGE22):
        acc = np.zeros(len(alpha), dtype=np.int64)
        for i, j, s in terms:
            acc += s * alpha[:, i] * beta[:, j]
        out[:, k] = acc % p
    return out


def _apply(v: Matrix, pts: np.ndarray) -> np.ndarray:
    V = np.array(v.tolist(), dtype=np.int64)
    return pts @ V.T % v.field.p


def family_points(v: Matrix, t: int) -> np.ndarray:
    """Points of Gr(F_p) where 2α∧v(α) + t·v(α)∧v(α) = 0."""
    p = v.field.p
    pts, _ = grassmannian_cached(p)
    va = _apply(v, pts)
    s = (2 * wedge22_array(pts, va, p) + t * wedge22_array(va, va, p)) % p
    return pts[(s == 0).all(axis=1)]


def z_v_points(v: Matrix) -> np.ndarray:
    """Z_v: points [α] of Gr(F_p) with α ∧ v(α) = 0."""
    p = v.field.p
    pts, _ = grassmannian_cached(p)
    s = wedge22_array(pts, _apply(v, pts), p)
    return pts[(s == 0).all(axis=1)]


def _skew_pair(beta: np.ndarray, phi: np.ndarray, psi: np.ndarray, p: int) -> np.ndarray:
    """β(φ, ψ) = Σ_{i<j} β_ij (φ_i ψ_j - φ_j ψ_i) row-wise."""
    m = phi[:, _PI] * psi[:, _PJ] - phi[:, _PJ] * psi[:, _PI]
    return (beta * (m % p)).sum(axis=1) % p


def z_v_points_quotient(v: Matrix) -> np.ndarray:
    """Z_v as the zero locus of the image of v(α) in ∧²Q.

    v(α) lies in ⟨a,b⟩∧V iff it pairs to zero with ∧² of the annihilator
    of ⟨a,b⟩, spanned by n_k = e_k - a_k e_{c1} - b_k e_{c2} for the three
    non-pivot columns k of the echelon frame.
    """
    p = v.field.p
    pts, frames = grassmannian_cached(p)
    beta = _apply(v, pts)
    a, b = frames[:, 0], frames[:, 1]
    c1 = (a != 0).argmax(axis=1)
    c2 = (b != 0).argmax(axis=1)
    keep = np.zeros(len(pts), dtype=bool)
    for i, j in combinations(range(5), 2):
        sel = np.flatnonzero((c1 == i) & (c2 == j))
        if len(sel) == 0:
            continue
        rest = [k for k in range(5) if k not in (i, j)]
        ann = []
        for k in rest:
            n = np.zeros((len(sel), 5), dtype=np.int64)
            n[:, k] = 1
            n[:, i] = -a[sel, k]
            n[:, j] = -b[sel, k]
            ann.append(n % p)
        ok = np.ones(len(sel), dtype=bool)
        for x, y in combinations(range(3), 2):
            ok &= _skew_pair(beta[sel], ann[x], ann[y], p) == 0
        keep[sel] = ok
    return pts[keep]


def same_points(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and bool((sort_points(a) == sort_points(b)).all())


# --- reports ---------------------------------------------------------------


def weil_window(p: int, b3: int = 104) -> tuple:
    centre = p**3 + p**2 + p + 1
    radius = b3 * p**1.5
    return centre, radius


def in_weil_window(count: int, p: int, b3: int = 104) -> bool:
    centre, _ = weil_window(p, b3)
    # |N - centre| <= b3 p^{3/2}  <=>  (N - centre)^2 <= b3^2 p^3, in integers
    return (count - centre) ** 2 <= b3 * b3 * p**3


def random_translate(p: int, rng) -> Matrix:
    return random_invertible(DIM, GF(p), rng)


def point_count_experiment(seeds=(1, 2, 3), primes=(5, 7)) -> list:
    """Counts of X_g, Y_g, Z_v, Z_vᵗ for random g, v. Exploratory only."""
    rows = []
    for p in primes:
        F = GF(p)
        for seed in seeds:
            rng = random.Random(seed)
            t0 = time.perf_counter()
            g = random_invertible(DIM, F, rng)
            v = random_matrix(DIM, DIM, F, rng)
            row = {
                "prime": p,
                "seed": seed,
                "X_g": len(x_points(g)),
                "Y_g": len(y_points(g)),
                "Z_v": len(z_v_points(v)),
                "Z_vt": len(z_v_points(v.T)),
                "weil_centre": weil_window(p)[0],
                "elapsed": time.perf_counter() - t0,
            }
            rows.append(row)
    return rows
