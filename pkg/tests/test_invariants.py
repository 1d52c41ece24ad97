import random
from fractions import Fraction
from itertools import permutations

import pytest
import sympy

from grpair.exactalg import GF, QQ, Matrix, Scalar, det, random_invertible, random_matrix, random_sl
from grpair.exterior import PAIR_INDEX, second_exterior_power
from grpair.invariants import (
    Permutation,
    apply_to_tensor,
    build_gamma,
    build_gamma_from_def,
    distinguish_inverse_transpose,
    f_diagonal_polynomial,
    f_evaluate,
    f_evaluate_naive,
    f_pgl,
    gamma_scale,
    symmetric_group,
    wedge2_sl,
)

F = GF(10007)


def _brute_gamma():
    """Γ straight from the displayed double sum, with e_ba = -e_ab."""
    def sign(p):
        return -1 if sum(p[i] > p[j] for i in range(5) for j in range(i + 1, 5)) % 2 else 1

    def slot(a, b):
        if a == b:
            return None
        return (PAIR_INDEX[(a, b)], 1) if a < b else (PAIR_INDEX[(b, a)], -1)

    out = {}
    for s in permutations(range(1, 6)):
        for t in permutations(range(1, 6)):
            sl = [slot(s[0], s[1]), slot(s[2], s[3]), slot(t[0], t[1]), slot(t[2], t[3]), slot(s[4], t[4])]
            if None in sl:
                continue
            c = sign(s) * sign(t)
            for _, x in sl:
                c *= x
            key = tuple(i for i, _ in sl)
            out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def test_permutation_sign_and_composition():
    G = symmetric_group()
    assert len(G) == 120 and sum(p.sign for p in G) == 0
    a, b = Permutation((2, 1, 3, 4, 5)), Permutation((1, 3, 2, 4, 5))
    assert (a * b).sign == a.sign * b.sign == 1
    with pytest.raises(ValueError):
        Permutation((1, 1, 2, 3, 4))


def test_gamma_matches_brute_force():
    assert build_gamma().coeffs == _brute_gamma()
    assert len(build_gamma()) == 720
    assert {abs(c) for c in build_gamma().coeffs.values()} == {16}


def test_gamma_constructions_proportional():
    c = build_gamma().proportionality(build_gamma_from_def())
    assert c is not None and c == gamma_scale() == 16


def test_gamma_slot_symmetries():
    g = build_gamma()
    # swapping σ and σ' exchanges slot pairs (1,2) <-> (3,4) and reverses slot 5
    swapped = g.permute_slots((2, 3, 0, 1, 4))
    assert swapped.proportionality(g) == -1
    assert g.permute_slots((1, 0, 2, 3, 4)) == g


def test_gamma_is_sl_invariant():
    rng = random.Random(0)
    for _ in range(3):
        h = second_exterior_power(random_sl(5, F, rng))
        img = apply_to_tensor(h, build_gamma())
        assert img.coeffs == {k: v % F.p for k, v in build_gamma().coeffs.items()}


def test_dense_matches_naive():
    rng = random.Random(1)
    for _ in range(2):
        g = random_matrix(10, 10, F, rng)
        assert f_evaluate(g) == f_evaluate_naive(g)
    g = Matrix([[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(10)] for _ in range(10)], QQ)
    assert f_evaluate(g) == f_evaluate_naive(g)


def test_f_identity():
    # f(I) = Σ Γ_J² = 720 · 16²
    assert f_evaluate(Matrix.identity(10, QQ)) == Scalar(720 * 256, QQ)
    assert f_evaluate(Matrix.identity(10, F)).value == 720 * 256 % 10007


def test_f_is_quintic():
    rng = random.Random(2)
    g = random_matrix(10, 10, F, rng)
    lam = 1234
    assert f_evaluate(g.scale(lam)) == f_evaluate(g) * Scalar(lam, F) ** 5


def test_f_sl_invariance():
    rng = random.Random(3)
    for _ in range(5):
        g = random_matrix(10, 10, F, rng)
        assert f_evaluate(wedge2_sl(F, rng) @ g @ wedge2_sl(F, rng)) == f_evaluate(g)


def test_f_rejects_wrong_shape():
    with pytest.raises(ValueError):
        f_evaluate(Matrix.identity(5, F))


def test_diagonal_polynomial():
    P = f_diagonal_polynomial()
    assert P.is_homogeneous(5)
    assert P.coefficient({(1, 2): 2, (3, 4): 1, (3, 5): 1, (4, 5): 1}) != 0


def test_diagonal_polynomial_against_sympy():
    xs = {p: sympy.Symbol(f"x{p[0]}{p[1]}") for p in PAIR_INDEX}

    def x(a, b):
        return xs[(min(a, b), max(a, b))] if a != b else 0

    total = 0
    for s in permutations(range(1, 6)):
        for t in permutations(range(1, 6)):
            if s[4] != t[4]:
                total += x(s[0], s[1]) * x(s[2], s[3]) * x(t[0], t[1]) * x(t[2], t[3]) * x(s[4], t[4])
    poly = sympy.Poly(total, *xs.values())
    ours = f_diagonal_polynomial()
    order = list(PAIR_INDEX)
    assert len(poly.terms()) == len(ours)
    for monom, coeff in poly.terms():
        assert ours.coefficient({order[i]: e for i, e in enumerate(monom) if e}) == coeff


def test_f_on_diagonal_is_scaled_polynomial():
    rng = random.Random(4)
    P = f_diagonal_polynomial()
    for _ in range(5):
        x = [rng.randrange(1, F.p) for _ in range(10)]
        assert f_evaluate(Matrix.diagonal(x, F)) == P.evaluate(x, F) * gamma_scale()


def test_inverse_transpose_distinguished():
    rep = distinguish_inverse_transpose(seed=42, trials=20, p=10007)
    assert rep.unequal >= 19 and rep.passed


def test_f_pgl():
    rng = random.Random(5)
    g = random_invertible(10, F, rng)
    assert f_pgl(g.scale(77)) == f_pgl(g)
    assert f_pgl(g) == f_evaluate(g) ** 2 / det(g)
    with pytest.raises(ValueError):
        f_pgl(Matrix.zeros(10, 10, F))
