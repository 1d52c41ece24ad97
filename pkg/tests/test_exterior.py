import random
from itertools import combinations, permutations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from grpair.exactalg import GF, QQ, Matrix, det, random_matrix
from grpair.exterior import (
    BASIS,
    PAIRS,
    KVector,
    contract_I,
    format_kvector,
    is_decomposable,
    pair,
    second_exterior_power,
    sort_sign,
    two_vector_coords,
    volume_coefficient,
    wedge,
    wedge22,
)


def _inversion_sign(seq):
    if len(set(seq)) < len(seq):
        return 0
    inv = sum(1 for i, j in combinations(range(len(seq)), 2) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def test_sort_sign_matches_inversion_count():
    for k in range(1, 6):
        for seq in permutations(range(1, 6), k):
            assert sort_sign(seq) == _inversion_sign(seq)
    assert sort_sign((1, 2, 1)) == 0


def test_basis_counts():
    assert [len(BASIS[k]) for k in range(6)] == [1, 5, 10, 10, 5, 1]
    assert PAIRS[0] == (1, 2) and PAIRS[-1] == (4, 5)


def test_volume_and_anticommutation():
    e = [KVector.basis((i,)) for i in range(1, 6)]
    top = e[0] ^ e[1] ^ e[2] ^ e[3] ^ e[4]
    assert volume_coefficient(top) == 1
    assert (e[1] ^ e[0]) == -(e[0] ^ e[1])
    assert (e[2] ^ e[2]).is_zero()
    with pytest.raises(ValueError):
        wedge(KVector.basis((1, 2, 3)), KVector.basis((4, 5, 1)))


def _rand_kvec(degree, rng, dual=False):
    return KVector(degree, {t: rng.randint(-3, 3) for t in BASIS[degree]}, QQ, dual)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 2), st.integers(0, 2), st.integers(0, 1))
def test_wedge_associative_and_graded_commutative(seed, p, q, r):
    rng = random.Random(seed)
    a, b, c = _rand_kvec(p, rng), _rand_kvec(q, rng), _rand_kvec(r, rng)
    assert (a ^ b) ^ c == a ^ (b ^ c)
    assert a ^ b == (b ^ a).scale((-1) ** (p * q))


def test_decomposable():
    a = KVector.vector([1, 2, 0, 0, 3])
    b = KVector.vector([0, 1, 1, 0, 0])
    assert is_decomposable(a ^ b)
    assert not is_decomposable(KVector.basis((1, 2)) + KVector.basis((3, 4)))


def test_two_vector_coords_agree_with_wedge():
    rng = random.Random(1)
    for _ in range(20):
        a = [rng.randint(-5, 5) for _ in range(5)]
        b = [rng.randint(-5, 5) for _ in range(5)]
        w = KVector.vector(a) ^ KVector.vector(b)
        assert tuple(two_vector_coords(a, b, QQ)) == w.coords()


def test_wedge22_agrees_with_kvector_wedge():
    rng = random.Random(2)
    F = GF(7)
    for _ in range(20):
        x = [rng.randrange(7) for _ in range(10)]
        y = [rng.randrange(7) for _ in range(10)]
        kx, ky = KVector.from_coords(2, x, F), KVector.from_coords(2, y, F)
        assert tuple(wedge22(x, y, F)) == (kx ^ ky).coords()


def test_pairing_is_kronecker():
    for s in PAIRS:
        for t in PAIRS:
            assert pair(KVector.basis(s, dual=True), KVector.basis(t)) == (1 if s == t else 0)


def test_contract_I_values():
    # e^{2345} ∧ e^1 = e^{23451} = +e^{12345}
    v = contract_I(KVector.basis((2, 3, 4, 5), dual=True))
    assert v == KVector.basis((1,))
    v = contract_I(KVector.basis((1, 3, 4, 5), dual=True))
    assert v == KVector.basis((2,)).scale(-1)


def test_second_exterior_power_determinant_exponent():
    # classical: det ∧^k g = det(g)^C(n-1,k-1) = det(g)^4 for n=5, k=2
    rng = random.Random(4)
    for _ in range(5):
        g = random_matrix(5, 5, QQ, rng, bound=3)
        w = second_exterior_power(g)
        assert sympy.Matrix(w.tolist()).det() == sympy.Matrix(g.tolist()).det() ** 4
        assert det(w) == det(g) ** 4


def test_second_exterior_power_functorial():
    rng = random.Random(6)
    F = GF(10007)
    for _ in range(5):
        g, h = random_matrix(5, 5, F, rng), random_matrix(5, 5, F, rng)
        assert second_exterior_power(g @ h) == second_exterior_power(g) @ second_exterior_power(h)
        a, b = [rng.randrange(F.p) for _ in range(5)], [rng.randrange(F.p) for _ in range(5)]
        lhs = second_exterior_power(g).apply(two_vector_coords(a, b, F))
        assert tuple(lhs) == tuple(two_vector_coords(g.apply(a), g.apply(b), F))
    assert second_exterior_power(Matrix.identity(5, F)) == Matrix.identity(10, F)


def test_format_kvector():
    w = KVector.basis((1, 3)).scale(3) - KVector.basis((4, 5)).scale(2)
    assert format_kvector(w) == "3·e{1,3} − 2·e{4,5}"
    assert format_kvector(KVector.basis((4, 5), dual=True)) == "e^{4,5}"
    assert format_kvector(KVector.zero(2)) == "0"
    assert format_kvector(KVector.basis((2, 1))) == "−e{1,2}"


def test_bad_index_rejected():
    with pytest.raises(ValueError):
        KVector(2, {(2, 1): 1})
    with pytest.raises(ValueError):
        KVector(2, {(1, 6): 1})
