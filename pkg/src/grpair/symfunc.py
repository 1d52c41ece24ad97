"""Symmetric polynomials in five variables: Schur functions, plethysm with e2.

Polynomials are kept internally as parallel numpy arrays of packed
exponent keys and integer coefficients; the packing uses 6 bits per
variable, enough for total degree <= 63.  Coefficients stay in int64 only
while a provable bound rules out overflow, otherwise Python integers are
used.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping, Sequence

import numpy as np

NVARS = 5
RHO = (4, 3, 2, 1, 0)
_BITS = 6
_BASE = 1 << _BITS
_MAXDEG = _BASE - 1
_INT64_SAFE = 1 << 62


class Partition(tuple):
    """Weakly decreasing tuple of non-negative integers, trailing zeros dropped."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def padded(self, n: int) -> tuple:
        if len(self) > n:
            raise ValueError(f"{tuple(self)} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def __repr__(self):
        return f"Partition{tuple(self)}"


def partitions(n: int, max_parts: int, max_part: int | None = None):
    """Partitions of n with at most ``max_parts`` parts, in reverse lex order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, max_parts - 1, first):
            yield Partition((first,) + tuple(rest))


def _pack(e: Sequence[int]) -> int:
    k = 0
    for i, x in enumerate(e):
        if not 0 <= x <= _MAXDEG:
            raise ValueError(f"exponent {x} out of range")
        k |= int(x) << (_BITS * i)
    return k


def _unpack(k: int) -> tuple:
    return tuple((k >> (_BITS * i)) & _MAXDEG for i in range(NVARS))


class _Poly:
    """Sparse polynomial: sorted unique packed keys, nonzero coefficients."""

    __slots__ = ("keys", "coefs", "degree")

    def __init__(self, keys, coefs, degree):
        self.keys = keys
        self.coefs = coefs
        self.degree = degree

    @classmethod
    def const(cls, c: int = 1):
        return cls(np.array([0], dtype=np.int64), np.array([c], dtype=np.int64), 0)

    @classmethod
    def zero(cls, degree: int = 0):
        return cls(np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64), degree)

    def __len__(self):
        return len(self.keys)

    def maxabs(self) -> int:
        return max((abs(int(c)) for c in self.coefs), default=0) if self.coefs.dtype == object else (
            int(np.abs(self.coefs).max()) if len(self.coefs) else 0
        )

    @staticmethod
    def _collect(keys, coefs, degree):
        if len(keys) == 0:
            return _Poly.zero(degree)
        order = np.argsort(keys, kind="stable")
        keys = keys[order]
        coefs = coefs[order]
        starts = np.flatnonzero(np.concatenate(([True], keys[1:] != keys[:-1])))
        ukeys = keys[starts]
        sums = np.add.reduceat(coefs, starts)
        nz = sums != 0
        return _Poly(ukeys[nz], sums[nz], degree)

    def shift(self, key: int, deg: int):
        """Multiply by the monomial with packed exponent ``key``."""
        return _Poly(self.keys + key, self.coefs, self.degree + deg)

    def __add__(self, other: "_Poly"):
        if len(self) == 0:
            return other
        if len(other) == 0:
            return self
        if self.degree != other.degree:
            raise ValueError("adding polynomials of different degree")
        coefs = _concat_coefs(self.coefs, other.coefs, self.maxabs() + other.maxabs())
        return _Poly._collect(np.concatenate((self.keys, other.keys)), coefs, self.degree)

    def __neg__(self):
        return _Poly(self.keys, -self.coefs, self.degree)

    def scale(self, c: int):
        if c == 1:
            return self
        bound = self.maxabs() * abs(c)
        coefs = self.coefs.astype(object) if bound >= _INT64_SAFE else self.coefs
        return _Poly(self.keys, coefs * c, self.degree)

    def __mul__(self, other: "_Poly"):
        deg = self.degree + other.degree
        if deg > _MAXDEG:
            raise ValueError(f"degree {deg} exceeds packing range")
        if len(self) == 0 or len(other) == 0:
            return _Poly.zero(deg)
        a, b = (self, other) if len(self) >= len(other) else (other, self)
        bound = a.maxabs() * b.maxabs() * len(b)
        big = bound >= _INT64_SAFE
        acoef = a.coefs.astype(object) if big else a.coefs
        bcoef = b.coefs.astype(object) if big else b.coefs
        keys = np.add.outer(b.keys, a.keys).ravel()
        coefs = np.multiply.outer(bcoef, acoef).ravel()
        return _Poly._collect(keys, coefs, deg)

    def to_dict(self) -> dict:
        return {_unpack(int(k)): int(c) for k, c in zip(self.keys, self.coefs)}

    @classmethod
    def from_dict(cls, d: Mapping[tuple, int], degree: int):
        items = [(_pack(e), int(c)) for e, c in d.items() if c]
        if not items:
            return cls.zero(degree)
        keys = np.array([k for k, _ in items], dtype=np.int64)
        cs = [c for _, c in items]
        dtype = np.int64 if max(abs(c) for c in cs) < _INT64_SAFE else object
        return cls._collect(keys, np.array(cs, dtype=dtype), degree)


def _concat_coefs(a, b, bound):
    if a.dtype == object or b.dtype == object or bound >= _INT64_SAFE:
        return np.concatenate((a.astype(object), b.astype(object)))
    return np.concatenate((a, b))


class SymPoly:
    """Homogeneous integer polynomial in x1..x5, keyed by exponent vectors."""

    __slots__ = ("_p",)

    def __init__(self, coeffs: Mapping[tuple, int] | _Poly, degree: int | None = None):
        if isinstance(coeffs, _Poly):
            self._p = coeffs
            return
        degs = {sum(e) for e, c in coeffs.items() if c}
        if len(degs) > 1:
            raise ValueError(f"not homogeneous: degrees {sorted(degs)}")
        if degree is None:
            degree = degs.pop() if degs else 0
        elif degs and degs != {degree}:
            raise ValueError("degree does not match the exponents")
        for e in coeffs:
            if len(e) != NVARS:
                raise ValueError(f"exponent vector {e} must have length {NVARS}")
        self._p = _Poly.from_dict(coeffs, degree)

    @property
    def degree(self) -> int:
        return self._p.degree

    @property
    def coeffs(self) -> dict:
        return self._p.to_dict()

    def __len__(self):
        return len(self._p)

    def coefficient(self, exponent: Sequence[int]) -> int:
        if len(exponent) != NVARS or any(x < 0 for x in exponent) or sum(exponent) != self.degree:
            return 0
        k = _pack(exponent)
        i = int(np.searchsorted(self._p.keys, k))
        if i < len(self._p.keys) and int(self._p.keys[i]) == k:
            return int(self._p.coefs[i])
        return 0

    def evaluate(self, point: Sequence) -> int | Fraction:
        """Value at a point of Q^5 (exact)."""
        total = 0
        for e, c in self.coeffs.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t *= Fraction(x) ** k
            total += t
        return total

    def value_at_ones(self) -> int:
        return sum(int(c) for c in self._p.coefs)

    def is_symmetric_under(self, perm: Sequence[int]) -> bool:
        d = self.coeffs
        return all(d.get(tuple(e[i] for i in perm), 0) == c for e, c in d.items())

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __add__(self, other: "SymPoly"):
        return SymPoly(self._p + other._p)

    def __sub__(self, other: "SymPoly"):
        return SymPoly(self._p + (-other._p))

    def __mul__(self, other: "SymPoly"):
        return SymPoly(self._p * other._p)

    def __repr__(self):
        return f"SymPoly(degree={self.degree}, terms={len(self)})"


def _monomial(exponent: Sequence[int]) -> tuple[int, int]:
    e = tuple(exponent)
    if len(e) != NVARS:
        raise ValueError(f"monomial {e} must have {NVARS} exponents")
    return _pack(e), sum(e)


def complete_homogeneous(variables: Sequence[Sequence[int]], kmax: int) -> list:
    """h_0..h_kmax of the given monomials, via h_k(y1..yn) = h_k(y1..y(n-1)) + yn·h_(k-1)(y1..yn)."""
    mons = [_monomial(v) for v in variables]
    degs = {d for _, d in mons}
    if len(degs) > 1:
        raise ValueError("substituted monomials must share one degree")
    d = degs.pop() if degs else 0
    h = [_Poly.const(1)] + [_Poly.zero(d * k) for k in range(1, kmax + 1)]
    for key, _ in mons:
        new = [h[0]]
        for k in range(1, kmax + 1):
            new.append(h[k] + new[k - 1].shift(key, d))
        h = new
    return h


def _jacobi_trudi(lam: Partition, h: list, unit_degree: int) -> _Poly:
    """det(h_{λ_i - i + j}) by row expansion from the bottom, memoized on column sets."""
    n = len(lam)
    deg = unit_degree * lam.weight

    def entry(i, j):
        k = lam[i] - i + j
        if k < 0:
            return None
        return h[k]

    minors = {frozenset(): _Poly.const(1)}
    for i in range(n - 1, -1, -1):
        size = n - i
        new = {}
        for cols in _subsets(range(n), size):
            acc = None
            for pos, j in enumerate(cols):
                e = entry(i, j)
                if e is None or len(e) == 0:
                    continue
                rest = frozenset(cols) - {j}
                m = minors.get(rest)
                if m is None or len(m) == 0:
                    continue
                term = e * m
                if pos % 2:
                    term = -term
                acc = term if acc is None else acc + term
            if acc is not None:
                new[frozenset(cols)] = acc
        minors = new
    res = minors.get(frozenset(range(n)))
    return res if res is not None else _Poly.zero(deg)


def _subsets(items, size):
    from itertools import combinations

    return combinations(tuple(items), size)


def schur_poly(lam, variables: Sequence[Sequence[int]] | None = None) -> SymPoly:
    """s_λ evaluated at a list of monomials (exponent 5-tuples) in x1..x5.

    Default variables are x1..x5 themselves.
    """
    lam = Partition(lam)
    if variables is None:
        variables = [tuple(1 if i == j else 0 for i in range(NVARS)) for j in range(NVARS)]
    variables = [tuple(v) for v in variables]
    if len(lam) > len(variables):
        raise ValueError(f"{tuple(lam)} has more parts than the {len(variables)} variables")
    if not lam:
        return SymPoly(_Poly.const(1))
    unit = sum(variables[0]) if variables else 0
    if unit * lam.weight > _MAXDEG:
        raise ValueError("degree too large")
    kmax = lam[0] + len(lam) - 1
    h = complete_homogeneous(variables, kmax)
    return SymPoly(_jacobi_trudi(lam, h, unit))


E2_MONOMIALS = tuple(
    tuple(1 if k in (i, j) else 0 for k in range(NVARS)) for i in range(NVARS) for j in range(i + 1, NVARS)
)


def plethysm_with_e2(lam) -> SymPoly:
    """s_λ[e2] in five variables, i.e. the character of S^λ(∧²C⁵).

    Substituting the ten monomials x_i x_j is valid because e2 is a
    multiplicity-free sum of monomials.
    """
    lam = Partition(lam)
    if lam.weight > 15:
        raise ValueError(f"|λ| = {lam.weight} exceeds 15")
    return schur_poly(lam, E2_MONOMIALS)


_S5 = [(p, (-1) ** sum(1 for i in range(5) for j in range(i + 1, 5) if p[i] > p[j])) for p in permutations(range(5))]


def schur_multiplicity(f: SymPoly, mu) -> int:
    """Coefficient of s_μ in f: Σ_w sign(w)·[x^{w(μ+ρ)-ρ}] f."""
    mu = Partition(mu)
    if len(mu) > NVARS:
        raise ValueError(f"{tuple(mu)} has more than {NVARS} parts")
    if mu.weight != f.degree:
        raise ValueError(f"|μ| = {mu.weight} but f has degree {f.degree}")
    shifted = [m + r for m, r in zip(mu.padded(NVARS), RHO)]
    total = 0
    for w, sign in _S5:
        e = [shifted[w[i]] - RHO[i] for i in range(NVARS)]
        if min(e) < 0:
            continue
        total += sign * f.coefficient(e)
    return total


def schur_expansion(f: SymPoly) -> dict:
    """All nonzero Schur multiplicities of f, keyed by partition."""
    out = {}
    for mu in partitions(f.degree, NVARS):
        m = schur_multiplicity(f, mu)
        if m:
            out[mu] = m
    return out


def weyl_dim(lam: Sequence[int], n: int | None = None) -> int:
    """Dimension of the GL(n) irreducible with highest weight λ (entries may be negative)."""
    lam = tuple(int(x) for x in lam)
    if n is None:
        n = len(lam)
    if len(lam) > n:
        if any(lam[n:]):
            raise ValueError(f"{lam} has more than {n} nonzero entries")
        lam = lam[:n]
    lam = lam + (0,) * (n - len(lam))
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{lam} is not weakly decreasing")
    num, den = 1, 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    return num // den
