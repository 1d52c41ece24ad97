"""Bott's algorithm on Gr(2,5), twisted tangent bundles of Pⁿ, and the
resolution bookkeeping behind the vanishing statements used for X = Gr ∩ gGr.

Weights are written (a1, a2 | b1, b2, b3).  The convention is pinned by two
calibrations: O(1) = (1,1|0,0,0) has h⁰ = 10 and the tangent bundle
(1,0|0,0,-1) has h⁰ = 24.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb

from .symfunc import weyl_dim

RHO = (4, 3, 2, 1, 0)
GR_DIM = 6
CANONICAL_TWIST = -5
TANGENT = (1, 0, 0, 0, -1)


def line_bundle_weight(t: int) -> tuple:
    return (t, t, 0, 0, 0)


def _check_weight(w):
    w = tuple(int(x) for x in w)
    if len(w) != 5:
        raise ValueError(f"weight {w} must have 5 entries")
    a1, a2, b1, b2, b3 = w
    if a1 < a2 or b1 < b2 or b2 < b3:
        raise ValueError(f"weight {w} is not dominant in each block")
    return w


@dataclass(frozen=True)
class BottResult:
    degree: int
    weight: tuple
    dim: int


def bott_single(w) -> BottResult | None:
    """Cohomology of the irreducible bundle with weight ``w``; None if it all vanishes."""
    w = _check_weight(w)
    shifted = [x + r for x, r in zip(w, RHO)]
    if len(set(shifted)) < len(shifted):
        return None
    inversions = sum(1 for i in range(5) for j in range(i + 1, 5) if shifted[i] < shifted[j])
    dominant = tuple(x - r for x, r in zip(sorted(shifted, reverse=True), RHO))
    return BottResult(inversions, dominant, weyl_dim(dominant, 5))


@dataclass(frozen=True)
class HomogeneousBundle:
    """Direct sum of irreducible homogeneous bundles with multiplicities."""

    summands: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple((_check_weight(w), int(m)) for w, m in self.summands))

    @classmethod
    def irreducible(cls, w, mult: int = 1) -> "HomogeneousBundle":
        return cls(((w, mult),))

    @classmethod
    def line(cls, t: int, mult: int = 1) -> "HomogeneousBundle":
        return cls.irreducible(line_bundle_weight(t), mult)

    @classmethod
    def tangent(cls) -> "HomogeneousBundle":
        return cls.irreducible(TANGENT)

    def twist(self, t: int) -> "HomogeneousBundle":
        return HomogeneousBundle(
            tuple(((a1 + t, a2 + t, b1, b2, b3), m) for (a1, a2, b1, b2, b3), m in self.summands)
        )

    def dual(self) -> "HomogeneousBundle":
        return HomogeneousBundle(
            tuple(((-a2, -a1, -b3, -b2, -b1), m) for (a1, a2, b1, b2, b3), m in self.summands)
        )

    def __add__(self, other: "HomogeneousBundle") -> "HomogeneousBundle":
        return HomogeneousBundle(self.summands + other.summands)

    def rank(self) -> int:
        return sum(m * weyl_dim(w[:2], 2) * weyl_dim(w[2:], 3) for w, m in self.summands)


@dataclass(frozen=True)
class CohomologyTable:
    dims: dict = field(default_factory=dict)
    top: int = GR_DIM

    def __post_init__(self):
        object.__setattr__(self, "dims", {q: d for q, d in self.dims.items() if d})
        if any(d < 0 for d in self.dims.values()):
            raise ValueError("negative cohomology dimension")

    def h(self, q: int) -> int:
        return self.dims.get(q, 0)

    def is_zero(self) -> bool:
        return not self.dims

    def euler_characteristic(self) -> int:
        return sum((-1) ** q * d for q, d in self.dims.items())

    def as_list(self) -> list:
        return [self.h(q) for q in range(self.top + 1)]


def bundle_cohomology(b: HomogeneousBundle) -> CohomologyTable:
    dims: Counter = Counter()
    for w, m in b.summands:
        r = bott_single(w)
        if r is not None:
            dims[r.degree] += m * r.dim
    return CohomologyTable(dict(dims))


def gr_line_bundle_cohomology(t: int) -> CohomologyTable:
    return bundle_cohomology(HomogeneousBundle.line(t))


def gr_tangent_cohomology(t: int) -> CohomologyTable:
    """H*(T_Gr(t))."""
    return bundle_cohomology(HomogeneousBundle.tangent().twist(t))


# --- projective space ------------------------------------------------------


def projective_line_bundle_cohomology(n: int, d: int) -> CohomologyTable:
    dims = {}
    if d >= 0:
        dims[0] = comb(n + d, n)
    if d <= -n - 1:
        dims[n] = comb(-d - 1, n)
    return CohomologyTable(dims, top=n)


def projective_tangent_cohomology(n: int, k: int) -> CohomologyTable:
    """H^q(Pⁿ, T(k)) from the Euler sequence 0 -> O(k) -> O(k+1)^{n+1} -> T(k) -> 0.

    On H⁰ the map is injective (multiplication by the coordinates); on Hⁿ
    it is Serre dual to Σ x_i f_i : S_{d-1}^{n+1} -> S_d with d = -k-n-1,
    surjective for d >= 1 and zero for d = 0.
    """
    if n < 2:
        raise ValueError("n >= 2 required")
    h0_a = projective_line_bundle_cohomology(n, k).h(0)
    h0_b = (n + 1) * projective_line_bundle_cohomology(n, k + 1).h(0)
    hn_a = projective_line_bundle_cohomology(n, k).h(n)
    hn_b = (n + 1) * projective_line_bundle_cohomology(n, k + 1).h(n)
    d = -k - n - 1
    rank_n = hn_a if d >= 1 else 0
    dims = {
        0: h0_b - h0_a,
        n - 1: hn_a - rank_n,
        n: hn_b - rank_n,
    }
    return CohomologyTable(dims, top=n)


# --- resolutions ------------------------------------------------------------

# Pfaffian resolution of O_Gr on P⁹: homological degree -> {twist: multiplicity}
PFAFFIAN = {0: {0: 1}, 1: {-2: 5}, 2: {-3: 5}, 3: {-5: 1}}


def tensor_resolutions(r1: dict, r2: dict) -> dict:
    """Term list of the tensor product of two resolutions by line bundles."""
    out: dict = {}
    for i, terms1 in r1.items():
        for j, terms2 in r2.items():
            slot = out.setdefault(i + j, Counter())
            for t1, m1 in terms1.items():
                for t2, m2 in terms2.items():
                    slot[t1 + t2] += m1 * m2
    return {i: dict(sorted(c.items(), reverse=True)) for i, c in sorted(out.items())}


def resolution_euler_characteristic(res: dict, chi_of_twist) -> int:
    return sum((-1) ** i * m * chi_of_twist(t) for i, terms in res.items() for t, m in terms.items())


@dataclass
class GroupCheck:
    label: str
    dim: int
    required_zero: bool = True

    @property
    def ok(self) -> bool:
        return self.dim == 0 if self.required_zero else True


@dataclass
class VanishingReport:
    name: str
    resolution: dict
    checks: list
    values: dict
    conclusion: str

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)


def _restricted_tangent_report() -> VanishingReport:
    checks = []
    # H¹(T|_X) receives H^{i+1}(K_i) for the i-th term K_i = T_Gr(t)^m
    for i, terms in PFAFFIAN.items():
        for t in terms:
            checks.append(GroupCheck(f"H^{i + 1}(T_Gr({t}))", gr_tangent_cohomology(t).h(i + 1)))
    table = {
        (q, t): gr_tangent_cohomology(-t).h(q) for t in range(0, 6) for q in range(1, 5)
    }
    for (q, t), d in sorted(table.items()):
        label = f"H^{q}(T_Gr({-t}))"
        if not any(c.label == label for c in checks):
            checks.append(GroupCheck(label, d))
    values = {
        "H^5(T_Gr(-5))": gr_tangent_cohomology(-5).h(5),
        "H^0(T_Gr)": gr_tangent_cohomology(0).h(0),
    }
    checks.append(GroupCheck("H^5(T_Gr(-5)) (recorded)", values["H^5(T_Gr(-5))"], required_zero=False))
    return VanishingReport(
        "lemma32_restricted_tangent",
        PFAFFIAN,
        checks,
        values,
        "H^1(T_Gr|_X) = 0 forced",
    )


def _p9_tangent_report() -> VanishingReport:
    res = tensor_resolutions(PFAFFIAN, PFAFFIAN)
    checks = []
    # surjectivity of H⁰(K_0) -> H⁰(T|_X) needs H^i(K_i) = 0 for i >= 1
    for i, terms in res.items():
        if i == 0:
            continue
        for t in terms:
            checks.append(GroupCheck(f"H^{i}(T_P9({t}))", projective_tangent_cohomology(9, t).h(i)))
    values = {"H^0(T_P9)": projective_tangent_cohomology(9, 0).h(0)}
    return VanishingReport(
        "lemma32_p9_tangent",
        res,
        checks,
        values,
        "H^0(T_P9) -> H^0(T_P9|_X) surjective",
    )


def _quadric_count_report() -> VanishingReport:
    checks = []
    for i in range(-4, 0):
        tab = gr_line_bundle_cohomology(i)
        checks.append(GroupCheck(f"H^*(O_Gr({i}))", sum(tab.dims.values())))
    # ideal of gGr restricted to Gr, twisted by 2: O(-3) -> O(-1)^5 -> O^5 -> I_{X|Gr}(2)
    ideal = {i - 1: terms for i, terms in PFAFFIAN.items() if i >= 1}
    twisted = {i: {t + 2: m for t, m in terms.items()} for i, terms in ideal.items()}
    for i, terms in twisted.items():
        for t in terms:
            if t != 0:
                tab = gr_line_bundle_cohomology(t)
                checks.append(GroupCheck(f"H^*(O_Gr({t})) in resolution of I_X|Gr(2)", sum(tab.dims.values())))
    h0_ideal_gr = sum(m * gr_line_bundle_cohomology(t).h(0) for t, m in twisted[0].items())
    for i, terms in twisted.items():
        for t in terms:
            if t != 0:
                checks.append(
                    GroupCheck(f"H^*(O_P9({t}))", sum(projective_line_bundle_cohomology(9, t).dims.values()))
                )
    h0_ideal_p9 = sum(m * projective_line_bundle_cohomology(9, t).h(0) for t, m in twisted[0].items())
    values = {
        "h0(O_Gr(2))": gr_line_bundle_cohomology(2).h(0),
        "h0(O_P9(2))": projective_line_bundle_cohomology(9, 2).h(0),
        "h0(I_X|Gr(2))": h0_ideal_gr,
        "h0(I_Gr|P9(2))": h0_ideal_p9,
        "h0(I_X|P9(2))": h0_ideal_gr + h0_ideal_p9,
    }
    return VanishingReport(
        "lemma45_quadric_count",
        twisted,
        checks,
        values,
        f"h0(I_X(2)) = {values['h0(I_X|P9(2))']}",
    )


REPORTS = {
    "lemma32_restricted_tangent": _restricted_tangent_report,
    "lemma32_p9_tangent": _p9_tangent_report,
    "lemma45_quadric_count": _quadric_count_report,
}


def resolution_vanishing_report(name: str) -> VanishingReport:
    try:
        build = REPORTS[name]
    except KeyError:
        raise ValueError(f"unknown report {name!r}; choose from {sorted(REPORTS)}") from None
    return build()


def gr_euler_characteristic_via_pfaffian(t: int) -> int:
    """χ(O_Gr(t)) computed on P⁹ from the Pfaffian resolution."""
    return resolution_euler_characteristic(
        PFAFFIAN, lambda s: projective_line_bundle_cohomology(9, t + s).euler_characteristic()
    )

