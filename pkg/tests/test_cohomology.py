from fractions import Fraction

import pytest

from grpair.cohomology import (
    PFAFFIAN,
    HomogeneousBundle,
    bott_single,
    bundle_cohomology,
    gr_euler_characteristic_via_pfaffian,
    gr_line_bundle_cohomology,
    gr_tangent_cohomology,
    projective_line_bundle_cohomology,
    projective_tangent_cohomology,
    resolution_vanishing_report,
    tensor_resolutions,
)


def _hilbert_gr25(t):
    # Hilbert polynomial of Gr(2,5) ⊂ P⁹ (degree 5, dimension 6)
    return Fraction((t + 1) * (t + 2) ** 2 * (t + 3) ** 2 * (t + 4), 144)


def test_line_bundles_match_hilbert_polynomial():
    for t in range(0, 6):
        assert gr_line_bundle_cohomology(t).h(0) == _hilbert_gr25(t)
        assert gr_line_bundle_cohomology(t).as_list()[1:] == [0] * 6


def test_line_bundle_vanishing_window_and_duality():
    for t in range(-4, 0):
        assert gr_line_bundle_cohomology(t).is_zero()
    for t in range(-12, 6):
        a, b = gr_line_bundle_cohomology(t), gr_line_bundle_cohomology(-5 - t)
        assert all(a.h(i) == b.h(6 - i) for i in range(7))
    assert gr_line_bundle_cohomology(-5).dims == {6: 1}


def test_euler_characteristic_via_pfaffian_resolution():
    for t in range(-8, 4):
        assert gr_euler_characteristic_via_pfaffian(t) == gr_line_bundle_cohomology(t).euler_characteristic()


def test_bott_concentrated_in_one_degree():
    assert bott_single((0, 0, 0, 0, 0)).degree == 0
    assert bott_single((-1, -1, 0, 0, 0)) is None
    r = bott_single((0, -1, 1, 0, 0))  # cotangent bundle
    assert (r.degree, r.dim) == (1, 1)
    with pytest.raises(ValueError):
        bott_single((0, 1, 0, 0, 0))
    with pytest.raises(ValueError):
        bott_single((0, 0, 0, 0))


def test_tangent_bundle():
    T = HomogeneousBundle.tangent()
    assert T.rank() == 6
    assert gr_tangent_cohomology(0).dims == {0: 24}
    assert bundle_cohomology(T.dual()).dims == {1: 1}
    for t in (0, 2, 3, 5):
        assert [gr_tangent_cohomology(-t).h(i) for i in range(1, 5)] == [0, 0, 0, 0]
    assert gr_tangent_cohomology(-5).dims == {5: 1}


def test_projective_space_tables():
    assert projective_line_bundle_cohomology(9, 2).h(0) == 55
    assert projective_line_bundle_cohomology(9, -10).dims == {9: 1}
    assert projective_tangent_cohomology(9, 0).dims == {0: 99}
    assert projective_tangent_cohomology(9, -10).dims == {8: 1}
    assert projective_tangent_cohomology(9, -2).is_zero()
    for k in range(-15, 4):
        chi = 10 * projective_line_bundle_cohomology(9, k + 1).euler_characteristic()
        chi -= projective_line_bundle_cohomology(9, k).euler_characteristic()
        assert projective_tangent_cohomology(9, k).euler_characteristic() == chi


def test_resolutions():
    assert sum((-1) ** i * sum(t.values()) for i, t in PFAFFIAN.items()) == 0
    sq = tensor_resolutions(PFAFFIAN, PFAFFIAN)
    assert sq == {
        0: {0: 1},
        1: {-2: 10},
        2: {-3: 10, -4: 25},
        3: {-5: 52},
        4: {-6: 25, -7: 10},
        5: {-8: 10},
        6: {-10: 1},
    }
    # ranks: 1, 10, 35, 52, 35, 10, 1
    assert [sum(t.values()) for t in sq.values()] == [1, 10, 35, 52, 35, 10, 1]


@pytest.mark.parametrize("name", ["lemma32_restricted_tangent", "lemma32_p9_tangent", "lemma45_quadric_count"])
def test_vanishing_reports(name):
    rep = resolution_vanishing_report(name)
    assert rep.passed
    assert all(c.dim == 0 for c in rep.checks if c.required_zero)


def test_quadric_count_values():
    v = resolution_vanishing_report("lemma45_quadric_count").values
    assert v["h0(I_X|Gr(2))"] == 5 and v["h0(I_X|P9(2))"] == 10
    assert v["h0(O_P9(2))"] - v["h0(O_Gr(2))"] == 5


def test_unknown_report():
    with pytest.raises(ValueError):
        resolution_vanishing_report("nope")
