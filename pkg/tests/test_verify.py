from fractions import Fraction

import pytest

from quotient_forge.cyclic import resolution_data, validate_group
from quotient_forge.special import build_special_quiver
from quotient_forge.verify import (
    QuiverRep,
    chart_elimination,
    closed_immersion_chart_check,
    group_report,
    k_theory_shadow,
    main_theorem_check,
    semistable_equals_stable,
    stability_class,
    stable_iff_spanning_tree,
    sweep,
    theta_weight,
)


@pytest.fixture(scope="module")
def sq72():
    g = validate_group(7, 2)
    return build_special_quiver(g, resolution_data(g))


def test_stability_examples(sq72):
    theta = theta_weight(sq72.quiver)
    assert theta == (-2, 1, 1)
    tree_rep = QuiverRep.from_nonzero(sq72.quiver, [1, 6])
    assert stability_class(tree_rep, theta, sq72.quiver) == "stable"
    dead_root = QuiverRep.from_nonzero(sq72.quiver, [2, 4])
    assert stability_class(dead_root, theta, sq72.quiver) == "unstable"
    assert stability_class(dead_root, (0, 0, 0), sq72.quiver) == "semistable_only"


def test_quiver_rep_scalars(sq72):
    rep = QuiverRep.from_nonzero(sq72.quiver, [1, 3])
    assert rep.scalars[0] == Fraction(1) and rep.scalars[1] == Fraction(0)
    assert rep.nonzero_ids() == frozenset({1, 3})


def test_semistable_equals_stable_examples(sq72):
    assert semistable_equals_stable(sq72.quiver, theta_weight(sq72.quiver))
    sq21 = build_special_quiver(validate_group(2, 1))
    assert semistable_equals_stable(sq21.quiver, theta_weight(sq21.quiver))
    # the zero weight always has strictly semistable points on >= 2 vertices
    assert not semistable_equals_stable(sq72.quiver, (0, 0, 0))
    assert not semistable_equals_stable(sq21.quiver, (0, 0))


def test_stable_iff_spanning_tree_exhaustive():
    for r, a in [(2, 1), (3, 1), (4, 3), (5, 2), (7, 2)]:
        sq = build_special_quiver(validate_group(r, a))
        if sq.ell <= 3:
            assert stable_iff_spanning_tree(sq)


def test_chart_immersion_examples(sq72):
    for j in range(3):
        report = closed_immersion_chart_check(sq72, j)
        assert report.ok, report.failures
    sq21 = build_special_quiver(validate_group(2, 1))
    assert closed_immersion_chart_check(sq21, 0).ok
    sq1 = build_special_quiver(validate_group(1, 0))
    assert closed_immersion_chart_check(sq1, 0).ok


def test_chart_elimination_free_pairs(sq72):
    rep = chart_elimination(sq72, 1)
    assert rep.ok and rep.tree == frozenset({1, 6}) and rep.free_pair == (3, 4)
    rep = chart_elimination(sq72, 0)
    assert rep.ok and rep.tree == frozenset({4, 6}) and rep.free_pair == (1, 2)
    sq2113 = build_special_quiver(validate_group(21, 13))
    rep = chart_elimination(sq2113, 4)
    assert rep.ok and rep.tree == frozenset({1, 3, 5, 7}) and rep.free_pair == (9, 10)


def test_chart_elimination_expressions(sq72):
    rep = chart_elimination(sq72, 1)
    assert rep.expressions[2] == {3: 1, 4: 1, 1: -1}
    assert rep.expressions[8] == {3: 1, 4: 1, 6: -1}
    assert rep.expressions[7] == {3: 2, 4: 1, 1: 1, 6: -2}
    assert rep.expressions[5] == {3: 3, 4: 1, 1: 2, 6: -3}
    # free and tree variables stand for themselves
    assert rep.expressions[3] == {3: 1} and rep.expressions[1] == {1: 1}


def test_chart_elimination_groebner_cross_check(sq72):
    for j in range(3):
        rep = chart_elimination(sq72, j, groebner_check=True)
        assert rep.ok and rep.groebner_checked
    sq21 = build_special_quiver(validate_group(2, 1))
    rep = chart_elimination(sq21, 0, groebner_check=True)
    assert rep.ok and rep.groebner_checked


def test_chart_elimination_all_charts_medium():
    for r, a in [(21, 13), (12, 5), (9, 8), (11, 4)]:
        sq = build_special_quiver(validate_group(r, a))
        for j in range(sq.ell + 1):
            rep = chart_elimination(sq, j)
            assert rep.ok, (r, a, j, rep.stalls)
            assert rep.free_pair == (2 * j + 1, 2 * j + 2)


def test_k_theory_shadow_examples():
    for r, a, vertices in [(21, 13, 5), (7, 2, 3), (5, 4, 5)]:
        rep = k_theory_shadow(validate_group(r, a))
        assert rep.ok
        assert f"{vertices} vertices" in rep.claim("vertex_count").detail


def test_main_theorem_check_examples():
    rep = main_theorem_check(validate_group(7, 2))
    assert rep.ok
    assert {c.name for c in rep.claims} == {
        "relations_in_kernel",
        "saturation_equality",
        "chart_elimination",
        "chart_immersion",
        "semistable_equals_stable",
    }
    assert all(c.ok for c in rep.claims)
    rep = main_theorem_check(validate_group(1, 0))
    assert rep.ok and rep.claims[0].name == "degenerate"


def test_main_theorem_size_policy():
    rep = main_theorem_check(validate_group(13, 5), saturation=False)
    assert rep.claim("saturation_equality").ok is None
    assert rep.ok  # skipped claims do not fail the report


def test_group_report_battery():
    rep = group_report(validate_group(7, 2))
    assert rep.ok
    names = {c.name for c in rep.claims}
    assert "hom_dimensions" in names and "chart_elimination" in names
    assert "semistable_equals_stable" in names  # ell = 2 <= 3


def test_sweep_small():
    rep = sweep(10, smoke_max_r=12)
    assert rep.ok
    assert len(rep.reports) == sum(1 for _ in _groups(12))
    assert rep.failures() == []


def _groups(max_r):
    from quotient_forge.cyclic import all_groups

    return all_groups(max_r, min_r=1)
