import itertools
import random

import pytest

from quotient_forge import groebner
from quotient_forge.cyclic import resolution_data, validate_group
from quotient_forge.ideals import (
    BinomialIdeal,
    canonical_trees,
    grading_weights,
    in_kernel,
    irrelevant_ideal,
    kernel_lattice,
    saturate,
    spanning_trees,
    toric_ideal,
    weight_matrix,
)
from quotient_forge.intlinalg import det, identity
from quotient_forge.special import build_special_quiver, lambda_relations

PAPER_WEIGHT_MATRIX_7_2 = [
    [-1, 1, 0, 0, 1, -1, 1, 1],
    [1, -1, -1, 1, 0, 0, 0, 0],
    [0, 0, 1, -1, -1, 1, -1, -1],
    [1, 0, 1, 0, 5, 0, 3, 1],
    [0, 1, 1, 0, 3, 0, 2, 1],
    [0, 1, 0, 1, 1, 0, 1, 1],
    [0, 3, 0, 3, 0, 1, 1, 2],
]


def _paper_binomial(plus, minus, nvars=8):
    u = [0] * nvars
    v = [0] * nvars
    for i in plus:
        u[i - 1] += 1
    for i in minus:
        v[i - 1] += 1
    return tuple(u), tuple(v)


PAPER_TORIC_7_2 = [
    _paper_binomial([7, 7], [5, 8]),
    _paper_binomial([3, 4], [6, 8]),
    _paper_binomial([1, 2], [6, 8]),
    _paper_binomial([3, 7, 8], [2, 5]),
    _paper_binomial([1, 7, 8], [4, 5]),
    _paper_binomial([1, 3, 7], [5, 6]),
    _paper_binomial([3, 8, 8], [2, 7]),
    _paper_binomial([1, 8, 8], [4, 7]),
    _paper_binomial([1, 3, 8], [6, 7]),
]


@pytest.fixture(scope="module")
def sq72():
    g = validate_group(7, 2)
    return build_special_quiver(g, resolution_data(g))


@pytest.fixture(scope="module")
def sq2113():
    g = validate_group(21, 13)
    return build_special_quiver(g, resolution_data(g))


def test_weight_matrix_7_2_matches_print(sq72):
    assert weight_matrix(sq72.quiver) == PAPER_WEIGHT_MATRIX_7_2


def test_weight_matrix_incidence_columns_sum_to_zero(sq72, sq2113):
    for sq in (sq72, sq2113):
        matrix = weight_matrix(sq.quiver)
        n_vert = sq.quiver.vertex_count
        for col in range(sq.n_arrows):
            assert sum(matrix[row][col] for row in range(n_vert)) == 0


def test_weight_matrix_dimensions():
    sq = build_special_quiver(validate_group(2, 1))
    matrix = weight_matrix(sq.quiver)
    assert len(matrix) == 5 and all(len(row) == 4 for row in matrix)


def test_kernel_lattice(sq72):
    from quotient_forge.intlinalg import rank

    matrix = weight_matrix(sq72.quiver)
    basis = kernel_lattice(matrix)
    # the image has rank dim(X) + (#vertices - 1) = 4
    assert rank(matrix) == 4
    assert len(basis) == 8 - 4
    for v in basis:
        assert in_kernel(matrix, v)
    assert kernel_lattice(identity(3)) == []
    assert len(kernel_lattice([[0, 0, 0]])) == 3


def test_toric_ideal_7_2_equals_the_printed_nine(sq72):
    iq = toric_ideal(weight_matrix(sq72.quiver))
    printed = [groebner.binomial(u, v) for u, v in PAPER_TORIC_7_2]
    assert groebner.ideal_equal(iq.polynomials(), printed, 8)


def test_toric_ideal_generators_lie_in_kernel(sq72, sq2113):
    for sq in (sq72, sq2113):
        matrix = weight_matrix(sq.quiver)
        iq = toric_ideal(matrix)
        for u, v in iq.gens:
            assert in_kernel(matrix, [x - y for x, y in zip(u, v)])


def test_toric_ideal_trivial_cases():
    assert len(toric_ideal(identity(3))) == 0
    full = toric_ideal([[0, 0, 0]])
    # kernel is everything: the ideal of the point (1,1,1)
    expected = [
        groebner.binomial((1, 0, 0), (0, 0, 0)),
        groebner.binomial((0, 1, 0), (0, 0, 0)),
        groebner.binomial((0, 0, 1), (0, 0, 0)),
    ]
    assert groebner.ideal_equal(full.polynomials(), expected, 3)


def test_toric_ideal_is_order_independent(sq72):
    matrix = weight_matrix(sq72.quiver)
    base = toric_ideal(matrix)
    rng = random.Random(5)
    for _ in range(3):
        perm = list(range(8))
        rng.shuffle(perm)
        other = toric_ideal(matrix, order_perm=perm)
        assert groebner.ideal_equal(base.polynomials(), other.polynomials(), 8)


def test_grading_weights_positive(sq72):
    w = grading_weights(weight_matrix(sq72.quiver))
    assert w is not None and all(x > 0 for x in w)
    assert grading_weights([[1, -1]]) is None


def test_spanning_trees_7_2(sq72):
    trees = spanning_trees(sq72.quiver)
    assert [sorted(t) for t in trees] == [[1, 3], [1, 6], [4, 6]]
    assert set(trees) == set(canonical_trees(sq72))
    bq = irrelevant_ideal(sq72.quiver, trees)
    assert sorted(bq.sorted_gens()) == sorted(
        [
            (1, 0, 1, 0, 0, 0, 0, 0),
            (1, 0, 0, 0, 0, 1, 0, 0),
            (0, 0, 0, 1, 0, 1, 0, 0),
        ]
    )


def test_spanning_trees_21_13(sq2113):
    trees = spanning_trees(sq2113.quiver)
    assert [sorted(t) for t in trees] == [
        [1, 3, 5, 7],
        [1, 3, 5, 10],
        [1, 3, 8, 10],
        [1, 6, 8, 10],
        [4, 6, 8, 10],
    ]
    assert set(trees) == set(canonical_trees(sq2113))


def test_spanning_trees_single_vertex():
    sq = build_special_quiver(validate_group(1, 0))
    trees = spanning_trees(sq.quiver)
    assert trees == [frozenset()]
    bq = irrelevant_ideal(sq.quiver, trees)
    assert bq.sorted_gens() == [(0, 0)]  # the unit monomial: nothing is unstable


def test_tree_count_matches_curve_count():
    for r, a in [(5, 2), (12, 7), (9, 4), (11, 10)]:
        sq = build_special_quiver(validate_group(r, a))
        assert len(spanning_trees(sq.quiver)) == sq.ell + 1


def test_incidence_block_is_totally_unimodular():
    # exhaustive minors for the small quivers, sampled for a bigger one
    rng = random.Random(31)
    for r, a in [(5, 2), (7, 2), (12, 11)]:
        sq = build_special_quiver(validate_group(r, a))
        inc = weight_matrix(sq.quiver)[: sq.quiver.vertex_count]
        rows, cols = len(inc), len(inc[0])
        if rows <= 5 and cols <= 12:
            row_sets = [
                rs for k in range(1, min(rows, cols) + 1) for rs in itertools.combinations(range(rows), k)
            ]
            for rs in row_sets:
                for cs in itertools.combinations(range(cols), len(rs)):
                    minor = [[inc[i][j] for j in cs] for i in rs]
                    assert det(minor) in (-1, 0, 1)
        else:
            for _ in range(300):
                k = rng.randint(1, min(rows, cols))
                rs = rng.sample(range(rows), k)
                cs = rng.sample(range(cols), k)
                minor = [[inc[i][j] for j in cs] for i in rs]
                assert det(minor) in (-1, 0, 1)


def test_saturation_equality_smallest_case():
    sq = build_special_quiver(validate_group(2, 1))
    matrix = weight_matrix(sq.quiver)
    iq = toric_ideal(matrix)
    j_ideal = BinomialIdeal.from_pairs(4, lambda_relations(sq).binomials())
    bq = irrelevant_ideal(sq.quiver)
    sat_j = saturate(j_ideal.polynomials(), bq)
    sat_i = saturate(iq.polynomials(), bq)
    assert groebner.ideal_equal(sat_j, sat_i, 4)


def test_saturate_zero_ideal_is_zero():
    sq = build_special_quiver(validate_group(2, 1))
    bq = irrelevant_ideal(sq.quiver)
    assert saturate([], bq) == []


def test_binomial_ideal_normalization():
    ideal = BinomialIdeal.from_pairs(3, [((2, 1, 0), (1, 1, 1)), ((1, 0, 0), (1, 0, 0))])
    # common factor cancelled, zero binomial dropped
    assert ideal.gens == frozenset({((1, 0, 0), (0, 0, 1))})
