"""Weight matrices, toric ideals, spanning trees and the moduli ideals.

The weight matrix stacks the incidence map of a quiver on top of the
divisor labels of its arrows; its integer kernel cuts out the toric ideal
once the lattice-basis binomials are saturated at every variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import groebner, intlinalg
from .cyclic import ConsistencyError
from .groebner import Poly
from .quivers import LabelledQuiver, grevlex_key, normalize_binomial
from .special import SpecialQuiver

BinomialPair = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class BinomialIdeal:
    """An ideal given by normalized difference-of-monomial generators."""

    num_vars: int
    gens: frozenset[BinomialPair]

    @classmethod
    def from_pairs(cls, num_vars: int, pairs: Iterable[tuple[Sequence[int], Sequence[int]]]):
        gens = set()
        for u, v in pairs:
            norm = normalize_binomial(tuple(u), tuple(v))
            if norm is not None:
                gens.add(norm)
        return cls(num_vars=num_vars, gens=frozenset(gens))

    def polynomials(self) -> list[Poly]:
        return [groebner.binomial(u, v) for u, v in self.sorted_gens()]

    def sorted_gens(self) -> list[BinomialPair]:
        return sorted(self.gens, key=lambda p: (grevlex_key(p[0]), grevlex_key(p[1])))

    def __len__(self) -> int:
        return len(self.gens)


@dataclass(frozen=True)
class MonomialIdeal:
    num_vars: int
    gens: frozenset[tuple[int, ...]]

    def sorted_gens(self) -> list[tuple[int, ...]]:
        return sorted(self.gens, key=grevlex_key)

    def polynomials(self) -> list[Poly]:
        return [groebner.monomial(m) for m in self.sorted_gens()]

    def __len__(self) -> int:
        return len(self.gens)


# ---------------------------------------------------------------------------
# the weight matrix and its kernel


def weight_matrix(quiver: LabelledQuiver) -> list[list[int]]:
    """Incidence rows stacked on divisor-label rows, one column per arrow."""
    n_div = None
    for a in quiver.arrows:
        if a.cox is None:
            raise ValueError("weight matrix needs divisor labels on every arrow")
        n_div = len(a.cox)
    rows = []
    for v in range(quiver.vertex_count):
        rows.append(
            [(1 if a.head == v else 0) - (1 if a.tail == v else 0) for a in quiver.arrows]
        )
    for k in range(n_div or 0):
        rows.append([a.cox[k] for a in quiver.arrows])
    return rows


def kernel_lattice(matrix: list[list[int]]) -> list[list[int]]:
    basis = intlinalg.kernel_basis(matrix)
    for v in basis:
        assert all(s == 0 for s in intlinalg.mat_vec(matrix, v))
    return basis


def in_kernel(matrix: list[list[int]], vector: Sequence[int]) -> bool:
    return all(s == 0 for s in intlinalg.mat_vec(matrix, list(vector)))


def _split_vector(v: Sequence[int]) -> BinomialPair:
    plus = tuple(max(x, 0) for x in v)
    minus = tuple(max(-x, 0) for x in v)
    return plus, minus


def grading_weights(matrix: list[list[int]]) -> list[int] | None:
    """A strictly positive grading under which the kernel is homogeneous.

    The divisor-label rows of a weight matrix sum to a positive vector
    that vanishes on the kernel, so total label degree grades the toric
    ideal; returns None when no such combination of rows is positive.
    """
    if not matrix:
        return None
    cols = len(matrix[0])
    for rows in (matrix, [row for row in matrix if all(x >= 0 for x in row)]):
        total = [sum(row[j] for row in rows) for j in range(cols)]
        if all(t > 0 for t in total):
            return total
    return None


def toric_ideal(matrix: list[list[int]], *, order_perm: Sequence[int] | None = None) -> BinomialIdeal:
    """The toric ideal of the weight map: the saturated lattice-basis ideal.

    Starting from binomials of an integer kernel basis, saturate at each
    variable in turn; the result generates the full ideal of binomials
    with exponent difference in the kernel.  ``order_perm`` permutes the
    variables inside the working order, which must not change the ideal
    (and the tests check that it does not).
    """
    ncols = len(matrix[0]) if matrix else 0
    basis = kernel_lattice(matrix)
    gens = [groebner.binomial(*_split_vector(v)) for v in basis]
    weights = grading_weights(matrix)
    if order_perm is None:
        sat = groebner.saturate_variables(gens, ncols, weights=weights)
    else:
        perm = list(order_perm)
        inv = [0] * len(perm)
        for i, p in enumerate(perm):
            inv[p] = i
        shuffled = [{tuple(e[p] for p in perm): c for e, c in f.items()} for f in gens]
        wshuf = [weights[p] for p in perm] if weights else None
        sat_shuffled = groebner.saturate_variables(shuffled, ncols, weights=wshuf)
        sat = [{tuple(e[q] for q in inv): c for e, c in f.items()} for f in sat_shuffled]
    pairs = []
    for f in sat:
        terms = sorted(f.items(), key=lambda t: grevlex_key(t[0]))
        if len(terms) != 2 or terms[0][1] + terms[1][1] != 0:
            raise ConsistencyError(f"toric saturation produced a non-binomial: {f}")
        pairs.append((terms[1][0], terms[0][0]))
    ideal = BinomialIdeal.from_pairs(ncols, pairs)
    for u, v in ideal.gens:
        diff = [a - b for a, b in zip(u, v)]
        if not in_kernel(matrix, diff):
            raise ConsistencyError(f"toric generator {u}-{v} is not in the kernel")
    return ideal


# ---------------------------------------------------------------------------
# spanning trees and the irrelevant ideal


def spanning_trees(quiver: LabelledQuiver) -> list[frozenset[int]]:
    """All spanning trees rooted at vertex 0, every vertex reachable from 0.

    Each non-root vertex picks one incoming arrow; the assignment is a
    tree exactly when following the picks upward from every vertex reaches
    the root.  Backtracking with an incremental cycle check keeps the
    search linear in the number of trees.
    """
    n = quiver.vertex_count
    incoming = {v: [a for a in quiver.arrows if a.head == v and a.tail != v] for v in range(1, n)}
    trees: list[frozenset[int]] = []
    parent_arrow: dict[int, int] = {}
    parent: dict[int, int] = {}

    def reaches_root(v: int) -> bool:
        seen = set()
        while v != 0:
            if v in seen:
                return False
            seen.add(v)
            if v not in parent:
                return True  # undecided vertices cannot close a cycle yet
            v = parent[v]
        return True

    def extend(v: int):
        if v == n:
            if all(_reaches_root_final(w) for w in range(1, n)):
                trees.append(frozenset(parent_arrow.values()))
            return
        for a in incoming[v]:
            parent[v] = a.tail
            parent_arrow[v] = a.idx
            if reaches_root(v):
                extend(v + 1)
            del parent[v]
            del parent_arrow[v]

    def _reaches_root_final(v: int) -> bool:
        seen = set()
        while v != 0:
            if v in seen or v not in parent:
                return False
            seen.add(v)
            v = parent[v]
        return True

    extend(1)
    return sorted(trees, key=sorted)


def canonical_trees(sq: SpecialQuiver) -> list[frozenset[int]]:
    """The closed-form tree family: x-arrows below the split, y-arrows above."""
    ell = sq.ell
    out = []
    for j in range(ell + 1):
        support = {sq.x_arrow(i) for i in range(1, j + 1)}
        support |= {sq.y_arrow(i) for i in range(j + 1, ell + 1)}
        out.append(frozenset(support))
    return out


def irrelevant_ideal(quiver: LabelledQuiver, trees: Sequence[frozenset[int]] | None = None) -> MonomialIdeal:
    if trees is None:
        trees = spanning_trees(quiver)
    n = len(quiver.arrows)
    gens = set()
    for tree in trees:
        gens.add(tuple(1 if (i + 1) in tree else 0 for i in range(n)))
    return MonomialIdeal(num_vars=n, gens=frozenset(gens))


# ---------------------------------------------------------------------------
# saturation wrappers


def saturate(
    ideal_gens: Sequence[Poly], b: MonomialIdeal, weights: Sequence[int] | None = None
) -> list[Poly]:
    """The saturation of the ideal at B, iterating quotients to stability
    one variable at a time; positive weights unlock the graded shortcut."""
    return groebner.saturate_monomial_ideal(ideal_gens, b.sorted_gens(), b.num_vars, weights=weights)


def ideals_equal(gens_a: Sequence[Poly], gens_b: Sequence[Poly], num_vars: int) -> bool:
    return groebner.ideal_equal(gens_a, gens_b, num_vars)
