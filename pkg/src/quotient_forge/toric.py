"""Divisors, line bundles and intersection numbers on the minimal resolution.

A divisor supported on the torus-invariant prime divisors is a tuple of
ell + 2 integers indexed by the rays.  Sections of the distinguished line
bundles are labelled by plane monomials; their divisors of zeroes are read
off local chart trivializations, and the test suite validates the rule
against hand-checked quivers before anything downstream relies on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclic import ConsistencyError, Mon, ResolutionData
from . import intlinalg

CoxVector = tuple[int, ...]


def floor_divisor(m: Mon, rd: ResolutionData) -> CoxVector:
    """Componentwise floor of the pairing of x^b y^c with the ray generators."""
    r = rd.r
    return tuple((m.b * beta + m.c * alpha) // r for beta, alpha in rd.pairs)


def monomial_valuation(m: Mon, ray: int, rd: ResolutionData) -> Fraction:
    """Order of vanishing of x^b y^c along the given ray, a rational number."""
    beta, alpha = rd.pairs[ray]
    return Fraction(m.b * beta + m.c * alpha, rd.r)


def bundle_chart_generator(i: int, chart: int, rd: ResolutionData) -> Mon:
    """Monomial generating L_i on the given chart: x^{alpha_i} on charts at
    or beyond i, y^{beta_i} on the earlier ones."""
    return Mon(rd.alpha(i), 0) if i <= chart else Mon(0, rd.beta(i))


def vertex_of_weight(residue: int, rd: ResolutionData) -> int | None:
    """The vertex i with alpha_i = residue mod r, if any (they are distinct)."""
    for i in range(rd.ell + 1):
        if rd.alpha(i) % rd.r == residue % rd.r:
            return i
    return None


def section_divisor(m: Mon, tail: int, rd: ResolutionData) -> CoxVector:
    """Divisor of zeroes of the section m of hom(L_tail, L_head).

    The head is the vertex whose weight matches m times the tail weight.
    The vanishing order along each ray is read off a chart containing it:
    the section is m * gen(L_tail) / gen(L_head) in the trivialization, so
    the order is the valuation of that ratio.  Additive along path
    composition and componentwise nonnegative by construction; a negative
    or fractional order means the head lookup or chart data is wrong.
    """
    head = vertex_of_weight(m.b + rd.group.a * m.c + rd.alpha(tail), rd)
    if head is None:
        raise ValueError(f"{m} is not a section out of vertex {tail}")
    return _section_divisor_cached(m.b, m.c, tail, head, rd)


@lru_cache(maxsize=1 << 16)
def _section_divisor_cached(b: int, c: int, tail: int, head: int, rd: ResolutionData) -> CoxVector:
    r = rd.r
    ell = rd.ell
    div = []
    for k in range(ell + 2):
        chart = min(k, ell)
        gt = bundle_chart_generator(tail, chart, rd)
        gh = bundle_chart_generator(head, chart, rd)
        beta, alpha = rd.pairs[k]
        num = (b + gt.b - gh.b) * beta + (c + gt.c - gh.c) * alpha
        order, rem = divmod(num, r)
        if rem or order < 0:
            raise ConsistencyError(
                f"section x^{b}y^{c} out of vertex {tail} has order {num}/{r} along ray {k}"
            )
        div.append(order)
    return tuple(div)


def laurent_divisor(p: int, q: int, rd: ResolutionData) -> CoxVector:
    """Principal divisor of the Laurent monomial x^p y^q on the resolution.

    Requires (p, q) in the dual lattice, i.e. p + a q = 0 mod r; then every
    pairing with a ray generator is an exact integer.
    """
    r = rd.r
    if (p + rd.group.a * q) % r != 0:
        raise ValueError(f"({p}, {q}) is not a character-zero exponent pair")
    out = []
    for beta, alpha in rd.pairs:
        num = p * beta + q * alpha
        assert num % r == 0
        out.append(num // r)
    return tuple(out)


class IntersectionPairing:
    """Intersection numbers of the torus-invariant divisors.

    The two end divisors are non-compact, so their self-pairings (and the
    pairing of one with the other) are undefined; asking for one raises.
    """

    def __init__(self, rd: ResolutionData):
        if rd.ell < 1:
            raise ValueError("no exceptional curves, nothing to intersect")
        self.rd = rd

    def pair(self, i: int, j: int) -> int:
        ell = self.rd.ell
        noncompact = {0, ell + 1}
        if i in noncompact and j in noncompact:
            raise ValueError(f"intersection D_{i}.D_{j} of two non-compact divisors")
        if i == j:
            return -self.rd.coeffs[i - 1]
        if abs(i - j) == 1:
            return 1
        return 0

    def matrix(self) -> list[list[int | None]]:
        ell = self.rd.ell
        out: list[list[int | None]] = []
        for i in range(ell + 2):
            row: list[int | None] = []
            for j in range(ell + 2):
                try:
                    row.append(self.pair(i, j))
                except ValueError:
                    row.append(None)
            out.append(row)
        return out


def intersection_matrix(rd: ResolutionData) -> list[list[int | None]]:
    return IntersectionPairing(rd).matrix()


def pic_class(d: CoxVector, rd: ResolutionData) -> tuple[int, ...]:
    """Degree of the divisor class, as intersection numbers with the
    exceptional curves (an ell-tuple)."""
    if rd.ell == 0:
        return ()
    pairing = IntersectionPairing(rd)
    return tuple(
        sum(dk * pairing.pair(k, j) for k, dk in enumerate(d)) for j in range(1, rd.ell + 1)
    )


def principal_lattice(rd: ResolutionData) -> list[list[int]]:
    """Matrix whose columns span the lattice of principal divisors.

    Columns are the divisors of x^r and of y x^{-a} (a basis of the
    character-zero exponent pairs the dense torus provides).
    """
    col1 = laurent_divisor(rd.r, 0, rd)
    col2 = laurent_divisor(-rd.group.a, 1, rd)
    return [[c1, c2] for c1, c2 in zip(col1, col2)]


def is_principal(d: CoxVector, rd: ResolutionData) -> bool:
    """Whether d is the divisor of a Laurent monomial (Smith-form membership)."""
    return intlinalg.in_column_span(principal_lattice(rd), list(d))


def pic_equivalent(d1: CoxVector, d2: CoxVector, rd: ResolutionData) -> bool:
    return is_principal(tuple(x - y for x, y in zip(d1, d2)), rd)


def chart_dual_generators(j: int, rd: ResolutionData) -> tuple[tuple[int, int], tuple[int, int]]:
    """Exponent pairs of the two Laurent monomials generating the coordinate
    ring of chart j, namely x^{alpha_{j+1}}/y^{beta_{j+1}} and y^{beta_j}/x^{alpha_j}."""
    if not 0 <= j <= rd.ell:
        raise ValueError(f"chart index {j} out of range")
    gen1 = (rd.alpha(j + 1), -rd.beta(j + 1))
    gen2 = (-rd.alpha(j), rd.beta(j))
    a, r = rd.group.a, rd.r
    for p, q in (gen1, gen2):
        assert (p + a * q) % r == 0, (p, q)
    return gen1, gen2


@dataclass(frozen=True)
class LineBundleSeq:
    """The distinguished nef line bundles L_0 = O, L_1, ..., L_ell.

    ``chart_generators[i][j]`` is the monomial generating L_i on chart j:
    x^{alpha_i} for i <= j and y^{beta_i} for i > j.  ``degrees[i]`` is the
    class of L_i; the degree matrix (deg L_i restricted to the j-th
    exceptional curve) is the identity.
    """

    rd: ResolutionData
    degrees: tuple[tuple[int, ...], ...]
    chart_generators: tuple[tuple[Mon, ...], ...]


def preferred_bundles(rd: ResolutionData) -> LineBundleSeq:
    ell = rd.ell
    gens = tuple(
        tuple(Mon(rd.alpha(i), 0) if i <= j else Mon(0, rd.beta(i)) for j in range(ell + 1))
        for i in range(ell + 1)
    )
    degrees = tuple(pic_class(section_divisor(Mon(rd.alpha(i), 0), 0, rd), rd) for i in range(ell + 1))
    for i in range(1, ell + 1):
        expected = tuple(1 if j == i else 0 for j in range(1, ell + 1))
        if degrees[i] != expected:
            raise ConsistencyError(f"deg(L_{i}|D_j) is {degrees[i]}, expected {expected}")
    if ell and degrees[0] != (0,) * ell:
        raise ConsistencyError("structure sheaf has nonzero exceptional degrees")
    return LineBundleSeq(rd=rd, degrees=degrees, chart_generators=gens)
