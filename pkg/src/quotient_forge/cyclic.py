"""Arithmetic of a cyclic group acting on the plane with weights (1, a) mod r.

Everything here is exact integer arithmetic.  Characters of the group are
residues mod r (never complex roots of unity), plane monomials are pairs of
nonnegative exponents, and the resolution data for the quotient surface is
read off a convex hull of lattice points rather than a continued-fraction
recurrence, so there is no indexing convention to get wrong.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple, Sequence


class InvalidGroupError(ValueError):
    """The pair (r, a) does not describe a small cyclic action on the plane."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same data disagree.

    This always signals an implementation bug, never bad user input.
    """


class Mon(NamedTuple):
    """A monomial x^b y^c."""

    b: int
    c: int

    def __mul__(self, other: "Mon") -> "Mon":
        return Mon(self.b + other.b, self.c + other.c)

    def divides(self, other: "Mon") -> bool:
        return self.b <= other.b and self.c <= other.c

    def quotient(self, other: "Mon") -> "Mon":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Mon(self.b - other.b, self.c - other.c)

    @property
    def degree(self) -> int:
        return self.b + self.c

    def __str__(self) -> str:
        if self.b == 0 and self.c == 0:
            return "1"
        parts = []
        if self.b:
            parts.append("x" if self.b == 1 else f"x^{self.b}")
        if self.c:
            parts.append("y" if self.c == 1 else f"y^{self.c}")
        return "".join(parts)


ONE = Mon(0, 0)
X = Mon(1, 0)
Y = Mon(0, 1)


@dataclass(frozen=True)
class CyclicGroup:
    """The cyclic group of order r acting on (x, y) with weights (1, a)."""

    r: int
    a: int

    @property
    def trivial(self) -> bool:
        return self.r == 1


def validate_group(r: int, a: int) -> CyclicGroup:
    """Check that (r, a) is a small cyclic action and wrap it.

    Requires r >= 1 and, for r > 1, 1 <= a < r with gcd(a, r) = 1; a
    common factor would mean the action has quasireflections or is not
    faithful in this presentation.  The trivial group is (1, 0).
    """
    if r < 1:
        raise InvalidGroupError(f"group order must be positive, got r={r}")
    if r == 1:
        if a != 0:
            raise InvalidGroupError("the trivial group must be given as (1, 0)")
        return CyclicGroup(1, 0)
    if not 1 <= a < r:
        raise InvalidGroupError(f"weight a={a} out of range for r={r}")
    if gcd(a, r) != 1:
        raise InvalidGroupError(
            f"gcd(a, r) = gcd({a}, {r}) = {gcd(a, r)} != 1; "
            "the action is not small in these coordinates"
        )
    return CyclicGroup(r, a)


def char_of(m: Mon, g: CyclicGroup) -> int:
    """Character (weight mod r) of the monomial x^b y^c, namely b + a*c."""
    return (m.b + g.a * m.c) % g.r


def dual_character(k: int, g: CyclicGroup) -> int:
    """Index of the contragredient character.

    This is the only place the dual/star is ever applied; all other code
    calls this function rather than negating residues inline.
    """
    return (-k) % g.r


# ---------------------------------------------------------------------------
# staircases of lattice points


def minimal_points(points: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Points minimal under the componentwise partial order.

    Sweep in increasing first coordinate, keeping a point only when its
    second coordinate beats everything already seen; within one column only
    the lowest point can survive.  Output is sorted by first coordinate.
    """
    best: dict[int, int] = {}
    for b, c in points:
        if b not in best or c < best[b]:
            best[b] = c
    out = []
    low = None
    for b in sorted(best):
        c = best[b]
        if low is None or c < low:
            out.append((b, c))
            low = c
    return out


def _cross(o: tuple[int, int], p: tuple[int, int], q: tuple[int, int]) -> int:
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


def _lower_hull(points: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Vertices of the lower convex chain of an already-minimal staircase."""
    chain: list[tuple[int, int]] = []
    for p in sorted(points):
        while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) <= 0:
            chain.pop()
        chain.append(p)
    return chain


# ---------------------------------------------------------------------------
# resolution data


@dataclass(frozen=True)
class ResolutionData:
    """Toric data of the minimal resolution of the quotient surface.

    ``pairs[i] = (beta_i, alpha_i)`` scaled so that the ray generators of
    the fan are pairs[i]/r, running from (r, 0) at i = 0 to (0, r) at
    i = ell + 1.  ``coeffs[i-1] = c_i`` is the negative self-intersection
    of the i-th exceptional curve, recovered from the ray recurrence
    v_{i-1} + v_{i+1} = c_i v_i.
    """

    group: CyclicGroup
    pairs: tuple[tuple[int, int], ...]
    coeffs: tuple[int, ...]

    @property
    def ell(self) -> int:
        return len(self.pairs) - 2

    @property
    def r(self) -> int:
        return self.group.r

    def alpha(self, i: int) -> int:
        return self.pairs[i][1]

    def beta(self, i: int) -> int:
        return self.pairs[i][0]

    @property
    def alphas(self) -> tuple[int, ...]:
        return tuple(p[1] for p in self.pairs)

    @property
    def betas(self) -> tuple[int, ...]:
        return tuple(p[0] for p in self.pairs)


def _in_lattice(beta: int, alpha: int, g: CyclicGroup) -> bool:
    # Scaled lattice points (beta, alpha) = r*v with v in Z^2 + Z*(1,a)/r.
    return (alpha - g.a * beta) % g.r == 0


def _is_primitive(beta: int, alpha: int, g: CyclicGroup) -> bool:
    for k in range(2, gcd(beta, alpha) + 1):
        if beta % k == 0 and alpha % k == 0 and _in_lattice(beta // k, alpha // k, g):
            return False
    return True


def resolution_data(g: CyclicGroup) -> ResolutionData:
    """Ray generators and self-intersection numbers of the minimal resolution.

    The primitive ray generators are exactly the lattice points on the
    bounded part of the boundary of the convex hull of the nonzero lattice
    points in the first quadrant.  Every such point has both scaled
    coordinates in [0, r] because (r, 0) and (0, r) are lattice points, so
    a finite candidate set suffices.
    """
    r, a = g.r, g.a
    candidates = [
        (b, c)
        for b in range(r + 1)
        for c in range(r + 1)
        if (b, c) != (0, 0) and _in_lattice(b, c, g)
    ]
    staircase = minimal_points(candidates)
    vertices = _lower_hull(staircase)

    on_chain: list[tuple[int, int]] = [vertices[0]]
    for v, w in zip(vertices, vertices[1:]):
        segment = [p for p in staircase if v < p <= w and _cross(v, w, p) == 0]
        on_chain.extend(sorted(segment))
    # order from (r, 0) to (0, r)
    pairs = tuple(sorted(on_chain, reverse=True))

    assert pairs[0] == (r, 0) and pairs[-1] == (0, r)
    betas = [p[0] for p in pairs]
    alphas = [p[1] for p in pairs]
    assert all(x > y for x, y in zip(betas, betas[1:])), betas
    assert all(x < y for x, y in zip(alphas, alphas[1:])), alphas
    for b, c in pairs:
        assert _is_primitive(b, c, g), (b, c)

    coeffs = []
    for i in range(1, len(pairs) - 1):
        sb = pairs[i - 1][0] + pairs[i + 1][0]
        sa = pairs[i - 1][1] + pairs[i + 1][1]
        ci, rem = divmod(sb, pairs[i][0])
        if rem or ci * pairs[i][1] != sa or ci < 2:
            raise ConsistencyError(
                f"ray recurrence fails at i={i} for 1/{r}({1},{a}): "
                f"{pairs[i - 1]} + {pairs[i + 1]} vs {pairs[i]}"
            )
        coeffs.append(ci)

    return ResolutionData(group=g, pairs=pairs, coeffs=tuple(coeffs))


# ---------------------------------------------------------------------------
# invariant monomials


def _mingens_oracle(g: CyclicGroup) -> list[Mon]:
    r = g.r
    invariant = [
        (b, c)
        for b in range(r + 1)
        for c in range(r + 1)
        if (b, c) != (0, 0) and (b + g.a * c) % r == 0
    ]
    return [Mon(b, c) for b, c in minimal_points(invariant)]


def _mingens_formula(rd: ResolutionData) -> set[Mon]:
    # m_i = max(1, c_i - 1) for the interior indices; the end values are
    # pinned to 1, which makes the i = 0 term reproduce the generator
    # x^{alpha_1} y^{beta_0 - beta_1}.  Duplicates collapse in the set.
    r = rd.r
    ell = rd.ell
    m = {0: 1, ell + 1: 1}
    for i in range(1, ell + 1):
        m[i] = max(1, rd.coeffs[i - 1] - 1)
    gens = {Mon(0, r), Mon(r, 0)}
    for i in range(0, ell + 1):
        for t in range(1, m[i] + 1):
            gens.add(Mon(rd.alpha(i + 1) - t * rd.alpha(i), t * rd.beta(i) - rd.beta(i + 1)))
    return gens


def invariant_generators(g: CyclicGroup) -> tuple[Mon, ...]:
    """Minimal monomial generators of the ring of invariants.

    Computed by staircase enumeration (monomials of trivial character not
    divisible by a smaller nontrivial invariant), then cross-checked
    against the closed formula in terms of the resolution data.  The two
    must agree as sets; a mismatch is an internal bug.

    Returned in order of strictly decreasing x-exponent, i.e. from x^r
    down to y^r.
    """
    oracle = _mingens_oracle(g)
    if g.r > 1:
        formula = _mingens_formula(resolution_data(g))
        if set(oracle) != formula:
            raise ConsistencyError(
                f"invariant generators disagree for 1/{g.r}(1,{g.a}): "
                f"oracle {sorted(set(oracle))} vs formula {sorted(formula)}"
            )
    return tuple(sorted(oracle, key=lambda mon: -mon.b))


# ---------------------------------------------------------------------------
# gap inequalities of the resolution data


@dataclass(frozen=True)
class GapInequality:
    """Evaluation of one index of the exponent-gap inequalities.

    For m_i = max(1, c_i - 1) the quantities alpha_{i+1} - m_i alpha_i and
    alpha_i - alpha_{i-1} coincide by the ray recurrence (same on the beta
    side), so the strict forms never hold while the weak forms always do.
    The report records the computed values verbatim instead of asserting.
    """

    i: int
    m: int
    alpha_lhs: int
    alpha_rhs: int
    beta_lhs: int
    beta_rhs: int

    @property
    def alpha_strict(self) -> bool:
        return self.alpha_lhs > self.alpha_rhs

    @property
    def alpha_weak(self) -> bool:
        return self.alpha_lhs >= self.alpha_rhs

    @property
    def beta_strict(self) -> bool:
        return self.beta_lhs < self.beta_rhs

    @property
    def beta_weak(self) -> bool:
        return self.beta_lhs <= self.beta_rhs


def riemenschneider_inequalities(rd: ResolutionData) -> list[GapInequality]:
    """Evaluate both gap-inequality families at every interior index."""
    report = []
    for i in range(1, rd.ell + 1):
        m = max(1, rd.coeffs[i - 1] - 1)
        report.append(
            GapInequality(
                i=i,
                m=m,
                alpha_lhs=rd.alpha(i + 1) - m * rd.alpha(i),
                alpha_rhs=rd.alpha(i) - rd.alpha(i - 1),
                beta_lhs=m * rd.beta(i) - rd.beta(i + 1),
                beta_rhs=rd.beta(i - 1) - rd.beta(i),
            )
        )
    return report


def all_groups(max_r: int, min_r: int = 2) -> list[CyclicGroup]:
    """Every valid action with min_r <= r <= max_r, ordered by (r, a)."""
    out = []
    for r in range(min_r, max_r + 1):
        if r == 1:
            out.append(CyclicGroup(1, 0))
            continue
        for a in range(1, r):
            if gcd(a, r) == 1:
                out.append(CyclicGroup(r, a))
    return out
