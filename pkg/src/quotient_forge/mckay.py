"""The bound McKay quiver, its chart monomials, and the special characters.

Vertex k of the McKay quiver is the character of weight k; the bundle
attached to it is generated on each chart by a standard monomial of the
chart ideal, in the contragredient degree.  ``dual_character`` is the only
place the star is applied.
"""

from __future__ import annotations

from .cyclic import (
    ConsistencyError,
    CyclicGroup,
    Mon,
    ResolutionData,
    char_of,
    dual_character,
    minimal_points,
)
from .quivers import Arrow, LabelledQuiver, Relation, RelationSet, section_label


def ghilb_chart_monomial(j: int, rho: int, rd: ResolutionData) -> Mon:
    """The unique monomial of weight rho standard for the chart ideal.

    The chart ideal at j is (x^{alpha_{j+1}}, y^{beta_j},
    x^{alpha_{j+1}-alpha_j} y^{beta_j-beta_{j+1}}); its standard monomials
    form a cluster of size r with exactly one member per character, and
    the member of weight rho generates the tautological bundle of the
    dual character on that chart.
    """
    matches = [m for m in ghilb_standard_monomials(j, rd) if char_of(m, rd.group) == rho]
    if len(matches) != 1:
        raise ConsistencyError(
            f"chart {j} has {len(matches)} standard monomials of weight {rho}: {matches}"
        )
    return matches[0]


def ghilb_standard_monomials(j: int, rd: ResolutionData) -> list[Mon]:
    """All standard monomials of the chart ideal at j (r of them)."""
    if not 0 <= j <= rd.ell:
        raise ValueError(f"chart index {j} out of range")
    b_max = rd.alpha(j + 1)
    c_max = rd.beta(j)
    b_cut = rd.alpha(j + 1) - rd.alpha(j)
    c_cut = rd.beta(j) - rd.beta(j + 1)
    out = [
        Mon(b, c)
        for b in range(b_max)
        for c in range(c_max)
        if not (b >= b_cut and c >= c_cut)
    ]
    if len(out) != rd.r:
        raise ConsistencyError(f"chart {j} cluster has size {len(out)}, expected {rd.r}")
    return out


def tautological_chart_generators(rd: ResolutionData) -> list[list[Mon]]:
    """chart_gens[k][j] generates the bundle at McKay vertex k on chart j."""
    g = rd.group
    return [
        [ghilb_chart_monomial(j, dual_character(k, g), rd) for j in range(rd.ell + 1)]
        for k in range(g.r)
    ]


def build_mckay(
    g: CyclicGroup, rd: ResolutionData | None = None
) -> tuple[LabelledQuiver, RelationSet]:
    """The McKay quiver with its commutation relations.

    Vertices are the r characters.  For every vertex k there is an x-arrow
    k+1 -> k (id k+1) and a y-arrow k+a -> k (id r+k+1), and one relation
    per vertex equating its two length-two incoming paths with label xy.
    Divisor labels are attached when resolution data is supplied.
    """
    r, a = g.r, g.a
    gens = tautological_chart_generators(rd) if rd is not None else None
    arrows = []
    for k in range(r):
        mon = Mon(1, 0)
        tail, head = (k + 1) % r, k
        cox = section_label(mon, tail, head, gens, rd) if gens else None
        arrows.append(Arrow(idx=k + 1, tail=tail, head=head, mon=mon, cox=cox))
    for k in range(r):
        mon = Mon(0, 1)
        tail, head = (k + a) % r, k
        cox = section_label(mon, tail, head, gens, rd) if gens else None
        arrows.append(Arrow(idx=r + k + 1, tail=tail, head=head, mon=mon, cox=cox))
    quiver = LabelledQuiver(r, arrows)

    def x_arrow(k: int) -> int:
        return k % r + 1

    def y_arrow(k: int) -> int:
        return r + k % r + 1

    relations = [
        # both sides run from vertex k+1+a to vertex k
        Relation(lhs=(y_arrow(k + 1), x_arrow(k)), rhs=(x_arrow(k + a), y_arrow(k)))
        for k in range(r)
    ]
    return quiver, RelationSet(quiver, relations)


def mckay_step(vertex: int, letter: str, g: CyclicGroup) -> int:
    """Head of the unique arrow with the given label out of a McKay vertex."""
    if letter == "x":
        return (vertex - 1) % g.r
    if letter == "y":
        return (vertex - g.a) % g.r
    raise ValueError(f"unknown letter {letter!r}")


def sort_mckay_path(start: int, letters: str, g: CyclicGroup) -> list[str]:
    """Rewrite a McKay path to the all-x-first normal form by adjacent swaps.

    Each swap replaces a (y, x) step pair by (x, y) across the same pair of
    endpoints, which is exactly one commutation relation; the rewrite
    therefore witnesses congruence of the path with its normal form.
    """
    word = list(letters)
    while True:
        for pos in range(len(word) - 1):
            if word[pos] == "y" and word[pos + 1] == "x":
                word[pos], word[pos + 1] = "x", "y"
                break
        else:
            return word


def module_generator_count(rho: int, g: CyclicGroup) -> int:
    """Number of minimal generators, over the invariants, of the span of
    the monomials of weight rho."""
    r = g.r
    members = []
    for c in range(2 * r + 1):
        first = (rho - g.a * c) % r
        for b in range(first, 2 * r + 1, r):
            members.append((b, c))
    return len(minimal_points(members))


def special_characters(g: CyclicGroup, rd: ResolutionData) -> tuple[int, ...]:
    """The special characters, as vertex indices of the McKay quiver.

    Two criteria are run and must agree: counting minimal module
    generators (exactly two), and reading the weights alpha_i off the
    exceptional rays.  The i-th entry is the dual of the weight of
    x^{alpha_i}, matching the bundle attached to exceptional curve i.
    """
    by_count = {rho for rho in range(g.r) if module_generator_count(rho, g) == 2}
    by_rays = [rd.alpha(i) % g.r for i in range(1, rd.ell + 1)]
    if by_count != set(by_rays):
        raise ConsistencyError(
            f"special characters disagree for 1/{g.r}(1,{g.a}): "
            f"generator counts give {sorted(by_count)}, rays give {sorted(by_rays)}"
        )
    return tuple(dual_character(rho, g) for rho in by_rays)
