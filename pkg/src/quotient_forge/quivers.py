"""Quivers whose arrows carry plane monomials and divisor labels.

Paths are tuples of arrow ids, written in traversal order.  Arrow ids are
1-based and stable, so they double as variable indices y_1, y_2, ... when
relations are turned into binomials.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclic import ConsistencyError, CyclicGroup, Mon, ResolutionData, minimal_points
from .toric import CoxVector, monomial_valuation

Path = tuple[int, ...]


@dataclass(frozen=True)
class Arrow:
    idx: int
    tail: int
    head: int
    mon: Mon
    cox: CoxVector | None = None


class LabelledQuiver:
    def __init__(self, vertex_count: int, arrows: list[Arrow]):
        self.vertex_count = vertex_count
        self.arrows = tuple(arrows)
        ids = [a.idx for a in arrows]
        if sorted(ids) != list(range(1, len(arrows) + 1)):
            raise ValueError(f"arrow ids must be 1..{len(arrows)}, got {sorted(ids)}")
        self._by_id = {a.idx: a for a in arrows}
        for a in arrows:
            if not (0 <= a.tail < vertex_count and 0 <= a.head < vertex_count):
                raise ValueError(f"arrow {a} out of range")

    def arrow(self, idx: int) -> Arrow:
        return self._by_id[idx]

    def arrows_from(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.tail == v]

    def arrows_into(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.head == v]

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return False
        seen = {0}
        frontier = [0]
        while frontier:
            v = frontier.pop()
            for a in self.arrows:
                for w in ((a.head,) if a.tail == v else ()) + ((a.tail,) if a.head == v else ()):
                    if w not in seen:
                        seen.add(w)
                        frontier.append(w)
        return len(seen) == self.vertex_count

    # -- path utilities ----------------------------------------------------

    def check_path(self, path: Path) -> None:
        for i, j in zip(path, path[1:]):
            if self._by_id[i].head != self._by_id[j].tail:
                raise ValueError(f"arrows {i} and {j} do not compose")

    def path_tail(self, path: Path) -> int:
        return self._by_id[path[0]].tail

    def path_head(self, path: Path) -> int:
        return self._by_id[path[-1]].head

    def path_mon(self, path: Path) -> Mon:
        m = Mon(0, 0)
        for idx in path:
            m = m * self._by_id[idx].mon
        return m

    def path_div(self, path: Path) -> CoxVector:
        divs = [self._by_id[idx].cox for idx in path]
        if any(d is None for d in divs):
            raise ValueError("path has unlabelled arrows")
        return tuple(sum(col) for col in zip(*divs))

    def path_exponents(self, path: Path) -> tuple[int, ...]:
        """Exponent vector of y_path = prod over the path's support.

        The paths this package builds never repeat an arrow; repetition
        would make the support product lossy, so it is rejected.
        """
        if len(set(path)) != len(path):
            raise ConsistencyError(f"path repeats an arrow: {path}")
        exps = [0] * len(self.arrows)
        for idx in path:
            exps[idx - 1] += 1
        return tuple(exps)


@dataclass(frozen=True)
class Relation:
    """A pair of paths with equal tail, head and labelling divisor."""

    lhs: Path
    rhs: Path


class RelationSet:
    def __init__(self, quiver: LabelledQuiver, relations: list[Relation]):
        self.quiver = quiver
        self.relations = tuple(relations)
        for rel in relations:
            quiver.check_path(rel.lhs)
            quiver.check_path(rel.rhs)
            if quiver.path_tail(rel.lhs) != quiver.path_tail(rel.rhs) or quiver.path_head(
                rel.lhs
            ) != quiver.path_head(rel.rhs):
                raise ValueError(f"relation endpoints differ: {rel}")
            if quiver.path_mon(rel.lhs) != quiver.path_mon(rel.rhs):
                raise ValueError(f"relation monomials differ: {rel}")
            if all(quiver.arrow(i).cox is not None for i in rel.lhs + rel.rhs):
                if quiver.path_div(rel.lhs) != quiver.path_div(rel.rhs):
                    raise ValueError(f"relation divisor labels differ: {rel}")

    def binomials(self) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Normalized exponent-vector pairs, duplicates and zeros dropped."""
        out = set()
        for rel in self.relations:
            u = self.quiver.path_exponents(rel.lhs)
            v = self.quiver.path_exponents(rel.rhs)
            norm = normalize_binomial(u, v)
            if norm is not None:
                out.add(norm)
        return out


def grevlex_key(exps: tuple[int, ...]):
    return (sum(exps), tuple(-e for e in reversed(exps)))


def normalize_binomial(
    u: tuple[int, ...], v: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Cancel common factors and orient so the larger monomial comes first.

    Returns None for the zero binomial.
    """
    plus = tuple(max(x - y, 0) for x, y in zip(u, v))
    minus = tuple(max(y - x, 0) for x, y in zip(u, v))
    if plus == minus:
        return None
    if grevlex_key(plus) < grevlex_key(minus):
        plus, minus = minus, plus
    return plus, minus


# ---------------------------------------------------------------------------
# quivers of sections


def irreducible_sections_from(
    tail_char: int, vertex_chars: list[int], g: CyclicGroup
) -> list[tuple[Mon, int]]:
    """Irreducible torus-invariant maps out of one vertex.

    A monomial m is a valid section from the vertex of weight ``tail_char``
    to the vertex of weight w when m has character w - tail_char; it is an
    arrow when no proper submonomial is itself a valid section to some
    vertex (equivalently, m is minimal in the staircase of all valid
    endpoints).  Exponents above r always split off an invariant power of
    x or y, so the search box [0, r]^2 is exhaustive.

    Returns (monomial, head_vertex) pairs.
    """
    r = g.r
    targets = {}
    for j, w in enumerate(vertex_chars):
        residue = (w - tail_char) % r
        if residue in targets:
            raise ValueError("vertex weights must be distinct mod r")
        targets[residue] = j
    valid = [
        (b, c)
        for b in range(r + 1)
        for c in range(r + 1)
        if (b, c) != (0, 0) and (b + g.a * c) % r in targets
    ]
    return [
        (Mon(b, c), targets[(b + g.a * c) % r]) for b, c in minimal_points(valid)
    ]


def chart_for_ray(k: int, rd: ResolutionData) -> int:
    return min(k, rd.ell)


def section_label(
    m: Mon, tail: int, head: int, chart_gens, rd: ResolutionData
) -> CoxVector:
    """Divisor of zeroes of a section, from local chart trivializations.

    ``chart_gens[v][j]`` must generate the v-th bundle on chart j.  The
    vanishing order along each ray is computed in a chart containing that
    ray; the result must be a nonnegative integer.
    """
    out = []
    for k in range(rd.ell + 2):
        j = chart_for_ray(k, rd)
        order = (
            monomial_valuation(m * chart_gens[tail][j], k, rd)
            - monomial_valuation(chart_gens[head][j], k, rd)
        )
        if order.denominator != 1 or order < 0:
            raise ConsistencyError(
                f"section {m}: {tail}->{head} has order {order} along ray {k}"
            )
        out.append(int(order))
    return tuple(out)


def sections_quiver(
    vertex_chars: list[int], chart_gens, g: CyclicGroup, rd: ResolutionData
) -> list[Arrow]:
    """All arrows of the quiver of sections on the given bundles.

    Arrows are returned unnumbered (idx 0); callers assign their own
    numbering.  Order is by (tail, head, monomial) for determinism.
    """
    arrows = []
    for tail in range(len(vertex_chars)):
        for m, head in irreducible_sections_from(vertex_chars[tail], vertex_chars, g):
            cox = section_label(m, tail, head, chart_gens, rd)
            arrows.append(Arrow(idx=0, tail=tail, head=head, mon=m, cox=cox))
    arrows.sort(key=lambda a: (a.tail, a.head, a.mon))
    return arrows
