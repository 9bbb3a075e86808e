"""The bound Special McKay quiver: arrows, lifting, and the relation family.

Vertices 0..ell carry the distinguished bundles; vertex i sits over the
McKay vertex dual to the weight of x^{alpha_i}.  Arrows follow a fixed
numbering: x-arrows at the odd ids, y-arrows at the even ids, and the
mixed arrows (which always point at vertex 0) appended at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .cyclic import (
    ConsistencyError,
    CyclicGroup,
    Mon,
    ResolutionData,
    dual_character,
    invariant_generators,
    resolution_data,
)
from .mckay import mckay_step, special_characters
from .quivers import (
    Arrow,
    LabelledQuiver,
    Path,
    Relation,
    RelationSet,
    irreducible_sections_from,
    normalize_binomial,
    sections_quiver,
)
from .toric import preferred_bundles, section_divisor

ArrowKind = Literal["x", "y", "xy"]


def arrow_kind(mon: Mon) -> ArrowKind:
    if mon.c == 0:
        return "x"
    if mon.b == 0:
        return "y"
    return "xy"


@dataclass(frozen=True, eq=False)
class SpecialQuiver:
    group: CyclicGroup
    rd: ResolutionData
    quiver: LabelledQuiver
    iota: tuple[int, ...]  # McKay vertex sitting over each vertex

    @property
    def ell(self) -> int:
        return self.rd.ell

    @property
    def n_arrows(self) -> int:
        return len(self.quiver.arrows)

    def x_arrow(self, i: int) -> int:
        """Id of the x-arrow from i-1 into i (wrapping into 0 at i = ell+1)."""
        if not 1 <= i <= self.ell + 1:
            raise ValueError(f"x-arrow index {i} out of range")
        return 2 * i - 1

    def y_arrow(self, i: int) -> int:
        """Id of the y-arrow from i+1 (mod ell+1) into i."""
        if not 0 <= i <= self.ell:
            raise ValueError(f"y-arrow index {i} out of range")
        return 2 * i + 2

    def xy_arrows_from(self, i: int) -> list[Arrow]:
        return [
            a
            for a in self.quiver.arrows
            if a.tail == i and a.idx > 2 * self.ell + 2
        ]

    def kind(self, idx: int) -> ArrowKind:
        return arrow_kind(self.quiver.arrow(idx).mon)

    def vertex_of_mckay(self, k: int) -> int | None:
        try:
            return self.iota.index(k)
        except ValueError:
            return None


def irreducible_sections(i: int, j: int, sq: SpecialQuiver) -> set[Mon]:
    """Monomials of the arrows from vertex i to vertex j."""
    rd = sq.rd
    chars = [rd.alpha(v) % rd.r for v in range(rd.ell + 1)]
    return {m for m, head in irreducible_sections_from(chars[i], chars, sq.group) if head == j}


def build_special_quiver(g: CyclicGroup, rd: ResolutionData | None = None) -> SpecialQuiver:
    """Construct the quiver of sections of the distinguished bundles.

    The arrows are computed as irreducible sections and then forced into
    the canonical numbering; any deviation from the expected head/tail and
    label pattern is a structural error, since that pattern is a theorem
    for these quivers.
    """
    if rd is None:
        rd = resolution_data(g)
    ell = rd.ell
    n_vert = ell + 1
    bundles = preferred_bundles(rd)
    chars = [rd.alpha(v) % rd.r for v in range(n_vert)]
    raw = sections_quiver(chars, bundles.chart_generators, g, rd)

    def fail(msg: str):
        raise ConsistencyError(f"special quiver structure for 1/{g.r}(1,{g.a}): {msg}")

    numbered: dict[int, Arrow] = {}
    xy_raw = []
    alpha = list(rd.alphas)
    beta = list(rd.betas)
    for a in raw:
        kind = arrow_kind(a.mon)
        if kind == "x":
            i = a.tail + 1
            if a.head != i % n_vert or a.mon != Mon(alpha[i] - alpha[i - 1], 0):
                fail(f"unexpected x-arrow {a}")
            numbered[2 * i - 1] = a
        elif kind == "y":
            i = (a.tail - 1) % n_vert
            if a.head != i or a.mon != Mon(0, beta[i] - beta[i + 1]):
                fail(f"unexpected y-arrow {a}")
            numbered[2 * i + 2] = a
        else:
            if a.head != 0:
                fail(f"mixed-label arrow {a} does not point at vertex 0")
            xy_raw.append(a)
    if sorted(numbered) != list(range(1, 2 * ell + 3)):
        fail(f"pure arrows occupy ids {sorted(numbered)}")
    xy_raw.sort(key=lambda a: (a.tail, a.mon.c, a.mon.b))
    for offset, a in enumerate(xy_raw):
        numbered[2 * ell + 3 + offset] = a

    arrows = []
    for idx in sorted(numbered):
        a = numbered[idx]
        cox = section_divisor(a.mon, a.tail, rd)
        if cox != a.cox:
            fail(f"divisor labels disagree on arrow {idx}: {cox} vs {a.cox}")
        arrows.append(Arrow(idx=idx, tail=a.tail, head=a.head, mon=a.mon, cox=cox))
    quiver = LabelledQuiver(n_vert, arrows)

    for i in range(1, n_vert):
        incoming = quiver.arrows_into(i)
        if len(incoming) != 2:
            fail(f"vertex {i} has {len(incoming)} incoming arrows")
    pure_x_into_0 = [a for a in quiver.arrows_into(0) if arrow_kind(a.mon) == "x"]
    pure_y_into_0 = [a for a in quiver.arrows_into(0) if arrow_kind(a.mon) == "y"]
    if ell >= 1 and ([a.tail for a in pure_x_into_0], [a.tail for a in pure_y_into_0]) != ([ell], [1]):
        fail("pure-power arrows into 0 are not the expected pair")
    if not quiver.is_connected():
        fail("quiver is not connected")

    iota = tuple(dual_character(c, g) for c in chars)
    if ell >= 1:
        expected = special_characters(g, rd)
        if iota[1:] != expected:
            fail(f"vertex characters {iota[1:]} do not match specials {expected}")
    return SpecialQuiver(group=g, rd=rd, quiver=quiver, iota=iota)


# ---------------------------------------------------------------------------
# lifting McKay paths


def lift_to_special(sq: SpecialQuiver, start: int, letters: str) -> Path:
    """Lift a McKay walk between marked vertices to a path in the quiver.

    The walk starts at the McKay vertex over ``start`` and is cut at every
    visit to a marked vertex; each segment must match exactly one arrow by
    tail, head and monomial.  Zero or several matches signal a bug, since
    segment monomials are irreducible with unique labels.
    """
    g = sq.group
    position = {k: v for v, k in enumerate(sq.iota)}
    by_key: dict[tuple[int, int, Mon], list[int]] = {}
    for a in sq.quiver.arrows:
        by_key.setdefault((a.tail, a.head, a.mon), []).append(a.idx)

    path: list[int] = []
    seg_from = start
    seg_b = seg_c = 0
    current = sq.iota[start]
    for letter in letters:
        current = mckay_step(current, letter, g)
        if letter == "x":
            seg_b += 1
        else:
            seg_c += 1
        if current in position:
            seg_to = position[current]
            key = (seg_from, seg_to, Mon(seg_b, seg_c))
            matches = by_key.get(key, [])
            if len(matches) != 1:
                raise ConsistencyError(
                    f"segment {key[2]}: {seg_from}->{seg_to} matches arrows {matches}"
                )
            path.append(matches[0])
            seg_from = seg_to
            seg_b = seg_c = 0
    if seg_b or seg_c:
        raise ValueError(f"walk does not end at a marked vertex (stopped at {current})")
    return tuple(path)


# ---------------------------------------------------------------------------
# primitive cycles and the distinguished relations

CycleCase = Literal["x", "y", "xy_x", "xy_y"]


@dataclass(frozen=True)
class PrimitiveCycle:
    path: Path
    base: int
    mon: Mon


@dataclass(frozen=True)
class DistinguishedRelation:
    arrow: int
    case: CycleCase
    lhs: Path  # the comparison cycle through the named arrow
    rhs: Path  # the primitive cycle it is equated with

    def paths(self) -> tuple[Path, Path]:
        return self.lhs, self.rhs


def primitive_cycle_for(sq: SpecialQuiver, arrow_id: int, case: CycleCase) -> DistinguishedRelation:
    """The relation attached to an arrow with nonzero tail.

    The comparison cycle prescribed by the case is matched with the lift
    of the unique McKay cycle carrying the same monomial but traversing
    its letter blocks in the opposite order.  The lifted cycle must be
    primitive (its monomial is a minimal invariant generator) and must
    avoid the arrows named by the case.
    """
    quiver = sq.quiver
    a = quiver.arrow(arrow_id)
    i = a.tail
    ell = sq.ell
    if i == 0:
        raise ValueError("relations are attached to arrows with nonzero tail")
    kind = arrow_kind(a.mon)

    if case == "x":
        if kind != "x" or arrow_id != sq.x_arrow(i + 1):
            raise ValueError(f"arrow {arrow_id} is not the x-arrow out of {i}")
        comparison = (arrow_id, sq.y_arrow(i))
        m = quiver.path_mon(comparison)
        letters = "y" * m.c + "x" * m.b
        forbidden = list(comparison)
    elif case == "y":
        if kind != "y" or arrow_id != sq.y_arrow(i - 1):
            raise ValueError(f"arrow {arrow_id} is not the y-arrow out of {i}")
        comparison = (arrow_id, sq.x_arrow(i))
        m = quiver.path_mon(comparison)
        letters = "x" * m.b + "y" * m.c
        forbidden = list(comparison)
    elif case == "xy_x":
        if kind != "xy":
            raise ValueError(f"arrow {arrow_id} is not a mixed arrow")
        comparison = (arrow_id,) + tuple(sq.x_arrow(k) for k in range(1, i + 1))
        m = quiver.path_mon(comparison)
        letters = "x" * m.b + "y" * m.c
        forbidden = list(comparison)
    elif case == "xy_y":
        if kind != "xy":
            raise ValueError(f"arrow {arrow_id} is not a mixed arrow")
        comparison = (arrow_id,) + tuple(sq.y_arrow(k) for k in range(ell, i - 1, -1))
        m = quiver.path_mon(comparison)
        letters = "y" * m.c + "x" * m.b
        forbidden = list(comparison)
    else:
        raise ValueError(f"unknown case {case!r}")

    quiver.check_path(comparison)
    if quiver.path_tail(comparison) != i or quiver.path_head(comparison) != i:
        raise ConsistencyError(f"comparison path for arrow {arrow_id} is not a cycle at {i}")
    if m not in set(invariant_generators(sq.group)):
        raise ConsistencyError(f"comparison monomial {m} is not a minimal invariant generator")

    lifted = lift_to_special(sq, i, letters)
    if quiver.path_tail(lifted) != i or quiver.path_head(lifted) != i:
        raise ConsistencyError(f"lifted cycle {lifted} is not based at {i}")
    if quiver.path_mon(lifted) != m:
        raise ConsistencyError(f"lifted cycle has monomial {quiver.path_mon(lifted)}, wanted {m}")
    overlap = set(forbidden) & set(lifted)
    if overlap:
        raise ConsistencyError(f"primitive cycle for arrow {arrow_id} reuses arrows {overlap}")
    return DistinguishedRelation(arrow=arrow_id, case=case, lhs=comparison, rhs=lifted)


@lru_cache(maxsize=None)
def distinguished_relations(sq: SpecialQuiver) -> tuple[DistinguishedRelation, ...]:
    """Every relation the case analysis yields, vertex by vertex.

    Mixed arrows contribute two relations each.  The degenerate one-vertex
    quiver has no nonzero vertices; its two loops commute, and that single
    exchange relation is returned instead.
    """
    if sq.ell == 0:
        return (DistinguishedRelation(arrow=1, case="x", lhs=(1, 2), rhs=(2, 1)),)
    out = []
    for i in range(1, sq.ell + 1):
        out.append(primitive_cycle_for(sq, sq.x_arrow(i + 1), "x"))
        out.append(primitive_cycle_for(sq, sq.y_arrow(i - 1), "y"))
        for a in sq.xy_arrows_from(i):
            out.append(primitive_cycle_for(sq, a.idx, "xy_x"))
            out.append(primitive_cycle_for(sq, a.idx, "xy_y"))
    return tuple(out)


@lru_cache(maxsize=None)
def lambda_relations(sq: SpecialQuiver) -> RelationSet:
    """The deduplicated relation family, as a relation set.

    Relations whose normalized binomials coincide are reported once, in
    the order first produced.
    """
    seen = set()
    kept = []
    for rel in distinguished_relations(sq):
        u = sq.quiver.path_exponents(rel.lhs)
        v = sq.quiver.path_exponents(rel.rhs)
        key = normalize_binomial(u, v)
        if key in seen:
            continue
        seen.add(key)
        kept.append(Relation(lhs=rel.lhs, rhs=rel.rhs))
    return RelationSet(sq.quiver, kept)


def path_monomials_by_bfs(sq: SpecialQuiver, start: int, max_degree: int) -> dict[int, set[Mon]]:
    """Monomials of all paths out of ``start`` of total degree <= max_degree.

    Layered by degree; every arrow has positive degree, so each layer only
    feeds strictly higher ones.  Inner loops run on plain int tuples.
    """
    reached: list[set[tuple[int, int]]] = [set() for _ in range(sq.ell + 1)]
    reached[start].add((0, 0))
    layers: dict[int, list[tuple[int, int, int]]] = {0: [(start, 0, 0)]}
    steps = [
        [(a.head, a.mon.b, a.mon.c) for a in sq.quiver.arrows_from(v)]
        for v in range(sq.ell + 1)
    ]
    for d in range(max_degree + 1):
        for v, b, c in layers.pop(d, ()):
            for head, db, dc in steps[v]:
                b2, c2 = b + db, c + dc
                if b2 + c2 > max_degree or (b2, c2) in reached[head]:
                    continue
                reached[head].add((b2, c2))
                layers.setdefault(b2 + c2, []).append((head, b2, c2))
    return {v: {Mon(b, c) for b, c in bucket} for v, bucket in enumerate(reached)}


def hom_monomials(i: int, j: int, max_degree: int, sq: SpecialQuiver) -> set[Mon]:
    """All monomials of the right weight for a map i -> j, up to max_degree."""
    rd = sq.rd
    target = (rd.alpha(j) - rd.alpha(i)) % rd.r
    out = set()
    for c in range(max_degree + 1):
        first = (target - sq.group.a * c) % rd.r
        for b in range(first, max_degree - c + 1, rd.r):
            out.add(Mon(b, c))
    return out
