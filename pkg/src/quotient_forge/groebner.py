"""A small Buchberger engine over exact rationals.

Polynomials are dicts mapping exponent tuples to nonzero Fractions.  The
ideals this package feeds in are generated by binomials with coefficients
1 and -1, which Buchberger preserves, so coefficient arithmetic stays
cheap; the engine itself is fully general and is also exercised on dense
polynomials in the tests.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Exps = tuple[int, ...]
Poly = dict[Exps, Fraction]


# ---------------------------------------------------------------------------
# monomial orders


def grevlex_key(e: Exps):
    return (sum(e), tuple(-x for x in reversed(e)))


class _Memo:
    """Per-instance key cache; exponent tuples repeat heavily."""

    def __init__(self):
        self._memo: dict = {}

    def key(self, e: Exps):
        k = self._memo.get(e)
        if k is None:
            k = self._memo[e] = self._key(e)
        return k


class Grevlex(_Memo):
    name = "grevlex"

    def _key(self, e: Exps):
        return grevlex_key(e)


class Lex(_Memo):
    name = "lex"

    def _key(self, e: Exps):
        return tuple(e)


class Block(_Memo):
    """Elimination order: the variables in ``front`` dominate the rest.

    Both blocks are compared by grevlex, so any monomial involving a front
    variable beats every front-free monomial.
    """

    def __init__(self, front: Iterable[int], nvars: int):
        super().__init__()
        self.front = tuple(sorted(front))
        self.back = tuple(i for i in range(nvars) if i not in set(self.front))
        self.name = f"block{self.front}"

    def _key(self, e: Exps):
        return (
            grevlex_key(tuple(e[i] for i in self.front)),
            grevlex_key(tuple(e[i] for i in self.back)),
        )


class GradedRevlexLast(_Memo):
    """Weighted grevlex in which one chosen variable is the cheapest.

    For ideals homogeneous under a strictly positive weight vector this
    order has the property that a leading term divisible by the cheap
    variable forces every term to be divisible by it, which is what makes
    saturation by that variable a matter of dividing out its content.
    """

    def __init__(self, weights: Sequence[int], last: int):
        super().__init__()
        if any(w <= 0 for w in weights):
            raise ValueError("weights must be strictly positive")
        self.weights = tuple(weights)
        self.last = last
        rest = [j for j in range(len(weights)) if j != last]
        self._sequence = (last, *reversed(rest))
        self.name = f"graded-revlex(last={last})"

    def _key(self, e: Exps):
        wdeg = sum(w * x for w, x in zip(self.weights, e))
        return (wdeg, tuple(-e[i] for i in self._sequence))


# ---------------------------------------------------------------------------
# polynomial arithmetic

ONE = Fraction(1)


def poly_from(terms: Iterable[tuple[Exps, Fraction | int]]) -> Poly:
    out: Poly = {}
    for e, c in terms:
        c = Fraction(c)
        acc = out.get(e, 0) + c
        if acc:
            out[e] = acc
        else:
            out.pop(e, None)
    return out


def binomial(u: Exps, v: Exps) -> Poly:
    return poly_from([(tuple(u), 1), (tuple(v), -1)])


def monomial(u: Exps) -> Poly:
    return {tuple(u): ONE}


def p_sub(f: Poly, g: Poly) -> Poly:
    out = dict(f)
    for e, c in g.items():
        acc = out.get(e, 0) - c
        if acc:
            out[e] = acc
        else:
            out.pop(e, None)
    return out


def term_mul(f: Poly, coeff: Fraction, shift: Exps) -> Poly:
    return {tuple(a + b for a, b in zip(e, shift)): c * coeff for e, c in f.items()}


def p_mul(f: Poly, g: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            acc = out.get(e, 0) + c1 * c2
            if acc:
                out[e] = acc
            else:
                out.pop(e, None)
    return out


def leading_term(f: Poly, order) -> tuple[Exps, Fraction]:
    e = max(f, key=order.key)
    return e, f[e]


def monic(f: Poly, order) -> Poly:
    if not f:
        return f
    _, c = leading_term(f, order)
    if c == 1:
        return f
    return {e: x / c for e, x in f.items()}


def _divides(e: Exps, m: Exps) -> bool:
    return all(a <= b for a, b in zip(e, m))


def normal_form(f: Poly, basis: Sequence[Poly], order, lts=None) -> Poly:
    """Full remainder of f on division by the basis (top reduction).

    ``lts`` may carry the precomputed leading terms of the basis; callers
    in hot loops pass it to avoid rescanning the divisors.
    """
    if lts is None:
        lts = [leading_term(g, order) for g in basis]
    remainder: Poly = {}
    work = dict(f)
    while work:
        e, c = leading_term(work, order)
        for g, (ge, gc) in zip(basis, lts):
            if _divides(ge, e):
                shift = tuple(a - b for a, b in zip(e, ge))
                work = p_sub(work, term_mul(g, c / gc, shift))
                break
        else:
            remainder[e] = c
            del work[e]
    return remainder


def s_polynomial(f: Poly, g: Poly, order) -> Poly:
    fe, fc = leading_term(f, order)
    ge, gc = leading_term(g, order)
    lcm = tuple(max(a, b) for a, b in zip(fe, ge))
    return p_sub(
        term_mul(f, 1 / fc, tuple(a - b for a, b in zip(lcm, fe))),
        term_mul(g, 1 / gc, tuple(a - b for a, b in zip(lcm, ge))),
    )


def buchberger(gens: Iterable[Poly], order) -> list[Poly]:
    """The reduced Groebner basis of the given generators.

    Normal pair selection (heap on the lcm of leading terms) with the
    coprimality and chain criteria; the result is monic, interreduced and
    sorted by leading term, so equal ideals with equal orders produce
    identical bases.
    """
    import heapq

    basis: list[Poly] = interreduce([f for f in gens if f], order)
    lts = [leading_term(g, order)[0] for g in basis]
    lt_pairs = [(e, basis[i][e]) for i, e in enumerate(lts)]

    def lcm(a: Exps, b: Exps) -> Exps:
        return tuple(max(x, y) for x, y in zip(a, b))

    heap: list = []
    alive = set()

    def push_pairs(k: int):
        for i in range(k):
            m = lcm(lts[i], lts[k])
            heapq.heappush(heap, (order.key(m), i, k, m))
            alive.add((i, k))

    for k in range(len(basis)):
        push_pairs(k)
    while heap:
        _, i, j, m = heapq.heappop(heap)
        if (i, j) not in alive:
            continue
        alive.discard((i, j))
        ei, ej = lts[i], lts[j]
        if all(a + b == c for a, b, c in zip(ei, ej, m)):
            continue  # coprime leading terms
        if any(
            k != i
            and k != j
            and _divides(lts[k], m)
            and (min(i, k), max(i, k)) not in alive
            and (min(j, k), max(j, k)) not in alive
            for k in range(len(basis))
        ):
            continue  # chain criterion
        s = normal_form(s_polynomial(basis[i], basis[j], order), basis, order, lt_pairs)
        if not s:
            continue
        basis.append(monic(s, order))
        lts.append(leading_term(basis[-1], order)[0])
        lt_pairs.append((lts[-1], basis[-1][lts[-1]]))
        push_pairs(len(basis) - 1)
    return interreduce(basis, order)


def interreduce(gens: Iterable[Poly], order) -> list[Poly]:
    """Reduce each generator against the others until nothing changes.

    Ideal-preserving for arbitrary input; on a Groebner basis it yields
    the reduced basis.  Output is monic and sorted by leading term.
    """
    work = [monic(f, order) for f in gens if f]
    changed = True
    while changed:
        changed = False
        pairs = [leading_term(f, order) if f else None for f in work]
        for i in range(len(work)):
            if not work[i]:
                continue
            others = [g for k, g in enumerate(work) if k != i and g]
            lts = [p for k, p in enumerate(pairs) if k != i and work[k]]
            r = normal_form(work[i], others, order, lts) if others else work[i]
            r = monic(r, order)
            if r != work[i]:
                work[i] = r
                pairs[i] = leading_term(r, order) if r else None
                changed = True
    out = [f for f in work if f]
    out.sort(key=lambda f: order.key(leading_term(f, order)[0]))
    return out


# ---------------------------------------------------------------------------
# ideal operations


def ideal_contains(basis: Sequence[Poly], f: Poly, order) -> bool:
    return not normal_form(f, basis, order)


def ideal_equal(gens_a: Iterable[Poly], gens_b: Iterable[Poly], nvars: int) -> bool:
    """Equality as ideals, by mutual normal-form reduction to zero."""
    order = Grevlex()
    ga = buchberger(list(gens_a), order)
    gb = buchberger(list(gens_b), order)
    return all(ideal_contains(gb, f, order) for f in ga) and all(
        ideal_contains(ga, f, order) for f in gb
    )


def _extend(f: Poly) -> Poly:
    return {e + (0,): c for e, c in f.items()}


def _project(basis: Sequence[Poly], order) -> list[Poly]:
    """Keep the elements free of the last variable, dropping it."""
    out = []
    for f in basis:
        if all(e[-1] == 0 for e in f):
            out.append({e[:-1]: c for e, c in f.items()})
    return interreduce(out, order)


def is_homogeneous(f: Poly, weights: Sequence[int]) -> bool:
    degrees = {sum(w * x for w, x in zip(weights, e)) for e in f}
    return len(degrees) <= 1


def saturate_variable_graded(gens: Sequence[Poly], i: int, weights: Sequence[int]) -> list[Poly]:
    """I : y_i^infinity for an ideal homogeneous under positive weights.

    With the cheap-variable order, a leading term divisible by y_i forces
    the whole element to be, so dividing every basis element by its y_i
    content realizes the saturation without an inverse variable.
    """
    for f in gens:
        if not is_homogeneous(f, weights):
            raise ValueError("graded saturation needs homogeneous generators")
    gb = buchberger(list(gens), GradedRevlexLast(weights, i))
    out = []
    for f in gb:
        content = min(e[i] for e in f)
        if content:
            f = {e[:i] + (e[i] - content,) + e[i + 1 :]: c for e, c in f.items()}
        out.append(f)
    return interreduce(out, Grevlex())


def saturate_monomial(
    gens: Iterable[Poly], m: Exps, nvars: int, weights: Sequence[int] | None = None
) -> list[Poly]:
    """I : m^infinity.

    Saturating at a monomial is the same as saturating at each variable of
    its support in turn.  With positive weights making every generator
    homogeneous the content shortcut applies; otherwise an inverse
    variable is adjoined and eliminated.
    """
    basis = [f for f in gens if f]
    if weights is not None and all(is_homogeneous(f, weights) for f in basis):
        for i, e in enumerate(m):
            if e:
                basis = saturate_variable_graded(basis, i, weights)
        return basis
    t = nvars
    extended = [_extend(f) for f in basis]
    extended.append(poly_from([(tuple(m) + (1,), 1), ((0,) * (nvars + 1), -1)]))
    gb = buchberger(extended, Block([t], nvars + 1))
    return _project(gb, Grevlex())


def saturate_variables(
    gens: Iterable[Poly], nvars: int, weights: Sequence[int] | None = None
) -> list[Poly]:
    """Successive saturation by every variable in turn.

    Equals saturation by the product of all the variables, one variable at
    a time.
    """
    basis = list(gens)
    for i in range(nvars):
        e = tuple(1 if j == i else 0 for j in range(nvars))
        basis = saturate_monomial(basis, e, nvars, weights=weights)
    return basis


def intersect(gens_a: Iterable[Poly], gens_b: Iterable[Poly], nvars: int) -> list[Poly]:
    """Ideal intersection via the single-parameter trick."""
    t = nvars
    one_minus_t = poly_from([((0,) * (nvars + 1), 1), (tuple([0] * nvars) + (1,), -1)])
    t_poly = monomial(tuple([0] * nvars) + (1,))
    mixed = [p_mul(t_poly, _extend(f)) for f in gens_a if f]
    mixed += [p_mul(one_minus_t, _extend(g)) for g in gens_b if g]
    gb = buchberger(mixed, Block([t], nvars + 1))
    return _project(gb, Grevlex())


def quotient_by_monomial(gens: Iterable[Poly], m: Exps, nvars: int) -> list[Poly]:
    """I : (y^m), as (I intersect (y^m)) divided by y^m."""
    inter = intersect(list(gens), [monomial(m)], nvars)
    out = []
    for f in inter:
        shifted = {}
        for e, c in f.items():
            assert _divides(m, e), (f, m)
            shifted[tuple(a - b for a, b in zip(e, m))] = c
        out.append(shifted)
    return interreduce(out, Grevlex())


def saturate_monomial_ideal(
    gens: Iterable[Poly], monomials: Sequence[Exps], nvars: int, weights: Sequence[int] | None = None
) -> list[Poly]:
    """I : B^infinity for a monomial ideal B, as the intersection of the
    saturations at each generator of B.

    Each saturation is brought to its canonical reduced basis first, so
    coinciding ones are intersected only once.
    """
    gens = list(gens)
    if not monomials:
        raise ValueError("saturating by the zero ideal")
    order = Grevlex()
    unique: list[list[Poly]] = []
    for m in monomials:
        sat = buchberger(saturate_monomial(gens, m, nvars, weights=weights), order)
        if not any(sat == seen for seen in unique):
            unique.append(sat)
    result = unique[0]
    for sat in unique[1:]:
        result = intersect(result, sat, nvars)
    return buchberger(result, Grevlex())


def eliminate(gens: Iterable[Poly], drop: Iterable[int], nvars: int) -> list[Poly]:
    """Generators of the elimination ideal with the ``drop`` variables removed.

    Exponent positions are preserved (dropped variables simply no longer
    occur), so the caller keeps a consistent indexing.
    """
    drop = set(drop)
    gb = buchberger(list(gens), Block(drop, nvars))
    return [f for f in gb if all(e[i] == 0 for e in f for i in drop)]
