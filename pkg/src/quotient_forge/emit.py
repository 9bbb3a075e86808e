"""Emitters: JSON payloads, DOT graphs, computer-algebra text, plain text.

All emitters are deterministic: orderings are pinned everywhere, so equal
inputs give byte-identical output.  Integers above 2^53 - 1 are encoded as
decimal strings in JSON so that consumers with double-precision parsers
survive; ``parse_json`` undoes exactly that encoding.
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from .cyclic import CyclicGroup, Mon, ResolutionData, riemenschneider_inequalities
from .ideals import BinomialIdeal, MonomialIdeal
from .quivers import LabelledQuiver
from .special import SpecialQuiver, arrow_kind
from .verify import SweepReport, VerifyReport

_SAFE_INT = 2**53 - 1


def _encode(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value if abs(value) <= _SAFE_INT else str(value)
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {str(k): _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    raise TypeError(f"cannot encode {type(value).__name__}")


def _decode(value: Any) -> Any:
    if isinstance(value, str):
        stripped = value.lstrip("-")
        if stripped.isdigit() and abs(int(value)) > _SAFE_INT:
            return int(value)
        return value
    if isinstance(value, dict):
        return {k: _decode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_decode(v) for v in value]
    return value


def to_json(payload: dict) -> str:
    return json.dumps(_encode(payload), indent=2, sort_keys=True) + "\n"


def parse_json(text: str) -> dict:
    return _decode(json.loads(text))


# ---------------------------------------------------------------------------
# payload builders


def group_payload(g: CyclicGroup) -> dict:
    return {"r": g.r, "a": g.a}


def mon_payload(m: Mon) -> dict:
    return {"x": m.b, "y": m.c}


def resolution_payload(rd: ResolutionData) -> dict:
    return {
        "ell": rd.ell,
        "pairs": [[b, a] for b, a in rd.pairs],
        "coeffs": list(rd.coeffs),
        "self_intersections": [-c for c in rd.coeffs],
        "charts": [
            {"index": j, "dual_generators": [[rd.alpha(j + 1), -rd.beta(j + 1)], [-rd.alpha(j), rd.beta(j)]]}
            for j in range(rd.ell + 1)
        ],
        "gap_report": [
            {
                "i": q.i,
                "m": q.m,
                "alpha_lhs": q.alpha_lhs,
                "alpha_rhs": q.alpha_rhs,
                "alpha_strict": q.alpha_strict,
                "beta_lhs": q.beta_lhs,
                "beta_rhs": q.beta_rhs,
                "beta_strict": q.beta_strict,
            }
            for q in riemenschneider_inequalities(rd)
        ],
    }


def quiver_payload(q: LabelledQuiver, kinds: bool = False) -> dict:
    arrows = []
    for a in q.arrows:
        entry = {
            "id": a.idx,
            "tail": a.tail,
            "head": a.head,
            "mon": mon_payload(a.mon),
        }
        if a.cox is not None:
            entry["cox"] = list(a.cox)
        if kinds:
            entry["kind"] = arrow_kind(a.mon)
        arrows.append(entry)
    return {"vertices": q.vertex_count, "arrows": arrows, "root": 0}


def binomials_payload(ideal: BinomialIdeal) -> list:
    return [[list(u), list(v)] for u, v in ideal.sorted_gens()]


def monomials_payload(ideal: MonomialIdeal) -> list:
    return [list(m) for m in ideal.sorted_gens()]


def report_payload(rep: VerifyReport) -> dict:
    return {
        "group": group_payload(rep.group),
        "ok": rep.ok,
        "claims": [
            {"name": c.name, "ok": c.ok, "detail": c.detail} for c in rep.claims
        ],
    }


def sweep_payload(rep: SweepReport) -> dict:
    return {
        "max_r": rep.max_r,
        "smoke_max_r": rep.smoke_max_r,
        "ok": rep.ok,
        "groups": [report_payload(r) for r in rep.reports],
    }


# ---------------------------------------------------------------------------
# DOT


def to_dot(q: LabelledQuiver, name: str = "quiver") -> str:
    lines = [f"digraph {name} {{"]
    lines.append("  rankdir=LR;")
    for v in range(q.vertex_count):
        shape = "doublecircle" if v == 0 else "circle"
        lines.append(f'  v{v} [label="{v}", shape={shape}];')
    for a in q.arrows:
        label = f"a{a.idx}: {a.mon}"
        if a.cox is not None:
            label += f" | {cox_str(a.cox)}"
        lines.append(f'  v{a.tail} -> v{a.head} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cox_str(cox: Sequence[int]) -> str:
    if not any(cox):
        return "1"
    parts = []
    for k, e in enumerate(cox):
        if e == 1:
            parts.append(f"x{k}")
        elif e:
            parts.append(f"x{k}^{e}")
    return "".join(parts)


# ---------------------------------------------------------------------------
# computer-algebra text


def var_monomial_str(exps: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(f"y{i + 1}")
        elif e:
            parts.append(f"y{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def binomial_str(pair) -> str:
    u, v = pair
    return f"{var_monomial_str(u)}-{var_monomial_str(v)}"


def to_cas(
    num_vars: int,
    *,
    weight_rows: list[list[int]] | None = None,
    toric: BinomialIdeal | None = None,
    relations: BinomialIdeal | None = None,
    irrelevant: MonomialIdeal | None = None,
) -> str:
    """A session fragment in computer-algebra syntax for external replay."""
    lines = [f"R = QQ[y1..y{num_vars}];"]
    if weight_rows is not None:
        rows = ", ".join("{" + ", ".join(str(x) for x in row) + "}" for row in weight_rows)
        lines.append(f"W = matrix{{{rows}}};")
    if toric is not None:
        gens = ", ".join(binomial_str(p) for p in toric.sorted_gens()) or "0_R"
        lines.append(f"IQ = ideal({gens});")
    if relations is not None:
        gens = ", ".join(binomial_str(p) for p in relations.sorted_gens()) or "0_R"
        lines.append(f"J = ideal({gens});")
    if irrelevant is not None:
        gens = ", ".join(var_monomial_str(m) for m in irrelevant.sorted_gens()) or "1_R"
        lines.append(f"BQ = ideal({gens});")
    if toric is not None and relations is not None and irrelevant is not None:
        lines.append("assert(saturate(J, BQ) == saturate(IQ, BQ));")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# plain text


def resolution_text(g: CyclicGroup, rd: ResolutionData) -> str:
    lines = [f"action 1/{g.r}(1,{g.a})"]
    lines.append(f"exceptional curves: {rd.ell}")
    lines.append("ray pairs (beta, alpha): " + " ".join(f"({b},{a})" for b, a in rd.pairs))
    if rd.coeffs:
        lines.append("self-intersections: " + " ".join(f"-{c}" for c in rd.coeffs))
    for j in range(rd.ell + 1):
        (p1, q1), (p2, q2) = (
            (rd.alpha(j + 1), -rd.beta(j + 1)),
            (-rd.alpha(j), rd.beta(j)),
        )
        lines.append(f"chart {j}: x^{p1} y^{q1} and x^{p2} y^{q2}")
    return "\n".join(lines) + "\n"


def quiver_text(sq: SpecialQuiver) -> str:
    lines = [
        f"special quiver for 1/{sq.group.r}(1,{sq.group.a}): "
        f"{sq.quiver.vertex_count} vertices, {sq.n_arrows} arrows"
    ]
    for a in sq.quiver.arrows:
        lines.append(
            f"  a{a.idx}: {a.tail} -> {a.head}  mon {a.mon}  "
            f"cox {cox_str(a.cox)}  [{arrow_kind(a.mon)}]"
        )
    return "\n".join(lines) + "\n"


def report_text(rep: VerifyReport) -> str:
    lines = [f"verification of 1/{rep.group.r}(1,{rep.group.a})"]
    for c in rep.claims:
        status = "pass" if c.ok else ("SKIP" if c.ok is None else "FAIL")
        suffix = f"  ({c.detail})" if c.detail else ""
        lines.append(f"  [{status}] {c.name}{suffix}")
    lines.append("overall: " + ("pass" if rep.ok else "FAIL"))
    return "\n".join(lines) + "\n"


def sweep_text(rep: SweepReport) -> str:
    lines = [
        f"sweep: full checks to r={rep.max_r}, structural smoke to r={rep.smoke_max_r}"
    ]
    fails = rep.failures()
    for group_rep in rep.reports:
        mark = "pass" if group_rep.ok else "FAIL"
        lines.append(
            f"  1/{group_rep.group.r}(1,{group_rep.group.a}): {mark} "
            f"({sum(1 for c in group_rep.claims if c.ok)} claims)"
        )
    lines.append(f"overall: {'pass' if rep.ok else f'FAIL ({len(fails)} claims)'}")
    return "\n".join(lines) + "\n"
