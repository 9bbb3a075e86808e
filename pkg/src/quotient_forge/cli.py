"""Command-line surface.

Exit codes: 0 on success, 1 when a requested verification claim fails
(the report is still emitted), 2 on invalid input.
"""

from __future__ import annotations

import argparse
import sys

from . import emit
from .cyclic import InvalidGroupError, invariant_generators, resolution_data, validate_group
from .ideals import BinomialIdeal, irrelevant_ideal, spanning_trees, toric_ideal, weight_matrix
from .mckay import build_mckay, special_characters
from .special import build_special_quiver, lambda_relations
from .verify import k_theory_shadow, main_theorem_check, sweep


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quotient-forge",
        description="Toric and quiver data for cyclic quotient surface singularities 1/r(1,a)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats):
        p.add_argument("--r", type=int, required=True, help="group order")
        p.add_argument("--a", type=int, required=True, help="action weight")
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    common(sub.add_parser("resolve", help="resolution rays and chart data"), ["text", "json"])
    common(sub.add_parser("invariants", help="minimal invariant generators"), ["text", "json"])
    common(sub.add_parser("mckay", help="the McKay quiver"), ["text", "json", "dot"])
    common(sub.add_parser("specials", help="the special characters"), ["text", "json"])
    common(sub.add_parser("quiver", help="the special quiver with labels"), ["text", "json", "dot"])
    common(sub.add_parser("ideals", help="toric, relation and irrelevant ideals"), ["text", "json", "cas"])
    p = sub.add_parser("verify", help="run the per-group verification bundle")
    common(p, ["text", "json"])
    p = sub.add_parser("sweep", help="verify every action up to a bound")
    p.add_argument("--max", type=int, required=True, metavar="R", help="largest group order")
    p.add_argument("--smoke-max", type=int, default=None, metavar="R", help="structural checks up to here")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled properties")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", metavar="PATH")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0

    if args.command == "sweep":
        if args.max < 2:
            print("sweep bound must be at least 2", file=sys.stderr)
            return 2
        report = sweep(args.max, smoke_max_r=args.smoke_max, seed=args.seed)
        if args.format == "json":
            _emit(emit.to_json(emit.sweep_payload(report)), args.out)
        else:
            _emit(emit.sweep_text(report), args.out)
        return 0 if report.ok else 1

    try:
        group = validate_group(args.r, args.a)
    except InvalidGroupError as exc:
        print(f"invalid group: {exc}", file=sys.stderr)
        return 2
    rd = resolution_data(group)

    if args.command == "resolve":
        if args.format == "json":
            payload = {"group": emit.group_payload(group), "resolution": emit.resolution_payload(rd)}
            _emit(emit.to_json(payload), args.out)
        else:
            _emit(emit.resolution_text(group, rd), args.out)
        return 0

    if args.command == "invariants":
        gens = invariant_generators(group)
        if args.format == "json":
            payload = {
                "group": emit.group_payload(group),
                "invariant_generators": [emit.mon_payload(m) for m in gens],
            }
            _emit(emit.to_json(payload), args.out)
        else:
            _emit(" ".join(str(m) for m in gens) + "\n", args.out)
        return 0

    if args.command == "mckay":
        quiver, relations = build_mckay(group, rd)
        if args.format == "dot":
            _emit(emit.to_dot(quiver, name="mckay"), args.out)
        elif args.format == "json":
            payload = {
                "group": emit.group_payload(group),
                "quiver": emit.quiver_payload(quiver),
                "relations": [[list(rel.lhs), list(rel.rhs)] for rel in relations.relations],
            }
            _emit(emit.to_json(payload), args.out)
        else:
            lines = [f"McKay quiver: {quiver.vertex_count} vertices, {len(quiver.arrows)} arrows"]
            for a in quiver.arrows:
                lines.append(f"  a{a.idx}: {a.tail} -> {a.head}  mon {a.mon}  cox {emit.cox_str(a.cox)}")
            _emit("\n".join(lines) + "\n", args.out)
        return 0

    if args.command == "specials":
        specials = special_characters(group, rd)
        duals = [(group.r - s) % group.r for s in specials]
        if args.format == "json":
            payload = {
                "group": emit.group_payload(group),
                "special_vertices": list(specials),
                "section_weights": duals,
            }
            _emit(emit.to_json(payload), args.out)
        else:
            named = " ".join(f"dual({d})" for d in duals) or "(none)"
            _emit(f"special characters: {named}\n", args.out)
        return 0

    sq = build_special_quiver(group, rd)

    if args.command == "quiver":
        if args.format == "dot":
            _emit(emit.to_dot(sq.quiver, name="special"), args.out)
        elif args.format == "json":
            payload = {
                "group": emit.group_payload(group),
                "resolution": emit.resolution_payload(rd),
                "quiver": emit.quiver_payload(sq.quiver, kinds=True),
            }
            _emit(emit.to_json(payload), args.out)
        else:
            _emit(emit.quiver_text(sq), args.out)
        return 0

    if args.command == "ideals":
        matrix = weight_matrix(sq.quiver)
        iq = toric_ideal(matrix)
        relations = BinomialIdeal.from_pairs(sq.n_arrows, lambda_relations(sq).binomials())
        bq = irrelevant_ideal(sq.quiver, spanning_trees(sq.quiver))
        if args.format == "cas":
            _emit(
                emit.to_cas(
                    sq.n_arrows,
                    weight_rows=matrix,
                    toric=iq,
                    relations=relations,
                    irrelevant=bq,
                ),
                args.out,
            )
        elif args.format == "json":
            payload = {
                "group": emit.group_payload(group),
                "ideals": {
                    "variables": sq.n_arrows,
                    "weight_matrix": matrix,
                    "toric": emit.binomials_payload(iq),
                    "relations": emit.binomials_payload(relations),
                    "irrelevant": emit.monomials_payload(bq),
                },
            }
            _emit(emit.to_json(payload), args.out)
        else:
            lines = [f"variables: y1..y{sq.n_arrows}"]
            lines.append("toric ideal: " + ", ".join(emit.binomial_str(p) for p in iq.sorted_gens()))
            lines.append(
                "relation ideal: " + ", ".join(emit.binomial_str(p) for p in relations.sorted_gens())
            )
            lines.append(
                "irrelevant ideal: " + ", ".join(emit.var_monomial_str(m) for m in bq.sorted_gens())
            )
            _emit("\n".join(lines) + "\n", args.out)
        return 0

    if args.command == "verify":
        report = main_theorem_check(group)
        shadow = k_theory_shadow(group, rd)
        report.claims.extend(shadow.claims)
        if args.format == "json":
            payload = {"group": emit.group_payload(group), "report": emit.report_payload(report)}
            _emit(emit.to_json(payload), args.out)
        else:
            _emit(emit.report_text(report), args.out)
        return 0 if report.ok else 1

    return 2


def main() -> None:
    sys.exit(run())
