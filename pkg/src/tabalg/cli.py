"""Command-line front end.

Subcommands mirror the library: generator sets, products, relation
counts, straightening, spectrum points, ideal membership, crystals,
insertion checks, and Gelfand-Tsetlin patterns.  JSON goes in via --in
or stdin; output is deterministic.  Exit status is 0 on success, 1 on a
domain error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .columns import generators
from .crystal import (
    build_crystal,
    embedding_violations,
    from_gt_pattern,
    graph_to_json,
    highest_weight_tableau,
    lowest_weight_tableau,
    to_dot,
    to_gt_pattern,
)
from .elements import crystal_ideal_member, eval_element
from .errors import RelationViolated, TableauxError
from .relations import minimal_relations, plucker_counts, sigma, straighten
from .serial import (
    element_from_obj,
    format_rational,
    generators_to_obj,
    gt_to_obj,
    gt_from_obj,
    matrix_from_obj,
    matrix_to_obj,
    point_from_obj,
    point_to_obj,
    relation_to_obj,
    tableau_from_obj,
    tableau_to_obj,
    word_from_obj,
)
from .spectra import (
    matrix_from_spectrum,
    open_contains,
    open_contains_matrix,
    spectrum_from_matrix,
)
from .tableaux import EMPTY, enumerate_tableaux, star, try_divide


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _read_json(args):
    if getattr(args, "infile", None):
        try:
            with open(args.infile) as fh:
                return json.load(fh)
        except OSError as exc:
            raise ValueError(f"cannot read {args.infile}: {exc}") from exc
    return json.load(sys.stdin)


def _parse_shape(text: str):
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad shape {text!r}; expected a comma list like 2,1") from exc
    return parts


def _fmt_column(col) -> str:
    return "[" + ",".join(str(e) for e in col) + "]"


def _fmt_relation(rel) -> str:
    (a, b), (c, d) = rel.lhs, rel.rhs
    return f"{_fmt_column(a)} * {_fmt_column(b)} = {_fmt_column(c)} * {_fmt_column(d)}"


def _cmd_gens(args) -> int:
    gens = generators(args.n, args.m)
    if args.json:
        _emit(generators_to_obj(gens))
        return 0
    free = set(gens.f_part)
    for idx, col in enumerate(gens.columns):
        flag = " F" if idx in free else ""
        print(f"{_fmt_column(col)}{flag}")
    print(f"dimension {gens.krull_dimension}")
    return 0


def _cmd_star(args) -> int:
    obj = _read_json(args)
    if not isinstance(obj, list):
        raise ValueError("expected a list of tableaux")
    result = EMPTY
    for item in obj:
        result = star(result, tableau_from_obj(item, args.n, args.m), args.n)
    if args.json:
        _emit(tableau_to_obj(result))
    else:
        print(result)
    return 0


def _cmd_sigma(args) -> int:
    print(sigma(args.n, args.m, args.method))
    return 0


def _cmd_relations(args) -> int:
    rels = minimal_relations(args.n, args.m)
    if args.json:
        _emit([relation_to_obj(rel) for rel in rels])
    else:
        for rel in rels:
            print(_fmt_relation(rel))
        print(f"count {len(rels)}")
    return 0


def _cmd_plucker(args) -> int:
    counts = plucker_counts(args.n, args.m)
    if args.json:
        _emit(
            {
                "grassmann": list(counts.grassmann),
                "incidence": counts.incidence,
                "total": counts.total,
            }
        )
    else:
        print("grassmann " + " ".join(str(g) for g in counts.grassmann))
        print(f"incidence {counts.incidence}")
        print(f"total {counts.total}")
    return 0


def _cmd_straighten(args) -> int:
    word = word_from_obj(_read_json(args), args.n, args.m)
    rng = random.Random(args.seed) if args.seed is not None else None
    result = straighten(word, args.n, args.m, rng)
    if args.json:
        _emit(tableau_to_obj(result))
    else:
        print(result)
    return 0


def _cmd_psi(args) -> int:
    alpha = matrix_from_obj(_read_json(args), args.n, args.m)
    _emit(point_to_obj(spectrum_from_matrix(alpha, args.n, args.m)))
    return 0


def _cmd_psi_preimage(args) -> int:
    point = point_from_obj(_read_json(args), args.n, args.m)
    _emit(matrix_to_obj(matrix_from_spectrum(point)))
    return 0


def _cmd_variety_check(args) -> int:
    obj = _read_json(args)
    try:
        point_from_obj(obj, args.n, args.m)
    except RelationViolated as exc:
        print(f"invalid: {_fmt_relation(exc.relation)}")
        return 1
    print("valid")
    return 0


def _cmd_open_member(args) -> int:
    obj = _read_json(args)
    if not isinstance(obj, dict) or "element" not in obj:
        raise ValueError('expected an object with an "element" field')
    f = element_from_obj(obj["element"], args.n, args.m)
    if ("point" in obj) == ("alpha" in obj):
        raise ValueError('supply exactly one of "point" or "alpha"')
    if "point" in obj:
        member = open_contains(f, point_from_obj(obj["point"], args.n, args.m))
    else:
        alpha = matrix_from_obj({"alpha": obj["alpha"]}, args.n, args.m)
        member = open_contains_matrix(f, alpha, args.n, args.m)
    print("true" if member else "false")
    return 0


def _cmd_eval(args) -> int:
    obj = _read_json(args)
    if not isinstance(obj, dict) or "element" not in obj or "point" not in obj:
        raise ValueError('expected an object with "element" and "point" fields')
    f = element_from_obj(obj["element"], args.n, args.m)
    point = point_from_obj(obj["point"], args.n, args.m)
    print(format_rational(eval_element(f, point)))
    return 0


def _cmd_ideal_member(args) -> int:
    shape = _parse_shape(args.shape)
    f = element_from_obj(_read_json(args), args.n, args.m)
    print("true" if crystal_ideal_member(f, shape, args.n, args.m) else "false")
    return 0


def _cmd_divide(args) -> int:
    obj = _read_json(args)
    if not isinstance(obj, dict) or "dividend" not in obj or "divisor" not in obj:
        raise ValueError('expected an object with "dividend" and "divisor" fields')
    t = tableau_from_obj(obj["dividend"], args.n, args.m)
    s = tableau_from_obj(obj["divisor"], args.n, args.m)
    quotient = try_divide(t, s)
    if args.json:
        _emit({"quotient": None if quotient is None else tableau_to_obj(quotient)})
    else:
        print("none" if quotient is None else quotient)
    return 0


def _cmd_crystal(args) -> int:
    shape = _parse_shape(args.shape)
    graph = build_crystal(shape, args.n)
    if args.dot:
        print(to_dot(graph))
    elif args.json:
        _emit(graph_to_json(graph))
    else:
        print(f"vertices {len(graph)}")
        print(f"edges {len(graph.f_edges)}")
        print("source " + (str(graph.source).replace("\n", " | ")))
        print("sink " + (str(graph.sink).replace("\n", " | ")))
    return 0


def _cmd_embed_check(args) -> int:
    lam = _parse_shape(args.lam)
    mu = _parse_shape(args.mu)
    if args.mode == "generic":
        fixed_list = list(enumerate_tableaux(mu, args.n))
        results = [(t, embedding_violations(t, lam, args.n)) for t in sorted(fixed_list)]
        commuting = sum(1 for _, v in results if not v)
        if args.json:
            _emit(
                {
                    "checked": len(results),
                    "commuting": commuting,
                    "noncommuting": len(results) - commuting,
                }
            )
        else:
            print(f"checked {len(results)}")
            print(f"commuting {commuting}")
            print(f"noncommuting {len(results) - commuting}")
        return 0
    if args.mode == "highest":
        fixed = highest_weight_tableau(mu, args.n)
    else:
        fixed = lowest_weight_tableau(mu, args.n)
    violations = embedding_violations(fixed, lam, args.n)
    if args.json:
        _emit(
            {
                "fixed": tableau_to_obj(fixed),
                "violations": [
                    {"vertex": tableau_to_obj(v), "color": i, "op": op}
                    for v, i, op in violations
                ],
            }
        )
    else:
        print("fixed " + (str(fixed).replace("\n", " | ")))
        print(f"violations {len(violations)}")
    return 0 if not violations else 1


def _cmd_gt(args) -> int:
    obj = _read_json(args)
    if args.inverse:
        tableau = from_gt_pattern(gt_from_obj(obj))
        if args.json:
            _emit(tableau_to_obj(tableau))
        else:
            print(tableau)
    else:
        pattern = to_gt_pattern(tableau_from_obj(obj, args.n, args.n), args.n)
        if args.json:
            _emit(gt_to_obj(pattern))
        else:
            for row in pattern:
                print(" ".join(str(v) for v in row))
    return 0


def _add_bounds(sub, with_m: bool = True) -> None:
    sub.add_argument("n", type=int, help="row bound")
    if with_m:
        sub.add_argument("m", type=int, help="entry bound")


def _add_infile(sub) -> None:
    sub.add_argument("--in", dest="infile", metavar="FILE", help="JSON input file (default: stdin)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tabalg",
        description="Exact computations in the star-product algebra of semistandard Young tableaux.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("gens", help="list the column generators")
    _add_bounds(sub)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(handler=_cmd_gens)

    sub = subs.add_parser("star", help="multiply a list of tableaux")
    sub.add_argument("--n", type=int, default=None)
    sub.add_argument("--m", type=int, default=None)
    sub.add_argument("--json", action="store_true")
    _add_infile(sub)
    sub.set_defaults(handler=_cmd_star)

    sub = subs.add_parser("sigma", help="count the minimal relations")
    _add_bounds(sub)
    sub.add_argument(
        "--method",
        choices=["double_sum", "closed", "brute"],
        default="double_sum",
    )
    sub.set_defaults(handler=_cmd_sigma)

    sub = subs.add_parser("relations", help="list the minimal relations")
    _add_bounds(sub)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(handler=_cmd_relations)

    sub = subs.add_parser("plucker-counts", help="split the relation count by height")
    _add_bounds(sub)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(handler=_cmd_plucker)

    sub = subs.add_parser("straighten", help="rewrite a column word into a tableau")
    _add_bounds(sub)
    sub.add_argument("--seed", type=int, default=None, help="randomize the rewrite order")
    sub.add_argument("--json", action="store_true")
    _add_infile(sub)
    sub.set_defaults(handler=_cmd_straighten)

    sub = subs.add_parser("psi", help="coordinates induced by an evaluation matrix")
    _add_bounds(sub)
    _add_infile(sub)
    sub.set_defaults(handler=_cmd_psi)

    sub = subs.add_parser("psi-preimage", help="lift an ordinary point to a matrix")
    _add_bounds(sub)
    _add_infile(sub)
    sub.set_defaults(handler=_cmd_psi_preimage)

    sub = subs.add_parser("variety-check", help="test coordinates against the relations")
    _add_bounds(sub)
    _add_infile(sub)
    sub.set_defaults(handler=_cmd_variety_check)

    sub = subs.add_parser("open-member", help="test a basic open set for membership")
    _add_bounds(sub)
    _add_infile(sub)
    sub.set_defaults(handler=_cmd_open_member)

    sub = subs.add_parser("eval", help="evaluate an element at a point")
    _add_bounds(sub)
    _add_infile(sub)
    sub.set_defaults(handler=_cmd_eval)

    sub = subs.add_parser("ideal-member", help="crystal ideal membership")
    _add_bounds(sub)
    sub.add_argument("--shape", required=True, help="partition as a comma list, like 1,1")
    _add_infile(sub)
    sub.set_defaults(handler=_cmd_ideal_member)

    sub = subs.add_parser("divide", help="divide one tableau by another")
    sub.add_argument("--n", type=int, default=None)
    sub.add_argument("--m", type=int, default=None)
    sub.add_argument("--json", action="store_true")
    _add_infile(sub)
    sub.set_defaults(handler=_cmd_divide)

    sub = subs.add_parser("crystal", help="build a crystal graph")
    _add_bounds(sub, with_m=False)
    sub.add_argument("shape", help="partition as a comma list, like 2,1")
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--dot", action="store_true")
    group.add_argument("--json", action="store_true")
    sub.set_defaults(handler=_cmd_crystal)

    sub = subs.add_parser("embed-check", help="check multiplication maps on crystals")
    _add_bounds(sub, with_m=False)
    sub.add_argument("lam", help="domain shape, comma list")
    sub.add_argument("mu", help="shape of the fixed factor, comma list")
    sub.add_argument("--mode", choices=["highest", "lowest", "generic"], default="highest")
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(handler=_cmd_embed_check)

    sub = subs.add_parser("gt", help="convert to or from a Gelfand-Tsetlin pattern")
    _add_bounds(sub, with_m=False)
    sub.add_argument("--inverse", action="store_true", help="pattern to tableau")
    sub.add_argument("--json", action="store_true")
    _add_infile(sub)
    sub.set_defaults(handler=_cmd_gt)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except TableauxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
