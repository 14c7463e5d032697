"""Command-line front end.

Subcommands wrap one library operation each:

    normal    reduce an expression to normal form
    eq        decide equality of two expressions
    apply     apply a named morphism to an expression
    branch    branching law of a representation under an endomorphism
    restrict  restrict a representation of O_n to its gauge-invariant part
    gp        branching of the quasi-free pair GP(+)/GP(-)
    car       embed a fermion expression into O_2, or check the
              anticommutation relations
    mixture   print a mixture operator b_k and its O_2 image
    vacuum    verify the vacuum equations of a named fermion representation
    verify    recompute a stored reference table and diff it
    classify  recompute the endomorphism classification counts

Exit codes: 0 on success or a passing check, 1 on a failed check or
inequality, 2 on usage errors.  With --json every command prints a
single deterministic JSON document.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional

from .scalars import Scalar
from .words import primitive_split, render_word
from .algebra import CuntzPoly
from .morphisms import PermEndo, lookup_morphism
from .reps import (ChainRep, CycleRep, branch, decompose_power, gp_branch,
                   parse_rep, restrict_chain_to_uhf, restrict_cycle_to_uhf,
                   uhf_branch)
from .fermions import (CarExpr, mixture, psi_map, vacuum_check, verify_car,
                       verify_mixture_car)
from .tables import VERIFIERS, TableReport, classify_table, verify_theorem14
from .classify import theorem14_counts
from .exprs import ExprError, as_cuntz, parse_expr


def _emit_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _term_dump(poly: CuntzPoly) -> List[List[str]]:
    """Sorted exact term list [(J, K, scalar)] of a reduced polynomial."""
    poly = poly.reduce()
    items = sorted(poly.terms.items())
    return [[render_word(j), render_word(k), str(c)] for (j, k), c in items]


def _print_poly(poly: CuntzPoly, as_json: bool) -> None:
    poly = poly.reduce()
    if as_json:
        _emit_json({"n": poly.n, "terms": _term_dump(poly)})
    else:
        print(poly)


def _component_json(text: str) -> Dict[str, str]:
    return {"label": text}


def cmd_normal(args) -> int:
    value = parse_expr(args.expr, args.n)
    if isinstance(value, CarExpr) and not args.embed:
        if args.json:
            _emit_json({"car": str(value)})
        else:
            print(value)
        return 0
    _print_poly(as_cuntz(value, args.n), args.json)
    return 0


def cmd_eq(args) -> int:
    left = as_cuntz(parse_expr(args.left, args.n), args.n)
    right = as_cuntz(parse_expr(args.right, args.n), args.n)
    equal = left == right
    if args.json:
        _emit_json({"equal": equal})
    else:
        print("true" if equal else "false")
    return 0 if equal else 1


def cmd_apply(args) -> int:
    m = lookup_morphism(args.endo)
    value = as_cuntz(parse_expr(args.expr, args.n), args.n)
    if value.n != m.n:
        raise ValueError(f"expression lives in O_{value.n} but morphism "
                         f"{args.endo!r} acts on O_{m.n}")
    _print_poly(m(value), args.json)
    return 0


def _require_perm_endo(name: str) -> PermEndo:
    m = lookup_morphism(name)
    if not isinstance(m, PermEndo):
        raise ValueError(f"{name!r} is not a permutative endomorphism")
    return m


def cmd_branch(args) -> int:
    kind, *rest = parse_rep(args.rep, args.n)
    if kind == "gp":
        sign, is_uhf = rest
        return _gp_report(args.endo, sign, is_uhf, args.json)
    if args.endo is None:
        if kind != "cycle":
            raise ValueError("--endo is required for this representation")
        word, phase = rest
        if phase:
            raise ValueError("phased cycles are already irreducible")
        root, power = primitive_split(word)
        classes = decompose_power(root, power, args.n)
        labels = sorted(str(c) for c in classes)
        if args.json:
            _emit_json({"components": [_component_json(s) for s in labels]})
        else:
            print(" (+) ".join(labels))
        return 0
    endo = _require_perm_endo(args.endo)
    if kind == "cycle":
        word, phase = rest
        rep = CycleRep(args.n, word, phase)
        result = branch(rep, endo, seed_bound=args.seed_bound)
        labels = sorted(c.describe() for c in result.components)
    elif kind == "chain":
        rep = ChainRep(rest[0])
        result = branch(rep, endo, seed_bound=args.seed_bound)
        labels = sorted(c.describe() for c in result.components)
    elif kind == "uhf":
        comps = uhf_branch(args.n, rest[0], endo, seed_bound=args.seed_bound)
        labels = sorted(str(c) for c in comps[1])
    else:
        raise ValueError(f"cannot branch representation kind {kind!r}")
    if args.json:
        payload = {"components": [_component_json(s) for s in labels]}
        if args.seed_bound is not None:
            payload["seed_bound"] = args.seed_bound
        _emit_json(payload)
    else:
        print(" (+) ".join(labels))
    return 0


def _gp_report(endo_name: Optional[str], sign: str, is_uhf: bool,
               as_json: bool) -> int:
    if endo_name is None:
        raise ValueError("--endo is required for GP branching")
    m = lookup_morphism(endo_name)
    table = gp_branch(m)
    if table is None:
        if as_json:
            _emit_json({"derivable": False})
        else:
            print("not derivable")
        return 0
    labels = sorted(a.describe(uhf=is_uhf) for a in table[sign])
    if as_json:
        _emit_json({"derivable": True,
                    "components": [_component_json(s) for s in labels]})
    else:
        print(" (+) ".join(labels))
    return 0


def cmd_restrict(args) -> int:
    kind, *rest = parse_rep(args.rep, args.n)
    if kind == "cycle":
        word, phase = rest
        if phase:
            raise ValueError("restriction of phased cycles is not supported")
        labels = [str(c) for c in restrict_cycle_to_uhf(args.n, word)]
        if args.json:
            _emit_json({"components": [_component_json(s) for s in labels]})
        else:
            print(" (+) ".join(labels))
        return 0
    if kind == "chain":
        family = restrict_chain_to_uhf(rest[0])
        etas = list(range(args.eta_min, args.eta_max + 1))
        shifts = [str(ev) for ev in family.shifts(etas)]
        if args.json:
            _emit_json({"family": str(family),
                        "shifts": [{"eta": e, "label": s}
                                   for e, s in zip(etas, shifts)]})
        else:
            print(family)
            for e, s in zip(etas, shifts):
                print(f"  eta={e}: P[{s}]")
        return 0
    raise ValueError("restrict expects a cycle P(J) or a chain")


def cmd_gp(args) -> int:
    sign = "-" if args.minus else "+"
    return _gp_report(args.endo, sign, args.uhf, args.json)


def cmd_car(args) -> int:
    if args.check_modes is not None:
        ok = verify_car(args.check_modes)
        if args.json:
            _emit_json({"modes": args.check_modes, "ok": ok})
        else:
            print("pass" if ok else "FAIL")
        return 0 if ok else 1
    if args.expr is None:
        raise ValueError("give an expression or --check-modes")
    value = parse_expr(args.expr, 2)
    if isinstance(value, Scalar):
        value = CarExpr.from_scalar(value)
    if isinstance(value, CarExpr):
        value = psi_map(value)
    _print_poly(value, args.json)
    return 0


def cmd_mixture(args) -> int:
    k = Fraction(args.index)
    if args.check:
        step = Fraction(1)
        ks: List[Fraction] = []
        bound = abs(k)
        cur = Fraction(1, 2)
        while cur <= bound:
            ks.extend((cur, -cur))
            cur += step
        ok = verify_mixture_car(ks)
        if args.json:
            _emit_json({"indices": [str(x) for x in ks], "ok": ok})
        else:
            print("pass" if ok else "FAIL")
        return 0 if ok else 1
    b = mixture(k)
    if args.json:
        _emit_json({"index": str(k), "car": str(b),
                    "terms": _term_dump(psi_map(b))})
    else:
        print(b)
    return 0


def cmd_vacuum(args) -> int:
    ok = vacuum_check(args.rep, args.max_mode)
    if args.json:
        _emit_json({"rep": args.rep, "max_mode": args.max_mode, "ok": ok})
    else:
        print("pass" if ok else "FAIL")
    return 0 if ok else 1


def _report_json(report: TableReport) -> Dict:
    return {
        "name": report.name,
        "ok": report.ok,
        "mismatches": [
            {"row": c.row, "column": c.column,
             "expected": c.expected, "computed": c.computed}
            for c in report.cells if not c.ok
        ],
    }


def cmd_verify(args) -> int:
    names = sorted(VERIFIERS) if args.which == "all" else [args.which]
    reports: List[TableReport] = []
    for name in names:
        if name == "theorem14" and args.level is not None:
            reports.append(verify_theorem14(args.level))
        else:
            reports.append(classify_table(name))
    ok = all(r.ok for r in reports)
    if args.json:
        _emit_json({"ok": ok, "reports": [_report_json(r) for r in reports]})
    else:
        for r in reports:
            print(r if not r.ok else f"{r.name}: all cells verified")
    return 0 if ok else 1


def cmd_classify(args) -> int:
    level = args.level if args.level is not None else 5
    counts = theorem14_counts(level)
    if args.json:
        _emit_json({"level": level, "counts": counts})
    else:
        print(f"certified to level {level}")
        for key in sorted(counts):
            print(f"  {key}: {counts[key]}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuntzalg",
        description="Exact symbolic computation in the Cuntz algebra O_n, "
                    "its gauge-invariant subalgebra, and the embedded "
                    "fermion algebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n=True):
        p.add_argument("--json", action="store_true",
                       help="emit deterministic JSON")
        if n:
            p.add_argument("--n", type=int, default=2,
                           help="number of isometries (default 2)")

    p = sub.add_parser("normal", help="normal form of an expression")
    p.add_argument("expr")
    p.add_argument("--embed", action="store_true",
                   help="map fermion expressions into O_2")
    common(p)
    p.set_defaults(func=cmd_normal)

    p = sub.add_parser("eq", help="decide equality of two expressions")
    p.add_argument("left")
    p.add_argument("right")
    common(p)
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("apply", help="apply a morphism to an expression")
    p.add_argument("expr")
    p.add_argument("--endo", required=True,
                   help='morphism name, e.g. "psi:142", "alpha", '
                        '"psi:13 . alpha"')
    common(p)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("branch",
                       help="branching law of a representation")
    p.add_argument("--rep", required=True,
                   help='e.g. "P(12)", "P[12]", "2(12)^inf", "GP(+)", "fock"')
    p.add_argument("--endo", help="permutative endomorphism")
    p.add_argument("--seed-bound", type=int, default=None,
                   help="override the orbit-search seed bound")
    common(p)
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("restrict",
                       help="restrict to the gauge-invariant subalgebra")
    p.add_argument("--rep", required=True)
    p.add_argument("--eta-min", type=int, default=-4)
    p.add_argument("--eta-max", type=int, default=4)
    common(p)
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("gp", help="branching of GP(+) or GP(-)")
    p.add_argument("--endo", required=True)
    p.add_argument("--minus", action="store_true", help="use GP(-)")
    p.add_argument("--uhf", action="store_true",
                   help="report gauge-invariant components GP[+/-]")
    common(p, n=False)
    p.set_defaults(func=cmd_gp)

    p = sub.add_parser("car",
                       help="fermion expressions and anticommutation checks")
    p.add_argument("expr", nargs="?")
    p.add_argument("--check-modes", type=int, default=None,
                   help="verify the anticommutation relations for this "
                        "many modes")
    common(p, n=False)
    p.set_defaults(func=cmd_car)

    p = sub.add_parser("mixture", help="mixture operators b_k")
    p.add_argument("index", help="half-integer index, e.g. 1/2 or -3/2")
    p.add_argument("--check", action="store_true",
                   help="verify anticommutation relations for all "
                        "half-integers up to |index|")
    common(p, n=False)
    p.set_defaults(func=cmd_mixture)

    p = sub.add_parser("vacuum",
                       help="verify vacuum equations of a fermion rep")
    p.add_argument("rep", choices=["fock", "fock*", "iw", "iw*"])
    p.add_argument("--max-mode", type=int, default=7)
    common(p, n=False)
    p.set_defaults(func=cmd_vacuum)

    p = sub.add_parser("verify", help="recompute a reference table")
    p.add_argument("which", choices=sorted(VERIFIERS) + ["all"])
    p.add_argument("--level", type=int, default=None,
                   help="certification level for theorem14")
    common(p, n=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify",
                       help="recompute the classification counts")
    p.add_argument("--level", type=int, default=None)
    common(p, n=False)
    p.set_defaults(func=cmd_classify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    if argv and argv[0] == "mixture" and "--" not in argv:
        # allow negative indices like -3/2 without an explicit "--"
        rest = argv[1:]
        if any(a.startswith("-") and a[1:2].isdigit() for a in rest):
            flags = [a for a in rest if a.startswith("--")]
            positional = [a for a in rest if not a.startswith("--")]
            argv = ["mixture"] + flags + ["--"] + positional
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ExprError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
