"""Command-line entry point: ``equivar <module> <command> [options]``.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on bad input.
With ``--json`` a single JSON document (``"schema": 1``) goes to stdout.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from .abelian import AbelianGroupError
from .burnside import (BurnsideElement, burnside_multiply, compose_spans, random_gset, random_span,
                       spans_isomorphic, table_of_marks, weyl_orders, Span)
from .category import CategoryError, validate_category
from .ffield import FieldError, norm_form_space, normal_basis_element, tensor_decompose
from .galois_k import build_model, compare_fixed_points, descent_e2, verify_model
from .gset import GSetError, coset_gset, gset_from_json, orbits_decompose, pullback, to_point
from .mackey import MackeyError, MackeyFunctor, burnside_mackey, check_mackey, fixed_point_mackey, \
    green_check, permutation_matrices
from .orbital import check_category, parse_builtin
from .perm import (GroupSizeError, as_subgroup, builtin_group, double_cosets, group_from_json,
                   normalizer, subgroup_classes)

SCHEMA = 1


class InputError(Exception):
    pass


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _group(name: str):
    """A builtin name or a path to a JSON group description."""
    if name.endswith(".json"):
        return group_from_json(_load_json(name))
    return builtin_group(name)


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


# -- commands ---------------------------------------------------------------------------
# Each returns (passed, report dict).

def cmd_group_info(args):
    G = as_subgroup(_group(args.group))
    T = subgroup_classes(G)
    rows = [{"class": i, "label": T.label(i), "order": R.order,
             "class_size": len(T.classes[i]),
             "weyl_order": normalizer(R, G).order // R.order,
             "generators": [list(g.images) for g in R.generators]} for i, R in enumerate(T)]
    return True, {"order": G.order, "degree": G.parent.degree, "subgroups": len(T.all_subgroups),
                  "classes": rows}


def cmd_group_dcosets(args):
    G = as_subgroup(_group(args.group))
    T = subgroup_classes(G)
    L, K = T[args.left], T[args.right]
    dc = double_cosets(L, K, G)
    return True, {"left": T.label(args.left), "right": T.label(args.right), "count": len(dc.reps),
                  "representatives": [list(x.images) for x in dc.reps],
                  "sizes": dc.sizes(),
                  "intersection_classes": [T.label(T.index(a)) for a, _ in dc.intersections]}


def cmd_gset_orbits(args):
    X = gset_from_json(_load_json(args.file))
    T = subgroup_classes(X.group)
    orbs = orbits_decompose(X)
    return True, {"size": X.size, "orbits": [
        {"points": list(o.points), "stabilizer_class": T.label(T.index(o.stabilizer))} for o in orbs.orbits]}


def cmd_gset_pullback(args):
    """Orbits of ``G/H x_{pt} G/K`` against the double coset prediction, for all class pairs."""
    G = as_subgroup(_group(args.group))
    T = subgroup_classes(G)
    rows, ok = [], True
    for i, H in enumerate(T):
        for j, K in enumerate(T):
            P, _, _ = pullback(to_point(coset_gset(G, H)), to_point(coset_gset(G, K)))
            got = sorted(T.index(o.stabilizer) for o in orbits_decompose(P).orbits)
            want = sorted(T.index(a) for a, _ in double_cosets(H, K, G).intersections)
            ok &= got == want
            rows.append({"H": T.label(i), "K": T.label(j), "orbits": got, "predicted": want,
                         "agree": got == want})
    return ok, {"pairs": rows}


def cmd_burnside_marks(args):
    G = as_subgroup(_group(args.group))
    T = subgroup_classes(G)
    tom = table_of_marks(G)
    return True, {"classes": [T.label(i) for i in range(len(T))],
                  "marks": [list(r) for r in tom.matrix], "weyl_orders": weyl_orders(G)}


def cmd_burnside_mult(args):
    G = as_subgroup(_group(args.group))
    a = BurnsideElement.make(G, _ints(args.a))
    b = BurnsideElement.make(G, _ints(args.b))
    prod = burnside_multiply(a, b)
    tom = table_of_marks(G)
    ok = tom.marks(prod) == tuple(x * y for x, y in zip(tom.marks(a), tom.marks(b)))
    return ok, {"product": list(prod.coefficients), "marks": list(tom.marks(prod)),
                "marks_multiplicative": ok}


def cmd_burnside_check(args):
    G = as_subgroup(_group(args.group))
    rng = random.Random(args.seed)
    tom = table_of_marks(G)
    n = len(tom.matrix)
    bad_marks = []
    for _ in range(args.trials):
        a = BurnsideElement.make(G, [rng.randint(-3, 3) for _ in range(n)])
        b = BurnsideElement.make(G, [rng.randint(-3, 3) for _ in range(n)])
        if tom.marks(a * b) != tuple(x * y for x, y in zip(tom.marks(a), tom.marks(b))):
            bad_marks.append({"a": list(a.coefficients), "b": list(b.coefficients)})
    bad_spans = []
    for t in range(args.trials):
        X, Y, Z = (random_gset(G, rng, 4) for _ in range(3))
        f, g = random_span(X, Y, rng), random_span(Y, Z, rng)
        h = random_span(Z, X, rng)
        assoc = spans_isomorphic(compose_spans(h, compose_spans(g, f)), compose_spans(compose_spans(h, g), f),
                                 max_apex=10 ** 6)
        unit = spans_isomorphic(compose_spans(Span.identity(Y), f), f) and \
            spans_isomorphic(compose_spans(f, Span.identity(X)), f)
        if not (assoc and unit):
            bad_spans.append({"trial": t, "associative": assoc, "unital": unit})
    green = green_check(G)
    ok = not bad_marks and not bad_spans and green.passed
    return ok, {"trials": args.trials, "seed": args.seed, "marks_failures": bad_marks,
                "span_failures": bad_spans, "green": green.to_json()}


def _mackey_builtin(text: str) -> MackeyFunctor:
    kind, _, name = text.partition(":")
    if kind == "burnside":
        return burnside_mackey(_group(name))
    if kind == "fixed":
        G = _group(name)
        return fixed_point_mackey(G, permutation_matrices(G))
    raise InputError(f"unknown builtin Mackey functor {text!r} (use burnside:G or fixed:G)")


def cmd_mackey_check(args):
    if args.builtin:
        M = _mackey_builtin(args.builtin)
    elif args.file:
        M = MackeyFunctor.from_json(_load_json(args.file))
    else:
        raise InputError("give a file or --builtin")
    report = check_mackey(M)
    return report.passed, report.to_json()


def cmd_mackey_dump(args):
    M = _mackey_builtin(args.builtin)
    return True, {"functor": M.to_json()}


def cmd_orbital_check(args):
    if args.builtin:
        T = parse_builtin(args.builtin)
    elif args.file:
        T = validate_category(_load_json(args.file))
    else:
        raise InputError("give a file or --builtin")
    report = check_category(T)
    return report.passed, dict(report.to_json(), objects=len(T), morphisms=T.morphism_count)


def cmd_ffield_normforms(args):
    dim, _ = norm_form_space(args.p, args.n, args.d, equivariant=not args.no_descent)
    expected = args.d ** args.n if not args.no_descent else args.n * args.d ** args.n
    return dim == expected, {"p": args.p, "n": args.n, "d": args.d, "equivariant": not args.no_descent,
                             "dimension": dim, "expected": expected}


def cmd_ffield_tensor(args):
    factors = tensor_decompose(args.p, args.a, args.b)
    return True, {"p": args.p, "a": args.a, "b": args.b,
                  "factors": [{"degree": d, "multiplicity": m} for d, m in factors]}


def cmd_ffield_normalbasis(args):
    theta = normal_basis_element(args.p, args.n)
    return True, {"p": args.p, "n": args.n, "element": theta.to_int(),
                  "coefficients": list(theta.coeffs),
                  "conjugates": [list(theta.frobenius(j).coeffs) for j in range(args.n)]}


def cmd_galoisk_verify(args):
    model = build_model(args.q, args.n, args.imax)
    report = verify_model(model)
    return report.passed, dict(report.to_json(), q=args.q, n=args.n, imax=args.imax)


def cmd_galoisk_e2(args):
    model = build_model(args.q, args.n, args.i)
    return True, dict(descent_e2(model, args.i).to_json(), q=args.q, n=args.n)


def cmd_galoisk_fixed(args):
    model = build_model(args.q, args.n, args.i)
    rows = compare_fixed_points(model, args.i)
    return True, {"q": args.q, "n": args.n, "weight": args.i, "pairs": [r.to_json() for r in rows],
                  "all_coincide": all(r.F_onto_fixed and r.V_from_coinvariants_iso for r in rows)}


# -- parser -----------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized trials")

    parser = argparse.ArgumentParser(prog="equivar", description="Exact equivariant algebra checks.")
    top = parser.add_subparsers(dest="module", required=True)

    def leaf(group, name, func, help_text):
        p = group.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    g = top.add_parser("group", help="permutation groups").add_subparsers(dest="command", required=True)
    p = leaf(g, "info", cmd_group_info, "subgroup classes")
    p.add_argument("group")
    p = leaf(g, "dcosets", cmd_group_dcosets, "double cosets of two class representatives")
    p.add_argument("group")
    p.add_argument("--left", type=int, required=True)
    p.add_argument("--right", type=int, required=True)

    g = top.add_parser("gset", help="G-sets").add_subparsers(dest="command", required=True)
    p = leaf(g, "orbits", cmd_gset_orbits, "orbit decomposition of a G-set file")
    p.add_argument("file")
    p = leaf(g, "pullback", cmd_gset_pullback, "pullbacks of orbits against double cosets")
    p.add_argument("group")

    g = top.add_parser("burnside", help="Burnside ring and spans").add_subparsers(dest="command", required=True)
    p = leaf(g, "marks", cmd_burnside_marks, "table of marks")
    p.add_argument("--group", required=True)
    p = leaf(g, "mult", cmd_burnside_mult, "multiply two elements given by coefficients")
    p.add_argument("--group", required=True)
    p.add_argument("a")
    p.add_argument("b")
    p = leaf(g, "check", cmd_burnside_check, "randomized mark, span and Green checks")
    p.add_argument("--group", required=True)
    p.add_argument("--trials", type=int, default=20)

    g = top.add_parser("mackey", help="Mackey functors").add_subparsers(dest="command", required=True)
    p = leaf(g, "check", cmd_mackey_check, "check the Mackey axioms")
    p.add_argument("file", nargs="?")
    p.add_argument("--builtin", help="burnside:G or fixed:G")
    p = leaf(g, "dump", cmd_mackey_dump, "print a builtin functor as JSON")
    p.add_argument("--builtin", required=True)

    g = top.add_parser("orbital", help="orbital and atomic categories").add_subparsers(dest="command",
                                                                                        required=True)
    p = leaf(g, "check", cmd_orbital_check, "check the orbital and atomic axioms")
    p.add_argument("file", nargs="?")
    p.add_argument("--builtin", help="orbit_category:G, family:G:i,j, surj_leq:n, groupoid:G1,G2, idempotent")

    g = top.add_parser("ffield", help="finite fields").add_subparsers(dest="command", required=True)
    p = leaf(g, "normforms", cmd_ffield_normforms, "dimension of the space of norm forms")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--no-descent", action="store_true", help="drop the Galois equivariance condition")
    p = leaf(g, "tensor", cmd_ffield_tensor, "decompose F_{p^a} (x) F_{p^b}")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p = leaf(g, "normalbasis", cmd_ffield_normalbasis, "least normal basis generator")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-n", type=int, required=True)

    g = top.add_parser("galoisk", help="K-theory of finite fields").add_subparsers(dest="command",
                                                                                    required=True)
    p = leaf(g, "verify", cmd_galoisk_verify, "check the Mackey model")
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--imax", type=int, default=1)
    for name, func in (("e2", cmd_galoisk_e2), ("fixed", cmd_galoisk_fixed)):
        p = leaf(g, name, func, "descent E2 groups" if name == "e2" else "fixed points and coinvariants")
        p.add_argument("-q", type=int, required=True)
        p.add_argument("-n", type=int, required=True)
        p.add_argument("-i", type=int, required=True)
    return parser


# -- output -------------------------------------------------------------------------------------

def _human(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_human(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(value, list):
        if value and all(isinstance(r, dict) for r in value):
            keys = list(value[0])
            cells = [keys] + [[_scalar(r.get(k)) for k in keys] for r in value]
            widths = [max(len(c[i]) for c in cells) for i in range(len(keys))]
            lines.extend(pad + "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells)
        else:
            lines.extend(pad + _scalar(v) for v in value)
    else:
        lines.append(pad + _scalar(value))
    return lines


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True)
    return "-" if v is None else str(v)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse: 0 for --help, 2 for usage errors
        return int(exc.code or 0)
    command = f"{args.module} {args.command}"
    try:
        passed, report = args.func(args)
    except (InputError, MackeyError, CategoryError, GSetError, FieldError, GroupSizeError,
            AbelianGroupError, ValueError, TypeError, KeyError, IndexError) as exc:
        witness = getattr(exc, "witness", None)
        if args.json:
            doc = {"schema": SCHEMA, "command": command, "status": "error", "error": str(exc)}
            if witness:
                doc["witness"] = witness
            print(json.dumps(doc, sort_keys=True))
        else:
            print(f"error: {exc}", file=sys.stderr)
            if witness:
                print(f"witness: {json.dumps(witness, sort_keys=True)}", file=sys.stderr)
        return 2
    status = "pass" if passed else "fail"
    if args.json:
        print(json.dumps({"schema": SCHEMA, "command": command, "status": status, "report": report},
                         sort_keys=True))
    else:
        print(f"{command}: {status}")
        print("\n".join(_human(report)))
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())


def main_exit() -> None:
    sys.exit(main())
