"""Command line entry point ``skewsp``.

Exit status: 0 on success, 1 when an exact check fails, 2 on usage errors and
guard violations.  All numbers are printed exactly (integers or "p/q").
"""

import argparse
import json
import sys

from . import acceptance, genus, graphs, k3, pn, reps, spops


class UsageError(Exception):
    pass


def _frac(x):
    return f"{x.numerator}/{x.denominator}"


def _emit(args, payload, text):
    if args.mode == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _exterior_guard(n, g):
    bits = 2 * n * g
    if n < 1 or g < 1:
        raise UsageError("n and g must be positive")
    if bits > spops.MAX_EXTERIOR_BITS:
        raise UsageError(f"2ng = {bits} exceeds {spops.MAX_EXTERIOR_BITS}: "
                         f"the basis would have 2^{bits} = {2 ** bits} monomials")


def cmd_relations(args):
    _exterior_guard(args.n, args.g)
    report = spops.check_sp_relations(args.n, args.g)
    commuting = spops.check_commuting_actions(args.n, args.g) if args.commuting else None
    ok = report.passed and (commuting is None or commuting.passed)
    payload = {"n": args.n, "g": args.g, "relations": report.to_json(), "passed": ok}
    if commuting is not None:
        payload["commuting"] = commuting.to_json()
    lines = [f"{name}: {'zero' if good else 'NONZERO'}" for name, good in report.entries]
    if commuting is not None:
        lines.append(f"commuting checks: {len(commuting.entries)}, "
                     f"failures: {len(commuting.failures())}")
    lines.append("all relations hold" if ok else "relations FAILED")
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else 1


def cmd_decompose(args):
    terms = reps.enumerate_decomposition(args.n, args.g)
    total = sum(t.dim_spV * t.dim_spg for t in terms)
    ok = total == 2 ** (2 * args.n * args.g)
    payload = {"terms": json.loads(reps.decomposition_json(terms)), "total": total, "passed": ok}
    lines = [f"mu={tuple(t.mu)} mu~={tuple(t.mu_tilde)} dims {t.dim_spV} x {t.dim_spg}"
             for t in terms]
    lines.append(f"total {total} (2^(2ng) = {2 ** (2 * args.n * args.g)})")
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else 1


def cmd_invariants(args):
    _exterior_guard(args.n, args.g)
    sub = spops.invariant_subspace(args.n, args.g)
    predicted = reps.invariant_graded_dims(args.n, args.g)
    kernel = sub.dims_by_total_degree()
    expected = reps.sp_irrep_dim(args.g, (args.n,) * args.g)
    ok = sub.total == expected and all(kernel.get(d, 0) == c for d, c in predicted.items())
    payload = {"by_degree": {str(d): c for d, c in kernel.items()},
               "predicted": {str(d): c for d, c in predicted.items()},
               "total": sub.total, "dim_R": expected, "passed": ok}
    text = "\n".join(f"degree {d}: {c}" for d, c in kernel.items())
    _emit(args, payload, text + f"\ntotal {sub.total}, dim R(n,...,n) = {expected}")
    return 0 if ok else 1


def cmd_pn(args):
    _exterior_guard(args.n, args.g)
    top = args.max_degree if args.max_degree is not None else args.n * args.g + 1
    report = pn.quotient_graded_dims(args.n, args.g, top)
    predicted = reps.invariant_graded_dims(args.n, args.g, 2 * top)
    match = all(predicted.get(2 * d, 0) == q for d, q in report.quotient_dims.items())
    annihilates = pn.realize_and_check_annihilation(args.n, args.g)
    witness = pn.find_nonvanishing(args.n, args.g, args.n)
    ok = match and annihilates
    payload = {"quotient": report.to_json(), "annihilates": annihilates, "passed": ok,
               "witness": None if witness is None else {
                   "word": list(witness[0]), "input": witness[1].to_json(),
                   "image": witness[2].to_json()}}
    lines = [f"degree {d}: ambient {a}, relations {r}, quotient {q}" for d, a, r, q in report.rows]
    lines.append(f"P_{args.n + 1} annihilates: {annihilates}")
    if witness:
        lines.append(f"P_{args.n} witness word {witness[0]}: {witness[1]!r} -> {witness[2]!r}")
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else 1


def _parse_chern(spec):
    out = {}
    for part in spec.split(","):
        key, _, value = part.partition("=")
        key = key.strip()
        if not key.startswith("c") or not value:
            raise UsageError(f"bad Chern number {part!r}; use e.g. c2=24,c1c1=0")
        idx = tuple(sorted((int(x) for x in key[1:].split("c") if x), reverse=True))
        out[idx] = int(value)
    return out


def cmd_genus(args):
    if args.n > 4 or args.g > 3 or args.n < 1 or args.g < 1:
        raise UsageError("genus needs 1 <= n <= 4 and 1 <= g <= 3")
    if args.chern:
        poly = genus.genus_from_chern_numbers(args.n, args.g, _parse_chern(args.chern))
        poly = poly.in_basis(args.basis)
        _emit(args, poly.to_json(), repr(poly))
        return 0
    coeffs = genus.chern_coefficients(args.n, args.g)
    payload = {",".join(map(str, te)): {"*".join(f"c{q}" for q in k) or "1": _frac(c)
                                        for k, c in sorted(v.terms.items())}
               for te, v in coeffs.items()}
    lines = [f"(1-y)^{te}: {v!r}" for te, v in coeffs.items()]
    _emit(args, {"basis": "one-minus-y", "coefficients": payload}, "\n".join(lines))
    return 0


def cmd_k3(args):
    if args.action == "table":
        if args.g < 1 or args.g > k3.MAX_K3_G:
            raise UsageError(f"g must be in 1..{k3.MAX_K3_G}; "
                             f"requested table has {3 ** (args.g + 1)} entries")
        table = k3.build_k3_table(args.g)
        rows = []
        for p in sorted({p for (p, _) in table.entries} | {(0,) * args.g}):
            rows.append(f"{''.join(map(str, p)):>{max(args.g, 2)}} "
                        + " ".join(f"{table[(p, q)]:>6}" for q in range(3)))
        header = f"{'p':>{max(args.g, 2)}} " + " ".join(f"{'q=' + str(q):>6}" for q in range(3))
        _emit(args, table.to_json(), "\n".join([header] + rows))
        return 0
    table = k3.build_k3_table(3)
    m = reps.multiplicity(table, 1, (0, 0, 0))
    direct = k3.k3_pluri_hodge((1, 1, 1), 1) - 2 * k3.k3_pluri_hodge((1,), 1)
    ok = m == direct == 232
    _emit(args, {"multiplicity": m, "expected": direct, "passed": ok}, str(m))
    return 0 if ok else 1


def cmd_graphs(args):
    if args.g > graphs.MAX_G or args.internal > graphs.MAX_TRIVALENT:
        raise UsageError(f"guard: g <= {graphs.MAX_G}, internal degree <= {graphs.MAX_TRIVALENT}")
    max_legs = args.max_legs if args.max_legs is not None else 2 * args.n * args.g
    if max_legs > graphs.MAX_LEGS:
        raise UsageError(f"{max_legs} legs exceeds the guard {graphs.MAX_LEGS}; "
                         f"graphs would have {3 * args.internal + max_legs} half-edges")
    ranks = graphs.block_ranks(args.g, args.n, args.internal, max_legs)
    total = sum(ranks.values())
    payload = {"g": args.g, "n": args.n, "internal": args.internal, "max_legs": max_legs,
               "rank": total, "blocks": {",".join(map(str, p)): r for p, r in ranks.items() if r}}
    _emit(args, payload, str(total))
    return 0


def cmd_selftest(args):
    select = None
    if args.only:
        select = {int(x) for x in args.only.split(",")}
    results = acceptance.run_all(select)
    ok = all(r.passed for r in results)
    _emit(args, {"criteria": [r.to_json() for r in results], "passed": ok},
          "\n".join(r.line() for r in results))
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(prog="skewsp", description=__doc__.splitlines()[0])
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--json", dest="mode", action="store_const", const="json")
    mode.add_argument("--text", dest="mode", action="store_const", const="text")
    parser.set_defaults(mode="json")
    sub = parser.add_subparsers(dest="command", required=True)

    def ng(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--g", type=int, required=True)

    p = sub.add_parser("relations", help="check the sp(g) relations on Lambda(V (x) W)")
    ng(p)
    p.add_argument("--commuting", action="store_true", help="also check [sp(V), sp(g)] = 0")
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("decompose", help="Sp(V) x Sp(g) decomposition")
    ng(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("invariants", help="Sp(V)-invariant dimensions by degree")
    ng(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("pn", help="quotient of S(S^2 W) by P_{n+1} and annihilation")
    ng(p)
    p.add_argument("--max-degree", type=int)
    p.set_defaults(func=cmd_pn)

    p = sub.add_parser("genus", help="Chern-number coefficients of the pluri chi_y genus")
    ng(p)
    p.add_argument("--chern", help="Chern numbers, e.g. c2=24,c1c1=0")
    p.add_argument("--basis", choices=("y", "one-minus-y"), default="y")
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("k3", help="K3 pluri-Hodge tables")
    k3sub = p.add_subparsers(dest="action", required=True)
    t = k3sub.add_parser("table")
    t.add_argument("--g", type=int, required=True)
    k3sub.add_parser("check-232")
    p.set_defaults(func=cmd_k3)

    p = sub.add_parser("graphs", help="marked uni-trivalent graph quotients")
    gsub = p.add_subparsers(dest="action", required=True)
    r = gsub.add_parser("rank")
    ng(r)
    r.add_argument("--internal", type=int, required=True)
    r.add_argument("--max-legs", type=int)
    p.set_defaults(func=cmd_graphs)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--only", help="comma separated criterion numbers")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, spops.GuardError, graphs.GraphGuardError) as exc:
        print(f"skewsp: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"skewsp: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
