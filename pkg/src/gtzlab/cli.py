"""Command-line driver: ``python -m gtzlab <command> ...``.

Commands: ``solve`` (kernel basis), ``tableaux``, ``branch`` (dimension
table), ``verify`` (check registry) and ``report`` (aggregate over a range,
with summary).  Exit status is 0 iff every PASS-expected check passed.
"""

import argparse
import json
import sys
from fractions import Fraction

from gtzlab import report as rp
from gtzlab import tableaux as tb
from gtzlab.kernel import DegreeBound, NotStabilized, default_bound, solve_kernel
from gtzlab.systems import HighestWeight, InvalidWeight, build_indicator

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_UNSTABLE = 3


class UsageError(Exception):
    pass


def _frac(x2):
    return str(Fraction(x2, 2))


def _vec(xs):
    return "(" + ",".join(_frac(x) for x in xs) + ")"


def _algebra(args):
    return "B" if args.algebra == "b" else "A"


def _weights(args):
    alg = _algebra(args)
    if args.weight and args.max_weight is not None:
        raise UsageError("give either --weight or --max-weight, not both")
    if args.weight:
        try:
            w = HighestWeight.parse(alg, args.weight)
        except InvalidWeight as exc:
            raise UsageError(str(exc)) from None
        if args.n is not None and args.n != w.n:
            raise UsageError(f"--n {args.n} does not match a weight with {w.n} entries")
        return [w]
    if args.max_weight is not None:
        if args.n is None:
            raise UsageError("--max-weight needs --n")
        try:
            return rp.weight_range(alg, args.n, args.max_weight)
        except InvalidWeight as exc:
            raise UsageError(str(exc)) from None
    raise UsageError("give --weight or --max-weight")


def _bound(args):
    if args.bound is None:
        return None
    parts = [p for p in args.bound.split(",") if p]
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise UsageError("--bound takes 'N' or 'SPECIAL,PAIR'") from None
    if len(vals) == 1:
        vals *= 2
    if len(vals) != 2 or min(vals) < 0:
        raise UsageError("--bound takes 'N' or 'SPECIAL,PAIR'")
    return DegreeBound(*vals)


def _checks(args):
    if args.check in (None, "all"):
        return None
    ids = [c for c in args.check.split(",") if c]
    unknown = [c for c in ids if c not in rp.REGISTRY]
    if unknown:
        raise UsageError(f"unknown check id(s): {', '.join(unknown)}")
    return ids


# -- commands -------------------------------------------------------------------

def cmd_solve(args, out):
    results = []
    signs = rp.SIGNS[args.sign]
    override = _bound(args)
    for w in _weights(args):
        for s in (signs if w.algebra == "B" else (1,)):
            system = build_indicator(w, s)
            floor = default_bound(system)
            bound = floor if override is None else DegreeBound(
                max(floor.special, override.special), max(floor.pair, override.pair))
            k = solve_kernel(system, bound)
            results.append((w, s, k))
    if args.format == "json":
        payload = [{
            "algebra": args.algebra, "n": w.n, "weight": rp.weight_json(w),
            "sign": rp.SIGN_NAME[s] if w.algebra == "B" else None,
            "dimension": k.dimension, "stabilized": k.stabilized,
            "bound": {"special": k.bound_used.special, "pair": k.bound_used.pair},
            "basis": [{"weight": list(wt), "poly": str(f)} for wt, f in zip(k.weights, k.basis)],
        } for w, s, k in results]
        out.write(json.dumps(payload, indent=2) + "\n")
        return 0
    if args.format == "csv":
        out.write("weight,sign,euler_weight,poly\n")
        for w, s, k in results:
            for wt, f in zip(k.weights, k.basis):
                out.write(f"\"{w}\",{rp.SIGN_NAME[s]},\"{_vec(wt)}\",\"{f}\"\n")
        return 0
    for w, s, k in results:
        sign = f" sign={rp.SIGN_NAME[s]}" if w.algebra == "B" else ""
        out.write(f"{args.algebra} n={w.n} weight={w}{sign} dimension={k.dimension} "
                  f"stabilized={k.stabilized}\n")
        for wt, f in zip(k.weights, k.basis):
            out.write(f"  {_vec(wt):<16} {f}\n")
    return 0


def cmd_tableaux(args, out):
    rows = []
    for w in _weights(args):
        tabs = tb.enumerate_b_tableaux(w) if w.algebra == "B" else tb.enumerate_gl_tableaux(tb.gl_top(w))
        rows.append((w, tabs))
    if args.format == "json":
        payload = [{"algebra": args.algebra, "n": w.n, "weight": rp.weight_json(w), "count": len(tabs),
                    "tableaux": [{"top": list(t.top), "middle": list(t.middle), "bottom": list(t.bottom),
                                  **({"sigma": t.sigma} if w.algebra == "B" else {})} for t in tabs]}
                   for w, tabs in rows]
        out.write(json.dumps(payload, indent=2) + "\n")
        return 0
    for w, tabs in rows:
        out.write(f"{args.algebra} n={w.n} weight={w} count={len(tabs)}\n")
        for t in tabs:
            out.write(f"  {t}\n")
    return 0


def cmd_branch(args, out):
    ok = True
    payload = []
    for w in _weights(args):
        terms = tb.branching_terms(w)
        total = sum(m * d for _, m, d in terms)
        dim = tb.full_dim(w)
        ok &= total == dim
        payload.append({"algebra": args.algebra, "n": w.n, "weight": rp.weight_json(w), "dim": dim,
                        "branch_sum": total,
                        "terms": [{"bottom": list(b), "multiplicity": m, "dim": d} for b, m, d in terms]})
        if args.format == "text":
            parts = " + ".join(f"{m}x{_vec(b)}:{d}" for b, m, d in terms)
            out.write(f"{args.algebra} n={w.n} weight={w} dim={dim} branch_sum={total} [{parts}] "
                      f"{'PASS' if total == dim else 'FAIL'}\n")
    if args.format == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        out.write("algebra,n,weight,bottom,multiplicity,dim\n")
        for p in payload:
            label = _vec(p["weight"]["doubled"])
            for t in p["terms"]:
                out.write(f"{p['algebra']},{p['n']},\"{label}\",\"{_vec(t['bottom'])}\",{t['multiplicity']},{t['dim']}\n")
    return 0 if ok else EXIT_FAIL


def _run_registry(args, out, with_summary):
    rep = rp.build_report(_weights(args), rp.SIGNS[args.sign], rp.FORMS[args.basis_form],
                          _bound(args), _checks(args), args.jobs)
    if not with_summary:
        rep.pop("summary")
    out.write(rp.render(rep, args.format))
    return 0 if rep["all_expected_passed"] else EXIT_FAIL


def cmd_verify(args, out):
    return _run_registry(args, out, with_summary=False)


def cmd_report(args, out):
    return _run_registry(args, out, with_summary=True)


COMMANDS = {"solve": cmd_solve, "tableaux": cmd_tableaux, "branch": cmd_branch,
            "verify": cmd_verify, "report": cmd_report}


def build_parser():
    parser = argparse.ArgumentParser(prog="gtzlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--algebra", choices=("b", "gl"), default="b")
        p.add_argument("--n", type=int)
        p.add_argument("--weight", help="comma separated, e.g. 1,0 or 1/2,1/2")
        p.add_argument("--max-weight", help="sweep all dominant weights with entries up to this value")
        p.add_argument("--sign", choices=tuple(rp.SIGNS), default="both")
        p.add_argument("--basis-form", choices=tuple(rp.FORMS), default="both")
        p.add_argument("--bound", help="degree bound override: N or SPECIAL,PAIR")
        p.add_argument("--format", choices=("json", "csv", "text"),
                       default="json" if name == "report" else "text")
        p.add_argument("--check", default="all", help="check id (or comma list) or 'all'")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for weight sweeps")
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"gtzlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotStabilized as exc:
        print(f"gtzlab: {exc}", file=sys.stderr)
        return EXIT_UNSTABLE


if __name__ == "__main__":
    sys.exit(main())
