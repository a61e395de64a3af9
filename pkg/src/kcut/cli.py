"""Command-line front end.  One JSON document (or TSV) on stdout per run;
diagnostics on stderr.  Exit codes: 0 ok, 1 input error, 2 a certificate
failed."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cuts import enumerate_approx_kcuts, min_kcut, ravi_sinha_cut, round_lp
from .exact import rational_str
from .graph import Graph, ParseError, parse_graph
from .lp import (
    check_complementary_slackness,
    lagrangean_value,
    lp_dual,
    lp_primal,
    verify_dual,
    verify_primal,
)
from .mincut import global_mincut_detail
from .oracle import (
    OracleLimitError,
    OracleLimits,
    oracle_lp_value,
    oracle_min_kcut,
    oracle_strength,
    oracle_treepack,
)
from .packing import PackConfig, PackingError, TreePacking, exact_pack, mwu_pack
from .strength import breakpoints, principal_sequence, strength
from .verify import run_verification


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 by default; we reserve 2
        raise CliError(message)


def _cut_json(cut) -> dict:
    return {
        "value": rational_str(cut.value),
        "parts": cut.k_achieved,
        "partition": cut.partition.to_json(),
    }


def _packing_json(packing: TreePacking) -> dict:
    loads = packing.loads()
    out = {
        "trees": [
            {"edges": list(t), "weight": rational_str(w)}
            for t, w in zip(packing.trees, packing.weights)
        ],
        "loads": {str(eid): rational_str(loads[eid]) for eid in sorted(loads)},
        "total_value": rational_str(packing.total_value),
    }
    if packing.approximate:
        out["approx_value"] = float(packing.total_value)
    return out


def _read_graph(args) -> Graph:
    if args.input is None or args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(str(exc)) from None
    return parse_graph(text)


def _cmd_strength(args):
    g = _read_graph(args)
    sigma, part = strength(g)
    return {"strength": rational_str(sigma), "partition": part.to_json()}


def _cmd_psp(args):
    g = _read_graph(args)
    psp = principal_sequence(g)
    return {
        "components": psp.p0.to_json(),
        "levels": [
            {
                "lambda": rational_str(level.lam),
                "partition": level.partition.to_json(),
                "kappa": level.kappa,
            }
            for level in psp.levels
        ],
    }


def _cmd_pack(args):
    g = _read_graph(args)
    if args.exact:
        packing = exact_pack(g)
    else:
        eps = Fraction(args.eps) if args.eps else Fraction(1, 10)
        packing = mwu_pack(g, config=PackConfig(epsilon=eps))
    return _packing_json(packing)


def _cmd_lp(args):
    g = _read_graph(args)
    psp = principal_sequence(g)
    k = args.k
    primal = lp_primal(psp, k)
    dual = lp_dual(g, psp, k, explicit=True)
    lag, lag_b = lagrangean_value(psp, k)
    pv = verify_primal(g, primal.x, k)
    dv = verify_dual(g, dual)
    cs = check_complementary_slackness(g, primal.x, dual)
    out = {
        "primal": {
            "x": [rational_str(v) for v in primal.x],
            "value": rational_str(primal.objective),
        },
        "dual": {
            "z": [rational_str(v) for v in dual.z],
            "trees": _packing_json(dual.packing)["trees"],
            "value": rational_str(dual.objective),
        },
        "lagrangean": {"b": rational_str(lag_b), "value": rational_str(lag)},
        "certificates": {
            "primal_feasible": pv.ok,
            "dual_feasible": dv.ok,
            "cs": [cs.z_implies_tight_x, cs.trees_tight, cs.x_implies_tight_load],
        },
    }
    if not (pv.ok and dv.ok and cs.ok):
        raise CertificateFailure(out)
    return out


class CertificateFailure(Exception):
    def __init__(self, payload):
        self.payload = payload


def _cmd_solve(args):
    g = _read_graph(args)
    mode = "approx" if args.eps else "exact"
    eps = Fraction(args.eps) if args.eps else None
    cut, report = min_kcut(g, args.k, mode=mode, eps=eps)
    out = {
        "k": args.k,
        "mode": report.mode,
        "h": report.h,
        "cut": _cut_json(cut),
        "candidates_examined": report.candidates_examined,
        "distinct_cuts": report.distinct_cuts,
    }
    if args.all:
        out["minimizers"] = [_cut_json(c) for c in report.cuts]
    return out


def _cmd_enumerate(args):
    g = _read_graph(args)
    alpha = Fraction(args.alpha) if args.alpha else Fraction(1)
    report = enumerate_approx_kcuts(g, args.k, alpha)
    return {
        "k": args.k,
        "alpha": rational_str(alpha),
        "h": report.h,
        "min_value": rational_str(report.min_value),
        "threshold": rational_str(report.threshold),
        "count": len(report.cuts),
        "cuts": [_cut_json(c) for c in report.cuts],
    }


def _cmd_round(args):
    g = _read_graph(args)
    psp = principal_sequence(g)
    primal = lp_primal(psp, args.k)
    result = round_lp(g, primal)
    return {
        "k": args.k,
        "lp_value": rational_str(primal.objective),
        "cut": _cut_json(result.cut),
        "bound": rational_str(result.bound),
        "certified": result.certified,
    }


def _cmd_approx(args):
    g = _read_graph(args)
    psp = principal_sequence(g)
    cut = ravi_sinha_cut(g, psp, args.k)
    lp, _ = lagrangean_value(psp, args.k)
    return {"k": args.k, "lp_value": rational_str(lp), "cut": _cut_json(cut)}


def _cmd_mincut(args):
    g = _read_graph(args)
    eps = Fraction(args.eps) if args.eps else Fraction(1, 6)
    cut, witness, packing = global_mincut_detail(g, eps)
    block = cut.partition.block_of(g.n)
    crossing = [i for i, e in enumerate(g.edges) if block[e.u] != block[e.v]]
    out = {"mincut": _cut_json(cut), "crossing_edges": crossing}
    if witness is not None:
        out["witness_tree"] = witness
        out["witness_tree_edges"] = list(packing.support()[witness])
    return out


def _cmd_oracle(args):
    g = _read_graph(args)
    limits = OracleLimits(args.max_partitions, args.max_trees)
    which = args.what
    if which == "strength":
        sigma, part = oracle_strength(g, limits)
        return {"strength": rational_str(sigma), "partition": part.to_json()}
    if which == "kcut":
        if args.k is None:
            raise CliError("oracle kcut needs --k")
        cut, argmins = oracle_min_kcut(g, args.k, limits)
        return {
            "k": args.k,
            "value": rational_str(cut.value),
            "minimizers": [p.to_json() for p in argmins],
        }
    if which == "treepack":
        return {"treepack": rational_str(oracle_treepack(g, limits))}
    if which == "lp":
        if args.k is None:
            raise CliError("oracle lp needs --k")
        return {"k": args.k, "lp_value": rational_str(oracle_lp_value(g, args.k, limits))}
    raise CliError(f"unknown oracle query {which!r}")


def _cmd_verify(args):
    g = _read_graph(args)
    ks = range(2, min(g.n, args.kmax) + 1) if args.kmax else None
    rows = run_verification(g, ks)
    failed = [r for r in rows if r.status == "fail"]
    out = {
        "rows": [r.to_json() for r in rows],
        "passed": sum(1 for r in rows if r.status == "pass"),
        "failed": len(failed),
        "skipped": sum(1 for r in rows if r.status == "skip"),
        "ok": not failed,
    }
    if failed:
        raise CertificateFailure(out)
    return out


def _flatten(prefix, obj, rows):
    if isinstance(obj, dict):
        for key, val in obj.items():
            _flatten(f"{prefix}.{key}" if prefix else str(key), val, rows)
    elif isinstance(obj, list):
        rows.append((prefix, json.dumps(obj)))
    else:
        rows.append((prefix, obj))


def _emit(obj, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj)
    rows: list[tuple[str, object]] = []
    _flatten("", obj, rows)
    return "\n".join(f"{key}\t{val}" for key, val in rows)


def build_parser() -> _Parser:
    parser = _Parser(prog="kcut", description="graph cut toolkit with exact certificates")
    parser.add_argument("--output", choices=["json", "tsv"], default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, pre_positionals=(), **kwargs):
        p = sub.add_parser(name, **kwargs)
        for pos_name, pos_kwargs in pre_positionals:
            p.add_argument(pos_name, **pos_kwargs)
        p.add_argument("input", nargs="?", help="graph file (default stdin)")
        p.set_defaults(fn=fn)
        return p

    add("strength", _cmd_strength, help="exact graph strength")
    add("psp", _cmd_psp, help="principal sequence of partitions")
    p = add("pack", _cmd_pack, help="fractional tree packing")
    p.add_argument("--eps", help="approximation parameter (multiplicative weights)")
    p.add_argument("--exact", action="store_true", help="exact column generation")
    p = add("lp", _cmd_lp, help="k-cut LP primal/dual with certificates")
    p.add_argument("--k", type=int, required=True)
    p = add("solve", _cmd_solve, help="minimum k-cut with enumeration")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--exact", action="store_true", default=False)
    p.add_argument("--eps", help="use approximate packing with this epsilon")
    p.add_argument("--all", action="store_true", help="list every minimizer")
    p = add("enumerate", _cmd_enumerate, help="all alpha-approximate k-cuts")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", help="approximation ratio (default 1)")
    p = add("round", _cmd_round, help="round the LP optimum to a k-cut")
    p.add_argument("--k", type=int, required=True)
    p = add("approx", _cmd_approx, help="smallest-shores 2-approximation")
    p.add_argument("--k", type=int, required=True)
    p = add("mincut", _cmd_mincut, help="global minimum cut via 2-respecting trees")
    p.add_argument("--eps", help="packing epsilon (default 1/6)")
    p = add(
        "oracle",
        _cmd_oracle,
        pre_positionals=[("what", {"choices": ["strength", "kcut", "treepack", "lp"]})],
        help="brute-force ground truth (small graphs)",
        epilog="flags go after the graph file: kcut oracle kcut G --k 3",
    )
    p.add_argument("--k", type=int)
    p.add_argument("--max-partitions", type=int, default=12)
    p.add_argument("--max-trees", type=int, default=20000)
    p = add("verify", _cmd_verify, help="run the full cross-check battery")
    p.add_argument("--kmax", type=int, help="largest k to verify (default n)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        out = args.fn(args)
    except CertificateFailure as exc:
        sys.stdout.write(_emit(exc.payload, args.output) + "\n")
        print("error: certificate failure", file=sys.stderr)
        return 2
    except (ParseError, CliError, OracleLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (PackingError, AssertionError) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(_emit(out, args.output) + "\n")
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
