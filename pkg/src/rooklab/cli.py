"""Command-line front end.

Subcommands: spectrum, verify, invariants, gamma, switch, quotient,
export-graph6.  Exit codes: 0 success, 1 verification failure, 2 size or
usage error.  All output is deterministic; identical invocations produce
byte-identical output.  ROOKLAB_THREADS (read by the verify battery)
overrides worker-pool width.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .eigenvectors import classify_gamma, gamma_graph, inversion_count
from .graphio import to_graph6
from .graphs import johnson_graph, sr_graph
from .invariants import (SIZE_LIMIT, SizeLimit, automorphism_count,
                         clique_number, coordinate_symmetries, diameter,
                         has_induced_k114, independence_number, is_isomorphic)
from .linalg import integral_spectrum, try_integral_spectrum
from .partitions import (check_equitable, quotient_spectrum,
                         support_partition, weight_partition)
from .switching import NotSwitchable, gm_switch, named_switching_set
from .verify import SUITES, run_suites

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

# Desk-scale budget shared with the canonical-labeling guard: commands that
# do spectral or search work refuse graphs above this order with exit code 2.
SIZE_BUDGET = SIZE_LIMIT

# Full Gamma classification enumerates every permutation with n inversions
# for all m <= 2n; beyond this the sweep stops being interactive.
GAMMA_BUDGET = 6

_NAMED_SETS = ("v1", "e12", "ones")


class _Budget(Exception):
    pass


def _build_graph(kind, a, b):
    if kind == "johnson":
        return johnson_graph(a, b)
    return sr_graph(a, b)


def _check_budget(g):
    if g.order > SIZE_BUDGET:
        raise _Budget(f"graph has {g.order} vertices; budget is {SIZE_BUDGET}")


def cmd_spectrum(args):
    g = _build_graph(args.graph, args.m, args.n)
    _check_budget(g)
    spec = integral_spectrum(g)
    if args.format == "json":
        out = {"graph": args.graph}
        if args.graph == "johnson":
            out["v"], out["n"] = g.params
        else:
            out["m"], out["n"] = g.params
        out["order"] = g.order
        out["spectrum"] = str(spec)
        out["pairs"] = [list(p) for p in spec.pairs]
        print(json.dumps(out))
    else:
        print(spec)
    return EXIT_OK


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = run_suites(names, max_vertices=args.max_vertices)
    failed = False
    for r in reports:
        print(json.dumps(r.to_json()))
        failed = failed or r.status == "fail"
    return EXIT_FAIL if failed else EXIT_OK


def cmd_invariants(args):
    g = sr_graph(args.m, args.n)
    _check_budget(g)
    syms = coordinate_symmetries(g)
    out = {
        "diameter": diameter(g),
        "clique_number": clique_number(g, aut_generators=syms),
        "independence_number": independence_number(g, aut_generators=syms),
        "aut_order": automorphism_count(g),
        "k114_free": not has_induced_k114(g),
    }
    print(json.dumps(out))
    return EXIT_OK


def _parse_permutation(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"--pi expects comma-separated integers, got {text!r}")


def cmd_gamma(args):
    if args.pi is not None:
        pi = _parse_permutation(args.pi)
        g = gamma_graph(len(pi), pi)
        probe = try_integral_spectrum(g)
        out = {
            "m": len(pi), "pi": list(pi), "n": inversion_count(pi),
            "order": g.order, "integral": probe.is_integral,
            "spectrum": (str(probe.spectrum()) if probe.is_integral
                         else {"pairs": [list(p) for p in probe.pairs],
                               "residual": probe.residual}),
        }
        print(json.dumps(out))
        return EXIT_OK
    if args.n > GAMMA_BUDGET:
        raise _Budget(f"classification sweep is budgeted to n <= {GAMMA_BUDGET}")
    for c in classify_gamma(args.n):
        print(json.dumps(c.to_json()))
    return EXIT_OK


def cmd_switch(args):
    g = sr_graph(args.m, args.n)
    _check_budget(g)
    if args.set in _NAMED_SETS:
        b = named_switching_set(g, args.set)
    else:
        try:
            members = tuple(int(x) for x in args.set.split(","))
        except ValueError:
            raise ValueError(
                f"--set expects one of {', '.join(_NAMED_SETS)} or four "
                f"comma-separated vertex indices, got {args.set!r}")
        b = members
    mate = gm_switch(g, b)
    cospectral = str(integral_spectrum(mate)) == str(integral_spectrum(g))
    isomorphic = is_isomorphic(mate, g)
    print(f"graph6: {to_graph6(mate)}")
    print(f"cospectral: {str(cospectral).lower()}")
    print(f"isomorphic: {str(isomorphic).lower()}")
    return EXIT_OK


def cmd_quotient(args):
    g = sr_graph(args.m, args.n)
    _check_budget(g)
    part = weight_partition(g) if args.partition == "weight" else support_partition(g)
    q = check_equitable(g, part)
    spec = quotient_spectrum(q)
    if args.format == "json":
        out = {"partition": args.partition}
        out.update(q.to_json())
        out["spectrum"] = str(spec)
        print(json.dumps(out))
    elif args.format == "csv":
        print(q.to_csv())
    else:
        width = max(len(str(e)) for row in q.entries for e in row)
        for lab, row in zip(q.labels, q.entries):
            cells = " ".join(f"{e:>{width}}" for e in row)
            print(f"{lab}: {cells}")
        print(f"spectrum: {spec}")
    return EXIT_OK


def cmd_export_graph6(args):
    g = _build_graph(args.graph, args.m, args.n)
    _check_budget(g)
    print(to_graph6(g))
    return EXIT_OK


def _add_mn(sub, mname="m", nname="n"):
    sub.add_argument(mname, type=int)
    sub.add_argument(nname, type=int)


def build_parser():
    p = argparse.ArgumentParser(
        prog="rooklab",
        description="Exact spectra and structure of simplicial rook graphs.")
    sp = p.add_subparsers(dest="command", required=True)

    s = sp.add_parser("spectrum", help="exact integer spectrum of SR(m,n) or J(m,n)")
    _add_mn(s)
    s.add_argument("--graph", choices=("sr", "johnson"), default="sr",
                   help="sr: SR(m,n); johnson: J(m,n) on n-subsets of m points")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(fn=cmd_spectrum)

    s = sp.add_parser("verify", help="run the verification battery (JSON lines)")
    s.add_argument("--suite", choices=("all",) + SUITES, default="all")
    s.add_argument("--max-vertices", type=int, default=1000,
                   help="cap parametric sweeps at this order (golden-table "
                        "items always run)")
    s.set_defaults(fn=cmd_verify)

    s = sp.add_parser("invariants", help="diameter, clique and independence "
                                         "numbers, |Aut|, K_{1,1,4}-freeness")
    _add_mn(s)
    s.set_defaults(fn=cmd_invariants)

    s = sp.add_parser("gamma", help="classify the Gamma subgraphs with n "
                                    "inversions, or build one from --pi")
    s.add_argument("n", type=int)
    s.add_argument("--pi", help="comma-separated permutation of 0..m-1; "
                                "overrides the classification sweep")
    s.set_defaults(fn=cmd_gamma)

    s = sp.add_parser("switch", help="Godsil-McKay switch SR(m,n) and report "
                                     "the mate")
    _add_mn(s)
    s.add_argument("--set", required=True,
                   help=f"one of {', '.join(_NAMED_SETS)} or four "
                        "comma-separated vertex indices")
    s.set_defaults(fn=cmd_switch)

    s = sp.add_parser("quotient", help="equitable-partition quotient matrix "
                                       "and its spectrum")
    _add_mn(s)
    s.add_argument("--partition", choices=("support", "weight"),
                   default="support")
    s.add_argument("--format", choices=("text", "json", "csv"), default="text")
    s.set_defaults(fn=cmd_quotient)

    s = sp.add_parser("export-graph6", help="print the graph in graph6 format")
    _add_mn(s)
    s.add_argument("--graph", choices=("sr", "johnson"), default="sr")
    s.set_defaults(fn=cmd_export_graph6)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.fn(args)
        sys.stdout.flush()
        return code
    except (_Budget, SizeLimit, NotSwitchable, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # Consumer closed the pipe (e.g. | head); point stdout at devnull so
        # the interpreter's exit flush stays quiet.
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
