"""Command line entry point.

Exit codes: 0 finished with nothing to report, 1 usage or parse error,
2 violations, counterexamples or discrepant examples (all re-validated),
3 the dichotomy construction hit a configuration its argument rules out.
"""

from __future__ import annotations

import argparse
import json
import sys

from .aleph import ProofTraceViolation, in_aleph, theorem1_dichotomy
from .cycles import hamiltonian_cycle, is_dominating, longest_cycle
from .enumeration import enumerate_graphs
from .graph import bits, components
from .graph6 import Graph6Error, from_graph6, to_graph6
from .harness import (
    CLAIMS,
    UnknownClaimError,
    Universe,
    audit_dichotomy,
    audit_segments,
    gallery_check,
    hunt,
    verify_claim,
)
from .invariants import format_rational, independence_number, toughness, vertex_connectivity
from .patterns import CATALOG, contains_induced, is_free, pattern

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FOUND = 2
EXIT_PROOF_TRACE = 3


def _fmt_set(mask: int) -> str:
    return "{" + ",".join(map(str, bits(mask))) + "}"


def _check(args) -> int:
    G = from_graph6(args.graph6)
    tau = toughness(G)
    alpha, indep = independence_number(G)
    ham = hamiltonian_cycle(G)
    lc = longest_cycle(G)
    cert = in_aleph(G)
    panel = {
        "graph6": to_graph6(G),
        "n": G.n,
        "m": G.m,
        "components": len(components(G)),
        "alpha": alpha,
        "alpha_witness": list(bits(indep)),
        "kappa": vertex_connectivity(G),
        "tau": format_rational(tau.value),
        "tau_witness": None if tau.witness is None else list(bits(tau.witness)),
        "hamiltonian": ham is not None,
        "hamilton_cycle": None if ham is None else str(ham),
        "longest_cycle": None if lc is None else str(lc),
        "longest_cycle_dominating": None if lc is None else is_dominating(G, lc),
        "in_aleph": cert is not None,
        "aleph_cert": None if cert is None else cert.to_json(),
        "free_of": [p for p in CATALOG if contains_induced(G, p) is None],
    }
    code = EXIT_OK
    if is_free(G, "K1+P2"):
        try:
            res = theorem1_dichotomy(G)
            panel["dichotomy"] = (
                f"hamiltonian: {res.cycle}" if res.hamiltonian
                else f"aleph, independent set {_fmt_set(res.indep)}"
            )
        except ProofTraceViolation as exc:
            panel["dichotomy"] = f"proof-trace violated: {exc} {exc.config}"
            code = EXIT_PROOF_TRACE
    if args.json:
        print(json.dumps(panel, sort_keys=True))
    else:
        width = max(map(len, panel))
        for key, value in panel.items():
            print(f"{key:<{width}}  {value}")
    return code


def _report_code(reports) -> int:
    if any(r.proof_trace_violations for r in reports):
        return EXIT_PROOF_TRACE
    if any(r.failed for r in reports):
        return EXIT_FOUND
    return EXIT_OK


def _emit(reports, as_json: bool) -> None:
    for r in reports:
        print(r.to_json() if as_json else r.to_text())


def _universe(args) -> Universe:
    if args.universe:
        return Universe(path=args.universe, n_max=args.n_max)
    if args.n_max is None:
        raise SystemExit("error: give --n-max or --universe")
    return Universe(n_max=args.n_max)


def _verify(args) -> int:
    if args.claim in ("audit.dichotomy", "audit.segments"):
        fn = audit_dichotomy if args.claim == "audit.dichotomy" else audit_segments
        reports = [fn(_universe(args))]
    elif args.claim.startswith("gallery."):
        reports = [verify_claim(args.claim, None)]
    else:
        reports = [verify_claim(args.claim, _universe(args), jobs=args.jobs)]
    _emit(reports, args.json)
    return _report_code(reports)


def _hunt(args) -> int:
    reports = [hunt(args.conjecture, _universe(args), jobs=args.jobs)]
    _emit(reports, args.json)
    return _report_code(reports)


def _gallery(args) -> int:
    reports = gallery_check()
    _emit(reports, args.json)
    return _report_code(reports)


def _gen(args) -> int:
    patterns = [pattern(p) for p in args.free or []]
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        for G in enumerate_graphs(args.n, args.connected):
            if patterns and not is_free(G, patterns):
                continue
            out.write(to_graph6(G) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hamfree", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="invariant panel for one graph6 string")
    p.add_argument("graph6")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_check)

    def universe_args(p):
        p.add_argument("--n-max", type=int)
        p.add_argument("--universe", help="graph6 file to scan instead of the built-in generator")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--json", action="store_true", help="emit JSON lines")

    p = sub.add_parser("verify", help="verify a theorem claim over a universe")
    p.add_argument("claim", help=", ".join(list(CLAIMS) + ["audit.dichotomy", "audit.segments", "gallery.*"]))
    universe_args(p)
    p.set_defaults(func=_verify)

    p = sub.add_parser("hunt", help="search for counterexamples to a conjecture")
    p.add_argument("conjecture", choices=[c for c in CLAIMS if CLAIMS[c].kind == "conjecture"])
    universe_args(p)
    p.set_defaults(func=_hunt)

    p = sub.add_parser("gallery", help="check the sharpness examples")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_gallery)

    p = sub.add_parser("gen", help="write non-isomorphic graphs as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--free", nargs="+", metavar="PATTERN", help="keep only graphs free of these patterns")
    p.add_argument("--output", "-o")
    p.set_defaults(func=_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (Graph6Error, UnknownClaimError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
