"""Command-line surface: gen | colour | verify | solve | analyze | export-dot.

Documents flow through stdin/stdout as JSON, so commands compose into
pipelines. Exit codes: 0 certified/solved, 1 counterexample found,
2 budget exhausted or regime unsupported (or a schema error).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions as cons
from . import generators as gen
from . import graph as gr
from . import solver
from .colouring import EdgeColouring
from .document import GraphDocument, document_from_graph, emit, export_dot, parse
from .errors import (
    AttemptsExhausted,
    BudgetExceeded,
    ConstructionRejected,
    InvalidParameter,
    NotInFamily,
    RainbowError,
    RegimeUnsupported,
    ScopeExceeded,
)
from .search import verify_k_rainbow_cycle_colouring, verify_k_rainbow_index_colouring

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_UNSUPPORTED = 2

_FAMILIES = {
    "cycle": (gen.cycle, ("n",)),
    "complete": (gen.complete, ("n",)),
    "complete-bipartite": (gen.complete_bipartite, ("m", "n")),
    "wheel": (gen.wheel, ("n",)),
    "hypercube": (gen.hypercube, ("n",)),
    "petersen": (gen.petersen, ()),
    "path-cycle-join": (gen.path_cycle_join, ("k", "t")),
}


def _parse_params(pairs):
    out = {}
    for item in pairs:
        if "=" not in item:
            raise InvalidParameter(f"expected key=value, got {item!r}")
        key, value = item.split("=", 1)
        if key == "sizes":
            out[key] = tuple(int(x) for x in value.split(","))
        else:
            out[key] = int(value)
    return out


def _read_doc(args) -> GraphDocument:
    if args.input and args.input != "-":
        with open(args.input, "r", encoding="utf-8") as fh:
            return parse(fh.read())
    return parse(sys.stdin.read())


def _write(args, text: str):
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(args, payload: dict):
    _write(args, json.dumps(payload, indent=2, default=_jsonable) + "\n")


def _jsonable(obj):
    if isinstance(obj, (tuple, set, frozenset)):
        return list(obj)
    raise TypeError(f"not JSON-serialisable: {obj!r}")


def cmd_gen(args) -> int:
    params = _parse_params(args.params)
    if args.family == "complete-multipartite":
        g = gen.complete_multipartite(params["sizes"])
        meta = {"family": args.family, "params": {"sizes": list(params["sizes"])}}
    else:
        fn, names = _FAMILIES[args.family]
        missing = [p for p in names if p not in params]
        if missing:
            raise InvalidParameter(f"{args.family} needs parameters {names}")
        g = fn(*(params[p] for p in names))
        meta = {"family": args.family, "params": {p: params[p] for p in names}}
    _write(args, emit(document_from_graph(g, metadata=meta)))
    return EXIT_OK


def _meta_params(doc: GraphDocument) -> dict:
    return dict(doc.metadata.get("params", {}))


def _expect_family(doc: GraphDocument, family: str):
    if doc.metadata.get("family") != family:
        raise InvalidParameter(
            f"construction expects a document generated by 'gen {family}' "
            f"(found metadata {doc.metadata.get('family')!r})"
        )


def cmd_colour(args) -> int:
    doc = _read_doc(args)
    g = doc.graph()
    verify = not args.no_verify
    name = args.construction
    p = _meta_params(doc)
    if name == "wheel":
        _expect_family(doc, "wheel")
        c = cons.colour_wheel(p["n"], args.k, verify=verify, budget=args.budget)
    elif name == "complete-2rainbow":
        _expect_family(doc, "complete")
        c = cons.colour_complete_2rainbow(p["n"], verify=verify, budget=args.budget)
    elif name == "complete-random":
        _expect_family(doc, "complete")
        _need_seed(args)
        c = cons.colour_complete_random(p["n"], args.k, args.seed, args.attempts,
                                        budget=args.budget)
    elif name == "bipartite":
        _expect_family(doc, "complete-bipartite")
        c = cons.colour_bipartite(p["m"], p["n"], args.k, regime=args.regime,
                                  verify=verify, budget=args.budget)
    elif name == "multipartite-blowup":
        _expect_family(doc, "complete-multipartite")
        c = cons.colour_multipartite_blowup(tuple(p["sizes"]), verify=verify,
                                            budget=args.budget)
    elif name == "multipartite-random":
        _expect_family(doc, "complete-multipartite")
        _need_seed(args)
        sizes = tuple(p["sizes"])
        if len(set(sizes)) != 1:
            raise InvalidParameter("multipartite-random needs balanced classes")
        c = cons.colour_balanced_multipartite_random(
            len(sizes), sizes[0], args.k, args.seed, args.attempts, budget=args.budget
        )
    elif name == "cube":
        _expect_family(doc, "hypercube")
        c = cons.colour_cube(p["n"], args.k, verify=verify, budget=args.budget)
    elif name == "cube-recursive":
        _expect_family(doc, "hypercube")
        if args.block is None:
            raise InvalidParameter("cube-recursive needs --block K")
        c = cons.colour_cube_recursive(p["n"], args.k, args.block)
    elif name == "save-one-crx1":
        c = cons.colour_save_one_crx1(g, verify=verify, budget=args.budget)
    elif name == "save-one-crx2":
        c = cons.colour_save_one_crx2(g, verify=verify, budget=args.budget)
    elif name == "join-rxk":
        _expect_family(doc, "path-cycle-join")
        c = cons.colour_join_rxk(p["k"], p["t"], verify=verify, budget=args.budget)
    else:
        raise InvalidParameter(f"unknown construction {name!r}")
    if c.graph != g:
        raise InvalidParameter("document graph does not match the construction's graph")
    meta = dict(doc.metadata)
    meta["construction"] = {"name": name, "k": args.k}
    if args.seed is not None:
        meta["construction"]["seed"] = args.seed
    _write(args, emit(document_from_graph(g, c, metadata=meta)))
    return EXIT_OK


def _need_seed(args):
    if args.seed is None:
        raise InvalidParameter("randomised constructions require an explicit --seed")


def cmd_verify(args) -> int:
    doc = _read_doc(args)
    c = doc.colouring()
    if c is None:
        raise InvalidParameter("document carries no colouring to verify")
    if args.index == "crx":
        report = verify_k_rainbow_cycle_colouring(c, args.k, budget=args.budget,
                                                  workers=args.workers)
    else:
        report = verify_k_rainbow_index_colouring(c, args.k, budget=args.budget)
    _report(args, {
        "command": "verify",
        "index": args.index,
        "k": args.k,
        "status": report.status,
        "bad_set": report.bad_set,
        "subsets_checked": report.subsets_checked,
        "search_nodes": report.search_nodes,
        "colours": c.r,
    })
    return EXIT_OK if report.certified else EXIT_COUNTEREXAMPLE


def _result_payload(res: solver.CrxResult) -> dict:
    payload = {
        "kind": res.kind,
        "lower": res.lower,
        "upper": res.upper,
        "evidence": [{"kind": c.kind, "payload": c.payload} for c in res.evidence],
    }
    if res.kind == "exact":
        payload["value"] = res.lower
    if res.witness is not None:
        payload["witness"] = {"colours": list(res.witness.colour_of), "r": res.witness.r}
    return payload


def cmd_solve(args) -> int:
    doc = _read_doc(args)
    g = doc.graph()
    if args.mode == "exact":
        fn = solver.rx_exact if args.index == "rx" else solver.crx_exact
        res = fn(g, args.k, budget=args.budget, force=args.force)
    else:
        if args.index == "rx":
            raise InvalidParameter("interval mode is available for crx only")
        res = solver.crx_interval(g, args.k, budget=args.budget, seed=args.seed or 0)
    _report(args, {"command": "solve", "index": args.index, "k": args.k,
                   "mode": args.mode, "result": _result_payload(res)})
    if args.mode == "exact" and res.kind != "exact":
        return EXIT_UNSUPPORTED  # budget ran out; interval carries the bounds
    return EXIT_OK


def cmd_analyze(args) -> int:
    doc = _read_doc(args)
    g = doc.graph()
    dec = gr.block_decomposition(g)
    payload = {
        "command": "analyze",
        "n": g.n,
        "e": g.e,
        "blocks": [sorted(b.edge_ids) for b in dec.blocks],
        "cut_vertices": sorted(dec.cut_vertices),
        "is_2_connected": gr.is_k_connected(g, 2) if g.n > 2 else False,
        "is_minimally_2_connected": gr.is_minimally_2_connected(g),
        "in_F1": gr.in_family_Fk(g, 1),
        "in_F2": gr.in_family_Fk(g, 2) if g.n >= 2 else False,
    }
    try:
        inv = gr.graph_invariants(g, budget=args.budget)
        payload.update(girth=inv.girth, circumference=inv.circumference,
                       is_hamiltonian=inv.is_hamiltonian)
        if 3 <= g.n <= 32:
            payload["is_hypohamiltonian"] = gr.is_hypohamiltonian(g, budget=args.budget)
    except BudgetExceeded as exc:
        payload["budget_exhausted"] = True
        if exc.partial:
            payload.update(exc.partial)
    _report(args, payload)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    doc = _read_doc(args)
    _write(args, export_dot(doc))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowcycles",
        description="Construct, verify and exactly solve k-rainbow cycle colourings.",
    )
    parser.add_argument("--input", "-i", default="-", help="input document (default stdin)")
    parser.add_argument("--output", "-o", default="-", help="output file (default stdout)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named graph family")
    p.add_argument("family", choices=sorted(_FAMILIES) + ["complete-multipartite"])
    p.add_argument("params", nargs="*", help="key=value parameters, e.g. n=5 or sizes=1,2,3")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("colour", help="apply a named colouring construction")
    p.add_argument("construction")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--attempts", type=int, default=500)
    p.add_argument("--regime", default="auto", help="bipartite regime override")
    p.add_argument("--block", type=int, default=None, help="K for cube-recursive")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--no-verify", action="store_true")
    p.set_defaults(fn=cmd_colour)

    p = sub.add_parser("verify", help="verify a coloured document")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--index", choices=("crx", "rx"), default="crx")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("solve", help="compute crx/rx exactly or as an interval")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--index", choices=("crx", "rx"), default="crx")
    p.add_argument("--mode", choices=("exact", "interval"), default="exact")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--force", action="store_true", help="ignore the desk-scale guard")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("analyze", help="structural report: blocks, girth, F_k, ...")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("export-dot", help="emit DOT with display colours")
    p.set_defaults(fn=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (RegimeUnsupported, AttemptsExhausted, BudgetExceeded, ScopeExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ConstructionRejected as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    except (NotInFamily, InvalidParameter, RainbowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())
