"""Command-line interface: ``streamsparse {generate,sparsify,eval,mincut,strength}``.

Exit status is 0 on success, 2 when a verdict fails and 1 on usage or
input errors.  All randomness is controlled by ``--seed``.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from .edgelist import (
    build_graph,
    format_edge_list,
    format_stream,
    format_weight,
    load_graph,
    parse_weight,
    read_edge_list,
)
from .graph import DomainError, min_cut
from .harness import check_ek_bound, eval_exhaustive, eval_mincut, eval_sampled
from .offline import sparsify_offline
from .stream import SparsifyConfig, resolve_rho, run_stream, space_report_json
from .streamkit import FAMILIES, ORDERS, StreamSpec, generate
from .strength import strength_brute, strength_certificate, strength_exact

EXIT_OK, EXIT_ERROR, EXIT_FAIL = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _rational(text):
    try:
        return parse_weight(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _decisions_text(decisions):
    lines = [f"{d.edge_id} {format_weight(d.c_e)} {format_weight(d.p_e)} {int(d.kept)}" for d in decisions]
    return "\n".join(lines) + ("\n" if lines else "")


def cmd_generate(args):
    params = {"n": args.n, "p": args.p, "block": args.block, "cut": args.cut, "left": args.left,
              "p_in": args.p_in, "epsilon": args.epsilon}
    if args.degrees:
        params["degrees"] = [int(x) for x in args.degrees.split(",")]
    params = {k: v for k, v in params.items() if v is not None}
    spec = StreamSpec(args.family, params, args.order, args.seed)
    _write(args.output, format_stream(spec.n, generate(spec)))
    return EXIT_OK


def cmd_sparsify(args):
    n, entries = read_edge_list(_read(args.input))
    m_max = args.m_max
    cfg = SparsifyConfig(
        epsilon=args.epsilon, n=n, d=args.d, m_max=m_max, rho_override=args.rho_override,
        seed=args.seed, strength_mode=args.strength_mode, exact=not args.float,
    )
    status = EXIT_OK
    if args.offline:
        g, _ = build_graph(n, entries, exact=cfg.exact)
        rho = resolve_rho(cfg)
        h, decisions = sparsify_offline(g, rho, args.seed)
        report = {"schema": 1, "mode": "offline", "edges": h.m, "rho": format_weight(rho)}
    else:
        if any(w != 1 for _, _, w in entries):
            raise DomainError("stream arrivals must have weight 1; expand integer weights first")
        state = run_stream(cfg, [(u, v) for u, v, _ in entries])
        h, decisions = state.H, state.decisions
        ek = check_ek_bound(state)
        report = {"schema": 1, "mode": "stream", **space_report_json(state),
                  "ek_weight_bound": "pass" if all(ek.values()) else "fail",
                  "self_loops": state.self_loops, "warnings": state.warnings}
        if not all(ek.values()):
            status = EXIT_FAIL
    _write(args.output, format_edge_list(h, weights=True))
    if args.decisions:
        _write(args.decisions, _decisions_text(decisions))
    if args.report:
        _write(args.report, json.dumps(report, indent=2, sort_keys=True) + "\n")
    return status


def cmd_eval(args):
    g = load_graph(_read(args.graph))
    h = load_graph(_read(args.sparsifier))
    if args.sampled is not None:
        rep = eval_sampled(g, h, args.epsilon, args.sampled, args.seed)
    else:
        rep = eval_exhaustive(g, h, args.epsilon)
    out = rep.to_json()
    out.pop("runtime_seconds")
    text = json.dumps(out, indent=2, sort_keys=True) + "\n"
    _write(args.report or "-", text)
    return EXIT_OK if rep.passed and rep.handshake else EXIT_FAIL


def cmd_mincut(args):
    g = load_graph(_read(args.graph))
    if args.against:
        h = load_graph(_read(args.against))
        res = eval_mincut(g, h)
        out = {"exact": format_weight(res["exact"]), "via_sparsifier": format_weight(res["via_sparsifier"]),
               "ratio": format_weight(res["ratio"]), "side": sorted(res["cut_H"].side)}
        if args.epsilon is not None:
            eps = Fraction(args.epsilon)
            out["bound"] = format_weight((1 + eps) / (1 - eps))
            status = EXIT_OK if res["ratio"] <= (1 + eps) / (1 - eps) else EXIT_FAIL
        else:
            status = EXIT_OK
    else:
        cut, value = min_cut(g)
        out = {"value": format_weight(value), "side": sorted(cut.side)}
        status = EXIT_OK
    print(json.dumps(out, sort_keys=True))
    return status


def cmd_strength(args):
    g = load_graph(_read(args.graph))
    fn = {"exact": strength_exact, "certificate": strength_certificate, "brute": strength_brute}[args.mode]
    smap = fn(g)
    _write(args.output, "".join(f"{eid} {format_weight(s)}\n" for eid, s in sorted(smap.strengths.items())))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="streamsparse", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gp = sub.add_parser("generate", help="write a generated edge stream")
    gp.add_argument("--family", choices=FAMILIES, required=True)
    gp.add_argument("--n", type=int)
    gp.add_argument("--p", type=float, help="edge probability (gnp)")
    gp.add_argument("--block", type=int, help="block size (barbell)")
    gp.add_argument("--cut", type=int, help="planted cut size (planted_cut)")
    gp.add_argument("--left", type=int, help="left block size (planted_cut)")
    gp.add_argument("--p-in", type=float, help="in-block edge probability (planted_cut)")
    gp.add_argument("--epsilon", type=float, help="ladder parameter (lowerbound_bipartite)")
    gp.add_argument("--degrees", help="comma-separated left degrees (lowerbound_bipartite)")
    gp.add_argument("--order", choices=ORDERS, default="as_generated")
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("-o", "--output")
    gp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("sparsify", help="sparsify an edge list (stream order = file order)")
    sp.add_argument("input", nargs="?", default="-")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--stream", dest="offline", action="store_false")
    mode.add_argument("--offline", dest="offline", action="store_true")
    sp.add_argument("--epsilon", type=_rational, default=Fraction(1, 2))
    sp.add_argument("--d", type=_rational, default=Fraction(1))
    sp.add_argument("--m-max", type=int)
    sp.add_argument("--rho-override", type=_rational)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--strength-mode", choices=("exact", "certificate"), default="exact")
    sp.add_argument("--float", action="store_true", help="float weights instead of exact rationals")
    sp.add_argument("-o", "--output")
    sp.add_argument("--decisions", help="write 'edge_id c_e p_e kept' lines here")
    sp.add_argument("--report", help="write the JSON space report here")
    sp.set_defaults(func=cmd_sparsify, offline=False)

    ep = sub.add_parser("eval", help="measure cut errors of a sparsifier")
    ep.add_argument("graph")
    ep.add_argument("sparsifier")
    how = ep.add_mutually_exclusive_group()
    how.add_argument("--exhaustive", action="store_true")
    how.add_argument("--sampled", type=int, metavar="N")
    ep.add_argument("--epsilon", type=float, default=0.5)
    ep.add_argument("--seed", type=int, default=0)
    ep.add_argument("--report")
    ep.set_defaults(func=cmd_eval)

    mp = sub.add_parser("mincut", help="exact minimum cut, or the sparsifier's min cut judged in G")
    mp.add_argument("graph")
    mp.add_argument("--against", metavar="SPARSIFIER")
    mp.add_argument("--epsilon", type=_rational)
    mp.set_defaults(func=cmd_mincut)

    tp = sub.add_parser("strength", help="print 'edge_id strength' lines")
    tp.add_argument("graph")
    tp.add_argument("--mode", choices=("exact", "certificate", "brute"), default="exact")
    tp.add_argument("-o", "--output")
    tp.set_defaults(func=cmd_strength)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (DomainError, OSError) as exc:
        print(f"streamsparse: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
