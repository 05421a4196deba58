"""Command-line entry point.

Exit codes: 0 success, 1 parse or validation failure, 2 mathematical
inconsistency (Zariski violation, genus not conserved), 3 no consistent
descent or a search bound exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import local, numerology
from .basechange import apply_base_change, search_descent, total_multiplicity_lcm
from .dot import emit_dot
from .enumeration import enumerate_stable_graphs
from .errors import StableReductionError
from .fiberfile import dumps_fiber, parse_descent, parse_fiber
from .model import (
    FiberConfiguration,
    arithmetic_genus,
    component_invariants,
    id_order,
    require_valid,
    validate_configuration,
)
from .pipeline import check_zariski, reduce_fiber
from .stabilize import stabilize
from .trace import MoveTrace


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")


def _load(path: str) -> FiberConfiguration:
    return parse_fiber(_read(path))


def _emit_artifacts(args, config: FiberConfiguration, trace: MoveTrace | None = None) -> None:
    _write(getattr(args, "output", None), dumps_fiber(config))
    if trace is not None:
        _write(getattr(args, "trace", None), trace.dumps())
    if getattr(args, "dot", None):
        _write(args.dot, emit_dot(config))


def _print_trace(trace: MoveTrace) -> None:
    print(f"moves: {len(trace)}")
    for line in trace.dumps().splitlines():
        print(f"  {line}")


def cmd_validate(args) -> int:
    config = _load(args.file)
    report = validate_configuration(config)
    if report.valid:
        print(f"valid: {len(config.components)} components, {len(config.nodes)} nodes, "
              f"arithmetic genus {arithmetic_genus(config)}")
        return 0
    print("invalid:")
    for issue in report.issues:
        print(f"  {issue}")
    return 1


def cmd_invariants(args) -> int:
    config = _load(args.file)
    require_valid(config)
    inv = component_invariants(config)
    print(f"{'id':<16} {'g':>3} {'n':>3} {'E^2':>5} {'K.E':>5} {'val':>4} {'deg w':>6}")
    for c in sorted(config.components, key=lambda c: id_order(c.id)):
        v = inv[c.id]
        print(f"{c.id:<16} {c.genus:>3} {c.multiplicity:>3} {v.self_intersection:>5} "
              f"{v.canonical_pairing:>5} {v.valence:>4} {v.dualizing_degree:>6}")
    print(f"arithmetic genus: {arithmetic_genus(config)}")
    return 0


def _descent_for(args, config):
    if args.descent:
        descent = parse_descent(_read(args.descent))
        if args.N is not None and args.N != descent.N:
            raise StableReductionError(f"--N {args.N} conflicts with descent N={descent.N}")
        return descent, 1
    N = args.N if args.N is not None else total_multiplicity_lcm(config)
    found = search_descent(config, N, args.max_results)
    return found[0], len(found)


def cmd_basechange(args) -> int:
    config = _load(args.file)
    check_zariski(config)
    require_valid(config)
    descent, count = _descent_for(args, config)
    out, trace = apply_base_change(config, descent)
    print(f"base change N={descent.N}; descent candidates found: {count} (using #1)")
    print(f"components: {len(config.components)} -> {len(out.components)}; "
          f"arithmetic genus {arithmetic_genus(config)} -> {arithmetic_genus(out)}")
    _print_trace(trace)
    _emit_artifacts(args, out, trace)
    return 0


def cmd_stabilize(args) -> int:
    config = _load(args.file)
    out, trace = stabilize(config)
    print(f"stable model: {len(out.components)} components, {len(out.nodes)} nodes, "
          f"arithmetic genus {arithmetic_genus(out)}")
    _print_trace(trace)
    _emit_artifacts(args, out, trace)
    return 0


def cmd_reduce(args) -> int:
    config = _load(args.file)
    descent = parse_descent(_read(args.descent)) if args.descent else None
    result = reduce_fiber(config, N=args.N, descent=descent, max_results=args.max_results)
    print(f"base change N={result.descent.N}; descent candidates found: {result.descent_candidates} (using #1)")
    print("genus audit: " + ", ".join(f"{name}={pa}" for name, pa in result.genus_audit))
    final = result.final
    print(f"stable model: {len(final.components)} components, {len(final.nodes)} nodes, "
          f"stable={'yes' if result.stability.stable else 'no'}")
    for c in sorted(final.components, key=lambda c: id_order(c.id)):
        print(f"  {c.id} genus={c.genus} self-nodes={final.loops(c.id)}")
    _print_trace(result.trace)
    _emit_artifacts(args, final, result.trace)
    return 0


def cmd_numerology(args) -> int:
    rec = numerology.genus_formulas(args.genus)
    for key, value in rec.items():
        print(f"{key}={str(value).lower() if isinstance(value, bool) else value}")
    if args.hilbert is not None:
        print(f"hilbert_polynomial({args.hilbert})={numerology.hilbert_polynomial(args.genus, args.hilbert)}")
    return 0


def cmd_enumerate(args) -> int:
    forms = enumerate_stable_graphs(args.genus, args.max_vertices)
    text = "".join(f.decode() + "\n" for f in forms)
    sys.stdout.write(text)
    print(f"# {len(forms)} stable graphs of genus {args.genus} with at most {args.max_vertices} vertices")
    _write(args.output, text)
    return 0


def cmd_dot(args) -> int:
    text = emit_dot(_load(args.file))
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_local(args) -> int:
    if args.what == "node":
        r = local.node_base_change(args.a, args.b, args.N)
        print(f"branches={r.branch_count} alpha={r.alpha} beta={r.beta} m={r.chain_exponent} "
              f"chain_length={r.chain_length} singularity={r.singularity_label}")
    elif args.what == "split":
        r = local.split_smooth_point(args.a, args.N)
        print(f"sheets={r.sheet_count} exponent={r.sheet_exponent} multiplicity={r.resulting_multiplicity}")
    else:
        r = local.normalization_witness(args.a, args.b)
        line = f"injective={'true' if r.injective else 'false'}"
        if r.witness is not None:
            zeta, xi = r.witness
            line += f" witness=({local.format_root(zeta)}, {local.format_root(xi)})"
        print(line)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stabred", description="Stable reduction of numerical fiber models.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fiber_cmd(name, func, help_text, outputs=True, descent=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")
        if outputs:
            p.add_argument("-o", dest="output", metavar="FILE", help="write the resulting fiber")
            p.add_argument("--trace", metavar="FILE", help="write the move trace")
            p.add_argument("--dot", metavar="FILE", help="write the result as Graphviz DOT")
        if descent:
            p.add_argument("--N", type=int, help="base change order (default: lcm of multiplicities)")
            p.add_argument("--descent", metavar="FILE", help="explicit descent data")
            p.add_argument("--max-results", type=int, default=8, help="descent candidates to search for")
        p.set_defaults(func=func)
        return p

    fiber_cmd("validate", cmd_validate, "check a fiber file", outputs=False)
    fiber_cmd("invariants", cmd_invariants, "print intersection numbers", outputs=False)
    fiber_cmd("basechange", cmd_basechange, "apply the base change t -> t^N", descent=True)
    fiber_cmd("stabilize", cmd_stabilize, "contract unstable rational components")
    fiber_cmd("reduce", cmd_reduce, "full stable reduction", descent=True)

    p = sub.add_parser("dot", help="render a fiber as Graphviz DOT")
    p.add_argument("file")
    p.add_argument("-o", dest="output", metavar="FILE")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("numerology", help="closed-form numbers for genus g")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--hilbert", type=int, metavar="n")
    p.set_defaults(func=cmd_numerology)

    p = sub.add_parser("enumerate", help="list stable graphs of genus g")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("-o", dest="output", metavar="FILE")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("local", help="local models at a point of the central fiber")
    lsub = p.add_subparsers(dest="what", required=True, parser_class=_Parser)
    q = lsub.add_parser("node", help="node between multiplicities a and b")
    q.add_argument("a", type=int)
    q.add_argument("b", type=int)
    q.add_argument("N", type=int)
    q = lsub.add_parser("split", help="smooth point of multiplicity a")
    q.add_argument("a", type=int)
    q.add_argument("N", type=int)
    q = lsub.add_parser("witness", help="injectivity of the normalization map")
    q.add_argument("a", type=int)
    q.add_argument("b", type=int)
    p.set_defaults(func=cmd_local)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StableReductionError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
