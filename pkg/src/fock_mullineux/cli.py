"""Command-line front end.

Examples:
  fock-mullineux decompose "2^2.1^7" --e 2 --ell 3
  fock-mullineux mullineux "2^2.1^7" --e 2 --ell 3 --format json
  fock-mullineux graph --n 4 --e 3 --families e --format dot -o crystal.gv
  fock-mullineux verify --n 10

Exit status: 0 on success, 1 on domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .adic import (
    SeriesLabel,
    compute_e,
    el_adic_decompose,
    enumerate_fiber,
    hc_label,
    levi_description,
)
from .crystal import CrystalConfig, Family, OperatorId, crystal_graph, generalized_path_to_empty, path_to_empty
from .errors import DomainError, FockError, InvariantError
from .export import emit_dot, emit_json
from .mullineux import (
    acd_dual,
    generalized_mullineux_via_path,
    mullineux,
)
from .partitions import format_modulus, format_partition, is_inf, parse_modulus, parse_partition
from .verify import DEFAULT_PARAMS, verify_suite


class UsageError(FockError):
    pass


def _modulus(text):
    try:
        return parse_modulus(text)
    except FockError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _pair(text):
    try:
        e, ell = text.split(",")
        return _modulus(e), _modulus(ell)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected E,ELL (e.g. 2,3 or 2,inf), got {text!r}")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _ops_json(ops):
    return [op.to_json() for op in ops]


def _require_e(args):
    if args.e is None:
        raise UsageError("--e (or --d) is required")
    if is_inf(args.e):
        raise UsageError("--e must be finite")
    return args.e


def cmd_decompose(args) -> str:
    lam = parse_partition(args.partition)
    dec = el_adic_decompose(lam, _require_e(args), args.ell)
    if args.format == "json":
        return _dump({"input": format_partition(lam), **dec.to_json()})
    lines = [f"{format_partition(lam)}  e={dec.e} ell={format_modulus(dec.ell)}"]
    lines += [f"  lambda({j}) = {format_partition(p)}" for j, p in dec.components()]
    return "\n".join(lines) + "\n"


def cmd_hc(args) -> str:
    e = _require_e(args)
    if args.series is not None:
        m = SeriesLabel.parse(args.series)
        fiber = enumerate_fiber(m, e, args.ell)
        if args.format == "json":
            return _dump({"series": m.to_json(), "levi": levi_description(m, e, args.ell),
                          "partitions": [format_partition(p) for p in fiber]})
        return "".join(format_partition(p) + "\n" for p in fiber)
    if args.partition is None:
        raise UsageError("hc needs a partition or --series")
    lam = parse_partition(args.partition)
    m = hc_label(lam, e, args.ell)
    if args.format == "json":
        return _dump({"input": format_partition(lam), "series": m.to_json(),
                      "levi": levi_description(m, e, args.ell)})
    return f"{m}\n{levi_description(m, e, args.ell)}\n"


def cmd_mullineux(args) -> str:
    lam = parse_partition(args.partition)
    if args.q is not None:
        if args.ell is None or is_inf(args.ell):
            raise UsageError("--q needs a finite prime --ell")
        e = compute_e(args.q, args.ell)
        image = acd_dual(lam, args.q, args.ell)
        if args.format == "json":
            return _dump({"input": format_partition(lam), "q": args.q, "e": e,
                          "ell": args.ell, "image": format_partition(image)})
        return format_partition(image) + "\n"
    e = _require_e(args)
    if args.ell is None:
        image = mullineux(lam, e)
        if args.format == "json":
            path = [OperatorId.level1(i) for i in path_to_empty(lam, e)]
            negated = [OperatorId.level1((-op.i) % e) for op in path]
            return _dump({"input": format_partition(lam), "e": e, "ell": None,
                          "image": format_partition(image),
                          "path": _ops_json(path), "negated_path": _ops_json(negated)})
        return format_partition(image) + "\n"
    res = generalized_mullineux_via_path(lam, e, args.ell)
    if args.format == "json":
        return _dump({"input": format_partition(lam), "e": e, "ell": format_modulus(args.ell) if is_inf(args.ell) else args.ell,
                      "image": format_partition(res.image),
                      "path": _ops_json(res.witness_path), "negated_path": _ops_json(res.negated_path)})
    return format_partition(res.image) + "\n"


def cmd_path(args) -> str:
    lam = parse_partition(args.partition)
    e = _require_e(args)
    if args.ell is None:
        path = path_to_empty(lam, e)
        if args.format == "json":
            return _dump({"input": format_partition(lam), "d": e, "path": list(path)})
        return " ".join(map(str, path)) + "\n"
    ops = generalized_path_to_empty(lam, e, args.ell)
    if args.format == "json":
        return _dump({"input": format_partition(lam), "e": e,
                      "ell": format_modulus(args.ell) if is_inf(args.ell) else args.ell,
                      "path": _ops_json(ops)})
    return " ".join(op.label() for op in ops) + "\n"


def cmd_graph(args) -> str:
    if args.e is None:
        raise UsageError("--e (or --d) is required")
    families = [Family(f.strip()) for f in args.families.split(",") if f.strip()]
    ell = args.ell if args.ell is not None else parse_modulus("inf")
    if Family.L in families and is_inf(ell):
        raise UsageError("family 'l' needs a finite --ell")
    if Family.L in families or Family.INF in families:
        if is_inf(args.e):
            raise UsageError("families 'l' and 'inf' need a finite --e")
    graph = crystal_graph(args.n, CrystalConfig(args.e, ell), families)
    return emit_json(graph) if args.format == "json" else emit_dot(graph)


def cmd_verify(args) -> tuple[str, int]:
    params = args.params or list(DEFAULT_PARAMS)
    report = verify_suite(args.n, params)
    if args.format == "json":
        out = _dump({"n": report.n_max, "ok": report.ok, "properties": [
            {"name": r.name, "params": r.params, "instances": r.instances, "failures": len(r.failures)}
            for r in report.results]})
    else:
        out = report.render()
    return out, 0 if report.ok else 1


def cmd_e_of_q(args) -> str:
    e = compute_e(args.q, args.ell)
    if args.format == "json":
        return _dump({"q": args.q, "ell": args.ell, "e": e})
    return f"{e}\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fock-mullineux", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("-o", "--output", help="write to this file instead of standard output")

    def moduli(p, ell=True):
        p.add_argument("--e", "--d", dest="e", type=_modulus, help="modulus e (alias --d)")
        if ell:
            p.add_argument("--ell", type=_modulus, help="second modulus ℓ (integer or inf)")

    p = sub.add_parser("decompose", help="e-ℓ-adic decomposition")
    p.add_argument("partition")
    moduli(p)
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("hc", help="Harish-Chandra series label, or list a series with --series")
    p.add_argument("partition", nargs="?")
    p.add_argument("--series", help="series label, e.g. 1,2,1")
    moduli(p)
    common(p)
    p.set_defaults(func=cmd_hc)

    p = sub.add_parser("mullineux", help="M_d, M_{e,ℓ}, or the Alvis-Curtis dual label (--q)")
    p.add_argument("partition")
    moduli(p)
    p.add_argument("--q", type=int)
    common(p)
    p.set_defaults(func=cmd_mullineux)

    p = sub.add_parser("path", help="crystal path from the empty partition")
    p.add_argument("partition")
    moduli(p)
    common(p)
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("graph", help="crystal graph up to rank n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--families", default="e", help="comma list of e, l, inf")
    moduli(p)
    common(p, ("dot", "json"))
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run every property exhaustively up to rank n")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--params", type=_pair, action="append", help="E,ELL pair; repeatable")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("e-of-q", help="e from (q, ℓ)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_e_of_q)
    return parser


def run_command(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except (DomainError, InvariantError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FockError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text, status = result if isinstance(result, tuple) else (result, 0)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
