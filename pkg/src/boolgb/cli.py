"""Command line interface.

Exit codes: 0 success, 1 verification mismatch, 2 input error, 3 safety
cap hit (round or degree limit).
"""

from __future__ import annotations

import argparse
import csv
import os
import sys

from .buchberger import buchberger, gb_equal
from .engine import EngineAbort, EngineConfig, gvw_run, mgvw_run
from .monomials import mono_str, reduce_basis
from .signatures import sig_str
from .systems import (
    RandomSpec,
    emit_basis,
    emit_stats,
    gen_random,
    parse_system,
    system_str,
)


def _read_system(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        print("error: %s" % e, file=sys.stderr)
        return None
    try:
        return parse_system(text)
    except ValueError as e:
        print("error: %s: %s" % (path, e), file=sys.stderr)
        return None


def _trace_writer(fh):
    def hook(ev):
        sig = "-" if ev.sig is None else sig_str(ev.sig)
        lm = "-" if ev.lm is None else mono_str(ev.lm)
        poly = "-" if ev.poly is None else str(ev.poly)
        fh.write("%s\t%s\t%d\t%s\t%s\n" % (sig, lm, ev.degree, ev.action,
                                           poly))
    return hook


def _cmd_gb(args) -> int:
    system = _read_system(args.input)
    if system is None:
        return 2
    trace_fh = None
    cfg = EngineConfig(algo=args.algo, deg_limit=args.deg_limit,
                       n_vars=system.n_vars, max_degree=args.max_degree)
    if args.trace:
        trace_fh = open(args.trace, "w", encoding="utf-8")
        cfg.trace = _trace_writer(trace_fh)
    run = mgvw_run if args.algo == "mgvw" else gvw_run
    try:
        basis, stats = run(system.polys, cfg)
    except EngineAbort as e:
        print("aborted: %s" % e, file=sys.stderr)
        return 3
    finally:
        if trace_fh:
            trace_fh.close()
    if args.reduce:
        basis = reduce_basis(basis)
    sys.stdout.write(emit_basis(basis, system.n_vars))
    if args.stats:
        with open(args.stats, "w", encoding="utf-8") as fh:
            fh.write(emit_stats(stats))
    return 0


def _cmd_verify(args) -> int:
    system = _read_system(args.input)
    if system is None:
        return 2
    cfg = EngineConfig(n_vars=system.n_vars, max_degree=args.max_degree)
    try:
        basis_g, _ = gvw_run(system.polys, cfg)
        basis_m, _ = mgvw_run(system.polys, cfg)
    except EngineAbort as e:
        print("aborted: %s" % e, file=sys.stderr)
        return 3
    basis_b = buchberger(system.polys)
    ok_m = gb_equal(basis_g, basis_m)
    ok_b = gb_equal(basis_g, basis_b)
    if ok_m and ok_b:
        reduced = reduce_basis(basis_g)
        print("ok: gvw, mgvw and buchberger agree"
              " (reduced basis size %d)" % len(reduced))
        return 0
    if not ok_m:
        print("mismatch: gvw and mgvw reduced bases differ", file=sys.stderr)
    if not ok_b:
        print("mismatch: gvw and buchberger reduced bases differ",
              file=sys.stderr)
    return 1


def _cmd_gen(args) -> int:
    try:
        system = gen_random(RandomSpec(args.vars, args.polys, args.degree,
                                       args.density, args.seed))
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    text = system_str(system)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_bench(args) -> int:
    from .plots import save_bench_figures

    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        print("error: --sizes expects comma-separated integers",
              file=sys.stderr)
        return 2
    if not sizes:
        print("error: --sizes is empty", file=sys.stderr)
        return 2
    os.makedirs(args.out_dir, exist_ok=True)
    records = []
    for n in sizes:
        try:
            system = gen_random(RandomSpec(n, n, args.degree, args.density,
                                           args.seed))
        except ValueError as e:
            print("error: %s" % e, file=sys.stderr)
            return 2
        for algo, run in (("gvw", gvw_run), ("mgvw", mgvw_run)):
            cfg = EngineConfig(n_vars=n)
            try:
                basis, stats = run(system.polys, cfg)
            except EngineAbort as e:
                print("aborted at n=%d (%s): %s" % (n, algo, e),
                      file=sys.stderr)
                return 3
            records.append({
                "n": n,
                "algo": algo,
                "wall_ms": round(stats.wall_ms, 3),
                "rounds": len(stats.rounds),
                "max_rows": stats.max_matrix.rows,
                "max_cols": stats.max_matrix.cols,
                "max_degree": stats.max_matrix.degree,
                "mutants": stats.mutants_appended,
                "basis_size": stats.basis_size,
                "reduced_basis_size": stats.reduced_basis_size,
            })
    csv_path = os.path.join(args.out_dir, "bench.csv")
    fields = ["n", "algo", "wall_ms", "rounds", "max_rows", "max_cols",
              "max_degree", "mutants", "basis_size", "reduced_basis_size"]
    with open(csv_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields)
        writer.writeheader()
        writer.writerows(records)
    paths = [csv_path] + save_bench_figures(records, args.out_dir)
    for p in paths:
        print(p)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boolgb",
        description="Groebner bases over boolean polynomial rings")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", help="compute a Groebner basis")
    p.add_argument("input", metavar="INPUT", help="system file")
    p.add_argument("--algo", choices=("gvw", "mgvw"), default="gvw")
    p.add_argument("--deg-limit", type=int, default=4,
                   help="degree bound for promoting mutants (mgvw)")
    p.add_argument("--stats", metavar="FILE", help="write run statistics")
    p.add_argument("--trace", metavar="FILE", help="write a decision trace")
    p.add_argument("--reduce", action="store_true",
                   help="emit the reduced basis")
    p.add_argument("--max-degree", type=int, default=None,
                   help="abort once any J-pair exceeds this degree")
    p.set_defaults(func=_cmd_gb)

    p = sub.add_parser("verify",
                       help="cross-check gvw, mgvw and buchberger")
    p.add_argument("input", metavar="INPUT", help="system file")
    p.add_argument("--max-degree", type=int, default=None,
                   help="abort once any J-pair exceeds this degree")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="generate a random system")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--polys", type=int, required=True)
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench",
                       help="benchmark gvw vs mgvw, write csv and figures")
    p.add_argument("--sizes", default="4,6,8",
                   help="comma-separated variable counts")
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
