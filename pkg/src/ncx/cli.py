"""Decompose tableaux, enumerate facets and check Tamari orientations.

Exit codes: 0 success, 1 a requested check failed, 2 bad usage or input,
3 instance larger than the resource guard (use --force).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import _pool, geometry, tamari, verify
from .complex import build_complex, enumerate_facets
from .core import check_params, dumps
from .tableaux import Tableau, phi_nc, phi_nn

log = logging.getLogger("ncx")

GUARD = 16
CUBE_GUARD = 6
CHECKS = ("acyclic", "shelling", "lattice", "selfdual", "geom-orientation")


class UsageError(Exception):
    pass


class GuardError(Exception):
    pass


def _params(args, guarded=True):
    try:
        check_params(args.k, args.n)
    except ValueError as e:
        raise UsageError(str(e)) from None
    size = args.k * (args.n - args.k)
    if guarded and size > GUARD and not args.force:
        raise GuardError(f"k(n-k) = {size} exceeds {GUARD}; pass --force to run anyway")


def _emit(obj) -> None:
    sys.stdout.write(obj if isinstance(obj, str) else dumps(obj) + "\n")


def cmd_decompose(args) -> int:
    try:
        with open(args.tableau) as fh:
            data = json.load(fh)
        T = Tableau.from_json(data)
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as e:
        raise UsageError(f"cannot read tableau: {e}") from None
    except ValueError as e:
        raise UsageError(f"invalid tableau: {e}") from None
    for name, want in (("k", T.k), ("n", T.n)):
        given = getattr(args, name)
        if given is not None and given != want:
            raise UsageError(f"--{name} {given} does not match the tableau ({name}={want})")
    L = (phi_nc if args.mode == "nc" else phi_nn)(T)
    _emit(L.to_json(marks=args.marks))
    return 0


def cmd_facets(args) -> int:
    _params(args)
    if args.method == "flip" and args.complex != "nc":
        raise UsageError("--method flip only applies to --complex nc")
    cx = build_complex(args.k, args.n, args.complex)
    facets = enumerate_facets(cx, args.method)
    log.info("%d facets", len(facets))
    _emit([[list(v) for v in F] for F in facets])
    return 0


def _run_checks(D, names) -> dict[str, bool]:
    results = {}
    for name in names:
        if name == "acyclic":
            results[name] = tamari.check_acyclic(D)
        elif name == "shelling":
            order = tamari.topological_order(D) if tamari.check_acyclic(D) else None
            results[name] = order is not None and tamari.check_shelling([D.nodes[i] for i in order])
        elif name == "lattice":
            results[name] = tamari.check_acyclic(D) and tamari.is_lattice(D)
        elif name == "selfdual":
            results[name] = tamari.check_selfdual(D)
        else:
            results[name] = tamari.check_geom_orientation(D)
    return results


def cmd_tamari(args) -> int:
    _params(args)
    names = [c for c in (args.check or "").split(",") if c]
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise UsageError(f"unknown check(s) {', '.join(unknown)}; choose from {', '.join(CHECKS)}")
    D = tamari.build_tamari(args.k, args.n)
    if args.out == "dot":
        _emit(tamari.to_dot(D))
    elif args.out == "json":
        _emit(tamari.to_json(D))
    results = _run_checks(D, names)
    # with an export on stdout the check lines go to stderr
    stream = sys.stderr if args.out else sys.stdout
    for name, ok in results.items():
        print(f"{'PASS' if ok else 'FAIL'} {name}", file=stream)
    return 0 if all(results.values()) else 1


def cmd_verify(args) -> int:
    _params(args)
    report = verify.run(args.k, args.n, args.suite)
    _emit(report)
    for r in report["results"]:
        if r["status"] == "fail":
            log.warning("FAIL %s/%s", r["suite"], r["name"])
    return 0 if report["ok"] else 1


def cmd_cube(args) -> int:
    if args.dim < 1:
        raise UsageError("--dim must be positive")
    if args.dim > CUBE_GUARD and not args.force:
        raise GuardError(f"--dim {args.dim} exceeds {CUBE_GUARD}; pass --force to run anyway")
    if args.diameter:
        _emit(f"{geometry.cube_triangulation_diameter(args.dim, args.triangulation)}\n")
    else:
        simplices = geometry.cube_triangulation(args.dim, args.triangulation)
        _emit([[list(v) for v in s] for s in simplices])
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ncx", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def kn(sp, required=True):
        sp.add_argument("--k", type=int, required=required)
        sp.add_argument("--n", type=int, required=required)
        sp.add_argument("--force", action="store_true", help="ignore the size guard")

    d = sub.add_parser("decompose", help="decompose a tableau into vectors")
    kn(d, required=False)
    d.add_argument("--tableau", required=True, metavar="FILE")
    d.add_argument("--mode", choices=("nn", "nc"), default="nc")
    d.add_argument("--marks", action="store_true", help="include marked positions")
    d.set_defaults(func=cmd_decompose)

    f = sub.add_parser("facets", help="list the facets of a complex")
    kn(f)
    f.add_argument("--complex", choices=("nc", "nn", "sep"), default="nc")
    f.add_argument("--method", choices=("flip", "clique"), default="clique")
    f.set_defaults(func=cmd_facets)

    t = sub.add_parser("tamari", help="export and check the Tamari digraph")
    kn(t)
    t.add_argument("--out", choices=("dot", "json"))
    t.add_argument("--check", help="comma-separated: " + ",".join(CHECKS))
    t.set_defaults(func=cmd_tamari)

    v = sub.add_parser("verify", help="run invariant suites, JSON report")
    kn(v)
    v.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("cube", help="triangulations of the unit cube")
    c.add_argument("--dim", type=int, required=True)
    c.add_argument("--triangulation", choices=("standard", "noncrossing"), default="standard")
    c.add_argument("--diameter", action="store_true", help="print the dual-graph diameter")
    c.add_argument("--force", action="store_true", help="ignore the size guard")
    c.set_defaults(func=cmd_cube)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(name)s: %(message)s",
    )
    try:
        _pool.thread_count()
        return args.func(args)
    except UsageError as e:
        print(f"ncx: error: {e}", file=sys.stderr)
        return 2
    except GuardError as e:
        print(f"ncx: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        print(f"ncx: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
