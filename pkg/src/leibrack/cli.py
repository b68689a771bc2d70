"""Command line front end.

Every SOURCE argument is either a path to a JSON definition file or the name
of a built-in structure (``leibrack list`` shows them).  Exit status: 0 when
all checks pass, 1 on an axiom or invariant failure, 2 on unreadable or
malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from . import builtins as bi
from . import io
from . import pipelines as pl
from .digroup import MAX_BACKTRACK_ORDER, MAX_ENUM_ORDER, InvariantBreach
from .leibniz import check_dialgebra, check_leibniz
from .lierack import STEP_AD, STEP_PHI, TOL_BRACKET
from .rack import DEFAULT_SEED, DEFAULT_TOL_RACK, MAX_EXHAUSTIVE_SIZE, check_rack, closed_form_dtwist_rack
from .report import AxiomError, Report

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _resolve(source: str, kind: str):
    if Path(source).exists():
        try:
            return io.load(source, kind)
        except (io.SchemaError, ValueError) as exc:
            raise InputError(f"{source}: {exc}") from exc
    if source in bi.BUILTINS.get(kind, {}):
        return bi.get(kind, source)
    raise InputError(f"{source!r} is neither a readable file nor a built-in {kind} "
                     f"(built-ins: {', '.join(bi.names(kind))})")


def _emit(report: Report, args, extra: str = "") -> int:
    if args.json:
        print(report.to_json())
    else:
        print(report.render(max_witnesses=args.witnesses))
        if extra:
            print(extra)
    return EXIT_OK if report.passed else EXIT_FAIL


def _fail_report(exc: AxiomError, subject: str) -> Report:
    if exc.report is not None:
        rep = Report(subject, list(exc.report.checks), dict(exc.report.data))
    else:
        rep = Report(subject)
    rep.add("precondition", [str(exc)])
    return rep


# -- commands --------------------------------------------------------------------

def cmd_check(args) -> int:
    obj = _resolve(args.source, args.kind)
    if args.kind == "leibniz":
        rep = check_leibniz(obj, args.tol if args.tol is not None else 1e-9)
    elif args.kind == "dialgebra":
        rep = check_dialgebra(obj, args.tol if args.tol is not None else 1e-9)
    elif args.kind == "rack":
        rep = check_rack(obj, max_size=args.max_size)
    else:
        from .digroup import check_digroup

        rep = check_digroup(obj)
    rep.subject = f"{args.kind} {args.source}"
    return _emit(rep, args)


def cmd_analyze(args) -> int:
    g = _resolve(args.source, "leibniz")
    ideals = []
    for i, path in enumerate(args.ideal or []):
        try:
            sub = io.load(path, "subspace")
        except io.SchemaError as exc:
            raise InputError(str(exc)) from exc
        if sub.ambient_dim != g.dim:
            raise InputError(f"{path}: ambient dimension {sub.ambient_dim} does not match algebra dim {g.dim}")
        ideals.append((f"ideal {i + 1} ({Path(path).name})", sub))
    try:
        rep = pl.analyze(g, ideals, subject=args.source)
    except AxiomError as exc:
        return _emit(_fail_report(exc, f"analyze {args.source}"), args)
    extra = ""
    if not args.json:
        lines = [f"dim S = {rep.data['dim_S']}   basis {rep.data['S']}",
                 f"dim ker(ad) = {rep.data['dim_ker_ad']}   basis {rep.data['ker_ad']}"]
        for c in rep.data["candidates"]:
            verdict = {True: "yes", False: "no splitting", None: "not attempted"}[c["splits"]]
            lines.append(f"over {c['label']} (dim {c['dim']}): {c['sandwich']}; splits: {verdict}")
            if c.get("complement"):
                lines.append(f"    complement basis {c['complement']}")
        extra = "\n".join(lines)
    return _emit(rep, args, extra)


def cmd_digroup(args) -> int:
    g = _resolve(args.source, "digroup")
    try:
        if args.action == "decompose":
            rep = pl.decompose_report(g, args.source)
            extra = ""
            if rep.passed and not args.json:
                d = rep.data
                rows = "\n".join(f"    ({u}, {h}) -> {x}" for u, h, x in d["theta"])
                extra = (f"|E| = {len(d['E'])}  E = {d['E']}\n|J| = {len(d['J'])}  J = {d['J']} ({d['J_type']})\n"
                         f"theta(u, h) = u -| h:\n{rows}")
            return _emit(rep, args, extra)
        if args.action == "suite":
            return _emit(pl.suite_report(g, args.source), args)
        rep, rack = pl.induced_rack_report(g, args.source)
    except AxiomError as exc:
        return _emit(_fail_report(exc, f"digroup {args.action} {args.source}"), args)
    except InvariantBreach as exc:
        rep = Report(f"digroup {args.action} {args.source}")
        rep.add("invariant", [str(exc)])
        return _emit(rep, args)
    if args.out:
        io.save(rack, args.out)
        return _emit(rep, args, f"induced rack written to {args.out}")
    if not rep.passed:
        return _emit(rep, args)
    print(io.dumps(rack))
    return EXIT_OK


def cmd_diff(args) -> int:
    step = args.step if args.step is not None else STEP_PHI
    tol = args.tol if args.tol is not None else TOL_BRACKET
    if args.source in bi.EXPAD_MODELS and not Path(args.source).exists():
        g = bi.EXPAD_MODELS[args.source]()
        closed = closed_form_dtwist_rack if args.source == "heisenberg-dtwist" else None
        rep = pl.expad_report(g, seed=args.seed, step_phi=step, step_ad=args.step_ad, tol_bracket=tol,
                              closed_form=closed, subject=args.source)
    else:
        model = _resolve(args.source, "model")
        try:
            rep = pl.diff_report(model, seed=args.seed, step_phi=step, step_ad=args.step_ad, tol_bracket=tol)
        except AxiomError as exc:
            return _emit(_fail_report(exc, f"diff {args.source}"), args)
    extra = ""
    if not args.json:
        extra = "estimated structure constants [i][j] -> [e_i, e_j]:\n" + _format_tensor(rep.data["structure_constants"])
    return _emit(rep, args, extra)


def _format_tensor(c) -> str:
    lines = []
    n = len(c)
    for i in range(n):
        for j in range(n):
            v = c[i][j]
            if max(abs(x) for x in v) > 1e-6:
                lines.append(f"    [{i},{j}] = [" + ", ".join(f"{x:+.6f}" for x in v) + "]")
    return "\n".join(lines) if lines else "    (all brackets zero)"


def cmd_expad(args) -> int:
    g = _resolve(args.source, "leibniz")
    closed = closed_form_dtwist_rack if args.source == "heisenberg-dtwist" else None
    step = args.step if args.step is not None else STEP_PHI
    try:
        rep = pl.expad_report(g, seed=args.seed, tol_rack=args.tol if args.tol is not None else DEFAULT_TOL_RACK,
                              n_triples=args.samples, step_phi=step, step_ad=args.step_ad,
                              closed_form=closed, subject=args.source)
    except AxiomError as exc:
        return _emit(_fail_report(exc, f"expad {args.source}"), args)
    return _emit(rep, args)


def cmd_enumerate(args) -> int:
    if not 1 <= args.order <= MAX_ENUM_ORDER:
        raise InputError(f"order must be between 1 and {MAX_ENUM_ORDER}")
    rep = pl.enumerate_report(args.order)
    extra = ""
    if not args.json:
        d = rep.data
        lines = [f"digroups of order {d['order']} up to isomorphism: {d['count']}"]
        lines += [f"    |E| x |J| = {k}: {v}" for k, v in d["by_factorization"].items()]
        if "backtracking" not in d:
            lines.append(f"    (backtracking cross-check only runs up to order {MAX_BACKTRACK_ORDER})")
        extra = "\n".join(lines)
    return _emit(rep, args, extra)


def cmd_list(args) -> int:
    kinds = [args.kind] if args.kind else sorted(bi.BUILTINS)
    out = {k: bi.names(k) for k in kinds}
    out.setdefault("model", bi.names("model"))
    if not args.kind or args.kind == "model":
        out["model"] = sorted(set(out["model"]) | set(bi.EXPAD_MODELS))
    if args.json:
        print(json.dumps(out))
    else:
        for k, v in out.items():
            print(f"{k}: {', '.join(v)}")
    return EXIT_OK


# -- parser ----------------------------------------------------------------------

def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=d(False), help="machine-readable JSON report")
    p.add_argument("--seed", type=int, default=d(DEFAULT_SEED), help="seed for sampled checks")
    p.add_argument("--step", type=float, default=d(None), help=f"finite-difference step (default {STEP_PHI:g})")
    p.add_argument("--step-ad", type=float, default=d(STEP_AD), help="outer step of the second difference")
    p.add_argument("--tol", type=float, default=d(None), help="override the check tolerance")
    p.add_argument("--ideal", action="append", default=d(None), metavar="FILE",
                   help="subspace file to try as an ideal (analyze; repeatable)")
    p.add_argument("--witnesses", type=int, default=d(3), help="witnesses printed per failing check")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="leibrack", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check the axioms of a structure")
    p.add_argument("kind", choices=["leibniz", "rack", "digroup", "dialgebra"])
    p.add_argument("source")
    p.add_argument("--max-size", type=int, default=MAX_EXHAUSTIVE_SIZE, help="cap for exhaustive rack checks")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("analyze", help="squares ideal, ker(ad) and splittings of a Leibniz algebra")
    p.add_argument("source")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("digroup", help="decompose a digroup, emit its induced rack, or run the lemma suite")
    p.add_argument("action", choices=["decompose", "rack", "suite"])
    p.add_argument("source")
    p.add_argument("-o", "--out", help="write the induced rack to this file (rack action)")
    p.set_defaults(func=cmd_digroup)

    p = sub.add_parser("diff", help="differentiate a linear Lie rack into its tangent Leibniz algebra")
    p.add_argument("source", help="model file or built-in model name")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("enumerate", help="count digroups of a given order two independent ways")
    p.add_argument("order", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("expad", help="the exp(ad) rack of a Leibniz algebra")
    p.add_argument("source")
    p.add_argument("--samples", type=int, default=100, help="number of sampled triples")
    p.set_defaults(func=cmd_expad)

    p = sub.add_parser("list", help="list built-in structures")
    p.add_argument("kind", nargs="?", choices=sorted(set(bi.BUILTINS) | {"model"}))
    p.set_defaults(func=cmd_list)

    for sp in sub.choices.values():
        _global_flags(sp, suppress=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"leibrack: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
