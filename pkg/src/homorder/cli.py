"""Command-line interface.

Structure arguments are paths to structure files, or the built-in digraph
names ``K1``, ``TOP``, ``P<k>`` (directed path), ``TT<k>`` (transitive
tournament) and ``C<k>`` (directed cycle).

Exit status: 0 when the computation finished (negative answers included),
1 when a verification that was asked to pass found a counterexample,
2 on usage, format or resource errors.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import algebra, classes, duality, enumeration, formats, hom, model, order

Report = list[tuple[str, str]]

_BUILTIN = re.compile(r"^(K1|TOP|P(\d+)|TT(\d+)|C(\d+))$")


class UsageError(Exception):
    pass


def resolve(arg: str) -> model.Structure:
    path = Path(arg)
    if path.exists():
        try:
            return formats.load(path)
        except formats.FormatError as exc:
            raise UsageError(f"{arg}: {exc}") from None
    m = _BUILTIN.match(arg.upper())
    if not m:
        raise UsageError(f"{arg}: no such file and not a built-in name (K1, TOP, P<k>, TT<k>, C<k>)")
    name = m.group(1)
    if name == "K1":
        return algebra.k1()
    if name == "TOP":
        return algebra.top()
    if m.group(2):
        return algebra.path(int(m.group(2)))
    if m.group(3):
        if int(m.group(3)) < 1:
            raise UsageError("TT0 has an empty base set")
        return algebra.transitive_tournament(int(m.group(3)))
    if int(m.group(4)) < 1:
        raise UsageError("C0 has an empty base set")
    return algebra.cycle(int(m.group(4)))


def _same_sig(structures: Sequence[model.Structure]) -> None:
    if len({S.sig for S in structures}) > 1:
        raise UsageError("signature mismatch across inputs: " + ", ".join(str(S.sig) for S in structures))


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _map(f) -> str:
    return "none" if f is None else " ".join(map(str, f))


def _struct(A: model.Structure | None) -> str:
    return "none" if A is None else formats.dumps_inline(A)


def _write_out(args, A: model.Structure) -> None:
    if getattr(args, "out", None):
        formats.dump(A, args.out)


# -- subcommands -----------------------------------------------------------------


def cmd_hom(args) -> tuple[int, Report]:
    A, B = resolve(args.source), resolve(args.target)
    _same_sig([A, B])
    f = hom.find_hom(A, B)
    return 0, [("hom", _yn(f is not None)), ("map", _map(f))]


def cmd_compare(args) -> tuple[int, Report]:
    A, B = resolve(args.first), resolve(args.second)
    _same_sig([A, B])
    c = hom.compare(A, B)
    return 0, [("relation", c.relation.value), ("forward", _map(c.forward)), ("backward", _map(c.backward))]


def cmd_core(args) -> tuple[int, Report]:
    A = resolve(args.structure)
    C, f = hom.core_of(A)
    _write_out(args, C)
    return 0, [("vertices", str(C.n)), ("is_core_input", _yn(C.n == A.n)), ("retraction", _map(f)),
               ("core", _struct(C))]


def _binary(op: Callable) -> Callable:
    def run(args) -> tuple[int, Report]:
        A, B = resolve(args.first), resolve(args.second)
        _same_sig([A, B])
        S = op(A, B)
        if args.core:
            S = hom.core(S)
        _write_out(args, S)
        return 0, [("vertices", str(S.n)), ("cored", _yn(args.core)), ("structure", _struct(S))]
    return run


def _sig(text: Sequence[str]) -> model.Signature:
    try:
        return model.check_signature(int(x) for x in text)
    except (ValueError, model.StructureError) as exc:
        raise UsageError(f"bad type {' '.join(text)}: {exc}") from None


def cmd_enumerate(args) -> tuple[int, Report]:
    sig = _sig(args.type)
    if args.what == "trees":
        cat = enumeration.all_trees(sig, args.n_max)
    elif args.what == "one-edge-trees":
        cat = enumeration.all_trees_one_edge_per_kind(sig)
    else:
        cat = enumeration.all_structures(sig, args.n_max, args.ceiling)
        if args.what == "cores":
            cat = cat.where(core=True)
    report = [("type", " ".join(map(str, sig))), ("n_max", str(cat.n_max)), ("count", str(len(cat)))]
    for k, (A, flags) in enumerate(zip(cat.entries, cat.flags)):
        report.append((f"entry.{k}", _struct(A) + " # " + " ".join(f"{f}={int(v)}" for f, v in sorted(flags.items()))))
    return 0, report


def cmd_dual(args) -> tuple[int, Report]:
    T = resolve(args.tree)
    pair = duality.duality_pair(T, args.verify_bound, args.ceiling)
    _write_out(args, pair.dual)
    return 0, [("dual", _struct(pair.dual)), ("vertices", str(pair.dual.n)),
               ("verified_bound", str(pair.verified_bound)),
               ("note", f"duality verified up to {pair.verified_bound} vertices")]


def cmd_verify_duality(args) -> tuple[int, Report]:
    F = [resolve(a) for a in args.forest]
    D = [resolve(a) for a in args.dual]
    _same_sig(F + D)
    r = duality.verify_duality_bounded(F, D, args.verify_bound, args.ceiling)
    report = [("passed", _yn(r.passed)), ("bound", str(r.bound)), ("checked", str(r.checked)),
              ("counterexample", _struct(r.counterexample))]
    if r.failure:
        report.append(("failure", r.failure))
    return (0 if r.passed else 1), report


def cmd_gap(args) -> tuple[int, Report]:
    cert = duality.gap_certificate(resolve(args.tree), args.verify_bound, args.ceiling)
    return (0 if cert.verified else 1), [
        ("bottom", _struct(cert.bottom)), ("top", _struct(cert.top)),
        ("verified", _yn(cert.verified)), ("verified_bound", str(cert.verified_bound)),
        ("counterexample", _struct(cert.counterexample))]


def cmd_cutpoint(args) -> tuple[int, Report]:
    r = order.cutpoint_certificates(resolve(args.tree), args.verify_bound, args.ceiling)
    return (0 if r.passed else 1), [
        ("tree", _struct(r.tree)), ("dual", _struct(r.dual)),
        ("meet_point", _struct(r.meet_point)), ("join_point", _struct(r.join_point)),
        ("bound", str(r.bound)), ("passed", _yn(r.passed)),
        ("below_counterexample", _struct(r.below_counterexample)),
        ("above_counterexample", _struct(r.above_counterexample))]


def cmd_split(args) -> tuple[int, Report]:
    elements = [resolve(a) for a in args.elements]
    _same_sig(elements)
    r = order.split_antichain(elements, args.witness_bound, args.verify_bound, args.ceiling)
    report = [("elements", str(len(r.elements))), ("witness_bound", str(r.witness_bound)),
              ("catalog_bound", str(r.catalog_bound))]
    for s in r.steps:
        p = f"step.{s.index}"
        report += [(f"{p}.element", _struct(s.element)), (f"{p}.part", "upper" if s.upper else "lower"),
                   (f"{p}.tag", s.tag.value if s.bound is None or s.upper else f"{s.tag.value}({s.bound})"),
                   (f"{p}.witness", _struct(s.witness))]
    report += [(f"upper.{k}", _struct(A)) for k, A in enumerate(r.upper)]
    report += [(f"lower.{k}", _struct(A)) for k, A in enumerate(r.lower)]
    c = r.contract
    report += [("contract.bound", str(c.bound)), ("contract.passed", _yn(c.passed)),
               ("contract.up_counterexample", _struct(c.up_counterexample)),
               ("contract.down_counterexample", _struct(c.down_counterexample)),
               ("contract.uncovered", _struct(c.uncovered))]
    for k, v in enumerate(r.small):
        report.append((f"small.{k}", f"{v.status} exact={_yn(v.exact)} bound={v.bound}"))
    report.append(("verdict", r.verdict))
    return 0, report


def cmd_dstar(args) -> tuple[int, Report]:
    ds = order.d_star(_sig(args.type))
    report = [("components", str(len(ds.components)))]
    report += [(f"component.{k}", _struct(T)) for k, T in enumerate(ds.components)]
    report += [("core", _struct(ds.core))]
    _write_out(args, ds.structure)
    return 0, report


def cmd_small(args) -> tuple[int, Report]:
    v = order.is_small_bounded(resolve(args.structure), args.verify_bound, args.ceiling)
    report = [("status", v.status), ("exact", _yn(v.exact)), ("bound", str(v.bound)), ("lower", _struct(v.lower))]
    for k, (Y, Z) in enumerate(v.refutations):
        report.append((f"refutation.{k}", f"{_struct(Y)} < {_struct(Z)}"))
    return 0, report


def cmd_classes(args) -> tuple[int, Report]:
    A = resolve(args.structure)
    m = classes.membership(A)
    report = [("is_core", _yn(hom.is_core(A)))]
    for k in classes.CONDITIONS:
        value = m[k]
        report.append((f"condition.{k}", "n/a" if value is None else _yn(value)))
    return 0, report


def cmd_mac_check(args) -> tuple[int, Report]:
    elements = [hom.core(resolve(a)) for a in args.elements]
    _same_sig(elements)
    if not order.is_antichain(elements):
        return 0, [("antichain", "no")]
    r = order.is_maximal_antichain_bounded(elements, args.verify_bound, args.ceiling)
    return (0 if r.passed else 1), [("antichain", "yes"), ("maximal", _yn(r.passed)), ("bound", str(r.bound)),
                                    ("checked", str(r.checked)), ("incomparable_witness", _struct(r.witness))]


def cmd_mac_from_duality(args) -> tuple[int, Report]:
    F = [resolve(a) for a in args.forest]
    D = [resolve(a) for a in args.dual]
    _same_sig(F + D)
    try:
        A = order.antichain_from_duality(F, D, args.verify_bound, args.ceiling)
    except duality.DualityError as exc:
        return 1, [("duality", "no"), ("reason", str(exc))]
    return 0, [("duality", "yes"), ("size", str(len(A)))] + [(f"element.{k}", _struct(X)) for k, X in enumerate(A)]


def cmd_extend(args) -> tuple[int, Report]:
    X = resolve(args.structure)
    S = [hom.core(resolve(a)) for a in args.antichain]
    _same_sig([X] + S)
    k = args.condition if args.condition == "shadow" else int(args.condition)
    try:
        Y = classes.extension_witness_bounded(k, S, X, args.direction, args.verify_bound, args.ceiling)
    except classes.ClassError as exc:
        raise UsageError(f"precondition failed: {exc}") from None
    return 0, [("found", _yn(Y is not None)), ("bound", str(args.verify_bound)), ("witness", _struct(Y))]


def cmd_shadow(args) -> tuple[int, Report]:
    S = model.directed_shadow(resolve(args.structure))
    _write_out(args, S)
    return 0, [("vertices", str(S.n)), ("shadow", _struct(S))]


# -- parser ------------------------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("bounds must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--witness-bound", type=_positive, default=4)
    common.add_argument("--verify-bound", type=_positive, default=4)
    common.add_argument("--cache-dir", default=None, help="directory for cached catalogs")
    common.add_argument("--ceiling", type=int, default=enumeration.DEFAULT_CEILING,
                        help="maximum number of labeled candidates per catalog")

    parser = argparse.ArgumentParser(prog="homorder", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *positional, out=False, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        for arg in positional:
            p.add_argument(arg)
        if out:
            p.add_argument("--out", help="write the resulting structure to this file")
        p.set_defaults(func=func)
        return p

    add("hom", cmd_hom, "source", "target", help="find a homomorphism")
    add("compare", cmd_compare, "first", "second", help="classify two structures in the order")
    add("core", cmd_core, "structure", out=True, help="compute the core")
    p = add("product", _binary(algebra.product), "first", "second", out=True, help="categorical product")
    p.add_argument("--core", action="store_true")
    p = add("sum", _binary(algebra.disjoint_sum), "first", "second", out=True, help="disjoint union")
    p.add_argument("--core", action="store_true")
    p = add("enumerate", cmd_enumerate, help="list structures up to isomorphism")
    p.add_argument("--type", nargs="+", default=["2"])
    p.add_argument("--n-max", type=_positive, default=3)
    p.add_argument("--what", choices=("structures", "cores", "trees", "one-edge-trees"), default="structures")
    add("dual", cmd_dual, "tree", out=True, help="dual of a tree")
    p = add("verify-duality", cmd_verify_duality, help="bounded check of a finite duality")
    p.add_argument("--forest", nargs="+", required=True)
    p.add_argument("--dual", nargs="*", default=[])
    add("gap", cmd_gap, "tree", help="gap below a connected tree")
    add("cutpoint", cmd_cutpoint, "tree", help="cut-point certificates for a tree and its dual")
    p = add("split", cmd_split, help="run the splitting procedure on an ordered antichain")
    p.add_argument("elements", nargs="+")
    p = add("dstar", cmd_dstar, out=True, help="union of all trees with at most one tuple per kind")
    p.add_argument("--type", nargs="+", default=["2"])
    add("small", cmd_small, "structure", help="bounded smallness test")
    add("classes", cmd_classes, "structure", help="membership in the cycle-based classes")
    p = add("mac-check", cmd_mac_check, help="bounded maximality check of an antichain")
    p.add_argument("elements", nargs="+")
    p = add("mac-from-duality", cmd_mac_from_duality, help="maximal antichain from a finite duality")
    p.add_argument("--forest", nargs="+", required=True)
    p.add_argument("--dual", nargs="*", default=[])
    p = add("extend", cmd_extend, "structure", help="bounded extension-witness search")
    p.add_argument("--antichain", nargs="*", default=[])
    p.add_argument("--class", dest="condition", required=True, choices=[str(c) for c in classes.CONDITIONS])
    p.add_argument("--direction", choices=("up", "down"), default="up")
    add("shadow", cmd_shadow, "structure", out=True, help="directed shadow")
    return parser


def render(report: Report, fmt: str) -> str:
    if fmt == "structured":
        return "".join(f"{k}={v}\n" for k, v in report)
    width = max((len(k) for k, _ in report), default=0)
    return "".join(f"{k.ljust(width)} : {v}\n" for k, v in report)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cache_dir:
        enumeration.set_cache_dir(args.cache_dir)
    try:
        status, report = args.func(args)
    except (UsageError, hom.SignatureMismatch, enumeration.CatalogTooLarge, duality.DualityError,
            order.AntichainError, classes.ClassError, model.StructureError) as exc:
        print(f"homorder {args.command}: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(report, args.format))
    return status


if __name__ == "__main__":
    sys.exit(main())
