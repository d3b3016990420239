"""Command line interface.

Exit codes: 0 success (or the checked property holds), 1 the analysis found
the property false or validation failed, 2 usage, IO or parse errors.
"""

from __future__ import annotations

import argparse
import contextlib
import sys

from . import io
from .constructions import ZMod, crt_check, product, ring_mod_subgroup, zmod
from .core import HyperringTable, validate_axioms
from .errors import ConstructionError, HyperringError, StructureError
from .example import format_claims, r8_claims
from .ideals import is_hyperideal, quotient
from .relations import enumerate_strongly_regular, gamma_star, relation_properties, relation_spectrum
from .report import analysis, export_dot, to_json, to_text
from .spectrum import SpectrumSpace, topology_report

OK, FALSE, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_labels(table: HyperringTable, text: str) -> int:
    labels = [s.strip() for s in text.split(",") if s.strip()]
    if not labels:
        raise UsageError("empty element list")
    try:
        return table.mask(labels)
    except StructureError as exc:
        raise UsageError(str(exc)) from None


def _load_valid(path, out) -> HyperringTable | None:
    table = io.load(path)
    report = validate_axioms(table)
    if not report.valid:
        print(f"{path}: not a Krasner hyperring", file=out)
        for v in report.violations:
            print(f"  {v}", file=out)
        return None
    return table


def _emit(table: HyperringTable, dest, out) -> None:
    if dest:
        io.dump(table, dest)
        print(f"wrote {dest}", file=out)
    else:
        out.write(io.dumps(table))


def cmd_validate(args, out) -> int:
    table = io.load(args.file)
    report = validate_axioms(table)
    if report.valid:
        extra = " (trivial carrier: 0 = 1)" if report.trivial else ""
        print(f"{args.file}: valid Krasner hyperring with {table.n} elements{extra}", file=out)
        return OK
    print(f"{args.file}: {len(report.violations)} axiom violation(s)", file=out)
    for v in report.violations:
        print(f"  {v}", file=out)
    return FALSE


def cmd_report(args, out) -> int:
    table = io.load(args.file)
    data = analysis(table)
    out.write(to_json(data) if args.format == "json" else to_text(data))
    return OK if data["validation"]["valid"] else FALSE


def cmd_spectrum(args, out) -> int:
    table = _load_valid(args.file, out)
    if table is None:
        return FALSE
    space = SpectrumSpace.of(table)
    if args.dot:
        out.write(export_dot(space))
        return OK
    rep = topology_report(space)
    for p in space.points:
        print(table.fmt(p), file=out)
    sep = rep.separation
    print(
        f"irreducible={rep.irreducible} connected={rep.connected} "
        f"T0={sep.t0} T1={sep.t1} T2={sep.t2} dim={rep.dimension} discrete={rep.discrete}",
        file=out,
    )
    bad = rep.disagreements()
    if bad:
        print("disagreements: " + ", ".join(bad), file=out)
        return FALSE
    return OK


def cmd_gamma(args, out) -> int:
    table = _load_valid(args.file, out)
    if table is None:
        return FALSE
    g = gamma_star(table)
    for b in g.blocks:
        print(table.fmt(b), file=out)
    print(f"kernel: {table.fmt(g.kernel_mask)}", file=out)
    return OK


def cmd_relations(args, out) -> int:
    table = _load_valid(args.file, out)
    if table is None:
        return FALSE
    for r in enumerate_strongly_regular(table):
        p = relation_properties(r)
        flags = [k for k in ("prime", "primitive", "maximal") if getattr(p, k)]
        print(f"kernel {table.fmt(r.kernel_mask)}: {r.describe()}  [{' '.join(flags)}]", file=out)
    rs = relation_spectrum(table)
    pts = ", ".join(table.fmt(k) for k in rs.kernels) or "(none)"
    print(f"prime relations by kernel: {pts}", file=out)
    print(f"homeomorphic to V(gamma*(0)): {rs.homeomorphic}", file=out)
    return OK if rs.homeomorphic and rs.join_law and rs.meet_law else FALSE


def cmd_quotient(args, out) -> int:
    table = _load_valid(args.file, out)
    if table is None:
        return FALSE
    m = _parse_labels(table, args.ideal)
    if not is_hyperideal(table, m):
        print(f"{table.fmt(m)} is not a hyperideal", file=out)
        return FALSE
    if m == table.full:
        print("cannot form the quotient by the whole hyperring", file=out)
        return FALSE
    q, _ = quotient(table, m)
    _emit(q, args.output, out)
    return OK


def cmd_crt(args, out) -> int:
    table = _load_valid(args.file, out)
    if table is None:
        return FALSE
    masks = [_parse_labels(table, part) for part in args.ideals.split(";") if part.strip()]
    if not masks:
        raise UsageError("--ideals needs at least one element list")
    for m in masks:
        if not is_hyperideal(table, m) or m == table.full:
            print(f"{table.fmt(m)} is not a proper hyperideal", file=out)
            return FALSE
    rep = crt_check(table, masks)
    fmt = table.fmt
    print("ideals: " + "; ".join(fmt(m) for m in masks), file=out)
    print(f"good homomorphism: {rep.good_homomorphism}", file=out)
    print(f"kernel: {fmt(rep.kernel)}  intersection: {fmt(rep.intersection)}  product: {fmt(rep.ideal_product)}", file=out)
    print(f"pairwise comaximal: {rep.comaximal}  surjective: {rep.surjective}", file=out)
    if rep.isomorphism is not None:
        print("isomorphism:", file=out)
        for x, y in enumerate(rep.isomorphism.mapping):
            print(f"  {table.labels[x]} -> {rep.target.labels[y]}", file=out)
    return OK if rep.holds else FALSE


def _group(spec: str) -> list[int]:
    try:
        return [int(s) for s in spec.split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"--mod-group expects integers, got {spec!r}") from None


def cmd_construct(args, out) -> int:
    if args.kind == "ring":
        if args.mod_group:
            table, _ = ring_mod_subgroup(ZMod(args.zmod), _group(args.mod_group))
        else:
            table = zmod(args.zmod)
    else:
        table = product(io.load(args.a), io.load(args.b))
    _emit(table, args.output, out)
    return OK


def cmd_paper_example(args, out) -> int:
    claims = r8_claims()
    out.write(format_claims(claims))
    return OK if all(c.passed for c in claims) else FALSE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="krasner", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the hyperring axioms")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("report", help="full analysis")
    s.add_argument("file")
    s.add_argument("--format", choices=("json", "text"), default="text")
    s.set_defaults(func=cmd_report)

    s = sub.add_parser("spectrum", help="prime spectrum and its topology")
    s.add_argument("file")
    s.add_argument("--dot", action="store_true", help="print the specialization order as DOT")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("gamma", help="the fundamental relation gamma*")
    s.add_argument("file")
    s.set_defaults(func=cmd_gamma)

    s = sub.add_parser("relations", help="strongly regular relations")
    s.add_argument("file")
    s.set_defaults(func=cmd_relations)

    s = sub.add_parser("quotient", help="quotient by a hyperideal")
    s.add_argument("file")
    s.add_argument("--ideal", required=True, help="comma separated element labels")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("crt", help="Chinese remainder map for a list of hyperideals")
    s.add_argument("file")
    s.add_argument("--ideals", required=True, help='e.g. "a,b;c,d"')
    s.set_defaults(func=cmd_crt)

    s = sub.add_parser("construct", help="build a hyperring file")
    csub = s.add_subparsers(dest="kind", required=True)
    r = csub.add_parser("ring", help="Z/N, optionally modulo a unit subgroup")
    r.add_argument("--zmod", type=int, required=True)
    r.add_argument("--mod-group", help="comma separated subgroup of the units")
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_construct)
    r = csub.add_parser("product", help="product of two hyperring files")
    r.add_argument("a")
    r.add_argument("b")
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_construct)

    s = sub.add_parser("paper-example", help="reproduce the R8 worked example")
    s.set_defaults(func=cmd_paper_example)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return USAGE
    except (StructureError, ConstructionError) as exc:
        print(f"error: {exc}", file=err)
        return USAGE
    except HyperringError as exc:
        print(f"error: {exc}", file=err)
        return FALSE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
