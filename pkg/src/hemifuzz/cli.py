"""Command-line interface.

Exit codes: 0 pass / valid / confirmed, 1 fail / refuted (witnesses are
printed one per line), 2 input or parse error, 3 resource budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import catalog
from .algebra import WindowedNaturals, automorphisms, validate_hemiring
from .analysis import DEFAULT_GRID, DegreeGrid, is_characteristic, maximality_status
from .constructions import (MonotoneFn, monotone_transform, normalize_plus,
                            preimage_under_hom)
from .errors import AxiomError, InputError, PreconditionError, ResourceBudgetError
from .formats import (parse_hemiring, parse_ifs, parse_morphism, parse_tables,
                      serialize_hemiring, serialize_ifs)
from .fuzzy import is_if_left_h_ideal, level_subset, to_degree
from .ideals import enumerate_left_h_ideals, is_left_h_ideal, maximal_left_h_ideals
from .verify import (ClaimId, Instance, Verdict, example1_adjudication,
                     run_default_sweep, verify_claim)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class Result:
    def __init__(self, code=EXIT_OK, lines=(), windowed=False, **data):
        self.code = code
        self.lines = list(lines)
        self.windowed = windowed
        self.data = data


def _banner(carrier) -> list[str]:
    if getattr(carrier, "windowed", False):
        return [f"windowed: {carrier.name}; only instantiations inside the window were "
                "checked, this is evidence, not proof"]
    return []


def _fmt_set(S) -> str:
    return "{" + ",".join(map(str, sorted(S))) + "}"


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def resolve_ring(ref: str, window: int | None = None):
    if ref == "N":
        if window is None:
            raise InputError("ring N needs --window")
        return WindowedNaturals(window)
    try:
        structure = catalog.catalog_get(ref).structure
    except InputError:
        if not os.path.exists(ref):
            raise InputError(f"{ref!r} is neither a catalog name nor a file") from None
        return parse_hemiring(_read(ref), name=os.path.basename(ref))
    if ref in catalog.IFS_NAMES:
        raise InputError(f"{ref!r} names an IFS, not a ring")
    return structure


def resolve_ifs(ref: str, carrier):
    if ref in catalog.IFS_NAMES:
        return catalog.catalog_ifs(ref, carrier)
    if not os.path.exists(ref):
        raise InputError(f"{ref!r} is neither a catalog IFS nor a file")
    return parse_ifs(_read(ref), carrier)


def resolve_morphism(path: str):
    base = os.path.dirname(path)

    def ring(ref):
        candidate = os.path.join(base, ref)
        if not catalog_name(ref) and os.path.exists(candidate):
            return resolve_ring(candidate)
        return resolve_ring(ref)

    return parse_morphism(_read(path), ring)


def catalog_name(ref: str) -> bool:
    try:
        catalog.catalog_get(ref)
        return True
    except InputError:
        return False


# -- commands ------------------------------------------------------------------

def cmd_validate(args) -> Result:
    if catalog_name(args.file):
        R = resolve_ring(args.file)
        add, mul = R.add, R.mul
    else:
        add, mul = parse_tables(_read(args.file))
    result = validate_hemiring(add, mul)
    if isinstance(result, list):
        return Result(EXIT_FAIL, ["invalid: not a hemiring"] + [str(v) for v in result])
    return Result(EXIT_OK, [f"valid hemiring of order {result.order}"])


def cmd_hideals(args) -> Result:
    R = resolve_ring(args.file)
    ideals = enumerate_left_h_ideals(R)
    maximal = maximal_left_h_ideals(R, ideals)
    lines = [f"left h-ideals: {len(ideals)}"] + [_fmt_set(I) for I in ideals]
    lines.append("maximal: " + (" ".join(_fmt_set(I) for I in maximal) or "none"))
    return Result(EXIT_OK, lines, ideals=[sorted(I) for I in ideals],
                  maximal=[sorted(I) for I in maximal])


def cmd_aut(args) -> Result:
    R = resolve_ring(args.file)
    auts = automorphisms(R)
    lines = [f"automorphisms: {len(auts)}"] + [" ".join(map(str, f.images)) for f in auts]
    return Result(EXIT_OK, lines)


def _ring_and_ifs(args):
    R = resolve_ring(args.ring, getattr(args, "window", None))
    return R, resolve_ifs(args.ifs, R)


def cmd_check(args) -> Result:
    R, A = _ring_and_ifs(args)
    report = is_if_left_h_ideal(A)
    lines = _banner(R)
    if report:
        lines.append("pass: IF left h-ideal")
    else:
        lines.append(f"fail: not an IF left h-ideal ({report.total} violations)")
        lines += [str(v) for v in report.violations]
        if report.truncated:
            lines.append(f"... {report.total - len(report.violations)} more")
    return Result(EXIT_OK if report else EXIT_FAIL, lines, windowed=R.windowed)


def cmd_levels(args) -> Result:
    R, A = _ring_and_ifs(args)
    S = level_subset(A, args.alpha, args.beta)
    lines = _banner(R) + [f"level subset ({to_degree(args.alpha)},{to_degree(args.beta)}): "
                          f"{_fmt_set(S)}"]
    if not S:
        lines.append("empty")
        return Result(EXIT_FAIL, lines, windowed=R.windowed)
    check = is_left_h_ideal(R, S)
    if check:
        lines.append("left h-ideal: yes")
    else:
        lines.append(f"left h-ideal: no ({check.reason} at "
                     + " ".join(map(str, check.witness)) + ")")
    return Result(EXIT_OK if check else EXIT_FAIL, lines, windowed=R.windowed)


def cmd_normalize(args) -> Result:
    R, A = _ring_and_ifs(args)
    try:
        top = normalize_plus(A)
    except PreconditionError as exc:
        lines = [f"precondition violated at x={x} (sum {s})" for x, s in exc.violations]
        return Result(EXIT_FAIL, _banner(R) + lines)
    return Result(EXIT_OK, _banner(R) + serialize_ifs(top).splitlines(), windowed=R.windowed)


def cmd_transform(args) -> Result:
    R, A = _ring_and_ifs(args)
    f = MonotoneFn.named(args.fn)
    try:
        Af = monotone_transform(A, f)
    except PreconditionError as exc:
        return Result(EXIT_FAIL, _banner(R) + [str(exc)])
    return Result(EXIT_OK, _banner(R) + serialize_ifs(Af).splitlines(), windowed=R.windowed)


def cmd_preimage(args) -> Result:
    f = resolve_morphism(args.homfile)
    A = resolve_ifs(args.ifs, f.cod)
    return Result(EXIT_OK, serialize_ifs(preimage_under_hom(f, A)).splitlines())


def cmd_characteristic(args) -> Result:
    R, A = _ring_and_ifs(args)
    check = is_characteristic(A)
    if check:
        return Result(EXIT_OK, ["characteristic: yes"])
    images, x = check.witness
    return Result(EXIT_FAIL, ["characteristic: no",
                              f"moved by automorphism {' '.join(map(str, images))} at x={x}"])


def cmd_maximal(args) -> Result:
    R, A = _ring_and_ifs(args)
    grid = DegreeGrid.parse(args.grid) if args.grid else DEFAULT_GRID
    status = maximality_status(A, grid, depth=args.depth)
    lines = [f"maximality: {status.kind}"]
    for probe in getattr(status, "probes", ()):
        lines.append(f"probe {probe.source}: {probe.candidates} candidates, "
                     f"superset found: {str(probe.found).lower()}")
    if status.kind == "NotApplicable":
        lines.append(f"reason: {status.reason}")
        return Result(EXIT_FAIL, lines)
    if status.kind == "NotMaximal":
        lines.append(f"witness ({status.source}):")
        lines += serialize_ifs(status.witness).splitlines()
        return Result(EXIT_FAIL, lines)
    lines.append("no strict superset found; grid evidence only")
    return Result(EXIT_OK, lines)


def _parse_subset(text: str) -> frozenset[int]:
    try:
        return frozenset(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise InputError(f"bad subset {text!r}") from None


def _parse_params(text: str) -> tuple[Fraction, ...]:
    params = tuple(to_degree(t) for t in text.split(","))
    if len(params) != 4:
        raise InputError("--params needs a1,a2,b1,b2")
    return params


def cmd_verify(args) -> Result:
    if args.claim == "example1":
        report = example1_adjudication()
        lines = [report.line()] + [f"note: {n}" for n in report.notes]
        code = EXIT_FAIL if report.verdict == Verdict.REFUTED else EXIT_OK
        return Result(code, lines, report=report.as_dict())
    try:
        claim = ClaimId(args.claim)
    except ValueError:
        raise InputError(f"unknown claim {args.claim!r}; choose from "
                         + ", ".join(c.value for c in ClaimId) + ", example1") from None
    if args.sweep:
        result = run_default_sweep(claim)
        code = EXIT_FAIL if result.verdict == Verdict.REFUTED else EXIT_OK
        return Result(code, result.lines(), verdict=result.verdict.value, counts=result.counts)

    morphism = resolve_morphism(args.hom) if args.hom else None
    ring = None
    if args.ring is not None:
        ring = resolve_ring(args.ring, args.window)
    elif morphism is not None:
        ring = morphism.cod
    ifs = None
    if args.ifs is not None:
        carrier = morphism.cod if morphism is not None else ring
        if carrier is None:
            raise InputError("an IFS needs a ring")
        ifs = resolve_ifs(args.ifs, carrier)
    fuzzy = ifs.mu if (claim == ClaimId.P3_5 and ifs is not None) else None
    inst = Instance(
        ring=ring, ifs=ifs, fuzzy=fuzzy,
        subset=_parse_subset(args.subset) if args.subset else None,
        params=_parse_params(args.params) if args.params else None,
        morphism=morphism,
        fn=MonotoneFn.named(args.fn) if args.fn else None,
        grid=DegreeGrid.parse(args.grid) if args.grid else None,
    )
    report = verify_claim(claim, inst)
    lines = _banner(ring) + [report.line()] + [f"note: {n}" for n in report.notes]
    code = EXIT_FAIL if report.verdict == Verdict.REFUTED else EXIT_OK
    return Result(code, lines, windowed=report.windowed, report=report.as_dict())


def cmd_catalog(args) -> Result:
    if args.action == "list":
        return Result(EXIT_OK, catalog.catalog_names())
    if not args.name:
        raise InputError("catalog show needs a NAME")
    entry = catalog.catalog_get(args.name)
    lines = [f"# {entry.name}: {entry.description}"]
    if args.name in catalog.IFS_NAMES:
        lines += [f"# over {entry.structure.name}"] + serialize_ifs(entry.ifs[0]).splitlines()
    elif isinstance(entry.structure, WindowedNaturals):
        lines.append(f"# naturals 0..{entry.structure.window} under + and *")
    else:
        lines += serialize_hemiring(entry.structure).splitlines()
    return Result(EXIT_OK, lines)


# -- entry point -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hemifuzz",
        description="Check hemiring axioms, h-ideals and intuitionistic fuzzy h-ideals.")
    parser.add_argument("--json", action="store_true", help="emit a JSON document")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def ring_ifs(p, window=False):
        p.add_argument("ring", help="catalog name (R1, Z2, N_64, ...) or hemiring file")
        p.add_argument("ifs", help="catalog IFS name (A1, T123, A3, MU2, ...) or IFS file")
        if window:
            p.add_argument("--window", type=int, help="window for ring N")

    p = sub.add_parser("validate", help="check the hemiring axioms of a table file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)
    p = sub.add_parser("hideals", help="list all left h-ideals")
    p.add_argument("file")
    p.set_defaults(func=cmd_hideals)
    p = sub.add_parser("aut", help="list automorphisms")
    p.add_argument("file")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("check", help="decide whether an IFS is an IF left h-ideal")
    ring_ifs(p, window=True)
    p.set_defaults(func=cmd_check)
    p = sub.add_parser("levels", help="compute an (alpha, beta)-level subset")
    ring_ifs(p, window=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.set_defaults(func=cmd_levels)
    p = sub.add_parser("normalize", help="shift an IFS to a normal one")
    ring_ifs(p, window=True)
    p.set_defaults(func=cmd_normalize)
    p = sub.add_parser("transform", help="apply an increasing function to both degrees")
    ring_ifs(p, window=True)
    p.add_argument("--fn", required=True, help="identity, square, affine or half")
    p.set_defaults(func=cmd_transform)
    p = sub.add_parser("preimage", help="pull an IFS back along a homomorphism")
    p.add_argument("homfile")
    p.add_argument("ifs")
    p.set_defaults(func=cmd_preimage)
    p = sub.add_parser("characteristic", help="check invariance under automorphisms")
    ring_ifs(p)
    p.set_defaults(func=cmd_characteristic)
    p = sub.add_parser("maximal", help="probe maximality among normal IF left h-ideals")
    ring_ifs(p)
    p.add_argument("--grid", help="comma-separated degrees, e.g. 0,1/2,1")
    p.add_argument("--depth", type=int, default=1, help="midpoint refinements")
    p.set_defaults(func=cmd_maximal)

    p = sub.add_parser("verify", help="check a claim on an instance or its default sweep")
    p.add_argument("claim", help="claim id (P3_5 ... T4_17) or example1")
    p.add_argument("ring", nargs="?")
    p.add_argument("ifs", nargs="?")
    p.add_argument("--window", type=int)
    p.add_argument("--grid")
    p.add_argument("--hom", help="morphism file; the IFS lives on its codomain")
    p.add_argument("--fn")
    p.add_argument("--subset", help="comma-separated elements")
    p.add_argument("--params", help="a1,a2,b1,b2")
    p.add_argument("--sweep", action="store_true", help="run the default instance family")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="list or show built-in structures")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_catalog)
    return parser


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    raise TypeError(type(value).__name__)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except AxiomError as exc:
        result = Result(EXIT_INPUT, ["error: not a hemiring"] + [str(v) for v in exc.violations])
    except InputError as exc:
        result = Result(EXIT_INPUT, [f"error: {exc}"])
    except ResourceBudgetError as exc:
        result = Result(EXIT_BUDGET, [f"budget exceeded: {exc}"], partial=exc.partial)
    if args.json:
        doc = {"command": args.command, "exit_code": result.code,
               "windowed": result.windowed, "lines": result.lines, **result.data}
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True, default=_jsonable) + "\n")
    else:
        sys.stdout.write("".join(line + "\n" for line in result.lines))
    return result.code


if __name__ == "__main__":
    sys.exit(main())
