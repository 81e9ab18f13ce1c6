"""Per-claim checks on concrete instances and sweeps over instance families.

Each claim is evaluated by computing both sides of its implication or
biconditional with the checkers of this package.  A claim whose hypothesis
does not hold on the instance is reported ``Vacuous``; claims that depend
on maximality can at best be ``GridLimited`` because maximality itself is
only probed on finite degree grids.
"""
from __future__ import annotations

import enum
import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import catalog
from .algebra import Morphism, is_homomorphism
from .analysis import (DEFAULT_GRID, DegreeGrid, GridMaximal, cuts_invariant,
                       grid_nifi_enumerate, is_characteristic, is_completely_normal,
                       is_normal, maximality_status)
from .constructions import (MonotoneFn, monotone_transform, normalize_plus,
                            plus_violations, preimage_under_hom, transform_problems,
                            two_valued_ifs)
from .errors import InputError, ResourceBudgetError
from .formats import serialize_ifs
from .fuzzy import (ONE, ZERO, FuzzySet, Ifs, complement, contains, image_pairs,
                    is_fuzzy_left_h_ideal, is_if_left_h_ideal, level_subset, lower_cut,
                    upper_cut)
from .ideals import is_left_h_ideal, maximal_left_h_ideals


class ClaimId(str, enum.Enum):
    P3_5 = "P3_5"
    P3_6 = "P3_6"
    P3_7 = "P3_7"
    T3_11 = "T3_11"
    T3_13 = "T3_13"
    T4_3 = "T4_3"
    P4_4 = "P4_4"
    T4_6 = "T4_6"
    T4_8 = "T4_8"
    C4_9 = "C4_9"
    T4_10 = "T4_10"
    T4_12 = "T4_12"
    T4_13 = "T4_13"
    T4_15 = "T4_15"
    T4_16 = "T4_16"
    T4_17 = "T4_17"


class Verdict(str, enum.Enum):
    CONFIRMED = "Confirmed"
    REFUTED = "Refuted"
    VACUOUS = "Vacuous"
    GRID_LIMITED = "GridLimited"


@dataclass(frozen=True)
class Instance:
    """The data a claim is evaluated on; unused fields stay ``None``."""

    ring: object = None
    ifs: Ifs | None = None
    fuzzy: FuzzySet | None = None
    subset: frozenset | None = None
    params: tuple | None = None
    morphism: Morphism | None = None
    fn: MonotoneFn | None = None
    grid: DegreeGrid | None = None
    label: str = ""

    def describe(self) -> str:
        if self.label:
            return self.label
        parts = []
        ring = self.ring or (self.ifs.carrier if self.ifs else None)
        if self.morphism is not None:
            parts.append(f"{self.morphism.dom.name}->{self.morphism.cod.name}"
                         f"[{','.join(map(str, self.morphism.images))}]")
        elif ring is not None:
            parts.append(ring.name)
        if self.ifs is not None:
            parts.append("ifs=" + _pairs_word(self.ifs))
        if self.fuzzy is not None:
            parts.append("mu=" + _degrees_word(self.fuzzy.degrees))
        if self.subset is not None:
            parts.append("subset={" + ",".join(map(str, sorted(self.subset))) + "}")
        if self.params is not None:
            parts.append("params=" + ",".join(map(str, self.params)))
        if self.fn is not None:
            parts.append(f"fn={self.fn.name}")
        if self.grid is not None:
            parts.append(f"grid={self.grid}")
        return ":".join(parts)


def _pairs_word(A: Ifs) -> str:
    if A.carrier.order > 8:
        return f"<{A.carrier.order} pairs>"
    return ",".join(f"({m};{l})" for m, l in A.pairs())


def _degrees_word(degrees) -> str:
    if len(degrees) > 8:
        return f"<{len(degrees)} degrees>"
    return ",".join(map(str, degrees))


@dataclass(frozen=True)
class VerifyReport:
    claim: str
    instance: str
    verdict: Verdict
    witness: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()
    windowed: bool = False

    def line(self) -> str:
        out = f"{self.claim} {self.instance} {self.verdict.value}"
        if self.witness:
            out += " " + " | ".join(self.witness)
        return out

    def as_dict(self) -> dict:
        return {"claim": self.claim, "instance": self.instance,
                "verdict": self.verdict.value, "witness": list(self.witness),
                "notes": list(self.notes), "windowed": self.windowed}


def _need(inst: Instance, *names):
    missing = [n for n in names if getattr(inst, n) is None]
    if missing:
        raise InputError(f"instance lacks {', '.join(missing)}")


def _ring_of(inst: Instance):
    if inst.ring is not None:
        return inst.ring
    if inst.ifs is not None:
        return inst.ifs.carrier
    if inst.fuzzy is not None:
        return inst.fuzzy.carrier
    raise InputError("instance lacks a ring")


def _v(report) -> str:
    return "pass" if report else "fail"


def _violation_lines(report) -> tuple[str, ...]:
    return tuple(str(v) for v in report.violations)


# -- claim procedures ---------------------------------------------------------
# each returns (verdict, witness lines, notes)

def _p3_5(inst):
    m = inst.fuzzy if inst.fuzzy is not None else (inst.ifs.mu if inst.ifs else None)
    if m is None:
        raise InputError("instance lacks a fuzzy set")
    fuzzy = is_fuzzy_left_h_ideal(m)
    paired = is_if_left_h_ideal(Ifs(m, complement(m)))
    notes = (f"fuzzy left h-ideal: {_v(fuzzy)}", f"(mu, 1-mu) IF left h-ideal: {_v(paired)}")
    if bool(fuzzy) == bool(paired):
        return Verdict.CONFIRMED, (), notes
    return Verdict.REFUTED, _violation_lines(fuzzy) + _violation_lines(paired), notes


def _p3_6(inst):
    _need(inst, "ifs")
    A = inst.ifs
    whole = is_if_left_h_ideal(A)
    mu = is_fuzzy_left_h_ideal(A.mu)
    lam_c = is_fuzzy_left_h_ideal(complement(A.lam))
    notes = (f"IF left h-ideal: {_v(whole)}", f"mu fuzzy left h-ideal: {_v(mu)}",
             f"1-lambda fuzzy left h-ideal: {_v(lam_c)}")
    if bool(whole) == (bool(mu) and bool(lam_c)):
        return Verdict.CONFIRMED, (), notes
    return (Verdict.REFUTED,
            _violation_lines(whole) + _violation_lines(mu) + _violation_lines(lam_c), notes)


def _p3_7(inst):
    _need(inst, "subset")
    R = _ring_of(inst)
    params = inst.params or (0, 1, 1, 0)
    A = two_valued_ifs(R, inst.subset, *params)
    fuzzy_side = is_if_left_h_ideal(A)
    crisp_side = is_left_h_ideal(R, inst.subset)
    notes = (f"two-valued IFS IF left h-ideal: {_v(fuzzy_side)}",
             f"subset left h-ideal: {_v(crisp_side)}")
    if bool(fuzzy_side) == bool(crisp_side):
        return Verdict.CONFIRMED, (), notes
    wit = _violation_lines(fuzzy_side)
    if not crisp_side:
        wit += (f"subset fails: {crisp_side.reason} at {crisp_side.witness}",)
    return Verdict.REFUTED, wit, notes


def _fmt_set(S) -> str:
    return "{" + ",".join(map(str, sorted(S))) + "}"


def _t3_11(inst):
    _need(inst, "ifs")
    A = inst.ifs
    R = A.carrier
    checker = is_if_left_h_ideal(A)
    bad_levels = []
    for a, b in image_pairs(A):
        S = level_subset(A, a, b)
        if S and not is_left_h_ideal(R, S):
            bad_levels.append(f"level ({a},{b}) = {_fmt_set(S)} is not a left h-ideal")
    bad_cuts = []
    for a in A.mu.image():
        S = upper_cut(A.mu, a)
        if S and not is_left_h_ideal(R, S):
            bad_cuts.append(f"U(mu,{a}) = {_fmt_set(S)} is not a left h-ideal")
    for b in A.lam.image():
        S = lower_cut(A.lam, b)
        if S and not is_left_h_ideal(R, S):
            bad_cuts.append(f"L(lambda,{b}) = {_fmt_set(S)} is not a left h-ideal")
    sides = (bool(checker), not bad_levels, not bad_cuts)
    notes = (f"checker: {_v(checker)}",
             f"all level subsets left h-ideals: {sides[1]}",
             f"all cuts left h-ideals: {sides[2]}") + tuple(bad_levels + bad_cuts)
    if len(set(sides)) == 1:
        return Verdict.CONFIRMED, (), notes
    return Verdict.REFUTED, _violation_lines(checker) + tuple(bad_levels + bad_cuts), notes


def _requires_ideal(A):
    report = is_if_left_h_ideal(A)
    if not report:
        return (Verdict.VACUOUS, (), ("hypothesis fails: not an IF left h-ideal",)
                + _violation_lines(report)[:3])
    return None


def _t3_13(inst):
    _need(inst, "ifs")
    A = inst.ifs
    vac = _requires_ideal(A)
    if vac:
        return vac
    levels = sorted(set(A.mu.degrees) | set(A.lam.degrees) | {ZERO, ONE})
    failures = []
    for x in A.carrier.elements:
        for a in A.mu.image():
            for b in A.lam.image():
                lhs = A(x) == (a, b)
                rhs = (x in upper_cut(A.mu, a)
                       and all(x not in upper_cut(A.mu, g) for g in levels if g > a)
                       and x in lower_cut(A.lam, b)
                       and all(x not in lower_cut(A.lam, d) for d in levels if d < b))
                if lhs != rhs:
                    failures.append(f"x={x} alpha={a} beta={b}")
    notes = ("checked every element against every image pair",)
    if failures:
        return Verdict.REFUTED, tuple(failures), notes
    return Verdict.CONFIRMED, (), notes


def _t4_3(inst):
    _need(inst, "ifs")
    A = inst.ifs
    vac = _requires_ideal(A)
    if vac:
        char = is_characteristic(A)
        return vac[0], vac[1], vac[2] + (f"characteristic: {bool(char)}",)
    char = is_characteristic(A)
    cuts = cuts_invariant(A)
    notes = (f"characteristic: {bool(char)}", f"all nonempty cuts invariant: {bool(cuts)}")
    if bool(char) == bool(cuts):
        return Verdict.CONFIRMED, (), notes
    wit = []
    if not char:
        wit.append(f"moved by automorphism {char.witness[0]} at x={char.witness[1]}")
    if not cuts:
        wit.append(f"cut {cuts.witness[0]}({cuts.witness[1]}) moved by {cuts.witness[2]}")
    return Verdict.REFUTED, tuple(wit), notes


def _hom(inst) -> Morphism:
    _need(inst, "morphism", "ifs")
    f = inst.morphism
    check = is_homomorphism(f)
    if not check:
        raise InputError(f"not a homomorphism: {check.reason} at {check.witness}")
    return f


def _p4_4(inst):
    f = _hom(inst)
    vac = _requires_ideal(inst.ifs)
    if vac:
        return vac
    pulled = is_if_left_h_ideal(preimage_under_hom(f, inst.ifs))
    notes = ("A is an IF left h-ideal of the codomain", f"preimage: {_v(pulled)}")
    if pulled:
        return Verdict.CONFIRMED, (), notes
    return Verdict.REFUTED, _violation_lines(pulled), notes


def _t4_6(inst):
    f = _hom(inst)
    if not f.surjective:
        return Verdict.VACUOUS, (), ("hypothesis fails: morphism is not onto",)
    on_cod = is_if_left_h_ideal(inst.ifs)
    pulled = is_if_left_h_ideal(preimage_under_hom(f, inst.ifs))
    notes = (f"A on codomain: {_v(on_cod)}", f"preimage on domain: {_v(pulled)}")
    if bool(on_cod) == bool(pulled):
        return Verdict.CONFIRMED, (), notes
    return Verdict.REFUTED, _violation_lines(on_cod) + _violation_lines(pulled), notes


def _t4_8(inst):
    _need(inst, "ifs")
    A = inst.ifs
    vac = _requires_ideal(A)
    if vac:
        return vac
    bad = plus_violations(A)
    if bad:
        x, total = bad[0]
        return Verdict.VACUOUS, (), (f"hypothesis fails: shifted sum {total} at x={x}",)
    top = normalize_plus(A)
    checks = {"normal": is_normal(top), "IF left h-ideal": bool(is_if_left_h_ideal(top)),
              "contains A": contains(top, A)}
    notes = tuple(f"A+ {k}: {v}" for k, v in checks.items())
    if all(checks.values()):
        return Verdict.CONFIRMED, (), notes
    return Verdict.REFUTED, (serialize_ifs(top).replace("\n", "; "),), notes


def _c4_9(inst):
    _need(inst, "ifs")
    A = inst.ifs
    vac = _requires_ideal(A)
    if vac:
        return vac
    if plus_violations(A):
        return Verdict.VACUOUS, (), ("hypothesis fails: A+ undefined",)
    top = normalize_plus(A)
    twice = normalize_plus(top)
    notes = [f"(A+)+ == A+: {twice == top}"]
    ok = twice == top
    if is_normal(A):
        notes.append(f"A normal, A+ == A: {top == A}")
        ok = ok and top == A
    if ok:
        return Verdict.CONFIRMED, (), tuple(notes)
    return Verdict.REFUTED, (serialize_ifs(twice).replace("\n", "; "),), tuple(notes)


TWO_VALUES = {(ZERO, ONE), (ONE, ZERO)}


def _maximality_claim(inst, *, need_normal: bool, conclusion: Callable):
    """Shared shape of the maximal-element claims.

    The hypothesis "A is maximal" is only ever established as grid evidence,
    so a holding conclusion yields ``GridLimited``; a failing conclusion on
    a grid-maximal candidate is flagged as a discrepancy in the notes.
    """
    _need(inst, "ifs")
    A = inst.ifs
    grid = inst.grid or DEFAULT_GRID
    checker = is_if_left_h_ideal(A)
    notes = [f"checker: {_v(checker)}"]
    if not checker:
        return Verdict.VACUOUS, (), tuple(notes + ["hypothesis fails: not an IF left h-ideal"])
    if need_normal and not is_normal(A):
        return Verdict.VACUOUS, (), tuple(notes + ["hypothesis fails: not normal"])
    status = maximality_status(A, grid)
    notes.append(f"maximality: {status.kind}")
    for probe in getattr(status, "probes", ()):
        notes.append(f"probe {probe.source}: {probe.candidates} candidates, "
                     f"superset found: {probe.found}")
    if status.kind == "NotApplicable":
        notes.append(f"reason: {status.reason}")
        return Verdict.VACUOUS, (), tuple(notes)
    if status.kind == "NotMaximal":
        notes.append("witness above A+: " + _pairs_word(status.witness))
        return Verdict.VACUOUS, (), tuple(notes)
    ok, detail = conclusion(A, status)
    notes.append(detail)
    if not ok:
        notes.append("DISCREPANCY: grid-maximal candidate violates the conclusion")
    return Verdict.GRID_LIMITED, (), tuple(notes)


def _two_valued(A):
    values = set(A.pairs())
    return values <= TWO_VALUES, f"values {sorted(values)}"


def _t4_10_conclusion(A, status):
    return _two_valued(A)


def _t4_12_conclusion(A, status):
    ok, detail = _two_valued(A)
    return ok and is_normal(A), f"{detail}; normal: {is_normal(A)}"


def _t4_13_conclusion(A, status):
    S = level_subset(A, 1, 0)
    maximal = maximal_left_h_ideals(A.carrier)
    return S in maximal, f"(1,0)-level subset {_fmt_set(S)}; maximal left h-ideal: {S in maximal}"


def _t4_15_conclusion(A, status: GridMaximal):
    cn = is_completely_normal(A)
    above = []
    for g in status.grids:
        above += [B for B in grid_nifi_enumerate(A.carrier, g)
                  if A < B and is_completely_normal(B)]
    return bool(cn) and not above, (f"completely normal: {bool(cn)}; "
                                    f"completely normal strict supersets on grids: {len(above)}")


def _t4_16_conclusion(A, status):
    cn = is_completely_normal(A)
    return bool(cn), f"completely normal: {bool(cn)}"


def _t4_17(inst):
    _need(inst, "ifs", "fn")
    A, f = inst.ifs, inst.fn
    problems = transform_problems(A, f)
    if problems:
        return Verdict.VACUOUS, (), (f"inadmissible: {problems[0]}",)
    Af = monotone_transform(A, f)
    before = is_if_left_h_ideal(A)
    after = is_if_left_h_ideal(Af)
    notes = [f"A: {_v(before)}", f"A_f: {_v(after)}"]
    ok = bool(before) == bool(after)
    if f(A.mu(0)) == ONE and f(A.lam(0)) == ZERO:
        notes.append(f"f fixes (1,0) at zero; A_f normal: {is_normal(Af)}")
        ok = ok and is_normal(Af)
    if ok:
        return Verdict.CONFIRMED, (), tuple(notes)
    return Verdict.REFUTED, _violation_lines(before) + _violation_lines(after), tuple(notes)


CLAIMS: dict[ClaimId, Callable] = {
    ClaimId.P3_5: _p3_5,
    ClaimId.P3_6: _p3_6,
    ClaimId.P3_7: _p3_7,
    ClaimId.T3_11: _t3_11,
    ClaimId.T3_13: _t3_13,
    ClaimId.T4_3: _t4_3,
    ClaimId.P4_4: _p4_4,
    ClaimId.T4_6: _t4_6,
    ClaimId.T4_8: _t4_8,
    ClaimId.C4_9: _c4_9,
    ClaimId.T4_10: lambda i: _maximality_claim(i, need_normal=True, conclusion=_t4_10_conclusion),
    ClaimId.T4_12: lambda i: _maximality_claim(i, need_normal=False, conclusion=_t4_12_conclusion),
    ClaimId.T4_13: lambda i: _maximality_claim(i, need_normal=False, conclusion=_t4_13_conclusion),
    ClaimId.T4_15: lambda i: _maximality_claim(i, need_normal=True, conclusion=_t4_15_conclusion),
    ClaimId.T4_16: lambda i: _maximality_claim(i, need_normal=False, conclusion=_t4_16_conclusion),
    ClaimId.T4_17: _t4_17,
}


def verify_claim(claim, instance: Instance) -> VerifyReport:
    claim = ClaimId(claim)
    verdict, witness, notes = CLAIMS[claim](instance)
    ring = _ring_of(instance) if instance.morphism is None else instance.morphism.dom
    return VerifyReport(claim.value, instance.describe(), verdict, tuple(witness),
                        tuple(notes), bool(getattr(ring, "windowed", False)))


# -- sweeps --------------------------------------------------------------------

_PRECEDENCE = (Verdict.REFUTED, Verdict.CONFIRMED, Verdict.GRID_LIMITED, Verdict.VACUOUS)


@dataclass(frozen=True)
class SweepReport:
    claim: str
    family: str
    verdict: Verdict
    counts: dict = field(default_factory=dict)
    reports: tuple[VerifyReport, ...] = ()

    @property
    def total(self) -> int:
        return len(self.reports)

    def lines(self) -> list[str]:
        summary = ", ".join(f"{k} {self.counts[k]}" for k in sorted(self.counts))
        out = [f"{self.claim} sweep[{self.family}] {self.verdict.value} "
               f"({self.total} instances: {summary})"]
        out.extend(r.line() for r in self.reports)
        return out


def aggregate(verdicts: Iterable[Verdict]) -> Verdict:
    present = set(verdicts)
    for v in _PRECEDENCE:
        if v in present:
            return v
    return Verdict.VACUOUS


def sweep(claim, family: Iterable[Instance], label: str = "",
          max_instances: int | None = None) -> SweepReport:
    claim = ClaimId(claim)
    reports = []
    for inst in family:
        if max_instances is not None and len(reports) >= max_instances:
            counts = Counter(r.verdict.value for r in reports)
            raise ResourceBudgetError(
                f"sweep exceeded {max_instances} instances", partial=dict(counts))
        reports.append(verify_claim(claim, inst))
    counts = dict(Counter(r.verdict.value for r in reports))
    return SweepReport(claim.value, label, aggregate(r.verdict for r in reports),
                       counts, tuple(reports))


# -- instance families ----------------------------------------------------------

def fuzzy_family(R, grid: DegreeGrid) -> Iterable[Instance]:
    for values in itertools.product(grid.degrees, repeat=R.order):
        yield Instance(ring=R, fuzzy=FuzzySet(R, values))


def ifs_family(R, grid: DegreeGrid, **extra) -> Iterable[Instance]:
    pairs = [(m, l) for m in grid.degrees for l in grid.degrees if m + l <= ONE]
    for combo in itertools.product(pairs, repeat=R.order):
        A = Ifs.of(R, [p[0] for p in combo], [p[1] for p in combo])
        yield Instance(ring=R, ifs=A, **extra)


def subset_family(R, params_list) -> Iterable[Instance]:
    for params in params_list:
        for bits in range(1, 1 << R.order):
            subset = frozenset(x for x in R.elements if bits >> x & 1)
            yield Instance(ring=R, subset=subset, params=tuple(params))


def bundled_family(name: str, **extra) -> Iterable[Instance]:
    entry = catalog.catalog_get(name)
    for A in entry.ifs:
        yield Instance(ring=entry.structure, ifs=A, **extra)


def morphism_family(f: Morphism, grid: DegreeGrid) -> Iterable[Instance]:
    for inst in ifs_family(f.cod, grid):
        yield Instance(ring=f.cod, ifs=inst.ifs, morphism=f)


FUNCTIONS = ("identity", "square", "affine")
GRID_3 = DEFAULT_GRID
GRID_5 = DegreeGrid((0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), 1))
PARAMS_P3_7 = ((0, 1, 1, 0), (Fraction(1, 4), Fraction(3, 4), Fraction(1, 2), 0))


def _checked_ifs(R, grid):
    for inst in ifs_family(R, grid):
        if is_if_left_h_ideal(inst.ifs, cap=1):
            yield inst


def _chain(*families):
    for fam in families:
        yield from fam


def default_family(claim) -> tuple[str, Iterable[Instance]]:
    """The standard instance family for each claim."""
    claim = ClaimId(claim)
    Z2, BOOL, R1 = catalog.Z2, catalog.BOOL, catalog.R1
    if claim == ClaimId.P3_5:
        return "fuzzy sets over {0,1/2,1} on Z2 and BOOL", _chain(
            fuzzy_family(Z2, GRID_3), fuzzy_family(BOOL, GRID_3))
    if claim == ClaimId.P3_6:
        return "IF sets over {0,1/2,1} on Z2 and BOOL", _chain(
            ifs_family(Z2, GRID_3), ifs_family(BOOL, GRID_3))
    if claim == ClaimId.P3_7:
        return "nonempty subsets of R1 and Z2 x two parameter sets", _chain(
            subset_family(R1, PARAMS_P3_7), subset_family(Z2, PARAMS_P3_7))
    if claim in (ClaimId.T3_11, ClaimId.T3_13):
        return "IF sets over {0,1/2,1} on Z2 plus bundled R1 sets", _chain(
            ifs_family(Z2, GRID_3), bundled_family("R1"))
    if claim == ClaimId.T4_3:
        return "bundled R1 sets, hand-built B2B and Z2xZ2 sets", _chain(
            bundled_family("R1"), bundled_family("B2B"), bundled_family("Z2xZ2"))
    if claim in (ClaimId.T4_8, ClaimId.C4_9):
        return "IF left h-ideals over {0,1/4,1/2,3/4,1} on Z2", _checked_ifs(Z2, GRID_5)
    if claim in (ClaimId.P4_4, ClaimId.T4_6):
        return "IF sets over {0,1/2,1} on codomains of id Z2, R1->BOOL, B2B->BOOL", _chain(
            morphism_family(catalog.IDENTITY_Z2, GRID_3),
            morphism_family(catalog.COLLAPSE_R1_BOOL, GRID_3),
            morphism_family(catalog.PROJECT_B2B_BOOL, GRID_3))
    if claim == ClaimId.T4_17:
        def gen():
            bases = [i.ifs for i in ifs_family(Z2, GRID_3)]
            bases += list(catalog.catalog_get("R1").ifs) + [catalog.A3]
            for A in bases:
                for name in FUNCTIONS:
                    yield Instance(ring=A.carrier, ifs=A, fn=MonotoneFn.named(name))
        return "IF sets on Z2 and R1 x {identity, square, affine}", gen()
    # maximal-element claims
    return "IF left h-ideals over {0,1/2,1} on Z2 plus bundled R1 sets", _chain(
        (Instance(ring=i.ring, ifs=i.ifs, grid=GRID_3) for i in _checked_ifs(Z2, GRID_3)),
        bundled_family("R1", grid=GRID_3))


def run_default_sweep(claim, max_instances: int | None = None) -> SweepReport:
    label, family = default_family(claim)
    return sweep(claim, family, label, max_instances)


# -- example adjudication -----------------------------------------------------------

def example1_adjudication() -> VerifyReport:
    """Compare the recorded claim about A1 on R1 with the exhaustive check."""
    entry = catalog.catalog_get("A1")
    A = entry.ifs[0]
    report = is_if_left_h_ideal(A, cap=None)
    agrees = bool(report) == entry.claimed_ideal
    notes = [f"recorded claim: A1 is an IF left h-ideal of R1: {entry.claimed_ideal}",
             f"exhaustive check: {_v(report)} ({report.total} violations)"]
    if not agrees:
        notes.append("DISCREPANCY: the recorded claim does not survive the exhaustive check "
                     "(possibly a misprint in the R1 tables)")
    verdict = Verdict.CONFIRMED if agrees else Verdict.REFUTED
    return VerifyReport("example1-adjudication", "R1:A1", verdict,
                        _violation_lines(report), tuple(notes))
