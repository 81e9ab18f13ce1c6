"""Classification of IF left h-ideals: normality, invariance under
automorphisms, and a grid-based probe of maximality among normal ones."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable

from .algebra import Witnessed, automorphisms, image_of
from .constructions import average_with_element, normalize_plus
from .errors import InputError, PreconditionError, ResourceBudgetError
from .fuzzy import (ONE, ZERO, Ifs, is_if_left_h_ideal, lam_side_ok, lower_cut,
                    mu_side_ok, to_degree, upper_cut)

DEFAULT_BUDGET = 200_000


def is_normal(A: Ifs) -> bool:
    return A(0) == (ONE, ZERO)


def is_completely_normal(A: Ifs) -> Witnessed:
    """Normal and equal to ``(0, 1)`` somewhere; witness is the least such x."""
    if not is_normal(A):
        return Witnessed(False, None, "not normal")
    for x, pair in enumerate(A.pairs()):
        if pair == (ZERO, ONE):
            return Witnessed(True, (x,))
    return Witnessed(False, None, "no element with value (0, 1)")


def is_characteristic(A: Ifs, auts=None) -> Witnessed:
    """``A`` is fixed by every automorphism.  Witness: ``(images, x)``."""
    if auts is None:
        auts = automorphisms(A.carrier)
    for f in auts:
        for x in A.carrier.elements:
            if A(f(x)) != A(x):
                return Witnessed(False, (f.images, x), "moved by an automorphism")
    return Witnessed(True)


def nonempty_cuts(A: Ifs) -> list[tuple[str, Fraction, frozenset[int]]]:
    cuts = [("U", a, upper_cut(A.mu, a)) for a in A.mu.image()]
    cuts += [("L", b, lower_cut(A.lam, b)) for b in A.lam.image()]
    return [c for c in cuts if c[2]]


def cuts_invariant(A: Ifs, auts=None) -> Witnessed:
    """Every nonempty upper and lower cut is mapped onto itself by every
    automorphism.  Witness: ``(kind, level, images)``."""
    if auts is None:
        auts = automorphisms(A.carrier)
    for kind, level, S in nonempty_cuts(A):
        for f in auts:
            if image_of(f, S) != S:
                return Witnessed(False, (kind, level, f.images), "cut not invariant")
    return Witnessed(True)


@dataclass(frozen=True)
class DegreeGrid:
    degrees: tuple[Fraction, ...]

    def __post_init__(self):
        degrees = tuple(sorted({to_degree(d) for d in self.degrees}))
        if not degrees or degrees[0] != ZERO or degrees[-1] != ONE:
            raise InputError("a degree grid must contain 0 and 1")
        object.__setattr__(self, "degrees", degrees)

    @classmethod
    def parse(cls, text: str) -> "DegreeGrid":
        return cls(tuple(t.strip() for t in text.split(",") if t.strip()))

    def refine(self, depth: int = 1) -> "DegreeGrid":
        """Insert midpoints between neighbours ``depth`` times."""
        grid = self
        for _ in range(depth):
            ds = grid.degrees
            grid = DegreeGrid(ds + tuple((a + b) / 2 for a, b in zip(ds, ds[1:])))
        return grid

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self):
        return len(self.degrees)

    def __str__(self):
        return "{" + ",".join(str(d) for d in self.degrees) + "}"


DEFAULT_GRID = DegreeGrid((0, Fraction(1, 2), 1))


def _side_candidates(R, grid: DegreeGrid, first: Fraction, ok, budget: int):
    n = R.order
    count = len(grid) ** (n - 1)
    if count > budget:
        raise ResourceBudgetError(
            f"{count} candidates per side exceed the budget of {budget}",
            partial={"candidates": count})
    out = []
    for rest in product(grid.degrees, repeat=n - 1):
        values = (first,) + rest
        if ok(R, values):
            out.append(values)
    return out


def grid_nifi_enumerate(R, grid: DegreeGrid, budget: int = DEFAULT_BUDGET) -> list[Ifs]:
    """Normal IF left h-ideals of ``R`` with every degree taken from ``grid``.

    Membership and nonmembership conditions involve one function each, so
    both sides are enumerated separately and then paired.  Order: by
    membership word, then nonmembership word, each in grid order.
    """
    mus = _side_candidates(R, grid, ONE, mu_side_ok, budget)
    lams = _side_candidates(R, grid, ZERO, lam_side_ok, budget)
    out = []
    for mu in mus:
        for lam in lams:
            if all(m + l <= ONE for m, l in zip(mu, lam)):
                out.append(Ifs.of(R, mu, lam))
    return out


# -- maximality ----------------------------------------------------------------

@dataclass(frozen=True)
class Probe:
    source: str
    candidates: int
    found: bool


@dataclass(frozen=True)
class MaximalityStatus:
    kind = ""


@dataclass(frozen=True)
class NotMaximal(MaximalityStatus):
    """A checked, normal, non-constant IF left h-ideal strictly above ``A+``."""

    witness: Ifs
    source: str
    probes: tuple[Probe, ...] = ()
    kind = "NotMaximal"


@dataclass(frozen=True)
class GridMaximal(MaximalityStatus):
    """No strict superset found by any probe.  Evidence, not proof."""

    grids: tuple[DegreeGrid, ...]
    probes: tuple[Probe, ...] = ()
    kind = "GridMaximal"


@dataclass(frozen=True)
class NotApplicable(MaximalityStatus):
    reason: str = ""
    kind = "NotApplicable"


def _is_witness(candidate: Ifs, base: Ifs) -> bool:
    return (base < candidate and not candidate.is_constant() and is_normal(candidate)
            and bool(is_if_left_h_ideal(candidate, cap=1)))


def strict_normal_supersets(base: Ifs, pool: Iterable[Ifs]) -> list[Ifs]:
    return [B for B in pool if base < B and not B.is_constant()]


def maximality_status(A: Ifs, grid: DegreeGrid = DEFAULT_GRID, depth: int = 1,
                      budget: int = DEFAULT_BUDGET) -> MaximalityStatus:
    """Look for a non-constant normal IF left h-ideal strictly above ``A+``.

    Probes in order: ``grid``, its midpoint refinements up to ``depth``, and
    finally the averaging construction (average with an element, then shift
    to normal), which yields ``(1/2 (1 + mu), 1/2 lambda)`` for normal input.
    Every witness is re-checked before it is returned.
    """
    R = A.carrier
    if not is_if_left_h_ideal(A, cap=1):
        return NotApplicable("not an IF left h-ideal")
    try:
        top = normalize_plus(A)
    except PreconditionError as exc:
        return NotApplicable(f"normalization undefined: {exc}")
    if top.is_constant():
        return NotApplicable("constant")

    probes = []
    grids = [grid.refine(d) for d in range(depth + 1)]
    for g in grids:
        pool = grid_nifi_enumerate(R, g, budget)
        found = strict_normal_supersets(top, pool)
        probes.append(Probe(f"grid {g}", len(pool), bool(found)))
        if found:
            witness = found[0]
            if not _is_witness(witness, top):
                raise AssertionError("grid witness failed re-verification")
            return NotMaximal(witness, f"grid {g}", tuple(probes))

    c = next((x for x, (m, _) in enumerate(top.pairs()) if ZERO < m < ONE),
             next(x for x, p in enumerate(top.pairs()) if p != (ONE, ZERO)))
    built = normalize_plus(average_with_element(top, c))
    ok = _is_witness(built, top)
    probes.append(Probe(f"averaging construction c={c}", 1, ok))
    if ok:
        return NotMaximal(built, f"averaging construction c={c}", tuple(probes))
    return GridMaximal(tuple(grids), tuple(probes))
