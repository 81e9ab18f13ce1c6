"""Fuzzy and intuitionistic fuzzy sets with exact rational degrees.

All degrees are :class:`fractions.Fraction`.  The ideal checkers only
compare degrees, so internally they work on integer ranks of the attained
values and vectorize the sweeps with numpy; reported degrees are always the
original fractions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .algebra import UNDEFINED
from .errors import InputError

DEFAULT_CAP = 16

ZERO = Fraction(0)
ONE = Fraction(1)


def to_degree(value) -> Fraction:
    """Convert to an exact degree in [0, 1].

    Strings may be ``"p/q"`` or decimal literals; floats are read through
    their shortest decimal representation, so ``0.4`` becomes ``2/5``.
    """
    if isinstance(value, bool):
        raise InputError(f"not a degree: {value!r}")
    try:
        if isinstance(value, float):
            d = Fraction(repr(value))
        else:
            d = Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise InputError(f"not a degree: {value!r}") from None
    if not ZERO <= d <= ONE:
        raise InputError(f"degree {d} outside [0, 1]")
    return d


def format_degree(d: Fraction) -> str:
    return str(d)


@dataclass(frozen=True)
class FuzzySet:
    carrier: object
    degrees: tuple[Fraction, ...]

    def __post_init__(self):
        degrees = tuple(to_degree(v) for v in self.degrees)
        if len(degrees) != self.carrier.order:
            raise InputError(
                f"{len(degrees)} degrees given for a carrier of order {self.carrier.order}")
        object.__setattr__(self, "degrees", degrees)

    def __call__(self, x: int) -> Fraction:
        return self.degrees[x]

    def __len__(self):
        return len(self.degrees)

    @classmethod
    def constant(cls, carrier, value) -> "FuzzySet":
        return cls(carrier, (value,) * carrier.order)

    def image(self) -> list[Fraction]:
        return sorted(set(self.degrees))

    def is_constant(self) -> bool:
        return len(set(self.degrees)) <= 1


@dataclass(frozen=True)
class Ifs:
    """Membership ``mu`` and nonmembership ``lam`` with ``mu + lam <= 1``."""

    mu: FuzzySet
    lam: FuzzySet

    def __post_init__(self):
        if self.mu.carrier != self.lam.carrier:
            raise InputError("membership and nonmembership live on different carriers")
        for x, (m, l) in enumerate(zip(self.mu.degrees, self.lam.degrees)):
            if m + l > ONE:
                raise InputError(f"mu + lambda = {m + l} > 1 at element {x}")

    @classmethod
    def of(cls, carrier, mu: Sequence, lam: Sequence) -> "Ifs":
        return cls(FuzzySet(carrier, tuple(mu)), FuzzySet(carrier, tuple(lam)))

    @classmethod
    def constant(cls, carrier, m, l) -> "Ifs":
        return cls(FuzzySet.constant(carrier, m), FuzzySet.constant(carrier, l))

    @property
    def carrier(self):
        return self.mu.carrier

    def __call__(self, x: int) -> tuple[Fraction, Fraction]:
        return self.mu(x), self.lam(x)

    def pairs(self) -> list[tuple[Fraction, Fraction]]:
        return list(zip(self.mu.degrees, self.lam.degrees))

    def is_constant(self) -> bool:
        return len(set(self.pairs())) <= 1

    def __le__(self, other: "Ifs") -> bool:
        """Inclusion: ``mu`` below and ``lam`` above pointwise."""
        return contains(other, self)

    def __lt__(self, other: "Ifs") -> bool:
        return self <= other and self != other


def contains(big: Ifs, small: Ifs) -> bool:
    """True iff ``small`` is included in ``big``."""
    return all(ms <= mb and ls >= lb
               for (ms, ls), (mb, lb) in zip(small.pairs(), big.pairs()))


def complement(m: FuzzySet) -> FuzzySet:
    return FuzzySet(m.carrier, tuple(ONE - d for d in m.degrees))


def upper_cut(m: FuzzySet, alpha) -> frozenset[int]:
    alpha = to_degree(alpha)
    return frozenset(x for x, d in enumerate(m.degrees) if d >= alpha)


def lower_cut(m: FuzzySet, beta) -> frozenset[int]:
    beta = to_degree(beta)
    return frozenset(x for x, d in enumerate(m.degrees) if d <= beta)


def level_subset(A: Ifs, alpha, beta) -> frozenset[int]:
    alpha, beta = to_degree(alpha), to_degree(beta)
    if alpha + beta > ONE:
        raise InputError(f"alpha + beta = {alpha + beta} > 1")
    return upper_cut(A.mu, alpha) & lower_cut(A.lam, beta)


def image_pairs(A: Ifs) -> list[tuple[Fraction, Fraction]]:
    return [(a, b) for a in A.mu.image() for b in A.lam.image() if a + b <= ONE]


# -- checkers ----------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Violation:
    condition: str
    witness: tuple[tuple[str, int], ...]
    degrees: tuple[Fraction, ...] = field(default=(), compare=False)

    def __str__(self):
        args = " ".join(f"{k}={v}" for k, v in self.witness)
        return f"condition {self.condition} violated at {args}"

    def witness_dict(self) -> dict[str, int]:
        return dict(self.witness)


@dataclass(frozen=True)
class CheckReport:
    verdict: bool
    violations: tuple[Violation, ...] = ()
    windowed: bool = False
    total: int = 0

    def __bool__(self):
        return self.verdict

    @property
    def truncated(self) -> bool:
        return self.total > len(self.violations)

    def conditions(self) -> set[str]:
        return {v.condition for v in self.violations}


def _keys(degrees: Sequence[Fraction], lower_is_better: bool) -> np.ndarray:
    rank = {d: i for i, d in enumerate(sorted(set(degrees)))}
    k = np.array([rank[d] for d in degrees], dtype=np.int64)
    return -k if lower_is_better else k


def _take(mask: np.ndarray, cap: int | None) -> tuple[np.ndarray, int]:
    hits = np.argwhere(mask)
    total = len(hits)
    if cap is not None:
        hits = hits[:cap]
    return hits, total


def _sweep(carrier, degrees, kind: str, cond: str, lower_is_better: bool, cap):
    """Violations of one closure condition for one fuzzy set."""
    k = _keys(degrees, lower_is_better)
    d = degrees
    out = []
    if kind == "add":
        S = carrier.add_array
        valid = S != UNDEFINED
        lhs = k[np.where(valid, S, 0)]
        bad = valid & (lhs < np.minimum(k[:, None], k[None, :]))
        hits, total = _take(bad, cap)
        for x, y in hits:
            x, y = int(x), int(y)
            out.append(Violation(cond, (("x", x), ("y", y)), (d[S[x, y]], d[x], d[y])))
    elif kind == "mul":
        P = carrier.mul_array
        valid = P != UNDEFINED
        lhs = k[np.where(valid, P, 0)]
        bad = valid & (lhs < k[None, :])
        hits, total = _take(bad, cap)
        for x, y in hits:
            x, y = int(x), int(y)
            out.append(Violation(cond, (("x", x), ("y", y)), (d[P[x, y]], d[y])))
    elif kind == "h":
        S = carrier.add_array
        H = carrier.h_relation
        valid = S != UNDEFINED
        Z = H[np.where(valid, S, 0)]          # [x, a, b] -> least z or -1
        related = valid[:, :, None] & (Z != UNDEFINED)
        bad = related & (k[:, None, None] < np.minimum(k[None, :, None], k[None, None, :]))
        hits, total = _take(bad, cap)
        for x, a, b in hits:
            x, a, b = int(x), int(a), int(b)
            z = int(Z[x, a, b])
            out.append(Violation(cond, (("x", x), ("a", a), ("b", b), ("z", z)),
                                 (d[x], d[a], d[b])))
    else:
        raise ValueError(kind)
    return out, total


def _report(carrier, parts, cap) -> CheckReport:
    violations = []
    total = 0
    for vs, t in parts:
        violations.extend(vs)
        total += t
    violations.sort()
    if cap is not None:
        violations = violations[:cap]
    return CheckReport(total == 0, tuple(violations), carrier.windowed, total)


_MU_CONDITIONS = (("1", "add"), ("3", "mul"), ("5", "h"))
_LAM_CONDITIONS = (("2", "add"), ("4", "mul"), ("6", "h"))


def membership_violations(m: FuzzySet, *, ids=("F1", "F2", "F3"), lower_is_better=False,
                          kinds=("add", "mul", "h"), cap=DEFAULT_CAP):
    parts = [_sweep(m.carrier, m.degrees, kind, cid, lower_is_better, cap)
             for cid, kind in zip(ids, kinds)]
    return _report(m.carrier, parts, cap)


def is_fuzzy_left_h_ideal(m: FuzzySet, cap: int | None = DEFAULT_CAP) -> CheckReport:
    """Conditions F1 (sums), F2 (left products) and F3 (h-condition)."""
    return membership_violations(m, cap=cap)


def _if_check(A: Ifs, kinds, cap) -> CheckReport:
    parts = []
    for cid, kind in _MU_CONDITIONS:
        if kind in kinds:
            parts.append(_sweep(A.carrier, A.mu.degrees, kind, cid, False, cap))
    for cid, kind in _LAM_CONDITIONS:
        if kind in kinds:
            parts.append(_sweep(A.carrier, A.lam.degrees, kind, cid, True, cap))
    return _report(A.carrier, parts, cap)


def is_if_left_ideal(A: Ifs, cap: int | None = DEFAULT_CAP) -> CheckReport:
    return _if_check(A, ("add", "mul"), cap)


def is_if_left_h_ideal(A: Ifs, cap: int | None = DEFAULT_CAP) -> CheckReport:
    """All six conditions; each violation names its condition (1-6)."""
    return _if_check(A, ("add", "mul", "h"), cap)


def mu_side_ok(carrier, degrees: Iterable[Fraction]) -> bool:
    """Conditions 1, 3, 5 for a membership function (cap 1, fast path)."""
    degrees = tuple(degrees)
    return all(_sweep(carrier, degrees, kind, cid, False, 1)[1] == 0
               for cid, kind in _MU_CONDITIONS)


def lam_side_ok(carrier, degrees: Iterable[Fraction]) -> bool:
    degrees = tuple(degrees)
    return all(_sweep(carrier, degrees, kind, cid, True, 1)[1] == 0
               for cid, kind in _LAM_CONDITIONS)
