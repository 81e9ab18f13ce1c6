"""Operations that build a new intuitionistic fuzzy set from old data."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .algebra import Morphism, is_homomorphism
from .errors import InputError, PreconditionError
from .fuzzy import ONE, ZERO, FuzzySet, Ifs, to_degree


def two_valued_ifs(R, A, a1, a2, b1, b2) -> Ifs:
    """``(a2, b2)`` on ``A`` and ``(a1, b1)`` off it.

    Requires ``a1 < a2``, ``b2 < b1`` and both pairs summing to at most 1.
    """
    a1, a2, b1, b2 = (to_degree(v) for v in (a1, a2, b1, b2))
    if not a1 < a2:
        raise InputError(f"need a1 < a2, got {a1}, {a2}")
    if not b2 < b1:
        raise InputError(f"need b2 < b1, got {b2}, {b1}")
    if a1 + b1 > ONE or a2 + b2 > ONE:
        raise InputError("each (a_i, b_i) pair must sum to at most 1")
    A = frozenset(A)
    if not A:
        raise InputError("subset must be nonempty")
    mu = tuple(a2 if x in A else a1 for x in R.elements)
    lam = tuple(b2 if x in A else b1 for x in R.elements)
    return Ifs.of(R, mu, lam)


def indicator_ifs(R, A) -> Ifs:
    """``(1, 0)`` on ``A`` and ``(0, 1)`` elsewhere."""
    return two_valued_ifs(R, A, 0, 1, 1, 0)


def plus_violations(A: Ifs) -> list[tuple[int, Fraction]]:
    """Elements where the shifted pair is not a valid degree pair.

    Each entry is ``(x, mu+(x) + lambda+(x))``; elements whose shifted
    degrees leave ``[0, 1]`` are reported with the same sum value.
    """
    m0, l0 = A(0)
    out = []
    for x, (m, l) in enumerate(A.pairs()):
        mp = m + ONE - m0
        lp = l - l0
        if mp + lp > ONE or not (ZERO <= mp <= ONE and ZERO <= lp <= ONE):
            out.append((x, mp + lp))
    return out


def normalize_plus(A: Ifs) -> Ifs:
    """Shift ``mu`` up by ``1 - mu(0)`` and ``lambda`` down by ``lambda(0)``."""
    bad = plus_violations(A)
    if bad:
        x, total = bad[0]
        raise PreconditionError(
            f"precondition violated at x={x} (sum {total})", element=x, violations=bad)
    m0, l0 = A(0)
    return Ifs.of(A.carrier,
                  tuple(m + ONE - m0 for m in A.mu.degrees),
                  tuple(l - l0 for l in A.lam.degrees))


def average_with_element(A: Ifs, c: int) -> Ifs:
    if not 0 <= c < A.carrier.order:
        raise InputError(f"element {c} outside the carrier")
    mc, lc = A(c)
    half = Fraction(1, 2)
    return Ifs.of(A.carrier,
                  tuple(half * (m + mc) for m in A.mu.degrees),
                  tuple(half * (l + lc) for l in A.lam.degrees))


@dataclass(frozen=True)
class MonotoneFn:
    """An increasing map on degrees, either closed-form or tabulated."""

    name: str
    func: Callable[[Fraction], Fraction] | None = None
    table: Mapping[Fraction, Fraction] | None = None

    def __call__(self, t) -> Fraction:
        t = to_degree(t)
        if self.table is not None:
            try:
                return self.table[t]
            except KeyError:
                raise InputError(f"{self.name} is not defined at {t}") from None
        return Fraction(self.func(t))

    @classmethod
    def from_pairs(cls, pairs, name: str = "table") -> "MonotoneFn":
        table = {to_degree(k): to_degree(v) for k, v in pairs}
        return cls(name, table=table)

    @classmethod
    def named(cls, name: str) -> "MonotoneFn":
        try:
            return NAMED_FUNCTIONS[name]
        except KeyError:
            raise InputError(
                f"unknown function {name!r}; choose from {', '.join(NAMED_FUNCTIONS)}") from None

    def restricted_to(self, values) -> "MonotoneFn":
        """Tabulate on the given degrees only."""
        return MonotoneFn.from_pairs(((v, self(v)) for v in values), name=self.name)


NAMED_FUNCTIONS = {
    "identity": MonotoneFn("identity", lambda t: t),
    "square": MonotoneFn("square", lambda t: t * t),
    "affine": MonotoneFn("affine", lambda t: (t + 1) / 2),
    "half": MonotoneFn("half", lambda t: t / 2),
}


def transform_problems(A: Ifs, f: MonotoneFn) -> list[str]:
    """Reasons ``f`` is not admissible for ``A``; empty when it is."""
    problems = []
    attained = sorted(set(A.mu.degrees) | set(A.lam.degrees))
    try:
        outputs = [f(t) for t in attained]
    except InputError as exc:
        return [str(exc)]
    for t, v in zip(attained, outputs):
        if not ZERO <= v <= ONE:
            problems.append(f"f({t}) = {v} outside [0, 1]")
    for (s, fs), (t, ft) in zip(zip(attained, outputs), zip(attained[1:], outputs[1:])):
        if not fs < ft:
            problems.append(f"not strictly increasing: f({s}) = {fs}, f({t}) = {ft}")
    if not problems:
        for x, (m, l) in enumerate(A.pairs()):
            total = f(m) + f(l)
            if total > ONE:
                problems.append(f"f(mu) + f(lambda) = {total} > 1 at x={x}")
                break
    return problems


def monotone_transform(A: Ifs, f: MonotoneFn) -> Ifs:
    problems = transform_problems(A, f)
    if problems:
        raise PreconditionError(f"{f.name} not admissible: {problems[0]}")
    return Ifs.of(A.carrier, tuple(f(m) for m in A.mu.degrees),
                  tuple(f(l) for l in A.lam.degrees))


def preimage_under_hom(f: Morphism, A: Ifs) -> Ifs:
    """Pull ``A`` back along ``f``: ``x -> A(f(x))``."""
    check = is_homomorphism(f)
    if not check:
        raise InputError(f"not a homomorphism: {check.reason} at {check.witness}")
    if A.carrier != f.cod:
        raise InputError("the IFS does not live on the codomain of the morphism")
    return Ifs(FuzzySet(f.dom, tuple(A.mu(f(x)) for x in f.dom.elements)),
               FuzzySet(f.dom, tuple(A.lam(f(x)) for x in f.dom.elements)))
