"""Finite hemirings given by Cayley tables, their morphisms and automorphisms.

Elements are carrier indices ``0 .. n-1`` and index 0 is always the zero.
Besides genuine hemirings the module provides :class:`WindowedNaturals`, a
finite window ``{0, ..., W}`` of the natural numbers whose tables mark sums
and products leaving the window as undefined (``-1``).  Every sweep in the
package skips undefined entries, so the same checkers run on both kinds of
carrier.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import AxiomError, InputError

UNDEFINED = -1

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Witnessed:
    """Boolean verdict with an optional witness; truthy iff ``ok``."""

    ok: bool
    witness: tuple | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


class _TableCarrier:
    """Shared numpy views and derived relations for table-backed carriers."""

    add: Table
    mul: Table
    windowed = False

    @property
    def order(self) -> int:
        return len(self.add)

    @property
    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def add_array(self) -> np.ndarray:
        return np.array(self.add, dtype=np.int64).reshape(self.order, self.order)

    @cached_property
    def mul_array(self) -> np.ndarray:
        return np.array(self.mul, dtype=np.int64).reshape(self.order, self.order)

    @cached_property
    def h_relation(self) -> np.ndarray:
        """``H[s, b]`` is the least ``z`` with ``s + z == b + z``, else -1.

        The h-condition ``x + a + z == b + z`` becomes ``H[x + a, b] >= 0``
        with ``z = H[x + a, b]`` as the smallest witness.
        """
        A = self.add_array
        eq = (A[:, None, :] == A[None, :, :]) & (A[:, None, :] != UNDEFINED)
        first = eq.argmax(axis=2)
        return np.where(eq.any(axis=2), first, UNDEFINED)

    def sum(self, x: int, y: int) -> int:
        return self.add[x][y]

    def product(self, x: int, y: int) -> int:
        return self.mul[x][y]


@dataclass(frozen=True, eq=True)
class Hemiring(_TableCarrier):
    """A finite hemiring.  Construct through :func:`validate_hemiring` or
    :meth:`from_tables`, which check every axiom."""

    add: Table
    mul: Table
    name: str = field(default="", compare=False)

    @classmethod
    def from_tables(cls, add, mul, name: str = "") -> "Hemiring":
        result = validate_hemiring(add, mul, name=name)
        if not isinstance(result, Hemiring):
            raise AxiomError(result)
        return result

    def __repr__(self):
        return f"Hemiring({self.name or 'order ' + str(self.order)})"


@dataclass(frozen=True)
class WindowedNaturals(_TableCarrier):
    """The naturals ``0 .. window`` under ordinary ``+`` and ``*``.

    Results above the window are undefined; a check over this carrier only
    ranges over instantiations whose intermediate values stay in the window.
    """

    window: int
    windowed = True

    def __post_init__(self):
        if self.window < 0:
            raise InputError("window must be non-negative")

    @property
    def name(self) -> str:
        return f"N_{self.window}"

    @cached_property
    def add(self) -> Table:
        W = self.window
        return tuple(tuple(x + y if x + y <= W else UNDEFINED for y in range(W + 1))
                     for x in range(W + 1))

    @cached_property
    def mul(self) -> Table:
        W = self.window
        return tuple(tuple(x * y if x * y <= W else UNDEFINED for y in range(W + 1))
                     for x in range(W + 1))

    def __repr__(self):
        return f"WindowedNaturals({self.window})"


# -- axiom validation --------------------------------------------------------

AXIOMS = (
    "additive associativity",
    "additive commutativity",
    "multiplicative associativity",
    "additive identity",
    "multiplicative zero",
    "left distributivity",
    "right distributivity",
)


@dataclass(frozen=True)
class AxiomViolation:
    axiom: str
    witness: tuple[int, ...]

    def __str__(self):
        names = "xyz"[: len(self.witness)]
        args = " ".join(f"{k}={v}" for k, v in zip(names, self.witness))
        return f"{self.axiom} violated at {args}"


def _normalize_table(table, label: str) -> Table:
    try:
        rows = tuple(tuple(int(v) for v in row) for row in table)
    except TypeError:
        raise InputError(f"{label} table must be a sequence of rows") from None
    n = len(rows)
    if n == 0:
        raise InputError(f"{label} table is empty")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise InputError(f"{label} table row {i} has {len(row)} entries, expected {n}")
        for v in row:
            if not 0 <= v < n:
                raise InputError(f"{label} table entry {v} out of range 0..{n - 1}")
    return rows


def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    return tuple(int(v) for v in hits[0]) if len(hits) else None


def axiom_violations(add, mul) -> list[AxiomViolation]:
    """Every violated hemiring axiom with its lexicographically first witness."""
    add_t = _normalize_table(add, "add")
    mul_t = _normalize_table(mul, "mul")
    if len(add_t) != len(mul_t):
        raise InputError(f"add has order {len(add_t)} but mul has order {len(mul_t)}")
    A = np.array(add_t)
    M = np.array(mul_t)
    n = len(A)
    ix = np.arange(n)
    X, Y, Z = ix[:, None, None], ix[None, :, None], ix[None, None, :]

    checks = {
        "additive associativity": A[A[X, Y], Z] != A[X, A[Y, Z]],
        "additive commutativity": A != A.T,
        "multiplicative associativity": M[M[X, Y], Z] != M[X, M[Y, Z]],
        "additive identity": (A[0] != ix) | (A[:, 0] != ix),
        "multiplicative zero": (M[0] != 0) | (M[:, 0] != 0),
        "left distributivity": M[X, A[Y, Z]] != A[M[X, Y], M[X, Z]],
        "right distributivity": M[A[X, Y], Z] != A[M[X, Z], M[Y, Z]],
    }
    out = []
    for axiom in AXIOMS:
        w = _first(checks[axiom])
        if w is not None:
            out.append(AxiomViolation(axiom, w))
    return out


def validate_hemiring(add, mul, name: str = "") -> Hemiring | list[AxiomViolation]:
    """Return the hemiring if every axiom holds, else the list of violations.

    Ragged or out-of-range tables raise :class:`InputError`; axiom failures
    are returned, not raised.
    """
    violations = axiom_violations(add, mul)
    if violations:
        return violations
    return Hemiring(_normalize_table(add, "add"), _normalize_table(mul, "mul"), name)


def trivial_hemiring() -> Hemiring:
    return Hemiring(((0,),), ((0,),), "TRIV")


def product_hemiring(R: Hemiring, S: Hemiring, name: str = "") -> Hemiring:
    """Componentwise product; the pair ``(i, j)`` has index ``i * |S| + j``."""
    m = S.order
    pairs = [(i, j) for i in R.elements for j in S.elements]

    def table(op_r, op_s):
        return tuple(
            tuple(op_r[i][k] * m + op_s[j][l] for (k, l) in pairs)
            for (i, j) in pairs
        )

    return Hemiring.from_tables(table(R.add, S.add), table(R.mul, S.mul),
                                name or f"{R.name}x{S.name}")


# -- morphisms ---------------------------------------------------------------

@dataclass(frozen=True)
class Morphism:
    """A map between carriers, given by the image of each domain index."""

    dom: Hemiring
    cod: Hemiring
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.dom.order:
            raise InputError(
                f"map has {len(images)} images but the domain has order {self.dom.order}")
        for v in images:
            if not 0 <= v < self.cod.order:
                raise InputError(f"image {v} outside codomain of order {self.cod.order}")

    def __call__(self, x: int) -> int:
        return self.images[x]

    @property
    def surjective(self) -> bool:
        return len(set(self.images)) == self.cod.order

    @classmethod
    def identity(cls, R: Hemiring) -> "Morphism":
        return cls(R, R, tuple(R.elements))


def is_homomorphism(f: Morphism) -> Witnessed:
    """Zero, addition and multiplication must all be preserved."""
    if f(0) != 0:
        return Witnessed(False, (0,), "zero not preserved")
    R, S = f.dom, f.cod
    for x in R.elements:
        for y in R.elements:
            if f(R.sum(x, y)) != S.sum(f(x), f(y)):
                return Witnessed(False, (x, y), "addition not preserved")
            if f(R.product(x, y)) != S.product(f(x), f(y)):
                return Witnessed(False, (x, y), "multiplication not preserved")
    return Witnessed(True)


def _signature(R: Hemiring, x: int) -> tuple:
    # automorphism invariants used to prune candidate images
    return (
        R.sum(x, x) == x,
        R.product(x, x) == x,
        sum(1 for y in R.elements if R.sum(x, y) == x),
        sum(1 for y in R.elements if R.product(x, y) == 0),
    )


def automorphisms(R: Hemiring) -> list[Morphism]:
    """All automorphisms of ``R`` sorted lexicographically by image word."""
    n = R.order
    sig = [_signature(R, x) for x in range(n)]
    perm = [UNDEFINED] * n
    perm[0] = 0
    used = [False] * n
    used[0] = True
    found: list[tuple[int, ...]] = []

    def consistent(upto: int) -> bool:
        # checks pairs with both arguments assigned where the result is assigned too
        for x in range(upto + 1):
            for y in range(upto + 1):
                if x != upto and y != upto:
                    continue
                for op in (R.add, R.mul):
                    r = op[x][y]
                    if r <= upto and perm[r] != op[perm[x]][perm[y]]:
                        return False
        return True

    def extend(k: int):
        if k == n:
            found.append(tuple(perm))
            return
        for v in range(1, n):
            if used[v] or sig[v] != sig[k]:
                continue
            perm[k] = v
            used[v] = True
            if consistent(k):
                extend(k + 1)
            used[v] = False
        perm[k] = UNDEFINED

    if n == 1:
        found.append((0,))
    else:
        extend(1)
    # results whose sums or products landed beyond the prefix are rechecked here
    out = []
    for images in found:
        f = Morphism(R, R, images)
        if is_homomorphism(f):
            out.append(f)
    return out


def compose(f: Morphism, g: Morphism) -> Morphism:
    """``f after g``."""
    return Morphism(g.dom, f.cod, tuple(f(g(x)) for x in g.dom.elements))


def inverse(f: Morphism) -> Morphism:
    if not f.surjective or f.dom.order != f.cod.order:
        raise InputError("only bijections have inverses")
    inv = [0] * f.dom.order
    for x, y in enumerate(f.images):
        inv[y] = x
    return Morphism(f.cod, f.dom, tuple(inv))


def image_of(f: Morphism, subset: Sequence[int]) -> frozenset[int]:
    return frozenset(f(x) for x in subset)
