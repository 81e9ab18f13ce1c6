"""Crisp left ideals and left h-ideals of a finite carrier."""
from __future__ import annotations

from typing import Iterable

from .algebra import UNDEFINED, Witnessed
from .errors import InputError

ElementSubset = frozenset


def subset_key(A) -> tuple[int, int]:
    """Canonical order: by size, then by bitmask."""
    return (len(A), sum(1 << x for x in A))


def _as_subset(R, A) -> frozenset[int]:
    A = frozenset(int(x) for x in A)
    if not A:
        raise InputError("ideal predicates need a nonempty subset")
    for x in A:
        if not 0 <= x < R.order:
            raise InputError(f"element {x} outside carrier of order {R.order}")
    return A


def is_left_ideal(R, A) -> Witnessed:
    """``A + A`` and ``R A`` must stay inside ``A``.

    The witness is ``(x, y)`` for a sum ``x + y`` or a product ``x * y``
    falling outside ``A``; ``reason`` says which.
    """
    A = _as_subset(R, A)
    for x in sorted(A):
        for y in sorted(A):
            s = R.sum(x, y)
            if s != UNDEFINED and s not in A:
                return Witnessed(False, (x, y), "sum")
    for r in R.elements:
        for a in sorted(A):
            p = R.product(r, a)
            if p != UNDEFINED and p not in A:
                return Witnessed(False, (r, a), "product")
    return Witnessed(True)


def is_left_h_ideal(R, A) -> Witnessed:
    """Left ideal plus the h-condition.  The h witness is ``(x, a, b, z)``
    with ``x + a + z == b + z``, ``a, b`` in ``A`` and ``x`` outside."""
    A = _as_subset(R, A)
    ideal = is_left_ideal(R, A)
    if not ideal:
        return ideal
    H = R.h_relation
    members = sorted(A)
    for x in R.elements:
        if x in A:
            continue
        for a in members:
            s = R.sum(x, a)
            if s == UNDEFINED:
                continue
            for b in members:
                z = int(H[s, b])
                if z != UNDEFINED:
                    return Witnessed(False, (x, a, b, z), "h-condition")
    return Witnessed(True)


def h_closure(R, A) -> frozenset[int]:
    """Least left h-ideal containing ``A`` (fixpoint of the closure rules)."""
    A = set(_as_subset(R, A))
    H = R.h_relation
    changed = True
    while changed:
        changed = False
        members = sorted(A)
        new = set()
        for a in members:
            for b in members:
                new.add(R.sum(a, b))
        for r in R.elements:
            for a in members:
                new.add(R.product(r, a))
        for x in R.elements:
            if x in A or x in new:
                continue
            for a in members:
                s = R.sum(x, a)
                if s != UNDEFINED and any(H[s, b] != UNDEFINED for b in members):
                    new.add(x)
                    break
        new.discard(UNDEFINED)
        if not new <= A:
            A |= new
            changed = True
    return frozenset(A)


def enumerate_left_h_ideals(R) -> list[frozenset[int]]:
    """All left h-ideals sorted by ``subset_key``.

    Left h-ideals are exactly the closed sets of :func:`h_closure`, so they
    are reached from the least one by repeatedly adjoining one element and
    closing again.
    """
    bottom = h_closure(R, {0})
    seen = {bottom}
    frontier = [bottom]
    while frontier:
        nxt = []
        for ideal in frontier:
            for x in R.elements:
                if x in ideal:
                    continue
                closed = h_closure(R, ideal | {x})
                if closed not in seen:
                    seen.add(closed)
                    nxt.append(closed)
        frontier = nxt
    return sorted(seen, key=subset_key)


def maximal_left_h_ideals(R, ideals: Iterable[frozenset[int]] | None = None) -> list[frozenset[int]]:
    """Proper left h-ideals with no proper left h-ideal strictly above them."""
    if ideals is None:
        ideals = enumerate_left_h_ideals(R)
    whole = frozenset(R.elements)
    proper = [I for I in ideals if I != whole]
    return [I for I in proper if not any(I < J for J in proper)]
