"""Built-in structures: small hemirings, their IF sets, and morphisms.

``claimed_ideal`` records a published assertion about an IFS (that it
is an IF left h-ideal).  It is kept for adjudication only; no checker reads
it.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (Hemiring, Morphism, WindowedNaturals, product_hemiring,
                      trivial_hemiring)
from .constructions import indicator_ifs
from .errors import InputError
from .fuzzy import FuzzySet, Ifs, complement

half, quarter = Fraction(1, 2), Fraction(1, 4)

R1 = Hemiring.from_tables(
    [[0, 1, 2, 3],
     [1, 1, 2, 3],
     [2, 2, 2, 3],
     [3, 3, 3, 2]],
    [[0, 0, 0, 0],
     [0, 1, 1, 1],
     [0, 1, 1, 1],
     [0, 1, 1, 1]],
    "R1",
)
Z2 = Hemiring.from_tables([[0, 1], [1, 0]], [[0, 0], [0, 1]], "Z2")
BOOL = Hemiring.from_tables([[0, 1], [1, 1]], [[0, 0], [0, 1]], "BOOL")
B2B = product_hemiring(BOOL, BOOL, "B2B")
Z2xZ2 = product_hemiring(Z2, Z2, "Z2xZ2")
TRIV = trivial_hemiring()

H123 = frozenset({0, 1, 2})

A1 = Ifs.of(R1, ("0.4", "0.2", "0.2", "0.2"), ("0.2", "0.7", "0.7", "0.7"))
T123 = indicator_ifs(R1, H123)
A3 = Ifs.of(Z2, ("0.7", "0.3"), ("0.1", "0.5"))

# B2B indices: (i, j) -> 2i + j; the coordinate swap exchanges 1 and 2
B2B_SYM1 = Ifs.constant(B2B, half, quarter)
B2B_SYM2 = Ifs.of(B2B, (1, half, half, 0), (0, quarter, quarter, 1))
B2B_ASYM1 = Ifs.of(B2B, (1, half, quarter, 0), (0, half, 1 - quarter, 1))
B2B_ASYM2 = Ifs.of(B2B, (half, half, 0, 0), (half, 0, 1, 1))

Z2xZ2_SYM = Ifs.of(Z2xZ2, (1, Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)),
                   (0, half, half, half))
Z2xZ2_ASYM = Ifs.of(Z2xZ2, (1, quarter, half, quarter), (0, half, quarter, half))


def mu2(carrier: WindowedNaturals) -> FuzzySet:
    """1 on multiples of 4, 1/2 on the other even numbers, 0 on odd ones."""
    return FuzzySet(carrier, tuple(
        Fraction(1) if x % 4 == 0 else half if x % 2 == 0 else Fraction(0)
        for x in carrier.elements))


def mu2_ifs(carrier: WindowedNaturals) -> Ifs:
    m = mu2(carrier)
    return Ifs(m, complement(m))


DEFAULT_WINDOW = 64

COLLAPSE_R1_BOOL = Morphism(R1, BOOL, (0, 1, 1, 1))
PROJECT_B2B_BOOL = Morphism(B2B, BOOL, (0, 0, 1, 1))
IDENTITY_Z2 = Morphism.identity(Z2)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    structure: object
    ifs: tuple[Ifs, ...] = ()
    description: str = ""
    claimed_ideal: bool | None = None


_ENTRIES = {
    "R1": CatalogEntry("R1", R1, (A1, T123), "four-element hemiring with its example IF sets"),
    "Z2": CatalogEntry("Z2", Z2, (A3,), "integers mod 2"),
    "BOOL": CatalogEntry("BOOL", BOOL, (), "Boolean semiring ({0,1}, or, and)"),
    "B2B": CatalogEntry("B2B", B2B, (B2B_SYM1, B2B_SYM2, B2B_ASYM1, B2B_ASYM2),
                        "BOOL x BOOL"),
    "Z2xZ2": CatalogEntry("Z2xZ2", Z2xZ2, (Z2xZ2_SYM, Z2xZ2_ASYM), "Z2 x Z2"),
    "TRIV": CatalogEntry("TRIV", TRIV, (), "one-element hemiring"),
    "A1": CatalogEntry("A1", R1, (A1,), "example IFS on R1: (2/5, 1/5) at 0, (1/5, 7/10) elsewhere",
                       claimed_ideal=True),
    "T123": CatalogEntry("T123", R1, (T123,), "indicator IFS of the h-ideal {0,1,2} of R1"),
    "A3": CatalogEntry("A3", Z2, (A3,), "IFS on Z2 with mu=(7/10, 3/10), lambda=(1/10, 1/2)"),
    "B2B_SYM1": CatalogEntry("B2B_SYM1", B2B, (B2B_SYM1,), "swap-symmetric constant IFS on B2B"),
    "B2B_SYM2": CatalogEntry("B2B_SYM2", B2B, (B2B_SYM2,), "swap-symmetric IFS on B2B"),
    "B2B_ASYM1": CatalogEntry("B2B_ASYM1", B2B, (B2B_ASYM1,), "IFS on B2B moved by the swap"),
    "B2B_ASYM2": CatalogEntry("B2B_ASYM2", B2B, (B2B_ASYM2,), "IFS on B2B moved by the swap"),
    "Z2xZ2_SYM": CatalogEntry("Z2xZ2_SYM", Z2xZ2, (Z2xZ2_SYM,), "swap-symmetric IFS on Z2xZ2"),
    "Z2xZ2_ASYM": CatalogEntry("Z2xZ2_ASYM", Z2xZ2, (Z2xZ2_ASYM,), "IFS on Z2xZ2 moved by the swap"),
}

IFS_NAMES = ("A1", "T123", "A3", "MU2", "B2B_SYM1", "B2B_SYM2", "B2B_ASYM1", "B2B_ASYM2",
             "Z2xZ2_SYM", "Z2xZ2_ASYM")

_WINDOW = re.compile(r"N_(\d+)$")


def catalog_names() -> list[str]:
    return ["R1", "Z2", "BOOL", "B2B", "Z2xZ2", "TRIV", f"N_W (e.g. N_{DEFAULT_WINDOW})",
            "A1", "T123", "A3", "MU2", "B2B_SYM1", "B2B_SYM2", "B2B_ASYM1", "B2B_ASYM2",
            "Z2xZ2_SYM", "Z2xZ2_ASYM"]


def catalog_get(name: str) -> CatalogEntry:
    if name in _ENTRIES:
        return _ENTRIES[name]
    m = _WINDOW.match(name)
    if m:
        N = WindowedNaturals(int(m.group(1)))
        return CatalogEntry(name, N, (mu2_ifs(N),), f"naturals windowed at {N.window}")
    if name == "MU2":
        N = WindowedNaturals(DEFAULT_WINDOW)
        return CatalogEntry("MU2", N, (mu2_ifs(N),),
                            "(mu, 1 - mu) on windowed naturals; mu is 1 on 4N, 1/2 on 2N - 4N, else 0",
                            claimed_ideal=True)
    raise InputError(f"unknown catalog name {name!r}")


def catalog_ifs(name: str, carrier) -> Ifs:
    """A named IFS placed on ``carrier``; MU2 adapts to any window."""
    if name == "MU2":
        if not isinstance(carrier, WindowedNaturals):
            raise InputError("MU2 lives on windowed naturals")
        return mu2_ifs(carrier)
    entry = catalog_get(name)
    if name not in IFS_NAMES:
        raise InputError(f"{name!r} is a structure, not an IFS")
    A = entry.ifs[0]
    if A.carrier != carrier:
        raise InputError(f"{name} lives on {entry.structure.name}, not {carrier.name}")
    return A


def catalog_rings() -> list[Hemiring]:
    return [R1, Z2, BOOL, B2B, Z2xZ2, TRIV]
