"""Plain-text formats for hemirings, IF sets and morphisms.

Hemiring file::

    hemiring
    order 2
    add
    0 1
    1 0
    mul
    0 0
    0 1

IFS file (one ``index mu lambda`` line per element, degrees as ``p/q`` or
decimal literals)::

    over 2
    0 7/10 1/10
    1 3/10 1/2

``over N window W`` declares a windowed-naturals carrier.  Morphism file::

    hom
    from R1
    to BOOL
    map 0 1 1 1

``#`` starts a comment everywhere.
"""
from __future__ import annotations

from typing import Callable

from .algebra import Hemiring, Morphism, WindowedNaturals, validate_hemiring
from .errors import AxiomError, InputError, ParseError
from .fuzzy import Ifs, to_degree


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def _ints(tokens, number):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", number) from None


def parse_tables(text: str):
    """Read the two tables without checking the axioms."""
    lines = list(_lines(text))
    pos = 0

    def take(expect=None):
        nonlocal pos
        if pos >= len(lines):
            last = lines[-1][0] if lines else 0
            raise ParseError(f"unexpected end of file, expected {expect or 'more rows'}", last + 1)
        number, tokens = lines[pos]
        pos += 1
        if expect is not None and tokens[0] != expect:
            raise ParseError(f"expected {expect!r}, got {tokens[0]!r}", number)
        return number, tokens

    take("hemiring")
    number, tokens = take("order")
    if len(tokens) != 2:
        raise ParseError("expected 'order n'", number)
    (n,) = _ints(tokens[1:], number)
    if n < 1:
        raise ParseError("order must be positive", number)

    tables = []
    for label in ("add", "mul"):
        number, tokens = take(label)
        if len(tokens) != 1:
            raise ParseError(f"unexpected tokens after {label!r}", number)
        rows = []
        for _ in range(n):
            number, tokens = take()
            if tokens[0] in ("add", "mul"):
                raise ParseError(f"{label} table has {len(rows)} rows, expected {n}", number)
            row = _ints(tokens, number)
            if len(row) != n:
                raise ParseError(f"row has {len(row)} entries, expected {n}", number)
            for v in row:
                if not 0 <= v < n:
                    raise ParseError(f"entry {v} out of range 0..{n - 1}", number)
            rows.append(row)
        tables.append(rows)
    if pos < len(lines):
        raise ParseError("trailing content", lines[pos][0])
    return tables[0], tables[1]


def parse_hemiring(text: str, name: str = "") -> Hemiring:
    add, mul = parse_tables(text)
    result = validate_hemiring(add, mul, name=name)
    if not isinstance(result, Hemiring):
        raise AxiomError(result)
    return result


def serialize_hemiring(R: Hemiring) -> str:
    out = ["hemiring", f"order {R.order}"]
    for label, table in (("add", R.add), ("mul", R.mul)):
        out.append(label)
        out.extend(" ".join(str(v) for v in row) for row in table)
    return "\n".join(out) + "\n"


def parse_carrier_header(text: str):
    """Carrier described by the ``over`` header: an order or a window."""
    for number, tokens in _lines(text):
        if tokens[0] == "ifs":
            continue
        if tokens[0] != "over":
            raise ParseError("expected 'over n' or 'over N window W'", number)
        if len(tokens) == 2:
            return _ints(tokens[1:], number)[0]
        if len(tokens) == 4 and tokens[1] == "N" and tokens[2] == "window":
            return WindowedNaturals(_ints(tokens[3:], number)[0])
        raise ParseError("expected 'over n' or 'over N window W'", number)
    raise ParseError("missing 'over' header", 1)


def parse_ifs(text: str, carrier=None) -> Ifs:
    """Parse an IFS file.  ``carrier`` is required for finite orders."""
    declared = parse_carrier_header(text)
    if isinstance(declared, WindowedNaturals):
        if carrier is None:
            carrier = declared
        elif carrier != declared:
            raise ParseError(f"file is over {declared.name} but the carrier is {carrier.name}", 1)
    else:
        if carrier is None:
            raise InputError("a finite IFS file needs its hemiring")
        if declared != carrier.order:
            raise ParseError(
                f"file is over {declared} elements but the carrier has order {carrier.order}", 1)
    n = carrier.order
    mu = [None] * n
    lam = [None] * n
    seen_header = False
    for number, tokens in _lines(text):
        if not seen_header:
            if tokens[0] == "over":
                seen_header = True
            continue
        if len(tokens) != 3:
            raise ParseError("expected 'index mu lambda'", number)
        (x,) = _ints(tokens[:1], number)
        if not 0 <= x < n:
            raise ParseError(f"element {x} outside carrier of order {n}", number)
        if mu[x] is not None:
            raise ParseError(f"element {x} given twice", number)
        try:
            m, l = to_degree(tokens[1]), to_degree(tokens[2])
        except InputError as exc:
            raise ParseError(str(exc), number) from None
        if m + l > 1:
            raise ParseError(f"sum {m + l} > 1 at element {x}", number)
        mu[x], lam[x] = m, l
    missing = [x for x in range(n) if mu[x] is None]
    if missing:
        raise ParseError(f"missing element {missing[0]}")
    return Ifs.of(carrier, mu, lam)


def serialize_ifs(A: Ifs) -> str:
    carrier = A.carrier
    if isinstance(carrier, WindowedNaturals):
        out = [f"over N window {carrier.window}"]
    else:
        out = [f"over {carrier.order}"]
    out.extend(f"{x} {m} {l}" for x, (m, l) in enumerate(A.pairs()))
    return "\n".join(out) + "\n"


def parse_morphism(text: str, resolve: Callable[[str], Hemiring]) -> Morphism:
    """``resolve`` maps the ``from``/``to`` references to hemirings."""
    fields = {}
    for number, tokens in _lines(text):
        key = tokens[0]
        if key == "hom" and len(tokens) == 1:
            fields["hom"] = number
        elif key in ("from", "to") and len(tokens) == 2:
            fields[key] = (number, tokens[1])
        elif key == "map":
            fields["map"] = (number, _ints(tokens[1:], number))
        else:
            raise ParseError(f"unexpected line {' '.join(tokens)!r}", number)
    for key in ("hom", "from", "to", "map"):
        if key not in fields:
            raise ParseError(f"missing {key!r} line")
    dom = resolve(fields["from"][1])
    cod = resolve(fields["to"][1])
    number, images = fields["map"]
    try:
        return Morphism(dom, cod, tuple(images))
    except InputError as exc:
        raise ParseError(str(exc), number) from None


def serialize_morphism(f: Morphism) -> str:
    return "\n".join([
        "hom",
        f"from {f.dom.name}",
        f"to {f.cod.name}",
        "map " + " ".join(str(v) for v in f.images),
    ]) + "\n"
