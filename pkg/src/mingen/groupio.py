"""Reading, writing and building concrete finite groups.

Cayley-table files are whitespace separated: a header line with the n
element names, then n rows where token j of row i is (element i)(element j).
'#' comment lines and blank lines are ignored.

Permutation files hold one permutation per line in cycle notation, with an
optional leading ``degree N`` line. Products compose left to right: in
``p*q`` the permutation ``p`` is applied first.
"""
from __future__ import annotations

import itertools
import re
from collections import deque
from importlib import resources
from typing import Sequence

from .errors import ParseError, ResourceError, UsageError, ValidationError
from .group import FiniteGroup
from .validation import ValidationReport, Violation, validate

__all__ = [
    "parse_cayley_table",
    "serialize_cayley_table",
    "parse_permutation_generators",
    "build_standard",
    "builtin",
    "load_table",
    "validate",
    "cycle_notation",
    "DEFAULT_CLOSURE_CAP",
]

DEFAULT_CLOSURE_CAP = 100_000

Perm = tuple[int, ...]


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_cayley_table(text: str, *, skip_associativity: bool = False) -> FiniteGroup:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty table")
    header_line, header = lines[0][0], lines[0][1].split()
    n = len(header)
    if len(set(header)) != n:
        dup = next(x for x in header if header.count(x) > 1)
        raise ParseError(f"duplicate element name {dup!r} in header", header_line)
    pos = {name: i for i, name in enumerate(header)}
    rows = lines[1:]
    if len(rows) != n:
        where = rows[n][0] if len(rows) > n else (rows[-1][0] if rows else header_line)
        raise ParseError(f"expected {n} table rows, found {len(rows)}", where)
    table = []
    for lineno, line in rows:
        tokens = line.split()
        if len(tokens) != n:
            raise ParseError(f"expected {n} cells, found {len(tokens)}", lineno)
        try:
            table.append([pos[t] for t in tokens])
        except KeyError as exc:
            raise ParseError(f"unknown element {exc.args[0]!r}", lineno) from None

    left_ids = [x for x in range(n) if table[x] == list(range(n))]
    if len(left_ids) != 1:
        raise ValidationError(ValidationReport((Violation("identity", tuple(left_ids[:3])),)))
    e = left_ids[0]
    order = [e] + [x for x in range(n) if x != e]
    new = {old: i for i, old in enumerate(order)}
    names = [header[old] for old in order]
    reindexed = [[new[table[a][b]] for b in order] for a in order]
    return FiniteGroup.from_table(names, reindexed, skip_associativity=skip_associativity)


def serialize_cayley_table(G: FiniteGroup) -> str:
    lines = [" ".join(G.names)]
    for row in G.table:
        lines.append(" ".join(G.names[x] for x in row))
    return "\n".join(lines) + "\n"


def load_table(path) -> FiniteGroup:
    with open(path, encoding="utf-8") as fh:
        return parse_cayley_table(fh.read())


# permutations -------------------------------------------------------------

_CYCLE = re.compile(r"\(([^()]*)\)")


def cycle_notation(p: Perm) -> str:
    """1-based cycle notation with comma separators, ``()`` for the identity."""
    seen = set()
    parts = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p[x]
        parts.append("(" + ",".join(str(i + 1) for i in cyc) + ")")
    return "".join(parts) or "()"


def _parse_perm(line: str, lineno: int, degree: int | None) -> list[list[int]]:
    stripped = _CYCLE.sub("", line).strip()
    if stripped:
        raise ParseError(f"unexpected text {stripped!r} outside cycles", lineno)
    cycles = []
    used: set[int] = set()
    for body in _CYCLE.findall(line):
        tokens = body.replace(",", " ").split()
        try:
            pts = [int(t) for t in tokens]
        except ValueError:
            raise ParseError(f"non-integer point in cycle ({body})", lineno) from None
        for pt in pts:
            if pt < 1:
                raise ParseError(f"points must be positive, got {pt}", lineno)
            if degree is not None and pt > degree:
                raise ParseError(f"point {pt} exceeds degree {degree}", lineno)
            if pt in used:
                raise ParseError(f"point {pt} appears in more than one cycle", lineno)
            used.add(pt)
        if pts:
            cycles.append(pts)
    return cycles


def _compose(p: Perm, q: Perm) -> Perm:
    # p first, then q
    return tuple(q[x] for x in p)


def _perm_group(gens: Sequence[Perm], degree: int, cap: int) -> FiniteGroup:
    ident = tuple(range(degree))
    elements = [ident]
    pos = {ident: 0}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = _compose(x, g)
            if y not in pos:
                if len(elements) >= cap:
                    raise ResourceError(f"generated group exceeds the closure cap of {cap} elements")
                pos[y] = len(elements)
                elements.append(y)
                queue.append(y)
    table = [[pos[_compose(x, y)] for y in elements] for x in elements]
    return FiniteGroup.from_table([cycle_notation(p) for p in elements], table)


def parse_permutation_generators(text: str, *, cap: int = DEFAULT_CLOSURE_CAP) -> FiniteGroup:
    """Group generated by the listed permutations, elements in BFS discovery order."""
    lines = list(_content_lines(text))
    degree = None
    if lines and lines[0][1].lower().startswith("degree"):
        lineno, line = lines.pop(0)
        parts = line.split()
        if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
            raise ParseError(f"malformed degree line {line!r}", lineno)
        degree = int(parts[1])
    parsed = [_parse_perm(line, lineno, degree) for lineno, line in lines]
    if degree is None:
        degree = max([pt for cycles in parsed for cyc in cycles for pt in cyc], default=1)
    gens = []
    for cycles in parsed:
        img = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b - 1
        gens.append(tuple(img))
    return _perm_group(gens, degree, cap)


# standard families -------------------------------------------------------

def _power_name(sym: str, k: int) -> str:
    if k == 0:
        return "e"
    return sym if k == 1 else f"{sym}^{k}"


def cyclic(n: int) -> FiniteGroup:
    """Powers g^0 .. g^(n-1) of one generator."""
    if n < 1:
        raise UsageError("cyclic group needs n >= 1")
    names = [_power_name("g", k) for k in range(n)]
    return FiniteGroup.from_table(names, [[(i + j) % n for j in range(n)] for i in range(n)])


def dihedral(n: int) -> FiniteGroup:
    """Order 2n: rotations r^i at index i, then reflections r^i s at index n+i."""
    if n < 3:
        raise UsageError("dihedral group needs n >= 3")
    elems = [(i, 0) for i in range(n)] + [(i, 1) for i in range(n)]

    def mul(x, y):
        (i, f), (j, g) = x, y
        return ((i + (-j if f else j)) % n, f ^ g)

    names = [_power_name("r", i) for i in range(n)]
    names += ["s" if i == 0 else _power_name("r", i) + "s" for i in range(n)]
    pos = {x: k for k, x in enumerate(elems)}
    return FiniteGroup.from_table(names, [[pos[mul(x, y)] for y in elems] for x in elems])


def symmetric(n: int) -> FiniteGroup:
    """All permutations of n points in lexicographic order (identity first)."""
    if not 1 <= n <= 6:
        raise UsageError("symmetric group supported for 1 <= n <= 6")
    elems = list(itertools.permutations(range(n)))
    pos = {p: k for k, p in enumerate(elems)}
    table = [[pos[_compose(p, q)] for q in elems] for p in elems]
    return FiniteGroup.from_table([cycle_notation(p) for p in elems], table)


def klein4() -> FiniteGroup:
    names = ["e", "a", "b", "ab"]
    return FiniteGroup.from_table(names, [[i ^ j for j in range(4)] for i in range(4)])


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Pairs (g, h) in lexicographic order of (index g, index h)."""
    m = H.order
    pairs = [(g, h) for g in range(G.order) for h in range(m)]
    names = [f"({G.names[g]},{H.names[h]})" for g, h in pairs]
    table = [
        [G.table[g1][g2] * m + H.table[h1][h2] for g2, h2 in pairs]
        for g1, h1 in pairs
    ]
    return FiniteGroup.from_table(names, table)


_FAMILIES = {
    "cyclic": (cyclic, 1),
    "dihedral": (dihedral, 1),
    "symmetric": (symmetric, 1),
    "klein4": (klein4, 0),
    "direct_product": (direct_product, 2),
}


def build_standard(family: str, *params) -> FiniteGroup:
    try:
        fn, arity = _FAMILIES[family]
    except KeyError:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(_FAMILIES)}") from None
    if len(params) != arity:
        raise UsageError(f"{family} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def a4_table_text() -> str:
    """The packaged order-12 example table (alternating group on 4 points)."""
    return resources.files("mingen").joinpath("data/a4.txt").read_text(encoding="utf-8")


def builtin(spec: str) -> FiniteGroup:
    """Build a group from a short spec.

    ``cyclic:6``, ``dihedral:4``, ``symmetric:3``, ``klein4``, ``a4`` and
    direct products joined with ``*`` such as ``cyclic:2*cyclic:3``.
    """
    parts = [p.strip() for p in spec.split("*")]
    if len(parts) > 1:
        G = builtin(parts[0])
        for p in parts[1:]:
            G = direct_product(G, builtin(p))
        return G
    name, _, arg = spec.strip().partition(":")
    if name == "a4" and not arg:
        return parse_cayley_table(a4_table_text())
    if name in ("cyclic", "dihedral", "symmetric"):
        try:
            n = int(arg)
        except ValueError:
            raise UsageError(f"{name} needs an integer parameter, got {arg!r}") from None
        return build_standard(name, n)
    if name == "klein4" and not arg:
        return klein4()
    raise UsageError(f"cannot parse builtin group spec {spec!r}")
