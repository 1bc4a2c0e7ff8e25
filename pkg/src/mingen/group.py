"""Finite groups as dense multiplication tables.

Elements are plain ints in ``range(order)`` and 0 is always the identity.
Display names only matter for I/O.
"""
from __future__ import annotations

import operator
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ContractError, UsageError, ValidationError
from .validation import validate

IDENTITY = 0

# associativity may be skipped only for trusted tables larger than this
ASSOC_SKIP_MIN_ORDER = 512

GroupElement = int
GeneratorSet = tuple[int, ...]


def as_gens(elements: Iterable[int]) -> GeneratorSet:
    """Ordered, duplicate-free generator tuple (first occurrence wins)."""
    return tuple(dict.fromkeys(int(x) for x in elements))


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    inverses: tuple[int, ...]

    @classmethod
    def from_table(cls, names: Sequence[str], table, *, skip_associativity: bool = False) -> "FiniteGroup":
        """Validate ``table`` (identity at index 0) and build the group.

        ``skip_associativity`` is honoured only above order 512, where the
        cubic check gets expensive.
        """
        names = tuple(str(x) for x in names)
        rows = tuple(tuple(int(x) for x in row) for row in table)
        n = len(rows)
        if len(names) != n:
            raise UsageError(f"{len(names)} names for a table of order {n}")
        if len(set(names)) != n:
            raise UsageError("element names must be distinct")
        check_assoc = not (skip_associativity and n > ASSOC_SKIP_MIN_ORDER)
        report = validate(rows, check_associativity=check_assoc)
        if not report.ok:
            raise ValidationError(report)
        inverses = tuple(row.index(IDENTITY) for row in rows)
        return cls(names, rows, inverses)

    @property
    def order(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"

    def check(self, g: int) -> int:
        try:
            g = operator.index(g)
        except TypeError:
            raise UsageError(f"element index must be an integer, got {g!r}") from None
        if not 0 <= g < self.order:
            raise UsageError(f"element index {g!r} out of range for group of order {self.order}")
        return g

    def mul(self, g: int, h: int) -> int:
        return self.table[self.check(g)][self.check(h)]

    def inv(self, g: int) -> int:
        return self.inverses[self.check(g)]

    def product(self, elements: Iterable[int]) -> int:
        acc = IDENTITY
        for x in elements:
            acc = self.table[acc][x]
        return acc

    def name(self, g: int) -> str:
        return self.names[self.check(g)]

    def element(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UsageError(f"unknown element name {name!r}") from None

    def elements_named(self, names: Iterable[str]) -> GeneratorSet:
        return as_gens(self.element(s) for s in names)

    def format(self, elements: Iterable[int]) -> str:
        return ", ".join(self.names[g] for g in elements)

    def element_order(self, g: int) -> int:
        self.check(g)
        k, x = 1, g
        while x != IDENTITY:
            x = self.table[x][g]
            k += 1
        return k


@dataclass(frozen=True)
class Subgroup:
    elements: tuple[int, ...]
    generated_from: GeneratorSet = ()

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in self._members

    @cached_property
    def _members(self) -> frozenset[int]:
        return frozenset(self.elements)

    def is_closed(self, G: FiniteGroup) -> bool:
        members = self._members
        if IDENTITY not in members:
            return False
        return all(G.table[g][h] in members for g in members for h in members) and all(
            G.inverses[g] in members for g in members
        )


def multiply(G: FiniteGroup, g: int, h: int) -> int:
    return G.mul(g, h)


def inverse(G: FiniteGroup, g: int) -> int:
    return G.inv(g)


def closure(G: FiniteGroup, A: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``A``, by breadth-first closure."""
    gens = as_gens(A)
    for a in gens:
        G.check(a)
    steps = as_gens([a for a in gens if a != IDENTITY] + [G.inverses[a] for a in gens if a != IDENTITY])
    seen = {IDENTITY, *gens}
    frontier = deque(seen)
    while frontier:
        x = frontier.popleft()
        row = G.table[x]
        for a in steps:
            y = row[a]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return Subgroup(tuple(sorted(seen)), gens)


def left_cosets(G: FiniteGroup, H: Subgroup) -> list[tuple[int, ...]]:
    """Left cosets gH, ordered by minimal element, each sorted ascending."""
    if not H.is_closed(G):
        raise ContractError("subgroup is not closed under the group operation")
    assigned = [False] * G.order
    blocks = []
    for g in range(G.order):
        if assigned[g]:
            continue
        block = tuple(sorted(G.table[g][h] for h in H.elements))
        for x in block:
            assigned[x] = True
        blocks.append(block)
    return blocks


def index(G: FiniteGroup, H: Subgroup) -> int:
    return G.order // H.order
