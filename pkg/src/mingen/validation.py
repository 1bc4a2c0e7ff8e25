"""Group-axiom checks on a raw multiplication table.

Index 0 is taken to be the identity; callers that parse arbitrary tables
re-index the detected identity to 0 first.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

LAWS = ("identity", "latin-row", "latin-col", "inverse", "associativity")
MAX_WITNESSES = 3

# rows of the associativity cube processed per numpy batch
_ASSOC_CHUNK = 64


@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def laws(self) -> set[str]:
        return {v.law for v in self.violations}

    def by_law(self, law: str) -> list[tuple[int, ...]]:
        return [v.witness for v in self.violations if v.law == law]

    def summary(self) -> str:
        if self.ok:
            return "ok"
        parts = []
        for law in LAWS:
            ws = self.by_law(law)
            if ws:
                parts.append(f"{law} violated at {', '.join(map(str, ws))}")
        return "; ".join(parts)


def _latin(arr: np.ndarray, n: int, law: str) -> list[Violation]:
    out = []
    for r in range(n):
        row = arr[r]
        seen: dict[int, int] = {}
        for j, x in enumerate(row.tolist()):
            if x in seen:
                out.append(Violation(law, (r, seen[x], j)))
                break
            seen[x] = j
        if len(out) == MAX_WITNESSES:
            break
    return out


def _associativity(arr: np.ndarray, n: int, limit: int) -> list[tuple[int, int, int]]:
    found: list[tuple[int, int, int]] = []
    for start in range(0, n, _ASSOC_CHUNK):
        g = np.arange(start, min(n, start + _ASSOC_CHUNK))
        # lhs[g, h, k] = (g.h).k ; rhs[g, h, k] = g.(h.k)
        lhs = arr[arr[g]]
        rhs = arr[g][:, arr]
        bad = np.argwhere(lhs != rhs)
        for gi, h, k in bad[: limit - len(found)].tolist():
            found.append((int(g[gi]), h, k))
        if len(found) >= limit:
            break
    return found


def validate(table, check_associativity: bool = True) -> ValidationReport:
    """Check identity, Latin rows/columns, inverses and associativity.

    At most three witnesses are reported per law.
    """
    arr = np.asarray(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise ValueError(f"table must be a non-empty square array, got shape {arr.shape}")
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        raise ValueError("table entries must be indices in [0, n)")

    violations: list[Violation] = []

    ident = []
    for g in range(n):
        if arr[0, g] != g or arr[g, 0] != g:
            ident.append(Violation("identity", (g,)))
            if len(ident) == MAX_WITNESSES:
                break
    violations += ident

    violations += _latin(arr, n, "latin-row")
    violations += _latin(arr.T, n, "latin-col")

    inv = []
    for g in range(n):
        hits = np.flatnonzero(arr[g] == 0)
        # right inverse is the first identity in the row; it must also be a left inverse
        if len(hits) == 0 or arr[hits[0], g] != 0:
            inv.append(Violation("inverse", (g,)))
            if len(inv) == MAX_WITNESSES:
                break
    violations += inv

    if check_associativity:
        violations += [Violation("associativity", w) for w in _associativity(arr, n, MAX_WITNESSES)]

    return ValidationReport(tuple(violations))
