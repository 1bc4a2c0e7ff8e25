"""Brute-force ground truth for generation and rank."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable

from .errors import ResourceError
from .group import IDENTITY, FiniteGroup, GeneratorSet, closure

# estimated closure work (subsets * n * |A|) allowed before refusing
WORK_LIMIT = 10**8


def is_generating(G: FiniteGroup, A: Iterable[int]) -> bool:
    return closure(G, A).order == G.order


@dataclass(frozen=True)
class RankCertificate:
    rank: int
    witness: GeneratorSet
    exhausted_below: bool


def min_generating_set_bruteforce(G: FiniteGroup, size_cap: int | None = None) -> RankCertificate:
    """First generating subset of G minus {e}, by size then lexicographically."""
    n = G.order
    if n == 1:
        return RankCertificate(0, (), True)
    pool = range(1, n)
    cap = n - 1 if size_cap is None else min(size_cap, n - 1)
    work = 0
    for r in range(1, cap + 1):
        work += comb(n - 1, r) * n * r
        if work > WORK_LIMIT:
            raise ResourceError(
                f"subset search would exceed {WORK_LIMIT:.0e} checks at size {r} "
                f"(no generating set of size <= {r - 1})"
            )
        for subset in itertools.combinations(pool, r):
            if is_generating(G, subset):
                return RankCertificate(r, subset, True)
    raise ResourceError(f"no generating set of size <= {cap}; size cap reached")


def subgroups(G: FiniteGroup) -> list[tuple[int, ...]]:
    """All subgroups, found as closures of growing subsets. Desk-scale only."""
    found = {(IDENTITY,)}
    frontier = [(IDENTITY,)]
    while frontier:
        nxt = []
        for H in frontier:
            members = set(H)
            for g in range(G.order):
                if g in members:
                    continue
                K = closure(G, H + (g,)).elements
                if K not in found:
                    found.add(K)
                    nxt.append(K)
        frontier = nxt
    return sorted(found, key=lambda H: (len(H), H))
