"""Connected components of Cayley graphs and the coset structure behind them.

Components are computed with union-find over the edge list; the coset and
isomorphism checks then compare that purely graph-theoretic answer against
the algebra in :mod:`mingen.group`.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .cayley import CayleyGraph, build_graph
from .errors import DefectError, UsageError
from .group import IDENTITY, FiniteGroup, Subgroup, closure, left_cosets


class DisjointSet:
    """Union-find with path halving and union by size over ``range(n)``."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return True


@dataclass(frozen=True)
class ComponentDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    assignment: tuple[int, ...]

    @property
    def rep(self) -> tuple[int, ...]:
        return tuple(b[0] for b in self.blocks)

    @property
    def count(self) -> int:
        return len(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self, v: int) -> tuple[int, ...]:
        return self.blocks[self.assignment[v]]


def decompose(graph: CayleyGraph) -> ComponentDecomposition:
    n = graph.group.order
    ds = DisjointSet(n)
    for u, v in graph.edges:
        ds.union(u, v)
    by_root: dict[int, list[int]] = {}
    for v in range(n):
        by_root.setdefault(ds.find(v), []).append(v)
    # vertices were appended in increasing order, so each block is sorted
    blocks = sorted((tuple(b) for b in by_root.values()), key=lambda b: b[0])
    assignment = [0] * n
    for i, block in enumerate(blocks):
        for v in block:
            assignment[v] = i
    return ComponentDecomposition(tuple(blocks), tuple(assignment))


def component_count(G: FiniteGroup, A: Iterable[int]) -> int:
    return decompose(build_graph(G, A)).count


def is_connected(G: FiniteGroup, A: Iterable[int]) -> bool:
    return component_count(G, A) == 1


def identity_component(d: ComponentDecomposition) -> tuple[int, ...]:
    return d.block_of(IDENTITY)


@dataclass(frozen=True)
class CosetCheck:
    ok: bool
    counterexample: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_coset_structure(G: FiniteGroup, A: Iterable[int], d: ComponentDecomposition) -> CosetCheck:
    """Every block must be rep * <A>, and the blocks must be exactly the left cosets."""
    H = closure(G, A)
    for i, block in enumerate(d.blocks):
        coset = tuple(sorted(G.table[block[0]][h] for h in H.elements))
        if coset != block:
            return CosetCheck(False, f"block {i} {list(block)} differs from coset {list(coset)}")
    cosets = left_cosets(G, H)
    if list(d.blocks) != cosets:
        return CosetCheck(False, f"{len(d.blocks)} blocks vs {len(cosets)} cosets of <A>")
    return CosetCheck(True)


@dataclass(frozen=True)
class IsomorphismWitness:
    from_block: int
    to_block: int
    translator: int


def translation_isomorphism(graph: CayleyGraph, d: ComponentDecomposition, i: int, j: int) -> IsomorphismWitness:
    """Left multiplication by rep[j] rep[i]^-1 carries block i onto block j."""
    if not (0 <= i < d.count and 0 <= j < d.count):
        raise UsageError(f"block ids must lie in [0, {d.count})")
    G = graph.group
    src, dst = d.blocks[i], d.blocks[j]
    t = G.table[dst[0]][G.inverses[src[0]]]
    image = [G.table[t][x] for x in src]
    if sorted(image) != list(dst):
        raise DefectError(f"translation by {G.names[t]} does not map block {i} onto block {j}")
    edges = graph.edge_set
    for a, u in enumerate(src):
        for b in range(a + 1, len(src)):
            v = src[b]
            before = (u, v) in edges
            tu, tv = image[a], image[b]
            after = (min(tu, tv), max(tu, tv)) in edges
            if before != after:
                raise DefectError(
                    f"translation by {G.names[t]} breaks adjacency of {G.names[u]}, {G.names[v]}"
                )
    return IsomorphismWitness(i, j, t)


@dataclass(frozen=True)
class PathWord:
    letters: tuple[tuple[int, int], ...]

    def evaluate(self, G: FiniteGroup) -> int:
        return G.product(a if eps == 1 else G.inverses[a] for a, eps in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def format(self, G: FiniteGroup) -> str:
        if not self.letters:
            return "e"
        return " ".join(G.names[a] + ("" if eps == 1 else "^-1") for a, eps in self.letters)


def path_witness(graph: CayleyGraph, u: int, v: int) -> PathWord | None:
    """Shortest word a1^e1 ... an^en equal to u^-1 v along a path from u to v."""
    G = graph.group
    G.check(u)
    G.check(v)
    steps = [(a, 1) for a in graph.labels] + [(a, -1) for a in graph.labels]
    prev: dict[int, tuple[int, int, int] | None] = {u: None}
    queue = deque([u])
    while queue and v not in prev:
        x = queue.popleft()
        for a, eps in steps:
            y = G.table[x][a if eps == 1 else G.inverses[a]]
            if y not in prev:
                prev[y] = (x, a, eps)
                queue.append(y)
    if v not in prev:
        return None
    letters = []
    x = v
    while prev[x] is not None:
        x, a, eps = prev[x]
        letters.append((a, eps))
    return PathWord(tuple(reversed(letters)))


def verify_disjoint_union(graph: CayleyGraph, d: ComponentDecomposition) -> bool:
    """No edge crosses blocks, so the induced subgraphs partition the edge set."""
    return all(d.assignment[u] == d.assignment[v] for u, v in graph.edges)


@dataclass(frozen=True)
class SubgroupGraphStats:
    components: int
    each_complete: bool
    edge_total: int


def subgroup_graph_stats(G: FiniteGroup, H: Subgroup) -> SubgroupGraphStats:
    """Cayley graph on a subgroup: [G:H] copies of the complete graph K_|H|."""
    graph = build_graph(G, H.elements)
    d = decompose(graph)
    edges = graph.edge_set
    complete = all(
        (block[a], block[b]) in edges
        for block in d.blocks
        for a in range(len(block))
        for b in range(a + 1, len(block))
    )
    total = len(graph.edges)
    expected, rem = divmod(G.order * (H.order - 1), 2)
    if rem or total != expected:
        raise DefectError(f"edge total {total}, expected |G|(|H|-1)/2 = {G.order * (H.order - 1) / 2}")
    if d.count != G.order // H.order:
        raise DefectError(f"{d.count} components, expected index {G.order // H.order}")
    return SubgroupGraphStats(d.count, complete, total)
