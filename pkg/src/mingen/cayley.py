"""Cayley digraphs, their underlying graphs, degree checks and DOT output."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DefectError, UsageError
from .group import IDENTITY, FiniteGroup, GeneratorSet, as_gens

# arc colors by position of the label among the non-identity generators
PALETTE = (
    "blue",
    "red",
    "green3",
    "orange",
    "purple",
    "brown",
    "magenta",
    "cyan4",
    "gold3",
    "gray40",
    "darkgreen",
    "navy",
)


def edge_labels(gens: Iterable[int]) -> GeneratorSet:
    """Generators that actually produce arcs (the identity is dropped)."""
    return tuple(a for a in as_gens(gens) if a != IDENTITY)


@dataclass(frozen=True, eq=False)
class CayleyDigraph:
    group: FiniteGroup
    gens: GeneratorSet
    arcs: tuple[tuple[int, int, int], ...]

    @property
    def labels(self) -> GeneratorSet:
        return edge_labels(self.gens)

    def in_degrees(self) -> list[int]:
        deg = [0] * self.group.order
        for _, t, _ in self.arcs:
            deg[t] += 1
        return deg

    def out_degrees(self) -> list[int]:
        deg = [0] * self.group.order
        for s, _, _ in self.arcs:
            deg[s] += 1
        return deg


@dataclass(frozen=True, eq=False)
class CayleyGraph:
    group: FiniteGroup
    gens: GeneratorSet
    edges: tuple[tuple[int, int], ...]

    @property
    def labels(self) -> GeneratorSet:
        return edge_labels(self.gens)

    @property
    def order(self) -> int:
        return self.group.order

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.group.order)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.group.order
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


def build_digraph(G: FiniteGroup, A: Iterable[int]) -> CayleyDigraph:
    gens = as_gens(A)
    for a in gens:
        G.check(a)
    labels = edge_labels(gens)
    arcs = tuple((g, G.table[g][a], a) for g in range(G.order) for a in labels)
    return CayleyDigraph(G, gens, arcs)


def build_graph(G: FiniteGroup, A: Iterable[int]) -> CayleyGraph:
    dg = build_digraph(G, A)
    edges = sorted({(min(s, t), max(s, t)) for s, t, _ in dg.arcs})
    return CayleyGraph(G, dg.gens, tuple(edges))


@dataclass(frozen=True)
class DegreeStats:
    regular: bool
    degree: int | None = None
    indegree: int | None = None
    outdegree: int | None = None


def expected_graph_degree(G: FiniteGroup, A: Iterable[int]) -> int:
    labels = set(edge_labels(A))
    inv = {G.inverses[a] for a in labels}
    return 2 * len(labels) - len(labels & inv)


def degree_stats(graph: CayleyGraph | CayleyDigraph) -> DegreeStats:
    """Check the graph is regular with the degree the group theory predicts."""
    G = graph.group
    if isinstance(graph, CayleyDigraph):
        want = len(graph.labels)
        ins, outs = graph.in_degrees(), graph.out_degrees()
        if any(d != want for d in ins) or any(d != want for d in outs):
            raise DefectError(f"Cayley digraph is not {want}-regular")
        return DegreeStats(True, indegree=want, outdegree=want)
    want = expected_graph_degree(G, graph.gens)
    bad = [v for v, d in enumerate(graph.degrees()) if d != want]
    if bad:
        raise DefectError(f"vertex {bad[0]} has degree {graph.degrees()[bad[0]]}, expected {want}")
    return DegreeStats(True, degree=want)


def _colors_for(labels: Sequence[int], colors: Sequence[str] | None) -> dict[int, str]:
    palette = tuple(colors) if colors else PALETTE
    if len(labels) > len(palette):
        raise UsageError(
            f"{len(labels)} generators but only {len(palette)} colors; pass explicit colors"
        )
    return {a: palette[i] for i, a in enumerate(labels)}


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: CayleyDigraph | CayleyGraph, colors: Sequence[str] | None = None, name: str = "cayley") -> str:
    """Render as DOT; digraphs get one colored arc per generator step."""
    G = graph.group
    directed = isinstance(graph, CayleyDigraph)
    lines = [f"{'digraph' if directed else 'graph'} {name} {{"]
    for g in range(G.order):
        lines.append(f"  {g} [label={_quote(G.names[g])}];")
    if directed:
        color = _colors_for(graph.labels, colors)
        for s, t, a in graph.arcs:
            lines.append(f"  {s} -> {t} [color={_quote(color[a])}];")
    else:
        for u, v in graph.edges:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
