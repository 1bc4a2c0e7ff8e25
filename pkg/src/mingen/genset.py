"""Generating sets built from Cayley-graph components.

``connectors`` joins the components of Cay(G, A) into a generating set and
``minimal_generating_set`` runs the grow-then-prune procedure: starting from
one element a1 = v1, keep adding v1^-1 v2 for some v2 outside the component
of v1 until the graph is connected, then walk back over a_{k-1}, ..., a_1 and
drop every element whose removal keeps the graph connected.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .cayley import build_graph
from .components import ComponentDecomposition, component_count, decompose, is_connected
from .errors import DomainError, UsageError
from .group import IDENTITY, FiniteGroup, GeneratorSet, as_gens, closure, index

log = logging.getLogger(__name__)


def connectors(G: FiniteGroup, A: Iterable[int], d: ComponentDecomposition, mode: str = "star") -> GeneratorSet:
    """Extend ``A`` by one connector per extra component.

    ``chain`` adds v_i^-1 v_{i+1}; ``star`` adds v_1^-1 v_i. Either way the
    Cayley graph of the result is connected.
    """
    reps = d.rep
    inv = G.inverses
    if mode == "chain":
        added = [G.table[inv[reps[i]]][reps[i + 1]] for i in range(len(reps) - 1)]
    elif mode == "star":
        added = [G.table[inv[reps[0]]][v] for v in reps[1:]]
    else:
        raise UsageError(f"unknown connector mode {mode!r}; use 'chain' or 'star'")
    return as_gens(list(A) + added)


def rank_upper_bound(G: FiniteGroup, A: Iterable[int]) -> int:
    """|A| + k - 1 where k counts the components of Cay(G, A)."""
    gens = as_gens(A)
    if IDENTITY in gens:
        log.info("identity dropped from A before bounding the rank")
        gens = tuple(a for a in gens if a != IDENTITY)
    return len(gens) + component_count(G, gens) - 1


@dataclass(frozen=True)
class SelectionPolicy:
    """How to choose v2 outside the component of v1 during growth.

    ``first`` takes the smallest index; ``scripted`` consumes ``script`` in order.
    """

    kind: str = "first"
    script: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in ("first", "scripted"):
            raise UsageError(f"unknown selection policy {self.kind!r}")

    @classmethod
    def scripted(cls, picks: Iterable[int]) -> "SelectionPolicy":
        return cls("scripted", tuple(picks))


@dataclass(frozen=True)
class GrowStep:
    element: int
    picked: int | None
    components: int


@dataclass(frozen=True)
class PruneStep:
    element: int
    connected: bool
    removed: bool


Step = Union[GrowStep, PruneStep]


@dataclass(frozen=True)
class GrowPruneTrace:
    steps: tuple[Step, ...] = ()

    @property
    def grow(self) -> list[GrowStep]:
        return [s for s in self.steps if isinstance(s, GrowStep)]

    @property
    def prune(self) -> list[PruneStep]:
        return [s for s in self.steps if isinstance(s, PruneStep)]

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class MinGenResult:
    generators: GeneratorSet
    trace: GrowPruneTrace = field(default_factory=GrowPruneTrace)
    grow_size: int = 0
    rank_bound: int = 0


def minimal_generating_set(G: FiniteGroup, start: int, policy: SelectionPolicy | None = None) -> MinGenResult:
    policy = policy or SelectionPolicy()
    if G.order == 1:
        return MinGenResult(())
    G.check(start)
    if start == IDENTITY:
        raise UsageError("start element must not be the identity")

    v1 = start
    A = [start]
    d = decompose(build_graph(G, A))
    steps: list[Step] = [GrowStep(start, None, d.count)]
    initial_components = d.count
    script = iter(policy.script)
    while d.count > 1:
        home = set(d.block_of(v1))
        if policy.kind == "first":
            v2 = next(x for x in range(G.order) if x not in home)
        else:
            try:
                v2 = G.check(next(script))
            except StopIteration:
                raise UsageError(
                    f"selection script exhausted with {d.count} components left"
                ) from None
            if v2 in home:
                raise UsageError(f"scripted pick {G.names[v2]} lies in the component of {G.names[v1]}")
        a = G.table[G.inverses[v1]][v2]
        A.append(a)
        d = decompose(build_graph(G, A))
        steps.append(GrowStep(a, v2, d.count))

    grown = tuple(A)
    # the last element added is never tested: dropping it gives back a set
    # that was already disconnected
    for a in reversed(grown[:-1]):
        trial = [x for x in A if x != a]
        connected = is_connected(G, trial)
        if connected:
            A = trial
        steps.append(PruneStep(a, connected, connected))

    return MinGenResult(
        generators=tuple(A),
        trace=GrowPruneTrace(tuple(steps)),
        grow_size=len(grown),
        rank_bound=min(len(A), initial_components),
    )


def prune(G: FiniteGroup, A: Sequence[int]) -> GeneratorSet:
    """One reverse pass of the prune phase over an already generating set."""
    A = list(as_gens(A))
    for a in reversed(A[:-1]):
        trial = [x for x in A if x != a]
        if is_connected(G, trial):
            A = trial
    return tuple(A)


@dataclass(frozen=True)
class RemovalCheck:
    element: int
    subgroup_order: int
    index: int


@dataclass(frozen=True)
class MinimalityReport:
    checks: tuple[RemovalCheck, ...]

    @property
    def minimal(self) -> bool:
        return all(c.index > 1 for c in self.checks)


def explain_minimality(G: FiniteGroup, M: Iterable[int]) -> MinimalityReport:
    """Subgroup order and index left behind by removing each generator.

    Checking single removals suffices: a subset of a non-generating set
    cannot generate.
    """
    M = as_gens(M)
    if closure(G, M).order != G.order:
        raise UsageError("the given set does not generate the group")
    checks = []
    for m in M:
        H = closure(G, [x for x in M if x != m])
        checks.append(RemovalCheck(m, H.order, index(G, H)))
    return MinimalityReport(tuple(checks))


# JSON-lines trace ------------------------------------------------------------

def trace_records(G: FiniteGroup, trace: GrowPruneTrace) -> list[dict]:
    out = []
    for s in trace.steps:
        if isinstance(s, GrowStep):
            out.append({"kind": "grow", "element": G.names[s.element], "components": s.components})
        else:
            out.append(
                {"kind": "prune", "element": G.names[s.element], "connected": s.connected, "removed": s.removed}
            )
    return out


def replay_trace(G: FiniteGroup, records: Iterable[dict]) -> GeneratorSet:
    """Re-execute a recorded trace, checking every recorded observation."""
    A: list[int] = []
    for n, rec in enumerate(records, start=1):
        kind = rec.get("kind")
        x = G.element(rec.get("element", ""))
        if kind == "grow":
            A.append(x)
            got = component_count(G, A)
            if got != rec.get("components"):
                raise DomainError(f"record {n}: {got} components, trace says {rec.get('components')}")
        elif kind == "prune":
            if x not in A:
                raise DomainError(f"record {n}: {G.names[x]} is not in the current set")
            trial = [a for a in A if a != x]
            connected = is_connected(G, trial)
            if connected != rec.get("connected") or connected != rec.get("removed"):
                raise DomainError(f"record {n}: removing {G.names[x]} gives connected={connected}")
            if connected:
                A = trial
        else:
            raise DomainError(f"record {n}: unknown kind {kind!r}")
    return tuple(A)
