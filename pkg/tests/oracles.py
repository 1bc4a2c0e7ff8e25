"""Independent reference computations used only by the tests.

Nothing here imports the library's closure, graph or component code.
"""
import itertools


def brute_closure(table, A):
    """Fixed point of {e} u A under all pairwise products."""
    S = {0, *A}
    while True:
        new = {table[x][y] for x in S for y in S} | S
        if new == S:
            return frozenset(S)
        S = new


def brute_inverse(table, g):
    return next(h for h in range(len(table)) if table[g][h] == 0)


def adjacency_by_definition(table, A):
    """{u, v} is an edge iff u = v a or v = u a for some a in A minus e."""
    n = len(table)
    A = [a for a in set(A) if a != 0]
    adj = {u: set() for u in range(n)}
    for u in range(n):
        for v in range(n):
            if u != v and any(u == table[v][a] or v == table[u][a] for a in A):
                adj[u].add(v)
    return adj


def dfs_components(adj):
    seen = set()
    comps = []
    for s in sorted(adj):
        if s in seen:
            continue
        stack, comp = [s], set()
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(adj[x] - comp)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def brute_left_cosets(table, H):
    return {frozenset(table[g][h] for h in H) for g in range(len(table))}


def brute_rank(table):
    n = len(table)
    if n == 1:
        return 0
    for r in range(1, n):
        for sub in itertools.combinations(range(1, n), r):
            if len(brute_closure(table, sub)) == n:
                return r
