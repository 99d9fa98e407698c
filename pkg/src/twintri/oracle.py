"""Brute-force triangle counters used as ground truth.

This module is deliberately independent of the contraction machinery:
adjacency is rebuilt here from the raw edge list, so a bug in the fast
path cannot hide inside shared code.  Everything is a pure function of
its inputs and safe to call concurrently.
"""

from __future__ import annotations


class PlainGraph:
    """Simple undirected graph: vertices 1..n plus a normalized edge list.

    Input pairs are symmetrized and deduplicated.  Self-loops and
    endpoints outside 1..n are rejected.
    """

    __slots__ = ("n", "edges", "adjacency")

    def __init__(self, n, edges=()):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) leaves the vertex range 1..{n}")
            normalized.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(normalized))
        adjacency = [[] for _ in range(n + 1)]
        for u, v in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        for neighbors in adjacency:
            neighbors.sort()
        self.adjacency = adjacency

    @property
    def m(self):
        return len(self.edges)

    def __eq__(self, other):
        if not isinstance(other, PlainGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"PlainGraph(n={self.n}, m={self.m})"


def count_naive(g: PlainGraph) -> int:
    """Exact triangle count by intersecting sorted neighbor lists per edge."""
    adjacency = g.adjacency
    total = 0
    for u, v in g.edges:
        a, b = adjacency[u], adjacency[v]
        i = j = 0
        la, lb = len(a), len(b)
        while i < la and j < lb:
            if a[i] < b[j]:
                i += 1
            elif a[i] > b[j]:
                j += 1
            else:
                total += 1
                i += 1
                j += 1
    # every triangle was seen once per incident edge
    return total // 3


def count_triples(g: PlainGraph) -> int:
    """Second, independent counter: test all vertex triples."""
    n = g.n
    neighbor_sets = [set(nbrs) for nbrs in g.adjacency]
    total = 0
    for x in range(1, n + 1):
        nx = neighbor_sets[x]
        for y in range(x + 1, n + 1):
            if y not in nx:
                continue
            ny = neighbor_sets[y]
            for z in range(y + 1, n + 1):
                if z in nx and z in ny:
                    total += 1
    return total


def cross_check(g: PlainGraph, seq) -> bool:
    """True iff the contraction-sequence counter agrees with brute force."""
    from .counting import count_triangles

    return count_triangles(g, seq).triangles == count_naive(g)
