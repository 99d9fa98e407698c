"""Mutable trigraph: a graph carrying two disjoint edge sets, black and red.

Contracting two vertices u and v replaces them by a fresh vertex w.  A
third vertex x keeps a black edge to w only if it was black-adjacent to
both u and v, keeps no edge if it was adjacent to neither, and gets a
red edge otherwise.  Black edges therefore always stand for "all pairs
across the two merged vertex groups are original edges", absent edges
for "no pair is", and red edges for the mixed leftovers.

Adjacency lists are kept strictly sorted so each contraction is a linear
merge of four lists.  The structure is single-writer: queries may run
concurrently between contractions, but mutation is not thread safe.
"""

from __future__ import annotations

from bisect import bisect_left
from enum import Enum


class EdgeColor(Enum):
    NONE = 0
    BLACK = 1
    RED = 2


NONE = EdgeColor.NONE
BLACK = EdgeColor.BLACK
RED = EdgeColor.RED


def _remove_sorted(lst, val):
    i = bisect_left(lst, val)
    if i >= len(lst) or lst[i] != val:
        raise RuntimeError(f"adjacency desync: {val} missing from a neighbor list")
    del lst[i]


class Trigraph:
    """Trigraph over vertex ids 1..2n-1, where n is the original vertex count.

    Original vertices are 1..n; the vertex created by the k-th contraction
    (counting from 1) gets id n+k.  Dead vertices keep empty adjacency
    lists as tombstones so liveness checks stay O(1) and ids stay stable.
    """

    def __init__(self, n_original: int):
        if n_original < 1:
            raise ValueError("vertex count must be at least 1")
        size = 2 * n_original  # ids run 1 .. 2n-1
        self.n_original = n_original
        self.black_adj: list[list[int]] = [[] for _ in range(size)]
        self.red_adj: list[list[int]] = [[] for _ in range(size)]
        self._live = set(range(1, n_original + 1))
        self._next_id = n_original + 1
        # histogram of red degrees, so the maximum is O(1) amortized
        self._red_hist = [0] * (size + 1)
        self._red_hist[0] = n_original
        self._max_red = 0
        self.update_work = 0  # adjacency entries scanned plus neighbor lists patched

    @classmethod
    def from_graph(cls, edges, n: int) -> "Trigraph":
        """Build a red-free trigraph from an undirected edge list.

        Pairs are symmetrized and deduplicated; self-loops and endpoints
        outside 1..n are rejected.  Construction is O(n+m): the adjacency
        lists come out sorted from a two-pass bucket fill, not a sort.
        """
        g = cls(n)
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) leaves the vertex range 1..{n}")
            seen.add((u, v) if u < v else (v, u))
        incident = [[] for _ in range(n + 1)]
        for a, b in seen:
            incident[a].append(b)
            incident[b].append(a)
        adj = g.black_adj
        for u in range(1, n + 1):  # ascending u keeps every list sorted
            for v in incident[u]:
                adj[v].append(u)
        return g

    # -- queries ---------------------------------------------------------

    @property
    def live_count(self) -> int:
        return len(self._live)

    @property
    def next_id(self) -> int:
        return self._next_id

    def is_live(self, v: int) -> bool:
        return v in self._live

    def live_vertices(self) -> list[int]:
        return sorted(self._live)

    def _require_live(self, v):
        if v not in self._live:
            raise ValueError(f"vertex {v} is not live")

    def edge_color(self, u: int, v: int) -> EdgeColor:
        """Color of the pair {u, v}: black, red, or none."""
        self._require_live(u)
        self._require_live(v)
        if u == v:
            raise ValueError("self-pairs have no color")
        lst = self.black_adj[u]
        i = bisect_left(lst, v)
        if i < len(lst) and lst[i] == v:
            return BLACK
        lst = self.red_adj[u]
        i = bisect_left(lst, v)
        if i < len(lst) and lst[i] == v:
            return RED
        return NONE

    def red_degree(self, v: int) -> int:
        self._require_live(v)
        return len(self.red_adj[v])

    def black_degree(self, v: int) -> int:
        self._require_live(v)
        return len(self.black_adj[v])

    def max_red_degree(self) -> int:
        hist = self._red_hist
        while self._max_red > 0 and hist[self._max_red] == 0:
            self._max_red -= 1
        return self._max_red

    def black_edges(self):
        for u in sorted(self._live):
            for x in self.black_adj[u]:
                if x > u:
                    yield u, x

    def red_edges(self):
        for u in sorted(self._live):
            for x in self.red_adj[u]:
                if x > u:
                    yield u, x

    # -- contraction -----------------------------------------------------

    def merge_neighborhoods(self, u: int, v: int):
        """Classify every vertex adjacent to u or v by its pair of colors.

        Returns (black, red): black lists the vertices black-adjacent to
        both u and v; red lists (x, color_ux, color_vx) for the vertices
        that would end up red-adjacent to the contraction of u and v.
        Both lists ascend in x; u and v themselves are skipped.  The
        trigraph is not modified.
        """
        au = self._annotate(u)
        av = self._annotate(v)
        black = []
        red = []
        i = j = 0
        len_u, len_v = len(au), len(av)
        while i < len_u or j < len_v:
            if j >= len_v or (i < len_u and au[i][0] < av[j][0]):
                x, cu = au[i]
                cv = NONE
                i += 1
            elif i >= len_u or av[j][0] < au[i][0]:
                x, cv = av[j]
                cu = NONE
                j += 1
            else:
                x, cu = au[i]
                cv = av[j][1]
                i += 1
                j += 1
            if x == u or x == v:
                continue
            if cu is BLACK and cv is BLACK:
                black.append(x)
            else:
                red.append((x, cu, cv))
        return black, red

    def _annotate(self, v):
        # interleave the two disjoint sorted lists, tagging each entry
        out = []
        b, r = self.black_adj[v], self.red_adj[v]
        i = j = 0
        len_b, len_r = len(b), len(r)
        while i < len_b and j < len_r:
            if b[i] < r[j]:
                out.append((b[i], BLACK))
                i += 1
            else:
                out.append((r[j], RED))
                j += 1
        while i < len_b:
            out.append((b[i], BLACK))
            i += 1
        while j < len_r:
            out.append((r[j], RED))
            j += 1
        return out

    def contract(self, u: int, v: int, w: int | None = None, merged=None) -> int:
        """Contract live vertices u and v into a fresh vertex, returning its id.

        w, when given, must equal the id the numbering scheme assigns next
        (n_original + contractions performed + 1).  merged, when given,
        must be the output of merge_neighborhoods(u, v); this lets a
        caller that already ran the merge avoid a second scan.
        """
        self._require_live(u)
        self._require_live(v)
        if u == v:
            raise ValueError("cannot contract a vertex with itself")
        expected = self._next_id
        if w is None:
            w = expected
        elif w != expected:
            raise ValueError(f"new vertex id must be {expected}, got {w}")
        if merged is None:
            merged = self.merge_neighborhoods(u, v)
        black, red = merged
        self.update_work += (
            len(self.black_adj[u]) + len(self.red_adj[u])
            + len(self.black_adj[v]) + len(self.red_adj[v])
            + len(black) + len(red)
        )
        hist = self._red_hist
        for x in black:
            bx = self.black_adj[x]
            _remove_sorted(bx, u)
            _remove_sorted(bx, v)
            bx.append(w)  # w exceeds every id present, so append keeps order
        for x, cu, cv in red:
            rx = self.red_adj[x]
            old = len(rx)
            if cu is BLACK:
                _remove_sorted(self.black_adj[x], u)
            elif cu is RED:
                _remove_sorted(rx, u)
            if cv is BLACK:
                _remove_sorted(self.black_adj[x], v)
            elif cv is RED:
                _remove_sorted(rx, v)
            rx.append(w)
            new = len(rx)
            if new != old:
                hist[old] -= 1
                hist[new] += 1
                if new > self._max_red:
                    self._max_red = new
        hist[len(self.red_adj[u])] -= 1
        hist[len(self.red_adj[v])] -= 1
        self.black_adj[u] = []
        self.red_adj[u] = []
        self.black_adj[v] = []
        self.red_adj[v] = []
        self._live.discard(u)
        self._live.discard(v)
        self.black_adj[w] = list(black)
        self.red_adj[w] = [x for x, _, _ in red]
        red_deg_w = len(red)
        hist[red_deg_w] += 1
        if red_deg_w > self._max_red:
            self._max_red = red_deg_w
        self._live.add(w)
        self._next_id += 1
        return w

    # -- diagnostics -----------------------------------------------------

    def serialize(self) -> str:
        """Canonical text form; equal trigraphs serialize identically."""
        lines = ["live " + " ".join(map(str, sorted(self._live)))]
        for u, v in self.black_edges():
            lines.append(f"b {u} {v}")
        for u, v in self.red_edges():
            lines.append(f"r {u} {v}")
        return "\n".join(lines) + "\n"

    def check_consistent(self):
        """Raise if any structural invariant is broken (test support)."""
        for v in range(1, 2 * self.n_original):
            b, r = self.black_adj[v], self.red_adj[v]
            if v not in self._live:
                assert not b and not r, f"dead vertex {v} has edges"
                continue
            for lst in (b, r):
                assert all(lst[i] < lst[i + 1] for i in range(len(lst) - 1)), \
                    f"unsorted adjacency at {v}"
                for x in lst:
                    assert x in self._live, f"edge from {v} to dead vertex {x}"
                    assert x != v, f"self-loop at {v}"
            assert not (set(b) & set(r)), f"pair both black and red at {v}"
            for x in b:
                assert v in self.black_adj[x], f"asymmetric black edge {v},{x}"
            for x in r:
                assert v in self.red_adj[x], f"asymmetric red edge {v},{x}"
        degrees = sorted(len(self.red_adj[v]) for v in self._live)
        hist_degrees = []
        for d, cnt in enumerate(self._red_hist):
            hist_degrees.extend([d] * cnt)
        assert degrees == sorted(hist_degrees), "red degree histogram desync"
        assert self.max_red_degree() == (max(degrees) if degrees else 0)
