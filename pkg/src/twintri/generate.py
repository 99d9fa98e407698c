"""Graph generators and contraction-sequence generators.

Sequence generation comes in three flavors:

  * twin_sequence: width-0 sequences read off a cotree (so only for
    graphs built together with one),
  * greedy_sequence: works on any graph, contracts the pair that keeps
    the maximum red degree lowest; no optimality guarantee,
  * exact_sequence: exhaustive search returning a true minimum-width
    sequence, feasible only for tiny graphs.

All generators are deterministic given their arguments (and seed).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .oracle import PlainGraph
from .sequence import ContractionSequence

EXACT_MAX_N = 9
GRAPH_FAMILIES = ("gnp", "cograph", "complete", "path", "cycle", "grid",
                  "star", "petersen")


# -- cotrees and cographs --------------------------------------------------


@dataclass(frozen=True)
class Cotree:
    """Binary-or-wider construction tree: leaves are vertices, internal
    nodes combine their children by disjoint union or complete join."""

    kind: str  # "leaf", "union", "join"
    vertex: int | None = None
    children: tuple["Cotree", ...] = ()

    def leaves(self) -> list[int]:
        if self.kind == "leaf":
            return [self.vertex]
        out = []
        for child in self.children:
            out.extend(child.leaves())
        return out


def _leaf(v):
    return Cotree("leaf", vertex=v)


def cotree_graph(root: Cotree, n: int) -> PlainGraph:
    """Materialize the graph a cotree describes."""
    if sorted(root.leaves()) != list(range(1, n + 1)):
        raise ValueError("cotree leaves must be exactly 1..n")
    edges = []

    def walk(node):
        if node.kind == "leaf":
            return [node.vertex]
        mine = []
        for child in node.children:
            verts = walk(child)
            if node.kind == "join":
                for a in mine:
                    for b in verts:
                        edges.append((a, b))
            mine.extend(verts)
        return mine

    walk(root)
    return PlainGraph(n, edges)


def twin_sequence(root: Cotree, n: int) -> ContractionSequence:
    """Width-0 sequence contracting a cotree bottom-up.

    Once a node's children are each reduced to a single vertex, those
    vertices are mutual twins and fold together without creating a red
    edge.
    """
    if sorted(root.leaves()) != list(range(1, n + 1)):
        raise ValueError("cotree leaves must be exactly 1..n")
    pairs = []
    next_id = n + 1

    def reduce(node):
        nonlocal next_id
        if node.kind == "leaf":
            return node.vertex
        rep = reduce(node.children[0])
        for child in node.children[1:]:
            other = reduce(child)
            pairs.append((rep, other) if rep < other else (other, rep))
            rep = next_id
            next_id += 1
        return rep

    reduce(root)
    return ContractionSequence(n, tuple(pairs))


def _random_cotree(ids, rng, join_prob):
    if len(ids) == 1:
        return _leaf(ids[0])
    cut = rng.randint(1, len(ids) - 1)
    kind = "join" if rng.random() < join_prob else "union"
    return Cotree(kind, children=(
        _random_cotree(ids[:cut], rng, join_prob),
        _random_cotree(ids[cut:], rng, join_prob),
    ))


def cograph(n: int, seed: int = 0, join_prob: float = 0.5,
            block_size: int | None = None):
    """Random cograph with its cotree.

    With block_size set, the graph is a disjoint union of random cograph
    blocks of at most that many vertices, which keeps the edge count
    linear in n; otherwise the cotree is a single random binary split.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    rng = random.Random(seed)
    ids = list(range(1, n + 1))
    if block_size is None or n <= block_size:
        root = _random_cotree(ids, rng, join_prob)
    else:
        if block_size < 1:
            raise ValueError("block_size must be positive")
        blocks = []
        at = 0
        while at < n:
            width = min(rng.randint(1, block_size), n - at)
            blocks.append(_random_cotree(ids[at:at + width], rng, join_prob))
            at += width
        root = blocks[0] if len(blocks) == 1 else Cotree("union", children=tuple(blocks))
    return cotree_graph(root, n), root


# -- fixed families --------------------------------------------------------


def complete(n: int):
    """K_n with its one-join cotree."""
    if n < 1:
        raise ValueError("need n >= 1")
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    root = _leaf(1) if n == 1 else Cotree("join", children=tuple(_leaf(v) for v in range(1, n + 1)))
    return PlainGraph(n, edges), root


def star(leaves: int):
    """K_{1,leaves}: center 1 joined to leaves 2..leaves+1, with cotree."""
    if leaves < 1:
        raise ValueError("need at least one leaf")
    n = leaves + 1
    edges = [(1, v) for v in range(2, n + 1)]
    if leaves == 1:
        root = Cotree("join", children=(_leaf(1), _leaf(2)))
    else:
        root = Cotree("join", children=(
            _leaf(1),
            Cotree("union", children=tuple(_leaf(v) for v in range(2, n + 1))),
        ))
    return PlainGraph(n, edges), root


def path(n: int) -> PlainGraph:
    if n < 1:
        raise ValueError("need n >= 1")
    return PlainGraph(n, [(v, v + 1) for v in range(1, n)])


def cycle(n: int) -> PlainGraph:
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return PlainGraph(n, [(v, v + 1) for v in range(1, n)] + [(n, 1)])


def grid(rows: int, cols: int) -> PlainGraph:
    """rows x cols grid, vertices numbered row-major from 1."""
    if rows < 1 or cols < 1:
        raise ValueError("grid needs positive dimensions")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c + 1
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return PlainGraph(rows * cols, edges)


def petersen() -> PlainGraph:
    outer = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]
    spokes = [(v, v + 5) for v in range(1, 6)]
    inner = [(6, 8), (8, 10), (10, 7), (7, 9), (9, 6)]
    return PlainGraph(10, outer + spokes + inner)


def gnp(n: int, p: float, seed: int = 0) -> PlainGraph:
    """Erdos-Renyi G(n, p), deterministic for a given seed."""
    if n < 1:
        raise ValueError("need n >= 1")
    if not (0.0 <= p <= 1.0):
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.random() < p:
                edges.append((u, v))
    return PlainGraph(n, edges)


def chain_sequence(n: int) -> ContractionSequence:
    """Left-to-right fold: contract (1,2), then the product with 3, and so
    on.  Width 1 on paths and 2 on cycles; handy for long sparse chains
    where greedy search would be wasteful."""
    if n < 1:
        raise ValueError("need n >= 1")
    pairs = []
    for step in range(n - 1):
        left = 1 if step == 0 else n + step
        pairs.append((min(left, step + 2), max(left, step + 2)))
    return ContractionSequence(n, tuple(pairs))


def generate_graph(family: str, seed: int = 0, **params):
    """Dispatcher used by the CLI and the benchmark harness.

    Returns (graph, cotree-or-None); families built from a cotree return
    it so a width-0 sequence can be derived.
    """
    if family == "gnp":
        return gnp(params["n"], params.get("p", 0.5), seed), None
    if family == "cograph":
        return cograph(params["n"], seed, params.get("join_prob", 0.5),
                       params.get("block_size"))
    if family == "complete":
        return complete(params["n"])
    if family == "star":
        return star(params["n"])
    if family == "path":
        return path(params["n"]), None
    if family == "cycle":
        return cycle(params["n"]), None
    if family == "grid":
        return grid(params.get("rows", params.get("n", 4)),
                    params.get("cols", params.get("n", 4))), None
    if family == "petersen":
        return petersen(), None
    raise ValueError(f"unknown family {family!r}; known: {', '.join(GRAPH_FAMILIES)}")


# -- greedy sequence -------------------------------------------------------


def greedy_sequence(graph: PlainGraph):
    """Contract, at every step, the pair giving the smallest maximum red
    degree; ties fall to the smallest resulting total of red edges, then
    to the smallest id pair.  Returns (sequence, witnessed width).

    Candidate evaluation works on bitmask neighborhoods: each pair costs
    a few word operations plus a scan of the affected vertices, and pairs
    that already exceed the best key are dropped early.
    """
    n = graph.n
    if n == 1:
        return ContractionSequence(1, ()), 0
    # slot i (0-based) holds a live vertex; masks index slots
    black = [0] * n
    red = [0] * n
    for u, v in graph.edges:
        black[u - 1] |= 1 << (v - 1)
        black[v - 1] |= 1 << (u - 1)
    ids = list(range(1, n + 1))
    live = list(range(n))
    red_deg = [0] * n
    red_total = 0
    next_id = n + 1
    pairs = []
    width = 0

    while len(live) > 1:
        live.sort(key=lambda s: ids[s])
        by_degree = sorted(live, key=lambda s: (-red_deg[s], ids[s]))
        best_key = None
        best = None
        for ai in range(len(live)):
            a = live[ai]
            ba, ra = black[a], red[a]
            bit_a = 1 << a
            for bi in range(ai + 1, len(live)):
                b = live[bi]
                bb_mask = ba & black[b]
                union = (ba | ra | black[b] | red[b]) & ~bit_a & ~(1 << b)
                rr_mask = union & ~bb_mask
                wdeg = bin(rr_mask).count("1")
                if best_key is not None and wdeg > best_key[0]:
                    continue
                worst = wdeg
                affected = union
                rb = red[b]
                good = True
                while affected:
                    low = affected & -affected
                    affected ^= low
                    x = low.bit_length() - 1
                    deg = red_deg[x]
                    if ra & low:
                        deg -= 1
                    if rb & low:
                        deg -= 1
                    if rr_mask & low:
                        deg += 1
                    if deg > worst:
                        worst = deg
                        if best_key is not None and worst > best_key[0]:
                            good = False
                            break
                if not good:
                    continue
                excluded = union | bit_a | (1 << b)
                for x in by_degree:
                    if not (excluded >> x) & 1:
                        if red_deg[x] > worst:
                            worst = red_deg[x]
                        break
                new_total = (red_total - red_deg[a] - red_deg[b]
                             + ((ra >> b) & 1) + wdeg)
                key = (worst, new_total, ids[a], ids[b])
                if best_key is None or key < best_key:
                    best_key = key
                    best = (a, b, bb_mask, rr_mask, union)
        a, b, bb_mask, rr_mask, union = best
        pairs.append((min(ids[a], ids[b]), max(ids[a], ids[b])))
        # fold b into slot a; every red edge at a or b disappears and the
        # product's red edges (rr_mask) take their place
        bit_a, bit_b = 1 << a, 1 << b
        wdeg = bin(rr_mask).count("1")
        red_total += wdeg - red_deg[a] - red_deg[b] + ((red[a] >> b) & 1)
        scan = union
        while scan:
            low = scan & -scan
            scan ^= low
            x = low.bit_length() - 1
            black[x] &= ~(bit_a | bit_b)
            red[x] &= ~(bit_a | bit_b)
            if rr_mask & low:
                red[x] |= bit_a
            else:
                black[x] |= bit_a
            red_deg[x] = bin(red[x]).count("1")
        black[a] = bb_mask
        red[a] = rr_mask
        red_deg[a] = wdeg
        black[b] = 0
        red[b] = 0
        red_deg[b] = 0
        ids[a] = next_id
        next_id += 1
        live.remove(b)
        step_width = max(red_deg[s] for s in live)
        if step_width > width:
            width = step_width
    return ContractionSequence(n, tuple(pairs)), width


# -- exact sequence --------------------------------------------------------


def exact_sequence(graph: PlainGraph, max_n: int = EXACT_MAX_N):
    """Minimum-width sequence by exhaustive search over contraction orders.

    The live trigraph is fully determined by the partition of original
    vertices into groups, so states are memoized by the partition (a
    sorted tuple of bitmasks) and pair colors are cached globally per
    mask pair.  Search runs the width decision problem for d = 0, 1, ...
    up to the greedy width, pruning any contraction whose trigraph
    exceeds d.  Returns (sequence, twin-width).
    """
    n = graph.n
    if n > max_n:
        raise ValueError(
            f"exact search is limited to {max_n} vertices ({n} given); "
            "use greedy_sequence instead")
    if n == 1:
        return ContractionSequence(1, ()), 0
    greedy_seq, upper = greedy_sequence(graph)
    if upper == 0:
        return greedy_seq, 0
    adj = [0] * (n + 1)
    for u, v in graph.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    sizes = {}
    color_cache = {}

    def size_of(mask):
        s = sizes.get(mask)
        if s is None:
            s = bin(mask).count("1")
            sizes[mask] = s
        return s

    def color(p, q):  # 0 none, 1 black, 2 red
        key = (p, q) if p < q else (q, p)
        c = color_cache.get(key)
        if c is None:
            crossing = 0
            m = p
            while m:
                low = m & -m
                m ^= low
                crossing += bin(adj[low.bit_length() - 1] & q).count("1")
            if crossing == 0:
                c = 0
            elif crossing == size_of(p) * size_of(q):
                c = 1
            else:
                c = 2
            color_cache[key] = c
        return c

    def max_red(parts):
        worst = 0
        for i, p in enumerate(parts):
            deg = 0
            for j, q in enumerate(parts):
                if i != j and color(p, q) == 2:
                    deg += 1
            if deg > worst:
                worst = deg
        return worst

    start = tuple(sorted(1 << v for v in range(1, n + 1)))

    def decide(limit):
        failed = set()
        merges = []

        def go(parts):
            if len(parts) == 1:
                return True
            if parts in failed:
                return False
            count = len(parts)
            for i in range(count):
                for j in range(i + 1, count):
                    fused = parts[i] | parts[j]
                    rest = parts[:i] + parts[i + 1:j] + parts[j + 1:]
                    nxt = tuple(sorted(rest + (fused,)))
                    if max_red(nxt) > limit:
                        continue
                    merges.append((parts[i], parts[j]))
                    if go(nxt):
                        return True
                    merges.pop()
            failed.add(parts)
            return False

        return merges if go(start) else None

    for d in range(upper):
        merges = decide(d)
        if merges is not None:
            id_of = {1 << v: v for v in range(1, n + 1)}
            pairs = []
            fresh = n + 1
            for p, q in merges:
                u, v = id_of.pop(p), id_of.pop(q)
                pairs.append((min(u, v), max(u, v)))
                id_of[p | q] = fresh
                fresh += 1
            return ContractionSequence(n, tuple(pairs)), d
    # nothing below the greedy width works, so greedy was optimal
    return greedy_seq, upper
