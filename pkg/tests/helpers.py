"""Shared test support: independent reimplementations used as oracles.

Nothing here touches the library's trigraph or counting internals.
Colors, auxiliary counts and triangle configurations are recomputed from
first principles (edge lists and vertex partitions), so a bug in the
package cannot leak into its own check.
"""

import itertools


def key(a, b):
    return (a, b) if a < b else (b, a)


def brute_triangles(n, edges):
    adj = {v: set() for v in range(1, n + 1)}
    for u, v in set(map(lambda e: key(*e), edges)):
        adj[u].add(v)
        adj[v].add(u)
    out = []
    for x, y, z in itertools.combinations(range(1, n + 1), 3):
        if y in adj[x] and z in adj[x] and z in adj[y]:
            out.append((x, y, z))
    return out


# -- pairwise contraction rule --------------------------------------------


def merged_color(cu, cv):
    """Color of the pair (new vertex, x) given x's colors toward u and v."""
    if cu == "b" and cv == "b":
        return "b"
    if cu is None and cv is None:
        return None
    return "r"


def apply_contraction(colors, live, u, v, w):
    """Evaluate the contraction rule pair by pair on a plain color dict."""
    new = {}
    for (a, b), c in colors.items():
        if u not in (a, b) and v not in (a, b):
            new[(a, b)] = c
    for x in live:
        if x in (u, v):
            continue
        c = merged_color(colors.get(key(u, x)), colors.get(key(v, x)))
        if c is not None:
            new[key(w, x)] = c
    return (live - {u, v}) | {w}, new


# -- triangle configuration schedule ---------------------------------------

ABSORBING = {"one_black", "all_red", "split_red", "inside"}


def triangle_case(tri, group_of, pair_color):
    groups = {group_of[a] for a in tri}
    if len(groups) == 1:
        return "inside"
    if len(groups) == 2:
        x, y = groups
        c = pair_color(x, y)
        assert c is not None, "triangle spans groups with no edge"
        return "split_black" if c == "b" else "split_red"
    x, y, z = groups
    cs = [pair_color(x, y), pair_color(y, z), pair_color(x, z)]
    assert None not in cs, "triangle spans a group pair with no edge"
    blacks = cs.count("b")
    return {3: "three_black", 2: "two_black", 1: "one_black", 0: "all_red"}[blacks]


def absorbed_schedule(n, edges, pairs):
    """Per step, the set of original triangles first entering an absorbing
    configuration.  Colors are recomputed from the original adjacency and
    the current partition at every step, independent of the library."""
    triangles = brute_triangles(n, edges)
    adj = {v: set() for v in range(1, n + 1)}
    for u, v in set(map(lambda e: key(*e), edges)):
        adj[u].add(v)
        adj[v].add(u)
    members = {v: frozenset([v]) for v in range(1, n + 1)}
    group_of = {v: v for v in range(1, n + 1)}

    def pair_color(x, y):
        gx, gy = members[x], members[y]
        crossing = sum(1 for a in gx for b in gy if b in adj[a])
        if crossing == 0:
            return None
        if crossing == len(gx) * len(gy):
            return "b"
        return "r"

    state = {tri: triangle_case(tri, group_of, pair_color) for tri in triangles}
    assert all(c == "three_black" for c in state.values())
    schedule = []
    seen = set()
    for step, (u, v) in enumerate(pairs):
        w = n + 1 + step
        members[w] = members.pop(u) | members.pop(v)
        for a in members[w]:
            group_of[a] = w
        newly = set()
        for tri in triangles:
            c = triangle_case(tri, group_of, pair_color)
            if state[tri] in ABSORBING:
                assert c in ABSORBING, "triangle left an absorbing configuration"
            elif c in ABSORBING:
                assert tri not in seen
                newly.add(tri)
                seen.add(tri)
            state[tri] = c
        schedule.append(frozenset(newly))
    assert seen == set(triangles)
    return schedule


# -- reference counting pipeline -------------------------------------------


def reference_count(n, edges, pairs, variant="fixed"):
    """Slow, dictionary-based reimplementation of the counting algorithm.

    Besides the correct behavior ("fixed"), three deliberate mutants are
    available; the targeted instances below are built so that each mutant
    gives a wrong count on at least one of them, which proves the
    instance really drives the branch the mutant damages:
      "ordered-pairs"       visits red-neighbor pairs in both orders, so
                            symmetric products are counted twice
      "dropped-orientation" visits pairs once but never counts the
                            black-to-x/red-to-y orientation, and misreads
                            a cross count that black pairs do not have
      "partial-cross"       gates the both-red cross merge on the wrong
                            pair, leaving those counts unset (read as 0)
    """
    colors = {key(u, v): "b" for u, v in set(map(lambda e: key(*e), edges))}
    live = set(range(1, n + 1))
    size = {x: 1 for x in live}
    inner = {x: 0 for x in live}
    cross = {}

    def cget(a, b):
        return cross.get(key(a, b), 0)

    t = 0
    for step, (u, v) in enumerate(pairs):
        w = n + 1 + step

        def col(a, b):
            return colors.get(key(a, b))

        cuv = col(u, v)
        reds, blacks = [], []
        for x in sorted(live - {u, v}):
            cu, cv = col(u, x), col(v, x)
            if cu == "b" and cv == "b":
                blacks.append(x)
            elif cu or cv:
                reds.append(x)
        if cuv == "b":
            t += size[u] * inner[v] + size[v] * inner[u]
        for x in reds:
            cu, cv = col(u, x), col(v, x)
            if cu == "b":
                t += size[u] * inner[x] + size[x] * inner[u]
                if cuv == "b" and cv == "r":
                    t += cget(v, x) * size[u]
            elif cv == "b":
                t += size[v] * inner[x] + size[x] * inner[v]
                if cuv == "b" and cu == "r":
                    t += cget(u, x) * size[v]
        for x in reds:
            cu, cv = col(u, x), col(v, x)
            for y in blacks:
                if col(x, y) == "r":
                    if cu == "b":
                        t += cget(x, y) * size[u]
                    elif cv == "b":
                        t += cget(x, y) * size[v]
        def mutant_pair_lines(x, y):
            got = 0
            cux, cvx = col(u, x), col(v, x)
            cuy, cvy = col(u, y), col(v, y)
            cxy = col(x, y)
            if cxy == "b":
                if cux == "b" and cuy == "b":
                    got += size[u] * size[x] * size[y]
                elif cvx == "b" and cvy == "b":
                    got += size[v] * size[x] * size[y]
                if cux == "r" and cuy == "b":
                    got += cget(u, x) * size[y]
                elif cvx == "r" and cvy == "b":
                    got += cget(v, x) * size[y]
                if cux == "b" and cux == "r":  # contradiction: never fires
                    got += cget(u, x) * size[x]
                elif cvx == "b" and cvy == "r":
                    got += cget(v, x) * size[x]  # black pairs carry no count
            elif cxy == "r":
                if cux == "b" and cuy == "b":
                    got += cget(x, y) * size[u]
                elif cvx == "b" and cvy == "b":
                    got += cget(x, y) * size[v]
            return got

        def pair_lines(x, y):
            got = 0
            cux, cvx = col(u, x), col(v, x)
            cuy, cvy = col(u, y), col(v, y)
            cxy = col(x, y)
            if cxy == "b":
                if cux == "b" and cuy == "b":
                    got += size[u] * size[x] * size[y]
                if cvx == "b" and cvy == "b":
                    got += size[v] * size[x] * size[y]
                if cux == "r" and cuy == "b":
                    got += cget(u, x) * size[y]
                if cux == "b" and cuy == "r":
                    got += cget(u, y) * size[x]
                if cvx == "r" and cvy == "b":
                    got += cget(v, x) * size[y]
                if cvx == "b" and cvy == "r":
                    got += cget(v, y) * size[x]
            elif cxy == "r":
                if cux == "b" and cuy == "b":
                    got += cget(x, y) * size[u]
                if cvx == "b" and cvy == "b":
                    got += cget(x, y) * size[v]
            return got

        if variant == "ordered-pairs":
            for x in reds:
                for y in reds:
                    if y != x:
                        t += mutant_pair_lines(x, y)
        elif variant == "dropped-orientation":
            for i, x in enumerate(reds):
                for y in reds[i + 1:]:
                    t += mutant_pair_lines(x, y)
        else:
            for i, x in enumerate(reds):
                for y in reds[i + 1:]:
                    t += pair_lines(x, y)
        # auxiliary updates
        nu, nv = size[u], size[v]
        if cuv == "b":
            between = nu * nv
        elif cuv == "r":
            between = cget(u, v)
        else:
            between = 0
        new_inner = inner[u] + inner[v] + between
        new_entries = {}
        for x in reds:
            cu, cv = col(u, x), col(v, x)
            if cu == "b" and cv is None:
                val = nu * size[x]
            elif cu is None and cv == "b":
                val = nv * size[x]
            elif cu == "r" and cv is None:
                val = cget(u, x)
            elif cu is None and cv == "r":
                val = cget(v, x)
            elif cu == "r" and cv == "b":
                val = cget(u, x) + nv * size[x]
            elif cu == "b" and cv == "r":
                val = cget(v, x) + nu * size[x]
            else:  # red to both
                if variant == "partial-cross":
                    # mutant looks at the wrong pair before merging
                    val = cget(u, x) + cget(v, x) if cuv == "r" else None
                else:
                    val = cget(u, x) + cget(v, x)
            if val is not None:
                new_entries[key(w, x)] = val
        for x in list(live):
            cross.pop(key(u, x), None)
            cross.pop(key(v, x), None)
        del size[u], size[v], inner[u], inner[v]
        size[w] = nu + nv
        inner[w] = new_inner
        cross.update(new_entries)
        live, colors = apply_contraction(colors, live, u, v, w)
    return t


# -- handcrafted instances, one per subtle counting branch -----------------

# the sole triangle is counted at the pair of red neighbors {3, 5} where
# the merged corner is black to 3 and red to 5; only the mixed-orientation
# lines of the unordered pair visit cover it
CASE_MIXED_ORIENTATION = dict(
    n=5,
    edges=[(2, 5), (1, 3), (2, 3), (3, 5)],
    pairs=[(1, 2), (4, 6), (7, 3), (8, 5)],
    triangles=1,
)

# same graph with the second contraction written in the other order, so
# the mirrored lines of the subcase fire as well
CASE_MIXED_ORIENTATION_FLIPPED = dict(
    n=5,
    edges=[(2, 5), (1, 3), (2, 3), (3, 5)],
    pairs=[(1, 2), (6, 4), (7, 3), (8, 5)],
    triangles=1,
)

# both u and v red to the same vertex: the merged cross count must be the
# sum of both sides, and two triangles are counted from it later
CASE_CROSS_BOTH_RED = dict(
    n=6,
    edges=[(1, 3), (3, 4), (1, 4), (1, 5), (2, 4), (2, 5),
           (1, 6), (2, 6), (3, 6), (4, 6), (5, 6)],
    pairs=[(1, 2), (4, 5), (7, 8), (6, 9), (10, 3)],
    triangles=7,
)

# a black pair of red neighbors seen from one corner: ordered pair visits
# would count the product twice
CASE_SYMMETRIC_BLACK_PAIR = dict(
    n=4,
    edges=[(1, 3), (1, 4), (3, 4)],
    pairs=[(1, 2), (5, 3), (6, 4)],
    triangles=1,
)

# a red pair of red neighbors: ordered visits would double the cross count
CASE_SYMMETRIC_RED_PAIR = dict(
    n=5,
    edges=[(3, 4), (1, 3), (1, 4), (1, 5)],
    pairs=[(4, 5), (1, 2), (7, 3), (8, 6)],
    triangles=1,
)

# instance -> the mutant it must kill
TARGETED_INSTANCES = {
    "mixed-orientation": (CASE_MIXED_ORIENTATION, "dropped-orientation"),
    "mixed-orientation-flipped": (CASE_MIXED_ORIENTATION_FLIPPED, "dropped-orientation"),
    "cross-both-red": (CASE_CROSS_BOTH_RED, "partial-cross"),
    "symmetric-black-pair": (CASE_SYMMETRIC_BLACK_PAIR, "ordered-pairs"),
    "symmetric-red-pair": (CASE_SYMMETRIC_RED_PAIR, "ordered-pairs"),
}
