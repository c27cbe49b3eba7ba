"""Search engine for arc-colored digraphs: refinement, isomorphism, automorphisms.

A structure is an n x n matrix of small integer arc colors; entry [u][v] is
the color of the ordered pair (u, v) and the diagonal holds vertex colors
(for a plain digraph: 1 = arc/loop, 0 = none).  Vertex classes are refined by
iterated neighborhood signatures, searches backtrack over refined classes,
and every choice point iterates in sorted order so results are deterministic.

The automorphism search individualizes one vertex per level and multiplies
orbit sizes, which yields the exact group order without enumerating elements.
"""

from collections import Counter


def _signatures(m, colors):
    n = len(colors)
    sigs = []
    for v in range(n):
        row = m[v]
        cnt = Counter()
        for u in range(n):
            if u != v:
                cnt[(row[u], m[u][v], colors[u])] += 1
        sigs.append((colors[v], tuple(sorted(cnt.items()))))
    return sigs


def refine(m, colors):
    """Iterate signature refinement on one structure until the partition is stable."""
    colors = list(colors)
    while True:
        sigs = _signatures(m, colors)
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [table[s] for s in sigs]
        if len(table) == len(set(colors)):
            return new
        colors = new


def _refine_pair(ma, ca, mb, cb):
    """Refine two structures with a shared color table; None if classes mismatch."""
    while True:
        sa = _signatures(ma, ca)
        sb = _signatures(mb, cb)
        table = {s: i for i, s in enumerate(sorted(set(sa) | set(sb)))}
        na = [table[s] for s in sa]
        nb = [table[s] for s in sb]
        if Counter(na) != Counter(nb):
            return None
        if len(set(na)) == len(set(ca)):
            return na, nb
        ca, cb = na, nb


def _diagonal_colors(ma, mb):
    values = sorted({ma[v][v] for v in range(len(ma))} | {mb[v][v] for v in range(len(mb))})
    rank = {d: i for i, d in enumerate(values)}
    ca = [rank[ma[v][v]] for v in range(len(ma))]
    cb = [rank[mb[v][v]] for v in range(len(mb))]
    return ca, cb, len(values)


def iso_search(ma, mb, forced=None, lex=True):
    """Color-preserving bijection from structure ma onto mb, or None.

    ``forced`` prescribes images for some vertices.  With ``lex`` the search
    maps vertices 0..n-1 in order trying images in ascending order, so the
    returned witness is the lexicographically least isomorphism; otherwise
    vertex order is chosen by candidate count for pruning.
    """
    n = len(ma)
    if len(mb) != n:
        return None
    forced = dict(forced) if forced else {}
    items = sorted(forced.items())
    if len({b for _, b in items}) != len(items):
        return None
    for a1, b1 in items:
        for a2, b2 in items:
            if ma[a1][a2] != mb[b1][b2]:
                return None

    ca, cb, next_color = _diagonal_colors(ma, mb)
    for a, b in items:
        ca[a] = next_color
        cb[b] = next_color
        next_color += 1
    refined = _refine_pair(ma, ca, mb, cb)
    if refined is None:
        return None
    ca, cb = refined

    by_color = {}
    for u in range(n):
        by_color.setdefault(cb[u], []).append(u)
    cands = [by_color[c] for c in ca]
    order = list(range(n)) if lex else sorted(range(n), key=lambda v: (len(cands[v]), v))

    mapping = [-1] * n
    used = [False] * n

    def dfs(idx):
        if idx == n:
            return True
        v = order[idx]
        prefix = order[:idx]
        row_a = ma[v]
        for u in cands[v]:
            if used[u]:
                continue
            row_b = mb[u]
            ok = True
            for w in prefix:
                x = mapping[w]
                if row_a[w] != row_b[x] or ma[w][v] != mb[x][u]:
                    ok = False
                    break
            if ok:
                mapping[v] = u
                used[u] = True
                if dfs(idx + 1):
                    return True
                mapping[v] = -1
                used[u] = False
        return False

    if dfs(0):
        return list(mapping)
    return None


def _close_orbit(orbit, gens):
    orb = set(orbit)
    frontier = list(orb)
    while frontier:
        v = frontier.pop()
        for g in gens:
            u = g[v]
            if u not in orb:
                orb.add(u)
                frontier.append(u)
    return orb


def automorphisms(m):
    """Generators and exact order of the color-preserving automorphism group.

    Stabilizer-chain style: at each level the first vertex of the first
    non-singleton refined cell is individualized; its orbit under the point
    stabilizer of the previously fixed vertices is measured by one membership
    search per unresolved candidate, and the group order is the product of
    the orbit sizes.  Found witnesses generate the full group.
    """
    n = len(m)
    ca, _, next_color = _diagonal_colors(m, m)
    base = []
    gens = []
    order = 1
    while True:
        seeded = list(ca)
        for i, b in enumerate(base):
            seeded[b] = next_color + i
        colors = refine(m, seeded)

        cells = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        target = None
        for v in range(n):
            if len(cells[colors[v]]) > 1:
                target = cells[colors[v]]
                break
        if target is None:
            return gens, order

        x = target[0]
        forced_base = {b: b for b in base}
        orbit = {x}
        level_gens = []
        for y in target[1:]:
            if y in orbit:
                continue
            witness = iso_search(m, m, forced={**forced_base, x: y}, lex=False)
            if witness is not None:
                witness = tuple(witness)
                gens.append(witness)
                level_gens.append(witness)
                orbit = _close_orbit(orbit, level_gens)
        order *= len(orbit)
        base.append(x)
