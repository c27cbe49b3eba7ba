"""Independent brute-force oracles used to derive and pin expected values.

These deliberately avoid the library's algorithms: subdivision is checked by
exhausting labeled bin assignments, automorphisms by scanning all of Sym(n),
and pair-orbit preservation directly from the definition.
"""

from itertools import permutations, product


def brute_subdivision(a, b):
    """Exhaust all assignments of entries of a to labeled bins with target sums b."""
    if sum(a) != sum(b):
        return False
    for assignment in product(range(len(b)), repeat=len(a)):
        sums = [0] * len(b)
        for x, j in zip(a, assignment):
            sums[j] += x
        if sums == list(b):
            return True
    return False


def brute_automorphisms(digraph):
    """Every arc-preserving permutation, by scanning all of Sym(n)."""
    arcs = digraph.arcs
    found = []
    for p in permutations(range(digraph.vertex_count)):
        if all((p[u], p[v]) in arcs for u, v in arcs):
            found.append(p)
    return found


def brute_pair_orbit_preservers(colors):
    """All permutations preserving a complete coloring of ordered pairs."""
    n = len(colors)
    found = []
    for p in permutations(range(n)):
        if all(colors[p[x]][p[y]] == colors[x][y] for x in range(n) for y in range(n)):
            found.append(p)
    return found


def _horizontal_strip_results(lam, c):
    """Partitions mu with lam/mu a horizontal strip of c boxes (interlacing)."""
    rows = len(lam)
    results = set()

    def build(i, remaining, prefix):
        if i == rows:
            if remaining == 0:
                results.add(tuple(x for x in prefix if x > 0))
            return
        upper = lam[i]
        lower = lam[i + 1] if i + 1 < rows else 0
        for mu_i in range(lower, upper + 1):
            drop = upper - mu_i
            if drop <= remaining:
                build(i + 1, remaining - drop, prefix + (mu_i,))

    build(0, c, ())
    return results


def brute_strip_peelings(lam):
    """All cyclic-exponent multisets reachable by repeatedly peeling horizontal strips."""
    lam = tuple(sorted(lam, reverse=True))
    if not lam:
        return {()}
    out = set()
    for c in range(1, lam[0] + 1):
        for mu in _horizontal_strip_results(lam, c):
            for rest in brute_strip_peelings(mu):
                out.add(tuple(sorted((c,) + rest, reverse=True)))
    return out


def brute_chain_products(parts, p):
    """Exponent multisets of cyclic-quotient chains in the actual abelian group.

    Works on honest group elements: enumerates every cyclic subgroup of
    Z_{p^parts[0]} x ..., identifies each quotient's type by its element-order
    profile, and recurses on the quotient type.  Ground truth for the
    realizability order at small orders.
    """
    from functools import lru_cache
    from itertools import product as iproduct
    from math import gcd, lcm

    def all_partitions(k, maxpart=None):
        maxpart = maxpart or k
        if k == 0:
            yield ()
            return
        for first in range(min(k, maxpart), 0, -1):
            for rest in all_partitions(k - first, first):
                yield (first,) + rest

    def elements(mods):
        return list(iproduct(*[range(m) for m in mods]))

    def order_profile(partition):
        mods = tuple(p**e for e in partition)
        counts = {}
        for x in elements(mods):
            o = 1
            for xi, m in zip(x, mods):
                if xi:
                    o = lcm(o, m // gcd(xi, m))
            counts[o] = counts.get(o, 0) + 1
        return tuple(sorted(counts.items()))

    @lru_cache(maxsize=None)
    def products(partition):
        if not partition:
            return frozenset({()})
        mods = tuple(p**e for e in partition)
        total = sum(partition)
        out = set()
        seen_subgroups = set()
        for x in elements(mods):
            if all(v == 0 for v in x):
                continue
            cyclic = set()
            cur = tuple(0 for _ in mods)
            while cur not in cyclic:
                cyclic.add(cur)
                cur = tuple((a + b) % m for a, b, m in zip(cur, x, mods))
            sub = frozenset(cyclic)
            if sub in seen_subgroups:
                continue
            seen_subgroups.add(sub)
            c = 0
            size = len(sub)
            while size > 1:
                size //= p
                c += 1
            # quotient order profile: each coset counted |sub| times
            counts = {}
            for y in elements(mods):
                cur, k = y, 1
                while cur not in sub:
                    cur = tuple((a + b) % m for a, b, m in zip(cur, y, mods))
                    k += 1
                counts[k] = counts.get(k, 0) + 1
            profile = tuple(sorted((k, v // len(sub)) for k, v in counts.items()))
            quotient = next(
                q for q in all_partitions(total - c) if order_profile(q) == profile
            )
            for rest in products(quotient):
                out.add(tuple(sorted((c,) + rest, reverse=True)))
        return frozenset(out)

    return set(products(tuple(sorted(parts, reverse=True))))
