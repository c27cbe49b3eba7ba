"""Digraph values: Cayley construction, wreath products, canonical towers.

Loops are ordinary arcs (v, v); K_2 means the digon carrying both arcs and
K_2-bar the arcless graph on two vertices, which is exactly the distinction
the tower construction's case split needs.
"""

from dataclasses import dataclass
from typing import Iterable, Optional

from ._refine import iso_search
from .errors import CapacityError

DEFAULT_VERTEX_CAP = 64


@dataclass(frozen=True)
class Digraph:
    vertex_count: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        n = self.vertex_count
        if n < 1:
            raise ValueError(f"vertex_count must be positive, got {n}")
        for u, v in self.arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) out of range for {n} vertices")

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def adjacency_matrix(self) -> list[list[int]]:
        m = [[0] * self.vertex_count for _ in range(self.vertex_count)]
        for u, v in self.arcs:
            m[u][v] = 1
        return m

    def reverse(self) -> "Digraph":
        return Digraph(self.vertex_count, frozenset((v, u) for u, v in self.arcs))


def digraph(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    return Digraph(n, frozenset(arcs))


def empty_digraph(n: int) -> Digraph:
    return Digraph(n, frozenset())


def complete_digraph(n: int) -> Digraph:
    """Loopless complete digraph (both orientations of every edge)."""
    return Digraph(n, frozenset((u, v) for u in range(n) for v in range(n) if u != v))


def directed_cycle(n: int) -> Digraph:
    """Directed n-cycle; n = 2 is the digon and n = 1 a single loop."""
    return Digraph(n, frozenset((v, (v + 1) % n) for v in range(n)))


def cayley_digraph(n: int, members: Iterable[int]) -> Digraph:
    """Cayley digraph of Z_n: arcs g -> g+s for each s in the connection set."""
    s = set(members)
    for x in s:
        if not (0 <= x < n):
            raise ValueError(f"connection set element {x} out of range for Z_{n}")
    return Digraph(n, frozenset((g, (g + x) % n) for g in range(n) for x in s))


def wreath(outer: Digraph, inner: Digraph) -> Digraph:
    """Wreath product: inner copied in each fiber, complete bundles along outer arcs.

    Vertex (u, v) is u * inner.vertex_count + v.
    """
    k = inner.vertex_count
    arcs = set()
    for u in range(outer.vertex_count):
        for v, w in inner.arcs:
            arcs.add((u * k + v, u * k + w))
    for u, u2 in outer.arcs:
        for v in range(k):
            for w in range(k):
                arcs.add((u * k + v, u2 * k + w))
    return Digraph(outer.vertex_count * inner.vertex_count, frozenset(arcs))


def _tower_factors(p: int, layers: tuple[int, ...]) -> list[Digraph]:
    if not layers or any(k < 1 for k in layers):
        raise ValueError(f"layers must be a nonempty sequence of positive integers: {layers}")
    factors = []
    prev_is_digon = False
    for i, k in enumerate(layers):
        q = p ** k
        if q > 2:
            factors.append(directed_cycle(q))
            prev_is_digon = False
        elif i == 0 or not prev_is_digon:
            factors.append(directed_cycle(2))  # K_2, the digon
            prev_is_digon = True
        else:
            factors.append(empty_digraph(2))  # K_2-bar
            prev_is_digon = False
    return factors


def tower_digraph(p: int, layers: Iterable[int]) -> Digraph:
    """Canonical digraph whose automorphism group is the iterated wreath product
    of cyclic groups of orders p^k over the given layers (outermost first).

    Each factor is the directed cycle of length p^k, except that order-2
    factors alternate between the digon and the arcless pair so consecutive
    Sym(2) factors cannot merge into a larger symmetric group.
    """
    factors = _tower_factors(p, tuple(layers))
    result = factors[0]
    for f in factors[1:]:
        result = wreath(result, f)
    return result


def tower_connection_set(p: int, layers: Iterable[int]) -> tuple[int, frozenset[int]]:
    """Connection set presenting the tower digraph as a circulant.

    Each factor is itself a circulant Cay(Z_q, A); wrapping an outer factor
    around Cay(Z_m, S) keeps q*S and adds the full residue class a + qZ_m for
    every a in A, which is the coset structure the wreath product demands.
    """
    factors = _tower_factors(p, tuple(layers))
    n = 1
    s: set[int] = set()
    for f in reversed(factors):
        q = f.vertex_count
        a = {w for (v, w) in f.arcs if v == 0}  # factor's own connection set
        s = {q * x for x in s} | {e + q * t for e in a for t in range(n)}
        n *= q
    return n, frozenset(s)


def are_isomorphic(
    a: Digraph, b: Digraph, vertex_cap: int = DEFAULT_VERTEX_CAP
) -> Optional[list[int]]:
    """Lexicographically least arc-preserving bijection from a onto b, or None."""
    if max(a.vertex_count, b.vertex_count) > vertex_cap:
        raise CapacityError("digraph too large for isomorphism search", vertex_cap)
    if a.vertex_count != b.vertex_count or a.arc_count != b.arc_count:
        return None
    return iso_search(a.adjacency_matrix(), b.adjacency_matrix(), lex=True)


def edge_list_text(d: Digraph) -> str:
    """Edge-list format: "n=<count>" then one "u v" line per arc."""
    lines = [f"n={d.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in sorted(d.arcs))
    return "\n".join(lines)


def parse_edge_list(text: str) -> Digraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n="):
        raise ValueError('edge list must start with "n=<count>"')
    n = int(lines[0][2:])
    arcs = set()
    for ln in lines[1:]:
        u, v = ln.split()
        arcs.add((int(u), int(v)))
    return Digraph(n, frozenset(arcs))


def dot_text(d: Digraph, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {v};" for v in range(d.vertex_count))
    lines.extend(f"  {u} -> {v};" for u, v in sorted(d.arcs))
    lines.append("}")
    return "\n".join(lines)
