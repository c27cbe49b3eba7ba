"""Desk-scale permutation groups: orbits, blocks, 2-closure, digraph automorphisms.

Groups are given by generators.  Element enumeration is a plain BFS closure
under a configurable cap (default 10^6); there is deliberately no stabilizer
chain machinery.  Automorphism groups of (colored) digraphs come from the
refinement search engine, which also reports the exact group order, cached on
the returned group.
"""

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from . import _refine
from .arith import big_omega
from .digraph import Digraph
from .errors import CapacityError

DEFAULT_ELEMENT_CAP = 10**6
DEFAULT_VERTEX_CAP = 64


@dataclass(frozen=True, order=True)
class Permutation:
    """Bijection on {0..n-1} in image form; (p * q)(x) = p(q(x))."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation of 0..{len(self.images) - 1}: {self.images}")

    @classmethod
    def _make(cls, images: tuple[int, ...]) -> "Permutation":
        # internal fast path: skips bijection validation (closed operations preserve it)
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._make(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        images = list(range(n))
        for cycle in cycles:
            cycle = list(cycle)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation._make(tuple(map(self.images.__getitem__, other.images)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._make(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def has_fixed_point(self) -> bool:
        return any(i == j for i, j in enumerate(self.images))

    def cycle_lengths(self) -> list[int]:
        seen = [False] * len(self.images)
        lengths = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = True
                x = self.images[x]
                length += 1
            lengths.append(length)
        return sorted(lengths)

    def order(self) -> int:
        return math.lcm(*self.cycle_lengths())

    def uniform_cycle_length(self) -> Optional[int]:
        """Common length of all cycles, or None if lengths are mixed."""
        lengths = set(self.cycle_lengths())
        return lengths.pop() if len(lengths) == 1 else None

    def image_list(self) -> list[int]:
        """Serialized image form, e.g. [1, 2, 0]."""
        return list(self.images)


def rotation(n: int, k: int = 1) -> Permutation:
    """The translation x -> x + k on Z_n."""
    return Permutation(tuple((x + k) % n for x in range(n)))


@dataclass(frozen=True)
class BlockSystem:
    """G-invariant partition of the point set into equal-size blocks."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        points = [x for b in self.blocks for x in b]
        if sorted(points) != list(range(len(points))):
            raise ValueError("blocks do not partition the point set")
        if len({len(b) for b in self.blocks}) > 1:
            raise ValueError("blocks have unequal sizes")

    @classmethod
    def from_sets(cls, blocks: Iterable[Iterable[int]]) -> "BlockSystem":
        return cls(tuple(sorted(tuple(sorted(b)) for b in blocks)))

    @classmethod
    def singletons(cls, n: int) -> "BlockSystem":
        return cls(tuple((x,) for x in range(n)))

    @property
    def degree(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    def block_index(self) -> list[int]:
        idx = [0] * self.degree
        for i, b in enumerate(self.blocks):
            for x in b:
                idx[x] = i
        return idx

    def refines(self, other: "BlockSystem") -> bool:
        """Whether every block of ``other`` is a union of blocks of this system."""
        idx = other.block_index()
        return all(len({idx[x] for x in b}) == 1 for b in self.blocks)


@dataclass
class PermGroup:
    """Permutation group of fixed degree given by generators.

    ``cached_order``, when present, is trusted as the exact order (the
    automorphism engine sets it); otherwise the order comes from capped
    element enumeration.
    """

    degree: int
    generators: tuple[Permutation, ...]
    cached_order: Optional[int] = None
    _elements: Optional[tuple[Permutation, ...]] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.generators = tuple(self.generators)
        for g in self.generators:
            if g.degree != self.degree:
                raise ValueError(f"generator degree {g.degree} != group degree {self.degree}")

    @classmethod
    def from_generators(cls, gens: Iterable[Permutation], degree: Optional[int] = None) -> "PermGroup":
        gens = tuple(gens)
        if degree is None:
            if not gens:
                raise ValueError("degree required for a generator-free group")
            degree = gens[0].degree
        return cls(degree, gens)

    @classmethod
    def trivial(cls, n: int) -> "PermGroup":
        return cls(n, (), cached_order=1)

    @classmethod
    def cyclic(cls, n: int) -> "PermGroup":
        """The rotation group of Z_n in its regular action."""
        return cls(n, (rotation(n, 1),), cached_order=n)

    @classmethod
    def from_image_lists(cls, degree: int, images: Iterable[Iterable[int]]) -> "PermGroup":
        """Deserialize a group from generator image sequences."""
        return cls(degree, tuple(Permutation(tuple(seq)) for seq in images))

    def generator_image_lists(self) -> list[list[int]]:
        """JSON-ready generators in image form."""
        return [g.image_list() for g in self.generators]

    @classmethod
    def symmetric(cls, n: int) -> "PermGroup":
        if n == 1:
            return cls.trivial(1)
        gens = [Permutation.from_cycles(n, [(0, 1)])]
        if n > 2:
            gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
        return cls(n, tuple(gens), cached_order=math.factorial(n))

    def elements(self, cap: int = DEFAULT_ELEMENT_CAP) -> tuple[Permutation, ...]:
        """All elements, sorted, by BFS closure; CapacityError past the cap."""
        if self._elements is not None:
            if len(self._elements) > cap:
                raise CapacityError("group order exceeds element cap", cap)
            return self._elements
        if self.cached_order is not None and self.cached_order > cap:
            raise CapacityError("group order exceeds element cap", cap)
        els = self._closure(cap)
        self._elements = els
        if self.cached_order is not None and self.cached_order != len(els):
            raise RuntimeError(f"cached order {self.cached_order} != enumerated {len(els)}")
        return els

    def _closure(self, cap: int) -> tuple[Permutation, ...]:
        if self.degree < 256:
            return self._closure_bytes(cap)
        gens = [g.images for g in self.generators]
        identity = tuple(range(self.degree))
        els = {identity}
        frontier = [identity]
        while frontier:
            new = []
            for p in frontier:
                getter = p.__getitem__
                for g in gens:
                    q = tuple(map(getter, g))
                    if q not in els:
                        els.add(q)
                        new.append(q)
                        if len(els) > cap:
                            raise CapacityError("group order exceeds element cap", cap)
            frontier = new
        return tuple(Permutation._make(t) for t in sorted(els))

    def _closure_bytes(self, cap: int) -> tuple[Permutation, ...]:
        # Dimino-style incremental closure on bytes images; composition is one
        # C-level translate: e.translate(r + pad) has images x -> r[e[x]].
        pad = bytes(range(self.degree, 256))
        gens = [bytes(g.images) for g in self.generators]
        identity = bytes(range(self.degree))
        els_list = [identity]
        els_set = {identity}
        active: list[bytes] = []
        for g in gens:
            if g in els_set:
                continue
            active.append(g)
            old = els_list[:]  # subgroup before adding g; new elements fill whole cosets of it
            step_tables = [s + pad for s in active]
            queue = [g]
            while queue:
                r = queue.pop()
                if r in els_set:
                    continue
                r_table = r + pad
                for e in old:
                    x = e.translate(r_table)
                    if x not in els_set:
                        els_set.add(x)
                        els_list.append(x)
                        if len(els_set) > cap:
                            raise CapacityError("group order exceeds element cap", cap)
                for table in step_tables:
                    queue.append(r.translate(table))
        return tuple(Permutation._make(tuple(b)) for b in sorted(els_set))

    def order(self, cap: int = DEFAULT_ELEMENT_CAP) -> int:
        if self.cached_order is not None:
            return self.cached_order
        return len(self.elements(cap))

    def orbits(self) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            orbit = {start}
            frontier = [start]
            seen[start] = True
            while frontier:
                x = frontier.pop()
                for g in self.generators:
                    y = g(x)
                    if not seen[y]:
                        seen[y] = True
                        orbit.add(y)
                        frontier.append(y)
            out.append(tuple(sorted(orbit)))
        return out

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def is_regular(self, cap: int = DEFAULT_ELEMENT_CAP) -> bool:
        """Transitive with order equal to the degree."""
        if not self.is_transitive():
            return False
        if self.cached_order is not None:
            return self.cached_order == self.degree
        bound = self.degree + 1
        if bound > cap:
            raise CapacityError("regularity check needs degree+1 elements", cap)
        try:
            return len(self.elements(bound)) == self.degree
        except CapacityError:
            return False

    def is_semiregular(self, cap: int = DEFAULT_ELEMENT_CAP) -> bool:
        return all(g.is_identity or not g.has_fixed_point() for g in self.elements(cap))

    def minimal_block_system(self, a: int, b: int) -> BlockSystem:
        """Finest block system placing a and b in one block (union-find closure)."""
        if not self.is_transitive():
            raise ValueError("block systems require a transitive group")
        if a == b:
            raise ValueError("points must be distinct")
        n = self.degree
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> bool:
            rx, ry = find(x), find(y)
            if rx == ry:
                return False
            parent[max(rx, ry)] = min(rx, ry)
            return True

        union(a, b)
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            for g in self.generators:
                gx, gy = g(x), g(y)
                if union(gx, gy):
                    queue.append((gx, gy))
        classes: dict[int, list[int]] = {}
        for x in range(n):
            classes.setdefault(find(x), []).append(x)
        return BlockSystem.from_sets(classes.values())

    def imprimitivity_chain(self) -> Optional[list[BlockSystem]]:
        """A maximal chain of nested block systems with prime index ratios.

        The chain has Omega(degree)+1 systems from singletons to the full set,
        each ratio prime, if such a chain exists; None otherwise.  Search is
        greedy over prime-size minimal systems with backtracking.
        """
        if not self.is_transitive():
            raise ValueError("imprimitivity chains require a transitive group")
        gens = [g.images for g in self.generators]
        chain = _prime_step_chain(gens, self.degree)
        if chain is None:
            return None
        return [BlockSystem.from_sets(partition) for partition in chain]


def _prime_step_chain(gens: list[tuple[int, ...]], m: int) -> Optional[list[list[list[int]]]]:
    if m == 1:
        return [[[0]]]
    candidates = []
    seen = set()
    for b in range(1, m):
        blocks = _minimal_blocks_raw(gens, m, 0, b)
        key = tuple(tuple(blk) for blk in blocks)
        if key in seen:
            continue
        seen.add(key)
        if _is_prime(len(blocks[0])):
            candidates.append(blocks)
    candidates.sort(key=lambda blocks: (len(blocks[0]), blocks))
    singles = [[x] for x in range(m)]
    for blocks in candidates:
        qgens = _quotient_gens(gens, blocks)
        sub = _prime_step_chain(qgens, len(blocks))
        if sub is not None:
            lifted = [[sorted(x for j in qblock for x in blocks[j]) for qblock in partition] for partition in sub]
            return [singles] + lifted
    return None


def _minimal_blocks_raw(gens, n: int, a: int, b: int) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[max(rx, ry)] = min(rx, ry)
        return True

    union(a, b)
    queue = [(a, b)]
    while queue:
        x, y = queue.pop()
        for g in gens:
            gx, gy = g[x], g[y]
            if union(gx, gy):
                queue.append((gx, gy))
    classes: dict[int, list[int]] = {}
    for x in range(n):
        classes.setdefault(find(x), []).append(x)
    return sorted([sorted(c) for c in classes.values()])


def _quotient_gens(gens, blocks: list[list[int]]) -> list[tuple[int, ...]]:
    idx = {}
    for i, blk in enumerate(blocks):
        for x in blk:
            idx[x] = i
    return [tuple(idx[g[blk[0]]] for blk in blocks) for g in gens]


def _is_prime(k: int) -> bool:
    return k >= 2 and big_omega(k) == 1


def enumerate_elements(group: PermGroup, cap: int = DEFAULT_ELEMENT_CAP) -> tuple[Permutation, ...]:
    return group.elements(cap)


def direct_product(g: PermGroup, h: PermGroup) -> PermGroup:
    """G x H in the product action on pairs (x, y) -> x * h.degree + y."""
    k = h.degree
    gens = [
        Permutation(tuple(gp(x) * k + y for x in range(g.degree) for y in range(k)))
        for gp in g.generators
    ]
    gens += [
        Permutation(tuple(x * k + hp(y) for x in range(g.degree) for y in range(k)))
        for hp in h.generators
    ]
    return PermGroup(g.degree * k, tuple(gens))


def wreath_product(g: PermGroup, h: PermGroup) -> PermGroup:
    """G wr H on pairs: G permutes fibers, H acts independently inside each fiber.

    Needs G transitive so the fiber copies of H are conjugate into place.
    """
    if not g.is_transitive():
        raise ValueError("wreath_product needs a transitive outer group")
    k = h.degree
    gens = [
        Permutation(tuple(gp(x) * k + y for x in range(g.degree) for y in range(k)))
        for gp in g.generators
    ]
    for hp in h.generators:
        images = list(range(g.degree * k))
        for y in range(k):
            images[y] = hp(y)
        gens.append(Permutation(tuple(images)))
    return PermGroup(g.degree * k, tuple(gens))


@dataclass(frozen=True)
class ArcColoring:
    """Complete arc coloring of ordered pairs; the diagonal colors vertices."""

    colors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.colors)
        if any(len(row) != n for row in self.colors):
            raise ValueError("color matrix must be square")

    @property
    def vertex_count(self) -> int:
        return len(self.colors)

    def matrix(self) -> list[list[int]]:
        return [list(row) for row in self.colors]


def orbital_coloring(group: PermGroup) -> ArcColoring:
    """Color ordered pairs by their orbit under the group (diagonal included)."""
    n = group.degree
    gens = [g.images for g in group.generators]
    ids = [[-1] * n for _ in range(n)]
    next_id = 0
    for x in range(n):
        for y in range(n):
            if ids[x][y] != -1:
                continue
            ids[x][y] = next_id
            frontier = [(x, y)]
            while frontier:
                u, v = frontier.pop()
                for g in gens:
                    gu, gv = g[u], g[v]
                    if ids[gu][gv] == -1:
                        ids[gu][gv] = next_id
                        frontier.append((gu, gv))
            next_id += 1
    return ArcColoring(tuple(tuple(row) for row in ids))


def automorphism_group(
    structure: Union[Digraph, ArcColoring], vertex_cap: int = DEFAULT_VERTEX_CAP
) -> PermGroup:
    """Full automorphism group of a digraph or arc coloring, with exact order cached."""
    if isinstance(structure, Digraph):
        n = structure.vertex_count
        matrix = structure.adjacency_matrix()
    else:
        n = structure.vertex_count
        matrix = structure.matrix()
    if n > vertex_cap:
        raise CapacityError("structure too large for automorphism search", vertex_cap)
    gens, order = _refine.automorphisms(matrix)
    return PermGroup(n, tuple(Permutation(g) for g in gens), cached_order=order)


def two_closure(group: PermGroup, vertex_cap: int = DEFAULT_VERTEX_CAP) -> PermGroup:
    """Largest group with the same orbits on ordered pairs: the automorphism
    group of the orbital coloring."""
    return automorphism_group(orbital_coloring(group), vertex_cap=vertex_cap)


def is_nilpotent(group: PermGroup, cap: int = DEFAULT_ELEMENT_CAP) -> bool:
    """Whether the lower central series reaches the trivial group."""
    els = group.elements(cap)
    identity = Permutation.identity(group.degree)
    current = set(els)
    while True:
        commutators = set()
        for x in current:
            x_inv = x.inverse()
            for g in els:
                c = x_inv * g.inverse() * x * g
                if not c.is_identity:
                    commutators.add(c)
        if not commutators:
            return True
        nxt = _mulclose(commutators, identity)
        if len(nxt) == len(current):
            return False
        current = nxt


def _mulclose(gens: Iterable[Permutation], identity: Permutation) -> set[Permutation]:
    gens = list(gens)
    els = {identity, *gens}
    frontier = list(gens)
    while frontier:
        new = []
        for p in frontier:
            for g in gens:
                q = p * g
                if q not in els:
                    els.add(q)
                    new.append(q)
        frontier = new
    return els
