"""Brute-force ground truth and cross-validation of the analyzer.

The oracle enumerates the automorphism group of the digraph (under a cap) and
searches it for regular abelian subgroups of every candidate isomorphism
type.  Agreement with the analyzer must be exact when the arithmetic
condition holds and a sound superset otherwise; anything else is a MISMATCH.
"""

from dataclasses import dataclass
from typing import Optional

from .abelian import AbelianType, enumerate_abelian
from .analyzer import ConnectionSet, realizable_groups
from .errors import CapacityError
from .permgroup import (
    DEFAULT_ELEMENT_CAP,
    DEFAULT_VERTEX_CAP,
    PermGroup,
    Permutation,
    automorphism_group,
)

EXACT_MATCH = "exact-match"
SOUND_SUBSET = "sound-subset"
MISMATCH = "MISMATCH"
ORACLE_CAPPED = "oracle-capped"


@dataclass(frozen=True)
class ValidationReport:
    n: int
    s: tuple[int, ...]
    predicted: tuple[AbelianType, ...]
    actual: Optional[tuple[AbelianType, ...]]
    verdict: str

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "S": list(self.s),
            "predicted": [g.text() for g in self.predicted],
            "actual": None if self.actual is None else [g.text() for g in self.actual],
            "verdict": self.verdict,
        }


def _uniform_length(images: tuple[int, ...]) -> Optional[int]:
    n = len(images)
    seen = bytearray(n)
    common = None
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = 1
            x = images[x]
            length += 1
        if common is None:
            common = length
        elif length != common:
            return None
    return common


def _uniform_pools(elements: tuple[Permutation, ...], n: int) -> dict[int, list[Permutation]]:
    """Group size-d candidates: elements whose cycles all have length exactly d.

    Any member of a semiregular subgroup has uniform cycle length equal to
    its order, so everything else is discarded up front.
    """
    pools: dict[int, list[Permutation]] = {}
    for g in elements:
        length = _uniform_length(g.images)
        if length is not None and length > 1 and n % length == 0:
            pools.setdefault(length, []).append(g)
    return pools


def _abelian_extension(
    subgroup: set[Permutation], g: Permutation, order: int
) -> Optional[set[Permutation]]:
    """Elements of <subgroup, g> for g of the given order commuting with all of
    subgroup; None unless the order grows by the full factor."""
    powers = [Permutation.identity(g.degree)]
    for _ in range(order - 1):
        powers.append(powers[-1] * g)
    extended = {a * q for a in subgroup for q in powers}
    if len(extended) != len(subgroup) * order:
        return None
    return extended


def _is_semiregular(elements: set[Permutation]) -> bool:
    return all(g.is_identity or not g.has_fixed_point() for g in elements)


def _search_type(pools, factors: tuple[int, ...], degree: int) -> bool:
    """Backtrack over commuting tuples matching the invariant-factor orders."""

    def extend(i: int, chosen: list[Permutation], subgroup: set[Permutation], start: int) -> bool:
        if i == len(factors):
            return True  # order n and semiregular, hence regular
        d = factors[i]
        pool = pools.get(d, [])
        # generators of equal order are interchangeable: scan forward only
        begin = start if i > 0 and factors[i - 1] == d else 0
        for j in range(begin, len(pool)):
            g = pool[j]
            if g in subgroup:
                continue
            if any(g * c != c * g for c in chosen):
                continue
            extended = _abelian_extension(subgroup, g, d)
            if extended is None or not _is_semiregular(extended):
                continue
            if extend(i + 1, chosen + [g], extended, j + 1):
                return True
        return False

    identity = Permutation.identity(degree)
    return extend(0, [], {identity}, 0)


def regular_abelian_types(
    group: PermGroup, n: int, cap: int = DEFAULT_ELEMENT_CAP
) -> list[AbelianType]:
    """All abelian types of order n occurring as regular subgroups of the group.

    A commuting tuple with the type's invariant-factor orders generating a
    semiregular subgroup of full order n is automatically regular, and its
    abstract type is forced by the orders, so existence of such a tuple is
    exactly containment of the type.
    """
    if group.degree != n:
        raise ValueError(f"group degree {group.degree} != {n}")
    elements = group.elements(cap)
    if n == 1:
        return list(enumerate_abelian(1))
    pools = _uniform_pools(elements, n)
    found = []
    for candidate in enumerate_abelian(n):
        factors = candidate.invariant_factors()
        if all(d in pools for d in factors) and _search_type(pools, factors, n):
            found.append(candidate)
    return found


def cross_validate(
    s: ConnectionSet,
    cap: int = DEFAULT_ELEMENT_CAP,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    strip_loops: bool = False,
) -> ValidationReport:
    """Compare the analyzer's prediction against the brute-force oracle."""
    predicted, exact = realizable_groups(s)
    predicted = tuple(predicted)
    try:
        aut = automorphism_group(s.digraph(strip_loops=strip_loops), vertex_cap=vertex_cap)
        actual = tuple(regular_abelian_types(aut, s.n, cap))
    except CapacityError:
        return ValidationReport(s.n, tuple(sorted(s.members)), predicted, None, ORACLE_CAPPED)
    if set(predicted) <= set(actual):
        if set(predicted) == set(actual):
            verdict = EXACT_MATCH
        elif exact:
            verdict = MISMATCH  # completeness was promised
        else:
            verdict = SOUND_SUBSET
    else:
        verdict = MISMATCH  # soundness violated
    return ValidationReport(s.n, tuple(sorted(s.members)), predicted, actual, verdict)
