"""Elementary number theory shared by the other modules.

Everything here is exact integer arithmetic via trial division; inputs are
desk scale (n up to about 10^6), so nothing probabilistic is needed.
"""

from dataclasses import dataclass
from math import gcd, prod


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition n = p_1^a_1 * ... * p_r^a_r with p_1 < ... < p_r."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def radical(self) -> int:
        """Product of the distinct primes dividing n."""
        return prod(self.primes)


def factorize(n: int) -> Factorization:
    """Factor a positive integer; n = 1 yields an empty factor list."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    factors = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            factors.append((p, a))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def big_omega(n: int) -> int:
    """Number of prime factors of n counted with multiplicity."""
    return sum(a for _, a in factorize(n).factors)


def euler_phi(n: int) -> int:
    """Euler's totient."""
    result = n
    for p, _ in factorize(n).factors:
        result = result // p * (p - 1)
    return result


def arithmetic_condition(n: int) -> bool:
    """Whether gcd(k, phi(k)) = 1 for k the radical of n.

    This is the condition under which the analyzer's realizable-group list
    is complete rather than merely sound.
    """
    if n < 2:
        raise ValueError(f"condition is defined for n >= 2, got {n}")
    k = factorize(n).radical
    return gcd(k, euler_phi(k)) == 1
