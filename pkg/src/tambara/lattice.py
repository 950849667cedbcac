"""Divisor lattice of a finite cyclic group.

Subgroups of the cyclic group C_n correspond to divisors of n: C_d is the
unique subgroup of order d, and C_j <= C_d exactly when j | d.  Throughout
the package a subgroup is therefore a plain (validated) int, and lattice
operations reduce to gcd, lcm, and the number-theoretic Moebius function
on index ratios.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd


def divisors(n: int) -> list[int]:
    """All divisors of n, ascending."""
    if n < 1:
        raise ValueError(f"group order must be a positive integer, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    large.reverse()
    return small + large


def require_divides(a: int, b: int, what: str = "subgroup") -> None:
    if a < 1 or b % a != 0:
        raise ValueError(f"{what}: {a} is not a divisor of {b}")


def is_prime(p: int) -> bool:
    """Primality by trial division; inputs here are desk-scale."""
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_prime_or_zero(p: int) -> int:
    """Validate eagerly that p is zero or a prime; returns p."""
    if p != 0 and not is_prime(p):
        raise ValueError(f"expected a prime or zero, got {p}")
    return p


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, exponent), ...), p ascending."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_factors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def omega(n: int) -> int:
    """Number of prime factors of n counted with multiplicity."""
    return sum(e for _, e in factorize(n))


def mu(m: int) -> int:
    """Number-theoretic Moebius function."""
    if m < 1:
        raise ValueError(f"mu is defined on positive integers, got {m}")
    value = 1
    for _, e in factorize(m):
        if e > 1:
            return 0
        value = -value
    return value


def moebius(j: int, k: int) -> int:
    """Moebius function of the subgroup poset of a cyclic group.

    For C_j <= C_k this is mu(k/j); if j does not divide k the poset
    value is 0.
    """
    if j < 1 or k < 1:
        raise ValueError("subgroup orders must be positive")
    if k % j != 0:
        return 0
    return mu(k // j)


def p_part(d: int, p: int) -> int:
    """Largest power of the prime p dividing d."""
    q = 1
    while d % p == 0:
        d //= p
        q *= p
    return q


def o_p(d: int, p: int) -> int:
    """Order of the p-residual subgroup O^p(C_d): strip the p-part of d."""
    if p == 0:
        raise ValueError("O^p is undefined for p = 0")
    if not is_prime(p):
        raise ValueError(f"O^p needs a prime, got {p}")
    return d // p_part(d, p)


@dataclass(frozen=True)
class CyclicGroupCtx:
    """The ambient group C_n, seen as its divisor lattice."""

    n: int
    divisors: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "divisors", tuple(divisors(self.n)))


def s_partition(ctx: CyclicGroupCtx, c: int) -> dict[int, tuple[tuple[int, ...], int]]:
    """Partition subgroups of C_n by their intersection with C_c.

    Returns {j: (members, m_j)} for each j | c, where members are the
    divisors d of n with gcd(d, c) = j (ascending) and m_j is the unique
    divisibility-maximal member.  Uniqueness holds for cyclic groups; it
    is asserted, not assumed.
    """
    require_divides(c, ctx.n)
    cells: dict[int, list[int]] = {j: [] for j in divisors(c)}
    for d in ctx.divisors:
        cells[gcd(d, c)].append(d)
    out = {}
    for j, members in cells.items():
        tops = [m for m in members if all(m % d == 0 for d in members)]
        if len(tops) != 1:
            raise AssertionError(
                f"S_{j} in C_{ctx.n} lacks a unique divisibility-maximum: {members}"
            )
        out[j] = (tuple(members), tops[0])
    return out


def max_chain_length(ctx: CyclicGroupCtx) -> int:
    """Length of the longest subgroup chain e < H_1 < ... < C_n.

    Each step of a maximal chain has prime index, so the length is the
    number of prime factors of n with multiplicity.
    """
    return omega(ctx.n)
