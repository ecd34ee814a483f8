"""Named colorings: splitting-alternating, multi-central and single-red."""

from __future__ import annotations

from dataclasses import dataclass

from .core import CycleColoring, DomainError


@dataclass(frozen=True)
class Factorization:
    n: int
    p: int
    q: int


def least_factor(n: int) -> int:
    """Smallest divisor of ``n`` greater than 1."""
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    f = 2
    while f * f <= n:
        if n % f == 0:
            return f
        f += 1
    return n


def factorization(n: int) -> Factorization:
    """``n = p * q`` with ``p`` the least nontrivial factor of an odd composite ``n``."""
    if n % 2 == 0 or n < 9:
        raise DomainError(f"n must be an odd composite, got {n}")
    p = least_factor(n)
    if p == n:
        raise DomainError(f"n must be an odd composite, got prime {n}")
    return Factorization(n=n, p=p, q=n // p)


def _check_divisor(n: int, p: int) -> int:
    if n % 2 == 0:
        raise DomainError(f"n must be odd, got {n}")
    if p <= 1 or p >= n or n % p:
        raise DomainError(f"{p} is not a nontrivial divisor of {n}")
    return n // p


def sa_coloring(n: int, p: int | None = None) -> CycleColoring:
    """Splitting-alternating coloring of ``C_n`` with ``p`` splitting vertices.

    The splitting vertices ``l*q`` (``q = n/p``, ``1 <= l <= p``) are white for
    odd ``l`` and red for even ``l``; every other vertex ``a`` is red exactly
    when ``a mod q`` is odd.  ``p`` defaults to the least factor of ``n``.
    """
    if p is None:
        p = factorization(n).p
    q = _check_divisor(n, p)
    if q < 3:
        raise DomainError(f"n/p must be at least 3, got {q}")
    colors = [(a % q) % 2 == 1 for a in range(n)]
    for ell in range(1, p + 1):
        colors[(ell * q) % n] = ell % 2 == 0
    return CycleColoring(tuple(colors))


def multi_central_coloring(n: int, p: int | None = None) -> CycleColoring:
    """Reds exactly at the multiples of ``p``; symmetric about each of them."""
    if p is None:
        p = factorization(n).p
    _check_divisor(n, p)
    return CycleColoring.from_reds(n, range(0, n, p))


def single_red_coloring(n: int) -> CycleColoring:
    if n < 4:
        raise DomainError(f"n must be at least 4, got {n}")
    return CycleColoring.from_reds(n, [0])
