"""Ring-index arithmetic, coloring values and vertex codes on cycles.

Vertices of ``C_n`` are the residues ``0..n-1``; vertex ``i`` is adjacent to
``i - 1`` and ``i + 1`` (mod n).  A coloring is stored as a tuple of booleans,
``True`` meaning red.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Code = tuple[int, ...]


class DomainError(ValueError):
    """Input outside the domain of an operation (bad index, bad n, ...)."""


class UnsupportedError(DomainError):
    """The operation is well defined only for a narrower class of n."""


_CHAR_VALUES = {"R": True, "1": True, "W": False, "0": False}


def parse_colors(text: str) -> tuple[bool, ...]:
    """Parse an R/W string (case-insensitive, '1'/'0' aliases) into colors."""
    colors = []
    for pos, ch in enumerate(text.strip()):
        try:
            colors.append(_CHAR_VALUES[ch.upper()])
        except KeyError:
            raise DomainError(
                f"invalid color character {ch!r} at position {pos}"
            ) from None
    return tuple(colors)


def format_colors(colors: Iterable[bool]) -> str:
    return "".join("R" if c else "W" for c in colors)


@dataclass(frozen=True)
class CycleColoring:
    """Red-white coloring of the cycle on ``len(colors)`` vertices."""

    colors: tuple[bool, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(bool(c) for c in self.colors))
        if len(self.colors) < 3:
            raise DomainError(f"a cycle needs at least 3 vertices, got {len(self.colors)}")

    @property
    def n(self) -> int:
        return len(self.colors)

    @classmethod
    def parse(cls, text: str) -> CycleColoring:
        return cls(parse_colors(text))

    @classmethod
    def from_reds(cls, n: int, reds: Iterable[int]) -> CycleColoring:
        colors = [False] * n
        for r in reds:
            colors[r % n] = True
        return cls(tuple(colors))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> CycleColoring:
        """Bit ``i`` of ``mask`` is the color of vertex ``i``."""
        return cls(tuple(bool((mask >> i) & 1) for i in range(n)))

    @property
    def mask(self) -> int:
        return sum(1 << i for i, c in enumerate(self.colors) if c)

    @property
    def reds(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.colors) if c)

    def __getitem__(self, i: int) -> bool:
        return self.colors[i % self.n]

    def __str__(self) -> str:
        return format_colors(self.colors)


def _check_index(n: int, x: int) -> None:
    if not 0 <= x < n:
        raise DomainError(f"vertex index {x} out of range for n={n}")


def cycle_dist(n: int, x: int, y: int) -> int:
    if n < 3:
        raise DomainError(f"a cycle needs at least 3 vertices, got {n}")
    _check_index(n, x)
    _check_index(n, y)
    return min((x - y) % n, (y - x) % n)


def code_of(col: CycleColoring, v: int) -> Code:
    """Red counts at distances ``1..n//2`` from ``v``.

    For even ``n`` the last entry counts the single antipodal vertex.
    """
    n = col.n
    _check_index(n, v)
    c = col.colors
    out = []
    for d in range(1, n // 2 + 1):
        if 2 * d == n:
            out.append(int(c[(v + d) % n]))
        else:
            out.append(int(c[(v + d) % n]) + int(c[(v - d) % n]))
    return tuple(out)


def all_codes(col: CycleColoring) -> list[Code]:
    n = col.n
    bits = [int(c) for c in col.colors]
    half = n // 2
    rows: list[list[int]] = [[] for _ in range(n)]
    for d in range(1, half + 1):
        antipodal = 2 * d == n
        for v in range(n):
            x = bits[(v + d) % n]
            rows[v].append(x if antipodal else x + bits[(v - d) % n])
    return [tuple(r) for r in rows]


@dataclass(frozen=True)
class PairContext:
    """Central vertex and arcs determined by two distinct vertices of an odd cycle.

    ``arc_i`` holds ``b`` and ``arc_i_prime`` holds ``a``; both are listed in
    increasing cyclic order and together with ``j`` cover every vertex.
    """

    n: int
    a: int
    b: int
    j: int
    semi_central: tuple[int, int]
    anti_central: tuple[int, int]
    arc_i: tuple[int, ...]
    arc_i_prime: tuple[int, ...]

    def in_arc_i(self, x: int) -> bool:
        return x % self.n in self.arc_i

    def in_arc_i_prime(self, x: int) -> bool:
        return x % self.n in self.arc_i_prime


def partner(ctx: PairContext, ell: int) -> int:
    """Mirror image of ``ell`` under the reflection exchanging ``a`` and ``b``."""
    return (ctx.a + ctx.b - ell) % ctx.n


def central_vertex_of(n: int, a: int, b: int) -> PairContext:
    if n < 3 or n % 2 == 0:
        raise UnsupportedError(f"no unique equidistant vertex on an even cycle (n={n})")
    _check_index(n, a)
    _check_index(n, b)
    if a == b:
        raise DomainError("the two vertices must be distinct")
    j = (a + b) * pow(2, -1, n) % n
    half = n // 2
    forward = tuple((j + t) % n for t in range(1, half + 1))
    backward = tuple((j + half + t) % n for t in range(1, half + 1))
    if b in forward:
        arc_i, arc_i_prime = forward, backward
    else:
        arc_i, arc_i_prime = backward, forward
    return PairContext(
        n=n,
        a=a,
        b=b,
        j=j,
        semi_central=((j - 1) % n, (j + 1) % n),
        anti_central=((j + half) % n, (j + half + 1) % n),
        arc_i=arc_i,
        arc_i_prime=arc_i_prime,
    )


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def iter_colorings(n: int) -> Iterator[CycleColoring]:
    """All ``2**n`` colorings of ``C_n`` in mask order."""
    for mask in range(1 << n):
        yield CycleColoring.from_mask(n, mask)
