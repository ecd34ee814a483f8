"""Red-white colorings of paths and the red-leaf restriction criterion."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Code, DomainError, format_colors, parse_colors


@dataclass(frozen=True)
class PathColoring:
    """Coloring of the path ``0 - 1 - ... - (n-1)``.

    A single vertex is allowed so that a one-red restriction is representable.
    """

    colors: tuple[bool, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(bool(c) for c in self.colors))
        if not self.colors:
            raise DomainError("a path needs at least one vertex")

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def reds(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.colors) if c)

    @classmethod
    def parse(cls, text: str) -> PathColoring:
        return cls(parse_colors(text))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> PathColoring:
        return cls(tuple(bool((mask >> i) & 1) for i in range(n)))

    def __str__(self) -> str:
        return format_colors(self.colors)


def path_code(col: PathColoring, v: int) -> Code:
    n = col.n
    if not 0 <= v < n:
        raise DomainError(f"vertex index {v} out of range for n={n}")
    c = col.colors
    return tuple(
        (v - i >= 0 and c[v - i]) + (v + i < n and c[v + i]) for i in range(1, n)
    )


def is_path_id(col: PathColoring) -> bool:
    """Brute force: all vertex codes pairwise distinct."""
    codes = [path_code(col, v) for v in range(col.n)]
    return len(set(codes)) == len(codes)


def is_symmetric_path(col: PathColoring) -> bool:
    return col.colors == col.colors[::-1]


def red_leaf_subpath(col: PathColoring) -> PathColoring:
    """Slice from the first red vertex to the last red vertex, inclusive."""
    reds = col.reds
    if not reds:
        raise DomainError("coloring has no red vertex")
    return PathColoring(col.colors[reds[0]: reds[-1] + 1])


def path_id_by_criterion(col: PathColoring) -> bool:
    """ID verdict read off the symmetry of the red-leaf restriction.

    Needs at least two red vertices.
    """
    if len(col.reds) < 2:
        raise DomainError("criterion needs at least 2 red vertices")
    return not is_symmetric_path(red_leaf_subpath(col))
