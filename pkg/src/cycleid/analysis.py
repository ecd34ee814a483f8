"""ID-coloring verdicts and reflection symmetry of cycle colorings."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Code, CycleColoring, UnsupportedError, all_codes, code_of

Pair = tuple[int, int]


@dataclass(frozen=True)
class IdVerdict:
    is_id: bool
    witness: Pair | None = None


@dataclass(frozen=True)
class SymmetryReport:
    """Reflections of the cycle that preserve a coloring.

    For odd ``n`` every reflection fixes one vertex, listed in
    ``central_vertices``.  For even ``n``, ``edge_axes`` holds offsets ``r`` of
    the vertex-free reflections ``x -> 2r + 1 - x`` (the notion of symmetry
    used for even cycles) and ``vertex_axes`` the reflections ``x -> 2u - x``
    through two antipodal vertices, reported for inspection only.  Offsets of
    even-cycle axes are taken in ``range(n // 2)``.
    """

    n: int
    central_vertices: tuple[int, ...] = ()
    edge_axes: tuple[int, ...] = ()
    vertex_axes: tuple[int, ...] = ()
    partner_pairs: dict[int, tuple[Pair, ...]] = field(default_factory=dict)

    @property
    def is_symmetric(self) -> bool:
        if self.n % 2:
            return bool(self.central_vertices)
        return bool(self.edge_axes)


def is_symmetric_about(col: CycleColoring, u: int) -> bool:
    n = col.n
    if n % 2 == 0:
        raise UnsupportedError("vertex symmetry is defined for odd cycles; use edge axes")
    c = col.colors
    return all(c[(u + d) % n] == c[(u - d) % n] for d in range(1, n // 2 + 1))


def _vertex_axis_pairs(n: int, u: int) -> tuple[Pair, ...]:
    return tuple(((u - d) % n, (u + d) % n) for d in range(1, (n - 1) // 2 + 1))


def _edge_axis_pairs(n: int, r: int) -> tuple[Pair, ...]:
    return tuple(((r - m) % n, (r + 1 + m) % n) for m in range(n // 2))


def symmetry_report(col: CycleColoring) -> SymmetryReport:
    n, c = col.n, col.colors
    if n % 2:
        centrals = tuple(u for u in range(n) if is_symmetric_about(col, u))
        return SymmetryReport(
            n=n,
            central_vertices=centrals,
            partner_pairs={u: _vertex_axis_pairs(n, u) for u in centrals},
        )
    edge_axes = tuple(
        r for r in range(n // 2) if all(c[x] == c[y] for x, y in _edge_axis_pairs(n, r))
    )
    vertex_axes = tuple(
        u for u in range(n // 2)
        if all(c[(u + d) % n] == c[(u - d) % n] for d in range(1, n // 2))
    )
    return SymmetryReport(
        n=n,
        edge_axes=edge_axes,
        vertex_axes=vertex_axes,
        partner_pairs={r: _edge_axis_pairs(n, r) for r in edge_axes},
    )


def first_duplicate(codes: list[Code]) -> Pair | None:
    """Lexicographically smallest ``(x, y)``, ``x < y``, with equal codes."""
    first_seen: dict[Code, int] = {}
    best: Pair | None = None
    for y, code in enumerate(codes):
        x = first_seen.setdefault(code, y)
        if x != y and (best is None or x < best[0]):
            best = (x, y)
    return best


def is_id_coloring(col: CycleColoring) -> IdVerdict:
    witness = first_duplicate(all_codes(col))
    return IdVerdict(is_id=witness is None, witness=witness)


def duplicate_pairs(col: CycleColoring) -> list[Pair]:
    """All ``(x, y)`` with ``x < y`` and equal codes, in lexicographic order."""
    groups: dict[Code, list[int]] = {}
    for v, code in enumerate(all_codes(col)):
        groups.setdefault(code, []).append(v)
    pairs = [
        (x, y)
        for members in groups.values()
        for i, x in enumerate(members)
        for y in members[i + 1:]
    ]
    return sorted(pairs)


def central_by_code(col: CycleColoring, u: int) -> bool:
    """True when the code of ``u`` has no entry equal to 1.

    On an odd cycle whose coloring is symmetric about some vertex this
    coincides with ``is_symmetric_about(col, u)``.
    """
    return 1 not in code_of(col, u)
