from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from cycleid.core import (
    CycleColoring,
    DomainError,
    UnsupportedError,
    all_codes,
    central_vertex_of,
    code_of,
    cycle_dist,
    iter_colorings,
    parse_colors,
    partner,
)

C21_REDS = [0, 3, 4, 7, 10, 11, 14, 17, 18]


def walk_dist(n, x, y):
    """Steps needed walking one vertex at a time in either direction."""
    fwd = 0
    v = x
    while v != y:
        v = (v + 1) % n
        fwd += 1
    return min(fwd, n - fwd) if fwd else 0


def brute_code(col, v):
    n = col.n
    return tuple(
        sum(col.colors[w] for w in range(n) if walk_dist(n, v, w) == i)
        for i in range(1, n // 2 + 1)
    )


def brute_central(n, a, b):
    hits = [x for x in range(n) if walk_dist(n, a, x) == walk_dist(n, b, x)]
    assert len(hits) == 1
    return hits[0]


# -- distances ---------------------------------------------------------------

@pytest.mark.parametrize("n,x,y,expected", [(7, 0, 4, 3), (9, 2, 2, 0), (21, 0, 11, 10)])
def test_cycle_dist_examples(n, x, y, expected):
    assert cycle_dist(n, x, y) == expected
    assert walk_dist(n, x, y) == expected


def test_cycle_dist_matches_walk():
    for n in (3, 4, 7, 10, 13):
        for x in range(n):
            for y in range(n):
                d = cycle_dist(n, x, y)
                assert d == walk_dist(n, x, y) == cycle_dist(n, y, x)
                assert d <= n // 2


@pytest.mark.parametrize("x,y", [(-1, 0), (0, 7), (7, 7)])
def test_cycle_dist_rejects_out_of_range(x, y):
    with pytest.raises(DomainError):
        cycle_dist(7, x, y)


# -- codes ---------------------------------------------------------------------

def test_code_of_c21_printed_values():
    col = CycleColoring.from_reds(21, C21_REDS)
    assert code_of(col, 0) == (0, 0, 2, 2, 0, 0, 2, 0, 0, 2)
    assert code_of(col, 3) == (1, 0, 1, 1, 0, 1, 2, 1, 0, 1)


def test_all_red_c5():
    col = CycleColoring.parse("RRRRR")
    assert all(code_of(col, v) == (2, 2) for v in range(5))


def test_all_codes_matches_brute_force():
    for n in (3, 4, 5, 6, 7, 8):
        for col in iter_colorings(n):
            codes = all_codes(col)
            assert codes == [brute_code(col, v) for v in range(n)]
            assert codes == [code_of(col, v) for v in range(n)]


def test_c21_has_four_distinct_codes():
    assert len(set(all_codes(CycleColoring.from_reds(21, C21_REDS)))) == 4


def test_all_white_codes_identical():
    codes = all_codes(CycleColoring.parse("WWWWWWW"))
    assert codes == [(0, 0, 0)] * 7


def test_even_cycle_antipodal_entry_at_most_one():
    col = CycleColoring.parse("RRRRRR")
    assert code_of(col, 0) == (2, 2, 1)


def test_code_sums_count_other_reds_on_c7():
    for col in iter_colorings(7):
        total = sum(col.colors)
        for v in range(7):
            assert sum(code_of(col, v)) == total - col.colors[v]


# -- coloring text format ----------------------------------------------------

def test_parse_aliases_and_case():
    assert parse_colors("rW10") == (True, False, True, False)
    assert str(CycleColoring.parse("rwr")) == "RWR"


def test_parse_error_names_position():
    with pytest.raises(DomainError, match="position 3"):
        CycleColoring.parse("RWRxW")


def test_cycle_needs_three_vertices():
    with pytest.raises(DomainError):
        CycleColoring.parse("RW")


def test_mask_round_trip():
    col = CycleColoring.from_mask(9, 0b101100101)
    assert CycleColoring.from_mask(9, col.mask) == col
    assert col.reds == (0, 2, 5, 6, 8)


# -- central vertex and partners ---------------------------------------------

def central_by_parity_1based(n, k):
    return (k + 1) // 2 if k % 2 else (n + k + 1) // 2


def test_central_vertex_examples():
    ctx = central_vertex_of(11, 0, 3)
    assert ctx.j == 7
    assert ctx.semi_central == (6, 8)
    assert ctx.anti_central == (1, 2)
    assert set(ctx.arc_i) == {2, 3, 4, 5, 6}
    assert set(ctx.arc_i_prime) == {8, 9, 10, 0, 1}

    ctx = central_vertex_of(11, 0, 4)
    assert ctx.j == 2
    assert ctx.semi_central == (1, 3)
    assert ctx.anti_central == (7, 8)
    assert set(ctx.arc_i) == {3, 4, 5, 6, 7}

    ctx = central_vertex_of(7, 0, 3)
    assert ctx.j == 5
    assert set(ctx.arc_i) == {2, 3, 4}
    assert set(ctx.arc_i_prime) == {6, 0, 1}


def test_central_vertex_matches_brute_force_and_case_split():
    for n in range(3, 26, 2):
        for a in range(n):
            for b in range(n):
                if a == b:
                    continue
                ctx = central_vertex_of(n, a, b)
                assert ctx.j == brute_central(n, a, b)
                assert cycle_dist(n, a, ctx.j) == cycle_dist(n, b, ctx.j)
                assert ctx.b in ctx.arc_i and ctx.a in ctx.arc_i_prime
                assert len(ctx.arc_i) == len(ctx.arc_i_prime) == (n - 1) // 2
                assert set(ctx.arc_i) | set(ctx.arc_i_prime) | {ctx.j} == set(range(n))
                assert cycle_dist(n, *ctx.anti_central) == 1
                assert cycle_dist(n, *ctx.semi_central) == 2 or n == 3
        for k in range(2, (n + 1) // 2 + 1):
            assert central_vertex_of(n, 0, k - 1).j == central_by_parity_1based(n, k) - 1


def test_central_vertex_rejects_even_and_equal():
    with pytest.raises(UnsupportedError):
        central_vertex_of(8, 0, 3)
    with pytest.raises(DomainError):
        central_vertex_of(7, 2, 2)


def test_partner_examples():
    ctx = central_vertex_of(7, 0, 3)
    assert partner(ctx, 4) == 6
    assert partner(ctx, ctx.j) == ctx.j
    ctx21 = central_vertex_of(21, 3, 4)
    assert ctx21.j == 14
    assert partner(ctx21, 3) == 4


def test_partner_matches_one_based_formula():
    # 1-based pair (1, k): partner of l is n + k + 1 - l
    for n in (7, 11, 13):
        for k in range(2, (n + 1) // 2 + 1):
            ctx = central_vertex_of(n, 0, k - 1)
            for ell in range(1, n + 1):
                expected = (n + k + 1 - ell - 1) % n
                assert partner(ctx, ell - 1) == expected


odd_n = st.integers(min_value=1, max_value=49).map(lambda t: 2 * t + 1)


@st.composite
def contexts(draw):
    n = draw(odd_n)
    a = draw(st.integers(0, n - 1))
    b = draw(st.integers(0, n - 1).filter(lambda x: x != a))
    return central_vertex_of(n, a, b)


@given(contexts(), st.data())
def test_partner_preserves_distance(ctx, data):
    n = ctx.n
    x = data.draw(st.integers(0, n - 1))
    y = data.draw(st.integers(0, n - 1))
    assert cycle_dist(n, x, y) == cycle_dist(n, partner(ctx, x), partner(ctx, y))


@given(contexts(), st.data())
def test_partner_is_involution_fixing_center(ctx, data):
    ell = data.draw(st.integers(0, ctx.n - 1))
    assert partner(ctx, partner(ctx, ell)) == ell
    assert cycle_dist(ctx.n, ell, ctx.j) == cycle_dist(ctx.n, partner(ctx, ell), ctx.j)
    assert partner(ctx, ctx.j) == ctx.j


@given(contexts(), st.data())
def test_partner_shift_rule(ctx, data):
    n = ctx.n
    ell = data.draw(st.integers(0, n - 1))
    t = data.draw(st.integers(-3 * n, 3 * n))
    assert partner(ctx, (ell + t) % n) == (partner(ctx, ell) - t) % n


@given(contexts())
def test_partner_swaps_arcs(ctx):
    for ell in range(ctx.n):
        if ell != ctx.j:
            assert ctx.in_arc_i(ell) == ctx.in_arc_i_prime(partner(ctx, ell))
