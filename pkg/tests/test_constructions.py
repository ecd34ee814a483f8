from __future__ import annotations

import pytest

from cycleid.analysis import is_id_coloring, is_symmetric_about, symmetry_report
from cycleid.constructions import (
    factorization,
    least_factor,
    multi_central_coloring,
    sa_coloring,
    single_red_coloring,
)
from cycleid.core import DomainError, all_codes, code_of, cycle_dist

ODD_COMPOSITES = [9, 15, 21, 25, 27, 33, 35, 39, 45]

# non-splitting vertex -> equidistant pair with different colors
WITNESS_TABLES = {
    9: {1: (5, 6), 2: (1, 3), 4: (2, 6), 5: (3, 7), 7: (6, 8), 8: (0, 7)},
    15: {
        1: (3, 14), 2: (9, 10), 3: (1, 5), 4: (3, 5), 6: (4, 8), 7: (4, 10),
        8: (5, 11), 9: (7, 11), 11: (10, 12), 12: (10, 14), 13: (0, 11), 14: (0, 13),
    },
    25: {
        1: (3, 24), 2: (9, 20), 3: (1, 5), 4: (3, 5), 6: (3, 9), 7: (4, 10),
        8: (5, 11), 9: (7, 11), 11: (10, 12), 12: (10, 14), 13: (11, 15),
        14: (13, 15), 16: (14, 18), 17: (14, 20), 18: (15, 21), 19: (17, 21),
        21: (20, 22), 22: (20, 24), 23: (0, 21), 24: (0, 23),
    },
}


def sa_by_rule(n, p):
    """Independent transcription of the splitting-alternating rule."""
    q = n // p
    out = []
    for a in range(n):
        if a % q == 0:
            ell = a // q if a else p
            out.append("R" if ell % 2 == 0 else "W")
        else:
            out.append("R" if (a % q) % 2 else "W")
    return "".join(out)


def test_factorization():
    assert least_factor(45) == 3
    assert least_factor(25) == 5
    assert least_factor(13) == 13
    f = factorization(35)
    assert (f.p, f.q) == (5, 7)
    for bad in (8, 7, 13):
        with pytest.raises(DomainError):
            factorization(bad)


def test_sa_examples():
    assert str(sa_coloring(9)) == "WRWWRWRRW"
    assert str(sa_coloring(15)) == "WRWRWWRWRWRRWRW"


@pytest.mark.parametrize("n", ODD_COMPOSITES)
def test_sa_matches_rule(n):
    p = factorization(n).p
    assert str(sa_coloring(n)) == sa_by_rule(n, p)


@pytest.mark.parametrize("n", ODD_COMPOSITES)
def test_sa_is_counterexample(n):
    col = sa_coloring(n)
    q = factorization(n).q
    ones = (1,) * (n // 2)
    assert code_of(col, 0) == code_of(col, q) == ones
    v = is_id_coloring(col)
    assert not v.is_id
    assert code_of(col, v.witness[0]) == code_of(col, v.witness[1])
    assert symmetry_report(col).central_vertices == ()


def test_sa_c9_witness():
    col = sa_coloring(9)
    assert code_of(col, 0) == code_of(col, 3) == (1, 1, 1, 1)


@pytest.mark.parametrize("n", sorted(WITNESS_TABLES))
def test_witness_tables(n):
    col = sa_coloring(n)
    p = factorization(n).p
    splitting = {ell * (n // p) % n for ell in range(1, p + 1)}
    table = WITNESS_TABLES[n]
    assert set(table) == set(range(n)) - splitting
    for u, (x, y) in table.items():
        assert cycle_dist(n, u, x) == cycle_dist(n, u, y)
        assert col[x] != col[y]
        assert not is_symmetric_about(col, u)
    for u in splitting:
        assert not is_symmetric_about(col, u)


def test_sa_with_non_minimal_divisor():
    col = sa_coloring(45, 5)
    assert str(col) == sa_by_rule(45, 5)
    assert not is_id_coloring(col).is_id


def test_sa_every_divisor_observed_non_id_non_symmetric():
    # computed observation for n <= 45, not a general claim
    for n in ODD_COMPOSITES:
        for p in range(3, n // 3 + 1, 2):
            if n % p == 0:
                col = sa_coloring(n, p)
                assert not is_id_coloring(col).is_id, (n, p)
                assert symmetry_report(col).central_vertices == (), (n, p)


def test_sa_domain_errors():
    with pytest.raises(DomainError):
        sa_coloring(15, 4)
    with pytest.raises(DomainError):
        sa_coloring(15, 15)


@pytest.mark.parametrize("n", ODD_COMPOSITES)
def test_multi_central(n):
    for p in range(2, n):
        if n % p:
            continue
        col = multi_central_coloring(n, p)
        centrals = symmetry_report(col).central_vertices
        assert centrals == tuple(range(0, n, p))
        codes = all_codes(col)
        for u in centrals:
            assert set(codes[u]) <= {0, 2}
            assert [i + 1 for i, x in enumerate(codes[u]) if x == 2] == list(
                range(p, n // 2 + 1, p)
            )
        assert not is_id_coloring(col).is_id


def test_multi_central_default_divisor():
    assert multi_central_coloring(21).reds == (0, 3, 6, 9, 12, 15, 18)


@pytest.mark.parametrize("n", [4, 6, 10])
def test_single_red(n):
    col = single_red_coloring(n)
    assert col.reds == (0,)
    assert not is_id_coloring(col).is_id
    assert symmetry_report(col).edge_axes == ()
    assert symmetry_report(col).vertex_axes == (0,)


def test_single_red_c10_witness():
    col = single_red_coloring(10)
    assert is_id_coloring(col).witness == (1, 9)
    assert code_of(col, 1) == code_of(col, 9)
    with pytest.raises(DomainError):
        single_red_coloring(3)
