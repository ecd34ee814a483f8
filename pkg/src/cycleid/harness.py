"""Exhaustive verification of the cycle and path theorems at desk scale.

Colorings of ``C_n`` / ``P_n`` are enumerated as integer masks (bit ``i`` is
vertex ``i``) in chunks of consecutive masks.  Each chunk is evaluated by a
pure function returning ``(checked, failures, stats)`` and the partial results
are merged by summation and concatenation, so the report does not depend on
how the range was split or on the number of worker processes.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .analysis import is_id_coloring, symmetry_report
from .constructions import (
    factorization,
    multi_central_coloring,
    sa_coloring,
    single_red_coloring,
)
from .core import CycleColoring, DomainError, code_of, format_colors, is_prime

MAX_CYCLE_N = 19
MAX_RED_COUNT_N = 20
MAX_PATH_N = 16
DEFAULT_CHUNK = 1 << 15


@dataclass
class VerificationReport:
    theorem: str
    n: int
    checked: int
    failures: list[str] = field(default_factory=list)
    elapsed_ms: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "checked": self.checked,
            "failures": list(self.failures),
            "elapsedMs": round(self.elapsed_ms, 3),
            "passed": self.passed,
            "details": self.details,
        }


# ---------------------------------------------------------------------------
# vectorized primitives

def mask_bits(masks: np.ndarray, n: int) -> np.ndarray:
    """``(N,)`` integer masks to an ``(N, n)`` 0/1 array."""
    masks = np.asarray(masks, dtype=np.int64)
    return ((masks[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(np.int8)


def _encode(codes: np.ndarray) -> np.ndarray:
    """Collapse the last axis (entries 0..2) into one base-3 integer."""
    weights = 3 ** np.arange(codes.shape[-1], dtype=np.int64)
    return codes.astype(np.int64) @ weights


def cycle_codes(bits: np.ndarray) -> np.ndarray:
    """``(N, n, n//2)`` code array for a batch of cycle colorings."""
    n = bits.shape[1]
    half = n // 2
    out = np.empty((bits.shape[0], n, half), dtype=np.int8)
    for d in range(1, half + 1):
        ahead = np.roll(bits, -d, axis=1)
        out[:, :, d - 1] = ahead if 2 * d == n else ahead + np.roll(bits, d, axis=1)
    return out


def path_codes(bits: np.ndarray) -> np.ndarray:
    """``(N, n, n-1)`` code array for a batch of path colorings."""
    count, n = bits.shape
    padded = np.zeros((count, 3 * n), dtype=np.int8)
    padded[:, n: 2 * n] = bits
    out = np.empty((count, n, max(n - 1, 0)), dtype=np.int8)
    for i in range(1, n):
        out[:, :, i - 1] = padded[:, n - i: 2 * n - i] + padded[:, n + i: 2 * n + i]
    return out


def all_distinct(keys: np.ndarray) -> np.ndarray:
    """Per row of ``keys``, whether its entries are pairwise distinct."""
    s = np.sort(keys, axis=1)
    return ~np.any(s[:, 1:] == s[:, :-1], axis=1)


def batch_is_id(bits: np.ndarray) -> np.ndarray:
    return all_distinct(_encode(cycle_codes(bits)))


def batch_centrals(bits: np.ndarray) -> np.ndarray:
    """``(N, n)`` flags: coloring is symmetric about vertex ``u`` (odd ``n``)."""
    n = bits.shape[1]
    ok = np.ones(bits.shape, dtype=bool)
    for d in range(1, n // 2 + 1):
        ok &= np.roll(bits, -d, axis=1) == np.roll(bits, d, axis=1)
    return ok


def batch_edge_symmetric(bits: np.ndarray) -> np.ndarray:
    """Even ``n``: invariant under some vertex-free reflection ``x -> 2r+1-x``."""
    n = bits.shape[1]
    idx = np.arange(n)
    hit = np.zeros(bits.shape[0], dtype=bool)
    for r in range(n // 2):
        hit |= np.all(bits == bits[:, (2 * r + 1 - idx) % n], axis=1)
    return hit


def dihedral_canonical(masks: np.ndarray, n: int) -> np.ndarray:
    """Least mask over all rotations and reflections of each coloring."""
    bits = mask_bits(masks, n).astype(np.int64)
    weights = np.int64(1) << np.arange(n, dtype=np.int64)
    best = np.asarray(masks, dtype=np.int64).copy()
    for variant in (bits, bits[:, ::-1]):
        for r in range(n):
            best = np.minimum(best, np.roll(variant, r, axis=1) @ weights)
    return best


# ---------------------------------------------------------------------------
# chunked enumeration

Partial = tuple[int, list[int], Counter]


def _chunk_masks(n: int, lo: int, hi: int, prune: bool) -> np.ndarray:
    masks = np.arange(lo, hi, dtype=np.int64)
    if prune:
        masks = masks[dihedral_canonical(masks, n) == masks]
    return masks


def _prime_equivalence_chunk(n: int, lo: int, hi: int, prune: bool) -> Partial:
    masks = _chunk_masks(n, lo, hi, prune)
    bits = mask_bits(masks, n)
    ident = batch_is_id(bits)
    no_center = ~batch_centrals(bits).any(axis=1)
    bad = masks[ident != no_center]
    return len(masks), bad.tolist(), Counter(id=int(ident.sum()))


def _unique_central_chunk(n: int, lo: int, hi: int, prune: bool) -> Partial:
    masks = _chunk_masks(n, lo, hi, prune)
    masks = masks[(masks != 0) & (masks != (1 << n) - 1)]
    counts = batch_centrals(mask_bits(masks, n)).sum(axis=1)
    sym = counts > 0
    bad = masks[sym & (counts != 1)]
    return len(masks), bad.tolist(), Counter(symmetric=int(sym.sum()))


def _distinct_partner_codes_chunk(n: int, lo: int, hi: int, prune: bool) -> Partial:
    masks = _chunk_masks(n, lo, hi, prune)
    masks = masks[(masks != 0) & (masks != (1 << n) - 1)]
    bits = mask_bits(masks, n)
    sym = batch_centrals(bits).any(axis=1)
    masks, bits = masks[sym], bits[sym]
    keys = np.sort(_encode(cycle_codes(bits)), axis=1)
    distinct = 1 + (keys[:, 1:] != keys[:, :-1]).sum(axis=1)
    # central vertex plus (n-1)/2 mirror pairs, each class with its own code
    bad = masks[distinct != (n + 1) // 2]
    return len(masks), bad.tolist(), Counter()


def _red_count_chunk(n: int, lo: int, hi: int, prune: bool) -> Partial:
    masks = _chunk_masks(n, lo, hi, prune)
    bits = mask_bits(masks, n)
    ident = batch_is_id(bits)
    reds = bits.sum(axis=1)[ident]
    return len(masks), [], Counter({int(r): int(c) for r, c in zip(*np.unique(reds, return_counts=True))})


def _is_bit_palindrome(m: int) -> bool:
    s = bin(m)[2:]
    return s == s[::-1]


def _path_criterion_chunk(n: int, lo: int, hi: int, prune: bool) -> Partial:
    masks = np.arange(lo, hi, dtype=np.int64)
    masks = masks[np.array([bin(int(m)).count("1") >= 2 for m in masks], dtype=bool)]
    brute = all_distinct(_encode(path_codes(mask_bits(masks, n))))
    bad = []
    for m, ok in zip(masks.tolist(), brute.tolist()):
        core = m >> ((m & -m).bit_length() - 1)
        if _is_bit_palindrome(core) == ok:
            bad.append(m)
    return len(masks), bad, Counter(id=int(brute.sum()))


def _path_red_ends_chunk(n: int, lo: int, hi: int, prune: bool) -> Partial:
    masks = np.arange(lo, hi, dtype=np.int64)
    ends = 1 | (1 << (n - 1))
    masks = masks[(masks & ends) == ends]
    brute = all_distinct(_encode(path_codes(mask_bits(masks, n))))
    bad = [
        m for m, ok in zip(masks.tolist(), brute.tolist())
        if _is_bit_palindrome(m) == ok
    ]
    return len(masks), bad, Counter(id=int(brute.sum()))


def _run(
    fn: Callable[[int, int, int, bool], Partial],
    n: int,
    total: int,
    *,
    workers: int = 1,
    prune: bool = False,
    chunk: int = DEFAULT_CHUNK,
) -> Partial:
    bounds = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    args = [(n, lo, hi, prune) for lo, hi in bounds]
    if workers > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(fn, *zip(*args)))
    else:
        parts = [fn(*a) for a in args]
    checked, failures, stats = 0, [], Counter()
    for c, f, s in parts:
        checked += c
        failures.extend(f)
        stats.update(s)
    return checked, failures, stats


def _cycle_strings(n: int, masks: list[int]) -> list[str]:
    return [str(CycleColoring.from_mask(n, m)) for m in masks]


def _require_prime_scan(n: int) -> None:
    if not is_prime(n):
        raise DomainError(f"n must be prime, got {n}")
    if not 3 <= n <= MAX_CYCLE_N:
        raise DomainError(f"n must lie in [3, {MAX_CYCLE_N}], got {n}")


# ---------------------------------------------------------------------------
# theorem checks

def verify_prime_equivalence(
    n: int, *, workers: int = 1, prune_orbits: bool = False, chunk: int = DEFAULT_CHUNK
) -> VerificationReport:
    """Prime ``n``: a coloring is ID exactly when it has no central vertex."""
    _require_prime_scan(n)
    t0 = time.perf_counter()
    checked, bad, stats = _run(
        _prime_equivalence_chunk, n, 1 << n, workers=workers, prune=prune_orbits, chunk=chunk
    )
    return VerificationReport(
        "T2.1", n, checked, _cycle_strings(n, bad),
        (time.perf_counter() - t0) * 1e3,
        {"id_colorings": stats["id"], "orbit_pruned": prune_orbits},
    )


def verify_unique_central(
    n: int, *, workers: int = 1, prune_orbits: bool = False, chunk: int = DEFAULT_CHUNK
) -> VerificationReport:
    """Prime ``n``: a non-constant symmetric coloring has one central vertex."""
    _require_prime_scan(n)
    t0 = time.perf_counter()
    checked, bad, stats = _run(
        _unique_central_chunk, n, 1 << n, workers=workers, prune=prune_orbits, chunk=chunk
    )
    return VerificationReport(
        "T4.3", n, checked, _cycle_strings(n, bad),
        (time.perf_counter() - t0) * 1e3,
        {"symmetric_colorings": stats["symmetric"], "orbit_pruned": prune_orbits},
    )


def verify_distinct_partner_codes(
    n: int, *, workers: int = 1, prune_orbits: bool = False, chunk: int = DEFAULT_CHUNK
) -> VerificationReport:
    """Prime ``n``: distinct mirror pairs of a symmetric coloring have distinct codes."""
    _require_prime_scan(n)
    t0 = time.perf_counter()
    checked, bad, _ = _run(
        _distinct_partner_codes_chunk, n, 1 << n, workers=workers, prune=prune_orbits, chunk=chunk
    )
    return VerificationReport(
        "T4.4", n, checked, _cycle_strings(n, bad),
        (time.perf_counter() - t0) * 1e3, {"orbit_pruned": prune_orbits},
    )


def verify_red_count_range(
    n: int, *, workers: int = 1, prune_orbits: bool = False, chunk: int = DEFAULT_CHUNK
) -> VerificationReport:
    """``n >= 6``: an ID-coloring with ``r`` reds exists iff ``3 <= r <= n - 3``."""
    if not 6 <= n <= MAX_RED_COUNT_N:
        raise DomainError(f"n must lie in [6, {MAX_RED_COUNT_N}], got {n}")
    t0 = time.perf_counter()
    checked, _, stats = _run(
        _red_count_chunk, n, 1 << n, workers=workers, prune=prune_orbits, chunk=chunk
    )
    present = sorted(r for r, c in stats.items() if c)
    failures = [
        f"r={r}: exists={r in stats}, expected={3 <= r <= n - 3}"
        for r in range(n + 1)
        if (r in stats) != (3 <= r <= n - 3)
    ]
    return VerificationReport(
        "T1.3", n, checked, failures, (time.perf_counter() - t0) * 1e3,
        {
            "red_counts": present,
            "min_reds": present[0] if present else None,
            "id_colorings_by_reds": {str(r): stats[r] for r in present},
            "orbit_pruned": prune_orbits,
        },
    )


def verify_path_criterion(
    n: int, *, workers: int = 1, chunk: int = DEFAULT_CHUNK
) -> VerificationReport:
    """``P_n``, >= 2 reds: ID iff the red-leaf restriction is not a palindrome."""
    if not 2 <= n <= MAX_PATH_N:
        raise DomainError(f"n must lie in [2, {MAX_PATH_N}], got {n}")
    t0 = time.perf_counter()
    checked, bad, stats = _run(_path_criterion_chunk, n, 1 << n, workers=workers, chunk=chunk)
    return VerificationReport(
        "T1.2", n, checked,
        [format_colors(bool((m >> i) & 1) for i in range(n)) for m in bad],
        (time.perf_counter() - t0) * 1e3, {"id_colorings": stats["id"]},
    )


def verify_path_red_ends(
    n: int, *, workers: int = 1, chunk: int = DEFAULT_CHUNK
) -> VerificationReport:
    """``P_n`` with both ends red: ID iff not a palindrome."""
    if not 2 <= n <= MAX_PATH_N:
        raise DomainError(f"n must lie in [2, {MAX_PATH_N}], got {n}")
    t0 = time.perf_counter()
    checked, bad, stats = _run(_path_red_ends_chunk, n, 1 << n, workers=workers, chunk=chunk)
    return VerificationReport(
        "T1.1", n, checked,
        [format_colors(bool((m >> i) & 1) for i in range(n)) for m in bad],
        (time.perf_counter() - t0) * 1e3, {"id_colorings": stats["id"]},
    )


def _require_odd_composite(n: int, lo: int = 9, hi: int = 45) -> None:
    if n % 2 == 0 or is_prime(n) or not lo <= n <= hi:
        raise DomainError(f"n must be an odd composite in [{lo}, {hi}], got {n}")


def verify_composite_counterexamples(n: int) -> VerificationReport:
    """Odd composite ``n``: the SA-coloring is neither ID nor symmetric, and the
    multiple-of-``p`` coloring has more than one central vertex."""
    _require_odd_composite(n)
    t0 = time.perf_counter()
    fac = factorization(n)
    sa = sa_coloring(n, fac.p)
    failures = []
    ones = (1,) * (n // 2)
    code0, codeq = code_of(sa, 0), code_of(sa, fac.q)
    if not (code0 == codeq == ones):
        failures.append(f"{sa}: codes of 0 and {fac.q} are {code0}, {codeq}")
    if is_id_coloring(sa).is_id:
        failures.append(f"{sa}: SA-coloring is an ID-coloring")
    sa_centrals = symmetry_report(sa).central_vertices
    if sa_centrals:
        failures.append(f"{sa}: SA-coloring is symmetric about {list(sa_centrals)}")
    mc = multi_central_coloring(n, fac.p)
    mc_centrals = symmetry_report(mc).central_vertices
    if len(mc_centrals) <= 1:
        failures.append(f"{mc}: only {len(mc_centrals)} central vertices")
    return VerificationReport(
        "T3.1", n, 2, failures, (time.perf_counter() - t0) * 1e3,
        {
            "p": fac.p,
            "q": fac.q,
            "sa_coloring": str(sa),
            "multi_central_coloring": str(mc),
            "multi_central_vertices": list(mc_centrals),
        },
    )


def verify_multi_central(n: int) -> VerificationReport:
    """Odd composite ``n``: for every divisor ``p``, reds at multiples of ``p``
    give exactly ``n / p`` central vertices."""
    _require_odd_composite(n)
    t0 = time.perf_counter()
    failures, counts = [], {}
    divisors = [p for p in range(3, n, 2) if n % p == 0]
    for p in divisors:
        col = multi_central_coloring(n, p)
        centrals = symmetry_report(col).central_vertices
        counts[str(p)] = len(centrals)
        if len(centrals) != n // p or set(centrals) != set(range(0, n, p)):
            failures.append(f"{col}: central vertices {list(centrals)}")
    return VerificationReport(
        "T4.1", n, len(divisors), failures, (time.perf_counter() - t0) * 1e3,
        {"central_counts_by_p": counts},
    )


def verify_prime_characterization(n: int, *, workers: int = 1) -> VerificationReport:
    """The ID/symmetry equivalence holds on ``C_n`` exactly when ``n`` is prime.

    Prime ``n`` is scanned exhaustively; for composite ``n`` a counterexample
    (SA-coloring for odd ``n``, single red vertex for even ``n``) is exhibited.
    """
    if n < 3:
        raise DomainError(f"n must be at least 3, got {n}")
    t0 = time.perf_counter()
    prime = is_prime(n)
    if prime:
        sub = verify_prime_equivalence(n, workers=workers)
        holds, checked, failures = sub.passed, sub.checked, list(sub.failures)
        witness = None
    else:
        col = single_red_coloring(n) if n % 2 == 0 else sa_coloring(n)
        broken = not is_id_coloring(col).is_id and not symmetry_report(col).is_symmetric
        holds, checked, witness = not broken, 1, str(col)
        failures = [] if broken else [f"{col}: expected a non-ID non-symmetric coloring"]
    return VerificationReport(
        "T3.6", n, checked, failures, (time.perf_counter() - t0) * 1e3,
        {"prime": prime, "equivalence_holds": holds, "counterexample": witness},
    )


THEOREMS: dict[str, tuple[str, Callable[..., VerificationReport]]] = {
    "path-ends": ("T1.1", verify_path_red_ends),
    "path-criterion": ("T1.2", verify_path_criterion),
    "red-count": ("T1.3", verify_red_count_range),
    "prime-equivalence": ("T2.1", verify_prime_equivalence),
    "composite": ("T3.1", verify_composite_counterexamples),
    "prime-characterization": ("T3.6", verify_prime_characterization),
    "multi-central": ("T4.1", verify_multi_central),
    "unique-central": ("T4.3", verify_unique_central),
    "distinct-partner-codes": ("T4.4", verify_distinct_partner_codes),
}
