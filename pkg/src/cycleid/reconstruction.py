"""Step-by-step recovery of the mirror symmetry behind a duplicate code.

Given two vertices of a prime cycle with equal codes, the procedure grows a
list of same-colored mirror pairs one distance class at a time until the
reflection axis is reached.  Every intermediate claim is checked against the
actual coloring and recorded, so a finished trace is a certificate that the
coloring is symmetric about the returned central vertex.

Internally the cycle is relabeled so that the first vertex of the pair is
``1`` and the second is ``k`` with ``2 <= k <= (n + 1) / 2``; labels are
residues mod ``n`` (``0`` stands for ``n``).  The relabeling is a rotation,
composed with a reflection when ``b`` lies more than ``n // 2`` steps forward
of ``a``.  All indices stored in the trace are original 0-based indices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .analysis import is_symmetric_about
from .core import (
    CycleColoring,
    DomainError,
    PairContext,
    UnsupportedError,
    central_vertex_of,
    code_of,
    cycle_dist,
    is_prime,
    partner,
)

Pair = tuple[int, int]

TRACE_SCHEMA_VERSION = 1


class ReconstructionError(RuntimeError):
    """A step check failed; carries the partial trace.

    Unreachable for valid input on a prime cycle, so seeing it means a bug.
    """

    def __init__(self, message: str, trace: ReconstructionTrace):
        super().__init__(message)
        self.trace = trace


@dataclass
class StepRecord:
    s: int
    d: int | None = None
    k_s: int | None = None
    k_s_prime: int | None = None
    D: int | None = None
    new_pair: Pair | None = None
    case: str | None = None
    facts: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.facts.values())


@dataclass
class ReconstructionTrace:
    ctx: PairContext
    k: int
    orientation: int
    steps: list[StepRecord] = field(default_factory=list)
    pairs: list[Pair] = field(default_factory=list)
    terminated_at: int | None = None
    success: bool = False

    @property
    def central(self) -> int:
        return self.ctx.j

    @property
    def d_values(self) -> list[int]:
        return [st.d for st in self.steps if st.d is not None]

    def to_dict(self) -> dict:
        return {
            "schema": TRACE_SCHEMA_VERSION,
            "n": self.ctx.n,
            "pair": [self.ctx.a, self.ctx.b],
            "k": self.k,
            "orientation": self.orientation,
            "central": self.ctx.j,
            "steps": [
                {
                    "s": st.s,
                    "d": st.d,
                    "k_s": st.k_s,
                    "k_s_prime": st.k_s_prime,
                    "D": st.D,
                    "new_pair": list(st.new_pair) if st.new_pair else None,
                    "case": st.case,
                    "facts": dict(sorted(st.facts.items())),
                }
                for st in self.steps
            ],
            "pairs": [list(p) for p in self.pairs],
            "terminated_at": self.terminated_at,
            "success": self.success,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_text(self) -> str:
        lines = [
            f"n={self.ctx.n} pair=({self.ctx.a},{self.ctx.b}) k={self.k} "
            f"central={self.ctx.j}"
        ]
        for st in self.steps:
            facts = " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in sorted(st.facts.items()))
            lines.append(
                f"step {st.s}: d={st.d} k_s={st.k_s} k_s'={st.k_s_prime} D={st.D} "
                f"pair={st.new_pair} case={st.case} {facts}".rstrip()
            )
        lines.append(
            f"terminated_at={self.terminated_at} pairs={len(self.pairs)} "
            f"success={self.success}"
        )
        return "\n".join(lines)


def ds_closed_form(n: int, k: int, s: int) -> frozenset[int]:
    """Residues ``s(k-1)`` and ``-s(k-1)`` mod ``n`` (``k`` in the 1-based frame)."""
    r = s * (k - 1) % n
    return frozenset({r, -r % n})


def fold(n: int, r: int) -> int:
    r %= n
    return min(r, n - r)


def no_early_stop_bound(n: int, k: int) -> bool:
    """True when no step ``s <= (n-3)/2`` can land on the central vertex."""
    if not (is_prime(n) and n >= 7):
        raise UnsupportedError(f"n must be a prime >= 7, got {n}")
    if not 2 <= k <= (n + 1) // 2:
        raise DomainError(f"k must lie in [2, {(n + 1) // 2}], got {k}")
    j = (k + 1) * pow(2, -1, n) % n
    forbidden = {(1 - j) % n, (j - 1) % n}
    return all(
        not (ds_closed_form(n, k, s) & forbidden) for s in range(1, (n - 3) // 2 + 1)
    )


# case label -> (D is 1-d, D is k_{s+1}, d measured from vertex 1)
_CASES = {
    "I-1": (True, True, True),
    "I-2": (True, True, False),
    "II-1": (False, True, True),
    "II-2": (False, True, False),
    "III-1": (True, False, True),
    "III-2": (True, False, False),
    "IV-1": (False, False, True),
    "IV-2": (False, False, False),
}
_CASE_BY_KEY = {v: k for k, v in _CASES.items()}


def _case_rules(case: str, n: int, k: int, d: int) -> dict[str, int]:
    """Predicted values of k_s, k_s', k_{s+1}, k'_{s+1} for a case, internal labels."""
    minus, plus = (1 - d) % n, (1 + d) % n
    k_minus, k_plus = (k - d) % n, (k + d) % n
    table = {
        "I-1": {"k_s": plus, "k_s'": k_minus, "k_new": minus, "k_new'": k_plus},
        "I-2": {"k_s'": plus, "k_s": k_minus, "k_new": minus, "k_new'": k_plus},
        "II-1": {"k_s": minus, "k_new'": k_minus, "k_s'": k_plus, "k_new": plus},
        "II-2": {"k_s'": minus, "k_new'": k_minus, "k_s": k_plus, "k_new": plus},
        "III-1": {"k_s": plus, "k_s'": k_minus, "k_new": k_plus, "k_new'": minus},
        "III-2": {"k_s'": plus, "k_s": k_minus, "k_new": k_plus, "k_new'": minus},
        "IV-1": {"k_s": minus, "k_new": k_minus, "k_s'": k_plus, "k_new'": plus},
        "IV-2": {"k_s'": minus, "k_new": k_minus, "k_s": k_plus, "k_new'": plus},
    }
    return table[case]


class _Frame:
    """Relabeling between original 0-based indices and the internal frame."""

    def __init__(self, n: int, a: int, b: int):
        self.n = n
        self.a = a
        self.sign = 1 if (b - a) % n <= n // 2 else -1

    def inner(self, x: int) -> int:
        return (1 + self.sign * (x - self.a)) % self.n

    def outer(self, y: int) -> int:
        return (self.a + self.sign * (y - 1)) % self.n


def _trivial_trace(col: CycleColoring, a: int, b: int) -> ReconstructionTrace:
    ctx = central_vertex_of(col.n, a, b)
    frame = _Frame(col.n, a, b)
    trace = ReconstructionTrace(ctx=ctx, k=frame.inner(b), orientation=frame.sign)
    n, j = col.n, ctx.j
    trace.pairs = [((j - d) % n, (j + d) % n) for d in range(1, n // 2 + 1)]
    trace.terminated_at = 0
    trace.success = is_symmetric_about(col, j)
    return trace


def reconstruct(
    col: CycleColoring, a: int, b: int, *, strict: bool = True
) -> ReconstructionTrace:
    """Rebuild the symmetry of ``col`` from two vertices with equal codes.

    On ``C_3`` and ``C_5`` every coloring is symmetric and a zero-step trace is
    returned.  With ``strict`` (the default) a failed step check raises
    :class:`ReconstructionError`; otherwise the trace comes back with
    ``success`` false.
    """
    n = col.n
    if not is_prime(n):
        raise UnsupportedError(f"reconstruction needs a prime cycle length, got n={n}")
    if a == b:
        raise DomainError("the two vertices must be distinct")
    if code_of(col, a) != code_of(col, b):
        raise DomainError(f"vertices {a} and {b} have different codes")
    if n < 7:
        return _trivial_trace(col, a, b)

    ctx = central_vertex_of(n, a, b)
    frame = _Frame(n, a, b)
    inner, outer = frame.inner, frame.outer
    k = inner(b)
    j = (k + 1) * pow(2, -1, n) % n
    trace = ReconstructionTrace(ctx=ctx, k=k, orientation=frame.sign)

    def color(y: int) -> bool:
        return col.colors[outer(y)]

    def dist(x: int, y: int) -> int:
        return cycle_dist(n, x % n, y % n)

    def prime(y: int) -> int:
        return (n + k + 1 - y) % n

    def in_i(y: int) -> bool:
        return ctx.in_arc_i(outer(y))

    def fail(msg: str):
        if strict:
            raise ReconstructionError(msg, trace)

    # the internal frame and the external context must agree on the center
    if outer(j) != ctx.j or any(partner(ctx, outer(y)) != outer(prime(y)) for y in range(n)):
        fail("internal frame disagrees with the pair context")

    step0 = StepRecord(s=0, new_pair=(a, b), facts={"F8": color(1) == color(k)})
    trace.steps.append(step0)
    trace.pairs.append((a, b))
    if not step0.ok:
        fail("step 0: equal codes but different colors")

    # step 1
    d1 = k - 1
    cand, cand_p = (2 * k - 1) % n, (n + 2 - k) % n
    facts = {"F1": in_i(cand) != in_i(cand_p) and j not in (cand, cand_p)}
    k_next, k_next_p = (cand, cand_p) if in_i(cand) else (cand_p, cand)
    facts["F2"] = not ({k_next, k_next_p} & {j, k, 1})
    facts["F8"] = color(k_next) == color(k_next_p)
    facts["closed_form"] = d1 in {fold(n, r) for r in ds_closed_form(n, k, 1)}
    st = StepRecord(
        s=1, d=d1, k_s=outer(k), k_s_prime=outer(1),
        new_pair=(outer(k_next), outer(k_next_p)), facts=facts,
    )
    trace.steps.append(st)
    trace.pairs.append(st.new_pair)
    if not st.ok:
        fail(f"step 1 failed: {facts}")

    ds = [d1]
    seen = {j, k, 1, k_next, k_next_p}
    k_s, k_s_p = k_next, k_next_p
    s = 2
    while True:
        if s > n:
            fail("no termination within n steps")
            break
        facts = {}
        from_one, from_k = dist(1, k_s), dist(k, k_s)
        prev = ds[-1]
        facts["F3"] = (from_one == prev) != (from_k == prev)
        d = from_k if from_one == prev else from_one
        facts["F4"] = d not in ds and d != 0
        facts["closed_form"] = d in {fold(n, r) for r in ds_closed_form(n, k, s)}
        minus, plus = (1 - d) % n, (1 + d) % n
        olds = {k_s, k_s_p}
        facts["F5"] = (minus in olds) != (plus in olds)
        D = plus if minus in olds else minus
        st = StepRecord(s=s, d=d, k_s=outer(k_s), k_s_prime=outer(k_s_p), D=outer(D), facts=facts)
        trace.steps.append(st)
        ds.append(d)
        if D == j:
            trace.terminated_at = s
            if not st.ok:
                fail(f"step {s} failed: {facts}")
            break
        D_p = prime(D)
        facts["F6"] = in_i(D) != in_i(D_p)
        k_next, k_next_p = (D, D_p) if in_i(D) else (D_p, D)
        facts["F7"] = not ({k_next, k_next_p} & seen)
        facts["F8"] = color(k_next) == color(k_next_p)
        case = _CASE_BY_KEY[(D == minus, D == k_next, d == from_one)]
        predicted = _case_rules(case, n, k, d)
        actual = {"k_s": k_s, "k_s'": k_s_p, "k_new": k_next, "k_new'": k_next_p}
        facts["case_rule"] = predicted == actual
        st.case = case
        st.new_pair = (outer(k_next), outer(k_next_p))
        trace.pairs.append(st.new_pair)
        seen |= {k_next, k_next_p}
        if not st.ok:
            fail(f"step {s} failed: {facts}")
        k_s, k_s_p = k_next, k_next_p
        s += 1

    covered = {x for p in trace.pairs for x in p} | {ctx.j}
    trace.success = (
        all(st.ok for st in trace.steps)
        and len(covered) == n
        and all(col.colors[x] == col.colors[y] for x, y in trace.pairs)
        and is_symmetric_about(col, ctx.j)
    )
    if not trace.success:
        fail("reconstruction finished without a verified symmetry")
    return trace


__all__ = [
    "ReconstructionError",
    "ReconstructionTrace",
    "StepRecord",
    "ds_closed_form",
    "fold",
    "no_early_stop_bound",
    "reconstruct",
]
