"""Bounded-coefficient zero-sum solver over G = (Z/p) x (Z/p).

Given p+1 distinct nonzero elements S of G and a nonzero target g, there
are non-negative integers d_1..d_{p+1} with sum at most p-1 such that
sum d_k s_k = g.  `solve` finds such coefficients constructively by the
line-partition case analysis; `oracle_solve` is an independent
breadth-first search returning a minimum-weight solution; `exhaust`
enumerates every instance for small p (sampling for p = 7) and verifies
each one.

G has exactly p+1 proper nonzero subgroups ("lines"), each generated by
a canonical element whose first nonzero coordinate is 1.  The case split
follows how S meets those lines:

  * p = 2: S is all of G \\ {0}, so g itself is in S.
  * two lines occupied: each holds >= 2 elements of S; write
    g = e1*s1 + e3*s3 across the lines and fix up each e separately.
  * three or more lines, all distinct: some s3 = a*s1 + b*s2 has
    a + b != 1 (mod p) by counting, and one congruence-pair solve ends it.
  * three or more lines with a repeated line: take s3, s4 on the repeated
    line; if the coefficients of s3 sum to 1 mod p, those of s4 = m*s3
    sum to m != 1, so one of the two always qualifies.

Determinism: S is kept in input order, selections take lexicographically
smallest qualifying elements, and the congruence scan takes the smallest
qualifying shift, so outputs are reproducible and safe to freeze.
"""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .field import check_prime, fp_inv

Pair = tuple[int, int]

BRANCH_P2 = "p2-direct"
BRANCH_TWO_LINES = "case1-two-lines"
BRANCH_ALL_DISTINCT = "case2a-three-lines-independent"
BRANCH_REPEATED = "case2b-repeated-line"
BRANCH_ORACLE = "oracle"


class SolverInternalError(RuntimeError):
    """A counting fact the construction relies on failed; this cannot
    happen on a valid instance and must abort loudly if it ever does."""


def nonzero_pairs(p: int) -> list[Pair]:
    """All p^2 - 1 nonzero elements of G in lexicographic order."""
    return [(u, w) for u in range(p) for w in range(p) if (u, w) != (0, 0)]


def line_of(s: Pair, p: int) -> Pair:
    """Canonical generator of the subgroup <s>: scale s so its first
    nonzero coordinate is 1."""
    u, w = s
    u %= p
    w %= p
    if u:
        return (1, (w * fp_inv(u, p)) % p)
    if w:
        return (0, 1)
    raise ValueError("the zero element spans no line")


def _ratio(s_num: Pair, s_den: Pair, p: int) -> int:
    """The scalar t with s_num = t * s_den, for collinear nonzero pairs."""
    if s_den[0]:
        return (s_num[0] * fp_inv(s_den[0], p)) % p
    return (s_num[1] * fp_inv(s_den[1], p)) % p


def solve_bounded_congruences(
    p: int, mults: Sequence[int], targets: Sequence[int]
) -> tuple[int, ...]:
    """Solve d_k + t*mults[k] = targets[k] (mod p) for all k with
    d_1 + ... + d_n + t <= n(p-1)/2, returning (d_1, ..., d_n, t).

    Requires p odd, every multiplier a unit mod p, and sum(mults) != 1
    mod p.  Each map t -> (targets[k] - mults[k]*t) mod p is then a
    permutation of the residues, and the weights t + sum_k(...) over
    t = 0..p-1 are pairwise distinct integers, so the average forces one
    below the bound; the smallest such t is chosen.
    """
    check_prime(p)
    if p == 2:
        raise ValueError("p must be an odd prime")
    n = len(mults)
    if n != len(targets) or n == 0:
        raise ValueError("multiplier and target lists must match and be nonempty")
    mults = [a % p for a in mults]
    targets = [b % p for b in targets]
    if any(a == 0 for a in mults):
        raise ValueError("multipliers must be coprime to p")
    if sum(mults) % p == 1:
        raise ValueError("sum of multipliers must not be 1 mod p")
    bound2 = n * (p - 1)  # compare 2*weight <= n(p-1) to stay in integers
    for t in range(p):
        ds = [(b - a * t) % p for a, b in zip(mults, targets)]
        if 2 * (t + sum(ds)) <= bound2:
            out = (*ds, t)
            # contract check, kept on every call
            if any((dk + t * ak - bk) % p for dk, ak, bk in zip(ds, mults, targets)):
                raise SolverInternalError("congruence postcondition failed")
            return out
    raise SolverInternalError("no shift met the weight bound; averaging argument violated")


@dataclass(frozen=True)
class ZeroSumInstance:
    """p+1 distinct nonzero elements of G and a nonzero target."""

    p: int
    S: tuple[Pair, ...]
    g: Pair

    def __post_init__(self):
        check_prime(self.p)
        p = self.p
        object.__setattr__(self, "S", tuple((u % p, w % p) for u, w in self.S))
        object.__setattr__(self, "g", (self.g[0] % p, self.g[1] % p))
        if len(self.S) != p + 1:
            raise ValueError(f"S must have exactly {p + 1} elements, got {len(self.S)}")
        if len(set(self.S)) != len(self.S):
            raise ValueError("S entries must be distinct")
        if (0, 0) in self.S:
            raise ValueError("S entries must be nonzero")
        if self.g == (0, 0):
            raise ValueError("target must be nonzero")

    def to_dict(self) -> dict:
        return {"p": self.p, "S": [list(s) for s in self.S], "g": list(self.g)}

    @classmethod
    def from_dict(cls, data: dict) -> "ZeroSumInstance":
        return cls(int(data["p"]),
                   tuple((int(u), int(w)) for u, w in data["S"]),
                   (int(data["g"][0]), int(data["g"][1])))


@dataclass(frozen=True)
class ZeroSumSolution:
    d: tuple[int, ...]
    branch: str

    @property
    def weight(self) -> int:
        return sum(self.d)

    def to_dict(self) -> dict:
        return {"d": list(self.d), "branch": self.branch, "weight": self.weight}

    @classmethod
    def from_dict(cls, data: dict) -> "ZeroSumSolution":
        return cls(tuple(int(k) for k in data["d"]), str(data.get("branch", "oracle")))


class _Plan:
    """Target-independent part of solving: the branch and the selected
    elements/coefficients, reusable across all g for a fixed S."""

    __slots__ = ("p", "size", "branch", "index_of", "idx", "ab", "inv_rows")

    def __init__(self, p, size, branch, index_of=None, idx=None, ab=None, inv_rows=None):
        self.p = p
        self.size = size
        self.branch = branch
        self.index_of = index_of  # p=2: element -> position
        self.idx = idx            # selected positions (see _prepare)
        self.ab = ab              # line-ratio / combination coefficients
        self.inv_rows = inv_rows  # inverse of the 2x2 basis matrix, flattened


def _inv_rows(s_a: Pair, s_b: Pair, p: int) -> tuple[int, int, int, int]:
    """Rows of the inverse of the column matrix [s_a s_b] over GF(p)."""
    det = (s_a[0] * s_b[1] - s_a[1] * s_b[0]) % p
    dinv = fp_inv(det, p)
    return ((s_b[1] * dinv) % p, (-s_b[0] * dinv) % p,
            (-s_a[1] * dinv) % p, (s_a[0] * dinv) % p)


def _prepare(p: int, S: Sequence[Pair]) -> _Plan:
    """Partition S by lines and fix every target-independent selection."""
    size = len(S)
    if p == 2:
        return _Plan(p, size, BRANCH_P2, index_of={s: k for k, s in enumerate(S)})

    lines: dict[Pair, list[int]] = {}
    for k, s in enumerate(S):
        lines.setdefault(line_of(s, p), []).append(k)
    occupied = sorted(lines)

    if len(occupied) == 2:
        row_a = sorted(lines[occupied[0]], key=lambda k: S[k])
        row_b = sorted(lines[occupied[1]], key=lambda k: S[k])
        if len(row_a) < 2 or len(row_b) < 2:
            raise SolverInternalError("two occupied lines must hold two elements each")
        i1, i2 = row_a[0], row_a[1]
        i3, i4 = row_b[0], row_b[1]
        a = _ratio(S[i2], S[i1], p)
        b = _ratio(S[i4], S[i3], p)
        if a in (0, 1) or b in (0, 1):
            raise SolverInternalError("collinear distinct nonzero elements need ratio not in {0,1}")
        return _Plan(p, size, BRANCH_TWO_LINES, idx=(i1, i2, i3, i4), ab=(a, b),
                     inv_rows=_inv_rows(S[i1], S[i3], p))

    if len(occupied) < 2:
        raise SolverInternalError("p+1 distinct nonzero elements span at least two lines")

    order = sorted(range(size), key=lambda k: S[k])
    repeated = [g for g in occupied if len(lines[g]) >= 2]

    if not repeated:
        # every element on its own line
        i1 = order[0]
        line1 = line_of(S[i1], p)
        i2 = next(k for k in order if line_of(S[k], p) != line1)
        rows = _inv_rows(S[i1], S[i2], p)
        for k in order:
            if k in (i1, i2):
                continue
            a = (rows[0] * S[k][0] + rows[1] * S[k][1]) % p
            b = (rows[2] * S[k][0] + rows[3] * S[k][1]) % p
            if (a + b) % p != 1:
                if a == 0 or b == 0:
                    raise SolverInternalError("combination across distinct lines must use both basis elements")
                return _Plan(p, size, BRANCH_ALL_DISTINCT, idx=(i1, i2, k), ab=(a, b),
                             inv_rows=rows)
        raise SolverInternalError("the affine line a+b=1 has only p points but held all of S")

    rep = repeated[0]
    rep_row = sorted(lines[rep], key=lambda k: S[k])
    i3, i4 = rep_row[0], rep_row[1]
    others = [g for g in occupied if g != rep]
    if len(others) < 2:
        raise SolverInternalError("three occupied lines expected")
    i1 = min(lines[others[0]], key=lambda k: S[k])
    i2 = min(lines[others[1]], key=lambda k: S[k])
    rows = _inv_rows(S[i1], S[i2], p)
    a3 = (rows[0] * S[i3][0] + rows[1] * S[i3][1]) % p
    b3 = (rows[2] * S[i3][0] + rows[3] * S[i3][1]) % p
    if a3 == 0 or b3 == 0:
        raise SolverInternalError("repeated-line element must combine both basis elements")
    if (a3 + b3) % p != 1:
        return _Plan(p, size, BRANCH_REPEATED, idx=(i1, i2, i3), ab=(a3, b3),
                     inv_rows=rows)
    m = _ratio(S[i4], S[i3], p)
    if m in (0, 1):
        raise SolverInternalError("collinear distinct nonzero elements need ratio not in {0,1}")
    a4, b4 = (m * a3) % p, (m * b3) % p
    if (a4 + b4) % p == 1:
        raise SolverInternalError("scaled coefficients cannot also sum to 1")
    return _Plan(p, size, BRANCH_REPEATED, idx=(i1, i2, i4), ab=(a4, b4),
                 inv_rows=rows)


def _solve_prepared(plan: _Plan, g: Pair) -> tuple[int, ...]:
    p = plan.p
    d = [0] * plan.size

    if plan.branch == BRANCH_P2:
        pos = plan.index_of.get(g)
        if pos is None:
            raise SolverInternalError("for p=2 the target is always among S")
        d[pos] = 1
        return tuple(d)

    rows = plan.inv_rows
    e1 = (rows[0] * g[0] + rows[1] * g[1]) % p
    e2 = (rows[2] * g[0] + rows[3] * g[1]) % p

    if plan.branch == BRANCH_TWO_LINES:
        i1, i2, i3, i4 = plan.idx
        a, b = plan.ab
        if e1 == 0:
            d[i3] = e2
        elif e2 == 0:
            d[i1] = e1
        else:
            d[i1], d[i2] = solve_bounded_congruences(p, (a,), (e1,))
            d[i3], d[i4] = solve_bounded_congruences(p, (b,), (e2,))
        return tuple(d)

    i1, i2, i3 = plan.idx
    a, b = plan.ab
    d[i1], d[i2], d[i3] = solve_bounded_congruences(p, (a, b), (e1, e2))
    return tuple(d)


def solve(inst: ZeroSumInstance) -> ZeroSumSolution:
    """Constructive solution; the branch label records the proof case used."""
    plan = _prepare(inst.p, inst.S)
    return ZeroSumSolution(_solve_prepared(plan, inst.g), plan.branch)


def verify(inst: ZeroSumInstance, sol: ZeroSumSolution) -> bool:
    """True iff sum(d) <= p-1 and the coefficient combination hits g."""
    if len(sol.d) != len(inst.S):
        raise ValueError("solution length does not match instance")
    return _verify_raw(inst.p, inst.S, inst.g, sol.d)


def _verify_raw(p: int, S: Sequence[Pair], g: Pair, d: Sequence[int]) -> bool:
    if sum(d) > p - 1 or any(k < 0 for k in d):
        return False
    u = w = 0
    for dk, (su, sw) in zip(d, S):
        u += dk * su
        w += dk * sw
    return (u % p, w % p) == g


def oracle_solve(inst: ZeroSumInstance) -> Optional[ZeroSumSolution]:
    """Independent minimum-weight search by breadth-first expansion.

    Returns a solution of minimal total weight (at most p-1), or None if
    the target is unreachable within the bound -- which would disprove
    the statement `exhaust` checks and must fail any suite that sees it.
    """
    d = _oracle_raw(inst.p, inst.S, inst.g)
    return None if d is None else ZeroSumSolution(d, BRANCH_ORACLE)


def _oracle_raw(p: int, S: Sequence[Pair], g: Pair) -> Optional[tuple[int, ...]]:
    parent: dict[Pair, tuple[Pair, int]] = {}
    seen = {(0, 0)}
    frontier = [(0, 0)]
    for _ in range(p - 1):
        nxt = []
        for node in frontier:
            for k, (su, sw) in enumerate(S):
                cand = ((node[0] + su) % p, (node[1] + sw) % p)
                if cand not in seen:
                    seen.add(cand)
                    parent[cand] = (node, k)
                    nxt.append(cand)
        if g in seen:
            d = [0] * len(S)
            node = g
            while node != (0, 0):
                node, k = parent[node]
                d[k] += 1
            return tuple(d)
        frontier = nxt
    return None


# -- exhaustive / sampled verification ---------------------------------

FULL_ENUMERATION_PRIMES = (2, 3, 5)
SAMPLED_PRIME = 7


@dataclass
class ExhaustReport:
    p: int
    mode: str                          # "full" or "sampled"
    instances: int
    failures: int
    branch_histogram: dict[str, int]
    max_weight: int
    elapsed_ms: int
    samples: int | None = None
    seed: int | None = None
    failure_examples: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {
            "p": self.p,
            "mode": self.mode,
            "instances": self.instances,
            "failures": self.failures,
            "branch_histogram": dict(sorted(self.branch_histogram.items())),
            "max_weight": self.max_weight,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.mode == "sampled":
            out["samples"] = self.samples
            out["seed"] = self.seed
        if self.failure_examples:
            out["failure_examples"] = self.failure_examples
        return out


def _run_subsets(p: int, subsets: Sequence[tuple[Pair, ...]]):
    """Solve and verify every (S, g) for the given subsets; aggregates only."""
    targets = nonzero_pairs(p)
    hist: dict[str, int] = {}
    count = failures = maxw = 0
    examples: list[dict] = []
    for S in subsets:
        plan = _prepare(p, S)
        branch = plan.branch
        for g in targets:
            count += 1
            d = _solve_prepared(plan, g)
            if _verify_raw(p, S, g, d):
                hist[branch] = hist.get(branch, 0) + 1
                w = sum(d)
                if w > maxw:
                    maxw = w
            else:
                failures += 1
                if len(examples) < 5:
                    examples.append({"S": [list(s) for s in S], "g": list(g), "d": list(d)})
    return count, failures, hist, maxw, examples


def _merge(parts) -> tuple[int, int, dict[str, int], int, list[dict]]:
    count = failures = maxw = 0
    hist: dict[str, int] = {}
    examples: list[dict] = []
    for c, f, h, m, ex in parts:
        count += c
        failures += f
        maxw = max(maxw, m)
        for k, v in h.items():
            hist[k] = hist.get(k, 0) + v
        examples.extend(ex[: max(0, 5 - len(examples))])
    return count, failures, hist, maxw, examples


def _chunk_worker(args):
    p, subsets = args
    return _run_subsets(p, subsets)


def exhaust(p: int, jobs: int | None = None,
            samples: int = 10_000, seed: int = 0) -> ExhaustReport:
    """Verify the bounded zero-sum statement across instances.

    Full enumeration of all (S, g) for p in {2, 3, 5}; uniform sampling
    for p = 7.  The p = 5 run distributes subsets over worker processes
    (instances are independent; only counts, maxima and histograms are
    merged, so the reduction is order-independent).
    """
    start = time.perf_counter()
    if p in FULL_ENUMERATION_PRIMES:
        pairs = nonzero_pairs(p)
        subsets = list(combinations(pairs, p + 1))
        if jobs is None:
            jobs = min(os.cpu_count() or 1, 8) if p == 5 else 1
        if jobs > 1 and len(subsets) > 1000:
            import multiprocessing as mp

            step = (len(subsets) + jobs * 8 - 1) // (jobs * 8)
            chunks = [(p, subsets[k:k + step]) for k in range(0, len(subsets), step)]
            with mp.Pool(jobs) as pool:
                parts = pool.map(_chunk_worker, chunks)
            count, failures, hist, maxw, examples = _merge(parts)
        else:
            count, failures, hist, maxw, examples = _run_subsets(p, subsets)
        report = ExhaustReport(p, "full", count, failures, hist, maxw, 0)
        report.failure_examples = examples
    elif p == SAMPLED_PRIME:
        rng = random.Random(seed)
        pairs = nonzero_pairs(p)
        hist: dict[str, int] = {}
        count = failures = maxw = 0
        examples = []
        for _ in range(samples):
            S = tuple(rng.sample(pairs, p + 1))
            g = pairs[rng.randrange(len(pairs))]
            plan = _prepare(p, S)
            d = _solve_prepared(plan, g)
            ok = _verify_raw(p, S, g, d)
            if ok and _oracle_raw(p, S, g) is None:
                ok = False  # solver succeeded where the oracle sees nothing: impossible
            count += 1
            if ok:
                hist[plan.branch] = hist.get(plan.branch, 0) + 1
                maxw = max(maxw, sum(d))
            else:
                failures += 1
                if len(examples) < 5:
                    examples.append({"S": [list(s) for s in S], "g": list(g), "d": list(d)})
        report = ExhaustReport(p, "sampled", count, failures, hist, maxw, 0,
                               samples=samples, seed=seed)
        report.failure_examples = examples
    else:
        raise ValueError(
            f"exhaust supports full enumeration for p in {FULL_ENUMERATION_PRIMES} "
            f"and sampling for p = {SAMPLED_PRIME}; got {p}"
        )
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report
