"""Trace and norm forms, star products, and the p-central subspace test.

On the normal-form basis the reduced trace of sum a_{i,j} x^i y^j is just
-a_{p-1,0}: powers x^i with i < p-1 have vanishing power sums, x^{p-1}
contributes -1, and every x^i y^j with j != 0 is a root of T^p - a^i b^j.
For elements of the commutative subring F[x] the trace and norm are also
available as the orbit sum/product under the shift automorphism x -> x+1,
which the tests play against the basis formula.

A subspace spanned by v_1..v_m consists of p-central elements (elements
whose p-th power is central) exactly when every symmetrized product
v_1^{d_1} * ... * v_m^{d_m} with total degree at most p-1 has trace zero;
`p_central_test` scans those multi-indices in graded lexicographic order
and reports the first failing witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence

from .algebra import AlgebraElem, shift_x
from .laurent import LaurentPoly

MultiIndex = tuple[int, ...]

# star_naive enumerates all distinct arrangements; 8!/1 is still cheap,
# anything beyond is not worth enumerating.
NAIVE_WEIGHT_CAP = 8


def trace(z: AlgebraElem) -> LaurentPoly:
    """Reduced trace read off the normal form: -a_{p-1,0}."""
    return -z.coeff(z.p - 1, 0)


def trace_fx(z: AlgebraElem) -> LaurentPoly:
    """Orbit-sum trace for elements of F[x]: z + sigma(z) + ... + sigma^{p-1}(z)."""
    if not z.is_in_fx():
        raise ValueError("element is not in F[x]")
    acc = AlgebraElem.zero(z.p)
    for k in range(z.p):
        acc = acc + shift_x(z, k)
    if not acc.is_scalar():
        raise AssertionError("orbit sum of an F[x] element must be scalar")
    return acc.scalar_coeff()


def norm_fx(z: AlgebraElem) -> LaurentPoly:
    """Orbit-product norm for elements of F[x], reduced by x^p = x + a."""
    if not z.is_in_fx():
        raise ValueError("element is not in F[x]")
    acc = AlgebraElem.one(z.p)
    for k in range(z.p):
        acc = acc * shift_x(z, k)
    if not acc.is_scalar():
        raise AssertionError("orbit product of an F[x] element must be scalar")
    return acc.scalar_coeff()


def _check_factors(vs: Sequence[AlgebraElem], d: Sequence[int]) -> int:
    if len(vs) != len(d):
        raise ValueError(f"{len(vs)} factors but {len(d)} exponents")
    if not vs:
        raise ValueError("empty factor sequence")
    p = vs[0].p
    for v in vs:
        if v.p != p:
            raise ValueError("factors live over different primes")
    if any(k < 0 for k in d):
        raise ValueError("exponents must be non-negative")
    return p


def star(vs: Sequence[AlgebraElem], d: Sequence[int]) -> AlgebraElem:
    """Symmetrized product: the sum of all distinct arrangements of
    d[k] copies of vs[k].

    Computed by dynamic programming over sub-multi-indices, one pass per
    total-degree step; the entry at e is the sum over k of the entry at
    e - delta_k times vs[k] (each word is counted once via its last
    factor).
    """
    p = _check_factors(vs, d)
    d = tuple(d)
    level: dict[MultiIndex, AlgebraElem] = {(0,) * len(d): AlgebraElem.one(p)}
    for _ in range(sum(d)):
        nxt: dict[MultiIndex, AlgebraElem] = {}
        for e, val in level.items():
            for k, v in enumerate(vs):
                if e[k] < d[k]:
                    e2 = e[:k] + (e[k] + 1,) + e[k + 1:]
                    cur = nxt.get(e2)
                    term = val * v
                    nxt[e2] = term if cur is None else cur + term
        level = nxt
    return level[d]


def star_naive(vs: Sequence[AlgebraElem], d: Sequence[int]) -> AlgebraElem:
    """Oracle twin of `star`: explicit enumeration of multiset permutations."""
    p = _check_factors(vs, d)
    w = sum(d)
    if w > NAIVE_WEIGHT_CAP:
        raise ValueError(f"total degree {w} exceeds enumeration cap {NAIVE_WEIGHT_CAP}")
    word: list[int] = []
    for k, dk in enumerate(d):
        word.extend([k] * dk)
    acc = AlgebraElem.zero(p)
    for arrangement in set(permutations(word)):
        prod = AlgebraElem.one(p)
        for k in arrangement:
            prod = prod * vs[k]
        acc = acc + prod
    return acc


def multi_indices(m: int, max_weight: int) -> Iterator[MultiIndex]:
    """All multi-indices of length m with 1 <= weight <= max_weight, in
    graded lexicographic order (weight first, then lex ascending)."""

    def compositions(total: int, parts: int) -> Iterator[MultiIndex]:
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for w in range(1, max_weight + 1):
        yield from compositions(w, m)


@dataclass(frozen=True)
class PCentralVerdict:
    """Outcome of the trace criterion; witness fields are set iff it failed."""

    is_p_central: bool
    witness_d: MultiIndex | None = None
    witness_trace: LaurentPoly | None = None

    def __bool__(self) -> bool:
        return self.is_p_central


def p_central_test(vs: Sequence[AlgebraElem]) -> PCentralVerdict:
    """Decide whether span(vs) consists of p-central elements.

    Scans every multi-index of weight 1..p-1 in graded lexicographic
    order and returns the first star product with nonzero trace as a
    witness; linear dependence among vs is permitted (the criterion is
    evaluated on the sequence as given).
    """
    if not vs:
        raise ValueError("empty spanning sequence")
    p = vs[0].p
    for d in multi_indices(len(vs), p - 1):
        t = trace(star(vs, d))
        if t:
            return PCentralVerdict(False, d, t)
    return PCentralVerdict(True)
