"""Value map, leading monomials, and the excess-dimension trace witness.

The ground field carries the right-to-left (a^-1, b^-1)-adic valuation:
v(a) = (-1, 0), v(b) = (0, -1), and pairs compare by the second coordinate
first.  On the algebra v(x) = (-1/p, 0) and v(y) = (0, -1/p), so the value
of c a^r b^s x^i y^j is -(pr+i, ps+j)/p and distinct basis monomials have
distinct values; the minimum over the support is therefore achieved by a
unique monomial, the leading monomial.

Values are stored as integer numerators scaled by p; no rationals or
floats enter the ordering.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .algebra import AlgebraElem
from .field import check_algebra_prime
from .forms import star, trace
from .laurent import LaurentPoly
from .zerosum import ZeroSumInstance, ZeroSumSolution, solve


@dataclass(frozen=True)
class Value:
    """A point of (1/p)Z x (1/p)Z, or the infinite value of 0.

    `pu` and `pw` are the numerators of (pu/p, pw/p).  Ordering is total:
    infinite is maximal, finite values compare right-to-left, i.e. by pw
    first and then pu.
    """

    finite: bool
    pu: int = 0
    pw: int = 0

    @classmethod
    def infinite(cls) -> "Value":
        return cls(False)

    def sort_key(self) -> tuple[int, int, int]:
        return (1, 0, 0) if not self.finite else (0, self.pw, self.pu)

    def __lt__(self, other: "Value") -> bool:
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "Value") -> bool:
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other: "Value") -> bool:
        return self.sort_key() > other.sort_key()

    def __ge__(self, other: "Value") -> bool:
        return self.sort_key() >= other.sort_key()

    def __add__(self, other: "Value") -> "Value":
        if not (self.finite and other.finite):
            return Value.infinite()
        return Value(True, self.pu + other.pu, self.pw + other.pw)


@dataclass(frozen=True)
class Monomial:
    """Single term c * a^r * b^s * x^i * y^j with c in GF(p), c != 0."""

    p: int
    c: int
    r: int
    s: int
    i: int
    j: int

    def __post_init__(self):
        check_algebra_prime(self.p)
        if not 0 < self.c < self.p:
            raise ValueError(f"coefficient {self.c} not a unit mod {self.p}")
        if not (0 <= self.i < self.p and 0 <= self.j < self.p):
            raise ValueError("generator exponents out of range")

    def as_element(self) -> AlgebraElem:
        return AlgebraElem.monomial(self.p, self.i, self.j,
                                    LaurentPoly.mono(self.p, self.c, self.r, self.s))


def mono_value(m: Monomial) -> Value:
    """v(c a^r b^s x^i y^j) = -(pr+i, ps+j)/p."""
    return Value(True, -(m.p * m.r + m.i), -(m.p * m.s + m.j))


def value(z: AlgebraElem) -> Value:
    """Minimum of the monomial values over the support; infinite for 0."""
    best: Value | None = None
    for (i, j), poly in z.coeffs.items():
        for (r, s), _ in poly.terms.items():
            v = Value(True, -(z.p * r + i), -(z.p * s + j))
            if best is None or v < best:
                best = v
    return best if best is not None else Value.infinite()


def leading_monomial(z: AlgebraElem) -> Monomial:
    """The unique monomial of z achieving value(z); z must be nonzero."""
    if z.is_zero():
        raise ValueError("the zero element has no leading monomial")
    best: tuple[tuple[int, int, int], Monomial] | None = None
    for (i, j), poly in z.coeffs.items():
        for (r, s), c in poly.terms.items():
            key = (0, -(z.p * s + j), -(z.p * r + i))
            if best is None or key < best[0]:
                best = (key, Monomial(z.p, c, r, s, i, j))
    return best[1]


def mono_mul_tilde(m0: Monomial, m1: Monomial) -> Monomial:
    """Closed-form leading monomial of a product of monomials.

    Generator exponents add mod p and the carries move into the central
    exponents: r2 = r0 + r1 + (i0 + i1 - i2)/p and likewise for s2.
    """
    if m0.p != m1.p:
        raise ValueError("mixed moduli")
    p = m0.p
    i2 = (m0.i + m1.i) % p
    j2 = (m0.j + m1.j) % p
    return Monomial(
        p,
        (m0.c * m1.c) % p,
        m0.r + m1.r + (m0.i + m1.i - i2) // p,
        m0.s + m1.s + (m0.j + m1.j - j2) // p,
        i2,
        j2,
    )


def value_class_of(v: Value, p: int) -> tuple[int, int]:
    """Residue class of a finite value in (1/p)Z x (1/p)Z modulo Z x Z,
    reported as the pair (i, j) with v = -(i, j)/p mod 1."""
    if not v.finite:
        raise ValueError("the infinite value has no residue class")
    return ((-v.pu) % p, (-v.pw) % p)


def multinomial(d: Sequence[int]) -> int:
    """Exact multinomial coefficient (sum d)! / prod d_k! as a Python int."""
    if any(k < 0 for k in d):
        raise ValueError("entries must be non-negative")
    out = 1
    total = 0
    for k in d:
        total += k
        out *= comb(total, k)
    return out


@dataclass(frozen=True)
class WitnessReport:
    """Certificate that p+2 distinct monomial value classes cannot all be
    p-central: a star product over the classes whose trace is nonzero."""

    p: int
    classes: tuple[tuple[int, int], ...]
    excluded: int                       # index of the class left out of S
    solution: ZeroSumSolution           # solver output over the other p+1
    d: tuple[int, ...]                  # exponents aligned with `classes`
    star_trace: LaurentPoly
    n: int                              # number of words in the star product
    lead_r: int
    lead_s: int
    lead_coeff: int
    ok: bool


def not_p_central_witness(p: int, classes: Sequence[tuple[int, int]]) -> WitnessReport:
    """Produce the nonzero-trace witness for p+2 distinct classes in [0,p)^2.

    Picks p+1 nonzero classes (dropping the zero class if present, else
    the lexicographically largest), solves the bounded zero-sum problem
    with target (p-1, 0), and evaluates the star product of x^i y^j over
    the returned exponents.  The report checks that the trace's leading
    term is -n a^r b^s with n the word count, nonzero mod p.
    """
    check_algebra_prime(p)
    classes = tuple((int(i), int(j)) for i, j in classes)
    if len(classes) != p + 2:
        raise ValueError(f"need exactly {p + 2} classes, got {len(classes)}")
    if len(set(classes)) != len(classes):
        raise ValueError("classes must be distinct")
    for i, j in classes:
        if not (0 <= i < p and 0 <= j < p):
            raise ValueError(f"class ({i},{j}) out of range for p={p}")

    if (0, 0) in classes:
        excluded = classes.index((0, 0))
    else:
        excluded = classes.index(max(classes))
    support = tuple(c for k, c in enumerate(classes) if k != excluded)
    sol = solve(ZeroSumInstance(p, support, (p - 1, 0)))

    d = list(sol.d)
    d.insert(excluded, 0)
    d = tuple(d)

    vs = [AlgebraElem.monomial(p, i, j) for i, j in classes]
    tr = trace(star(vs, d))
    n = multinomial(d)

    lead_r = (sum(dk * i for dk, (i, _) in zip(d, classes)) - (p - 1)) // p
    lead_s = sum(dk * j for dk, (_, j) in zip(d, classes)) // p
    expected = (-n) % p

    ok = False
    lead_coeff = 0
    if tr:
        (r0, s0), lead_coeff = max(tr.sorted_terms(), key=lambda t: (t[0][1], t[0][0]))
        ok = (r0, s0) == (lead_r, lead_s) and lead_coeff == expected and expected != 0
    return WitnessReport(p, classes, excluded, sol, d, tr, n,
                         lead_r, lead_s, lead_coeff, ok)
