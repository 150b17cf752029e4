"""Sparse Laurent polynomials in two central variables over GF(p).

This is the commuting coefficient ring K[a, b, a^-1, b^-1] with K = GF(p);
every scalar produced by the algebra, trace and valuation machinery lives
here.  Terms are a finitely supported map (r, s) -> nonzero coefficient,
kept canonical: zero coefficients are never stored, and iteration is
sorted by (s, r) so rendering and hashing are reproducible.

Only monomials (single-term values) are invertible; general rational
functions are out of scope.
"""

from __future__ import annotations

from .field import check_prime, fp_inv

ExpPair = tuple[int, int]


class LaurentPoly:
    """Immutable-by-convention sparse Laurent polynomial over GF(p)."""

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: dict[ExpPair, int] | None = None):
        check_prime(p)
        clean: dict[ExpPair, int] = {}
        if terms:
            for (r, s), c in terms.items():
                c %= p
                if c:
                    clean[(int(r), int(s))] = c
        self.p = p
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "LaurentPoly":
        return cls(p, {})

    @classmethod
    def one(cls, p: int) -> "LaurentPoly":
        return cls(p, {(0, 0): 1})

    @classmethod
    def const(cls, p: int, c: int) -> "LaurentPoly":
        return cls(p, {(0, 0): c % p})

    @classmethod
    def mono(cls, p: int, c: int, r: int, s: int) -> "LaurentPoly":
        """Single term c * a^r * b^s."""
        return cls(p, {(r, s): c % p})

    @classmethod
    def alpha(cls, p: int, r: int = 1) -> "LaurentPoly":
        return cls.mono(p, 1, r, 0)

    @classmethod
    def beta(cls, p: int, s: int = 1) -> "LaurentPoly":
        return cls.mono(p, 1, 0, s)

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0, 0): 1}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coeff(self, r: int, s: int) -> int:
        return self.terms.get((r, s), 0)

    def sorted_terms(self) -> list[tuple[ExpPair, int]]:
        """Terms in the canonical (s, r) order used everywhere."""
        return sorted(self.terms.items(), key=lambda t: (t[0][1], t[0][0]))

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "LaurentPoly") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed moduli {self.p} and {other.p}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        p = self.p
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return LaurentPoly(p, out)

    def __neg__(self) -> "LaurentPoly":
        p = self.p
        return LaurentPoly(p, {e: p - c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        p = self.p
        out: dict[ExpPair, int] = {}
        for (r0, s0), c0 in self.terms.items():
            for (r1, s1), c1 in other.terms.items():
                e = (r0 + r1, s0 + s1)
                v = (out.get(e, 0) + c0 * c1) % p
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        return LaurentPoly(p, out)

    def scale(self, c: int) -> "LaurentPoly":
        """Multiply by a scalar from GF(p)."""
        c %= self.p
        if c == 0:
            return LaurentPoly.zero(self.p)
        if c == 1:
            return self
        p = self.p
        return LaurentPoly(p, {e: (v * c) % p for e, v in self.terms.items()})

    def shift(self, dr: int, ds: int) -> "LaurentPoly":
        """Multiply by the monomial a^dr * b^ds."""
        return LaurentPoly(self.p, {(r + dr, s + ds): c for (r, s), c in self.terms.items()})

    def inv(self) -> "LaurentPoly":
        """Inverse, defined for single-term values only."""
        if not self.is_monomial():
            raise ValueError("only monomial Laurent polynomials are invertible here")
        ((r, s), c), = self.terms.items()
        return LaurentPoly.mono(self.p, fp_inv(c, self.p), -r, -s)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            return self.inv() ** (-n)
        acc = LaurentPoly.one(self.p)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            n >>= 1
            if n:
                base = base * base
        return acc

    # -- protocol -----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.p == other.p and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.p, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.p}, {self.render()!r})"

    # -- text form ----------------------------------------------------

    def render(self) -> str:
        """Canonical text: `c*a^r*b^s` terms joined by ` + `.

        Unit coefficients and zero exponents are omitted; exponent 1 is
        written bare.  The empty polynomial renders as "0".
        """
        if not self.terms:
            return "0"
        parts = []
        for (r, s), c in self.sorted_terms():
            factors = []
            if c != 1 or (r == 0 and s == 0):
                factors.append(str(c))
            if r != 0:
                factors.append("a" if r == 1 else f"a^{r}")
            if s != 0:
                factors.append("b" if s == 1 else f"b^{s}")
            parts.append("*".join(factors))
        return " + ".join(parts)
