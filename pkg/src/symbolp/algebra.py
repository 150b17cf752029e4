"""Elements of the degree-p symbol algebra over GF(p) Laurent coefficients.

The algebra is generated by x and y subject to

    x^p - x = a,    y^p = b,    y x y^{-1} = x + 1,

with a, b the central Laurent variables.  Every element is kept in the
normal form  sum a_{i,j} x^i y^j  with 0 <= i, j < p and coefficients in
the Laurent ring; multiplication pushes y-powers left past x-powers via
y^j x = (x+j) y^j, expands binomially, and reduces x^p -> x + a and
y^p -> b.  Intermediate x-exponents never exceed 2p-2, so a single
application of the x-relation suffices.
"""

from __future__ import annotations

from math import comb

from .field import check_algebra_prime
from .laurent import LaurentPoly

Cell = tuple[int, int]


class AlgebraElem:
    """Normal-form element: sparse map (i, j) -> LaurentPoly coefficient."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: dict[Cell, LaurentPoly] | None = None):
        check_algebra_prime(p)
        clean: dict[Cell, LaurentPoly] = {}
        if coeffs:
            for (i, j), c in coeffs.items():
                if not (0 <= i < p and 0 <= j < p):
                    raise ValueError(f"basis index ({i},{j}) out of range for p={p}")
                if c.p != p:
                    raise ValueError("coefficient modulus does not match element")
                if c:
                    clean[(i, j)] = c
        self.p = p
        self.coeffs = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "AlgebraElem":
        return cls(p, {})

    @classmethod
    def one(cls, p: int) -> "AlgebraElem":
        return cls(p, {(0, 0): LaurentPoly.one(p)})

    @classmethod
    def scalar(cls, p: int, c: LaurentPoly | int) -> "AlgebraElem":
        if isinstance(c, int):
            c = LaurentPoly.const(p, c)
        return cls(p, {(0, 0): c})

    @classmethod
    def monomial(cls, p: int, i: int, j: int, coeff: LaurentPoly | int = 1) -> "AlgebraElem":
        """coeff * x^i * y^j with 0 <= i, j < p."""
        if isinstance(coeff, int):
            coeff = LaurentPoly.const(p, coeff)
        return cls(p, {(i, j): coeff})

    @classmethod
    def gen_x(cls, p: int) -> "AlgebraElem":
        return cls.monomial(p, 1, 0)

    @classmethod
    def gen_y(cls, p: int) -> "AlgebraElem":
        return cls.monomial(p, 0, 1)

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_scalar(self) -> bool:
        """True iff the support is contained in the (0, 0) cell."""
        return all(cell == (0, 0) for cell in self.coeffs)

    def is_in_fx(self) -> bool:
        """True iff the element lies in the commutative subring F[x]."""
        return all(j == 0 for (_, j) in self.coeffs)

    def coeff(self, i: int, j: int) -> LaurentPoly:
        return self.coeffs.get((i, j), LaurentPoly.zero(self.p))

    def scalar_coeff(self) -> LaurentPoly:
        """The (0, 0) coefficient; the full value when is_scalar()."""
        return self.coeff(0, 0)

    def sorted_cells(self) -> list[tuple[Cell, LaurentPoly]]:
        """Cells in the canonical (j, i) order used for rendering."""
        return sorted(self.coeffs.items(), key=lambda t: (t[0][1], t[0][0]))

    # -- ring operations ----------------------------------------------

    def _check(self, other: "AlgebraElem") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed algebra moduli {self.p} and {other.p}")

    def __add__(self, other: "AlgebraElem") -> "AlgebraElem":
        self._check(other)
        out = dict(self.coeffs)
        for cell, c in other.coeffs.items():
            v = out.get(cell)
            out[cell] = c if v is None else v + c
        return AlgebraElem(self.p, out)

    def __neg__(self) -> "AlgebraElem":
        return AlgebraElem(self.p, {cell: -c for cell, c in self.coeffs.items()})

    def __sub__(self, other: "AlgebraElem") -> "AlgebraElem":
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> "AlgebraElem":
        """Multiply by a central scalar (GF(p) or Laurent)."""
        if isinstance(c, int):
            c = LaurentPoly.const(self.p, c)
        if c.p != self.p:
            raise ValueError("scalar modulus does not match element")
        return AlgebraElem(self.p, {cell: v * c for cell, v in self.coeffs.items()})

    def __mul__(self, other: "AlgebraElem") -> "AlgebraElem":
        """Normal-form product driven by the defining relations.

        Monomial rule: (x^i0 y^j0)(x^i1 y^j1) = x^i0 (x+j0)^i1 y^(j0+j1),
        where (x+j0)^i1 expands binomially over GF(p), x-powers >= p
        reduce once by x^p = x + a, and y-powers >= p reduce by y^p = b.
        """
        self._check(other)
        p = self.p
        alpha = LaurentPoly.alpha(p)
        out: dict[Cell, LaurentPoly] = {}

        def acc(cell: Cell, val: LaurentPoly) -> None:
            cur = out.get(cell)
            out[cell] = val if cur is None else cur + val

        for (i0, j0), c0 in self.coeffs.items():
            for (i1, j1), c1 in other.coeffs.items():
                w = c0 * c1
                if not w:
                    continue
                j = j0 + j1
                if j >= p:
                    w = w.shift(0, 1)  # collect one factor b
                    j -= p
                for k in range(i1 + 1):
                    c = (comb(i1, k) * pow(j0, i1 - k, p)) % p
                    if c == 0:
                        continue
                    m = i0 + k
                    term = w.scale(c)
                    if m >= p:
                        # m <= 2p-2, so one application of x^p = x + a lands
                        # both pieces back in range.
                        acc((m - p + 1, j), term)
                        acc((m - p, j), term * alpha)
                    else:
                        acc((m, j), term)
        return AlgebraElem(p, out)

    def __pow__(self, n: int) -> "AlgebraElem":
        """n-fold product; n = 0 gives the identity."""
        if n < 0:
            raise ValueError("negative powers are not defined in the algebra")
        acc = AlgebraElem.one(self.p)
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
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElem):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        from .expr import render_element  # local import: expr depends on us

        return f"AlgebraElem({self.p}, {render_element(self)!r})"


def shift_x(z: AlgebraElem, k: int = 1) -> AlgebraElem:
    """Substitute x -> x + k in an element of F[x].

    This realizes the F-fixing ring automorphism generated by x -> x + 1;
    input x-powers are already < p, so only binomial expansion is needed.
    Raises ValueError when z has support outside F[x].
    """
    if not z.is_in_fx():
        raise ValueError("element is not in F[x]")
    p = z.p
    k %= p
    if k == 0:
        return z
    out: dict[Cell, LaurentPoly] = {}
    for (i, _), c in z.coeffs.items():
        for ell in range(i + 1):
            cc = (comb(i, ell) * pow(k, i - ell, p)) % p
            if cc == 0:
                continue
            cell = (ell, 0)
            cur = out.get(cell)
            add = c.scale(cc)
            out[cell] = add if cur is None else cur + add
    return AlgebraElem(p, out)
