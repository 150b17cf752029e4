"""Word-rewriting oracle for products in the symbol algebra.

Deliberately slow and independent of the binomial fast path in
symbolp.algebra: a product of two basis monomials is formed as a literal
letter word, then rewritten one relation application at a time.

  * leftmost "y x" becomes the two words "x y" and "y"   (y x = x y + y)
  * a sorted word x^m y^n with m >= p loses one x-power via
    x^m = x^{m-p+1} + a x^{m-p}                          (x^p = x + a)
  * y^n with n >= p drops p y-letters and collects a factor b

The accumulated normal form is returned as an AlgebraElem for direct
comparison.
"""

from symbolp.algebra import AlgebraElem
from symbolp.laurent import LaurentPoly


def mono_mul_rewrite(p: int, i0: int, j0: int, i1: int, j1: int) -> AlgebraElem:
    """(x^i0 y^j0) * (x^i1 y^j1) by exhaustive single-step rewriting."""
    word = ("x",) * i0 + ("y",) * j0 + ("x",) * i1 + ("y",) * j1
    out: dict[tuple[int, int], LaurentPoly] = {}
    stack = [(LaurentPoly.one(p), word)]
    while stack:
        coeff, w = stack.pop()
        pos = next((k for k in range(len(w) - 1) if w[k] == "y" and w[k + 1] == "x"), None)
        if pos is not None:
            stack.append((coeff, w[:pos] + ("x", "y") + w[pos + 2:]))
            stack.append((coeff, w[:pos] + ("y",) + w[pos + 2:]))
            continue
        m = w.count("x")
        n = w.count("y")
        if m >= p:
            stack.append((coeff, ("x",) * (m - p + 1) + ("y",) * n))
            stack.append((coeff * LaurentPoly.alpha(p), ("x",) * (m - p) + ("y",) * n))
            continue
        while n >= p:
            coeff = coeff * LaurentPoly.beta(p)
            n -= p
        cell = (m, n)
        cur = out.get(cell)
        out[cell] = coeff if cur is None else cur + coeff
    return AlgebraElem(p, {c: v for c, v in out.items() if v})


def elem_mul_rewrite(z0: AlgebraElem, z1: AlgebraElem) -> AlgebraElem:
    """Bilinear extension of mono_mul_rewrite."""
    if z0.p != z1.p:
        raise ValueError("mixed moduli")
    p = z0.p
    acc = AlgebraElem.zero(p)
    for (i0, j0), c0 in z0.coeffs.items():
        for (i1, j1), c1 in z1.coeffs.items():
            acc = acc + mono_mul_rewrite(p, i0, j0, i1, j1).scale(c0 * c1)
    return acc
