"""Exact arithmetic in the prime field GF(p) for a runtime-chosen prime p.

Field elements are plain Python ints kept in canonical form (the
representative in [0, p)); the modulus is passed alongside rather than
boxed per element.  All callers in this package reduce immediately after
every operation, so no value ever leaves the canonical range.
"""

from functools import lru_cache

# Algebra elements live on a p x p basis grid and the binomial tables for
# the multiplication rule are built per call, so large primes buy nothing.
MAX_ALGEBRA_PRIME = 13


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check (n is tiny here)."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@lru_cache(maxsize=None)
def check_prime(p: int) -> int:
    """Validate a modulus once; raises ValueError for non-primes."""
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    return p


def check_algebra_prime(p: int) -> int:
    """Primes accepted for algebra operations (p <= MAX_ALGEBRA_PRIME)."""
    check_prime(p)
    if p > MAX_ALGEBRA_PRIME:
        raise ValueError(
            f"prime {p} too large for algebra operations (max {MAX_ALGEBRA_PRIME})"
        )
    return p


def fp_inv(a: int, p: int) -> int:
    """Multiplicative inverse of a mod p.  Raises on a == 0 (mod p)."""
    check_prime(p)
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    # Fermat: a^(p-2) * a == 1 for prime p.
    return pow(a, p - 2, p)


def power_sum(p: int, ell: int) -> int:
    """Sum of k^ell over all residues k in [0, p), reduced mod p.

    Vanishes for 0 <= ell <= p-2 and equals p-1 when ell = p-1; this is
    what makes the trace of low powers of the generator x collapse.
    """
    check_prime(p)
    if ell < 0:
        raise ValueError("exponent must be non-negative")
    return sum(pow(k, ell, p) for k in range(p)) % p
