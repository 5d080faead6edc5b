"""Prime-field scalars: field selection, modular arithmetic, polynomial roots.

Everything downstream computes over F_p for an odd prime p chosen so that
the multiplicative group contains the roots of unity a commutation factor
can take (e | p - 1 for the grading-group exponent e).  No floating point
is used anywhere in the library.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Exhaustive root scans stay exact but are only reasonable for moderate p.
ROOT_SCAN_LIMIT = 10**6
# m * (p-1)^2 must fit comfortably in int64 for the numpy matrix kernels.
PRIME_CAP = 1 << 25
# Dirichlet guarantees the prime search terminates; the cap guards bugs.
PRIME_SEARCH_CAP = 10**9


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for the moduli used here."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """An odd prime field F_p serving a grading group of exponent e.

    Invariants: p is an odd prime and e | p - 1, so F_p contains an element
    of exact multiplicative order e (hence all the roots of unity a valid
    commutation factor on the group can take).
    """

    p: int
    e: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.p == 2:
            raise ValueError("characteristic 2 is not supported")
        if self.p > PRIME_CAP:
            raise ValueError(f"p={self.p} exceeds the supported cap {PRIME_CAP}")
        if self.e < 1:
            raise ValueError(f"e={self.e} must be a positive integer")
        if (self.p - 1) % self.e != 0:
            raise ValueError(f"e={self.e} does not divide p-1={self.p - 1}")

    def normalize(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return pow(a, -1, self.p)

    def neg_one(self) -> int:
        return self.p - 1

    def multiplicative_generator(self) -> int:
        """Smallest generator of the cyclic group F_p^*."""
        qs = _prime_factors(self.p - 1)
        for g in range(2, self.p):
            if all(pow(g, (self.p - 1) // q, self.p) != 1 for q in qs):
                return g
        raise RuntimeError("no generator found; p is not prime?")

    def element_of_order(self, k: int) -> int:
        """An element of exact multiplicative order k (requires k | p - 1)."""
        if k < 1 or (self.p - 1) % k != 0:
            raise ValueError(f"order {k} does not divide p-1={self.p - 1}")
        g = self.multiplicative_generator()
        return pow(g, (self.p - 1) // k, self.p)

    def to_obj(self) -> dict:
        return {"p": self.p, "e": self.e}

    @classmethod
    def from_obj(cls, obj: dict) -> "FieldSpec":
        return cls(p=int(obj["p"]), e=int(obj["e"]))


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def field_for_group(e: int, min_p: int = 3) -> FieldSpec:
    """Smallest odd prime p >= max(3, min_p) with e | p - 1."""
    if e < 1:
        raise ValueError("e must be a positive integer")
    p = max(3, min_p)
    while p <= PRIME_SEARCH_CAP:
        if is_prime(p) and p != 2 and (p - 1) % e == 0:
            return FieldSpec(p=p, e=e)
        p += 1
    raise RuntimeError(f"no prime found for e={e} below {PRIME_SEARCH_CAP}")


def poly_eval(coeffs: list[int], x: int, p: int) -> int:
    """Evaluate a polynomial given by ascending coefficients at x over F_p."""
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def _synthetic_divide(coeffs: list[int], a: int, p: int) -> tuple[list[int], int]:
    """Divide by (x - a); returns (quotient ascending, remainder)."""
    n = len(coeffs) - 1
    out = [0] * n
    acc = 0
    for i in range(n, 0, -1):
        acc = (acc * a + coeffs[i]) % p
        out[i - 1] = acc
    rem = (acc * a + coeffs[0]) % p
    return out, rem


@dataclass(frozen=True)
class PolyRoots:
    """Roots in F_p with multiplicity, plus whether the polynomial splits."""

    roots: tuple[int, ...]
    splits: bool


def roots_in_field(coeffs: list[int], field: FieldSpec) -> PolyRoots:
    """All roots in F_p of a nonzero polynomial, with multiplicity.

    Coefficients are ascending (coeffs[i] is the coefficient of x^i).  The
    search is an exhaustive scan over [0, p), dividing out each root to
    count multiplicity; exact and deterministic, so roots come back in
    ascending order.
    """
    p = field.p
    if p > ROOT_SCAN_LIMIT:
        raise ValueError(f"exhaustive root scan disabled for p > {ROOT_SCAN_LIMIT}")
    cs = [c % p for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise ValueError("the zero polynomial has no well-defined root set")
    degree = len(cs) - 1
    roots: list[int] = []
    for a in range(p):
        while len(cs) > 1 and poly_eval(cs, a, p) == 0:
            cs, rem = _synthetic_divide(cs, a, p)
            assert rem == 0
            roots.append(a)
        if len(cs) == 1:
            break
    return PolyRoots(roots=tuple(roots), splits=len(roots) == degree)
