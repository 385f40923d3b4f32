"""Order relations for products in abelian groups.

Pure-integer predictions for the orders of gamma1, gamma2 given
gamma1 * gamma2 = gamma3 and the order of gamma3, plus the CRT exponent
split used to realize coprime-order factors of a cyclic subgroup.
Nothing here depends on any particular group; the orbit engine applies
these with -b in the role of gamma3.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NotCoprimeError, PrimePowerOrderError, ProductMismatchError
from .fields import FieldDescriptor, FieldElement, factor_integer, multiplicative_order

EQUAL = "equal"
SCALED = "scaled"


@dataclass(frozen=True, slots=True)
class PartnerPrediction:
    """Predicted relation |gamma2| = scaled_factor * |gamma1|."""

    kind: str  # EQUAL or SCALED
    scaled_factor: int

    def partner_order(self, m: int) -> int:
        return self.scaled_factor * m


def vp(n: int, p: int) -> int:
    """p-adic valuation: the largest e with p^e | n (n >= 1)."""
    if n < 1:
        raise ValueError("vp requires n >= 1")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def order_of_power(m: int, s: int) -> int:
    """Order of g^s when |g| = m: m / gcd(s, m)."""
    return m // gcd(s, m)


def power_keeps_p(m: int, s: int, p: int) -> bool:
    """True iff p still divides the order of g^s, i.e. vp(m) > vp(s)."""
    return vp(m, p) > vp(s, p)


def partner_order_prime(m: int, r: int) -> PartnerPrediction:
    """Partner order when |gamma3| = r is prime and m is the smaller order.

    Either r | m and the orders are equal, or gcd(r, m) = 1 and the
    partner order is r*m; prime r makes these cases exhaustive.
    """
    if m % r == 0:
        return PartnerPrediction(EQUAL, 1)
    return PartnerPrediction(SCALED, r)


def partner_order_prime_power(m: int, p: int, alpha: int) -> PartnerPrediction:
    """Partner order when |gamma3| = p^alpha and m has the smaller p-adic
    valuation: equal if vp(m) >= alpha, else scaled by p^(alpha - vp(m))."""
    k = vp(m, p)
    if k >= alpha:
        return PartnerPrediction(EQUAL, 1)
    return PartnerPrediction(SCALED, p ** (alpha - k))


def crt_exponent_split(r: int, m: int, n: int) -> tuple[int, int]:
    """Exponents (k1, k2) with g^k1, g^k2 of orders m, n and g^k1 * g^k2 = g.

    Requires r = m*n with gcd(m, n) = 1.  k1 is the unique solution in
    [1, r] of k1 = 0 (mod n), k1 = 1 (mod m); k2 = r + 1 - k1.
    """
    if gcd(m, n) != 1:
        raise NotCoprimeError(f"gcd({m}, {n}) != 1")
    if m * n != r:
        raise ProductMismatchError(f"{m} * {n} != {r}")
    if m == 1:
        k1 = r
    else:
        k1 = n * pow(n, -1, m) % r
        if k1 == 0:
            k1 = r
    return k1, r + 1 - k1


def three_length_construction(
        F: FieldDescriptor,
        b: FieldElement) -> tuple[FieldElement, FieldElement, FieldElement]:
    """Pick a so that the companion (a, b) has split roots of coprime orders.

    Requires r = |-b| to not be a prime power.  The coprime split is
    m = smallest prime power in r's factorization, n = r / m; then
    gamma1 = (-b)^k1 and gamma2 = (-b)^k2 have orders m and n, and
    a = gamma1 + gamma2 gives orbits of the three lengths m, n, m*n.
    """
    g = -b
    r = multiplicative_order(g)
    facts = factor_integer(r)
    if len(facts) < 2:
        raise PrimePowerOrderError(
            f"|-b| = {r} is a prime power; construction inapplicable")
    p1, e1 = facts[0]
    m = p1 ** e1
    n = r // m
    k1, k2 = crt_exponent_split(r, m, n)
    gamma1 = g ** k1
    gamma2 = g ** k2
    return gamma1 + gamma2, gamma1, gamma2
