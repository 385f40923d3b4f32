"""Exact arithmetic in finite fields F_p and F_{p^k}.

Elements of F_{p^k} are residue classes of F_p[x] modulo a fixed monic
irreducible polynomial, stored as fully reduced coefficient tuples
(low-degree first).  The canonical integer encoding of an element is
sum(coeffs[i] * p^i), which is the wire/CLI representation and the
ordering used everywhere.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .errors import (
    DegreeMismatchError,
    DivisionByZeroError,
    MixedFieldsError,
    NonUnitBError,
    NotPrimeError,
    ReducibleModulusError,
    ZeroElementError,
)

# Size caps: q^2 must stay inside machine-word friendly territory for
# arithmetic, and a q^2-entry visited table must fit in memory for full
# orbit enumeration.
ARITHMETIC_CAP = 2 ** 31
ENUMERATION_CAP = 2 ** 13
FACTOR_CAP = 2 ** 52

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (exact for n < 3.3 * 10^24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factor_integer(n: int) -> list[tuple[int, int]]:
    """Complete factorization of n >= 1 by trial division.

    Returns (prime, exponent) pairs with primes strictly increasing;
    factor_integer(1) == [].  Deterministic; intended for desk-scale
    n <= 2^52.
    """
    if n < 1:
        raise ValueError("factor_integer requires n >= 1")
    return list(_factor_cached(n))


@functools.lru_cache(maxsize=8192)
def _factor_cached(n: int) -> tuple[tuple[int, int], ...]:
    out: list[tuple[int, int]] = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                out.append((p, e))
        f += 6
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime_power(n: int) -> bool:
    """True iff n = p^e for a prime p and e >= 1."""
    return n > 1 and len(factor_integer(n)) == 1


# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p (coefficient lists, low-degree first)
# ---------------------------------------------------------------------------

def _gf2_mulmod(u: int, v: int, mod_bits: int, k: int) -> int:
    """Bit-packed multiply in F_2[x]/(mod); mod_bits has degree k."""
    prod = 0
    top = 1 << k
    while v:
        if v & 1:
            prod ^= u
        v >>= 1
        u <<= 1
        if u & top:
            u ^= mod_bits
    return prod


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(u: Sequence[int], v: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(u) + len(v) - 1)
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                out[i + j] = (out[i + j] + ui * vj) % p
    return out


def _poly_mod(u: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    # f must be monic
    r = list(u)
    df = len(f) - 1
    for i in range(len(r) - 1, df - 1, -1):
        c = r[i] % p
        if c:
            for j in range(df):
                r[i - df + j] = (r[i - df + j] - c * f[j]) % p
        r[i] = 0
    del r[df:]
    return r


def _poly_powmod(base: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    acc = _poly_mod(base, f, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, acc, p), f, p)
        e >>= 1
        if e:
            acc = _poly_mod(_poly_mul(acc, acc, p), f, p)
    result += [0] * (len(f) - 1 - len(result))
    return result


def _poly_gcd(u: Sequence[int], v: Sequence[int], p: int) -> list[int]:
    a, b = _poly_trim(list(u)), _poly_trim(list(v))
    while b:
        inv_lead = pow(b[-1], p - 2, p)
        bm = [(c * inv_lead) % p for c in b]  # monic divisor
        r = _poly_trim(_poly_mod(a, bm, p))
        a, b = b, r
    return a


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test: f (monic, degree k >= 1) is irreducible over F_p iff
    x^(p^k) == x mod f and gcd(x^(p^(k/t)) - x, f) = 1 for every prime t | k."""
    k = len(f) - 1
    if k == 1:
        return True
    x = [0, 1]
    for t, _ in factor_integer(k):
        h = _poly_powmod(x, p ** (k // t), f, p)
        h[1] = (h[1] - 1) % p
        g = _poly_gcd(h, f, p)
        if len(g) != 1:
            return False
    h = _poly_powmod(x, p ** k, f, p)
    h[1] = (h[1] - 1) % p
    return not _poly_trim(h)


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """The lexicographically smallest monic irreducible of degree k over F_p.

    Candidates are scanned with the constant term varying slowest
    (coefficients compared low-degree first), so the choice is
    deterministic across runs.
    """
    for tail in itertools.product(range(p), repeat=k):
        f = list(tail) + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# field descriptor and elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class FieldDescriptor:
    """A finite field F_{p^k}, fixed by characteristic, degree and modulus.

    Immutable and safe to share across concurrent tasks.  For k = 1 the
    modulus is implicit (None).
    """

    p: int
    k: int
    modulus: tuple[int, ...] | None
    q: int

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.k)

    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.k - 1))

    def element(self, coeffs: Sequence[int]) -> "FieldElement":
        if len(coeffs) > self.k:
            raise DegreeMismatchError(
                f"expected at most {self.k} coefficients, got {len(coeffs)}")
        c = [x % self.p for x in coeffs]
        c += [0] * (self.k - len(c))
        return FieldElement(self, tuple(c))

    def from_index(self, index: int) -> "FieldElement":
        """Inverse of FieldElement.index: digits of index in base p."""
        if not 0 <= index < self.q:
            raise ValueError(f"index {index} out of range for field of size {self.q}")
        coeffs = []
        for _ in range(self.k):
            index, c = divmod(index, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(coeffs))

    def __call__(self, value: Union[int, Sequence[int]]) -> "FieldElement":
        if isinstance(value, int):
            return self.from_index(value % self.q if self.k == 1 else value)
        return self.element(value)

    def elements(self) -> Iterator["FieldElement"]:
        """All q elements in ascending canonical-encoding order."""
        for i in range(self.q):
            yield self.from_index(i)

    def __repr__(self) -> str:
        if self.k == 1:
            return f"F_{self.p}"
        return f"F_{self.q} = F_{self.p}[x]/({_poly_str(self.modulus)})"


@functools.lru_cache(maxsize=256)
def _mod_bits(modulus: tuple[int, ...]) -> int:
    return sum(1 << i for i, c in enumerate(modulus) if c)


def _poly_str(coeffs: Sequence[int]) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append("x" if c == 1 else f"{c}x")
        else:
            terms.append(f"x^{i}" if c == 1 else f"{c}x^{i}")
    return " + ".join(terms) if terms else "0"


def make_field(p: int, k: int = 1,
               modulus: Sequence[int] | None = None) -> FieldDescriptor:
    """Validated construction of F_{p^k}.

    If modulus is omitted for k > 1, the deterministic default modulus is
    used.  The modulus is always verified irreducible.
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if k < 1:
        raise DegreeMismatchError(f"degree must be >= 1, got {k}")
    q = p ** k
    if q > ARITHMETIC_CAP:
        raise DegreeMismatchError(
            f"field size {q} exceeds the supported cap {ARITHMETIC_CAP}")
    if k == 1:
        return FieldDescriptor(p, 1, None, q)
    if modulus is None:
        mod = default_modulus(p, k)
    else:
        mod = tuple(c % p for c in modulus)
        if len(mod) != k + 1 or tuple(modulus)[-1] % p != 1:
            raise DegreeMismatchError(
                f"modulus must be monic of degree {k}, got {list(modulus)}")
        if not _is_irreducible(list(mod), p):
            raise ReducibleModulusError(
                f"{_poly_str(mod)} is reducible over F_{p}")
    return FieldDescriptor(p, k, mod, q)


@dataclass(frozen=True, slots=True)
class FieldElement:
    """An element of a FieldDescriptor in canonical reduced form.

    coeffs has exactly field.k entries, each in [0, p).  Equality and
    hashing are by value, so canonical form makes comparison exact.
    Immutable; all operations return new elements.
    """

    field: FieldDescriptor
    coeffs: tuple[int, ...]

    @property
    def index(self) -> int:
        """Canonical integer encoding sum(coeffs[i] * p^i)."""
        idx = 0
        for c in reversed(self.coeffs):
            idx = idx * self.field.p + c
        return idx

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def _check(self, other: "FieldElement") -> None:
        if self.field != other.field:
            raise MixedFieldsError(
                f"operands belong to {self.field!r} and {other.field!r}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple(
            (a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple(
            (a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElement":
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        F = self.field
        if F.k == 1:
            return FieldElement(F, ((self.coeffs[0] * other.coeffs[0]) % F.p,))
        if F.p == 2:
            # in characteristic 2 the canonical encoding is a bit vector
            prod = _gf2_mulmod(self.index, other.index, _mod_bits(F.modulus), F.k)
            return FieldElement(F, tuple((prod >> i) & 1 for i in range(F.k)))
        prod = _poly_mod(_poly_mul(self.coeffs, other.coeffs, F.p), F.modulus, F.p)
        prod += [0] * (F.k - len(prod))
        return FieldElement(F, tuple(prod))

    def inv(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZeroError("zero has no multiplicative inverse")
        # the unit group has order q - 1
        return self ** (self.field.q - 2)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inv()

    def __pow__(self, e: int) -> "FieldElement":
        F = self.field
        if e < 0:
            return self.inv() ** (-e)
        if F.k == 1:
            return FieldElement(F, (pow(self.coeffs[0], e, F.p),))
        if F.p == 2:
            mod_bits = _mod_bits(F.modulus)
            result, acc = 1, self.index
            while e:
                if e & 1:
                    result = _gf2_mulmod(result, acc, mod_bits, F.k)
                e >>= 1
                if e:
                    acc = _gf2_mulmod(acc, acc, mod_bits, F.k)
            return FieldElement(F, tuple((result >> i) & 1 for i in range(F.k)))
        out = _poly_powmod(self.coeffs, e, F.modulus, F.p)
        return FieldElement(F, tuple(out))

    def __repr__(self) -> str:
        return f"<{_poly_str(self.coeffs)} of F_{self.field.q}>"


def enumerate_units(F: FieldDescriptor) -> Iterator[FieldElement]:
    """The q-1 nonzero elements, once each, ascending by canonical encoding."""
    for i in range(1, F.q):
        yield F.from_index(i)


def multiplicative_order(e: FieldElement) -> int:
    """Smallest l >= 1 with e^l = 1, via divisor peeling on q - 1."""
    if e.is_zero():
        raise ZeroElementError("zero has no multiplicative order")
    l = e.field.q - 1
    for prime, _ in factor_integer(l):
        while l % prime == 0 and (e ** (l // prime)).is_one():
            l //= prime
    return l


# ---------------------------------------------------------------------------
# quadratic root finding for x^2 - a*x - b
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class DistinctSplit:
    """x^2 - ax - b has two distinct roots in F_q, gamma1 < gamma2 by encoding."""
    gamma1: FieldElement
    gamma2: FieldElement


@dataclass(frozen=True, slots=True)
class Repeated:
    """x^2 - ax - b = (x - gamma)^2 over F_q."""
    gamma: FieldElement


@dataclass(frozen=True)
class Irreducible:
    """x^2 - ax - b is irreducible over F_q; gamma is the coset of x in the
    quadratic extension F_q[x]/(x^2 - ax - b)."""
    ext: "QuadraticExtension"
    gamma: tuple[FieldElement, FieldElement]


RootClassification = Union[DistinctSplit, Repeated, Irreducible]


class QuadraticExtension:
    """F_{q^2} presented as F_q[y]/(y^2 - a*y - b) over an arbitrary base field.

    Elements are (u, v) pairs of base-field elements standing for u + v*y.
    This representation works uniformly whether the base field is prime or
    itself an extension of F_p.
    """

    def __init__(self, base: FieldDescriptor, a: FieldElement, b: FieldElement):
        self.base = base
        self.a = a
        self.b = b
        self.q2 = base.q ** 2

    def one(self) -> tuple[FieldElement, FieldElement]:
        return (self.base.one(), self.base.zero())

    def gamma(self) -> tuple[FieldElement, FieldElement]:
        """The coset of y, a root of x^2 - ax - b by construction."""
        return (self.base.zero(), self.base.one())

    def embed(self, u: FieldElement) -> tuple[FieldElement, FieldElement]:
        return (u, self.base.zero())

    def is_one(self, e: tuple[FieldElement, FieldElement]) -> bool:
        return e[0].is_one() and e[1].is_zero()

    def mul(self, e1, e2):
        # (u1 + v1 y)(u2 + v2 y) with y^2 = a y + b
        u1, v1 = e1
        u2, v2 = e2
        vv = v1 * v2
        return (u1 * u2 + vv * self.b, u1 * v2 + u2 * v1 + vv * self.a)

    def pow(self, e, n: int):
        result = self.one()
        acc = e
        while n:
            if n & 1:
                result = self.mul(result, acc)
            n >>= 1
            if n:
                acc = self.mul(acc, acc)
        return result

    def frobenius(self, e):
        """e^q, which permutes the roots of the quadratic."""
        return self.pow(e, self.base.q)

    def order(self, e) -> int:
        """Multiplicative order in F_{q^2}^x, by divisor peeling on q^2 - 1."""
        return self.order_dividing(e, self.q2 - 1)

    def order_dividing(self, e, n: int) -> int:
        """Order of e given that e^n = 1 (peels the divisors of n)."""
        if e[0].is_zero() and e[1].is_zero():
            raise ZeroElementError("zero has no multiplicative order")
        l = n
        for prime, _ in factor_integer(l):
            while l % prime == 0 and self.is_one(self.pow(e, l // prime)):
                l //= prime
        return l

    def root_order(self) -> int:
        """Order of the coset of y.  Its norm y^(q+1) equals -b, so the
        order divides (q+1) * |-b|, a much smaller peel than q^2 - 1."""
        r = multiplicative_order(-self.b)
        return self.order_dividing(self.gamma(), (self.base.q + 1) * r)

    def __repr__(self) -> str:
        return f"F_{self.q2} over {self.base!r}"


def _sqrt_mod_prime(n: int, p: int) -> int | None:
    """Tonelli-Shanks square root mod an odd prime; None for non-residues."""
    n %= p
    if n == 0:
        return 0
    if pow(n, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(n, (p + 1) // 4, p)
    # write p - 1 = 2^s * t with t odd
    t, s = p - 1, 0
    while t % 2 == 0:
        t //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c = s, pow(z, t, p)
    u, r = pow(n, t, p), pow(n, (t + 1) // 2, p)
    while u != 1:
        i, x = 0, u
        while x != 1:
            x = x * x % p
            i += 1
        bexp = pow(c, 1 << (m - i - 1), p)
        m, c = i, bexp * bexp % p
        u, r = u * c % p, r * bexp % p
    return r


@functools.lru_cache(maxsize=8)
def _root_table(F: FieldDescriptor) -> dict[tuple[int, int], list[FieldElement]]:
    """Roots of x^2 - a*x - b for every (a, b) over F, bucketed by index pair.

    Built by inversion: each t is a root of the quadratic with b = t^2 - a*t,
    so one O(q^2) pass covers all q^2 coefficient pairs at once.  Pays off
    when many pairs over the same small field are classified, as in sweeps.
    """
    table: dict[tuple[int, int], list[FieldElement]] = {}
    for a in F.elements():
        for t in F.elements():
            b = t * t - a * t
            table.setdefault((a.index, b.index), []).append(t)
    return table


# above this the per-query O(q) scan is cheaper than amortizing a table
_ROOT_TABLE_MAX_Q = 512


def quadratic_roots(F: FieldDescriptor, a: FieldElement,
                    b: FieldElement) -> RootClassification:
    """Classify x^2 - a*x - b over F.

    Odd-characteristic prime fields go through the discriminant
    Delta = a^2 + 4b and Tonelli-Shanks; characteristic 2 and extension
    fields use an exhaustive O(q) root scan, which is free at desk scale.
    Roots are verified by substitution before returning.
    """
    if b.is_zero():
        raise NonUnitBError("b must be a unit")
    if a.field != F or b.field != F:
        raise MixedFieldsError("a and b must belong to F")

    roots: list[FieldElement] = []
    if F.k == 1 and F.p != 2:
        p = F.p
        av, bv = a.coeffs[0], b.coeffs[0]
        delta = (av * av + 4 * bv) % p
        if delta == 0:
            roots = [F((av * pow(2, p - 2, p)) % p)]
        else:
            s = _sqrt_mod_prime(delta, p)
            if s is not None:
                inv2 = pow(2, p - 2, p)
                roots = [F(((av + s) * inv2) % p), F(((av - s) * inv2) % p)]
    elif F.q <= _ROOT_TABLE_MAX_Q:
        roots = list(_root_table(F).get((a.index, b.index), []))
    else:
        for t in F.elements():
            if (t * t - a * t - b).is_zero():
                roots.append(t)

    for r in roots:
        assert (r * r - a * r - b).is_zero(), "root verification failed"

    if len(roots) == 2:
        g1, g2 = sorted(roots, key=lambda e: e.index)
        return DistinctSplit(g1, g2)
    if len(roots) == 1:
        # over a field a quadratic with a single distinct root has it doubled
        return Repeated(roots[0])
    ext = QuadraticExtension(F, a, b)
    return Irreducible(ext, ext.gamma())
