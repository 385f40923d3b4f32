"""Orbit structure of the cyclic group generated by Q = [[a, b], [1, 0]].

Q acts on F_q x F_q; orbits correspond to the linear recurrence
x_{n+2} = a*x_{n+1} + b*x_n under different initial conditions.  This
module classifies Q by the factorization shape of x^2 - ax - b, predicts
the full orbit spectrum analytically, enumerates it by brute force with
a visited-table sweep, and cross-checks the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import lcm

from .errors import (
    FieldTooLargeError,
    MixedFieldsError,
    NonUnitBError,
    NotPrimePowerError,
    WrongClassificationError,
    ZeroVectorError,
)
from .fields import (
    ENUMERATION_CAP,
    DistinctSplit,
    FieldDescriptor,
    FieldElement,
    Irreducible,
    Repeated,
    RootClassification,
    is_prime_power,
    multiplicative_order,
    quadratic_roots,
)

Vector = tuple[FieldElement, FieldElement]


@dataclass(frozen=True)
class Companion:
    """The pair (a, b) over a field, with b a unit so Q is invertible."""

    field: FieldDescriptor
    a: FieldElement
    b: FieldElement

    def __post_init__(self):
        if self.a.field != self.field or self.b.field != self.field:
            raise MixedFieldsError("a and b must belong to the companion's field")
        if self.b.is_zero():
            raise NonUnitBError("b must be a unit")


@dataclass(frozen=True)
class OrbitSpectrum:
    """Multiset of (orbit length, orbit count) over the q^2 - 1 non-zero
    points; the trivial fixed point (0, 0) is never included."""

    entries: tuple[tuple[int, int], ...]  # lengths strictly increasing

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> "OrbitSpectrum":
        return cls(tuple(sorted((l, c) for l, c in counts.items() if c)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def lengths(self) -> list[int]:
        return [l for l, _ in self.entries]

    def counts(self) -> list[int]:
        return [c for _, c in self.entries]

    def total_orbits(self) -> int:
        return sum(c for _, c in self.entries)

    def total_points(self) -> int:
        return sum(l * c for l, c in self.entries)


class BasisCase(Enum):
    EIGENLINE_ONE = "eigenline_one"
    EIGENLINE_TWO = "eigenline_two"
    GENERIC = "generic"
    JORDAN_TOP = "jordan_top"
    JORDAN_GENERIC = "jordan_generic"
    EXT_GENERIC = "ext_generic"


@dataclass(frozen=True)
class VectorClass:
    predicted_length: int
    basis_case: BasisCase


def classify(Q: Companion) -> RootClassification:
    """Factorization shape of x^2 - a*x - b over the companion's field."""
    return quadratic_roots(Q.field, Q.a, Q.b)


def step(Q: Companion, v: Vector) -> Vector:
    """One application of Q: (x1, x0) -> (a*x1 + b*x0, x1)."""
    x1, x0 = v
    return (Q.a * x1 + Q.b * x0, x1)


def orbit_length_of(Q: Companion, v: Vector) -> int:
    """Smallest l >= 1 with Q^l v = v, by direct iteration."""
    if v[0].is_zero() and v[1].is_zero():
        raise ZeroVectorError("the trivial fixed point has no non-trivial orbit")
    w = step(Q, v)
    l = 1
    while w != v:
        w = step(Q, w)
        l += 1
    return l


# ---------------------------------------------------------------------------
# brute-force enumeration
# ---------------------------------------------------------------------------

def _scalar_mul_row(Q: Companion, s: FieldElement) -> list[int]:
    """index -> index table of e -> s*e over the whole field."""
    F = Q.field
    q, p, k = F.q, F.p, F.k
    if k == 1:
        sv = s.coeffs[0]
        return [sv * i % p for i in range(q)]
    if p == 2:
        # multiplication is linear over F_2: xor the images of the basis
        basis = [(s * F.from_index(1 << j)).index for j in range(k)]
        out = [0] * q
        for j in range(k):
            bj, bit = basis[j], 1 << j
            for i in range(q):
                if i & bit:
                    out[i] ^= bj
        return out
    return [(s * e).index for e in F.elements()]


def _permutation(Q: Companion) -> list[int]:
    """The action of Q on point indices: idx(x1, x0) = enc(x1)*q + enc(x0)."""
    F = Q.field
    q, p, k = F.q, F.p, F.k
    mul_a = _scalar_mul_row(Q, Q.a)
    mul_b = _scalar_mul_row(Q, Q.b)
    perm = [0] * (q * q)
    pos = 0
    if k == 1:
        for x1 in range(q):
            ax = mul_a[x1]
            for mb in mul_b:
                perm[pos] = ((ax + mb) % p) * q + x1
                pos += 1
    elif p == 2:
        for x1 in range(q):
            ax = mul_a[x1]
            for mb in mul_b:
                perm[pos] = (ax ^ mb) * q + x1
                pos += 1
    else:
        # digitwise base-p addition of canonical indices
        pw = [p ** t for t in range(k)]
        digits = [F.from_index(i).coeffs for i in range(q)]
        for x1 in range(q):
            da = digits[mul_a[x1]]
            for mb in mul_b:
                db = digits[mb]
                idx = 0
                for t in range(k):
                    idx += (da[t] + db[t]) % p * pw[t]
                perm[pos] = idx * q + x1
                pos += 1
    return perm


def _partition(Q: Companion, record_lengths: bool = False):
    """Visited-table sweep over all q^2 points.

    Returns (counts, lengths) where counts maps orbit length -> number of
    non-trivial orbits and lengths (optional) maps point index -> length
    of its orbit.  The trivial fixed point (index 0) is skipped.
    """
    q = Q.field.q
    if q > ENUMERATION_CAP:
        raise FieldTooLargeError(
            f"q = {q} exceeds the enumeration cap {ENUMERATION_CAP}")
    perm = _permutation(Q)
    n_points = q * q
    visited = bytearray(n_points)
    counts: dict[int, int] = {}
    lengths = [0] * n_points if record_lengths else None
    cycle: list[int] = []
    for start in range(1, n_points):
        if visited[start]:
            continue
        j, n = start, 0
        if record_lengths:
            while not visited[j]:
                visited[j] = 1
                cycle.append(j)
                n += 1
                j = perm[j]
            for pt in cycle:
                lengths[pt] = n
            cycle.clear()
        else:
            while not visited[j]:
                visited[j] = 1
                n += 1
                j = perm[j]
        counts[n] = counts.get(n, 0) + 1
    return counts, lengths


def enumerate_spectrum(Q: Companion) -> OrbitSpectrum:
    """Exact orbit spectrum by brute force; the oracle for every prediction."""
    counts, _ = _partition(Q)
    return OrbitSpectrum.from_counts(counts)


# ---------------------------------------------------------------------------
# analytic prediction
# ---------------------------------------------------------------------------

def root_orders(cls: RootClassification) -> list[int]:
    """Multiplicative orders of the roots, ascending.  For the irreducible
    case this is the single shared order of gamma and gamma^q in F_{q^2}."""
    if isinstance(cls, DistinctSplit):
        return sorted((multiplicative_order(cls.gamma1),
                       multiplicative_order(cls.gamma2)))
    if isinstance(cls, Repeated):
        return [multiplicative_order(cls.gamma)]
    return [cls.ext.root_order()]


def predict_spectrum(Q: Companion,
                     cls: RootClassification | None = None) -> OrbitSpectrum:
    """Orbit spectrum predicted from the root classification alone.

    Distinct split: the two eigenlines contribute (q-1)/m orbits of
    length m and (q-1)/n of length n, generic vectors (q-1)^2/lcm(m, n)
    orbits of length lcm(m, n); coinciding lengths merge.  Repeated root
    of order l: (q-1)/l orbits of length l and q(q-1)/(p*l) of length
    p*l.  Irreducible: a single length l with (q^2-1)/l orbits.
    """
    F = Q.field
    q = F.q
    if cls is None:
        cls = classify(Q)
    counts: dict[int, int] = {}

    def bump(length: int, n_orbits: int) -> None:
        counts[length] = counts.get(length, 0) + n_orbits

    if isinstance(cls, DistinctSplit):
        m = multiplicative_order(cls.gamma1)
        n = multiplicative_order(cls.gamma2)
        L = lcm(m, n)
        bump(m, (q - 1) // m)
        bump(n, (q - 1) // n)
        bump(L, (q - 1) * (q - 1) // L)
    elif isinstance(cls, Repeated):
        l = multiplicative_order(cls.gamma)
        bump(l, (q - 1) // l)
        bump(F.p * l, q * (q - 1) // (F.p * l))
    else:
        l = cls.ext.root_order()
        bump(l, (q * q - 1) // l)
    return OrbitSpectrum.from_counts(counts)


def classify_vector(Q: Companion, v: Vector) -> VectorClass:
    """Predict the orbit length of one initial vector from its position
    relative to the eigenlines (or Jordan structure) of Q.

    A vector lies on the eigenline of gamma iff x1 = gamma * x0 with
    x0 != 0; eigenvectors normalize to (gamma, 1), so x0 = 0 is never on
    an eigenline.
    """
    x1, x0 = v
    if x1.is_zero() and x0.is_zero():
        raise ZeroVectorError("cannot classify the trivial fixed point")
    cls = classify(Q)
    if isinstance(cls, DistinctSplit):
        if not x0.is_zero():
            if x1 == cls.gamma1 * x0:
                return VectorClass(multiplicative_order(cls.gamma1),
                                   BasisCase.EIGENLINE_ONE)
            if x1 == cls.gamma2 * x0:
                return VectorClass(multiplicative_order(cls.gamma2),
                                   BasisCase.EIGENLINE_TWO)
        m = multiplicative_order(cls.gamma1)
        n = multiplicative_order(cls.gamma2)
        return VectorClass(lcm(m, n), BasisCase.GENERIC)
    if isinstance(cls, Repeated):
        l = multiplicative_order(cls.gamma)
        if not x0.is_zero() and x1 == cls.gamma * x0:
            return VectorClass(l, BasisCase.JORDAN_TOP)
        return VectorClass(Q.field.p * l, BasisCase.JORDAN_GENERIC)
    return VectorClass(cls.ext.root_order(), BasisCase.EXT_GENERIC)


# ---------------------------------------------------------------------------
# side conditions of the length formulas
# ---------------------------------------------------------------------------

def check_divisibility(Q: Companion, s: OrbitSpectrum) -> bool:
    """Distinct-split case only: every orbit length must divide q - 1."""
    if not isinstance(classify(Q), DistinctSplit):
        raise WrongClassificationError(
            "divisibility of q - 1 applies to the distinct-split case only")
    q = Q.field.q
    return all((q - 1) % l == 0 for l in s.lengths())


def irreducible_length_bound(Q: Companion) -> int:
    """Upper bound 2(q+1)|b^2| on the single orbit length, irreducible case."""
    if not isinstance(classify(Q), Irreducible):
        raise WrongClassificationError(
            "the 2(q+1)|b^2| bound applies to the irreducible case only")
    return 2 * (Q.field.q + 1) * multiplicative_order(Q.b * Q.b)


def primitive_root_census(Q: Companion) -> tuple[int, int]:
    """(number of roots generating F_q^x, total non-trivial orbits).

    Requires a distinct split with |-b| a prime power.  Two primitive
    roots iff exactly q+1 orbits; exactly one iff exactly q orbits of
    length q-1.
    """
    cls = classify(Q)
    if not isinstance(cls, DistinctSplit):
        raise WrongClassificationError("census requires distinct split roots")
    r = multiplicative_order(-Q.b)
    if not is_prime_power(r):
        raise NotPrimePowerError(f"|-b| = {r} is not a prime power")
    q = Q.field.q
    m = multiplicative_order(cls.gamma1)
    n = multiplicative_order(cls.gamma2)
    num_primitive = (m == q - 1) + (n == q - 1)
    return num_primitive, predict_spectrum(Q).total_orbits()


# ---------------------------------------------------------------------------
# full verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VerificationReport:
    companion: Companion
    classification: RootClassification
    predicted: OrbitSpectrum
    enumerated: OrbitSpectrum
    mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify(Q: Companion, check_vectors: bool = True) -> VerificationReport:
    """Cross-check every analytic claim against brute-force enumeration.

    Compares predict_spectrum with enumerate_spectrum entry for entry,
    re-checks all applicable side conditions, and (optionally)
    checks the per-vector length prediction on every nonzero point.
    """
    F = Q.field
    q = F.q
    cls = classify(Q)
    predicted = predict_spectrum(Q, cls)
    counts, lengths = _partition(Q, record_lengths=check_vectors)
    enumerated = OrbitSpectrum.from_counts(counts)
    problems: list[str] = []

    if predicted != enumerated:
        problems.append(
            f"spectrum mismatch: predicted {predicted.as_dict()} "
            f"!= enumerated {enumerated.as_dict()}")
    if enumerated.total_points() != q * q - 1:
        problems.append(
            f"partition broken: sum length*count = {enumerated.total_points()}"
            f" != {q * q - 1}")

    if isinstance(cls, DistinctSplit):
        if not all((q - 1) % l == 0 for l in enumerated.lengths()):
            problems.append("a distinct-split orbit length does not divide q-1")
        r = multiplicative_order(-Q.b)
        if is_prime_power(r):
            ls = enumerated.lengths()
            l = ls[0]
            shape_ok = (len(ls) == 1) or (len(ls) == 2 and ls[1] % l == 0
                                          and is_prime_power(ls[1] // l))
            if not shape_ok:
                problems.append(
                    f"length shape {ls} impossible for |-b| = {r} a prime power")
            num, total = primitive_root_census(Q)
            if (num == 2) != (total == q + 1):
                problems.append("two-primitive-roots census condition violated")
            if (num == 1) != (enumerated.as_dict().get(q - 1, 0) == q):
                problems.append("one-primitive-root census condition violated")
    elif isinstance(cls, Repeated):
        l = multiplicative_order(cls.gamma)
        expected = {l: (q - 1) // l, F.p * l: q * (q - 1) // (F.p * l)}
        if enumerated.as_dict() != expected:
            problems.append(
                f"repeated-root spectrum {enumerated.as_dict()} != {expected}")
        if (q - 1) % (F.p * l) == 0:
            problems.append("length p*l unexpectedly divides q-1")
    else:
        ls = enumerated.lengths()
        if len(ls) != 1:
            problems.append(f"irreducible case has several lengths: {ls}")
        else:
            l = ls[0]
            if (q * q - 1) % l != 0:
                problems.append(f"length {l} does not divide q^2-1")
            if (q - 1) % l == 0:
                problems.append(f"length {l} divides q-1 in the irreducible case")
            if l > irreducible_length_bound(Q):
                problems.append(f"length {l} exceeds the 2(q+1)|b^2| bound")

    if check_vectors:
        problems.extend(_vector_check(Q, cls, lengths))

    return VerificationReport(Q, cls, predicted, enumerated, tuple(problems))


def _vector_check(Q: Companion, cls: RootClassification,
                  lengths: list[int], max_reports: int = 10) -> list[str]:
    """Compare the per-vector length prediction with the enumerated length
    of every nonzero point, using index tables for speed."""
    F = Q.field
    q = F.q
    problems: list[str] = []
    if isinstance(cls, DistinctSplit):
        m = multiplicative_order(cls.gamma1)
        n = multiplicative_order(cls.gamma2)
        L = lcm(m, n)
        row1 = _scalar_mul_row(Q, cls.gamma1)
        row2 = _scalar_mul_row(Q, cls.gamma2)

        def expected(x1: int, x0: int) -> int:
            if x0:
                if row1[x0] == x1:
                    return m
                if row2[x0] == x1:
                    return n
            return L
    elif isinstance(cls, Repeated):
        l = multiplicative_order(cls.gamma)
        pl = F.p * l
        row = _scalar_mul_row(Q, cls.gamma)

        def expected(x1: int, x0: int) -> int:
            return l if x0 and row[x0] == x1 else pl
    else:
        l = cls.ext.root_order()

        def expected(x1: int, x0: int) -> int:
            return l

    for idx in range(1, q * q):
        x1, x0 = divmod(idx, q)
        want = expected(x1, x0)
        if lengths[idx] != want:
            problems.append(
                f"vector (x1={x1}, x0={x0}): predicted length {want}, "
                f"enumerated {lengths[idx]}")
            if len(problems) >= max_reports:
                break
    return problems
