"""Lucas primitive roots: roots of x^2 - ax - 1 generating F_q^x.

Specialized to b = 1.  Provides the gamma -> a construction, LPR
detection for a given a, and exhaustive enumeration of all a values
admitting an LPR when q = 3 (mod 4).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadFieldShapeError,
    DegenerateGammaError,
    EvenCharacteristicError,
    WrongClassificationError,
    WrongResidueClassError,
    ZeroElementError,
)
from .fields import (
    DistinctSplit,
    FieldDescriptor,
    FieldElement,
    Repeated,
    enumerate_units,
    is_prime,
    multiplicative_order,
    quadratic_roots,
)


@dataclass(frozen=True)
class LprReport:
    """Roots of x^2 - ax - 1 with their orders and generator flags."""

    a: FieldElement
    roots: tuple[tuple[FieldElement, int, bool], ...]  # (root, order, is_generator)
    lpr_count: int


def a_from_gamma(gamma: FieldElement) -> FieldElement:
    """a = gamma - gamma^-1, making gamma a root of x^2 - ax - 1."""
    if gamma.is_zero():
        raise ZeroElementError("gamma must be nonzero")
    return gamma - gamma.inv()


def conjugate_root(gamma: FieldElement) -> FieldElement:
    """The other root -gamma^-1; the product of the pair is -1 as required."""
    if gamma.is_zero():
        raise ZeroElementError("gamma must be nonzero")
    return -gamma.inv()


def lpr_status(F: FieldDescriptor, a: FieldElement) -> LprReport:
    """Classify x^2 - ax - 1 and flag which roots generate F_q^x.

    For q = 3 (mod 4) the count is 0 or 1, never 2; for q = 1 (mod 4)
    with a split polynomial it is 0 or 2.
    """
    if F.p == 2:
        raise EvenCharacteristicError("LPRs are defined in odd characteristic")
    cls = quadratic_roots(F, a, F.one())
    if isinstance(cls, DistinctSplit):
        found = [cls.gamma1, cls.gamma2]
    elif isinstance(cls, Repeated):
        found = [cls.gamma]
    else:
        found = []
    roots = []
    for r in found:
        order = multiplicative_order(r)
        roots.append((r, order, order == F.q - 1))
    return LprReport(a, tuple(roots), sum(1 for _, _, g in roots if g))


def enumerate_lpr_as(
        F: FieldDescriptor,
) -> list[tuple[FieldElement, FieldElement, FieldElement]]:
    """All (gamma, conjugate, a) triples whose a admits exactly one LPR.

    Requires q = 3 (mod 4), so q = 2s + 1 with s odd.  gamma runs over
    the phi(s) elements of order s; the conjugate -gamma^-1 then has
    order 2s = q - 1 and is the unique LPR for a = gamma - gamma^-1.
    Sorted by the canonical encoding of a.
    """
    if F.q % 4 != 3:
        raise WrongResidueClassError(f"q = {F.q} is not 3 mod 4")
    s = (F.q - 1) // 2
    triples = []
    seen = set()
    for gamma in enumerate_units(F):
        if multiplicative_order(gamma) != s:
            continue
        a = a_from_gamma(gamma)
        if a.index in seen:
            continue
        seen.add(a.index)
        triples.append((gamma, conjugate_root(gamma), a))
    triples.sort(key=lambda t: t[2].index)
    return triples


def sophie_germain_a(F: FieldDescriptor, gamma: FieldElement) -> FieldElement:
    """For q = 2p + 1 (p an odd prime) and gamma outside {1, -1},
    a = gamma - gamma^-1 is guaranteed to yield exactly one LPR."""
    s = (F.q - 1) // 2
    if F.q % 2 == 0 or s % 2 == 0 or not is_prime(s):
        raise BadFieldShapeError(f"q = {F.q} is not 2p+1 with p an odd prime")
    if gamma == F.one() or gamma == -F.one():
        raise DegenerateGammaError("gamma must differ from 1 and -1")
    return a_from_gamma(gamma)


def lpr_upper_bound_check(F: FieldDescriptor, a: FieldElement) -> bool:
    """q = 1 (mod 4), split polynomial, no LPRs: both root orders must be
    bounded by 2s where q - 1 = 2^t * s with s odd."""
    if F.q % 4 != 1:
        raise WrongResidueClassError(f"q = {F.q} is not 1 mod 4")
    report = lpr_status(F, a)
    if len(report.roots) != 2:
        raise WrongClassificationError("bound check requires distinct split roots")
    if report.lpr_count != 0:
        raise WrongClassificationError("bound check applies to the no-LPR case")
    s = F.q - 1
    while s % 2 == 0:
        s //= 2
    return all(order <= 2 * s for _, order, _ in report.roots)
