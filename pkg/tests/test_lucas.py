"""Lucas primitive roots: construction, detection, enumeration, bounds."""

import pytest

from orbitforge.errors import (
    BadFieldShapeError,
    DegenerateGammaError,
    EvenCharacteristicError,
    WrongClassificationError,
    WrongResidueClassError,
    ZeroElementError,
)
from orbitforge.fields import (
    DistinctSplit,
    enumerate_units,
    make_field,
    multiplicative_order,
    quadratic_roots,
)
from orbitforge.lucas import (
    a_from_gamma,
    conjugate_root,
    enumerate_lpr_as,
    lpr_status,
    lpr_upper_bound_check,
    sophie_germain_a,
)
from orbitforge.orbits import Companion, predict_spectrum

F5 = make_field(5)
F7 = make_field(7)
F13 = make_field(13)
F25 = make_field(5, 2, [3, 0, 1])
F27 = make_field(3, 3, [1, 2, 0, 1])  # F_3[x]/(x^3 - x + 1)


def test_a_from_gamma_examples():
    assert a_from_gamma(F7(2)) == F7(5)
    assert a_from_gamma(F7(4)) == F7(2)
    x = F27.element([0, 1])
    assert a_from_gamma(x) == F27.element([2, 1, 1])  # x^2 + x + 2
    with pytest.raises(ZeroElementError):
        a_from_gamma(F7(0))


def test_conjugate_root_examples():
    assert conjugate_root(F7(2)) == F7(3)
    assert conjugate_root(F7(4)) == F7(5)
    # gamma^2 = -1 is its own conjugate (the repeated-root case)
    gamma = F13(5)
    assert gamma * gamma == -F13.one()
    assert conjugate_root(gamma) == gamma


def test_round_trip_roots():
    """gamma and -gamma^-1 are exactly the roots of x^2 - ax - 1."""
    for F in (F7, F13, F25, F27):
        for gamma in enumerate_units(F):
            a = a_from_gamma(gamma)
            conj = conjugate_root(gamma)
            for r in (gamma, conj):
                assert (r * r - a * r - F.one()).is_zero()


def test_lpr_status_examples():
    rep = lpr_status(F7, F7(5))
    assert rep.lpr_count == 1
    assert sorted(o for _, o, _ in rep.roots) == [3, 6]

    rep = lpr_status(F25, F25.element([1, 1]))
    assert rep.lpr_count == 2
    assert [o for _, o, _ in rep.roots] == [24, 24]

    with pytest.raises(EvenCharacteristicError):
        lpr_status(make_field(2, 2), make_field(2, 2).one())


def test_enumerate_lpr_as_f7():
    triples = enumerate_lpr_as(F7)
    assert [a.index for _, _, a in triples] == [2, 5]
    for gamma, conj, _ in triples:
        assert multiplicative_order(gamma) == 3
        assert multiplicative_order(conj) == 6


def test_enumerate_lpr_as_f11():
    triples = enumerate_lpr_as(F11 := make_field(11))
    assert len(triples) == 4  # phi(5)
    for _, _, a in triples:
        assert lpr_status(F11, a).lpr_count == 1


def test_enumerate_lpr_as_wrong_residue():
    with pytest.raises(WrongResidueClassError):
        enumerate_lpr_as(F13)


@pytest.mark.parametrize("spec", [(7, 1), (11, 1), (19, 1), (23, 1),
                                  (3, 3), (31, 1)])
def test_q_3_mod_4_exhaustive(spec):
    """The enumerated list is exactly the set of a with one LPR, and no a
    ever has two, for q = 3 (mod 4)."""
    F = make_field(*spec) if spec != (3, 3) else F27
    listed = {a.index for _, _, a in enumerate_lpr_as(F)}
    s = (F.q - 1) // 2
    phi_s = sum(1 for u in enumerate_units(F)
                if multiplicative_order(u) == s)
    assert len(listed) == phi_s  # one a per order-s gamma, deduplicated
    for a in F.elements():
        count = lpr_status(F, a).lpr_count
        assert count in (0, 1)
        assert (count == 1) == (a.index in listed)


@pytest.mark.parametrize("spec", [(5, 1), (13, 1), (17, 1), (5, 2), (29, 1)])
def test_q_1_mod_4_split_two_or_none(spec):
    F = F25 if spec == (5, 2) else make_field(*spec)
    for a in F.elements():
        cls = quadratic_roots(F, a, F.one())
        rep = lpr_status(F, a)
        if isinstance(cls, DistinctSplit):
            assert rep.lpr_count in (0, 2)


def test_root_orders_match_orbit_lengths():
    """For b = 1 the root orders are orbit lengths of the companion."""
    for F in (F7, F13, make_field(3, 2), F27):
        for a in F.elements():
            rep = lpr_status(F, a)
            if not rep.roots:
                continue
            lengths = set(predict_spectrum(
                Companion(F, a, F.one())).lengths())
            assert {o for _, o, _ in rep.roots} <= lengths


def test_sophie_germain_a():
    assert sophie_germain_a(F7, F7(2)) == F7(5)
    with pytest.raises(DegenerateGammaError):
        sophie_germain_a(F7, F7(1))
    with pytest.raises(DegenerateGammaError):
        sophie_germain_a(F7, F7(6))
    with pytest.raises(BadFieldShapeError):
        sophie_germain_a(F13, F13(2))  # 13 != 2p+1 for odd prime p
    F23 = make_field(23)
    a = sophie_germain_a(F23, F23(5))
    assert lpr_status(F23, a).lpr_count == 1


def test_lpr_upper_bound_check():
    # F_13: q - 1 = 4*3, s = 3; every split no-LPR a obeys the 2s bound
    for a in F13.elements():
        cls = quadratic_roots(F13, a, F13.one())
        if isinstance(cls, DistinctSplit) and lpr_status(F13, a).lpr_count == 0:
            assert lpr_upper_bound_check(F13, a)
    F17 = make_field(17)
    for a in (1, 3, 6):
        cls = quadratic_roots(F17, F17(a), F17.one())
        if isinstance(cls, DistinctSplit) and lpr_status(F17, F17(a)).lpr_count == 0:
            assert lpr_upper_bound_check(F17, F17(a))
    with pytest.raises(WrongClassificationError):
        lpr_upper_bound_check(F5, F5(1))  # repeated root, not applicable
    with pytest.raises(WrongResidueClassError):
        lpr_upper_bound_check(F7, F7(1))
