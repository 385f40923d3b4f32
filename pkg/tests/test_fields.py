"""Field arithmetic, orders, factorization and quadratic root finding."""

import math

import pytest

from orbitforge.errors import (
    DegreeMismatchError,
    DivisionByZeroError,
    MixedFieldsError,
    NonUnitBError,
    NotPrimeError,
    ReducibleModulusError,
    ZeroElementError,
)
from orbitforge.fields import (
    DistinctSplit,
    Irreducible,
    Repeated,
    default_modulus,
    enumerate_units,
    factor_integer,
    is_prime,
    is_prime_power,
    make_field,
    multiplicative_order,
    quadratic_roots,
)

F5 = make_field(5)
F7 = make_field(7)
F13 = make_field(13)
F163 = make_field(163)
F25 = make_field(5, 2, [3, 0, 1])  # F_5[x]/(x^2 - 2)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 163, 2 ** 31 - 1}
    for n in primes:
        assert is_prime(n)
    for n in (0, 1, 4, 9, 25, 91, 561, 341550071728321):
        assert not is_prime(n)


def test_factor_examples():
    assert factor_integer(162) == [(2, 1), (3, 4)]
    assert factor_integer(624) == [(2, 4), (3, 1), (13, 1)]
    assert factor_integer(1) == []


def test_factor_product_and_ordering():
    for n in range(1, 2000):
        facts = factor_integer(n)
        assert math.prod(p ** e for p, e in facts) == n
        assert all(e >= 1 for _, e in facts)
        assert [p for p, _ in facts] == sorted(p for p, _ in facts)


def test_factor_rejects_zero():
    with pytest.raises(ValueError):
        factor_integer(0)


def test_is_prime_power():
    assert is_prime_power(8)
    assert is_prime_power(81)
    assert is_prime_power(7)
    assert not is_prime_power(1)
    assert not is_prime_power(6)
    assert not is_prime_power(100)


def test_make_field_validation():
    with pytest.raises(NotPrimeError):
        make_field(4, 2)
    with pytest.raises(DegreeMismatchError):
        make_field(5, 0)
    with pytest.raises(ReducibleModulusError):
        make_field(2, 2, [1, 0, 1])  # x^2 + 1 = (x + 1)^2 over F_2
    with pytest.raises(DegreeMismatchError):
        make_field(5, 2, [3, 0, 2])  # not monic
    with pytest.raises(DegreeMismatchError):
        make_field(2, 62)  # q over the arithmetic cap


def test_default_modulus_deterministic():
    assert make_field(3, 3) == make_field(3, 3)
    assert default_modulus(3, 3) == default_modulus(3, 3)
    f = default_modulus(5, 2)
    assert len(f) == 3 and f[-1] == 1


def test_prime_field_arithmetic():
    assert (F7(2).inv()) == F7(4)
    assert F163(23) * F163(149) == F163(4)
    assert F7(3) + F7(5) == F7(1)
    assert F7(3) - F7(5) == F7(5)
    assert -F7(3) == F7(4)
    assert F7(3) / F7(5) == F7(3) * F7(5).inv()
    assert F7(3) ** -1 == F7(3).inv()


def test_extension_field_arithmetic():
    x = F25.element([0, 1])
    assert x ** 2 == F25(2)  # modulus relation x^2 = 2
    one = F25.one()
    for e in F25.elements():
        if not e.is_zero():
            assert e * e.inv() == one


def test_mixed_fields_rejected():
    with pytest.raises(MixedFieldsError):
        F5(1) + F7(1)
    with pytest.raises(DivisionByZeroError):
        F7(0).inv()


def test_element_encoding_round_trip():
    for F in (F7, F25, make_field(2, 3)):
        for i in range(F.q):
            assert F.from_index(i).index == i


def test_multiplicative_order_examples():
    assert multiplicative_order(F13(4)) == 6
    assert multiplicative_order(F7(2)) == 3
    assert multiplicative_order(F7(1)) == 1
    with pytest.raises(ZeroElementError):
        multiplicative_order(F7(0))


@pytest.mark.parametrize("field", [
    make_field(2), make_field(3), make_field(2, 2), make_field(5),
    make_field(7), make_field(2, 3), make_field(3, 2), make_field(13),
    make_field(2, 4), make_field(5, 2), make_field(3, 3), make_field(31),
])
def test_order_matches_repeated_multiplication(field):
    one = field.one()
    for e in enumerate_units(field):
        acc, l = e, 1
        while acc != one:
            acc = acc * e
            l += 1
        assert multiplicative_order(e) == l
        assert (field.q - 1) % l == 0


def test_order_product_and_power_properties():
    for F in (F13, F25):
        units = list(enumerate_units(F))
        for e1 in units:
            o1 = multiplicative_order(e1)
            for s in range(1, 8):
                assert (multiplicative_order(e1 ** s)
                        == o1 // math.gcd(s, o1))
            for e2 in units[:6]:
                o2 = multiplicative_order(e2)
                assert math.lcm(o1, o2) % multiplicative_order(e1 * e2) == 0


def test_enumerate_units():
    assert [e.index for e in enumerate_units(make_field(3))] == [1, 2]
    assert len(list(enumerate_units(make_field(2, 2)))) == 3
    units25 = list(enumerate_units(F25))
    assert len(units25) == 24 and units25[0].is_one()


def test_quadratic_roots_examples():
    cls = quadratic_roots(F163, F163(9), F163(159))
    assert isinstance(cls, DistinctSplit)
    assert (cls.gamma1.index, cls.gamma2.index) == (23, 149)

    F3 = make_field(3)
    cls = quadratic_roots(F3, F3(2), F3(2))
    assert isinstance(cls, Repeated) and cls.gamma == F3(1)

    cls = quadratic_roots(F5, F5(1), F5(3))
    assert isinstance(cls, Irreducible)

    with pytest.raises(NonUnitBError):
        quadratic_roots(F5, F5(1), F5(0))


@pytest.mark.parametrize("field", [
    make_field(7), make_field(2, 3), make_field(3, 2),
])
def test_quadratic_roots_exhaustive_consistency(field):
    """Every classification agrees with a direct root scan and the
    root/coefficient relations gamma1 + gamma2 = a, gamma1 * gamma2 = -b."""
    for a in field.elements():
        for b in enumerate_units(field):
            scan = [t for t in field.elements()
                    if (t * t - a * t - b).is_zero()]
            cls = quadratic_roots(field, a, b)
            if isinstance(cls, DistinctSplit):
                assert sorted(r.index for r in scan) == [
                    cls.gamma1.index, cls.gamma2.index]
                assert cls.gamma1 + cls.gamma2 == a
                assert cls.gamma1 * cls.gamma2 == -b
            elif isinstance(cls, Repeated):
                assert [r.index for r in scan] == [cls.gamma.index]
                if field.p != 2:
                    assert cls.gamma + cls.gamma == a
                assert cls.gamma * cls.gamma == -b
            else:
                assert scan == []
                g = cls.ext.gamma()
                # the coset of x is a root by construction
                assert cls.ext.is_one(
                    cls.ext.pow(g, cls.ext.root_order()))


def test_extension_root_order_matches_full_peel():
    ext = quadratic_roots(F5, F5(1), F5(3)).ext
    assert ext.root_order() == ext.order(ext.gamma()) == 24
