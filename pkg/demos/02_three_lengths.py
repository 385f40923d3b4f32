"""Forcing three different orbit lengths with a CRT exponent split.

When |-b| is not a prime power it factors as r = m*n with gcd(m, n) = 1,
and powers of -b realize both factors as element orders.  Choosing
a = gamma1 + gamma2 for those powers yields a companion matrix whose
orbits come in three lengths m, n and m*n.  With |-b| a prime power this
is impossible: the spectrum then has at most two lengths.
"""

from orbitforge import Companion, crt_exponent_split, enumerate_spectrum, \
    make_field, multiplicative_order, three_length_construction
from orbitforge.errors import PrimePowerOrderError


def main():
    # pure exponent arithmetic first: split a cyclic group of order 15
    k1, k2 = crt_exponent_split(15, 3, 5)
    print(f"order 15 = 3 * 5: g^{k1} has order 3, g^{k2} has order 5,")
    print(f"and k1 + k2 = {k1 + k2} = 15 + 1, so the powers multiply to g")
    print()

    F = make_field(7)
    b = F(4)
    r = multiplicative_order(-b)
    a, g1, g2 = three_length_construction(F, b)
    print(f"F_7, b = 4: |-b| = |3| = {r} = 2 * 3")
    print(f"  constructed a = {a.index}, roots {g1.index} and {g2.index} "
          f"of orders {multiplicative_order(g1)}, {multiplicative_order(g2)}")
    spectrum = enumerate_spectrum(Companion(F, a, b))
    print(f"  enumerated spectrum: {spectrum.as_dict()}  (three lengths)")
    print()

    # every valid b over every field up to 32 gives at least three lengths
    total = 0
    for q, k in ((2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2),
                 (11, 1), (13, 1), (2, 4), (17, 1), (19, 1), (23, 1),
                 (5, 2), (3, 3), (29, 1), (31, 1), (2, 5)):
        F = make_field(q, k) if k > 1 else make_field(q)
        for i in range(1, F.q):
            b = F.from_index(i)
            try:
                a, _, _ = three_length_construction(F, b)
            except PrimePowerOrderError:
                continue
            lengths = enumerate_spectrum(Companion(F, a, b)).lengths()
            assert len(lengths) >= 3
            total += 1
    print(f"checked {total} constructed companions over q <= 32: "
          f"all have >= 3 orbit lengths")


if __name__ == "__main__":
    main()
