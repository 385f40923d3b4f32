"""Lucas primitive roots: which a make x^2 - ax - 1 generate F_q^x.

A Lucas primitive root (LPR) is a root of x^2 - ax - 1 whose powers run
through all of F_q^x.  The residue of q mod 4 controls how many can
coexist: for q = 3 (mod 4) each admissible a has exactly one, for
q = 1 (mod 4) a split polynomial has two LPRs or none.
"""

from orbitforge import a_from_gamma, conjugate_root, enumerate_lpr_as, \
    lpr_status, make_field, multiplicative_order


def main():
    # q = 7 = 3 mod 4: exactly phi(3) = 2 admissible values of a
    F7 = make_field(7)
    print("F_7 (q = 3 mod 4):")
    for gamma, conj, a in enumerate_lpr_as(F7):
        print(f"  gamma = {gamma.index} (order {multiplicative_order(gamma)}),"
              f" conjugate = {conj.index} "
              f"(order {multiplicative_order(conj)}), a = {a.index}")
    print()

    # the F_27 table: 12 gamma values of order 13, one LPR each
    F27 = make_field(3, 3, [1, 2, 0, 1])  # F_3[x]/(x^3 - x + 1)
    rows = enumerate_lpr_as(F27)
    print(f"F_27 = F_3[x]/(x^3 - x + 1): {len(rows)} values of a "
          "admit exactly one LPR:")
    for gamma, conj, a in rows:
        print(f"  gamma = {gamma.coeffs}, conjugate = {conj.coeffs}, "
              f"a = {a.coeffs}")
    print()

    # q = 25 = 1 mod 4: a = x + 1 has two LPRs at once
    F25 = make_field(5, 2, [3, 0, 1])  # F_5[x]/(x^2 - 2)
    a = F25.element([1, 1])
    report = lpr_status(F25, a)
    print(f"F_25 = F_5[x]/(x^2 - 2), a = x + 1:")
    for root, order, generates in report.roots:
        print(f"  root {root.coeffs}: order {order}, "
              f"generator = {generates}")
    print(f"  lpr_count = {report.lpr_count}")
    print()

    # the gamma -> a construction round-trips through the conjugate
    gamma = F7(2)
    a = a_from_gamma(gamma)
    print(f"construction check in F_7: gamma = 2 gives a = {a.index}, "
          f"conjugate root {conjugate_root(gamma).index}")


if __name__ == "__main__":
    main()
