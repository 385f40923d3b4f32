"""Predicting orbit spectra from the characteristic polynomial.

The companion matrix Q = [[a, b], [1, 0]] drives the recurrence
x_{n+2} = a*x_{n+1} + b*x_n over F_q.  The multiset of orbit lengths of
<Q> acting on F_q x F_q is determined entirely by how x^2 - ax - b
factors, and this script walks through one example of each shape.
"""

from orbitforge import Companion, classify, enumerate_spectrum, make_field, \
    predict_spectrum, verify


def show(F, a, b):
    Q = Companion(F, a, b)
    cls = classify(Q)
    predicted = predict_spectrum(Q)
    enumerated = enumerate_spectrum(Q)
    print(f"{F!r}, a = {a!r}, b = {b!r}")
    print(f"  classification: {type(cls).__name__}")
    print(f"  predicted spectrum:  {predicted.as_dict()}")
    print(f"  enumerated spectrum: {enumerated.as_dict()}")
    report = verify(Q)
    print(f"  full verification: {'ok' if report.ok else report.mismatches}")
    print()


def main():
    # two distinct roots in F_163: orbit lengths are orders of the roots
    # and their lcm
    F = make_field(163)
    show(F, F(9), F(159))

    # a repeated root in F_13: lengths l and p*l
    F = make_field(13)
    show(F, F(8), F(-3))

    # irreducible over F_5: one length, living in F_25
    F = make_field(5)
    show(F, F(1), F(3))

    # the Fibonacci recurrence mod 5: the classic Pisano period 20
    show(F, F(1), F(1))


if __name__ == "__main__":
    main()
