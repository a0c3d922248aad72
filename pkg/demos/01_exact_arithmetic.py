"""Exact arithmetic in a real algebraic base.

Every quantity in this package is an element of Q(q) for a chosen root q of
an integer polynomial, represented by an exact rational coefficient vector.
Decimals are printed only at the very end, rounded half-to-even.
"""

from fractions import Fraction

from betaforge import compare, define_field, golden_field, q2_field, qf_field, sign, to_decimal


def main():
    F = q2_field()  # q is the root of x^4 = 2x^2 + x + 1 in (1.7, 1.72)
    q = F.q
    print("minimal polynomial (ascending):", F.min_poly)
    print("q  =", to_decimal(q, 15))
    print("defining relation holds exactly:", q**4 == 2 * q**2 + q + 1)

    # arithmetic stays exact: no rounding ever enters a comparison
    upper = F.one / (q - 1)
    print("domain top 1/(q-1)   =", to_decimal(upper, 15))
    print("switch low 1/q       =", to_decimal(F.one / q, 15))
    print("switch high 1/q(q-1) =", to_decimal(F.one / (q * (q - 1)), 15))

    # a sign test that a float evaluation gets badly wrong near a root
    w = q**6 - q**5 - 2 * q**4 + q**2 + q + 1
    print("sign of q^6-q^5-2q^4+q^2+q+1:", sign(w), " (value ~", to_decimal(w, 12), ")")

    # the companion base: root of x^3 = 2x^2 - x + 1, satisfies x^4 = x^3+x^2+1
    G = qf_field()
    p = G.q
    print("companion base       =", to_decimal(p, 15))
    print("quartic relation     :", p**4 == p**3 + p**2 + 1)
    print("golden base          =", to_decimal(golden_field().q, 15))

    # any monic irreducible integer polynomial with an isolated real root works
    P = define_field((-1, -1, 0, 1), (Fraction(13, 10), Fraction(14, 10)))
    r = P.q
    print("cubic base x^3=x+1   =", to_decimal(r, 15))
    print("compare(r^3, r + 1)  =", compare(r**3, r + 1))


if __name__ == "__main__":
    main()
