"""
Braid words and Laurent polynomials
===================================

The two value types everything else is built from.
"""

from braidcocycles import BraidWord, LaurentPoly, cable, closure_permutation, is_knot, parse_braid

# a braid word on n strands; letter i is sigma_i, -i its inverse
w = parse_braid("1 -2 1 2 1 1 2 1", 3)
print(w, "closure permutation cycles:", closure_permutation(w).cycles())
print("knot:", is_knot(w), " rotated:", w.rotate(2).letters)

# only braids whose closure has one component have a rotation loop
print("1 -1 2 -2 is a knot:", is_knot(BraidWord(3, (1, -1, 2, -2))))

# a 2-cable with a half twist keeps the closure knotted
c = cable(BraidWord(5, (1, 2, 3, 4)), 2, add_twist=True)
print("2-cable:", c.n, "strands,", len(c.letters), "letters, knot:", is_knot(c))

# exact integer Laurent polynomials
p = LaurentPoly.parse("x^2 + x - x^-1 - x^-2")
q = LaurentPoly.parse("x - 1")
print("p * q =", p * q)
print("p(1) =", p.at_one(), " p'(1) =", p.derivative_at_one())
