"""
Swapping two field elements with a single low-degree polynomial
===============================================================

A walk through the degree-(q-2) transposition construction: why the
all-ones polynomial does the heavy lifting, and how conjugating by two
affine maps moves the swap to any pair of points.
"""

from permpoly import (
    Polynomial,
    base_transposition,
    function_table,
    make_field,
    martin_poly,
    ones_poly,
    poly_str,
    transposition_poly,
    verify_transposition,
)

# The starting point: over F_q, the product of (x - c) over all c outside
# {0, 1} collapses to the all-ones polynomial l(x) = x^(q-2) + ... + x + 1.
# So l vanishes on every c other than 0 and 1, while l(0) = 1 and l(1) = -1.
f5 = make_field(5)
l = ones_poly(f5)
print("l over F_5:", poly_str(l))
print("values:", [f5.format_element(l(x)) for x in f5.elements()])

product = Polynomial(f5, [1])
for c in f5.elements():
    if c != f5.zero and c != f5.one:
        product = product * Polynomial(f5, [-c, 1])
print("prod of (x - c), c not in {0,1}:", poly_str(product))
print("same polynomial?", product == l)

# Adding x turns that value pattern into the swap of 0 and 1: the result
# sends 0 to 1, 1 to -1+1 = 0, and fixes everything else.
f = base_transposition(f5)
print("\nf = l + x:", poly_str(f))
print("table:", [f5.format_element(y) for y in function_table(f).outputs()])

# Any other pair (a, b) is reached by conjugation: feed (x-a)/(b-a) in,
# map the output back through (b-a)x + a. The degree stays q-2.
k = transposition_poly(f5, 1, 3)
print("\nswap 1 and 3 over F_5:", poly_str(k), "| degree", k.degree)
report = verify_transposition(k, 1, 3)
print("exact transposition?", report.is_exact_transposition)

# The same works over extension fields, where the older prime-field form
# does not apply. Over GF(4) = F_2[w], char 2 folds the doubled x term away.
f4 = make_field(2, 2)
print("\nbase swap over GF(4):", poly_str(base_transposition(f4)))
w = f4.element([0, 1])
k4 = transposition_poly(f4, w, f4.one)
print("swap w and 1:", poly_str(k4))
print("table:", [f4.format_element(y) for y in function_table(k4).outputs()])

# On prime fields the classical form h = x^(p-2) + ... + x^2 + 2x + 1 is
# literally the same polynomial.
f7 = make_field(7)
print("\nprime-field form over F_7 :", poly_str(martin_poly(f7)))
print("general construction gives:", poly_str(base_transposition(f7)))
print("identical?", martin_poly(f7) == base_transposition(f7))
