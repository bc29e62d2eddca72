"""
The nested cube-degree construction versus the direct one
=========================================================

The classical way to swap 0 with a nonzero point a uses three nested
(q-2)-th powers and lands at degree (q-2)^3. Reducing it modulo x^q - x
recovers exactly the degree-(q-2) polynomial built directly.
"""

from permpoly import (
    carlitz_poly,
    carlitz_table,
    function_table,
    make_field,
    poly_str,
    reduce_canonical,
    transposition_poly,
)

# Over F_3 the nesting is invisible: q - 2 = 1, every layer is affine.
f3 = make_field(3)
g = carlitz_poly(f3, 1)
print("F_3, a=1:", poly_str(g), "| degree", g.degree)

# Over F_5 the expansion genuinely reaches degree 27 = 3^3.
f5 = make_field(5)
g5 = carlitz_poly(f5, 1)
print("\nF_5, a=1: degree", g5.degree)
print("leading terms:", poly_str(g5)[:60], "...")

# Both polynomials induce the same function, so canonical reduction
# (folding x^5 -> x) must collapse the big one onto the small one.
direct = transposition_poly(f5, 0, 1)
print("reduced nested:", poly_str(reduce_canonical(g5)))
print("direct        :", poly_str(direct))
print("equal after reduction?", reduce_canonical(g5) == reduce_canonical(direct))

# For larger fields the expanded form gets bulky (degree 343 at q = 9),
# but the nested form can always be evaluated pointwise instead.
f9 = make_field(3, 2)
a = f9.element([1, 1])
table = carlitz_table(f9, a)
print("\nGF(9), a=[1,1]: pointwise table computed without expansion")
print("swaps 0 and a?", table == function_table(transposition_poly(f9, f9.zero, a)))

g9 = carlitz_poly(f9, a)
print("expanded degree:", g9.degree, "=", (9 - 2) ** 3)
print("tables agree?", function_table(g9) == table)
