"""
Lifting field permutations to finite local rings
================================================

A polynomial permutes a finite local ring R exactly when it permutes the
residue field AND its derivative is a unit everywhere. That criterion
drives a lifting recipe: h = f + (f' + g)(x^q - x) + p*l permutes R for
any unit-valued g and any l whatsoever. The surprise is what happens to
cycle structure and parity along the way.
"""

from permpoly import (
    Polynomial,
    PermutationTable,
    brute_force_is_permutation,
    corollary_h,
    function_table,
    make_field,
    make_fqu,
    make_zmod,
    noebauer_is_permutation,
    poly_str,
    residue_poly,
)

z9 = make_zmod(3, 2)

# 2x+1 swaps 0 and 1 on F_3. Do its naive lifts permute Z/9? The
# criterion says yes: residue action is a permutation, derivative 2 is a
# unit.
f = Polynomial(z9, [1, 2])
report = noebauer_is_permutation(f)
print("2x+1 over Z/9:", report.to_json())
print("brute force agrees?", brute_force_is_permutation(f) == report.verdict)

# x^2 and x^3 both fail, for different reasons.
print("x^2 :", noebauer_is_permutation(Polynomial(z9, [0, 0, 1])).to_json())
print("x^3 :", noebauer_is_permutation(Polynomial(z9, [0, 0, 0, 1])).to_json())

# The lifting recipe with f = (swap of 0,1), g = 1, l = 0:
g = Polynomial(z9, [1])
l0 = Polynomial(z9, [])
h = corollary_h(z9.element(0), z9.element(1), g, l0)
print("\nlifted h:", poly_str(h))
print("permutes Z/9?", brute_force_is_permutation(h))
print("residue action:", function_table(residue_poly(h)).image, "(the swap of 0 and 1)")

# But the lift is NOT a transposition of Z/9. Its cycle structure grows:
perm = PermutationTable.from_polynomial(h)
print("cycles over Z/9:", perm.cycles())
print("cycle type:", perm.cycle_type(), "| sign:", perm.sign())

# The same affine polynomial keeps growing cycles as the modulus deepens:
for k in (2, 3):
    ring = make_zmod(3, k)
    p = PermutationTable.from_polynomial(Polynomial(ring, [1, 2]))
    print(f"2x+1 over Z/3^{k}: cycle type {p.cycle_type()}")

# Parity is not preserved either: with g = 1 the lift above is EVEN
# (sign +1), although a transposition is odd. Other g give odd lifts.
for gval in (1, 2):
    hg = corollary_h(z9.element(0), z9.element(1), Polynomial(z9, [gval]), l0)
    pg = PermutationTable.from_polynomial(hg)
    print(f"g = {gval}: cycle type {pg.cycle_type()}, sign {pg.sign()}")

# Equal characteristic behaves differently: over F_3[u]/(u^2) the p*l
# term vanishes outright (p = 3 = 0 there), so l never matters.
r = make_fqu(make_field(3), 2)
a, b = r.element(0), r.element([1, 1])
h1 = corollary_h(a, b, Polynomial(r, [1]), Polynomial(r, []))
h2 = corollary_h(a, b, Polynomial(r, [1]), Polynomial(r, [0, 0, 1]))
print("\nF_3[u]/(u^2): l = 0 and l = x^2 give the same polynomial?", h1 == h2)
print("lift permutes all 9 elements?", brute_force_is_permutation(h1))
