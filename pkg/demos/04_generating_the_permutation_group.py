"""
Do the lifted transpositions generate everything?
=================================================

Over a field, polynomials realize every permutation, and the degree-(q-2)
transposition polynomials alone generate the full symmetric group. Over a
proper local ring the polynomial permutations form a much smaller group,
and whether the lifted transpositions generate it is an open question.
This script gathers the desk-scale evidence.
"""

import math

from permpoly import (
    PermutationTable,
    SamplingConfig,
    all_polynomial_functions,
    generated_subgroup,
    make_field,
    make_fqu,
    make_zmod,
    polynomial_permutation_group,
    question_experiment,
    transposition_poly,
)

# Over fields: |P(F_q)| = q!, and the transposition polynomials generate it.
for q, (p, n) in {3: (3, 1), 4: (2, 2), 5: (5, 1)}.items():
    field = make_field(p, n)
    group = polynomial_permutation_group(field)
    gens = [
        PermutationTable.from_polynomial(transposition_poly(field, a, b))
        for a in field.elements()
        for b in field.elements()
        if field.index(a) < field.index(b)
    ]
    span = generated_subgroup(gens)
    print(f"F_{q}: |P| = {group.order} = {q}!, transpositions generate {span.order}")

# Over proper local rings the polynomial functions thin out fast: only
# 19683 of the 9^9 functions on Z/9 are polynomial, and only 1296 of the
# 9! = 362880 permutations.
z9 = make_zmod(3, 2)
funcs = all_polynomial_functions(z9)
group = polynomial_permutation_group(z9)
print(f"\nZ/9: {len(funcs)} polynomial functions, |P(Z/9)| = {group.order}",
      f"(out of 9! = {math.factorial(9)})")

# The experiment: sweep lifted transpositions h = f_ab + (f'_ab + g)(x^q - x) + p*l
# over a grid of (a, b, g, l), close under composition, compare with P(R).
report = question_experiment(z9)
print("\ndefault grid over Z/9:", report.to_json())

report = question_experiment(make_fqu(make_field(3), 2))
print("default grid over F_3[u]/(u^2):", report.to_json())

# With g of degree <= 1 the answer is NO: the closure has index 4 (Z/9)
# and 36 (F_3[u]/u^2). But degree-2 g admits non-constant unit residue
# patterns, and then the sweep does generate the whole group over Z/9:
wide = question_experiment(z9, SamplingConfig(g_max_degree=2, l_max_degree=2, g_sample_limit=40))
print("\nwider grid over Z/9 (quadratic g, subsampled):", wide.to_json())
print("\nso the generated subgroup depends on how rich the g grid is;",
      "\nthe full question stays open beyond desk scale.")
