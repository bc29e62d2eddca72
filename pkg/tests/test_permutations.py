import itertools
import math
import random

import pytest

from conftest import field_of_order
from permpoly import (
    MixedRings,
    NotBijective,
    PermutationTable,
    Polynomial,
    RingTooLarge,
    all_polynomial_functions,
    function_table,
    generated_subgroup,
    make_field,
    make_fqu,
    make_zmod,
    polynomial_permutation_group,
    transposition_poly,
)


def _kempner_count(m: int) -> int:
    """Number of polynomial functions on Z/m: prod over k of m/gcd(k!, m)."""
    total = 1
    k = 0
    while True:
        factor = m // math.gcd(math.factorial(k), m)
        if factor == 1 and math.factorial(k) % m == 0:
            return total
        total *= factor
        k += 1


def _pairwise_closure_count(ring) -> int:
    """Oracle: literal fixed point of {identity, constants} under + and x."""
    n = ring.size
    elems = ring.elements()
    add = [[ring.index(elems[i] + elems[j]) for j in range(n)] for i in range(n)]
    mul = [[ring.index(elems[i] * elems[j]) for j in range(n)] for i in range(n)]
    tables = {tuple(range(n))} | {(c,) * n for c in range(n)}
    frontier = set(tables)
    while frontier:
        new = set()
        for t in frontier:
            for s in tables:
                for cand in (
                    tuple(add[a][b] for a, b in zip(t, s)),
                    tuple(mul[a][b] for a, b in zip(t, s)),
                ):
                    if cand not in tables:
                        new.add(cand)
        tables |= new
        frontier = new
    return len(tables)


class TestPermutationTable:
    def test_compose_with_inverse_is_identity(self, f5):
        rng = random.Random(2)
        image = list(range(5))
        for _ in range(10):
            rng.shuffle(image)
            p = PermutationTable(f5, image)
            assert p.compose(p.inverse()) == PermutationTable.identity(f5)
            assert p.inverse().compose(p) == PermutationTable.identity(f5)

    def test_transposition_is_involution(self, f3):
        p = PermutationTable.from_polynomial(Polynomial(f3, [1, 2]))
        assert p.compose(p) == PermutationTable.identity(f3)

    def test_inverse_of_affine_over_z9(self, z9):
        # pointwise-solve oracle: y = 2x+1 inverts to x = 5(y-1) = 5y+4
        forward = {x: (2 * x + 1) % 9 for x in range(9)}
        backward = {y: x for x, y in forward.items()}
        assert all(backward[y] == (5 * y + 4) % 9 for y in range(9))
        p = PermutationTable.from_polynomial(Polynomial(z9, [1, 2]))
        assert p.inverse() == PermutationTable.from_polynomial(Polynomial(z9, [4, 5]))

    def test_not_bijective(self, z4):
        with pytest.raises(NotBijective):
            PermutationTable(z4, [0, 0, 1, 2])
        with pytest.raises(NotBijective):
            PermutationTable.from_function_table(function_table(Polynomial(z4, [0, 2])))

    def test_mixed_rings(self, f3, f5):
        with pytest.raises(MixedRings):
            PermutationTable.identity(f3).compose(PermutationTable.identity(f5))


class TestSignAndCycles:
    def test_transposition_sign(self, f5):
        p = PermutationTable(f5, [0, 3, 2, 1, 4])
        assert p.sign() == -1
        assert p.cycle_type() == (2, 1, 1, 1)

    def test_identity(self, f5):
        p = PermutationTable.identity(f5)
        assert p.sign() == 1
        assert p.cycle_type() == (1, 1, 1, 1, 1)

    def test_affine_over_z9_has_long_cycle(self, z9):
        p = PermutationTable.from_polynomial(Polynomial(z9, [1, 2]))
        assert p.cycles() == [(0, 1, 3, 7, 6, 4), (2, 5), (8,)]
        assert p.cycle_type() == (6, 2, 1)
        assert max(p.cycle_type()) > 2

    def test_sign_is_multiplicative(self, f5):
        rng = random.Random(13)
        image = list(range(5))
        perms = []
        for _ in range(8):
            rng.shuffle(image)
            perms.append(PermutationTable(f5, image))
        for p, q in itertools.product(perms, repeat=2):
            assert p.compose(q).sign() == p.sign() * q.sign()


class TestAllPolynomialFunctions:
    def test_z4_count(self, z4):
        funcs = all_polynomial_functions(z4)
        assert len(funcs) == 64
        assert _kempner_count(4) == 64

    def test_z8_count_matches_kempner(self):
        assert len(all_polynomial_functions(make_zmod(2, 3))) == _kempner_count(8)

    def test_z9_count_matches_kempner(self, z9):
        assert len(all_polynomial_functions(z9)) == _kempner_count(9) == 19683

    def test_field_has_all_functions(self, f3):
        assert len(all_polynomial_functions(f3)) == 27

    def test_f2u2_count_pinned(self):
        # machine-derived regression value for F_2[u]/(u^2)
        assert len(all_polynomial_functions(make_fqu(make_field(2), 2))) == 64

    @pytest.mark.parametrize(
        "build",
        [lambda: make_zmod(2, 2), lambda: make_field(3), lambda: make_fqu(make_field(2), 2)],
    )
    def test_matches_literal_pairwise_closure(self, build):
        ring = build()
        assert len(all_polynomial_functions(ring)) == _pairwise_closure_count(ring)

    def test_every_member_contains_polynomial_witness(self, z4):
        # spot-check: tables of explicit polynomials appear in the closure
        images = {ft.image for ft in all_polynomial_functions(z4)}
        rng = random.Random(17)
        for _ in range(20):
            f = Polynomial(z4, [rng.randrange(4) for _ in range(rng.randrange(1, 6))])
            assert function_table(f).image in images

    def test_ring_too_large(self):
        with pytest.raises(RingTooLarge):
            all_polynomial_functions(make_zmod(11, 2), max_size=100)


class TestPolynomialPermutationGroup:
    def test_field_gives_symmetric_group(self, f3):
        assert polynomial_permutation_group(f3).order == 6

    def test_z4_order_with_forced_spacing_oracle(self, z4):
        # a permutation of Z/4 is polynomial iff f(x+2) = f(x) + 2 and the
        # two base values have different parities: 4 * 2 forced tables
        forced = set()
        for v0 in range(4):
            for v1 in range(4):
                if (v0 - v1) % 2 == 1:
                    forced.add((v0, v1, (v0 + 2) % 4, (v1 + 2) % 4))
        assert len(forced) == 8
        group = polynomial_permutation_group(z4)
        assert group.order == 8
        assert group.elements == frozenset(forced)

    def test_z9_order_pinned(self, z9):
        # independent count: 3! residue permutations, 3 lifts per value,
        # 2 admissible derivative residues per point = 6 * 27 * 8
        assert 6 * 27 * 8 == 1296
        assert polynomial_permutation_group(z9).order == 1296

    @pytest.mark.parametrize("q", [3, 4, 5])
    def test_fields_reach_factorial(self, q):
        assert polynomial_permutation_group(field_of_order(q)).order == math.factorial(q)

    @pytest.mark.parametrize(
        "build",
        [
            lambda: make_zmod(2, 2),
            lambda: make_zmod(2, 3),
            lambda: make_zmod(3, 2),
            lambda: make_fqu(make_field(2), 2),
        ],
    )
    def test_proper_subgroup_for_non_fields(self, build):
        ring = build()
        assert polynomial_permutation_group(ring).order < math.factorial(ring.size)

    def test_closure_verified_on_random_pairs(self, z9):
        group = polynomial_permutation_group(z9)
        members = group.members()
        rng = random.Random(29)
        for _ in range(100):
            p, q = rng.choice(members), rng.choice(members)
            assert p.compose(q) in group
            assert p.inverse() in group


class TestGeneratedSubgroup:
    def test_adjacent_transpositions_generate_s3(self, f3):
        t01 = PermutationTable(f3, [1, 0, 2])
        t12 = PermutationTable(f3, [0, 2, 1])
        assert generated_subgroup([t01, t12]).order == 6

    def test_identity_alone(self, f5):
        assert generated_subgroup([PermutationTable.identity(f5)]).order == 1

    def test_single_affine_over_z9_is_cyclic(self, z9):
        p = PermutationTable.from_polynomial(Polynomial(z9, [1, 2]))
        assert math.lcm(6, 2, 1) == 6
        group = generated_subgroup([p])
        assert group.order == 6
        assert PermutationTable.identity(z9) in group

    @pytest.mark.parametrize("q", [3, 4, 5])
    def test_transposition_polys_generate_everything(self, q):
        field = field_of_order(q)
        gens = [
            PermutationTable.from_polynomial(transposition_poly(field, a, b))
            for a, b in itertools.combinations(field.elements(), 2)
        ]
        assert generated_subgroup(gens).order == math.factorial(q)

    def test_subgroup_of_group_closure(self, z9):
        p = PermutationTable.from_polynomial(Polynomial(z9, [1, 2]))
        sub = generated_subgroup([p])
        group = polynomial_permutation_group(z9)
        assert all(member in group for member in sub.members())
