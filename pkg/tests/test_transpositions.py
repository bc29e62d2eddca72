import itertools

import pytest

from conftest import FIELD_PARAMS, field_of_order
from permpoly import (
    EqualPoints,
    FieldTooSmall,
    NotPrimeField,
    PermutationTable,
    Polynomial,
    ZeroPoint,
    base_transposition,
    carlitz_poly,
    carlitz_table,
    function_table,
    make_field,
    martin_poly,
    martin_poly_ab,
    ones_poly,
    reduce_canonical,
    transposition_poly,
    verify_transposition,
)


def _transposition_image(field, a, b):
    ia, ib = field.index(a), field.index(b)
    image = list(range(field.size))
    image[ia], image[ib] = ib, ia
    return tuple(image)


class TestOnesPoly:
    def test_f3(self, f3):
        l = ones_poly(f3)
        assert l == Polynomial(f3, [1, 1])
        assert function_table(l).image == (1, 2, 0)

    def test_gf4_kills_generator(self, f4):
        l = ones_poly(f4)
        assert l == Polynomial(f4, [1, 1, 1])
        w = f4.element([0, 1])
        assert l(w) == f4.zero  # w^2 + w + 1 = (w+1) + w + 1 = 0 in char 2

    def test_f5_value_at_4(self, f5):
        assert (4**3 + 4**2 + 4 + 1) % 5 == 0  # integer oracle
        assert ones_poly(f5)(f5.element(4)) == f5.zero

    @pytest.mark.parametrize("q", sorted(FIELD_PARAMS))
    def test_value_pattern(self, q):
        field = field_of_order(q)
        l = ones_poly(field)
        assert l.degree == q - 2
        assert l(field.zero) == field.one
        assert l(field.one) == field.from_int(q - 1) == -field.one
        for c in field.elements():
            if c != field.zero and c != field.one:
                assert l(c) == field.zero

    @pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
    def test_equals_expanded_product(self, q):
        # l agrees coefficient-for-coefficient with prod over c not in {0,1}
        # of (x - c), the factorization that motivates it
        field = field_of_order(q)
        prod = Polynomial(field, [1])
        for c in field.elements():
            if c != field.zero and c != field.one:
                prod = prod * Polynomial(field, [-c, field.one])
        assert prod == ones_poly(field)


class TestBaseTransposition:
    def test_f3(self, f3):
        assert base_transposition(f3) == Polynomial(f3, [1, 2])

    def test_gf4(self, f4):
        f = base_transposition(f4)
        assert f == Polynomial(f4, [1, 0, 1])  # char 2 kills the doubled x
        assert function_table(f).image == _transposition_image(f4, f4.zero, f4.one)

    def test_f5(self, f5):
        f = base_transposition(f5)
        assert f == Polynomial(f5, [1, 2, 1, 1])
        assert (2**3 + 2**2 + 2 * 2 + 1) % 5 == 2  # fixes 2
        assert (3**3 + 3**2 + 2 * 3 + 1) % 5 == 3  # fixes 3
        assert f(f5.element(2)) == f5.element(2)
        assert f(f5.element(3)) == f5.element(3)

    def test_too_small(self):
        with pytest.raises(FieldTooSmall):
            base_transposition(make_field(2))


class TestTranspositionPoly:
    def test_f3_base_case(self, f3):
        assert transposition_poly(f3, 0, 1) == Polynomial(f3, [1, 2])

    def test_f5_trivial_conjugation(self, f5):
        assert transposition_poly(f5, 0, 1) == base_transposition(f5)

    def test_f5_shifted_pair(self, f5):
        f = transposition_poly(f5, 1, 3)
        assert function_table(f).image == (0, 3, 2, 1, 4)

    def test_equal_points(self, f5):
        with pytest.raises(EqualPoints):
            transposition_poly(f5, 1, 1)

    @pytest.mark.parametrize("q", [3, 4, 5, 7])
    def test_all_pairs(self, q):
        field = field_of_order(q)
        # leading coeff of the base is 1 except at q = 3, where the
        # doubled-x term IS the top term (coefficient 2)
        base_lead = base_transposition(field).leading_coefficient
        for a, b in itertools.permutations(field.elements(), 2):
            f = transposition_poly(field, a, b)
            assert f.degree == q - 2
            assert f.leading_coefficient == base_lead * ((b - a).inverse()) ** (q - 3)
            assert function_table(f).image == _transposition_image(field, a, b)

    @pytest.mark.parametrize("q", [4, 5, 7])
    def test_table_symmetric_in_points(self, q):
        field = field_of_order(q)
        for a, b in itertools.combinations(field.elements(), 2):
            assert function_table(transposition_poly(field, a, b)) == function_table(
                transposition_poly(field, b, a)
            )

    @pytest.mark.parametrize("q", [3, 4, 5, 7])
    def test_induces_odd_permutation(self, q):
        field = field_of_order(q)
        for a, b in itertools.permutations(field.elements(), 2):
            perm = PermutationTable.from_polynomial(transposition_poly(field, a, b))
            assert perm.sign() == -1


class TestCarlitz:
    def test_f3_collapses_to_linear(self, f3):
        assert carlitz_poly(f3, 1) == Polynomial(f3, [1, 2])
        assert function_table(carlitz_poly(f3, 1)).image == (1, 0, 2)

    def test_f5_degree_and_reduction(self, f5):
        g = carlitz_poly(f5, 1)
        assert g.degree == 27
        assert reduce_canonical(g) == reduce_canonical(transposition_poly(f5, 0, 1))

    def test_gf4_lazy_table(self, f4):
        w = f4.element([0, 1])
        table = carlitz_table(f4, w)
        assert table.image == _transposition_image(f4, f4.zero, w)

    def test_lazy_matches_expansion(self):
        for q in [3, 4, 5]:
            field = field_of_order(q)
            for a in field.elements():
                if a:
                    assert carlitz_table(field, a) == function_table(carlitz_poly(field, a))

    def test_zero_point(self, f5):
        with pytest.raises(ZeroPoint):
            carlitz_poly(f5, 0)

    @pytest.mark.parametrize("q", [3, 4, 5])
    def test_reduction_matches_direct_construction(self, q):
        field = field_of_order(q)
        for a in field.elements():
            if a:
                assert reduce_canonical(carlitz_poly(field, a)) == reduce_canonical(
                    transposition_poly(field, field.zero, a)
                )


class TestMartin:
    def test_f5_same_as_base(self, f5):
        assert martin_poly(f5) == base_transposition(f5)

    def test_f7_pair(self):
        f7 = make_field(7)
        f = martin_poly_ab(f7, 2, 5)
        assert function_table(f).image == _transposition_image(f7, f7.element(2), f7.element(5))

    def test_not_prime_field(self):
        with pytest.raises(NotPrimeField):
            martin_poly(make_field(3, 2))
        with pytest.raises(NotPrimeField):
            martin_poly_ab(make_field(2, 2), 0, 1)

    def test_char_two_rejected(self):
        with pytest.raises(FieldTooSmall):
            martin_poly(make_field(2))

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_ab_form_matches_general_construction(self, p):
        field = make_field(p)
        for a, b in itertools.permutations(field.elements(), 2):
            assert martin_poly_ab(field, a, b) == transposition_poly(field, a, b)


class TestVerification:
    def test_exact(self, f5):
        report = verify_transposition(transposition_poly(f5, 1, 3), 1, 3)
        assert report.is_permutation
        assert report.is_exact_transposition
        assert report.degree == 3
        assert report.counterexample is None

    def test_identity_is_not_a_transposition(self, f5):
        report = verify_transposition(Polynomial.x(f5), 0, 1)
        assert report.is_permutation
        assert not report.is_exact_transposition
        assert report.counterexample == f5.zero

    def test_frobenius_permutes_but_fixes_points(self, f4):
        report = verify_transposition(Polynomial(f4, [0, 0, 1]), 0, 1)
        assert report.is_permutation
        assert not report.is_exact_transposition

    def test_json_shape(self, f3):
        doc = verify_transposition(Polynomial(f3, [1, 2]), 0, 1).to_json()
        assert doc == {
            "is_permutation": True,
            "is_exact_transposition": True,
            "table": [1, 0, 2],
            "degree": 1,
            "counterexample": None,
        }
