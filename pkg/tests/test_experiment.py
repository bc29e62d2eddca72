import pytest

from permpoly import (
    ResidueFieldTooSmall,
    SamplingConfig,
    make_field,
    make_fqu,
    make_zmod,
    polynomial_permutation_group,
    question_experiment,
)


@pytest.fixture(scope="module")
def z9_ring():
    return make_zmod(3, 2)


@pytest.fixture(scope="module")
def z9_report(z9_ring):
    return question_experiment(z9_ring)


@pytest.fixture(scope="module")
def f3u2_report():
    return question_experiment(make_fqu(make_field(3), 2))


class TestGuards:
    def test_residue_field_too_small(self):
        with pytest.raises(ResidueFieldTooSmall):
            question_experiment(make_zmod(2, 2))
        with pytest.raises(ResidueFieldTooSmall):
            question_experiment(make_fqu(make_field(2), 2))


class TestDefaultSweeps:
    # regression values are machine-derived from the first audited run of
    # the default grid (unit-valued g of degree <= 1, l in {0, 1, x, x^2})
    def test_z9_pinned(self, z9_report):
        assert z9_report.a_size == 54
        assert z9_report.generated_order == 324
        assert z9_report.group_order == 1296
        assert z9_report.equals is False
        assert z9_report.index == 4

    def test_f3u2_pinned(self, f3u2_report):
        assert f3u2_report.a_size == 18
        assert f3u2_report.generated_order == 36
        assert f3u2_report.group_order == 1296
        assert f3u2_report.equals is False
        assert f3u2_report.index == 36

    def test_generated_subgroup_sits_inside_group(self, z9_ring, z9_report):
        assert z9_report.group_order % z9_report.generated_order == 0
        group = polynomial_permutation_group(z9_ring)
        # audit the pin: every swept permutation is a polynomial permutation
        for row in z9_report.rows:
            image = tuple(z9_ring.index(z9_ring.parse_element(v)) for v in row["image"])
            assert image in group.elements

    def test_rows_cover_the_grid(self, z9_report):
        # 54 ordered residue-distinct pairs x 18 unit-valued g x 4 l choices
        assert len(z9_report.rows) == 54 * 18 * 4
        assert {row["sign"] for row in z9_report.rows} == {-1, 1}
        assert set(z9_report.rows[0]) == {"a", "b", "g", "l", "image", "sign"}

    def test_report_json_shape(self, f3u2_report):
        doc = f3u2_report.to_json()
        assert set(doc) == {
            "ring",
            "sampling",
            "a_size",
            "generated_order",
            "group_order",
            "equals",
            "index",
            "runtime_ms",
            "seed",
        }
        assert doc["ring"] == "fqu:3^1,2"


class TestDeterminism:
    def test_same_seed_same_report(self, z9_ring):
        config = SamplingConfig(g_sample_limit=6)
        first = question_experiment(z9_ring, config, seed=42)
        second = question_experiment(z9_ring, config, seed=42)
        a = first.to_json()
        b = second.to_json()
        a["runtime_ms"] = b["runtime_ms"] = 0
        assert a == b
        assert first.rows == second.rows


class TestWiderGrid:
    def test_degree_two_g_generates_everything(self, z9_ring):
        # quadratic g admits non-constant unit-valued residue patterns; a
        # seeded subsample of them already reaches the whole group
        config = SamplingConfig(g_max_degree=2, l_max_degree=2, g_sample_limit=40)
        report = question_experiment(z9_ring, config, seed=0)
        assert report.equals is True
        assert report.generated_order == 1296
