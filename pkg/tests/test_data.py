"""Parsing, serialization, generation, fixtures."""

import numpy as np
import pytest
from conftest import rand_instance

from tspkit.core import MATRIX_CAP
from tspkit.data import (
    FIXTURE_NAMES,
    GeneratorConfig,
    R200_SEED,
    fixture,
    fixture_manifest,
    generate_random,
    parse_instance,
    write_instance,
)
from tspkit.errors import ConfigurationError, FixtureLookupError, ParseError, UnsupportedFormatError

TSPLIB_OK = """NAME : tiny3
TYPE : TSP
COMMENT : three cities
DIMENSION : 3
EDGE_WEIGHT_TYPE : EUC_2D
NODE_COORD_SECTION
1 0.0 0.0
2 3.0 0.0
3 0.0 4.0
EOF
"""


class TestPlainFormat:
    def test_basic(self):
        inst = parse_instance("0 0\n0 1\n1 1\n1 0\n", "sq")
        assert inst.n == 4 and inst.dimension == 2 and inst.name == "sq"

    def test_commas_comments_blanks(self):
        text = "# header\n\n1.5, 2.5\n3.5 ,4.5\n\n# done\n"
        inst = parse_instance(text, "c")
        assert inst.n == 2
        assert inst.coords[1, 1] == 4.5

    def test_dimension_inferred_from_first_line(self):
        inst = parse_instance("0 0 0\n1 1 1\n", "threed")
        assert inst.dimension == 3

    def test_inconsistent_dimension_reports_line(self):
        with pytest.raises(ParseError) as err:
            parse_instance("0 0\n1 1 1\n", "bad")
        assert err.value.line == 2

    def test_non_numeric_reports_line_and_column(self):
        with pytest.raises(ParseError) as err:
            parse_instance("0 0\n1 abc\n", "bad")
        assert err.value.line == 2
        assert err.value.column == 3

    def test_too_few_points(self):
        with pytest.raises(ParseError):
            parse_instance("1 2\n", "single")


class TestTsplibFormat:
    def test_basic(self):
        inst = parse_instance(TSPLIB_OK, "hint")
        assert inst.n == 3 and inst.name == "tiny3"

    def test_name_falls_back_to_hint(self):
        text = TSPLIB_OK.replace("NAME : tiny3\n", "")
        assert parse_instance(text, "hint").name == "hint"

    def test_att_metric_rejected(self):
        text = TSPLIB_OK.replace("EUC_2D", "ATT")
        with pytest.raises(UnsupportedFormatError) as err:
            parse_instance(text, "x")
        assert "ATT" in str(err.value)

    def test_missing_edge_weight_type_rejected(self):
        text = TSPLIB_OK.replace("EDGE_WEIGHT_TYPE : EUC_2D\n", "")
        with pytest.raises(UnsupportedFormatError):
            parse_instance(text, "x")

    def test_dimension_mismatch_reports_line(self):
        text = TSPLIB_OK.replace("DIMENSION : 3", "DIMENSION : 4")
        with pytest.raises(ParseError) as err:
            parse_instance(text, "x")
        assert err.value.line == 4

    def test_non_contiguous_ids_rejected(self):
        text = TSPLIB_OK.replace("2 3.0 0.0", "5 3.0 0.0")
        with pytest.raises(ParseError) as err:
            parse_instance(text, "x")
        assert err.value.line == 8

    def test_non_numeric_coordinate_reports_column(self):
        text = TSPLIB_OK.replace("2 3.0 0.0", "2 x 0.0")
        with pytest.raises(ParseError) as err:
            parse_instance(text, "x")
        assert err.value.line == 8 and err.value.column == 3

    def test_eof_terminator_optional(self):
        assert parse_instance(TSPLIB_OK.replace("EOF\n", ""), "x").n == 3


class TestRoundTrip:
    def test_hundred_random_instances_exact(self):
        for trial in range(100):
            inst = rand_instance(2 + trial % 40, 1000 + trial)
            again = parse_instance(write_instance(inst), inst.name)
            assert np.array_equal(inst.coords, again.coords)
            assert again.name == inst.name

    def test_unit_square(self, square):
        again = parse_instance(write_instance(square), "square")
        assert np.array_equal(square.coords, again.coords)


class TestGenerator:
    def test_bounds(self):
        inst = generate_random(GeneratorConfig(n=200, extent=4000.0, seed=7))
        assert inst.coords.min() >= 0.0
        assert inst.coords.max() <= 4000.0
        assert inst.n == 200 and inst.dimension == 2

    def test_deterministic(self):
        a = generate_random(GeneratorConfig(n=50, extent=4000.0, seed=3))
        b = generate_random(GeneratorConfig(n=50, extent=4000.0, seed=3))
        assert np.array_equal(a.coords, b.coords)

    def test_mean_concentration(self):
        # Uniform mean 2000; the [1600, 2400] window is ~5 sigma for n=200.
        means = [
            generate_random(GeneratorConfig(n=200, extent=4000.0, seed=s)).coords[:, 0].mean()
            for s in range(100)
        ]
        assert all(1600.0 <= m <= 2400.0 for m in means)

    @pytest.mark.parametrize("bad", [dict(n=1), dict(n=0), dict(extent=0.0), dict(extent=-5.0)])
    def test_config_validation(self, bad):
        kwargs = dict(n=10, extent=100.0, seed=0)
        kwargs.update(bad)
        with pytest.raises(ConfigurationError):
            generate_random(GeneratorConfig(**kwargs))


class TestFixtures:
    def test_p15(self):
        inst = fixture("p15")
        assert inst.n == 15 and inst.dimension == 2

    def test_att48(self):
        inst = fixture("att48")
        assert inst.n == 48 and inst.dimension == 2

    def test_r200(self):
        inst = fixture("r200")
        assert inst.n == 200
        assert inst.coords.min() >= 0.0 and inst.coords.max() <= 4000.0
        regenerated = generate_random(GeneratorConfig(n=200, extent=4000.0, seed=R200_SEED))
        assert np.array_equal(inst.coords, regenerated.coords)

    def test_unknown_name_lists_available(self):
        with pytest.raises(FixtureLookupError) as err:
            fixture("sgb128")
        for name in FIXTURE_NAMES:
            assert name in str(err.value)

    def test_manifest_matches_fixtures(self):
        manifest = fixture_manifest()
        assert set(manifest) == set(FIXTURE_NAMES)
        for name, meta in manifest.items():
            inst = fixture(name)
            assert inst.n == meta["n"]
            assert inst.dimension == meta["d"]
            assert meta["source"]

    def test_fixture_sizes_fit_matrix_cap(self):
        assert all(fixture(name).n <= MATRIX_CAP for name in FIXTURE_NAMES)


class TestParserFuzz:
    def test_truncations_fail_with_line_numbers(self):
        text = TSPLIB_OK
        for cut in (len(text) // 3, len(text) // 2):
            try:
                parse_instance(text[:cut], "t")
            except (ParseError, UnsupportedFormatError) as exc:
                assert "line" in str(exc) or isinstance(exc, UnsupportedFormatError)

    def test_corrupted_tokens_fail_with_line_numbers(self):
        base = write_instance(fixture("p15")).splitlines()
        rng = np.random.default_rng(0)
        for _ in range(20):
            lines = list(base)
            idx = int(rng.integers(1, len(lines)))
            lines[idx] = lines[idx].replace(".", "x", 1) + " zz"
            with pytest.raises(ParseError) as err:
                parse_instance("\n".join(lines), "fuzz")
            assert err.value.line >= 1
