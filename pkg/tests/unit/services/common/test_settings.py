"""Unit tests for the settings loader."""

import pytest

from services.common.errors import DslSyntaxError, GqaError, InvalidBlockError
from services.common.settings import FIELD_ENV_VAR, Settings, load_settings, parse_field_spec


def write_config(tmp_path, body: str) -> str:
    path = tmp_path / "gqa.yml"
    path.write_text(body, encoding="utf-8")
    return str(path)


class TestLoadSettings:
    """YAML loading and defaults."""

    def test_project_config(self):
        settings = load_settings()
        assert settings.field.degree == 1
        assert settings.completion.max_len_for(2) == 24
        assert settings.positivity.max_arrows == 16

    def test_missing_keys_keep_defaults(self, tmp_path):
        settings = load_settings(write_config(tmp_path, "table:\n  r_max: 3\n"))
        assert settings.table.r_max == 3
        assert settings.table.workers == 1
        assert settings.random.seed == 20240611

    def test_empty_file(self, tmp_path):
        settings = load_settings(write_config(tmp_path, ""))
        assert settings.completion.max_rules == 5000

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_settings(str(tmp_path / "absent.yml"))

    def test_invalid_yaml(self, tmp_path):
        with pytest.raises(ValueError, match="Invalid YAML"):
            load_settings(write_config(tmp_path, "field: [unclosed\n"))

    def test_field_degree_out_of_range(self, tmp_path):
        with pytest.raises(ValueError, match="field.degree"):
            load_settings(write_config(tmp_path, "field:\n  degree: 9\n"))


class TestFieldOverride:
    """GQA_FIELD and field designations."""

    @pytest.mark.parametrize("spec, degree", [("gf2^2", 2), ("GF2^3", 3), ("4", 4), (" 1 ", 1)])
    def test_parse_field_spec(self, spec, degree):
        assert parse_field_spec(spec) == degree

    @pytest.mark.parametrize("spec", ["gf3^2", "", "two"])
    def test_parse_field_spec_invalid(self, spec):
        with pytest.raises(ValueError, match="Invalid field designation"):
            parse_field_spec(spec)

    def test_apply_env_mapping(self):
        settings = Settings().apply_env({FIELD_ENV_VAR: "gf2^2"})
        assert settings.field.degree == 2

    def test_apply_env_from_process(self, monkeypatch):
        monkeypatch.setenv(FIELD_ENV_VAR, "3")
        assert Settings().apply_env().field.degree == 3

    def test_apply_env_out_of_range(self):
        with pytest.raises(ValueError):
            Settings().apply_env({FIELD_ENV_VAR: "gf2^12"})

    def test_no_override(self):
        assert Settings().apply_env({}).field.degree == 1


class TestErrors:
    def test_hierarchy(self):
        assert issubclass(InvalidBlockError, GqaError)

    def test_dsl_diagnostic_message(self):
        error = DslSyntaxError("Unexpected token", 3, 7, expected=["NAME", "NAME", "INT"])
        assert error.expected == ["INT", "NAME"]
        assert str(error) == "Unexpected token at line 3, column 7 (expected one of: INT, NAME)"
        assert error.message == "Unexpected token"
