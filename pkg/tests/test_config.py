import pytest

from service.tract.TractVerifyService import CheckBudget
from util.ConfigUtil import DEFAULT_BRUTE_FORCE, DEFAULT_CHECK, DEFAULT_ENUMERATE, DEFAULT_PHASE, ConfigUtil


@pytest.fixture
def config_file(tmp_path):
    def write(text):
        path = tmp_path / "config.yaml"
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write


def test_missing_file_falls_back_to_defaults(tmp_path):
    path = str(tmp_path / "absent.yaml")
    assert ConfigUtil.load_check_budget_from_config(path) == DEFAULT_CHECK
    assert ConfigUtil.load_phase_tol_from_config(path) == DEFAULT_PHASE
    assert ConfigUtil.load_log_level_from_config(path) == "INFO"


def test_malformed_yaml_falls_back_to_defaults(config_file):
    path = config_file("check: [1, 2\n")
    assert ConfigUtil.load_check_budget_from_config(path) == DEFAULT_CHECK


def test_non_mapping_section_is_ignored(config_file):
    path = config_file("enumerate: 7\n")
    assert ConfigUtil.load_enumerate_caps_from_config(path) == DEFAULT_ENUMERATE


def test_partial_overrides(config_file):
    path = config_file("check:\n  samples: 50\nbrute_force:\n  max_elements: '4'\nlog:\n  level: debug\n")
    budget = ConfigUtil.load_check_budget_from_config(path)
    assert budget["samples"] == 50
    assert budget["max_terms"] == DEFAULT_CHECK["max_terms"]
    caps = ConfigUtil.load_brute_force_caps_from_config(path)
    assert caps == {**DEFAULT_BRUTE_FORCE, "max_elements": 4}
    assert ConfigUtil.load_log_level_from_config(path) == "DEBUG"


def test_unknown_keys_are_dropped(config_file):
    path = config_file("phase:\n  check_tol: 1.0e-4\n  other: 3\n")
    assert ConfigUtil.load_phase_tol_from_config(path) == {**DEFAULT_PHASE, "check_tol": 1e-4}


def test_shipped_config_matches_defaults():
    assert ConfigUtil.load_check_budget_from_config() == DEFAULT_CHECK
    assert ConfigUtil.load_enumerate_caps_from_config() == DEFAULT_ENUMERATE


def test_budget_seed_override(config_file):
    path = config_file("check:\n  seed: 7\n  samples: 10\n")
    assert CheckBudget.from_config(path) == CheckBudget(max_terms=5, samples=10, seed=7)
    assert CheckBudget.from_config(path, seed=0xFF).seed == 255
    first = CheckBudget(seed=3).rng().integers(0, 1000, size=5).tolist()
    assert first == CheckBudget(seed=3).rng().integers(0, 1000, size=5).tolist()
