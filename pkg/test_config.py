import logging
import tempfile
from pathlib import Path

from src.config import NODE_BUDGET_ENV, WorkbenchSettings, load_settings
from src.utils import configure_logging


def test_repository_config():
    settings = load_settings(environ={})
    assert settings.default_prime == 1009
    assert settings.prime is None
    assert settings.node_budget == 10000
    assert settings.oracle_prime == 2
    assert settings.log_level == "INFO"


def test_environment_overrides_the_node_budget():
    assert load_settings(environ={NODE_BUDGET_ENV: "42"}).node_budget == 42
    try:
        load_settings(environ={NODE_BUDGET_ENV: "many"})
    except ValueError as exc:
        assert NODE_BUDGET_ENV in str(exc)
    else:
        raise AssertionError("non-integer budget accepted")


def test_flags_override_only_when_given():
    settings = WorkbenchSettings().with_overrides(prime=7, workers=None)
    assert settings.prime == 7
    assert settings.workers == 1


def test_unknown_sections_and_keys_are_rejected():
    for text in ("mongodb:\n  uri: x\n", "enumeration:\n  budget: 3\n", "oracle: 2\n"):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "config.yaml"
            path.write_text(text, encoding="utf-8")
            try:
                load_settings(str(path), environ={})
            except ValueError:
                pass
            else:
                raise AssertionError(f"{text!r} accepted")


def test_empty_config_gives_defaults():
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "config.yaml"
        path.write_text("", encoding="utf-8")
        assert load_settings(str(path), environ={}) == WorkbenchSettings()


def test_logging_to_a_file():
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "workbench.log"
        root = configure_logging("debug", str(path))
        assert root.level == logging.DEBUG
        logging.getLogger("src.tilting").debug("enumerated %d pairs", 5)
        configure_logging("INFO")
        assert "[DEBUG] enumerated 5 pairs" in path.read_text(encoding="utf-8")
    try:
        configure_logging("chatty")
    except ValueError as exc:
        assert "chatty" in str(exc)
    else:
        raise AssertionError("unknown level accepted")


if __name__ == "__main__":
    test_repository_config()
    test_environment_overrides_the_node_budget()
    test_flags_override_only_when_given()
    test_unknown_sections_and_keys_are_rejected()
    test_empty_config_gives_defaults()
    test_logging_to_a_file()
    print("config tests passed")
