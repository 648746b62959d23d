"""Pytest configuration and fixtures."""

import pytest


@pytest.fixture(autouse=True)
def reset_caches(monkeypatch):
    """Reset settings and evaluator caches before and after each test."""
    from bibracket.brackets import clear_evaluators
    from bibracket.config import get_settings

    # no app.log from tests
    monkeypatch.setenv("BIBRACKET_LOG_DIR", "")
    get_settings.cache_clear()
    clear_evaluators()
    yield
    get_settings.cache_clear()
    clear_evaluators()


@pytest.fixture
def word():
    """Build a bi-word from upper and lower indices."""
    from bibracket.words import BiWord

    def build(s, r=None):
        return BiWord.from_indices(s, r)

    return build


@pytest.fixture
def debug_mode(monkeypatch):
    """Enable the shuffle-bracket cross-check."""
    from bibracket.config import get_settings

    monkeypatch.setenv("BIBRACKET_DEBUG", "true")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
