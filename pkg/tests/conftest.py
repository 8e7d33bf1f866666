import pytest
from hypothesis import settings

from src.l10n import LocalizationService
from src.SettingsService import SettingsService

# Tableaux of the larger random formulas take longer than the default deadline.
settings.register_profile("epsilon", max_examples=500, deadline=None)
settings.load_profile("epsilon")


@pytest.fixture(autouse=True)
def reset_services():
    SettingsService._instance = None
    LocalizationService.instance().set_locale("en")
    yield
    SettingsService._instance = None


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    """Runs the test inside an empty directory so settings.json and the log file stay local."""
    monkeypatch.chdir(tmp_path)
    return tmp_path
