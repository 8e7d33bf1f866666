import json
import logging

from . import constants


class SettingsService:
    """
    The settings services provides a simple way for storing key/value pairs in a "settings.json".
    A missing file means every key has its default.
    """

    _instance = None

    _settings_file = constants.app_settings_file

    defaults = {
        "language": "en",
        "log_level": "WARNING",
        "roundtrip_workers": constants.roundtrip_default_workers,
        "roundtrip_chunk_size": constants.roundtrip_default_chunk_size,
        "render": "box",
    }
    """The value of every recognized key when the file does not set it."""

    @staticmethod
    def instance() -> "SettingsService":
        """
        Gets the instance of the SettingsService.

        Returns:
            SettingsService: The instance.
        """
        if not SettingsService._instance:
            SettingsService._instance = SettingsService()
        return SettingsService._instance

    @staticmethod
    def use_file(path: str) -> "SettingsService":
        """
        Replaces the instance with one backed by another settings file.

        Args:
            path (str): The settings file.

        Returns:
            SettingsService: The new instance.
        """
        SettingsService._instance = SettingsService(path)
        return SettingsService._instance

    def __init__(self, settings_file: str = None):
        """
        Creates a new instance of the SettingsService.

        Args:
            settings_file (str, optional): The settings file. Defaults to "settings.json".
        """
        self._settings_file = settings_file or SettingsService._settings_file
        self._settings = {}
        self._load_settings()

    def _load_settings(self):
        try:
            with open(self._settings_file, "r", encoding="utf-8") as file:
                self._settings = json.load(file)
        except FileNotFoundError:
            pass
        except json.JSONDecodeError as e:
            logging.warning(f"Ignoring malformed settings file {self._settings_file}: {e}")

    def get(self, key: str, default_value=None):
        """
        Gets the value for the given key.

        Args:
            key (str): The key.
            default_value (any, optional): The value to use if the key is not found.
                Defaults to the key's entry in `defaults`.

        Returns:
            any: The value.
        """
        if default_value is None:
            default_value = self.defaults.get(key)
        return self._settings.get(key, default_value)

