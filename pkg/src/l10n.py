import json
import logging
import os
from dataclasses import dataclass

from . import constants


def __(key_or_string: str, **kwargs) -> str:
    """
    Localizes a message key of the CLI, the frame audit or the HTML report.

    Args:
        key_or_string (str): A key such as "@cli.provable", or a plain string.
        **kwargs: The values of the placeholders in the message.

    Returns:
        str: The message in the current language.
    """
    return LocalizationService.instance().get(key_or_string, **kwargs)


class MissingStringException(Exception):
    """Raised for a key that no loaded catalogue defines, when missing strings are errors."""

    def __init__(self, key: str):
        super().__init__(f"Missing string: {key}")
        self.key = key


@dataclass(frozen=True, slots=True)
class Language:
    """A language listed in "languages.json"."""

    code: str
    """The ISO 639-1 code, which is also the catalogue file name."""

    name: str
    """The name of the language in that language."""


def flatten_catalogue(data: dict, prefix: str = "") -> dict[str, str]:
    """
    Flattens nested sections into dotted keys, so {"@cli": {"provable": ...}}
    becomes {"@cli.provable": ...}.
    """
    result = {}
    for key, value in data.items():
        if isinstance(value, dict):
            result.update(flatten_catalogue(value, prefix + key + "."))
        else:
            result[prefix + key] = value
    return result


class LocalizationService:
    """
    Message catalogues for the CLI output, the frame audit notes and the HTML
    report. One JSON file per language lives in "res/lang/"; "languages.json"
    lists the languages and names the fallback, whose messages sit underneath
    the selected language so a partial catalogue still prints something.

    Messages are str.format templates. Literal braces in a note, such as
    the relation "{(*, g)}", are written doubled in the catalogue.
    """

    _instance = None

    warn_on_missing: bool = True
    """Whether a missing key is logged (once per key)."""

    throw_on_missing: bool = False
    """Whether a missing key raises MissingStringException. Tests turn this on."""

    def __init__(self, lang_folder: str = None):
        self._lang_folder = lang_folder or constants.lang_folder
        with open(os.path.join(self._lang_folder, "languages.json"), "r", encoding="utf-8") as file:
            data = json.load(file)
        self._fallback: str = data["fallback_lang"]
        self.languages: list[Language] = [Language(**lang) for lang in data["langs"]]
        self._locale: str = self._fallback
        self._strings: dict[str, str] = {}
        self._warned: set[str] = set()
        self._load()

    @staticmethod
    def instance() -> "LocalizationService":
        if not LocalizationService._instance:
            LocalizationService._instance = LocalizationService()
        return LocalizationService._instance

    @property
    def locale(self) -> str:
        """The code of the language in use."""
        return self._locale

    def set_locale(self, code: str) -> str:
        """
        Switches language. An unknown code logs a warning and selects the fallback.

        Args:
            code (str): An ISO 639-1 code such as "en" or "es".

        Returns:
            str: The code actually in use.
        """
        if code not in (lang.code for lang in self.languages):
            logging.warning(f"Unknown language {code}, using {self._fallback}")
            code = self._fallback
        if code != self._locale or not self._strings:
            self._locale = code
            self._load()
        return self._locale

    def _load(self):
        self._strings = {}
        self._warned = set()
        for code in dict.fromkeys([self._fallback, self._locale]):
            path = os.path.join(self._lang_folder, code + ".json")
            try:
                with open(path, "r", encoding="utf-8") as file:
                    self._strings.update(flatten_catalogue(json.load(file)))
            except FileNotFoundError:
                logging.warning(f"Missing catalogue for language {code}")

    def get(self, key_or_string: str, **kwargs) -> str:
        """
        Looks up and formats a message. Keys start with "@"; any other string
        is returned as given, formatted only when arguments are passed, and
        is never reported as missing.
        """
        template = self._strings.get(key_or_string)
        if template is None:
            self._missing(key_or_string)
            return key_or_string.format(**kwargs) if kwargs else key_or_string
        return template.format(**kwargs)

    def _missing(self, key: str):
        if not key.startswith("@"):
            return
        if self.throw_on_missing:
            raise MissingStringException(key)
        if self.warn_on_missing and key not in self._warned:
            logging.warning(f"Missing string: {key}")
            self._warned.add(key)
