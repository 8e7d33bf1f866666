import json
import os

import pytest

from src import constants
from src.l10n import LocalizationService, MissingStringException, __


def flatten(data, prefix=""):
    keys = set()
    for key, value in data.items():
        if isinstance(value, dict):
            keys |= flatten(value, prefix + key + ".")
        else:
            keys.add(prefix + key)
    return keys


def catalogue_keys(code):
    with open(os.path.join(constants.lang_folder, code + ".json"), "r", encoding="utf-8") as file:
        return flatten(json.load(file))


def test_catalogues_have_the_same_keys():
    assert catalogue_keys("es") == catalogue_keys("en")


def test_format_arguments():
    assert __("@cli.roundtrip_ok", count=3, mismatches=0) == "OK: 3 formulas, 0 mismatches"
    LocalizationService.instance().set_locale("es")
    assert __("@cli.roundtrip_ok", count=3, mismatches=0) == "OK: 3 fórmulas, 0 discrepancias"


def test_escaped_braces():
    assert "{(*, g)}" in __("@audit.note.os5_empty")


def test_unknown_language_falls_back():
    service = LocalizationService.instance()
    assert service.set_locale("xx") == "en"
    assert service.locale == "en"


def test_missing_keys_raise_when_asked(monkeypatch):
    monkeypatch.setattr(LocalizationService, "throw_on_missing", True)
    with pytest.raises(MissingStringException) as info:
        __("@cli.no_such_key")
    assert info.value.key == "@cli.no_such_key"


def test_plain_strings_pass_through(monkeypatch):
    monkeypatch.setattr(LocalizationService, "throw_on_missing", True)
    assert __("no key here {x}") == "no key here {x}"
    assert __("{count} left", count=2) == "2 left"
