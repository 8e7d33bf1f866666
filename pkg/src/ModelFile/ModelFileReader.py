import gzip
import json
from io import BufferedReader
from typing import Any

from ..Kripke.KripkeModel import KripkeModel, UnknownWorldException
from .ModelFileBase import ModelFileBase


class InvalidModelFileException(Exception):
    """
    Exception that is thrown when a model file cannot be read.
    """

    def __init__(self, path: str, message: str):
        """
        Initializes a new instance of the InvalidModelFileException class.

        Args:
            path (str): The path of the file.
            message (str): What is wrong with the file.
        """
        super().__init__(f"{path}: {message}")
        self.path = path


class ModelFileReader(ModelFileBase):
    """
    A class that can read a Kripke model from a model.json file. Gzipped files
    are detected by their magic number.
    """

    def _decode_relation(self, data: list) -> frozenset[tuple[str, str]]:
        pairs = set()
        for pair in data:
            if not isinstance(pair, list) or len(pair) != 2:
                raise ValueError(f"Relation entries are [source, target] pairs, got {pair!r}")
            pairs.add((str(pair[0]), str(pair[1])))
        return frozenset(pairs)

    def _decode_valuation(self, data: dict) -> dict[str, dict[str, bool]]:
        valuation = {}
        for name, values in data.items():
            decoded = {}
            for world, value in values.items():
                if value not in (0, 1):
                    raise ValueError(f"Values are 0 or 1, got {value!r} for {name} at {world}")
                decoded[str(world)] = bool(value)
            valuation[str(name)] = decoded
        return valuation

    def _decode_model(self, data: dict[str, Any]) -> KripkeModel:
        return KripkeModel(
            worlds=tuple(str(w) for w in data["worlds"]),
            star=str(data.get("star", "*")),
            relation=self._decode_relation(data.get("relation", [])),
            valuation=self._decode_valuation(data.get("valuation", {})),
        )

    def _migrate(self, json: dict[str, Any]) -> dict[str, Any]:
        """
        Migrates the specified json to the current version. Files without a
        version are hand-written models in the current layout.

        Args:
            json (dict[str, Any]): The json to migrate.

        Returns:
            dict[str, Any]: The migrated json.
        """
        version = json.get("version", self._current_version)
        if version == 1:
            return json
        raise ValueError(f"File version {version} is not supported")

    def _is_gzip(self, file: BufferedReader) -> bool:
        file.seek(0)
        return file.read(2) == b"\x1f\x8b"  # gzip magic number

    def _load(self, file: BufferedReader) -> dict[str, Any]:
        file.seek(0)
        if self._is_gzip(file):
            file.seek(0)
            with gzip.open(file, "rt", encoding="utf-8") as gzip_file:
                return json.load(gzip_file)
        file.seek(0)
        return json.loads(file.read().decode("utf-8"))

    def decode(self, data: dict[str, Any], path: str = "<json>") -> KripkeModel:
        """
        Decodes a model from already parsed JSON.

        Args:
            data (dict[str, Any]): The JSON object.
            path (str, optional): The origin, used in error messages.

        Returns:
            KripkeModel: The model.

        Raises:
            InvalidModelFileException: If the data does not describe a valid model.
        """
        try:
            if not isinstance(data, dict):
                raise ValueError("The top level must be an object")
            return self._decode_model(self._migrate(data))
        except UnknownWorldException as e:
            raise InvalidModelFileException(path, str(e)) from e
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise InvalidModelFileException(path, str(e)) from e

    def read(self, path: str) -> KripkeModel:
        """
        Loads a model from the specified path.

        Args:
            path (str): The path to the model file.

        Returns:
            KripkeModel: The loaded model.

        Raises:
            InvalidModelFileException: If the file is not valid JSON or does not describe a valid model.
        """
        try:
            with open(path, "rb") as file:
                data = self._load(file)
        except (OSError, EOFError, json.JSONDecodeError, UnicodeDecodeError) as e:
            raise InvalidModelFileException(path, str(e)) from e

        return self.decode(data, path)
