import gzip
import json
from typing import Any

from ..Kripke.KripkeModel import KripkeModel
from .ModelFileBase import ModelFileBase


class ModelFileWriter(ModelFileBase):
    """
    A class that can write a Kripke model to a model.json file.
    """

    minify: bool = False
    """Whether to minify the JSON output."""

    gzip: bool = None
    """Whether to gzip the output. None means gzip iff the path ends with ".gz"."""

    def __init__(self, model: KripkeModel, minify: bool = False, gzip: bool = None) -> None:
        """
        Initializes the ModelFileWriter class.

        Args:
            model (KripkeModel): The model to write.
            minify (bool, optional): Whether to minify the JSON output. Defaults to False.
            gzip (bool, optional): Whether to gzip the output. Defaults to None, which
                gzips when the path ends with ".gz".
        """
        self._model = model
        self.minify = minify
        self.gzip = gzip

    def _encode_relation(self) -> list[list[str]]:
        order = {w: i for i, w in enumerate(self._model.worlds)}
        pairs = sorted(self._model.relation, key=lambda p: (order[p[0]], order[p[1]]))
        return [[source, target] for source, target in pairs]

    def _encode_valuation(self) -> dict[str, dict[str, int]]:
        return {
            name: {world: int(self._model.valuation[name][world]) for world in self._model.worlds}
            for name in self._model.variables
        }

    def encode(self) -> dict[str, Any]:
        """
        Returns the model.json object of the model.

        Returns:
            dict[str, Any]: The JSON object.
        """
        return {
            "worlds": list(self._model.worlds),
            "star": self._model.star,
            "relation": self._encode_relation(),
            "valuation": self._encode_valuation(),
        }

    def _encode_file(self) -> dict[str, Any]:
        data = {"version": self._current_version, "client_name": self._client_name,
                "client_version": self._client_version}
        data.update(self.encode())
        return data

    def dumps(self) -> str:
        """
        Returns the model.json text of the model.

        Returns:
            str: The JSON text.
        """
        indent = 4 if not self.minify else None
        return json.dumps(self.encode(), indent=indent)

    def write(self, path: str) -> None:
        """
        Saves the model to the specified path.

        Args:
            path (str): The path to the model file.
        """
        data = self._encode_file()
        indent = 4 if not self.minify else None
        use_gzip = self.gzip if self.gzip is not None else path.endswith(".gz")

        if use_gzip:
            with gzip.open(path, "wt", encoding="utf-8") as f:
                json.dump(data, f, indent=indent)
        else:
            with open(path, "w", encoding="utf-8") as f:
                json.dump(data, f, indent=indent)
