import logging

import numpy as np

from .. import constants
from ..Kripke.KripkeModel import STAR, KripkeModel
from ..Syntax.Formulas import Box, ModalFormula, Not, Or, PropVar, prop_vars
from ..Translate.Translation import modal_depth
from .TableauK import Verdict


class DepthExceededException(Exception):
    """
    Exception that is thrown when the depth-1 oracle receives a formula with nested boxes.
    """

    def __init__(self, depth: int, max_depth: int):
        """
        Initializes a new instance of the DepthExceededException class.

        Args:
            depth (int): The modal depth of the formula.
            max_depth (int): The largest supported depth.
        """
        super().__init__(f"Modal depth {depth} exceeds {max_depth}")
        self.depth = depth
        self.max_depth = max_depth


class TooManyVariablesException(Exception):
    """
    Exception that is thrown when the depth-1 oracle would enumerate too many configurations.
    """

    def __init__(self, count: int, max_count: int):
        """
        Initializes a new instance of the TooManyVariablesException class.

        Args:
            count (int): The number of variables of the formula.
            max_count (int): The largest supported number of variables.
        """
        super().__init__(f"{count} variables exceed the limit of {max_count}")
        self.count = count
        self.max_count = max_count


def _evaluate(f: ModalFormula, names: list[str], sigmas: np.ndarray, subsets: np.ndarray) -> np.ndarray:
    """
    Evaluates f for every pair of root valuation and successor set.
    sigmas has shape (k, 1) and holds valuations as bitmasks over names;
    subsets has shape (1, m) and holds successor sets as bitmasks over the
    2^len(names) valuations.
    """
    if isinstance(f, PropVar):
        bit = names.index(f.name)
        return np.broadcast_to(((sigmas >> bit) & 1).astype(bool), (sigmas.shape[0], subsets.shape[1]))
    if isinstance(f, Not):
        return ~_evaluate(f.operand, names, sigmas, subsets)
    if isinstance(f, Or):
        return _evaluate(f.left, names, sigmas, subsets) | _evaluate(f.right, names, sigmas, subsets)
    if isinstance(f, Box):
        all_sigmas = np.arange(2 ** len(names), dtype=np.int64)[:, None]
        holds = _evaluate(f.operand, names, all_sigmas, np.zeros((1, 1), dtype=np.int64))[:, 0]
        mask = int(sum(1 << int(i) for i in np.flatnonzero(holds)))
        # Every successor valuation must satisfy the operand.
        boxed = (subsets & ~np.int64(mask)) == 0
        return np.broadcast_to(boxed, (sigmas.shape[0], subsets.shape[1]))
    raise ValueError(f"Not a modal formula: {f!r}")


def _valuation_of(sigma: int, names: list[str]) -> dict[str, bool]:
    return {name: bool((sigma >> bit) & 1) for bit, name in enumerate(names)}


def _countermodel(sigma: int, subset: int, names: list[str]) -> KripkeModel:
    successors = [s for s in range(2 ** len(names)) if (subset >> s) & 1]
    worlds = (STAR,) + tuple(f"s{s}" for s in successors)
    relation = frozenset((STAR, f"s{s}") for s in successors)
    valuation = {name: {STAR: _valuation_of(sigma, names)[name]} for name in names}
    for s in successors:
        for name, value in _valuation_of(s, names).items():
            valuation[name][f"s{s}"] = value
    return KripkeModel(worlds, STAR, relation, valuation)


def is_valid_k_depth1(f: ModalFormula) -> Verdict:
    """
    Decides K-validity of a formula without nested boxes by enumeration. The
    truth of such a formula at a world only depends on the world's valuation σ
    and on the set S of valuations found at its successors, so f is valid iff
    it holds for every pair (σ, S), S possibly empty. With v variables there
    are 2^v × 2^(2^v) pairs, evaluated at once as boolean arrays.

    Args:
        f (ModalFormula): A formula of modal depth at most 1.

    Returns:
        Verdict: The verdict; a countermodel is a star with one successor per valuation in S.

    Raises:
        DepthExceededException: If f nests boxes.
        TooManyVariablesException: If f has more variables than the enumeration supports.
    """
    depth = modal_depth(f)
    if depth > 1:
        raise DepthExceededException(depth, 1)

    names = sorted(prop_vars(f))
    if len(names) > constants.depth1_max_variables:
        raise TooManyVariablesException(len(names), constants.depth1_max_variables)

    sigmas = np.arange(2 ** len(names), dtype=np.int64)[:, None]
    subsets = np.arange(2 ** (2 ** len(names)), dtype=np.int64)[None, :]
    holds = _evaluate(f, names, sigmas, subsets)
    logging.debug(f"Depth-1 oracle evaluated {holds.size} configurations over {len(names)} variables")

    if holds.all():
        return Verdict(True)
    sigma, subset = np.argwhere(~holds)[0]
    return Verdict(False, _countermodel(int(sigma), int(subset), names))
