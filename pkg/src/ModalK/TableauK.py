import logging
from dataclasses import dataclass, field
from typing import Any, Optional

from ..Kripke.KripkeModel import STAR, KripkeModel
from ..ModelFile.ModelFileWriter import ModelFileWriter
from ..Syntax.Formulas import Box, ModalFormula, Not, Or, PropVar, prop_vars, size
from ..Syntax.FormulaPrinter import to_text
from ..Translate.Translation import modal_depth


@dataclass(frozen=True, slots=True)
class KTableauStats:
    """Effort figures of one tableau search."""

    expansions: int
    """The number of rule applications."""
    longest_branch: int
    """The largest number of rule applications along one path of the search."""
    world_depth: int
    """The deepest successor world created."""


@dataclass(frozen=True, slots=True)
class Verdict:
    """The answer to a validity question."""

    valid: bool
    """Whether the formula is valid."""
    countermodel: Optional[KripkeModel] = None
    """A model falsifying the formula at its star, present iff the formula is not valid."""
    stats: Optional[KTableauStats] = None
    """Search effort, when the verdict comes from the tableau."""

    def to_json(self) -> dict[str, Any]:
        """
        Returns the JSON representation of the verdict.

        Returns:
            dict[str, Any]: A JSON representation of the verdict.
        """
        return {
            "valid": self.valid,
            "countermodel": ModelFileWriter(self.countermodel).encode() if self.countermodel else None,
        }


@dataclass(eq=False)
class _World:
    literals: frozenset
    children: list["_World"] = field(default_factory=list)


def _is_literal(f: ModalFormula) -> bool:
    if isinstance(f, Not):
        f = f.operand
    return isinstance(f, (PropVar, Box))


def _complement(f: ModalFormula) -> ModalFormula:
    return f.operand if isinstance(f, Not) else Not(f)


def _key(f: ModalFormula) -> str:
    return to_text(f, sugar=False)


class _KProver:
    """
    Satisfiability search for sets of formulas. A world's formulas are
    saturated with the propositional rules; then each ¬□x gets one successor
    holding ¬x together with every y such that □y is at the world. Results
    are memoized on the set a world starts from.
    """

    def __init__(self):
        self._cache: dict[frozenset, Optional[_World]] = {}
        self.expansions = 0
        self.longest_branch = 0
        self.world_depth = 0

    def satisfy(self, formulas: frozenset, depth: int = 0, branch: int = 0) -> Optional[_World]:
        if formulas in self._cache:
            return self._cache[formulas]
        self.world_depth = max(self.world_depth, depth)
        pending = tuple(sorted(formulas, key=_key))
        result = self._saturate(frozenset(), frozenset(), pending, depth, branch)
        self._cache[formulas] = result
        return result

    def _saturate(self, literals: frozenset, processed: frozenset, pending: tuple,
                  depth: int, branch: int) -> Optional[_World]:
        while pending:
            f, pending = pending[0], pending[1:]
            if f in literals or f in processed:
                continue
            if _is_literal(f):
                if _complement(f) in literals:
                    return None
                literals = literals | {f}
                continue

            self.expansions += 1
            branch += 1
            processed = processed | {f}
            if isinstance(f, Or):
                left = self._saturate(literals, processed, (f.left,) + pending, depth, branch)
                if left is not None:
                    return left
                return self._saturate(literals, processed, (f.right,) + pending, depth, branch)

            inner = f.operand
            if isinstance(inner, Not):
                pending = (inner.operand,) + pending
            elif isinstance(inner, Or):
                pending = (Not(inner.left), Not(inner.right)) + pending
            else:
                raise ValueError(f"Not a modal formula: {f!r}")

        return self._expand_successors(literals, depth, branch)

    def _expand_successors(self, literals: frozenset, depth: int, branch: int) -> Optional[_World]:
        self.longest_branch = max(self.longest_branch, branch)
        boxed = [f.operand for f in literals if isinstance(f, Box)]
        world = _World(literals)
        for f in sorted(literals, key=_key):
            if isinstance(f, Not) and isinstance(f.operand, Box):
                self.expansions += 1
                successor = frozenset([Not(f.operand.operand), *boxed])
                child = self.satisfy(successor, depth + 1, branch + 1)
                if child is None:
                    return None
                world.children.append(child)
        return world


def _to_model(root: _World, names: list[str]) -> KripkeModel:
    ids: dict[int, str] = {id(root): STAR}
    order = [root]
    relation = set()
    i = 0
    while i < len(order):
        world = order[i]
        i += 1
        for child in world.children:
            if id(child) not in ids:
                ids[id(child)] = f"w{len(ids)}"
                order.append(child)
            relation.add((ids[id(world)], ids[id(child)]))

    valuation = {
        name: {ids[id(w)]: PropVar(name) in w.literals for w in order}
        for name in names
    }
    return KripkeModel(tuple(ids[id(w)] for w in order), STAR, frozenset(relation), valuation)


def is_valid_k(f: ModalFormula) -> Verdict:
    """
    Decides validity in the modal logic K by searching for a model of ¬f.
    An open saturated branch gives a finite tree-like countermodel whose
    root is its star; variables missing from a world's literals are false
    there.

    Args:
        f (ModalFormula): The formula.

    Returns:
        Verdict: The verdict, with a countermodel when f is not valid.
    """
    prover = _KProver()
    world = prover.satisfy(frozenset({Not(f)}))
    stats = KTableauStats(prover.expansions, prover.longest_branch, prover.world_depth)
    logging.debug(f"K tableau for {to_text(f)}: {stats}")
    if world is None:
        return Verdict(True, None, stats)
    return Verdict(False, _to_model(world, sorted(prop_vars(f))), stats)


def branch_bound(f: ModalFormula) -> int:
    """
    Returns the bound on the branch length of the search for f: every world
    processes each signed subformula at most once and the worlds nest at most
    as deep as the boxes do.

    Args:
        f (ModalFormula): The formula.

    Returns:
        int: The bound.
    """
    return 2 * (size(f) + 1) * (modal_depth(f) + 1)
