from dataclasses import dataclass, field

import numpy as np

from ..Syntax.Formulas import Box, ModalFormula, Not, Or, PropVar, prop_vars

World = str
"""World ids are strings: "*", "g", "g1", "g2", ..."""

STAR: World = "*"


class UnknownWorldException(Exception):
    """
    Exception that is thrown when a world is not part of the model.
    """

    def __init__(self, world: World):
        """
        Initializes a new instance of the UnknownWorldException class.

        Args:
            world (World): The unknown world.
        """
        super().__init__(f"Unknown world: {world}")
        self.world = world


class UndeclaredVariableException(Exception):
    """
    Exception that is thrown when a formula mentions a variable the model
    does not value.
    """

    def __init__(self, name: str, world: World):
        """
        Initializes a new instance of the UndeclaredVariableException class.

        Args:
            name (str): The variable name.
            world (World): The world the formula was evaluated at.
        """
        super().__init__(f"Undeclared variable {name} (evaluating at {world})")
        self.name = name
        self.world = world


@dataclass(frozen=True, slots=True)
class KripkeModel:
    """
    A finite pointed Kripke model. Models are never changed after construction.
    """

    worlds: tuple[World, ...]
    """The worlds, in display order."""
    star: World
    """The distinguished evaluation world."""
    relation: frozenset[tuple[World, World]]
    """The accessibility relation."""
    valuation: dict[str, dict[World, bool]] = field(default_factory=dict)
    """For every declared variable, its truth value at every world."""

    def __post_init__(self):
        if not self.worlds:
            raise ValueError("A model needs at least one world")
        if len(set(self.worlds)) != len(self.worlds):
            raise ValueError("Duplicate world ids")
        if self.star not in self.worlds:
            raise UnknownWorldException(self.star)
        known = set(self.worlds)
        for source, target in self.relation:
            for world in (source, target):
                if world not in known:
                    raise UnknownWorldException(world)
        for name, values in self.valuation.items():
            if set(values) != known:
                raise ValueError(f"Valuation of {name} is not total on the worlds")

    @property
    def variables(self) -> list[str]:
        """The declared variables, sorted."""
        return sorted(self.valuation)

    def successors(self, world: World) -> list[World]:
        """
        Returns the worlds accessible from a world, in display order.

        Args:
            world (World): The world.

        Returns:
            list[World]: The successors.
        """
        return [w for w in self.worlds if (world, w) in self.relation]

    def value(self, name: str, world: World) -> bool:
        """
        Returns the truth value of a variable at a world.

        Args:
            name (str): The variable name.
            world (World): The world.

        Returns:
            bool: The value.
        """
        if name not in self.valuation:
            raise UndeclaredVariableException(name, world)
        return self.valuation[name][world]

    def relation_matrix(self) -> np.ndarray:
        """
        Returns the relation as a boolean adjacency matrix indexed by the
        positions in `worlds`.

        Returns:
            np.ndarray: A square boolean matrix.
        """
        index = {w: i for i, w in enumerate(self.worlds)}
        matrix = np.zeros((len(self.worlds), len(self.worlds)), dtype=bool)
        for source, target in self.relation:
            matrix[index[source], index[target]] = True
        return matrix

    def valuation_matrix(self, names: list[str], worlds: list[World]) -> np.ndarray:
        """
        Returns the 0/1 matrix with one row per variable and one column per world.

        Args:
            names (list[str]): The variables (rows).
            worlds (list[World]): The worlds (columns).

        Returns:
            np.ndarray: An integer matrix.
        """
        return np.array([[int(self.value(n, w)) for w in worlds] for n in names], dtype=int).reshape(len(names), len(worlds))

    def forces(self, world: World, formula: ModalFormula) -> bool:
        """
        Shorthand for forces(self, world, formula).
        """
        return forces(self, world, formula)


def _forces(m: KripkeModel, world: World, formula: ModalFormula) -> bool:
    if isinstance(formula, PropVar):
        return m.valuation[formula.name][world]
    if isinstance(formula, Not):
        return not _forces(m, world, formula.operand)
    if isinstance(formula, Or):
        return _forces(m, world, formula.left) or _forces(m, world, formula.right)
    if isinstance(formula, Box):
        return all(_forces(m, successor, formula.operand) for successor in m.successors(world))
    raise ValueError(f"Not a modal formula: {formula!r}")


def forces(m: KripkeModel, world: World, formula: ModalFormula) -> bool:
    """
    Evaluates a modal formula at a world. A boxed formula holds at a world iff
    its operand holds at every successor, so it holds vacuously at a world
    without successors.

    Args:
        m (KripkeModel): The model.
        world (World): The evaluation world.
        formula (ModalFormula): The formula.

    Returns:
        bool: True if the world forces the formula.

    Raises:
        UnknownWorldException: If the world is not in the model.
        UndeclaredVariableException: If the formula mentions a variable the model does not value.
    """
    if world not in m.worlds:
        raise UnknownWorldException(world)
    for name in sorted(prop_vars(formula)):
        if name not in m.valuation:
            raise UndeclaredVariableException(name, world)
    return _forces(m, world, formula)
