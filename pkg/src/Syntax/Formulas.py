import re
from dataclasses import dataclass
from typing import Iterator, Union

_name_pattern = re.compile(r"^[a-z][a-z0-9_]*$")


@dataclass(frozen=True, slots=True, order=True)
class NameVar:
    """
    A name variable of the propositional ontology (the a, b, c of εab).
    Two name variables are equal iff their ids are equal.
    """

    id: str
    """The lowercase identifier of the variable."""

    def __post_init__(self):
        if not isinstance(self.id, str) or not _name_pattern.match(self.id):
            raise ValueError(f"Invalid name variable: {self.id!r}")

    def __str__(self) -> str:
        return self.id


@dataclass(frozen=True, slots=True)
class Eps:
    """
    The atomic copula εab ("the a is b"). The only atom shape of L₁.
    """

    subject: NameVar
    """The name variable in subject position (a in εab)."""
    predicate: NameVar
    """The name variable in predicate position (b in εab)."""


@dataclass(frozen=True, slots=True)
class PropVar:
    """A propositional variable of the modal language."""

    name: str
    """The variable name."""


@dataclass(frozen=True, slots=True)
class Not:
    """Negation. Shared by the L₁ and the modal language."""

    operand: "Formula"
    """The negated formula."""


@dataclass(frozen=True, slots=True)
class Or:
    """Disjunction. Shared by the L₁ and the modal language."""

    left: "Formula"
    """The left disjunct."""
    right: "Formula"
    """The right disjunct."""


@dataclass(frozen=True, slots=True)
class Box:
    """
    The single box-like modal operator. The deontic O is the same node
    printed with another glyph.
    """

    operand: "ModalFormula"
    """The formula under the box."""


L1Formula = Union[Eps, Not, Or]
"""A formula of L₁ over {ε, ¬, ∨}."""

ModalFormula = Union[PropVar, Not, Or, Box]
"""A propositional modal formula over {¬, ∨, □}."""

Formula = Union[Eps, PropVar, Not, Or, Box]


def eps(subject: str, predicate: str) -> Eps:
    """
    Shorthand for building an ε-atom from two identifier strings.

    Args:
        subject (str): The subject name variable id.
        predicate (str): The predicate name variable id.

    Returns:
        Eps: The atom.
    """
    return Eps(NameVar(subject), NameVar(predicate))


def make_and(left: Formula, right: Formula) -> Formula:
    """Builds ¬(¬left ∨ ¬right)."""
    return Not(Or(Not(left), Not(right)))


def make_imp(left: Formula, right: Formula) -> Formula:
    """Builds ¬left ∨ right."""
    return Or(Not(left), right)


def make_equiv(left: Formula, right: Formula) -> Formula:
    """Builds (left ⊃ right) ∧ (right ⊃ left) in expanded form."""
    return make_and(make_imp(left, right), make_imp(right, left))


def make_diamond(operand: ModalFormula) -> ModalFormula:
    """Builds ¬□¬operand."""
    return Not(Box(Not(operand)))


def children(formula: Formula) -> tuple:
    """
    Returns the immediate subformulas of a formula, in child-index order.

    Args:
        formula (Formula): The formula.

    Returns:
        tuple: The children (empty for atoms).
    """
    if isinstance(formula, Or):
        return (formula.left, formula.right)
    if isinstance(formula, (Not, Box)):
        return (formula.operand,)
    return ()


def subformula_at(formula: Formula, path: tuple[int, ...]) -> Formula:
    """
    Follows a path of child indices from the root.

    Args:
        formula (Formula): The root formula.
        path (tuple[int, ...]): The child indices.

    Returns:
        Formula: The subformula at the path.
    """
    current = formula
    for index in path:
        current = children(current)[index]
    return current


def iter_subformulas(formula: Formula) -> Iterator[Formula]:
    """Iterates every subformula occurrence in pre-order."""
    stack = [formula]
    while stack:
        current = stack.pop()
        yield current
        stack.extend(reversed(children(current)))


def subformulas(formula: Formula) -> set[Formula]:
    """Returns the set of distinct subformulas."""
    return set(iter_subformulas(formula))


def size(formula: Formula) -> int:
    """Returns the number of AST nodes."""
    return sum(1 for _ in iter_subformulas(formula))


def atoms(formula: L1Formula) -> set[Eps]:
    """Returns the distinct ε-atoms of an L₁ formula."""
    return {f for f in iter_subformulas(formula) if isinstance(f, Eps)}


def prop_vars(formula: ModalFormula) -> set[str]:
    """Returns the names of the propositional variables of a modal formula."""
    return {f.name for f in iter_subformulas(formula) if isinstance(f, PropVar)}


def is_l1(formula: Formula) -> bool:
    """Returns True if the formula only uses ε-atoms, ¬ and ∨."""
    return all(isinstance(f, (Eps, Not, Or)) for f in iter_subformulas(formula))


def evaluate_classical(formula: L1Formula, valuation: dict[Eps, bool], default: bool = False) -> bool:
    """
    Evaluates an L₁ formula classically, treating every ε-atom as a sentential
    variable.

    Args:
        formula (L1Formula): The formula.
        valuation (dict[Eps, bool]): Truth values of atoms.
        default (bool, optional): Value of atoms missing from the valuation. Defaults to False.

    Returns:
        bool: The truth value.
    """
    if isinstance(formula, Eps):
        return valuation.get(formula, default)
    if isinstance(formula, Not):
        return not evaluate_classical(formula.operand, valuation, default)
    if isinstance(formula, Or):
        return (evaluate_classical(formula.left, valuation, default)
                or evaluate_classical(formula.right, valuation, default))
    raise ValueError(f"Not an L1 formula: {formula!r}")
