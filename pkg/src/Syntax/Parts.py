from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .Formulas import Eps, L1Formula, Not, Or


class Polarity(Enum):
    """The polarity of a part occurrence."""

    POSITIVE = "+"
    NEGATIVE = "-"

    def flipped(self) -> "Polarity":
        """Returns the opposite polarity."""
        return Polarity.NEGATIVE if self is Polarity.POSITIVE else Polarity.POSITIVE


@dataclass(frozen=True, slots=True)
class PartOccurrence:
    """
    A positive or negative part of a formula, located by its path of child
    indices from the root.
    """

    path: tuple[int, ...]
    """The child indices leading from the root to the part."""
    polarity: Polarity
    """Whether the part is positive or negative."""
    formula: L1Formula
    """The subformula at the path."""

    def overlaps(self, other: "PartOccurrence") -> bool:
        """
        Returns True if one occurrence lies inside the other.

        Args:
            other (PartOccurrence): The other occurrence.

        Returns:
            bool: True if either path is a prefix of the other.
        """
        shorter, longer = sorted((self.path, other.path), key=len)
        return longer[:len(shorter)] == shorter


def parts(phi: L1Formula) -> list[PartOccurrence]:
    """
    Computes every positive and negative part occurrence of a formula:
    the formula itself is positive, the disjuncts of a positive disjunction
    are positive, and negation flips the polarity of its operand. The
    disjuncts of a negative disjunction are not parts.

    Args:
        phi (L1Formula): The formula.

    Returns:
        list[PartOccurrence]: The occurrences in pre-order, left to right.
    """
    result = []
    stack = [PartOccurrence((), Polarity.POSITIVE, phi)]
    while stack:
        occurrence = stack.pop()
        result.append(occurrence)
        formula, path, polarity = occurrence.formula, occurrence.path, occurrence.polarity
        if isinstance(formula, Not):
            stack.append(PartOccurrence(path + (0,), polarity.flipped(), formula.operand))
        elif isinstance(formula, Or) and polarity is Polarity.POSITIVE:
            stack.append(PartOccurrence(path + (1,), polarity, formula.right))
            stack.append(PartOccurrence(path + (0,), polarity, formula.left))
    return result


def minimal_parts(phi: L1Formula) -> tuple[set[L1Formula], set[L1Formula]]:
    """
    Computes the minimal positive and negative parts. A positive part is
    minimal if it is neither a negation nor a disjunction; a negative part is
    minimal if it is not a negation.

    Args:
        phi (L1Formula): The formula.

    Returns:
        tuple[set[L1Formula], set[L1Formula]]: The minimal positive and the minimal negative parts.
    """
    minimal_pos = set()
    minimal_neg = set()
    for occurrence in parts(phi):
        formula = occurrence.formula
        if occurrence.polarity is Polarity.POSITIVE:
            if not isinstance(formula, (Not, Or)):
                minimal_pos.add(formula)
        elif not isinstance(formula, Not):
            minimal_neg.add(formula)
    return minimal_pos, minimal_neg


def axiom_witness(phi: L1Formula) -> Optional[tuple[PartOccurrence, PartOccurrence]]:
    """
    Finds a formula occurring both as a positive and as a negative part at
    two non-overlapping occurrences.

    Args:
        phi (L1Formula): The formula.

    Returns:
        Optional[tuple[PartOccurrence, PartOccurrence]]: The positive and the negative
        occurrence, or None if phi is not an axiom of the tableau calculus.
    """
    positives: dict[L1Formula, list[PartOccurrence]] = {}
    negatives = []
    for occurrence in parts(phi):
        if occurrence.polarity is Polarity.POSITIVE:
            positives.setdefault(occurrence.formula, []).append(occurrence)
        else:
            negatives.append(occurrence)

    for negative in negatives:
        for positive in positives.get(negative.formula, []):
            if not positive.overlaps(negative):
                return positive, negative
    return None


def is_axiom_tl1(phi: L1Formula) -> bool:
    """
    Returns True if phi has the axiom shape F[ψ₊, ψ₋].

    Args:
        phi (L1Formula): The formula.

    Returns:
        bool: True if some formula is both a positive and a negative part.
    """
    return axiom_witness(phi) is not None


@dataclass
class PartsIndex:
    """
    The parts of one formula grouped for repeated membership queries.
    """

    occurrences: list[PartOccurrence]
    """All part occurrences in pre-order."""
    positive: set[L1Formula] = field(default_factory=set)
    """Formulas occurring as positive parts."""
    negative: set[L1Formula] = field(default_factory=set)
    """Formulas occurring as negative parts."""

    @staticmethod
    def of(phi: L1Formula) -> "PartsIndex":
        """
        Builds the index of a formula.

        Args:
            phi (L1Formula): The formula.

        Returns:
            PartsIndex: The index.
        """
        index = PartsIndex(parts(phi))
        for occurrence in index.occurrences:
            if occurrence.polarity is Polarity.POSITIVE:
                index.positive.add(occurrence.formula)
            else:
                index.negative.add(occurrence.formula)
        return index

    @property
    def negative_atoms(self) -> set[Eps]:
        """The ε-atoms occurring as negative parts."""
        return {f for f in self.negative if isinstance(f, Eps)}

    @property
    def positive_atoms(self) -> set[Eps]:
        """The ε-atoms occurring as positive parts."""
        return {f for f in self.positive if isinstance(f, Eps)}
