from dataclasses import dataclass
from enum import Enum

from ..Syntax.Formulas import (Box, Eps, L1Formula, ModalFormula, Not, Or, PropVar,
                               make_and, make_equiv, make_imp)
from ..Syntax.FormulaPrinter import to_text


class TranslationTag(Enum):
    """The available embeddings of L₁ into modal logic."""

    BLASS = "blass"
    NAIVE = "naive"


class ModalityRendering(Enum):
    """How the box operator is printed."""

    BOX = "box"
    O = "O"

    @property
    def glyph(self) -> str:
        """The glyph passed to the printer."""
        return "[]" if self is ModalityRendering.BOX else "O"


@dataclass(frozen=True, slots=True)
class TranslationScheme:
    """
    A translation together with its printing. The rendering only changes the
    printed glyph; the deontic reading uses the same tree as the box reading.
    """

    tag: TranslationTag = TranslationTag.BLASS
    """The translation."""
    rendering: ModalityRendering = ModalityRendering.BOX
    """The glyph used when printing."""


def prop_var(name) -> PropVar:
    """
    Returns the propositional variable p_x standing for the name variable x.

    Args:
        name (NameVar | str): The name variable or its id.

    Returns:
        PropVar: The variable.
    """
    return PropVar(f"p_{name}")


def _blass_atom(atom: Eps) -> ModalFormula:
    p_a, p_b = prop_var(atom.subject), prop_var(atom.predicate)
    return make_and(
        make_and(p_a, Box(make_imp(p_a, p_b))),
        make_imp(p_b, Box(make_imp(p_b, p_a))))


def _naive_atom(atom: Eps) -> ModalFormula:
    p_a, p_b = prop_var(atom.subject), prop_var(atom.predicate)
    return make_and(p_a, Box(make_equiv(p_a, p_b)))


def _homomorphic(phi: L1Formula, translate_atom) -> ModalFormula:
    if isinstance(phi, Eps):
        return translate_atom(phi)
    if isinstance(phi, Not):
        return Not(_homomorphic(phi.operand, translate_atom))
    if isinstance(phi, Or):
        return Or(_homomorphic(phi.left, translate_atom), _homomorphic(phi.right, translate_atom))
    raise ValueError(f"Not an L1 formula: {phi!r}")


def blass(phi: L1Formula) -> ModalFormula:
    """
    The faithful translation: commutes with ¬ and ∨ and sends εab to
    (p_a ∧ □(p_a ⊃ p_b)) ∧ (p_b ⊃ □(p_b ⊃ p_a)).

    Args:
        phi (L1Formula): The formula.

    Returns:
        ModalFormula: The translated formula over {¬, ∨, □}.
    """
    return _homomorphic(phi, _blass_atom)


def naive(phi: L1Formula) -> ModalFormula:
    """
    The sound but unfaithful translation: commutes with ¬ and ∨ and sends εab
    to p_a ∧ □(p_a ≡ p_b).

    Args:
        phi (L1Formula): The formula.

    Returns:
        ModalFormula: The translated formula over {¬, ∨, □}.
    """
    return _homomorphic(phi, _naive_atom)


def translate(phi: L1Formula, scheme: TranslationScheme = TranslationScheme()) -> ModalFormula:
    """
    Translates with the scheme's translation.

    Args:
        phi (L1Formula): The formula.
        scheme (TranslationScheme, optional): The scheme. Defaults to the Blass translation.

    Returns:
        ModalFormula: The translated formula.
    """
    if scheme.tag is TranslationTag.NAIVE:
        return naive(phi)
    return blass(phi)


def render(m: ModalFormula, scheme: TranslationScheme = TranslationScheme(), sugar: bool = True) -> str:
    """
    Prints a modal formula with the scheme's glyph.

    Args:
        m (ModalFormula): The formula.
        scheme (TranslationScheme, optional): The scheme. Defaults to box rendering.
        sugar (bool, optional): Whether to print derived connectives. Defaults to True.

    Returns:
        str: The text.
    """
    return to_text(m, sugar=sugar, box_glyph=scheme.rendering.glyph)


def modal_depth(m: ModalFormula) -> int:
    """Returns the largest nesting depth of boxes."""
    if isinstance(m, Box):
        return 1 + modal_depth(m.operand)
    if isinstance(m, Not):
        return modal_depth(m.operand)
    if isinstance(m, Or):
        return max(modal_depth(m.left), modal_depth(m.right))
    return 0
