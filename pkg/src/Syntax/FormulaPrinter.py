from .Formulas import Box, Eps, Formula, Not, Or, PropVar

# Binding strength, loosest first.
_EQUIV = 1
_IMP = 2
_OR = 3
_AND = 4
_UNARY = 5
_ATOM = 6


def _match_and(formula: Formula):
    # ¬(¬a ∨ ¬b)
    if (isinstance(formula, Not) and isinstance(formula.operand, Or)
            and isinstance(formula.operand.left, Not) and isinstance(formula.operand.right, Not)):
        return formula.operand.left.operand, formula.operand.right.operand
    return None


def _match_imp(formula: Formula):
    # ¬a ∨ b
    if isinstance(formula, Or) and isinstance(formula.left, Not):
        return formula.left.operand, formula.right
    return None


def _match_equiv(formula: Formula):
    pair = _match_and(formula)
    if pair is None:
        return None
    first, second = _match_imp(pair[0]), _match_imp(pair[1])
    if first is None or second is None:
        return None
    if first[0] == second[1] and first[1] == second[0]:
        return first
    return None


def _match_diamond(formula: Formula):
    # ¬□¬a
    if (isinstance(formula, Not) and isinstance(formula.operand, Box)
            and isinstance(formula.operand.operand, Not)):
        return formula.operand.operand.operand
    return None


class FormulaPrinter:
    """
    Prints formulas in the ASCII grammar accepted by the parser.

    With sugar enabled the printer recognizes the exact expansions of ∧, ⊃, ≡
    and ◇ and prints the derived connective instead. Each sugar re-expands to
    the same tree, so parsing the output always gives back the printed AST.
    """

    def __init__(self, sugar: bool = True, box_glyph: str = "[]"):
        """
        Initializes a new instance of the FormulaPrinter class.

        Args:
            sugar (bool, optional): Whether to print derived connectives. Defaults to True.
            box_glyph (str, optional): The glyph used for the box operator. Defaults to "[]".
        """
        self.sugar = sugar
        self.box_glyph = box_glyph

    def print(self, formula: Formula) -> str:
        """
        Prints a formula.

        Args:
            formula (Formula): The formula.

        Returns:
            str: The text.
        """
        text, _ = self._print(formula)
        return text

    def _wrap(self, formula: Formula, min_level: int) -> str:
        text, level = self._print(formula)
        return f"({text})" if level < min_level else text

    def _print(self, formula: Formula) -> tuple[str, int]:
        if isinstance(formula, Eps):
            return f"eps({formula.subject.id},{formula.predicate.id})", _ATOM
        if isinstance(formula, PropVar):
            return formula.name, _ATOM

        if self.sugar:
            pair = _match_equiv(formula)
            if pair is not None:
                return f"{self._wrap(pair[0], _EQUIV)} <-> {self._wrap(pair[1], _IMP)}", _EQUIV
            pair = _match_and(formula)
            if pair is not None:
                return f"{self._wrap(pair[0], _AND)} & {self._wrap(pair[1], _UNARY)}", _AND
            pair = _match_imp(formula)
            if pair is not None:
                return f"{self._wrap(pair[0], _OR)} -> {self._wrap(pair[1], _IMP)}", _IMP
            operand = _match_diamond(formula)
            if operand is not None:
                return f"<>{self._wrap(operand, _UNARY)}", _UNARY

        if isinstance(formula, Not):
            return f"!{self._wrap(formula.operand, _UNARY)}", _UNARY
        if isinstance(formula, Box):
            glyph = self.box_glyph
            operand = self._wrap(formula.operand, _UNARY)
            # An alphabetic glyph such as O must not fuse with a variable name.
            if glyph[-1:].isalnum() and operand[:1].isalnum():
                operand = f"({operand})"
            return f"{glyph}{operand}", _UNARY
        if isinstance(formula, Or):
            return f"{self._wrap(formula.left, _OR)} | {self._wrap(formula.right, _AND)}", _OR

        raise ValueError(f"Unknown formula node: {formula!r}")


def to_text(formula: Formula, sugar: bool = True, box_glyph: str = "[]") -> str:
    """
    Prints a formula in the ASCII grammar.

    Args:
        formula (Formula): The formula.
        sugar (bool, optional): Whether to print derived connectives. Defaults to True.
        box_glyph (str, optional): The glyph for the box operator. Defaults to "[]".

    Returns:
        str: The text.
    """
    return FormulaPrinter(sugar, box_glyph).print(formula)
