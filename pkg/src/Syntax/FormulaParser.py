from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput

from .Formulas import (Box, L1Formula, ModalFormula, NameVar, Not, Or, PropVar, Eps,
                       make_and, make_diamond, make_equiv, make_imp)

# Precedence, tightest first: !, &, |, ->, <->. The arrow is right-associative.
_connectives = r"""
    ?equiv: imp
          | equiv "<->" imp      -> equiv
    ?imp: disj
        | disj "->" imp          -> imp
    ?disj: conj
         | disj "|" conj         -> disj
    ?conj: unary
         | conj "&" unary        -> conj

    %import common.WS
    %ignore WS
"""

L1_GRAMMAR = r"""
    ?start: equiv
    ?unary: "!" unary            -> neg
          | atom
    ?atom: "eps" "(" NAME "," NAME ")"  -> eps
         | "(" equiv ")"
    NAME: /[a-z][a-z0-9_]*/
""" + _connectives

MODAL_GRAMMAR = r"""
    ?start: equiv
    ?unary: "!" unary            -> neg
          | "[]" unary           -> box
          | "<>" unary           -> diamond
          | atom
    ?atom: VAR                   -> var
         | "(" equiv ")"
    VAR: /[A-Za-z_][A-Za-z0-9_]*/
""" + _connectives


class FormulaSyntaxError(Exception):
    """
    Exception that is thrown when a formula does not conform to the grammar.
    """

    def __init__(self, text: str, line: int, column: int, message: str):
        """
        Initializes a new instance of the FormulaSyntaxError class.

        Args:
            text (str): The text that failed to parse.
            line (int): The 1-based line of the error, or -1 if unknown.
            column (int): The 1-based column of the error, or -1 if unknown.
            message (str): The message.
        """
        super().__init__(f"{message} (line {line}, column {column})")
        self.text = text
        self.line = line
        self.column = column


@v_args(inline=True)
class _FormulaBuilder(Transformer):
    """Builds the {¬, ∨, □} AST while the parser reduces, expanding derived connectives."""

    def eps(self, subject, predicate) -> Eps:
        return Eps(NameVar(str(subject)), NameVar(str(predicate)))

    def var(self, name) -> PropVar:
        return PropVar(str(name))

    def neg(self, operand):
        return Not(operand)

    def box(self, operand):
        return Box(operand)

    def diamond(self, operand):
        return make_diamond(operand)

    def disj(self, left, right):
        return Or(left, right)

    def conj(self, left, right):
        return make_and(left, right)

    def imp(self, left, right):
        return make_imp(left, right)

    def equiv(self, left, right):
        return make_equiv(left, right)


_l1_parser = Lark(L1_GRAMMAR, parser="lalr", transformer=_FormulaBuilder())
_modal_parser = Lark(MODAL_GRAMMAR, parser="lalr", transformer=_FormulaBuilder())


def _parse(parser: Lark, text: str):
    try:
        return parser.parse(text)
    except UnexpectedInput as e:
        line = getattr(e, "line", -1)
        column = getattr(e, "column", -1)
        raise FormulaSyntaxError(text, line, column, "Syntax error") from e


def parse_l1(text: str) -> L1Formula:
    """
    Parses an L₁ formula. The derived connectives &, -> and <-> are expanded
    to ¬ and ∨ while parsing.

    Args:
        text (str): The formula, e.g. "eps(a,b) -> eps(a,a)".

    Returns:
        L1Formula: The expanded AST.

    Raises:
        FormulaSyntaxError: If the text is malformed.
    """
    return _parse(_l1_parser, text)


def parse_modal(text: str) -> ModalFormula:
    """
    Parses a propositional modal formula. & , ->, <-> and <> are expanded
    to ¬, ∨ and □ while parsing.

    Args:
        text (str): The formula, e.g. "[](p -> q) -> ([]p -> []q)".

    Returns:
        ModalFormula: The expanded AST.

    Raises:
        FormulaSyntaxError: If the text is malformed.
    """
    return _parse(_modal_parser, text)
