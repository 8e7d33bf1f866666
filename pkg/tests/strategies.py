from hypothesis import strategies as st

from src.Roundtrip.Corpus import name_pool
from src.Syntax.Formulas import Box, Eps, Not, Or, PropVar, size
from src.Tableau.TableauL1 import first_hintikka_formula


def name_vars(max_vars: int = 4):
    return st.sampled_from(name_pool(max_vars))


def eps_atoms(max_vars: int = 4):
    return st.builds(Eps, name_vars(max_vars), name_vars(max_vars))


def l1_formulas(max_vars: int = 4, max_size: int = 12):
    """L₁ formulas over the first max_vars name variables with AST size at most max_size."""
    formulas = st.recursive(
        eps_atoms(max_vars),
        lambda children: st.one_of(st.builds(Not, children), st.builds(Or, children, children)),
        max_leaves=4,
    )
    return formulas.filter(lambda f: size(f) <= max_size)


def negated_atoms(max_vars: int = 4):
    """Disjunction-free formulas: an ε-atom under zero to four negations."""

    def wrap(atom, depth):
        for _ in range(depth):
            atom = Not(atom)
        return atom

    return st.builds(wrap, eps_atoms(max_vars), st.integers(0, 4))


def hintikka_leaves(max_vars: int = 4, max_size: int = 12):
    """The first open tableau leaf of a random unprovable formula."""
    return l1_formulas(max_vars, max_size).map(first_hintikka_formula).filter(lambda leaf: leaf is not None)


def _propositional(variables):
    return st.recursive(
        variables,
        lambda children: st.one_of(st.builds(Not, children), st.builds(Or, children, children)),
        max_leaves=4,
    )


def depth1_formulas(max_vars: int = 3):
    """Modal formulas without nested boxes over p0, p1, ..."""
    variables = st.sampled_from([PropVar(f"p{i}") for i in range(max_vars)])
    boxed = st.builds(Box, _propositional(variables))
    return st.recursive(
        st.one_of(variables, boxed),
        lambda children: st.one_of(st.builds(Not, children), st.builds(Or, children, children)),
        max_leaves=5,
    )


def modal_formulas(max_vars: int = 3):
    """Modal formulas with arbitrary nesting over p0, p1, ..."""
    variables = st.sampled_from([PropVar(f"p{i}") for i in range(max_vars)])
    return st.recursive(
        variables,
        lambda children: st.one_of(st.builds(Not, children), st.builds(Or, children, children),
                                   st.builds(Box, children)),
        max_leaves=6,
    )
