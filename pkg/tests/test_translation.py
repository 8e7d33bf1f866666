from hypothesis import given

from src.Syntax.FormulaParser import parse_l1, parse_modal
from src.Syntax.Formulas import Box, Not, Or, PropVar, eps, make_and, make_equiv, make_imp, prop_vars
from src.Chains.ChainAnalysis import name_vars
from src.Translate.Translation import (ModalityRendering, TranslationScheme, TranslationTag, blass,
                                       modal_depth, naive, prop_var, render, translate)

from .strategies import l1_formulas

p_a, p_b = PropVar("p_a"), PropVar("p_b")


def test_blass_atom():
    expected = make_and(
        make_and(p_a, Box(make_imp(p_a, p_b))),
        make_imp(p_b, Box(make_imp(p_b, p_a))))
    assert blass(eps("a", "b")) == expected


def test_naive_atom():
    assert naive(eps("a", "b")) == make_and(p_a, Box(make_equiv(p_a, p_b)))


def test_translations_commute_with_connectives():
    phi = parse_l1("!eps(a,b) | eps(b,b)")
    assert blass(phi) == Or(Not(blass(eps("a", "b"))), blass(eps("b", "b")))
    assert translate(phi, TranslationScheme(TranslationTag.NAIVE)) == Or(Not(naive(eps("a", "b"))), naive(eps("b", "b")))


def test_render_box_and_deontic():
    m = blass(eps("a", "b"))
    assert render(m) == "p_a & [](p_a -> p_b) & (p_b -> [](p_b -> p_a))"
    deontic = TranslationScheme(TranslationTag.BLASS, ModalityRendering.O)
    assert render(m, deontic) == "p_a & O(p_a -> p_b) & (p_b -> O(p_b -> p_a))"
    assert parse_modal(render(m)) == m


def test_prop_var_naming():
    assert prop_var("x") == PropVar("p_x")


@given(l1_formulas())
def test_translations_have_depth_one(phi):
    assert modal_depth(blass(phi)) == 1
    assert modal_depth(naive(phi)) == 1


@given(l1_formulas())
def test_translations_use_one_variable_per_name(phi):
    expected = {prop_var(x).name for x in name_vars(phi)}
    assert prop_vars(blass(phi)) == expected
    assert prop_vars(naive(phi)) == expected
