import numpy as np
import pytest
from hypothesis import given, settings

from src.Chains.ChainAnalysis import NotHintikkaException, analyze
from src.Kripke.Countermodels import (DeonticSystem, FrameVariant, VariantKind, all_variants,
                                      countermodel_k, countermodel_variant, variant_frame,
                                      variant_relation, verify_falsification)
from src.Kripke.KripkeModel import (STAR, KripkeModel, UndeclaredVariableException,
                                    UnknownWorldException, forces)
from src.Syntax.FormulaParser import parse_l1, parse_modal
from src.Syntax.Formulas import Box, PropVar
from src.Tableau.TableauL1 import first_hintikka_formula
from src.Translate.Translation import blass, prop_var

from .strategies import hintikka_leaves

K = FrameVariant(VariantKind.K4_1)
p = PropVar("p")


def test_box_is_vacuous_without_successors():
    m = KripkeModel(("w",), "w", frozenset(), {"p": {"w": False}})
    assert forces(m, "w", Box(p))
    assert not forces(m, "w", parse_modal("<>p"))


def test_box_looks_one_step():
    m = KripkeModel(("*", "u", "v"), "*", frozenset({("*", "u"), ("u", "v")}),
                    {"p": {"*": False, "u": True, "v": False}})
    assert forces(m, "*", Box(p))
    assert not forces(m, "*", Box(Box(p)))
    assert m.successors("*") == ["u"]


def test_forcing_errors():
    m = KripkeModel(("w",), "w", frozenset(), {"p": {"w": True}})
    with pytest.raises(UnknownWorldException):
        forces(m, "x", p)
    with pytest.raises(UndeclaredVariableException) as info:
        forces(m, "w", PropVar("q"))
    assert info.value.name == "q"


def test_model_validation():
    with pytest.raises(UnknownWorldException):
        KripkeModel(("w",), "w", frozenset({("w", "x")}))
    with pytest.raises(ValueError):
        KripkeModel(("w",), "w", frozenset(), {"p": {}})


def test_countermodel_of_a_chain_with_a_tail():
    psi = first_hintikka_formula(parse_l1("!eps(a,b) | !eps(a,a)"))
    m = countermodel_k(psi)
    assert m.worlds == ("*", "g1")
    assert m.relation == frozenset({("*", "g1")})
    assert m.valuation == {"p_a": {"*": True, "g1": True}, "p_b": {"*": False, "g1": True}}
    assert not forces(m, STAR, blass(psi))


def test_countermodel_without_chains():
    m = countermodel_k(parse_l1("eps(a,a)"))
    assert m.worlds == ("*", "g")
    assert m.relation == frozenset({("*", "g")})
    assert m.valuation == {"p_a": {"*": False, "g": False}}
    assert not forces(m, STAR, blass(parse_l1("eps(a,a)")))


def test_countermodel_needs_a_hintikka_formula():
    with pytest.raises(NotHintikkaException):
        countermodel_k(parse_l1("eps(a,b) -> eps(a,a)"))


def test_variant_relations():
    assert variant_relation(FrameVariant(VariantKind.T7_1), 1) == frozenset({("*", "g1")})
    assert variant_relation(FrameVariant(VariantKind.T7_2), 2) == frozenset(
        {("*", "g1"), ("*", "g2"), ("g1", "g1"), ("g2", "g2")})
    assert ("*", "*") in variant_relation(FrameVariant(VariantKind.T7_8), 2)
    assert ("g1", "*") in variant_relation(FrameVariant(VariantKind.T7_9), 2)
    assert variant_relation(FrameVariant(VariantKind.T6_1), 3) == variant_relation(K, 3)
    s5 = FrameVariant(VariantKind.DEONTIC, DeonticSystem.OS5)
    assert variant_relation(s5, 0) == frozenset({("*", "g")})
    om = FrameVariant(VariantKind.DEONTIC, DeonticSystem.OM)
    assert variant_relation(om, 0) == frozenset({("*", "g"), ("g", "*"), ("g", "g")})


def test_variant_names():
    assert str(FrameVariant.parse("Deontic(OS4+)")) == "Deontic(OS4+)"
    assert FrameVariant.parse("T7_3") == FrameVariant(VariantKind.T7_3)
    assert len(all_variants()) == 19
    with pytest.raises(ValueError):
        FrameVariant.parse("Deontic")
    with pytest.raises(ValueError):
        FrameVariant.parse("T9_9")


def test_reflexive_star_fails_with_a_tail():
    psi = first_hintikka_formula(parse_l1("!eps(a,b) | !eps(a,a)"))
    result = verify_falsification(psi, FrameVariant(VariantKind.T7_8))
    assert result.has_tails
    assert not result.falsified
    assert result.false_negative_atoms


@given(hintikka_leaves())
def test_k_countermodel_falsifies_the_translation(psi):
    m = countermodel_k(psi)
    assert not forces(m, STAR, blass(psi))


@given(hintikka_leaves())
def test_atom_cases_hold_at_star(psi):
    result = verify_falsification(psi, K)
    assert result.atom_cases_hold
    assert result.falsified


@given(hintikka_leaves())
def test_chain_variables_follow_the_unit_matrix(psi):
    analysis = analyze(psi)
    if not analysis.chains:
        return
    m = countermodel_k(psi)
    names = [prop_var(min(chain)).name for chain in analysis.chains]
    matrix = m.valuation_matrix(names, list(m.worlds[1:]))
    assert np.array_equal(matrix, np.eye(len(names), dtype=int))


@settings(max_examples=100)
@given(hintikka_leaves())
def test_every_variant_without_star_loop_falsifies(psi):
    for variant in all_variants():
        if variant.reflexive_star:
            continue
        assert verify_falsification(psi, variant).falsified, variant


@settings(max_examples=100)
@given(hintikka_leaves())
def test_star_loop_falsifies_exactly_without_tails(psi):
    for kind in (VariantKind.T7_8, VariantKind.T7_9):
        result = verify_falsification(psi, FrameVariant(kind))
        assert result.falsified == (not result.has_tails)


@given(hintikka_leaves())
def test_countermodel_frames_are_transitive_and_irreflexive(psi):
    m = countermodel_variant(psi, FrameVariant(VariantKind.T6_1))
    r = m.relation_matrix().astype(int)
    assert not np.diag(r).any()
    assert np.all(((r @ r) > 0) <= (r > 0))


def test_bare_frame_has_no_variables():
    frame = variant_frame(K, 2)
    assert frame.variables == []
    assert frame.worlds == ("*", "g1", "g2")
