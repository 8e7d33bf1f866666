import pytest
from hypothesis import given, settings

from src.Roundtrip.Corpus import enumerate_formulas
from src.Syntax.FormulaParser import parse_l1
from src.Syntax.Formulas import Not, Or, atoms, eps, evaluate_classical, subformulas
from src.Syntax.Parts import PartsIndex, is_axiom_tl1, minimal_parts
from src.Chains.ChainAnalysis import name_vars
from src.Tableau.L1Oracle import closed_relations, is_provable_l1_semantic
from src.Tableau.TableauL1 import (LeafKind, RuleKind, build_normal_tableau, first_hintikka_formula,
                                  hintikka_formulas, is_hintikka, is_provable_l1)

from .strategies import l1_formulas

AX1 = "eps(a,b) -> eps(a,a)"
AX2 = "eps(a,b) & eps(b,c) -> eps(a,c)"
AX3 = "eps(a,b) & eps(b,c) -> eps(b,a)"
# εac ∧ εbc ⊃ εab ∨ εcc: true under the relation {aa, ac, bb, bc}.
PHI0 = "eps(a,c) & eps(b,c) -> eps(a,b) | eps(c,c)"


@pytest.mark.parametrize("text", [AX1, AX2, AX3, "eps(a,a) | !eps(a,a)", "eps(a,b) & eps(b,c) -> eps(c,c) | eps(b,b)"])
def test_provable_formulas(text):
    assert is_provable_l1(parse_l1(text))


@pytest.mark.parametrize("text", [PHI0, "eps(a,a)", "!eps(a,b)", "eps(a,b) -> eps(b,b)", "eps(a,b) -> eps(b,a)"])
def test_unprovable_formulas(text):
    assert not is_provable_l1(parse_l1(text))


def test_axiom_one_closes_after_one_step():
    tableau = build_normal_tableau(parse_l1(AX1))
    assert tableau.root.rule.kind is RuleKind.EPS1
    assert [leaf.leaf for leaf in tableau.leaves()] == [LeafKind.CLOSED]
    assert tableau.leaves()[0].witness[0].formula == eps("a", "a")


def test_negated_atom_has_one_open_leaf():
    phi = Not(eps("a", "b"))
    assert hintikka_formulas(phi) == {Or(phi, Not(eps("a", "a")))}


def test_hintikka_formulas_without_rules():
    assert is_hintikka(Not(eps("a", "a")))
    assert is_hintikka(eps("a", "a"))
    assert not is_hintikka(Not(eps("a", "b")))
    assert first_hintikka_formula(Not(eps("a", "a"))) == Not(eps("a", "a"))


def test_negative_disjunction_branches():
    phi = parse_l1("!(eps(a,a) | eps(b,b))")
    tableau = build_normal_tableau(phi)
    assert tableau.root.rule.kind is RuleKind.VEE_MINUS
    assert len(tableau.root.children) == 2
    assert tableau.stats.open_leaves == 2


def test_trace_json():
    data = build_normal_tableau(parse_l1(AX1)).to_json()
    assert data["closed"] is True
    assert data["root"]["rule"] == "eps1"
    assert data["root"]["emitted"] == ["eps(a,a)"]
    assert data["root"]["children"][0]["leaf"] == "closed"


def test_closed_relations_satisfy_the_schemata():
    names = sorted(name_vars(parse_l1("eps(a,b) | eps(b,a)")))
    relations = list(closed_relations(names))
    assert set() in relations
    assert {(names[0], names[1])} not in relations
    for relation in relations:
        for a, b in relation:
            assert (a, a) in relation


@given(l1_formulas())
def test_every_leaf_is_an_axiom_or_hintikka(phi):
    tableau = build_normal_tableau(phi)
    for leaf in tableau.leaves():
        if leaf.leaf is LeafKind.OPEN:
            assert is_hintikka(leaf.formula)
        else:
            assert leaf.witness is not None and not is_hintikka(leaf.formula)


@given(l1_formulas())
def test_every_node_keeps_the_root_as_left_disjunct(phi):
    for node in build_normal_tableau(phi).nodes():
        for child in node.children:
            assert isinstance(child.formula, Or)
            assert child.formula.left == node.formula


@given(l1_formulas())
def test_rules_respect_normality(phi):
    for node in build_normal_tableau(phi).nodes():
        if node.rule is None:
            continue
        assert not is_axiom_tl1(node.formula)
        negative = PartsIndex.of(node.formula).negative
        assert node.rule.emitted
        for emitted in node.rule.emitted:
            assert emitted not in negative
        assert [child.formula for child in node.children] == [Or(node.formula, Not(e)) for e in node.rule.emitted]


@given(l1_formulas())
def test_branches_are_bounded(phi):
    bound = len(subformulas(phi)) + len(name_vars(phi)) ** 2
    assert build_normal_tableau(phi).stats.depth <= bound


@given(l1_formulas())
def test_open_leaf_valuation_falsifies_the_leaf(phi):
    leaf = first_hintikka_formula(phi)
    if leaf is None:
        return
    positive, negative = minimal_parts(leaf)
    valuation = {atom: False for atom in positive if atom in atoms(leaf)}
    valuation.update({atom: True for atom in negative if atom in atoms(leaf)})
    assert not evaluate_classical(leaf, valuation)
    # The leaf is a disjunction with phi as its innermost left disjunct.
    assert not evaluate_classical(phi, valuation)


@settings(max_examples=200)
@given(l1_formulas(max_vars=3, max_size=10))
def test_tableau_agrees_with_closed_relations(phi):
    assert is_provable_l1(phi) == is_provable_l1_semantic(phi)


def test_tableau_agrees_with_closed_relations_on_small_corpus():
    for phi in enumerate_formulas(2, 7):
        assert is_provable_l1(phi) == is_provable_l1_semantic(phi), phi
