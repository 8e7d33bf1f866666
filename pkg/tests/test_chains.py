import pytest
from hypothesis import given

from src.Chains.ChainAnalysis import (NotHintikkaException, analyze, chain_quotient, chain_relation,
                                      chains_ki, tails_of)
from src.Syntax.FormulaParser import parse_l1
from src.Syntax.Formulas import NameVar
from src.Syntax.Parts import PartsIndex
from src.Tableau.TableauL1 import first_hintikka_formula, hintikka_formulas

from .strategies import hintikka_leaves

a, b, c = NameVar("a"), NameVar("b"), NameVar("c")


def test_mutual_atoms_form_one_chain():
    leaves = hintikka_formulas(parse_l1("!(eps(a,b) & eps(b,a))"))
    assert len(leaves) == 1
    analysis = analyze(leaves.pop())
    assert analysis.chains == (frozenset({a, b}),)
    assert analysis.tails == frozenset()
    assert analysis.rest == frozenset()


def test_single_negative_reflexive_atom_is_a_chain():
    psi = parse_l1("!eps(a,a)")
    assert chain_relation(psi) == {(a, a)}
    assert chain_quotient(psi) == {frozenset({a})}


def test_tail_of_a_chain():
    psi = first_hintikka_formula(parse_l1("!eps(a,b)"))
    analysis = analyze(psi)
    assert analysis.chains == (frozenset({a}),)
    assert analysis.tails == frozenset({b})
    assert analysis.tail_links[b] == frozenset({frozenset({a})})
    assert analysis.rest == frozenset()


def test_positive_only_variables_are_rest():
    psi = parse_l1("eps(a,b) | !eps(c,c)")
    analysis = analyze(psi)
    assert analysis.cn == frozenset({c})
    assert analysis.rest == frozenset({a, b})
    assert analysis.unanchored_rest == frozenset()


def test_rest_variable_without_positive_atom_is_unanchored():
    psi = parse_l1("!(eps(a,a) | eps(b,b)) | !eps(a,a)")
    analysis = analyze(psi)
    assert analysis.rest == frozenset({b})
    assert analysis.unanchored_rest == frozenset({b})


def test_analysis_rejects_non_hintikka_formulas():
    with pytest.raises(NotHintikkaException) as info:
        analyze(parse_l1("!eps(a,b)"))
    assert info.value.formula == parse_l1("!eps(a,b)")


def test_to_json():
    data = analyze(first_hintikka_formula(parse_l1("!eps(a,b)"))).to_json()
    assert data["chains"] == [["a"]]
    assert data["tails"] == ["b"]
    assert data["tail_links"] == {"b": [["a"]]}


@given(hintikka_leaves())
def test_quotient_and_maximal_cliques_agree(psi):
    assert chains_ki(psi) == chain_quotient(psi)


@given(hintikka_leaves())
def test_chains_are_disjoint(psi):
    chains = list(chain_quotient(psi))
    for i, first in enumerate(chains):
        for second in chains[i + 1:]:
            assert not first & second


@given(hintikka_leaves())
def test_name_variables_are_partitioned(psi):
    analysis = analyze(psi)
    assert analysis.cn | analysis.tails | analysis.rest == analysis.nv
    assert not analysis.cn & analysis.tails
    assert not analysis.cn & analysis.rest
    assert not analysis.tails & analysis.rest


@given(hintikka_leaves())
def test_tails_are_never_subjects_of_negative_atoms(psi):
    tails, _ = tails_of(psi)
    for atom in PartsIndex.of(psi).negative_atoms:
        assert atom.subject not in tails


@given(hintikka_leaves())
def test_chain_relation_is_an_equivalence(psi):
    relation = chain_relation(psi)
    for x, y in relation:
        assert (x, x) in relation
        assert (y, x) in relation
        for y2, z in relation:
            if y2 == y:
                assert (x, z) in relation
