import pytest
from hypothesis import given, settings

from src.Kripke.KripkeModel import forces
from src.ModalK.DepthOneOracle import DepthExceededException, TooManyVariablesException, is_valid_k_depth1
from src.ModalK.TableauK import branch_bound, is_valid_k
from src.Syntax.FormulaParser import parse_l1, parse_modal
from src.Translate.Translation import blass, naive

from .strategies import depth1_formulas, modal_formulas

AXIOMS = [
    "eps(a,b) -> eps(a,a)",
    "eps(a,b) & eps(b,c) -> eps(a,c)",
    "eps(a,b) & eps(b,c) -> eps(b,a)",
]
PHI0 = parse_l1("eps(a,c) & eps(b,c) -> eps(a,b) | eps(c,c)")


@pytest.mark.parametrize("text", [
    "[](p -> q) -> ([]p -> []q)",
    "[]p & []q -> [](p & q)",
    "[](p | !p)",
    "p | !p",
    "<>p -> <>(p | q)",
])
def test_valid_formulas(text):
    verdict = is_valid_k(parse_modal(text))
    assert verdict.valid
    assert verdict.countermodel is None


@pytest.mark.parametrize("text", ["p", "[]p -> p", "[]p -> [][]p", "<>p | <>!p", "[]p -> <>p"])
def test_invalid_formulas_get_countermodels(text):
    f = parse_modal(text)
    verdict = is_valid_k(f)
    assert not verdict.valid
    m = verdict.countermodel
    assert not forces(m, m.star, f)


@pytest.mark.parametrize("text", AXIOMS)
def test_translated_axioms_are_valid(text):
    m = blass(parse_l1(text))
    assert is_valid_k(m).valid
    assert is_valid_k_depth1(m).valid


def test_naive_translation_is_not_faithful():
    assert is_valid_k(naive(PHI0)).valid
    verdict = is_valid_k(blass(PHI0))
    assert not verdict.valid
    m = verdict.countermodel
    assert not forces(m, m.star, blass(PHI0))


def test_depth_one_oracle_limits():
    with pytest.raises(DepthExceededException) as depth:
        is_valid_k_depth1(parse_modal("[][]p"))
    assert depth.value.depth == 2
    with pytest.raises(TooManyVariablesException) as count:
        is_valid_k_depth1(parse_modal("p1 | p2 | p3 | p4 | []p5"))
    assert count.value.count == 5


def test_depth_one_countermodel_has_one_successor_per_valuation():
    verdict = is_valid_k_depth1(parse_modal("[]p -> p"))
    m = verdict.countermodel
    assert not verdict.valid
    assert all(world.startswith("s") for world in m.worlds[1:])
    assert not forces(m, m.star, parse_modal("[]p -> p"))


def test_verdict_json():
    data = is_valid_k(parse_modal("[]p -> p")).to_json()
    assert data["valid"] is False
    assert data["countermodel"]["star"] == "*"
    assert is_valid_k(parse_modal("p | !p")).to_json() == {"valid": True, "countermodel": None}


@settings(max_examples=200)
@given(depth1_formulas())
def test_tableau_agrees_with_depth_one_oracle(f):
    assert is_valid_k(f).valid == is_valid_k_depth1(f).valid


@given(modal_formulas())
def test_countermodels_falsify(f):
    verdict = is_valid_k(f)
    if not verdict.valid:
        m = verdict.countermodel
        assert not forces(m, m.star, f)


@given(modal_formulas())
def test_branches_are_bounded(f):
    assert is_valid_k(f).stats.longest_branch <= branch_bound(f)
