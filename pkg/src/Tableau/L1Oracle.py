import itertools
import logging
from typing import Iterator

from ..Syntax.Formulas import L1Formula, NameVar, atoms, evaluate_classical


def _is_closed(relation: set[tuple[NameVar, NameVar]]) -> bool:
    for a, b in relation:
        if (a, a) not in relation:
            return False
        for b2, c in relation:
            if b2 == b and ((a, c) not in relation or (b, a) not in relation):
                return False
    return True


def closed_relations(names: list[NameVar]) -> Iterator[set[tuple[NameVar, NameVar]]]:
    """
    Enumerates every binary relation on the given names that satisfies the
    three axiom schemata read as closure conditions: Rab gives Raa, and
    Rab with Rbc gives both Rac and Rba.

    Args:
        names (list[NameVar]): The carrier.

    Returns:
        Iterator[set[tuple[NameVar, NameVar]]]: The closed relations.
    """
    pairs = list(itertools.product(names, repeat=2))
    for bits in itertools.product((False, True), repeat=len(pairs)):
        relation = {pair for pair, bit in zip(pairs, bits) if bit}
        if _is_closed(relation):
            yield relation


def is_provable_l1_semantic(phi: L1Formula) -> bool:
    """
    Decides L₁ provability without the tableau. Instances of the axiom schemata
    over name variables outside the formula can be renamed into it, so phi is
    provable iff it is a tautological consequence of the instances over its
    own name variables, i.e. iff it is true under every closed relation on
    them.

    Args:
        phi (L1Formula): The formula.

    Returns:
        bool: True if phi is provable in L₁.
    """
    formula_atoms = atoms(phi)
    names = sorted({a.subject for a in formula_atoms} | {a.predicate for a in formula_atoms})
    if len(names) > 4:
        logging.warning(f"Semantic L1 check over {len(names)} name variables enumerates 2^{len(names) ** 2} relations")

    for relation in closed_relations(names):
        valuation = {atom: (atom.subject, atom.predicate) in relation for atom in formula_atoms}
        if not evaluate_classical(phi, valuation):
            return False
    return True
