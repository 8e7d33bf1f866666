from dataclasses import dataclass
from typing import Any

from ..Syntax.Formulas import Eps, L1Formula, NameVar, atoms
from ..Syntax.FormulaPrinter import to_text
from ..Syntax.Parts import PartsIndex, minimal_parts
from ..Tableau.TableauL1 import is_hintikka

Chain = frozenset[NameVar]
Pair = tuple[NameVar, NameVar]


class NotHintikkaException(Exception):
    """
    Exception that is thrown when an operation that needs a Hintikka formula
    receives some other formula.
    """

    def __init__(self, formula: L1Formula, message: str = "Not a Hintikka formula"):
        """
        Initializes a new instance of the NotHintikkaException class.

        Args:
            formula (L1Formula): The offending formula.
            message (str, optional): The message. Defaults to "Not a Hintikka formula".
        """
        super().__init__(f"{message}: {to_text(formula)}")
        self.formula = formula


def _require_hintikka(psi: L1Formula):
    if not is_hintikka(psi):
        raise NotHintikkaException(psi)


def _negative_pairs(psi: L1Formula) -> set[Pair]:
    return {(atom.subject, atom.predicate) for atom in PartsIndex.of(psi).negative_atoms}


def _names_of(formulas) -> set[NameVar]:
    names = set()
    for atom in formulas:
        if isinstance(atom, Eps):
            names.add(atom.subject)
            names.add(atom.predicate)
    return names


def _representative(chain: Chain) -> NameVar:
    return min(chain)


def name_vars(phi: L1Formula) -> set[NameVar]:
    """
    Returns every name variable occurring in phi.

    Args:
        phi (L1Formula): The formula.

    Returns:
        set[NameVar]: The name variables.
    """
    return _names_of(atoms(phi))


def chain_relation(psi: L1Formula) -> set[Pair]:
    """
    Computes the chain relation: the pairs (a, b) such that εab and εba both
    occur as negative parts. A single negative εaa witnesses (a, a).

    Args:
        psi (L1Formula): A Hintikka formula.

    Returns:
        set[Pair]: The relation, an equivalence on the chain name variables.

    Raises:
        NotHintikkaException: If psi is not a Hintikka formula.
    """
    _require_hintikka(psi)
    pairs = _negative_pairs(psi)
    return {(a, b) for a, b in pairs if (b, a) in pairs}


def chain_quotient(psi: L1Formula) -> set[Chain]:
    """
    Computes the equivalence classes of the chain relation.

    Args:
        psi (L1Formula): A Hintikka formula.

    Returns:
        set[Chain]: The chains.

    Raises:
        NotHintikkaException: If psi is not a Hintikka formula.
    """
    relation = chain_relation(psi)
    return {frozenset(b for a2, b in relation if a2 == a) for a, _ in relation}


def chains_ki(psi: L1Formula) -> set[Chain]:
    """
    Computes the maximal sets of name variables in which every two members
    (a member paired with itself included) are linked by negative εab and εba.
    Each candidate is grown from a seed by adding variables in id order while
    the set stays mutually linked.

    Args:
        psi (L1Formula): A Hintikka formula.

    Returns:
        set[Chain]: The chains.

    Raises:
        NotHintikkaException: If psi is not a Hintikka formula.
    """
    _require_hintikka(psi)
    pairs = _negative_pairs(psi)

    def linked(x: NameVar, y: NameVar) -> bool:
        return (x, y) in pairs and (y, x) in pairs

    names = sorted(name_vars(psi))
    candidates = set()
    for seed in names:
        if not linked(seed, seed):
            continue
        members = {seed}
        for name in names:
            if name not in members and linked(name, name) and all(linked(name, m) for m in members):
                members.add(name)
        candidates.add(frozenset(members))

    return {c for c in candidates if not any(c < other for other in candidates)}


def tails_of(psi: L1Formula) -> tuple[set[NameVar], dict[NameVar, set[Chain]]]:
    """
    Computes the tails: b is a tail of chain C iff εab is a negative part for
    some a in C while b is not in C.

    Args:
        psi (L1Formula): A Hintikka formula.

    Returns:
        tuple[set[NameVar], dict[NameVar, set[Chain]]]: The tails, and for each tail
        every chain it tails.

    Raises:
        NotHintikkaException: If psi is not a Hintikka formula.
    """
    chains = chain_quotient(psi)
    pairs = _negative_pairs(psi)
    links: dict[NameVar, set[Chain]] = {}
    for chain in chains:
        for a, b in pairs:
            if a in chain and b not in chain:
                links.setdefault(b, set()).add(chain)
    return set(links), links


@dataclass(frozen=True, slots=True)
class ChainAnalysis:
    """
    The partition of the name variables of a Hintikka formula into chain
    variables, tails and the rest.
    """

    formula: L1Formula
    """The analyzed Hintikka formula."""
    nv: frozenset[NameVar]
    """All name variables."""
    cn: frozenset[NameVar]
    """The chain name variables."""
    chains: tuple[Chain, ...]
    """The chains, ordered by their least member."""
    tails: frozenset[NameVar]
    """The tail variables."""
    tail_links: dict[NameVar, frozenset[Chain]]
    """For each tail, the chains it tails."""
    rest: frozenset[NameVar]
    """The variables that are neither chain variables nor tails."""
    unanchored_rest: frozenset[NameVar]
    """Rest variables that occur in no minimal positive part."""

    def to_json(self) -> dict[str, Any]:
        """
        Returns the JSON representation of the analysis.

        Returns:
            dict[str, Any]: A JSON representation of the analysis.
        """
        def ids(names) -> list[str]:
            return [n.id for n in sorted(names)]

        return {
            "formula": to_text(self.formula),
            "nv": ids(self.nv),
            "cn": ids(self.cn),
            "chains": [ids(chain) for chain in self.chains],
            "tails": ids(self.tails),
            "tail_links": {
                tail.id: [ids(chain) for chain in self.chains if chain in self.tail_links[tail]]
                for tail in sorted(self.tails)
            },
            "rest": ids(self.rest),
            "unanchored_rest": ids(self.unanchored_rest),
        }


def analyze(psi: L1Formula) -> ChainAnalysis:
    """
    Partitions the name variables of a Hintikka formula into chain variables,
    tails and the rest.

    Args:
        psi (L1Formula): A Hintikka formula.

    Returns:
        ChainAnalysis: The analysis.

    Raises:
        NotHintikkaException: If psi is not a Hintikka formula.
    """
    chains = tuple(sorted(chain_quotient(psi), key=_representative))
    tails, links = tails_of(psi)
    nv = name_vars(psi)
    cn = set().union(*chains) if chains else set()
    rest = nv - cn - tails

    assert not (cn & tails), "a tail belongs to a chain"
    assert cn | tails | rest == nv

    minimal_pos, _ = minimal_parts(psi)
    anchored = _names_of(minimal_pos)

    return ChainAnalysis(
        formula=psi,
        nv=frozenset(nv),
        cn=frozenset(cn),
        chains=chains,
        tails=frozenset(tails),
        tail_links={tail: frozenset(chains_) for tail, chains_ in links.items()},
        rest=frozenset(rest),
        unanchored_rest=frozenset(rest - anchored),
    )
