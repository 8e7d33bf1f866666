import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterator, Optional

from ..Syntax.Formulas import Eps, L1Formula, NameVar, Not, Or
from ..Syntax.FormulaPrinter import to_text
from ..Syntax.Parts import PartOccurrence, PartsIndex, Polarity, axiom_witness


class RuleKind(Enum):
    """The four reduction rules of the tableau calculus."""

    VEE_MINUS = "vee-"
    EPS1 = "eps1"
    EPS2 = "eps2"
    EPS3 = "eps3"


@dataclass(frozen=True, slots=True)
class ReductionRule:
    """
    One application of a reduction rule: the negative parts that trigger it and
    the formulas it adjoins as new negative parts (one per child).
    """

    kind: RuleKind
    """The rule that was applied."""
    trigger: tuple[PartOccurrence, ...]
    """The negative-part occurrences consumed by the rule."""
    emitted: tuple[L1Formula, ...]
    """The formulas adjoined as negated disjuncts, one per child."""


class LeafKind(Enum):
    """The classification of a tableau leaf."""

    CLOSED = "closed"
    OPEN = "open"


@dataclass
class TableauNode:
    """A node of a tableau."""

    formula: L1Formula
    """The formula at the node."""
    rule: Optional[ReductionRule] = None
    """The rule applied to this node, or None for a leaf."""
    children: list["TableauNode"] = field(default_factory=list)
    """The children produced by the rule."""
    leaf: Optional[LeafKind] = None
    """The leaf classification, or None for an inner node."""
    witness: Optional[tuple[PartOccurrence, PartOccurrence]] = None
    """For closed leaves, the positive and negative occurrence of the same formula."""
    depth: int = 0
    """The number of rule applications from the root."""

    def to_json(self) -> dict[str, Any]:
        """
        Returns the JSON representation of the node and its subtree.

        Returns:
            dict[str, Any]: A JSON representation of the node.
        """
        return {
            "formula": to_text(self.formula),
            "rule": self.rule.kind.value if self.rule else None,
            "emitted": [to_text(f) for f in self.rule.emitted] if self.rule else [],
            "leaf": self.leaf.value if self.leaf else None,
            "witness": to_text(self.witness[0].formula) if self.witness else None,
            "children": [child.to_json() for child in self.children],
        }


@dataclass(frozen=True, slots=True)
class TableauStats:
    """Size figures of a tableau."""

    nodes: int
    """The number of nodes."""
    depth: int
    """The largest number of rule applications on a branch."""
    open_leaves: int
    """The number of open leaves."""
    closed_leaves: int
    """The number of closed leaves."""


class Tableau:
    """
    A normal tableau of the calculus TL₁. Every leaf is either closed by an
    axiom or open with a Hintikka formula.
    """

    def __init__(self, root: TableauNode):
        """
        Initializes a new instance of the Tableau class.

        Args:
            root (TableauNode): The root node.
        """
        self.root = root

    @property
    def formula(self) -> L1Formula:
        """The formula the tableau was built for."""
        return self.root.formula

    def nodes(self) -> Iterator[TableauNode]:
        """Iterates all nodes in pre-order, left to right."""
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def leaves(self) -> list[TableauNode]:
        """Returns the leaves, left to right."""
        return [node for node in self.nodes() if node.leaf is not None]

    def open_leaves(self) -> list[TableauNode]:
        """Returns the open leaves, left to right."""
        return [node for node in self.leaves() if node.leaf is LeafKind.OPEN]

    @property
    def is_closed(self) -> bool:
        """True if every branch is closed."""
        return all(leaf.leaf is LeafKind.CLOSED for leaf in self.leaves())

    @property
    def stats(self) -> TableauStats:
        """Size figures of the tableau."""
        leaves = self.leaves()
        open_count = sum(1 for leaf in leaves if leaf.leaf is LeafKind.OPEN)
        return TableauStats(
            nodes=sum(1 for _ in self.nodes()),
            depth=max(leaf.depth for leaf in leaves),
            open_leaves=open_count,
            closed_leaves=len(leaves) - open_count,
        )

    def to_json(self) -> dict[str, Any]:
        """
        Returns the JSON representation of the tableau.

        Returns:
            dict[str, Any]: A JSON representation of the tableau.
        """
        return {
            "closed": self.is_closed,
            "root": self.root.to_json(),
        }


def _post_order_key(occurrence: PartOccurrence) -> tuple[int, ...]:
    # Child indices are 0 or 1, so the sentinel 2 sorts a node after its subtree.
    return occurrence.path + (2,)


def _eps(subject: NameVar, predicate: NameVar) -> Eps:
    return Eps(subject, predicate)


def find_rule(index: PartsIndex) -> Optional[ReductionRule]:
    """
    Finds the next rule application allowed by the normality restriction.
    Rules are tried in the priority ∨₋, ε₁, ε₂, ε₃; for each rule the negative
    parts are scanned leftmost-innermost. An application is skipped when the
    formula it would adjoin already occurs as a negative part.

    Args:
        index (PartsIndex): The parts of the node formula.

    Returns:
        Optional[ReductionRule]: The rule application, or None if no rule applies.
    """
    negatives = sorted(
        (o for o in index.occurrences if o.polarity is Polarity.NEGATIVE),
        key=_post_order_key)
    negative = index.negative
    atom_occurrences = [o for o in negatives if isinstance(o.formula, Eps)]

    for occurrence in negatives:
        formula = occurrence.formula
        if isinstance(formula, Or) and formula.left not in negative and formula.right not in negative:
            return ReductionRule(RuleKind.VEE_MINUS, (occurrence,), (formula.left, formula.right))

    for occurrence in atom_occurrences:
        atom = occurrence.formula
        reflexive = _eps(atom.subject, atom.subject)
        if reflexive not in negative:
            return ReductionRule(RuleKind.EPS1, (occurrence,), (reflexive,))

    for kind in (RuleKind.EPS2, RuleKind.EPS3):
        for first in atom_occurrences:
            for second in atom_occurrences:
                # εab, εbc; a single occurrence may play both roles.
                if first.formula.predicate != second.formula.subject:
                    continue
                a, b, c = first.formula.subject, first.formula.predicate, second.formula.predicate
                adjoined = _eps(a, c) if kind is RuleKind.EPS2 else _eps(b, a)
                if adjoined not in negative:
                    return ReductionRule(kind, (first, second), (adjoined,))

    return None


def _reduce(node: TableauNode, rule: ReductionRule) -> list[TableauNode]:
    return [
        TableauNode(Or(node.formula, Not(emitted)), depth=node.depth + 1)
        for emitted in rule.emitted
    ]


def build_normal_tableau(phi: L1Formula) -> Tableau:
    """
    Builds the normal tableau of a formula. No rule is applied to an axiom and
    no rule adjoins a formula that is already a negative part, so every branch
    ends with an axiom or with a Hintikka formula. The construction is
    deterministic.

    Args:
        phi (L1Formula): The formula.

    Returns:
        Tableau: The finished tableau.
    """
    root = TableauNode(phi)
    pending = [root]
    while pending:
        node = pending.pop()
        witness = axiom_witness(node.formula)
        if witness is not None:
            node.leaf = LeafKind.CLOSED
            node.witness = witness
            continue

        rule = find_rule(PartsIndex.of(node.formula))
        if rule is None:
            node.leaf = LeafKind.OPEN
            continue

        node.rule = rule
        node.children = _reduce(node, rule)
        pending.extend(reversed(node.children))

    tableau = Tableau(root)
    logging.debug(f"Built tableau for {to_text(phi)}: {tableau.stats}")
    return tableau


def is_hintikka(phi: L1Formula) -> bool:
    """
    Checks the five conditions of a Hintikka formula: (1) phi is not an axiom;
    (2) every negative disjunction η ∨ ξ has η or ξ as a negative part; (3) every
    negative εab has εaa as a negative part; (4) and (5) every pair of negative
    εab, εbc has εac and εba as negative parts.

    Args:
        phi (L1Formula): The formula.

    Returns:
        bool: True if phi is a Hintikka formula.
    """
    if axiom_witness(phi) is not None:
        return False

    negative = PartsIndex.of(phi).negative
    for formula in negative:
        if isinstance(formula, Or) and formula.left not in negative and formula.right not in negative:
            return False

    pairs = {(atom.subject, atom.predicate) for atom in negative if isinstance(atom, Eps)}
    for a, b in pairs:
        if (a, a) not in pairs:
            return False
        for b2, c in pairs:
            if b2 != b:
                continue
            if (a, c) not in pairs or (b, a) not in pairs:
                return False
    return True


def is_provable_l1(phi: L1Formula) -> bool:
    """
    Decides provability in L₁ by building the normal tableau; the tableau
    calculus and the Hilbert system prove the same formulas.

    Args:
        phi (L1Formula): The formula.

    Returns:
        bool: True if every branch of the normal tableau is closed.
    """
    return build_normal_tableau(phi).is_closed


def hintikka_formulas(phi: L1Formula) -> set[L1Formula]:
    """
    Returns the Hintikka formulas of phi: the formulas at the open leaves of its
    normal tableau. The set is empty iff phi is provable.

    Args:
        phi (L1Formula): The formula.

    Returns:
        set[L1Formula]: The open-leaf formulas.
    """
    return {leaf.formula for leaf in build_normal_tableau(phi).open_leaves()}


def first_hintikka_formula(phi: L1Formula) -> Optional[L1Formula]:
    """
    Returns the leftmost open-leaf formula of the normal tableau of phi.

    Args:
        phi (L1Formula): The formula.

    Returns:
        Optional[L1Formula]: The Hintikka formula, or None if phi is provable.
    """
    leaves = build_normal_tableau(phi).open_leaves()
    return leaves[0].formula if leaves else None
