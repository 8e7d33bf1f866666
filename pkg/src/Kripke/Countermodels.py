import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional

from ..Chains.ChainAnalysis import ChainAnalysis, NotHintikkaException, analyze
from ..Syntax.Formulas import Eps, L1Formula
from ..Syntax.FormulaPrinter import to_text
from ..Syntax.Parts import PartsIndex
from ..Tableau.TableauL1 import is_hintikka, is_provable_l1
from ..Translate.Translation import blass, prop_var
from .KripkeModel import STAR, KripkeModel, World, forces


class ProvableInputException(Exception):
    """
    Exception that is thrown when a countermodel is requested for a provable formula.
    """

    def __init__(self, formula: L1Formula):
        """
        Initializes a new instance of the ProvableInputException class.

        Args:
            formula (L1Formula): The provable formula.
        """
        super().__init__(f"The formula is provable and has no countermodel: {to_text(formula)}")
        self.formula = formula


class DeonticSystem(Enum):
    """The ten Smiley-Hanson systems of monadic deontic logic."""

    OK = "OK"
    OM = "OM"
    OS4 = "OS4"
    OB = "OB"
    OS5 = "OS5"
    OK_PLUS = "OK+"
    OM_PLUS = "OM+"
    OS4_PLUS = "OS4+"
    OB_PLUS = "OB+"
    OS5_PLUS = "OS5+"

    @property
    def is_s5(self) -> bool:
        """True for OS5 and OS5+."""
        return self in (DeonticSystem.OS5, DeonticSystem.OS5_PLUS)


class VariantKind(Enum):
    """The relation builders of the countermodel constructions."""

    K4_1 = "K4_1"
    DEONTIC = "Deontic"
    DEONTIC_FULL = "DeonticFull"
    T6_1 = "T6_1"
    T7_1 = "T7_1"
    T7_2 = "T7_2"
    T7_3 = "T7_3"
    T7_7 = "T7_7"
    T7_8 = "T7_8"
    T7_9 = "T7_9"


@dataclass(frozen=True, slots=True)
class FrameVariant:
    """
    One accessibility relation built over the worlds {*, g1, ..., gn} of a
    countermodel.
    """

    kind: VariantKind
    """The relation builder."""
    system: Optional[DeonticSystem] = None
    """The deontic system, only for the Deontic kind."""

    def __post_init__(self):
        if (self.kind is VariantKind.DEONTIC) != (self.system is not None):
            raise ValueError("A deontic system is given exactly for the Deontic variant")

    def __str__(self) -> str:
        if self.system is not None:
            return f"{self.kind.value}({self.system.value})"
        return self.kind.value

    @property
    def reflexive_star(self) -> bool:
        """True if the relation contains (*, *)."""
        return self.kind in (VariantKind.T7_8, VariantKind.T7_9)

    @staticmethod
    def parse(text: str) -> "FrameVariant":
        """
        Parses a variant name such as "T7_2", "DeonticFull" or "Deontic(OS4+)".

        Args:
            text (str): The name.

        Returns:
            FrameVariant: The variant.

        Raises:
            ValueError: If the name is unknown.
        """
        text = text.strip()
        if text.startswith("Deontic(") and text.endswith(")"):
            return FrameVariant(VariantKind.DEONTIC, DeonticSystem(text[len("Deontic("):-1]))
        kind = VariantKind(text)
        if kind is VariantKind.DEONTIC:
            raise ValueError("Deontic needs a system, e.g. Deontic(OM)")
        return FrameVariant(kind)


def all_variants() -> list[FrameVariant]:
    """Returns every frame variant, deontic systems included."""
    result = []
    for kind in VariantKind:
        if kind is VariantKind.DEONTIC:
            result.extend(FrameVariant(kind, system) for system in DeonticSystem)
        else:
            result.append(FrameVariant(kind))
    return result


def variant_worlds(n: int) -> tuple[World, ...]:
    """
    Returns the worlds of a countermodel with n chains: "*" and "g" when there
    is no chain, otherwise "*" and "g1" to "gn".

    Args:
        n (int): The number of chains.

    Returns:
        tuple[World, ...]: The worlds, star first.
    """
    if n == 0:
        return (STAR, "g")
    return (STAR,) + tuple(f"g{i}" for i in range(1, n + 1))


def variant_relation(variant: FrameVariant, n: int) -> frozenset[tuple[World, World]]:
    """
    Builds the accessibility relation of a variant over variant_worlds(n).

    Args:
        variant (FrameVariant): The variant.
        n (int): The number of chains.

    Returns:
        frozenset[tuple[World, World]]: The relation.
    """
    gs = list(variant_worlds(n)[1:])
    kind = variant.kind

    if n == 0 and kind is VariantKind.DEONTIC:
        if variant.system.is_s5:
            return frozenset({(STAR, "g")})
        return frozenset({(STAR, "g"), ("g", STAR), ("g", "g")})

    base = {(STAR, g) for g in gs}
    loops = {(g, g) for g in gs}
    others = {(g, h) for g in gs for h in gs if g != h}
    back = {(g, STAR) for g in gs}
    star_loop = {(STAR, STAR)}

    if kind in (VariantKind.K4_1, VariantKind.T6_1):
        relation = base
    elif kind is VariantKind.DEONTIC:
        relation = base | (others if variant.system.is_s5 else loops)
    elif kind in (VariantKind.DEONTIC_FULL, VariantKind.T7_3):
        relation = base | loops | others
    elif kind is VariantKind.T7_1:
        relation = base | others
    elif kind is VariantKind.T7_2:
        relation = base | loops
    elif kind is VariantKind.T7_7:
        relation = base | others | back
    elif kind is VariantKind.T7_8:
        # The proof evaluates boxes at * over the g worlds, so (*, gj) is kept.
        relation = base | others | star_loop
    elif kind is VariantKind.T7_9:
        relation = base | back | star_loop
    else:
        raise ValueError(f"Unknown variant: {variant}")
    return frozenset(relation)


def variant_frame(variant: FrameVariant, n: int) -> KripkeModel:
    """
    Builds the bare frame of a variant (no variables declared).

    Args:
        variant (FrameVariant): The variant.
        n (int): The number of chains.

    Returns:
        KripkeModel: The frame as a model with an empty valuation.
    """
    return KripkeModel(variant_worlds(n), STAR, variant_relation(variant, n))


def _countermodel_valuation(analysis: ChainAnalysis) -> dict[str, dict[World, bool]]:
    n = len(analysis.chains)
    worlds = variant_worlds(n)
    valuation = {}
    for x in sorted(analysis.nv):
        values = {STAR: x in analysis.cn}
        for i, g in enumerate(worlds[1:]):
            if n == 0:
                values[g] = False
            elif x in analysis.cn:
                # Unit matrix: a chain variable is true only at its own chain's world.
                values[g] = x in analysis.chains[i]
            elif x in analysis.tails:
                values[g] = analysis.chains[i] in analysis.tail_links[x]
            else:
                values[g] = False
        valuation[prop_var(x).name] = values
    return valuation


def _checked_analysis(psi: L1Formula) -> ChainAnalysis:
    if not is_hintikka(psi):
        raise NotHintikkaException(psi)
    if is_provable_l1(psi):
        raise ProvableInputException(psi)
    return analyze(psi)


def countermodel_variant(psi: L1Formula, variant: FrameVariant) -> KripkeModel:
    """
    Builds the countermodel of a Hintikka formula over the relation of a
    variant. Star makes p_x true iff x is a chain variable; the chain
    variables follow the unit matrix over g1..gn; a tail is true at the worlds
    of the chains it tails; every other variable is false at every g world.
    Only the variables p_x for the name variables x of psi are declared.

    Args:
        psi (L1Formula): A Hintikka formula.
        variant (FrameVariant): The relation builder.

    Returns:
        KripkeModel: The countermodel.

    Raises:
        NotHintikkaException: If psi is not a Hintikka formula.
        ProvableInputException: If psi is provable.
    """
    analysis = _checked_analysis(psi)
    n = len(analysis.chains)
    model = KripkeModel(
        worlds=variant_worlds(n),
        star=STAR,
        relation=variant_relation(variant, n),
        valuation=_countermodel_valuation(analysis),
    )
    logging.debug(f"Built {variant} countermodel with {n} chains for {to_text(psi)}")
    return model


def countermodel_k(psi: L1Formula) -> KripkeModel:
    """
    Builds the countermodel of a Hintikka formula on the frame where star
    sees each chain world and nothing else is related.

    Args:
        psi (L1Formula): A Hintikka formula.

    Returns:
        KripkeModel: The countermodel; blass(psi) is false at its star.

    Raises:
        NotHintikkaException: If psi is not a Hintikka formula.
        ProvableInputException: If psi is provable.
    """
    return countermodel_variant(psi, FrameVariant(VariantKind.K4_1))


@dataclass(frozen=True, slots=True)
class FalsificationResult:
    """The outcome of evaluating a countermodel against its Hintikka formula."""

    formula: L1Formula
    """The Hintikka formula."""
    variant: FrameVariant
    """The frame variant used."""
    model: KripkeModel
    """The countermodel."""
    holds_at_star: bool
    """Whether the translated formula holds at star; False is the expected outcome."""
    true_positive_atoms: tuple[Eps, ...]
    """Atomic positive parts whose translation holds at star (expected none)."""
    false_negative_atoms: tuple[Eps, ...]
    """Atomic negative parts whose translation fails at star (expected none)."""
    has_tails: bool
    """Whether the formula has tail variables."""

    @property
    def falsified(self) -> bool:
        """True if the countermodel falsifies the translated formula at star."""
        return not self.holds_at_star

    @property
    def atom_cases_hold(self) -> bool:
        """True if every atomic positive part fails and every atomic negative part holds at star."""
        return not self.true_positive_atoms and not self.false_negative_atoms

    def to_json(self) -> dict[str, Any]:
        """
        Returns the JSON representation of the result.

        Returns:
            dict[str, Any]: A JSON representation of the result.
        """
        return {
            "formula": to_text(self.formula),
            "variant": str(self.variant),
            "falsified": self.falsified,
            "true_positive_atoms": [to_text(a) for a in self.true_positive_atoms],
            "false_negative_atoms": [to_text(a) for a in self.false_negative_atoms],
            "has_tails": self.has_tails,
        }


def verify_falsification(psi: L1Formula, variant: FrameVariant) -> FalsificationResult:
    """
    Builds the countermodel for a variant and evaluates the translation of
    psi at star, together with the atom-by-atom checks: the translation of
    every atomic positive part must fail at star and the translation of every
    atomic negative part must hold there.

    Args:
        psi (L1Formula): A Hintikka formula.
        variant (FrameVariant): The relation builder.

    Returns:
        FalsificationResult: The evaluation.

    Raises:
        NotHintikkaException: If psi is not a Hintikka formula.
        ProvableInputException: If psi is provable.
    """
    model = countermodel_variant(psi, variant)
    index = PartsIndex.of(psi)
    result = FalsificationResult(
        formula=psi,
        variant=variant,
        model=model,
        holds_at_star=forces(model, STAR, blass(psi)),
        true_positive_atoms=tuple(sorted(
            (a for a in index.positive_atoms if forces(model, STAR, blass(a))),
            key=to_text)),
        false_negative_atoms=tuple(sorted(
            (a for a in index.negative_atoms if not forces(model, STAR, blass(a))),
            key=to_text)),
        has_tails=bool(analyze(psi).tails),
    )
    if not result.falsified:
        logging.info(f"{variant} countermodel does not falsify {to_text(psi)}")
    return result
