import logging
from dataclasses import asdict, dataclass
from typing import Any

import numpy as np

from ..l10n import __
from .Countermodels import DeonticSystem, FrameVariant, VariantKind, variant_frame
from .KripkeModel import KripkeModel

PROPERTY_NAMES = (
    "serial", "transitive", "euclidean", "almost_reflexive", "almost_symmetric",
    "reflexive", "irreflexive", "symmetric",
)


@dataclass(frozen=True, slots=True)
class FrameProperties:
    """
    The accessibility conditions of a finite frame, each evaluated exactly.
    """

    serial: bool
    """Every world has a successor."""
    transitive: bool
    """xRy and yRz give xRz."""
    euclidean: bool
    """xRy and xRz give yRz."""
    almost_reflexive: bool
    """xRy gives yRy."""
    almost_symmetric: bool
    """xRy and yRz give zRy."""
    reflexive: bool
    """Every world sees itself."""
    irreflexive: bool
    """No world sees itself."""
    symmetric: bool
    """xRy gives yRx."""

    def to_json(self) -> dict[str, Any]:
        """
        Returns the JSON representation of the properties.

        Returns:
            dict[str, Any]: A JSON representation of the properties.
        """
        return asdict(self)


def _implies(antecedent: np.ndarray, consequent: np.ndarray) -> bool:
    return bool(np.all(~antecedent | consequent))


def frame_properties(m: KripkeModel) -> FrameProperties:
    """
    Evaluates the frame conditions of a model's relation.

    Args:
        m (KripkeModel): The model; only its frame is used.

    Returns:
        FrameProperties: The conditions that hold.
    """
    r = m.relation_matrix()
    r_int = r.astype(int)
    diagonal = np.diag(r)
    has_predecessor = r.any(axis=0)

    return FrameProperties(
        serial=bool(r.any(axis=1).all()),
        transitive=_implies((r_int @ r_int) > 0, r),
        euclidean=_implies((r_int.T @ r_int) > 0, r),
        almost_reflexive=_implies(has_predecessor, diagonal),
        # For every y with a predecessor, yRz gives zRy.
        almost_symmetric=_implies(has_predecessor[:, None] & r, r.T),
        reflexive=bool(diagonal.all()),
        irreflexive=not bool(diagonal.any()),
        symmetric=bool(np.array_equal(r, r.T)),
    )


def audit_variant(v: FrameVariant, n: int) -> FrameProperties:
    """
    Builds a variant's frame for n chains and evaluates its conditions.

    Args:
        v (FrameVariant): The variant.
        n (int): The number of chains.

    Returns:
        FrameProperties: The conditions that hold.
    """
    return frame_properties(variant_frame(v, n))


_deontic_conditions = {
    DeonticSystem.OK: (),
    DeonticSystem.OM: ("almost_reflexive",),
    DeonticSystem.OS4: ("transitive", "almost_reflexive"),
    DeonticSystem.OB: ("almost_symmetric", "almost_reflexive"),
    DeonticSystem.OS5: ("euclidean", "transitive"),
    DeonticSystem.OK_PLUS: ("serial",),
    DeonticSystem.OM_PLUS: ("serial", "almost_reflexive"),
    DeonticSystem.OS4_PLUS: ("serial", "transitive", "almost_reflexive"),
    DeonticSystem.OB_PLUS: ("serial", "almost_symmetric", "almost_reflexive"),
    DeonticSystem.OS5_PLUS: ("serial", "euclidean", "transitive"),
}

_claims = {
    VariantKind.K4_1: ("transitive", "irreflexive"),
    VariantKind.T6_1: ("transitive", "irreflexive"),
    VariantKind.DEONTIC_FULL: ("serial", "transitive", "euclidean", "almost_reflexive", "almost_symmetric"),
    VariantKind.T7_1: ("serial", "irreflexive", "euclidean", "almost_symmetric"),
    VariantKind.T7_2: ("serial", "transitive", "irreflexive", "almost_reflexive", "almost_symmetric"),
    VariantKind.T7_3: ("serial", "transitive", "irreflexive", "euclidean", "almost_reflexive", "almost_symmetric"),
    VariantKind.T7_7: ("serial", "irreflexive", "euclidean", "symmetric"),
    VariantKind.T7_8: ("serial", "transitive", "euclidean"),
    VariantKind.T7_9: ("serial", "symmetric"),
}


def required_conditions(variant: FrameVariant) -> tuple[str, ...]:
    """
    Returns the frame conditions of the logic a variant is built for: the
    model class of the deontic system, and finite transitive irreflexive
    frames for the two constructions used for the provability logic.

    Args:
        variant (FrameVariant): The variant.

    Returns:
        tuple[str, ...]: Property names of FrameProperties.
    """
    if variant.kind is VariantKind.DEONTIC:
        return _deontic_conditions[variant.system]
    if variant.kind in (VariantKind.K4_1, VariantKind.T6_1):
        return ("transitive", "irreflexive")
    return ()


def claimed_properties(variant: FrameVariant) -> tuple[str, ...]:
    """
    Returns the frame properties each construction is said to be applicable
    to. A deontic variant claims the conditions of its system.

    Args:
        variant (FrameVariant): The variant.

    Returns:
        tuple[str, ...]: Property names of FrameProperties.
    """
    if variant.kind is VariantKind.DEONTIC:
        return _deontic_conditions[variant.system]
    return _claims[variant.kind]


@dataclass(frozen=True, slots=True)
class FrameAudit:
    """The audit of one variant frame."""

    variant: FrameVariant
    """The audited variant."""
    n: int
    """The number of chains the frame was built for."""
    frame: KripkeModel
    """The frame."""
    properties: FrameProperties
    """The conditions that hold."""
    required: dict[str, bool]
    """Each required condition and whether the frame has it."""
    claimed: dict[str, bool]
    """Each claimed property and whether the frame has it."""
    notes: tuple[str, ...]
    """Discrepancies between the construction and what is stated about it."""

    @property
    def consistent(self) -> bool:
        """True if every required and claimed property holds."""
        return all(self.required.values()) and all(self.claimed.values())

    def to_json(self) -> dict[str, Any]:
        """
        Returns the JSON representation of the audit.

        Returns:
            dict[str, Any]: A JSON representation of the audit.
        """
        return {
            "variant": str(self.variant),
            "n": self.n,
            "worlds": list(self.frame.worlds),
            "relation": sorted([list(pair) for pair in self.frame.relation]),
            "properties": self.properties.to_json(),
            "required": self.required,
            "claimed": self.claimed,
            "notes": list(self.notes),
        }


def _notes(variant: FrameVariant, n: int, properties: FrameProperties,
           required: dict[str, bool], claimed: dict[str, bool]) -> list[str]:
    notes = []
    for name, holds in required.items():
        if not holds:
            notes.append(__("@audit.note.required_missing", property=__(f"@audit.property.{name}")))
    for name, holds in claimed.items():
        if not holds and name not in required:
            notes.append(__("@audit.note.claimed_missing", property=__(f"@audit.property.{name}")))

    if variant.kind is VariantKind.T7_8:
        notes.append(__("@audit.note.t7_8_reading"))
    if variant.reflexive_star:
        notes.append(__("@audit.note.reflexive_star_tails"))
    if variant.kind is VariantKind.DEONTIC and variant.system.is_s5 and n == 0 and not properties.euclidean:
        notes.append(__("@audit.note.os5_empty"))
    if variant.kind is VariantKind.DEONTIC and variant.system.is_s5 and n >= 1 and not properties.euclidean:
        notes.append(__("@audit.note.os5_repair"))
    return notes


def audit_report(variant: FrameVariant, n: int) -> FrameAudit:
    """
    Audits a variant frame: evaluates its conditions, compares them with the
    required and claimed ones and records every discrepancy.

    Args:
        variant (FrameVariant): The variant.
        n (int): The number of chains (0 or more).

    Returns:
        FrameAudit: The audit.
    """
    frame = variant_frame(variant, n)
    properties = frame_properties(frame)
    values = properties.to_json()
    required = {name: values[name] for name in required_conditions(variant)}
    claimed = {name: values[name] for name in claimed_properties(variant)}
    notes = _notes(variant, n, properties, required, claimed)
    for note in notes:
        logging.info(f"{variant} (n={n}): {note}")
    return FrameAudit(variant, n, frame, properties, required, claimed, tuple(notes))
