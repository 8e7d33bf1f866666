import pytest

from src.Kripke.AuditReportExporter import AuditReportExporter
from src.Kripke.Countermodels import DeonticSystem, FrameVariant, VariantKind, all_variants
from src.Kripke.FrameAuditor import audit_report, audit_variant, frame_properties
from src.Kripke.KripkeModel import KripkeModel
from src.l10n import __


def deontic(system: DeonticSystem) -> FrameVariant:
    return FrameVariant(VariantKind.DEONTIC, system)


def test_properties_of_a_single_dead_end():
    properties = frame_properties(KripkeModel(("w",), "w", frozenset()))
    assert not properties.serial
    assert properties.transitive
    assert properties.euclidean
    assert properties.almost_reflexive
    assert properties.irreflexive
    assert not properties.reflexive


def test_properties_of_a_cluster():
    worlds = ("u", "v")
    relation = frozenset((x, y) for x in worlds for y in worlds)
    properties = frame_properties(KripkeModel(worlds, "u", relation)).to_json()
    assert not properties.pop("irreflexive")
    assert all(properties.values())


@pytest.mark.parametrize("n", [1, 2, 3])
def test_k_frame_is_transitive_and_irreflexive(n):
    properties = audit_variant(FrameVariant(VariantKind.K4_1), n)
    assert properties.transitive and properties.irreflexive
    assert not properties.serial
    assert not properties.euclidean


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_full_deontic_frame(n):
    audit = audit_report(FrameVariant(VariantKind.DEONTIC_FULL), n)
    assert audit.consistent
    assert audit.notes == ()
    assert audit.properties.euclidean and audit.properties.serial


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("system", [s for s in DeonticSystem if not s.is_s5])
def test_deontic_frames_meet_their_conditions(system, n):
    assert audit_report(deontic(system), n).consistent


@pytest.mark.parametrize("n", [1, 2, 3])
def test_s5_frames_are_not_euclidean(n):
    audit = audit_report(deontic(DeonticSystem.OS5), n)
    assert not audit.properties.euclidean
    assert audit.required["euclidean"] is False
    assert __("@audit.note.os5_repair") in audit.notes


def test_s5_frame_without_chains():
    audit = audit_report(deontic(DeonticSystem.OS5_PLUS), 0)
    assert not audit.properties.euclidean
    assert __("@audit.note.os5_empty") in audit.notes


def test_almost_reflexive_deontic_frame_without_chains():
    audit = audit_report(deontic(DeonticSystem.OM), 0)
    assert not audit.properties.almost_reflexive
    assert not audit.properties.transitive
    assert not audit.consistent


def test_loops_break_irreflexivity_claims():
    audit = audit_report(FrameVariant(VariantKind.T7_2), 2)
    assert audit.claimed["irreflexive"] is False
    assert audit.claimed["transitive"] is True
    note = __("@audit.note.claimed_missing", property=__("@audit.property.irreflexive"))
    assert note in audit.notes


def test_single_chain_frame_is_not_serial():
    audit = audit_report(FrameVariant(VariantKind.T7_1), 1)
    assert audit.claimed["serial"] is False


def test_star_loop_notes():
    audit = audit_report(FrameVariant(VariantKind.T7_8), 2)
    assert __("@audit.note.t7_8_reading") in audit.notes
    assert __("@audit.note.reflexive_star_tails") in audit.notes
    assert __("@audit.note.reflexive_star_tails") in audit_report(FrameVariant(VariantKind.T7_9), 2).notes


def test_audit_json():
    data = audit_report(FrameVariant(VariantKind.T7_2), 1).to_json()
    assert data["variant"] == "T7_2"
    assert data["worlds"] == ["*", "g1"]
    assert data["relation"] == [["*", "g1"], ["g1", "g1"]]
    assert data["properties"]["almost_reflexive"] is True


def test_html_report(tmp_path):
    audits = [audit_report(variant, 2) for variant in all_variants()]
    filename = tmp_path / "report" / "audit.html"
    AuditReportExporter(audits, str(filename)).export()
    html = filename.read_text(encoding="utf-8")
    assert "Deontic(OS5+)" in html
    assert "T7_8" in html
    assert (tmp_path / "report" / "styles.css").exists()
