import os
import shutil
from dataclasses import dataclass
from datetime import datetime

from jinja2 import Environment, FileSystemLoader

from .. import constants
from ..l10n import LocalizationService, __
from .FrameAuditor import PROPERTY_NAMES, FrameAudit


@dataclass
class PropertyRow:
    name: str
    holds: bool
    required: bool
    claimed: bool


@dataclass
class AuditInfo:
    variant: str
    n: int
    worlds: str
    relation: str
    consistent: bool
    properties: list[PropertyRow]
    notes: list[str]


@dataclass
class ReportInfo:
    language: str
    generated_at: str
    app_version: str
    total_audits: int
    total_discrepancies: int
    audits: list[AuditInfo]


class AuditReportExporter:
    """
    Exports a list of frame audits as an HTML report. The stylesheet is copied
    next to the report.
    """

    def __init__(self, audits: list[FrameAudit], filename: str):
        """
        Initializes a new instance of the AuditReportExporter class.

        Args:
            audits (list[FrameAudit]): The audits to export.
            filename (str): The filename of the HTML report.
        """
        self.audits = audits
        self.filename = filename
        self.folder = os.path.dirname(os.path.abspath(filename))
        self.language = LocalizationService.instance().locale

    def export(self):
        """
        Exports the report
        """
        os.makedirs(self.folder, exist_ok=True)
        self._generate_html(self._get_report_info())
        shutil.copy(os.path.join(constants.html_folder, "styles.css"), os.path.join(self.folder, "styles.css"))

    def _generate_html(self, report_info: ReportInfo):
        env = Environment(loader=FileSystemLoader(constants.html_folder), autoescape=True)
        template = env.get_template("audit.html")

        def trans(key: str, **kwargs) -> str:
            """Returns a localized string for the given key"""
            return __("@audit_report." + key, **kwargs)

        env.globals["__"] = trans

        html = template.render(report_info.__dict__)

        with open(self.filename, "w", encoding="utf-8") as file:
            file.write(html)

    def _get_audit_info(self, audit: FrameAudit) -> AuditInfo:
        values = audit.properties.to_json()
        rows = [
            PropertyRow(
                name=__(f"@audit.property.{name}"),
                holds=values[name],
                required=name in audit.required,
                claimed=name in audit.claimed,
            )
            for name in PROPERTY_NAMES
        ]
        relation = sorted(audit.frame.relation)
        return AuditInfo(
            variant=str(audit.variant),
            n=audit.n,
            worlds=", ".join(audit.frame.worlds),
            relation=", ".join(f"({a},{b})" for a, b in relation) or "∅",
            consistent=audit.consistent,
            properties=rows,
            notes=list(audit.notes),
        )

    def _get_report_info(self) -> ReportInfo:
        audits = [self._get_audit_info(audit) for audit in self.audits]
        return ReportInfo(
            language=self.language,
            generated_at=datetime.now().strftime("%Y/%m/%d %H:%M:%S"),
            app_version="v" + constants.app_version,
            total_audits=len(audits),
            total_discrepancies=sum(len(a.notes) for a in audits),
            audits=audits,
        )
