import argparse
import json
import logging
import sys
from typing import Optional, TextIO

from . import constants
from .Chains.ChainAnalysis import NotHintikkaException, analyze
from .Kripke.AuditReportExporter import AuditReportExporter
from .Kripke.Countermodels import (FrameVariant, ProvableInputException, all_variants,
                                    verify_falsification)
from .Kripke.FrameAuditor import audit_report
from .Kripke.KripkeModel import UndeclaredVariableException, UnknownWorldException, forces
from .l10n import LocalizationService, __
from .ModalK.DepthOneOracle import DepthExceededException, TooManyVariablesException, is_valid_k_depth1
from .ModalK.TableauK import is_valid_k
from .ModelFile.ModelFileReader import InvalidModelFileException, ModelFileReader
from .ModelFile.ModelFileWriter import ModelFileWriter
from .Roundtrip.Corpus import enumerate_formulas, sample_formulas
from .Roundtrip.RoundtripService import RoundtripService, RoundtripWorkerError
from .SettingsService import SettingsService
from .Syntax.FormulaParser import FormulaSyntaxError, parse_l1, parse_modal
from .Syntax.Formulas import L1Formula
from .Tableau.TableauL1 import build_normal_tableau, first_hintikka_formula, is_hintikka
from .Translate.Translation import (ModalityRendering, TranslationScheme, TranslationTag,
                                    blass, render, translate)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class Application:
    """
    The command-line application. It configures logging, settings and the
    language, then dispatches to one subcommand.
    """

    _instance = None

    @staticmethod
    def instance() -> "Application":
        """
        Returns the application instance.
        """
        if Application._instance is None:
            raise Exception("Application instance not created yet")
        return Application._instance

    def __init__(self, args: list[str], stdout: TextIO = None, stderr: TextIO = None):
        """
        Initializes a new instance of the Application class.

        Args:
            args (list[str]): The command line, program name included.
            stdout (TextIO, optional): Where results go. Defaults to sys.stdout.
            stderr (TextIO, optional): Where diagnostics go. Defaults to sys.stderr.
        """
        Application._instance = self
        self._args = list(args[1:])
        self._stdout = stdout or sys.stdout
        self._stderr = stderr or sys.stderr

    def _init_logging(self, options: argparse.Namespace):
        level_name = SettingsService.instance().get("log_level")
        if options.verbose:
            level_name = "INFO"
        if options.debug:
            level_name = "DEBUG"
        level = getattr(logging, str(level_name).upper(), logging.WARNING)

        logging.basicConfig(
            level=level,
            format="%(asctime)s - %(levelname)s - %(message)s",
            handlers=[
                logging.FileHandler(constants.app_log_file),
                logging.StreamHandler(self._stderr)
            ],
            force=True,
        )
        logging.getLogger().setLevel(level)

        sys.excepthook = self._handle_exception

    def _handle_exception(self, exctype, value, traceback):
        """
        Handles unhandled exceptions.
        """
        logging.error("Unhandled exception", exc_info=(exctype, value, traceback))
        print(__("@cli.error", message=str(value)), file=self._stderr)

    def init_language(self, lang_code: Optional[str] = None):
        """
        Initializes the language from the command line or the settings.

        Args:
            lang_code (str, optional): The language given on the command line.
        """
        lang_code = lang_code or SettingsService.instance().get("language")
        LocalizationService.instance().set_locale(lang_code)

    def _build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(prog="epsilon-embed", description=__("@cli.help.description"))
        parser.add_argument("--settings", metavar="PATH", help=__("@cli.help.settings"))
        parser.add_argument("--lang", metavar="CODE", help=__("@cli.help.lang"))
        parser.add_argument("--verbose", action="store_true", help=__("@cli.help.verbose"))
        parser.add_argument("--debug", action="store_true", help=__("@cli.help.debug"))
        commands = parser.add_subparsers(dest="command", required=True)

        prove = commands.add_parser("prove", help=__("@cli.help.prove"))
        prove.add_argument("formula", help=__("@cli.help.l1_formula"))
        prove.add_argument("--trace", action="store_true", help=__("@cli.help.trace"))

        translate_cmd = commands.add_parser("translate", help=__("@cli.help.translate"))
        translate_cmd.add_argument("formula", help=__("@cli.help.l1_formula"))
        translate_cmd.add_argument("--scheme", choices=[t.value for t in TranslationTag], default="blass")
        translate_cmd.add_argument("--render", choices=[r.value for r in ModalityRendering], default=None)
        translate_cmd.add_argument("--no-sugar", action="store_true", help=__("@cli.help.no_sugar"))

        countermodel = commands.add_parser("countermodel", help=__("@cli.help.countermodel"))
        countermodel.add_argument("formula", help=__("@cli.help.l1_formula"))
        countermodel.add_argument("--variant", default="K4_1", help=__("@cli.help.variant"))
        countermodel.add_argument("--out", metavar="PATH", help=__("@cli.help.out"))

        chains = commands.add_parser("chains", help=__("@cli.help.chains"))
        chains.add_argument("formula", help=__("@cli.help.l1_formula"))
        chains.add_argument("--reduce", action="store_true", help=__("@cli.help.reduce"))

        check = commands.add_parser("check", help=__("@cli.help.check"))
        check.add_argument("model_path", help=__("@cli.help.model_path"))
        check.add_argument("formula", help=__("@cli.help.modal_formula"))
        check.add_argument("--l1", action="store_true", help=__("@cli.help.check_l1"))

        roundtrip = commands.add_parser("roundtrip", help=__("@cli.help.roundtrip"))
        roundtrip.add_argument("--vars", type=int, default=2)
        roundtrip.add_argument("--max-size", type=int, default=7)
        roundtrip.add_argument("--seed", type=int, default=None, help=__("@cli.help.seed"))
        roundtrip.add_argument("--samples", type=int, default=1000, help=__("@cli.help.samples"))
        roundtrip.add_argument("--workers", type=int, default=None, help=__("@cli.help.workers"))
        roundtrip.add_argument("--oracle", action="store_true", help=__("@cli.help.oracle"))
        roundtrip.add_argument("--naive", action="store_true", help=__("@cli.help.naive"))

        audit = commands.add_parser("audit-frames", help=__("@cli.help.audit_frames"))
        audit.add_argument("--variant", default=None, help=__("@cli.help.variant"))
        audit.add_argument("--all", action="store_true", help=__("@cli.help.all_variants"))
        audit.add_argument("--n", type=int, default=2, help=__("@cli.help.n"))
        audit.add_argument("--html", metavar="PATH", help=__("@cli.help.html"))

        valid = commands.add_parser("valid", help=__("@cli.help.valid"))
        valid.add_argument("formula", help=__("@cli.help.modal_formula"))
        valid.add_argument("--depth1", action="store_true", help=__("@cli.help.depth1"))

        return parser

    def _pre_parse(self):
        # Settings and language must be known before the localized parser is built.
        pre = argparse.ArgumentParser(add_help=False)
        pre.add_argument("--settings")
        pre.add_argument("--lang")
        known, _ = pre.parse_known_args(self._args)
        if known.settings:
            SettingsService.use_file(known.settings)
        self.init_language(known.lang)

    def exec(self) -> int:
        """
        Runs the application.

        Returns:
            The exit code.
        """
        self._pre_parse()
        parser = self._build_parser()
        try:
            options = parser.parse_args(self._args)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_USAGE
        self._init_logging(options)

        handler = getattr(self, "_cmd_" + options.command.replace("-", "_"))
        try:
            return handler(options)
        except (FormulaSyntaxError, InvalidModelFileException, ValueError) as e:
            return self._fail(EXIT_USAGE, e)
        except (NotHintikkaException, ProvableInputException, DepthExceededException,
                TooManyVariablesException, UnknownWorldException, UndeclaredVariableException,
                RoundtripWorkerError) as e:
            return self._fail(EXIT_FAILURE, e)
        finally:
            Application._instance = None

    def _fail(self, code: int, error: Exception) -> int:
        logging.debug("Command failed", exc_info=error)
        if isinstance(error, FormulaSyntaxError):
            message = __("@cli.syntax_error", line=error.line, column=error.column, text=error.text)
        elif isinstance(error, NotHintikkaException):
            message = __("@cli.not_hintikka")
        elif isinstance(error, ProvableInputException):
            message = __("@cli.provable_input")
        else:
            message = str(error)
        print(__("@cli.error", message=message), file=self._stderr)
        return code

    def _print(self, text: str):
        print(text, file=self._stdout)

    def _print_json(self, data):
        self._print(json.dumps(data, indent=2, ensure_ascii=False))

    @staticmethod
    def _read_argument(text: str) -> str:
        """Returns the text, or the file contents for "@path" arguments."""
        if text.startswith("@"):
            with open(text[1:], "r", encoding="utf-8") as file:
                return file.read().strip()
        return text

    def _l1(self, text: str) -> L1Formula:
        return parse_l1(self._read_argument(text))

    def _hintikka_leaf(self, phi: L1Formula) -> L1Formula:
        leaf = first_hintikka_formula(phi)
        if leaf is None:
            raise ProvableInputException(phi)
        return leaf

    def _cmd_prove(self, options) -> int:
        tableau = build_normal_tableau(self._l1(options.formula))
        logging.info(f"Tableau: {tableau.stats}")
        self._print(__("@cli.provable") if tableau.is_closed else __("@cli.unprovable"))
        if options.trace:
            self._print_json(tableau.to_json())
        return EXIT_OK

    def _cmd_translate(self, options) -> int:
        rendering = ModalityRendering(options.render or SettingsService.instance().get("render"))
        scheme = TranslationScheme(TranslationTag(options.scheme), rendering)
        modal = translate(self._l1(options.formula), scheme)
        self._print(render(modal, scheme, sugar=not options.no_sugar))
        return EXIT_OK

    def _cmd_countermodel(self, options) -> int:
        phi = self._l1(options.formula)
        variant = FrameVariant.parse(options.variant)
        leaf = self._hintikka_leaf(phi)
        result = verify_falsification(leaf, variant)
        model = result.model
        writer = ModelFileWriter(model)
        if options.out:
            writer.write(options.out)
            logging.info(f"Wrote countermodel to {options.out}")
        else:
            self._print(writer.dumps())
        if forces(model, model.star, blass(phi)):
            key = "@cli.not_falsified_tails" if result.has_tails else "@cli.not_falsified"
            print(__("@cli.error", message=__(key, variant=variant)), file=self._stderr)
            return EXIT_FAILURE
        return EXIT_OK

    def _cmd_chains(self, options) -> int:
        phi = self._l1(options.formula)
        if options.reduce and not is_hintikka(phi):
            phi = self._hintikka_leaf(phi)
        self._print_json(analyze(phi).to_json())
        return EXIT_OK

    def _cmd_check(self, options) -> int:
        model = ModelFileReader().read(options.model_path)
        text = self._read_argument(options.formula)
        formula = blass(parse_l1(text)) if options.l1 else parse_modal(text)
        self._print(json.dumps(forces(model, model.star, formula)))
        return EXIT_OK

    def _cmd_roundtrip(self, options) -> int:
        settings = SettingsService.instance()
        workers = options.workers if options.workers is not None else settings.get("roundtrip_workers")
        if options.seed is None:
            corpus = enumerate_formulas(options.vars, options.max_size)
        else:
            corpus = sample_formulas(options.vars, options.max_size, options.samples, options.seed)

        service = RoundtripService(
            max_workers=workers,
            chunk_size=settings.get("roundtrip_chunk_size"),
            oracle=options.oracle,
            with_naive=options.naive,
        )

        def on_progress(done: int, total: int):
            logging.info(__("@cli.roundtrip_progress", done=done, total=total))

        report = service.run(corpus, on_progress)
        for result in report.mismatches:
            print(__("@cli.mismatch", formula=result.formula, provable=result.provable,
                     valid=result.blass_valid, oracle=result.oracle_provable), file=self._stderr)
        if options.naive:
            self._print(__("@cli.naive_summary", count=len(report.naive_unfaithful)))

        key = "@cli.roundtrip_ok" if report.ok else "@cli.roundtrip_failed"
        self._print(__(key, count=report.total, mismatches=len(report.mismatches)))
        return EXIT_OK if report.ok else EXIT_FAILURE

    def _cmd_audit_frames(self, options) -> int:
        if options.n < 0:
            raise ValueError(__("@cli.negative_n"))
        if options.all or options.variant is None:
            variants = all_variants()
        else:
            variants = [FrameVariant.parse(options.variant)]

        audits = [audit_report(variant, options.n) for variant in variants]
        if options.html:
            AuditReportExporter(audits, options.html).export()
            logging.info(f"Wrote audit report to {options.html}")

        data = [audit.to_json() for audit in audits]
        self._print_json(data[0] if len(data) == 1 else data)
        return EXIT_OK

    def _cmd_valid(self, options) -> int:
        formula = parse_modal(self._read_argument(options.formula))
        verdict = is_valid_k_depth1(formula) if options.depth1 else is_valid_k(formula)
        self._print_json(verdict.to_json())
        return EXIT_OK
