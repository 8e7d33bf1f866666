import logging
import multiprocessing
import queue
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from ..ModalK.TableauK import is_valid_k
from ..Syntax.FormulaParser import parse_l1
from ..Syntax.FormulaPrinter import to_text
from ..Syntax.Formulas import L1Formula
from ..Tableau.L1Oracle import is_provable_l1_semantic
from ..Tableau.TableauL1 import is_provable_l1
from ..Translate.Translation import blass, naive


@dataclass(frozen=True, slots=True)
class RoundtripResult:
    """The answers of every decision procedure for one formula."""

    formula: str
    """The formula text."""
    provable: bool
    """Whether the L₁ tableau closes."""
    blass_valid: bool
    """Whether the Blass translation is K-valid."""
    oracle_provable: Optional[bool] = None
    """The brute-force L₁ answer, when requested."""
    naive_valid: Optional[bool] = None
    """Whether the naive translation is K-valid, when requested."""

    @property
    def mismatch(self) -> bool:
        """True if the procedures disagree about the formula."""
        if self.provable != self.blass_valid:
            return True
        return self.oracle_provable is not None and self.oracle_provable != self.provable

    @property
    def naive_unfaithful(self) -> bool:
        """True if the naive translation is valid although the formula is unprovable."""
        return bool(self.naive_valid) and not self.provable


def check_formula(phi: L1Formula, oracle: bool = False, with_naive: bool = False) -> RoundtripResult:
    """
    Runs the faithfulness round trip on one formula.

    Args:
        phi (L1Formula): The formula.
        oracle (bool, optional): Whether to also run the brute-force L₁ check. Defaults to False.
        with_naive (bool, optional): Whether to also decide the naive translation. Defaults to False.

    Returns:
        RoundtripResult: The answers.
    """
    return RoundtripResult(
        formula=to_text(phi),
        provable=is_provable_l1(phi),
        blass_valid=is_valid_k(blass(phi)).valid,
        oracle_provable=is_provable_l1_semantic(phi) if oracle else None,
        naive_valid=is_valid_k(naive(phi)).valid if with_naive else None,
    )


@dataclass(frozen=True, slots=True)
class _WorkerEvent:
    """Represents an event that is raised by the worker."""

    id: int
    """The index of the chunk."""


@dataclass(frozen=True, slots=True)
class _WorkerSuccessEvent(_WorkerEvent):
    """Represents an event that is raised by the worker when a chunk is checked."""

    results: list[RoundtripResult]
    """The results, in chunk order."""


@dataclass(frozen=True, slots=True)
class _WorkerFailureEvent(_WorkerEvent):
    """Represents an event that is raised by the worker when checking a chunk fails."""

    error: Exception
    """The error that occurred."""


@dataclass(frozen=True, slots=True)
class _WorkerTask:
    """Represents a task that is executed by the worker."""

    id: int
    """The index of the chunk."""
    formulas: list[str]
    """The formulas, as text so the worker re-parses them."""


class _Worker(multiprocessing.Process):
    """
    Checks chunks of formulas in a separate process. Two queues are used to communicate:
    - The input queue is used to send chunks to the worker.
    - The event queue is used to send events from the worker.
    These queues should be provided by the main process.
    """

    def __init__(self, input_queue, event_queue, oracle: bool, with_naive: bool, *args, **kwargs):
        """
        Initializes a new instance of the Worker class.

        Args:
            input_queue (multiprocessing.Queue): The input queue.
            event_queue (multiprocessing.Queue): The event queue.
            oracle (bool): Whether to run the brute-force L₁ check.
            with_naive (bool): Whether to decide the naive translation.
        """
        super().__init__(*args, **kwargs)
        self.daemon = True
        self._input_queue = input_queue  # type: multiprocessing.Queue[_WorkerTask]
        self._event_queue = event_queue  # type: multiprocessing.Queue[_WorkerEvent]
        self._oracle = oracle
        self._with_naive = with_naive
        self.max_idle_time = 60  # seconds

    def run(self):
        """
        Runs the worker.
        """
        while True:
            try:
                task = self._input_queue.get(timeout=self.max_idle_time)
            except queue.Empty:
                break

            if task is None:  # Poison pill pattern
                break

            try:
                results = [check_formula(parse_l1(text), self._oracle, self._with_naive) for text in task.formulas]
                event = _WorkerSuccessEvent(task.id, results)
            except Exception as e:
                event = _WorkerFailureEvent(task.id, e)

            self._event_queue.put(event)


@dataclass
class RoundtripReport:
    """The summary of a round trip over a corpus."""

    total: int = 0
    """The number of formulas checked."""
    provable: int = 0
    """How many of them are provable."""
    mismatches: list[RoundtripResult] = field(default_factory=list)
    """Every formula on which the procedures disagree."""
    naive_unfaithful: list[RoundtripResult] = field(default_factory=list)
    """Unprovable formulas whose naive translation is valid."""
    formulas: list[str] = field(default_factory=list)
    """The text of every checked formula, in the order it was added."""

    @property
    def ok(self) -> bool:
        """True if there is no mismatch."""
        return not self.mismatches

    def add(self, result: RoundtripResult):
        """
        Adds one result to the summary.

        Args:
            result (RoundtripResult): The result.
        """
        self.total += 1
        self.formulas.append(result.formula)
        self.provable += int(result.provable)
        if result.mismatch:
            logging.warning(f"Mismatch on {result.formula}: {result}")
            self.mismatches.append(result)
        if result.naive_unfaithful:
            self.naive_unfaithful.append(result)


class RoundtripWorkerError(Exception):
    """
    Exception that is thrown when a worker process fails on a chunk.
    """

    def __init__(self, chunk: int, error: Exception):
        """
        Initializes a new instance of the RoundtripWorkerError class.

        Args:
            chunk (int): The index of the failed chunk.
            error (Exception): The error raised in the worker.
        """
        super().__init__(f"Worker failed on chunk {chunk}: {error}")
        self.chunk = chunk
        self.error = error


class RoundtripService:
    """
    Runs the faithfulness round trip over many formulas. With more than one
    worker the corpus is split into chunks that are checked in parallel
    processes; with one worker everything runs in the calling process.
    """

    def __init__(self, max_workers: int = 1, chunk_size: int = 64,
                 oracle: bool = False, with_naive: bool = False) -> None:
        """
        Initializes a new instance of the RoundtripService class.

        Args:
            max_workers (int, optional): The number of workers. 0 or None means one per CPU core. Defaults to 1.
            chunk_size (int, optional): How many formulas a worker checks per task. Defaults to 64.
            oracle (bool, optional): Whether to run the brute-force L₁ check. Defaults to False.
            with_naive (bool, optional): Whether to decide the naive translation. Defaults to False.
        """
        self._max_workers = max_workers or multiprocessing.cpu_count()
        self._chunk_size = max(1, chunk_size)
        self._oracle = oracle
        self._with_naive = with_naive

    def run(self, formulas: Iterable[L1Formula],
            on_progress: Callable[[int, int], None] = None) -> RoundtripReport:
        """
        Checks every formula.

        Args:
            formulas (Iterable[L1Formula]): The corpus.
            on_progress (Callable[[int, int], None], optional): Called with the number of
                checked formulas and the total after each chunk.

        Returns:
            RoundtripReport: The summary.

        Raises:
            RoundtripWorkerError: If a worker fails.
        """
        formulas = list(formulas)
        on_progress = on_progress or (lambda done, total: None)
        chunks = [formulas[i:i + self._chunk_size] for i in range(0, len(formulas), self._chunk_size)]
        logging.info(f"Round trip over {len(formulas)} formulas in {len(chunks)} chunks with {self._max_workers} workers")

        if self._max_workers == 1 or len(chunks) <= 1:
            return self._run_inline(chunks, len(formulas), on_progress)
        return self._run_parallel(chunks, len(formulas), on_progress)

    def _run_inline(self, chunks, total: int, on_progress) -> RoundtripReport:
        report = RoundtripReport()
        for chunk in chunks:
            for phi in chunk:
                report.add(check_formula(phi, self._oracle, self._with_naive))
            on_progress(report.total, total)
        return report

    def _run_parallel(self, chunks, total: int, on_progress) -> RoundtripReport:
        input_queue = multiprocessing.Queue()
        event_queue = multiprocessing.Queue()
        for i, chunk in enumerate(chunks):
            input_queue.put(_WorkerTask(i, [to_text(phi) for phi in chunk]))

        workers = []
        for i in range(min(self._max_workers, len(chunks))):
            name = "RoundtripServiceWorker-{}".format(i)
            worker = _Worker(input_queue, event_queue, self._oracle, self._with_naive, name=name, daemon=True)
            workers.append(worker)
            worker.start()
            input_queue.put(None)

        results: dict[int, list[RoundtripResult]] = {}
        done = 0
        try:
            while len(results) < len(chunks):
                event = event_queue.get()  # type: _WorkerEvent
                if isinstance(event, _WorkerFailureEvent):
                    raise RoundtripWorkerError(event.id, event.error)
                results[event.id] = event.results
                done += len(event.results)
                on_progress(done, total)
        finally:
            for worker in workers:
                if worker.is_alive():
                    worker.terminate()
                worker.join()

        # Report in corpus order regardless of completion order.
        report = RoundtripReport()
        for i in range(len(chunks)):
            for result in results[i]:
                report.add(result)
        return report
