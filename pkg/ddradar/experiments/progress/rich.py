# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Rich-based progress reporter for CLI use."""

from rich.console import Console
from rich.markup import escape
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    SpinnerColumn,
    TaskID,
    TextColumn,
    TimeElapsedColumn,
)
from rich.progress import Progress as RichProgress

from .types import Progress, ProgressReporter


class RichProgressReporter(ProgressReporter):
    """One rich progress bar per experiment stage, with item counts and elapsed time.

    The root reporter owns the console and the live display; children add
    their own task to it.
    """

    _console: Console
    _bars: RichProgress
    _prefix: str
    _transient: bool
    _task: TaskID | None = None
    _stopped: bool = False

    def __init__(
        self,
        prefix: str,
        parent: "RichProgressReporter | None" = None,
        transient: bool = True,
    ) -> None:
        self._prefix = prefix.strip()
        self._transient = transient
        if parent is None:
            self._console = Console()
            self._bars = RichProgress(
                SpinnerColumn(),
                TextColumn("[progress.description]{task.description}"),
                BarColumn(),
                MofNCompleteColumn(),
                TimeElapsedColumn(),
                console=self._console,
                refresh_per_second=4,
            )
            self._bars.start()
        else:
            self._console = parent.console
            self._bars = parent.bars

    @property
    def console(self) -> Console:
        """Get the console."""
        return self._console

    @property
    def bars(self) -> RichProgress:
        """Get the shared progress display."""
        return self._bars

    def child(self, prefix: str, transient: bool = True) -> ProgressReporter:
        """Get a reporter with its own bar on the shared display."""
        return RichProgressReporter(f"{self._prefix} {prefix}", parent=self, transient=transient)

    def stop(self) -> None:
        """Stop the live display."""
        if not self._stopped:
            self._stopped = True
            self._bars.stop()

    def error(self, message: str) -> None:
        """Report an error."""
        self._console.print(f"[bold red]error[/bold red] {escape(message)}")

    def warning(self, message: str) -> None:
        """Report a warning."""
        self._console.print(f"[yellow]warning[/yellow] {escape(message)}")

    def success(self, message: str) -> None:
        """Report a finished run."""
        self._console.print(f"[green]done[/green] {escape(message)}")

    def __call__(self, update: Progress) -> None:
        """Move this reporter's bar."""
        if self._stopped:
            return
        description = escape(
            f"{self._prefix}: {update.description}" if update.description else self._prefix
        )
        total = update.total_items or 1
        if self._task is None:
            self._task = self._bars.add_task(description, total=total)
        self._bars.update(
            self._task,
            completed=update.completed_items or 0,
            total=total,
            description=description,
        )
        if update.done and self._transient:
            self._bars.update(self._task, visible=False)
