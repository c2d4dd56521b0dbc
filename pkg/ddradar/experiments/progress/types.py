# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Progress updates and the reporters that display them."""

from abc import ABC, abstractmethod
from dataclasses import dataclass


@dataclass(frozen=True)
class Progress:
    """A progress update for a running experiment."""

    description: str | None = None
    """What is being worked on, e.g. `rectangle 3` or `-10 dB`."""

    total_items: int | None = None
    """Total number of items (trials, surfaces, grid sizes)."""

    completed_items: int | None = None
    """Number of items done."""

    @property
    def done(self) -> bool:
        """Whether every item is complete."""
        return self.total_items is not None and (self.completed_items or 0) >= self.total_items


class ProgressReporter(ABC):
    """Receives trial counts and status messages from the experiment runners."""

    @abstractmethod
    def __call__(self, update: Progress) -> None:
        """Show an update."""

    @abstractmethod
    def child(self, prefix: str, transient: bool = True) -> "ProgressReporter":
        """Get a reporter for one stage of the run (a sweep, the bench)."""

    @abstractmethod
    def stop(self) -> None:
        """Stop any live display."""

    @abstractmethod
    def error(self, message: str) -> None:
        """Report an error."""

    @abstractmethod
    def warning(self, message: str) -> None:
        """Report a warning."""

    @abstractmethod
    def success(self, message: str) -> None:
        """Report a finished run."""


class NullProgressReporter(ProgressReporter):
    """Discards updates and messages."""

    def __call__(self, update: Progress) -> None:
        """Ignore the update."""

    def child(self, prefix: str, transient: bool = True) -> ProgressReporter:
        """Get this reporter."""
        return self

    def stop(self) -> None:
        """Do nothing."""

    def error(self, message: str) -> None:
        """Ignore the message."""

    def warning(self, message: str) -> None:
        """Ignore the message."""

    def success(self, message: str) -> None:
        """Ignore the message."""


class PrintProgressReporter(ProgressReporter):
    """Prints one line per new item, e.g. `ddradar rectangles: rectangle 2 [7/18]`."""

    prefix: str

    def __init__(self, prefix: str):
        self.prefix = prefix
        self._current: str | None = None

    def __call__(self, update: Progress) -> None:
        """Print the update if it starts a new item or finishes the stage."""
        if update.description == self._current and not update.done:
            return
        self._current = update.description
        total = "?" if update.total_items is None else update.total_items
        print(f"{self.prefix}{update.description or ''} [{update.completed_items or 0}/{total}]")  # noqa: T201

    def child(self, prefix: str, transient: bool = True) -> ProgressReporter:
        """Get a reporter whose lines carry the stage name."""
        return PrintProgressReporter(f"{self.prefix}{prefix}: ")

    def stop(self) -> None:
        """Do nothing; printed lines need no teardown."""

    def _say(self, level: str, message: str) -> None:
        print(f"{self.prefix}{level}: {message}")  # noqa: T201

    def error(self, message: str) -> None:
        """Print an error line."""
        self._say("ERROR", message)

    def warning(self, message: str) -> None:
        """Print a warning line."""
        self._say("WARNING", message)

    def success(self, message: str) -> None:
        """Print the completion line."""
        self._say("DONE", message)
