# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

from ddradar.experiments.progress import (
    NullProgressReporter,
    PrintProgressReporter,
    Progress,
)


def test_progress_done():
    assert Progress("x", 3, 3).done
    assert not Progress("x", 3, 2).done
    assert not Progress("x").done


def test_print_reporter_prints_once_per_item(capsys):
    reporter = PrintProgressReporter("ddradar ").child("rectangles")
    reporter(Progress("rectangle 1", 4, 1))
    reporter(Progress("rectangle 1", 4, 2))
    reporter(Progress("rectangle 2", 4, 3))
    reporter(Progress("rectangle 2", 4, 4))
    assert capsys.readouterr().out.splitlines() == [
        "ddradar rectangles: rectangle 1 [1/4]",
        "ddradar rectangles: rectangle 2 [3/4]",
        "ddradar rectangles: rectangle 2 [4/4]",
    ]


def test_print_reporter_messages(capsys):
    reporter = PrintProgressReporter("ddradar ")
    reporter.warning("aliased")
    reporter.error("no peaks")
    reporter.success("bench completed")
    assert capsys.readouterr().out.splitlines() == [
        "ddradar WARNING: aliased",
        "ddradar ERROR: no peaks",
        "ddradar DONE: bench completed",
    ]


def test_null_reporter_is_silent(capsys):
    reporter = NullProgressReporter()
    assert reporter.child("bench") is reporter
    reporter(Progress("2^10", 5, 1))
    reporter.error("ignored")
    assert capsys.readouterr().out == ""
