# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""The experiment runner package root."""

import argparse
import sys

from .cli import experiment_cli


def build_parser() -> argparse.ArgumentParser:
    """Build the command-line parser."""
    parser = argparse.ArgumentParser(prog="python -m ddradar.experiments")
    parser.add_argument(
        "command",
        help="The experiment to run.",
        choices=["heatmap", "rectangles", "snr-sweep", "bench"],
    )
    parser.add_argument(
        "--config",
        help="The configuration yaml or json file to use for the experiment",
        required=False,
        type=str,
    )
    parser.add_argument(
        "--out",
        help="The base output directory; a timestamped run directory is created inside it",
        required=False,
        type=str,
    )
    parser.add_argument(
        "--seed",
        help="The root random seed, overrides the configuration",
        required=False,
        type=int,
    )
    parser.add_argument(
        "--profile",
        help="The scale profile used to resolve defaults; full is an alias of paper",
        choices=["ci", "paper", "full"],
        type=str,
    )
    parser.add_argument(
        "--reporter",
        help="The progress reporter to use. Valid values are 'rich', 'print', or 'none'",
        choices=["rich", "print", "none"],
        type=str,
    )
    parser.add_argument(
        "--root",
        help="The root directory searched for a .env file. Default value: the current directory",
        default=".",
        type=str,
    )
    parser.add_argument(
        "--lattice",
        help="Also write the pulsone self-ambiguity over two periods (heatmap, zak_otfs)",
        action="store_true",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        help="Runs the experiment with verbose logging",
        action="store_true",
    )
    return parser


if __name__ == "__main__":
    parser = build_parser()
    args = parser.parse_args()

    if args.seed is not None and args.seed < 0:
        parser.error("--seed must be non-negative")

    sys.exit(
        experiment_cli(
            command=args.command,
            config=args.config,
            out=args.out,
            seed=args.seed,
            profile=args.profile,
            reporter=args.reporter,
            verbose=args.verbose or False,
            lattice=args.lattice or False,
            root=args.root,
        )
    )
