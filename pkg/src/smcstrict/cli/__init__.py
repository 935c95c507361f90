"""Command language: parser, pretty-printer and driver.

Usage: ``smcstrict <file> [--json] [--depth N] [--seed S]`` (``-`` reads stdin).
"""

from __future__ import annotations

import argparse
import sys

from .parser import parse_expr, parse_program
from .printer import print_program, statement_text
from .run import RunOptions, run_program, run_text
from .syntax import Program

__all__ = ["parse_program", "parse_expr", "print_program", "statement_text", "run_program",
           "run_text", "RunOptions", "Program", "main"]


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(prog="smcstrict", description=__doc__.splitlines()[0])
    ap.add_argument("file", help="program file, or - for standard input")
    ap.add_argument("--json", action="store_true", help="JSON output for normalize and check")
    ap.add_argument("--depth", type=int, help="default depth for suites and strictify-report")
    ap.add_argument("--seed", type=int, help="default seed for randomized suites")
    args = ap.parse_args(argv)
    try:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run_text(text, as_json=args.json, depth=args.depth, seed=args.seed)
