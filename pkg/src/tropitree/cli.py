"""Command line interface.

Exit codes: 0 success, 1 a mathematical check failed, 2 malformed input,
3 bad parameter.
"""
from __future__ import annotations

import argparse
import json
import sys

from .dissimilarity import m_dissimilarity
from .pipeline import InconsistencyError, random_suite, worked_example
from .pluecker import CONVENTIONS, check_all
from .reconstruct import neighbor_joining
from .serialize import (FormatError, certificate_to_dict, read_vector, vector_to_dict,
                        vector_to_tsv)
from .tree import NewickError, TreeError, parse_newick, to_newick
from .vectors import WeightVector
from .weights import from_metric_tree, weight_vector

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_PARAM = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _read_text(args) -> str:
    if getattr(args, "newick", None):
        return args.newick
    if args.input:
        try:
            with open(args.input) as fh:
                return fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {args.input}: {exc}", EXIT_INPUT)
    return sys.stdin.read()


def _read_tree(args):
    try:
        return parse_newick(_read_text(args).strip())
    except (NewickError, TreeError) as exc:
        raise CliError(f"invalid Newick: {exc}", EXIT_INPUT)


def _write(args, text: str):
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _check_m(m, n):
    if m is None:
        raise CliError("--m is required", EXIT_PARAM)
    if not 2 <= m <= n:
        raise CliError(f"--m must satisfy 2 <= m <= n={n}, got {m}", EXIT_PARAM)


def cmd_dissim(args) -> int:
    tree = _read_tree(args)
    _check_m(args.m, tree.n)
    vec = m_dissimilarity(tree, args.m)
    _write(args, vector_to_tsv(vec) if args.format == "tsv" else _dump(vector_to_dict(vec)))
    return EXIT_OK


def cmd_check(args) -> int:
    text = _read_text(args).strip()
    if text.startswith("{") or "\t" in text:
        try:
            w = read_vector(text, WeightVector)
        except (FormatError, ValueError) as exc:
            raise CliError(f"invalid weight vector: {exc}", EXIT_INPUT)
        if args.m is not None and args.m != w.m:
            raise CliError(f"--m {args.m} does not match the vector's m={w.m}", EXIT_PARAM)
    else:
        try:
            tree = parse_newick(text)
        except (NewickError, TreeError) as exc:
            raise CliError(f"invalid Newick: {exc}", EXIT_INPUT)
        _check_m(args.m, tree.n)
        w = weight_vector(from_metric_tree(tree, args.m))
        if w.entries != m_dissimilarity(tree, args.m).entries:
            raise CliError("tree functional disagrees with hull sums", EXIT_FAILED)
    conventions = CONVENTIONS if args.convention == "both" else (args.convention,)
    certs = [check_all(w, c) for c in conventions]
    if len(certs) == 1:
        report = certificate_to_dict(certs[0])
    else:
        report = {"passed": all(c.passed for c in certs),
                  "certificates": [certificate_to_dict(c) for c in certs]}
    _write(args, _dump(report))
    return EXIT_OK if all(c.passed for c in certs) else EXIT_FAILED


def cmd_paper_example(args) -> int:
    try:
        report = worked_example()
    except InconsistencyError as exc:
        print(f"worked example check failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    _write(args, _dump(report))
    return EXIT_OK


def cmd_random_suite(args) -> int:
    if args.n_max < 3:
        raise CliError("--n-max must be at least 3", EXIT_PARAM)
    if args.m is not None:
        m_values = [args.m]
    else:
        m_values = list(range(2, args.m_max + 1))
    if any(m < 2 for m in m_values):
        raise CliError("m values must be at least 2", EXIT_PARAM)
    report = random_suite(args.seed, args.count, args.n_min, args.n_max, m_values)
    _write(args, _dump(report))
    return EXIT_OK if report["passed"] else EXIT_FAILED


def cmd_reconstruct(args) -> int:
    try:
        d2 = read_vector(_read_text(args))
    except (FormatError, ValueError) as exc:
        raise CliError(f"invalid distance vector: {exc}", EXIT_INPUT)
    if d2.m != 2:
        raise CliError(f"expected a pairwise (m=2) vector, got m={d2.m}", EXIT_INPUT)
    if d2.n < 3:
        raise CliError("reconstruction needs at least 3 leaves", EXIT_INPUT)
    if any(v < 0 for v in d2.values()):
        raise CliError("distances must be nonnegative", EXIT_INPUT)
    rec = neighbor_joining(d2)
    report = {
        "newick": to_newick(rec.tree),
        "residual": str(rec.residual),
        "clamped_edges": rec.clamped,
        "exact": rec.exact,
        "warning": None if rec.exact else "input is not a tree metric; best-effort tree",
    }
    _write(args, _dump(report))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropitree",
        description="Dissimilarity vectors of weighted trees and tropical Plücker checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def io(p, tree_input=True):
        if tree_input:
            p.add_argument("--newick", help="inline Newick string")
        p.add_argument("--input", help="input file (default: stdin)")
        p.add_argument("--output", help="output file (default: stdout)")

    p = sub.add_parser("dissim", help="m-dissimilarity vector of a tree")
    io(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(func=cmd_dissim)

    p = sub.add_parser("check", help="tropical Plücker certificate for a tree or weight vector")
    io(p)
    p.add_argument("--m", type=int)
    p.add_argument("--convention", choices=("min", "max", "both"), default="max")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("paper-example", help="the eight-leaf worked example")
    p.add_argument("--output")
    p.set_defaults(func=cmd_paper_example)

    p = sub.add_parser("random-suite", help="seeded property suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--m", type=int, help="check a single m")
    p.add_argument("--m-max", type=int, default=4)
    p.add_argument("--output")
    p.set_defaults(func=cmd_random_suite)

    p = sub.add_parser("reconstruct", help="tree from a pairwise distance vector")
    io(p, tree_input=False)
    p.set_defaults(func=cmd_reconstruct)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors, which matches the input-error code
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return args.func(args)
    except CliError as exc:
        print(f"tropitree: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
