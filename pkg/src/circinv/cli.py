"""Command-line interface.

Exit codes: 0 success, 1 input or validation error, 2 internal consistency
failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import lift, oracle, phylo
from .perm import (
    CircularArrangement,
    InvalidArrangement,
    apply_word,
    is_sorted_circular,
    parse_window,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2


class InputError(Exception):
    pass


def read_genome_file(path: str | Path) -> list[tuple[str, CircularArrangement]]:
    """Lines of ``NAME<TAB>p1,p2,...,pn``; ``#`` comments and blank lines skipped."""
    records: list[tuple[str, CircularArrangement]] = []
    text = Path(path).read_text()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = raw.rstrip("\n").split("\t")
        if len(parts) != 2 or not parts[0].strip():
            raise InputError(f"{path}:{lineno}: expected NAME<TAB>WINDOW")
        name, window = parts[0].strip(), parts[1]
        try:
            records.append((name, parse_window(window)))
        except InvalidArrangement as exc:
            raise InputError(f"{path}:{lineno}: {exc}") from None
    names = [name for name, _ in records]
    if len(set(names)) != len(names):
        raise InputError(f"{path}: duplicate genome names")
    sizes = {g.n for _, g in records}
    if len(sizes) > 1:
        raise InputError(f"{path}: genomes have different region counts {sorted(sizes)}")
    if len(records) < 3:
        raise InputError(f"{path}: need at least 3 genomes, got {len(records)}")
    return records


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_dist(args: argparse.Namespace) -> int:
    if args.perm is not None:
        if args.a is not None or args.b is not None:
            raise InputError("use either --perm or --a/--b")
        target = parse_window(args.perm)
    else:
        if args.a is None or args.b is None:
            raise InputError("need --perm, or both --a and --b")
        target = lift.relative_arrangement(parse_window(args.a), parse_window(args.b))
    witness = lift.circular_length_witness(target)
    print(witness.length)
    if args.witness:
        print(f"frame: rotation={witness.frame.rotation} flipped={str(witness.frame.flipped).lower()}")
        print(f"lift: {witness.lifted}")
    return EXIT_OK


def _verified(a: CircularArrangement, word, length: int) -> bool:
    return len(word) == length and is_sorted_circular(apply_word(a, word))


def cmd_sort(args: argparse.Namespace) -> int:
    a = parse_window(args.perm)
    length = lift.circular_length(a)
    if args.all:
        words = lift.enumerate_geodesics(a, args.limit)
    else:
        try:
            words = [lift.sort_by_uncrossings(a)]
        except RuntimeError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INTERNAL
    for word in words:
        if not _verified(a, word, length):
            print(f"error: word {word} failed verification", file=sys.stderr)
            return EXIT_INTERNAL
    for word in words:
        print(" ".join(map(str, word)))
    return EXIT_OK


def cmd_matrix(args: argparse.Namespace) -> int:
    genomes = read_genome_file(args.genomes)
    matrix = phylo.build_matrix(genomes)
    _emit(phylo.write_phylip(matrix), args.out)
    return EXIT_OK


def cmd_nj(args: argparse.Namespace) -> int:
    if args.fixture:
        if args.matrix:
            raise InputError("give a matrix file or --fixture, not both")
        matrix = phylo.yersinia_fixture()
    elif args.matrix:
        matrix = phylo.read_phylip(Path(args.matrix).read_text())
    else:
        raise InputError("need a matrix file or --fixture yersinia")
    tree = phylo.neighbor_joining(matrix)
    _emit(phylo.write_newick(tree) + "\n", args.out)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    n = args.n
    if n < 3:
        raise InputError(f"n must be at least 3, got {n}")
    if args.samples is None and n > oracle.MAX_TABLE_N:
        raise InputError(f"n={n} needs --samples (exhaustive check limited to n <= {oracle.MAX_TABLE_N})")
    if n > oracle.MAX_BFS_N:
        raise InputError(f"n={n} exceeds the oracle limit of {oracle.MAX_BFS_N}")
    report = oracle.check_equivalence(n, args.samples, seed=args.seed)
    print(f"n: {n}")
    print(f"checked: {report.checked}")
    print(f"mismatches: {len(report.mismatches)}")
    for window, got, expected in report.mismatches:
        print(f"mismatch {','.join(map(str, window))} lift={got} bfs={expected}", file=sys.stderr)
    print("histogram:")
    for d, c in report.histogram.items():
        print(f"{d} {c}")
    return EXIT_OK if report.ok else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circinv",
        description="Circular two-region inversion distances, geodesics and phylogenies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="circular two-inversion length")
    p.add_argument("--perm", help="arrangement, e.g. 1,6,3,8,5,2,7,4")
    p.add_argument("--a", help="first genome (with --b)")
    p.add_argument("--b", help="second genome (with --a)")
    p.add_argument("--witness", action="store_true", help="also print frame and lift")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("sort", help="geodesic sorting word(s)")
    p.add_argument("--perm", required=True)
    p.add_argument("--all", action="store_true", help="enumerate several geodesics")
    p.add_argument("--limit", type=int, default=10)
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("matrix", help="PHYLIP distance matrix from a genome file")
    p.add_argument("genomes")
    p.add_argument("--out")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("nj", help="neighbour-joining tree as Newick")
    p.add_argument("matrix", nargs="?")
    p.add_argument("--fixture", choices=["yersinia"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_nj)

    p = sub.add_parser("oracle", help="check lengths against breadth-first search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; that code is reserved here
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    if getattr(args, "limit", None) is not None and args.limit < 1:
        print("error: --limit must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, InvalidArrangement, phylo.PhyloFormatError, oracle.OracleLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
