"""Batch CLI: construction, inspection, and lemma verification.

Exit codes: 0 success / all checks pass, 1 a lemma check failed,
2 parse or input error, 3 size cap exceeded.
"""

import argparse
import sys

from . import dual as dual_mod
from . import ideals as ideals_mod
from . import seconddual as sd_mod
from .dot import emit_lattice_dot, emit_poset_dot, support_label
from .errors import (
    CycleDetectedError,
    DuplicateElementError,
    ParseError,
    TooLargeError,
    UnknownElementError,
)
from .poset import random_poset
from .report import build_verification_report, render
from .textio import build_poset, canonical_text, document_from_poset, parse_poset

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_TOO_LARGE = 3


def _common_flags(parser):
    parser.add_argument(
        "--max-members",
        type=int,
        default=dual_mod.DEFAULT_MAX_MEMBERS,
        help="cap on dual-lattice size (default %(default)s)",
    )
    parser.add_argument("--seed", type=int, default=0, help="random seed")
    parser.add_argument("--dot", metavar="PATH", help="write a DOT diagram here")
    parser.add_argument(
        "--brute-force",
        action="store_true",
        help="also run the exhaustive second-dual enumeration",
    )


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="posetdual",
        description="Finite-poset duality toolkit: dual lattice, ideals, "
        "second dual, and lemma verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for cmd, helptext in [
        ("dual", "enumerate the dual lattice of a poset file"),
        ("irreducibles", "list irreducible members with witnesses"),
        ("primes", "list complementary principal prime pairs"),
        ("second-dual", "build the second dual and report the round trip"),
        ("verify", "run every lemma check on a poset file"),
        ("hasse", "emit the poset's Hasse diagram as DOT"),
    ]:
        p = sub.add_parser(cmd, help=helptext)
        p.add_argument("file", help="poset file")
        _common_flags(p)
        if cmd == "dual":
            p.add_argument(
                "--label-embeddings",
                action="store_true",
                help="annotate DOT nodes that embed base elements",
            )
        if cmd == "verify":
            p.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)

    p = sub.add_parser("random", help="emit a random poset file")
    p.add_argument("n", type=int, help="number of elements")
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--name", default="random")
    p.add_argument("--out", metavar="PATH", help="write here instead of stdout")
    _common_flags(p)

    return parser


def _load(args, out):
    with open(args.file, "r", encoding="ascii") as fh:
        doc = parse_poset(fh.read())
    return doc, build_poset(doc)


def _write_dot(args, text):
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_dual(args, out):
    doc, poset = _load(args, out)
    lattice = dual_mod.enumerate_dual(poset, max_members=args.max_members)
    irr = dual_mod.irreducibles(lattice)
    tree = {
        "poset": {"name": doc.name, "size": poset.n},
        "dual": {
            "members": len(lattice),
            "bottom": support_label(lattice.bottom),
            "top": support_label(lattice.top),
            "meet_irreducibles": len(irr.meet_irreducibles),
            "join_irreducibles": len(irr.join_irreducibles),
        },
    }
    out.write(render(tree))
    _write_dot(
        args,
        emit_lattice_dot(
            lattice, doc.name, label_embeddings=args.label_embeddings
        ),
    )
    return EXIT_OK


def _cmd_irreducibles(args, out):
    doc, poset = _load(args, out)
    lattice = dual_mod.enumerate_dual(poset, max_members=args.max_members)
    irr = dual_mod.irreducibles(lattice)
    tree = {
        "poset": {"name": doc.name, "size": poset.n},
        "meet_irreducibles": {
            support_label(x): p for x, p in irr.lambda_witness.items()
        },
        "join_irreducibles": {
            support_label(x): p for x, p in irr.upsilon_witness.items()
        },
    }
    out.write(render(tree))
    return EXIT_OK


def _cmd_primes(args, out):
    doc, poset = _load(args, out)
    lattice = dual_mod.enumerate_dual(poset, max_members=args.max_members)
    pairs = ideals_mod.prime_principal_pairs(lattice)
    tree = {
        "poset": {"name": doc.name, "size": poset.n},
        "pairs": {
            p: f"ideal_top={support_label(u)} filter_bottom={support_label(v)}"
            for u, v, p in pairs.pairs
        },
        "pair_count": len(pairs.pairs),
    }
    out.write(render(tree))
    return EXIT_OK


def _cmd_second_dual(args, out):
    doc, poset = _load(args, out)
    iso = sd_mod.verify_isomorphism(
        poset, use_bruteforce=args.brute_force
    )
    tree = {
        "poset": {"name": doc.name, "size": poset.n},
        "second_dual": {
            "members": len(iso.forward),
            "round_trip": iso.round_trip_ok,
            "order_embedding": iso.order_preserved_ok,
            "brute_force": iso.brute_force_matched,
            "kernels": {
                p: support_label(h.kernel_top) for p, h in iso.forward.items()
            },
        },
    }
    out.write(render(tree))
    return EXIT_OK if iso.ok else EXIT_CHECK_FAILED


def _cmd_verify(args, out):
    doc, poset = _load(args, out)
    tree, ok = build_verification_report(
        doc.name,
        poset,
        use_bruteforce=args.brute_force,
        max_members=args.max_members,
        corrupt=getattr(args, "corrupt", False),
    )
    out.write(render(tree))
    if args.dot:
        lattice = dual_mod.enumerate_dual(poset, max_members=args.max_members)
        _write_dot(args, emit_lattice_dot(lattice, doc.name, label_embeddings=True))
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_hasse(args, out):
    doc, poset = _load(args, out)
    text = emit_poset_dot(poset, doc.name)
    if args.dot:
        _write_dot(args, text)
    else:
        out.write(text)
    return EXIT_OK


def _cmd_random(args, out):
    poset = random_poset(args.n, args.seed, args.density)
    doc = document_from_poset(poset, args.name)
    text = canonical_text(doc)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


_COMMANDS = {
    "dual": _cmd_dual,
    "irreducibles": _cmd_irreducibles,
    "primes": _cmd_primes,
    "second-dual": _cmd_second_dual,
    "verify": _cmd_verify,
    "hasse": _cmd_hasse,
    "random": _cmd_random,
}


def run_cli(argv=None, out=None, err=None):
    """Run one CLI invocation and return its exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args, out)
    except TooLargeError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_TOO_LARGE
    except (
        ParseError,
        UnknownElementError,
        DuplicateElementError,
        CycleDetectedError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT_ERROR


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
