"""
Command line: ``heckekit <command> ...``.

Every command prints a human-readable rendering by default and a stable
JSON document with ``--format json``. Exit status is 0 on success, 2 for bad
arguments or sizes beyond the supported range, 3 when a computed identity
fails.
"""

import argparse
import json
import logging
import sys
from typing import Callable, Dict, List, Optional

from .config import LOG_LEVELS, Settings
from .combinatorics.permutations import Permutation
from .errors import InvalidInput, InvariantViolation, NonDivisible
from .hecke import (
    cells,
    dual_kl_table,
    load_kl_table,
    specht_reports,
    verify_wedderburn,
    warm_kl_tables,
)
from .hecke.wedderburn import wedderburn_table
from .models import JonesResult
from .quantum import (
    TangleWord,
    braid_closure,
    crossing_signs,
    decompose_by_character,
    kauffman_jones,
    parse_braid,
    rt_invariant,
    simple_module,
    tensor,
    verify_casimir_scalar,
)
from .quantum.uqsl2 import character
from .symmetric import verify_block_invariance

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVARIANT = 3

# largest n each command accepts
MAX_N = {"kl": 6, "cells": 6, "specht": 6, "wedderburn": 5, "jm": 5}

# products of all pairs of f_w are only checked up to this n
WEDDERBURN_PRODUCTS_MAX_N = 4

WEDDERBURN_S3_NOTE = "f(s2) = e + s2 - s1 - s1s2 is the element some S3 listings print as a second f(s1)"

# commands that read KL tables; the small ones are built before these run
KL_COMMANDS = {"kl", "cells", "specht", "wedderburn"}


def _bounded(command: str, n: int):
    limit = MAX_N[command]
    if not 1 <= n <= limit:
        raise InvalidInput(f"{command} supports 1 <= n <= {limit}, got {n}")


def _emit(args, document: dict, lines: List[str]):
    if args.format == "json":
        print(json.dumps(document, indent=2))
    else:
        print("\n".join(lines))


def cmd_kl(args, settings: Settings) -> int:
    _bounded("kl", args.n)
    if args.dual:
        rows = dual_kl_table(args.n)
        name = "D"
    else:
        table = load_kl_table(args.n, settings)
        rows = {x: table.kl_elt(x) for x in table.elements}
        name = "KL"
    ordered = sorted(rows, key=Permutation.sort_key)
    document = {
        "n": args.n,
        "basis": "dual" if args.dual else "kl",
        "rows": [{"x": x.fmt(), "word": x.fmt_word(), "terms": rows[x].to_json()} for x in ordered],
    }
    lines = [f"{name}({x.fmt_word()}) = {rows[x].fmt()}" for x in ordered]
    _emit(args, document, lines)
    return EXIT_OK


def cmd_cells(args, settings: Settings) -> int:
    _bounded("cells", args.n)
    partition = cells(args.n, args.kind, load_kl_table(args.n, settings))
    lines = [f"{args.kind} cells of S{args.n}: {len(partition.classes)}"]
    for k in range(len(partition.classes)):
        members = " ".join(w.fmt() for w in partition.members(k))
        lines.append(f"  {partition.label(k)}: {members}")
    _emit(args, partition.to_json(), lines)
    return EXIT_OK


def cmd_specht(args, settings: Settings) -> int:
    _bounded("specht", args.n)
    reports = specht_reports(args.n, args.side, load_kl_table(args.n, settings))
    lines = []
    for r in reports:
        shape = ",".join(str(p) for p in r.shape) if r.shape else "?"
        lines.append(f"shape ({shape}) dim {r.dimension} norm {r.norm} "
                     f"{'irreducible' if r.is_irreducible else 'REDUCIBLE'}")
    _emit(args, {"n": args.n, "side": args.side, "modules": [r.to_dict() for r in reports]}, lines)
    if not all(r.is_irreducible and r.dimension_matches for r in reports):
        return EXIT_INVARIANT
    return EXIT_OK


def cmd_wedderburn(args, settings: Settings) -> int:
    _bounded("wedderburn", args.n)
    table = wedderburn_table(args.n)
    report = verify_wedderburn(args.n, products=args.n <= WEDDERBURN_PRODUCTS_MAX_N)
    lines = [f"f({w.fmt_word()}) = {f.fmt()}" for w, f in table]
    for check in report.checks:
        status = "skipped" if check.skipped else "ok" if check.passed else f"FAILED {check.witness or ''}"
        lines.append(f"  {check.name}: {status}")
    document = {"n": args.n, "basis": [{"w": w.fmt(), "f": f.to_json()} for w, f in table],
                "report": report.to_dict()}
    if args.n == 3:
        lines.append(f"note: {WEDDERBURN_S3_NOTE}")
        document["note"] = WEDDERBURN_S3_NOTE
    _emit(args, document, lines)
    return EXIT_OK if report.passed else EXIT_INVARIANT


def cmd_jm(args, settings: Settings) -> int:
    _bounded("jm", args.n)
    report = verify_block_invariance(args.n, args.p)
    lines = [f"{report.field_name}[S{args.n}]: {len(report.blocks)} blocks, total dimension {report.total_dimension}"]
    for b in report.blocks:
        gamma = " ".join(f"{r}^{c}" for r, c in b.gamma)
        lines.append(f"  [{gamma}] dim {b.dimension}")
    lines.append(f"  invariant under s_i: {report.invariant}")
    _emit(args, report.to_dict(), lines)
    return EXIT_OK if report.invariant else EXIT_INVARIANT


def _tangle(args) -> TangleWord:
    if args.word is not None:
        return TangleWord.parse(args.word)
    if args.strands is None:
        raise InvalidInput("--strands is required with --braid")
    return braid_closure(parse_braid(args.braid or ""), args.strands)


def cmd_jones(args, settings: Settings) -> int:
    word = _tangle(args)
    signs = crossing_signs(word)
    n_plus = sum(1 for s in signs.values() if s > 0)
    n_minus = len(signs) - n_plus
    results = []
    if args.method in ("rt", "both"):
        rt = rt_invariant(word)
        results.append(JonesResult("rt", rt.j_hat.fmt(), rt.j.fmt(), n_plus, n_minus, phi=rt.phi.fmt()))
    if args.method in ("kauffman", "both"):
        kj = kauffman_jones(word)
        results.append(JonesResult("kauffman", kj.j_hat.fmt(), kj.j.fmt(), n_plus, n_minus,
                                   bracket=kj.bracket.fmt()))
    if len({r.j_hat for r in results}) > 1:
        raise InvariantViolation(f"Jones invariants disagree on {word}: "
                                 + ", ".join(f"{r.method} {r.j_hat}" for r in results), witness=str(word))
    lines = [f"word: {word}", f"n+ = {n_plus}, n- = {n_minus}"]
    for r in results:
        extra = f"phi = {r.phi}" if r.phi is not None else f"bracket = {r.bracket}"
        lines.append(f"{r.method}: {extra}; J_hat = {r.j_hat}; J = {r.j}")
    if len(results) > 1:
        lines.append("oracles agree")
    document = {"word": word.to_json(), "results": [r.to_dict() for r in results]}
    if len(results) > 1:
        document["agree"] = True
    _emit(args, document, lines)
    return EXIT_OK


def cmd_uq(args, settings: Settings) -> int:
    modules = [simple_module(n, args.variant) for n in args.n]
    m = modules[0]
    for other in modules[1:]:
        m = tensor(m, other)
    summands = decompose_by_character(m)
    label = " (x) ".join(f"V{n}" + ("^" if args.variant == "hat" else "") for n in args.n)
    document = {
        "modules": args.n,
        "variant": args.variant,
        "dimension": m.dimension,
        "character": {str(k): v for k, v in sorted(character(m).items())},
        "decomposition": [{"n": n, "variant": variant} for n, variant in summands],
    }
    lines = [f"{label}: dimension {m.dimension}",
             "  character: " + " + ".join(f"{v}*v^{k}" for k, v in sorted(character(m).items())),
             "  decomposition: " + " + ".join(f"V{n}" + ("^" if variant == "hat" else "")
                                              for n, variant in summands)]
    if len(modules) == 1:
        casimir = verify_casimir_scalar(m)
        document["casimir"] = casimir.fmt()
        lines.append(f"  casimir: {casimir.fmt()}")
    _emit(args, document, lines)
    return EXIT_OK


COMMANDS: Dict[str, Callable] = {
    "kl": cmd_kl,
    "cells": cmd_cells,
    "specht": cmd_specht,
    "wedderburn": cmd_wedderburn,
    "jm": cmd_jm,
    "jones": cmd_jones,
    "uq": cmd_uq,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heckekit",
                                     description="Exact computations in Hecke algebras, quantum sl2 and S_n.")
    parser.add_argument("--format", choices=["text", "json"], default="text", help="Output format.")
    parser.add_argument("--verbose", action="store_true", help="Log progress at INFO level.")
    parser.add_argument("--log-level", choices=LOG_LEVELS, default=None, help="Logging level.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kl", help="Kazhdan-Lusztig basis of the Hecke algebra of S_n.")
    p.add_argument("n", type=int)
    p.add_argument("--dual", action="store_true", help="Print the dual basis instead.")

    p = sub.add_parser("cells", help="Left, right or two-sided cells of S_n.")
    p.add_argument("n", type=int)
    p.add_argument("--kind", choices=["left", "right", "two-sided"], default="right")

    p = sub.add_parser("specht", help="Cell modules specialized at v = 1.")
    p.add_argument("n", type=int)
    p.add_argument("--side", choices=["left", "right"], default="left")

    sub.add_parser("wedderburn", help="The basis f_w of Q[S_n] and its checks.").add_argument("n", type=int)

    p = sub.add_parser("jm", help="Jucys-Murphy block decomposition of F[S_n].")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int, help="Characteristic: 0 or a prime.")

    p = sub.add_parser("jones", help="Jones polynomial of a braid closure or a closed tangle word.")
    p.add_argument("--braid", default="", help='Signed generators, e.g. "1 1 -2".')
    p.add_argument("--strands", type=int, default=None)
    p.add_argument("--word", default=None, help='A closed word, e.g. "Cup(1) Cap(1)".')
    p.add_argument("--method", choices=["rt", "kauffman", "both"], default="both")

    p = sub.add_parser("uq", help="Tensor products of simple U_v(sl2)-modules.")
    p.add_argument("n", type=int, nargs="+", help="Highest weights of the factors.")
    p.add_argument("--variant", choices=["plain", "hat"], default="plain")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    config = {"verbose": args.verbose} if args.verbose else {}
    if args.log_level:
        config["log_level"] = args.log_level
    settings = Settings.from_dict(config)
    logging.basicConfig(level=settings.logging_level, format="%(asctime)s %(name)s %(levelname)s %(message)s")

    try:
        if args.command in KL_COMMANDS:
            warm_kl_tables(settings)
        return COMMANDS[args.command](args, settings)
    except (InvariantViolation, NonDivisible) as e:
        logger.error("%s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
