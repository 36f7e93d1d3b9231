"""
Command-line front end.

Exit codes: 0 for true / equal / conjugate / success, 1 for false / unequal /
distinguished / not closable / relation failure, 2 for bad input, 3 for an
inconclusive conjugacy search.  Words are passed as single quoted arguments.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from .braid import parse_word, random_word, relation_suite, tau_normal_form, word_equal
from .conjugacy import Conjugate, Distinguished, SearchConfig, check_certificate, search_witness
from .markov import (
    NotClosable,
    NotDestabilizable,
    StabKind,
    closure_components,
    closure_invariants,
    destabilize,
    is_closable,
    stabilize,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True)


def _bool(out, value: bool) -> int:
    print("true" if value else "false", file=out)
    return 0 if value else 1


def _cmd_eq(a, out):
    return _bool(out, word_equal(parse_word(a.w1, a.n), parse_word(a.w2, a.n)))


def _cmd_closable(a, out):
    return _bool(out, is_closable(parse_word(a.w, a.n)))


def _cmd_invariants(a, out):
    b = parse_word(a.w, a.n)
    try:
        inv = closure_invariants(b)
    except NotClosable as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    print(_dump(inv.to_dict()), file=out)
    return 0


def _cmd_close(a, out):
    b = parse_word(a.w, a.n)
    ok = is_closable(b)
    print("true" if ok else "false", file=out)
    print(_dump({"n": b.n, "closable": ok, "components": closure_components(b)}), file=out)
    return 0 if ok else 1


def _cmd_conj(a, out):
    cfg = SearchConfig(radius=a.radius, budget=a.budget)
    verdict = search_witness(parse_word(a.w1, a.n), parse_word(a.w2, a.n), cfg)
    print(_dump(verdict.to_dict()), file=out)
    if isinstance(verdict, Conjugate):
        return 0
    return 1 if isinstance(verdict, Distinguished) else 3


def _cmd_certify(a, out):
    b1, b2, g = (parse_word(w, a.n) for w in (a.w1, a.w2, a.g))
    return _bool(out, check_certificate(b1, b2, g))


def _cmd_nf(a, out):
    prefix, rest = tau_normal_form(parse_word(a.w, a.n))
    print(prefix, file=out)
    print(rest, file=out)
    return 0


def _cmd_selftest(a, out):
    ok = True
    for n in range(1, a.max_n + 1):
        report = relation_suite(n)
        failed = report.failures()
        ok &= report.passed
        print(f"n={n} checks={len(report.entries)} failed={len(failed)}", file=out)
        if a.table:
            print(report.to_table(), file=out)
        for e in failed:
            print(f"  FAIL family {e.family}: {e.relation} at {e.indices}", file=out)
    return 0 if ok else 1


def _cmd_random(a, out):
    rng = random.Random(a.seed)
    print(random_word(a.n, a.len, rng), file=out)
    print(f"seed {a.seed}", file=out)
    return 0


def _cmd_stabilize(a, out):
    print(stabilize(parse_word(a.w, a.n), StabKind(a.kind)), file=out)
    return 0


def _cmd_destabilize(a, out):
    try:
        print(destabilize(parse_word(a.w, a.n)), file=out)
    except NotDestabilizable as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="loopbraid", description="Extended loop braid computations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, fn, words, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("-n", type=int, required=True, help="strand count")
        for w in words:
            sp.add_argument(w)
        sp.set_defaults(fn=fn)
        return sp

    cmd("eq", _cmd_eq, ["w1", "w2"], "decide whether two words are equal")
    cmd("invariants", _cmd_invariants, ["w"], "closure invariants of a closable word")
    cmd("close", _cmd_close, ["w"], "components of the closure and their wen parity")
    cmd("closable", _cmd_closable, ["w"], "whether every closed component has even wen count")
    sp = cmd("conj", _cmd_conj, ["w1", "w2"], "search for a conjugating witness")
    sp.add_argument("--radius", type=int, default=3)
    sp.add_argument("--budget", type=int, default=1_000_000)
    cmd("certify", _cmd_certify, ["w1", "w2", "g"], "check that g w1 g^-1 equals w2")
    cmd("nf", _cmd_nf, ["w"], "split a word into a wen prefix and a wen-free word")
    sp = cmd("stabilize", _cmd_stabilize, ["w"], "right stabilization (Markov move M2)")
    sp.add_argument("--kind", choices=[k.value for k in StabKind], default="plus")
    cmd("destabilize", _cmd_destabilize, ["w"], "undo a right stabilization")

    sp = sub.add_parser("selftest", help="check every defining relation through the representation")
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--table", action="store_true", help="print every check")
    sp.set_defaults(fn=_cmd_selftest)

    sp = sub.add_parser("random", help="print a seeded pseudorandom word")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--len", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(fn=_cmd_random)
    return p


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "n", 1) < 1 or getattr(args, "max_n", 1) < 1:
            raise UsageError("strand count must be at least 1")
        return args.fn(args, out)
    except (UsageError, ValueError, IndexError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
