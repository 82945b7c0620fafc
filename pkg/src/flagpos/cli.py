"""Command-line front end.

Exit codes: 0 success, 1 parse or validation error, 2 internal invariant
violation (a bug).
"""

from __future__ import annotations

import argparse
import re
import sys

from .curvecalc import (
    is_ample_hartshorne,
    lemma1_equivalence_check,
    min_line_quotient_degree,
    parse_splitting_type,
    pullback,
)
from .errors import InvalidInputError, InvariantViolation, SpecParseError
from .flagbundle import classify, restrict_to_curve
from .report import render_human, render_machine, render_roots
from .rootsys import SimpleType, positive_roots
from .specio import parse_record

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _read_records(args):
    """Yield (bundle or SpecParseError) in input order."""
    if args.inline:
        for text in args.inline:
            try:
                yield parse_record(text)
            except SpecParseError as exc:
                yield exc
        return
    if args.path is None:
        raise InvalidInputError("give a spec file path or --inline SPEC")
    if args.path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InvalidInputError(f"cannot read {args.path}: {exc.strerror}") from None
    for n, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        try:
            yield parse_record(s, n)
        except SpecParseError as exc:
            yield exc


def cmd_classify(args, out) -> int:
    status = EXIT_OK
    render = render_machine if args.format == "machine" else render_human
    first = True
    for item in _read_records(args):
        if isinstance(item, SpecParseError):
            print(f"error: {item}", file=sys.stderr)
            status = EXIT_INPUT
            continue
        if not first and args.format == "human":
            out.write("\n")
        out.write(render(item, classify(item)) + "\n")
        first = False
    return status


def cmd_roots(args, out) -> int:
    rs = positive_roots(SimpleType.parse(args.type))
    out.write(render_roots(rs, args.format) + "\n")
    return EXIT_OK


def cmd_restrict(args, out) -> int:
    status = EXIT_OK
    for item in _read_records(args):
        if isinstance(item, SpecParseError):
            print(f"error: {item}", file=sys.stderr)
            status = EXIT_INPUT
            continue
        out.write(f"{restrict_to_curve(item, args.j)}\n")
    return status


_KV_RE = re.compile(r"^(?:d|dmax)?=?(\d+)$")


def _int_arg(text):
    m = _KV_RE.match(text.strip())
    if not m:
        raise InvalidInputError(f"expected a positive integer (or d=K), got {text!r}")
    return int(m.group(1))


def cmd_curve(args, out) -> int:
    E = parse_splitting_type(args.splitting)
    if args.op == "pullback":
        d = args.degree if args.degree is not None else _int_arg(args.cover or "1")
        out.write(f"{pullback(E, d)}\n")
    elif args.op == "ample":
        out.write(f"{str(is_ample_hartshorne(E)).lower()}\n")
        if args.verbose:
            out.write(f"min quotient degree: {min_line_quotient_degree(E)}\n")
    else:
        dmax = args.dmax if args.dmax is not None else _int_arg(args.cover or "5")
        out.write(f"consistent: {str(lemma1_equivalence_check(E, dmax)).lower()}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="flagpos", description="Positivity of homogeneous bundles on G/P.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    fmt = dict(choices=("human", "machine"), default="human")

    c = sub.add_parser("classify", help="classify bundles from a spec file or --inline specs")
    c.add_argument("path", nargs="?", help="spec file, or - for stdin")
    c.add_argument("--inline", action="append", metavar="SPEC")
    c.add_argument("--format", **fmt)
    c.set_defaults(func=cmd_classify)

    r = sub.add_parser("roots", help="list the positive roots of a simple type")
    r.add_argument("type", help="e.g. A2, G2, e8")
    r.add_argument("--format", **fmt)
    r.set_defaults(func=cmd_roots)

    s = sub.add_parser("restrict", help="splitting type on the test curve C(alpha_j)")
    s.add_argument("path", nargs="?")
    s.add_argument("--inline", action="append", metavar="SPEC")
    s.add_argument("-j", "--j", type=int, required=True, help="1-based simple root index")
    s.set_defaults(func=cmd_restrict)

    cv = sub.add_parser("curve", help="split bundles on a rational curve")
    csub = cv.add_subparsers(dest="op", required=True, parser_class=_Parser)
    pb = csub.add_parser("pullback", help="pull back along a degree-d cover")
    pb.add_argument("splitting", help="e.g. (1,2)")
    pb.add_argument("cover", nargs="?", help="cover degree, as K or d=K")
    pb.add_argument("-d", "--degree", type=int)
    am = csub.add_parser("ample", help="ampleness on the curve")
    am.add_argument("splitting")
    am.add_argument("-v", "--verbose", action="store_true")
    lm = csub.add_parser("lemma1", help="check ampleness against quotients of pullbacks")
    lm.add_argument("splitting")
    lm.add_argument("cover", nargs="?", help="largest cover degree, as K or dmax=K")
    lm.add_argument("--dmax", type=int)
    cv.set_defaults(func=cmd_curve)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
