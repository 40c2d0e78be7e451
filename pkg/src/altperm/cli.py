"""Command-line front end: ``altperm <command> [element] --r R [--n N] ...``.

Exit codes: 0 success, 1 verification failure or a non-alternating element
given to an alternating-only command, 2 usage, parse or parameter errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence, TextIO

from . import canonical as can
from . import covering as cov
from . import oracle
from .core import (
    ColoredPermutation,
    GroupParams,
    col_set,
    csum,
    enumerate_group,
    format_window,
    inv_colored,
    inv_plain,
    parse_window,
    validate_params,
)
from .errors import AltPermError, CapExceeded, InvalidParams, NotAlternating, ParseError, UnknownSuite
from .qseries import STATISTICS, genfun_bruteforce, genfun_formula

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class Output:
    """Collects either text lines or a JSON record, then writes once."""

    def __init__(self, fmt: str, stream: TextIO):
        self.json = fmt == "json"
        self.stream = stream
        self.record: dict = {}
        self.streamed = False

    def line(self, text: str = "") -> None:
        if not self.json:
            print(text, file=self.stream)

    def field(self, key: str, value, text: str | None = None) -> None:
        self.record[key] = value
        if text is not None:
            self.line(text)

    def flush(self) -> None:
        if self.json and not self.streamed:
            print(json.dumps(self.record), file=self.stream)


def _element(args: argparse.Namespace, r: int | None = None) -> ColoredPermutation:
    params_r = args.r if r is None else r
    return parse_window(" ".join(args.element), params_r, args.n)


def _alternating_params(args: argparse.Namespace) -> GroupParams:
    return validate_params(args.r, args.n if args.n is not None else 1, require_alternating=True)


def _grouped_params(args: argparse.Namespace) -> GroupParams:
    if args.n is None:
        raise InvalidParams("--n is required for this command")
    return validate_params(args.r, args.n, require_alternating=True)


# -- commands ---------------------------------------------------------------------

def cmd_stats(args: argparse.Namespace, out: Output) -> int:
    _alternating_params(args)
    pi = _element(args)
    member = can.is_alternating(pi)
    out.field("element", format_window(pi), f"element         {format_window(pi)}  {pi.params}")
    rows = [
        ("z", list(pi.z)),
        ("c", list(pi.c)),
        ("inv_colored", inv_colored(pi)),
        ("inv_plain", inv_plain(pi)),
        ("csum", csum(pi)),
        ("col_set", list(col_set(pi))),
        ("is_alternating", member),
    ]
    if member:
        rows += [
            ("L_A", can.length_LA(pi)),
            ("finv_a", cov.finv_a(pi)),
            ("rtlmin_a", cov.rtlmin_a(pi)),
            ("tinv", cov.tinv(pi)),
            ("fibral_length", cov.fibral_length(pi)),
        ]
    else:
        rows += [(k, None) for k in ("L_A", "finv_a", "rtlmin_a", "tinv", "fibral_length")]
    for key, value in rows:
        shown = "null" if value is None else str(value).lower() if isinstance(value, bool) else str(value)
        out.field(key, value, f"{key:<15} {shown}")
    if not member:
        note = f"not alternating (csum + inv = {csum(pi) + inv_plain(pi)} is odd); A-level fields are null"
        out.field("note", note, f"note            {note}")
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace, out: Output) -> int:
    _alternating_params(args)
    pi = _element(args)
    params = pi.params
    s_word = can.canonical_s_word(pi)
    s_ok = can.eval_s_word(params, s_word) == pi
    out.field("element", format_window(pi), f"element        {format_window(pi)}  {params}")
    out.field("s_word", str(s_word), f"s_word         {s_word or '(empty)'}")
    out.field("s_letters", len(s_word), f"s_letters      {len(s_word)}")
    if not can.is_alternating(pi):
        note = f"not alternating (csum + inv = {csum(pi) + inv_plain(pi)} is odd): no A-word"
        out.field("a_word", None)
        out.field("note", note, f"note           {note}")
        out.field("round_trip", s_ok, f"round trip     eval(s_word) = element: {'yes' if s_ok else 'NO'}")
        return EXIT_FAIL
    a_word = can.canonical_a_word(pi)
    dec = can.structured_decomposition(pi)
    a_ok = can.eval_a_word(params, a_word) == pi and dec.evaluate() == pi
    out.field("a_word", str(a_word), f"a_word         {a_word or '(empty)'}")
    out.field("a_letters", len(a_word), f"a_letters      {len(a_word)}")
    out.field("L_A", can.length_LA(pi), f"L_A            {can.length_LA(pi)}")
    out.field("decomposition", dec.to_dict(), "decomposition")
    for g in dec.gammas:
        out.line(f"  gamma_{g.index:<4} {str(g):<24} {g.branch}, exponent {g.exponent}")
    for o in reversed(dec.orderings):
        out.line(f"  o_{o.index}^-1{'':<3} {str(o.word.inverse()) or '1':<24} from position {o.start}")
    out.field("round_trip", s_ok and a_ok,
              f"round trip     eval(s_word) = eval(a_word) = product of factors = element: "
              f"{'yes' if s_ok and a_ok else 'NO'}")
    return EXIT_OK if s_ok and a_ok else EXIT_FAIL


def _soft_member(pi: ColoredPermutation, out: Output) -> bool:
    if can.is_alternating(pi):
        return True
    note = f"not alternating (csum + inv = {csum(pi) + inv_plain(pi)} is odd)"
    out.field("error", note, f"error: {note}")
    return False


def cmd_project(args: argparse.Namespace, out: Output) -> int:
    _alternating_params(args)
    pi = _element(args)
    if not _soft_member(pi, out):
        return EXIT_FAIL
    image = cov.project(pi)
    out.field("element", format_window(pi))
    out.field("image", format_window(image), format_window(image))
    out.field("image_r", image.r)
    return EXIT_OK


def cmd_section(args: argparse.Namespace, out: Output) -> int:
    params = _alternating_params(args)
    sigma = _element(args, r=params.half)
    lift = cov.section(sigma)
    out.field("element", format_window(sigma))
    out.field("section", format_window(lift), format_window(lift))
    out.field("section_r", lift.r)
    return EXIT_OK


def cmd_fiber(args: argparse.Namespace, out: Output) -> int:
    _alternating_params(args)
    if args.element:
        pi = _element(args)
    else:
        pi = ColoredPermutation.identity(_grouped_params(args))
    if not _soft_member(pi, out):
        return EXIT_FAIL
    rep = cov.fiber_report(pi)
    out.record.update(rep.to_dict())
    out.line(f"fiber over {format_window(rep.base)} in G{pi.params.halved()}")
    for m, ell in rep.members:
        out.line(f"  {format_window(m):<24} l_F = {ell}")
    out.line(f"formula      {rep.formula_poly}")
    out.line(f"brute force  {rep.bruteforce_poly}")
    out.line("MATCH" if rep.formula_matches else "MISMATCH")
    return EXIT_OK if rep.formula_matches else EXIT_FAIL


def cmd_genfun(args: argparse.Namespace, out: Output) -> int:
    params = _grouped_params(args)
    if params.order > args.cap:
        raise CapExceeded(f"|G{params}| = {params.order} exceeds the cap {args.cap}")
    formula = genfun_formula(params, args.stat)
    brute = genfun_bruteforce(params, args.stat)
    diff = formula.first_difference(brute)
    out.field("statistic", args.stat)
    out.field("r", params.r)
    out.field("n", params.n)
    out.field("formula", list(formula.coefficients), f"formula      {formula}")
    out.field("bruteforce", list(brute.coefficients), f"brute force  {brute}")
    out.field("match", diff is None)
    out.field("first_difference", diff)
    if diff is None:
        out.line("MATCH")
        return EXIT_OK
    coeff = lambda p: p.coefficients[diff] if diff < len(p.coefficients) else 0  # noqa: E731
    out.line(f"MISMATCH at q^{diff}: {coeff(formula)} vs {coeff(brute)}")
    return EXIT_FAIL


def cmd_verify(args: argparse.Namespace, out: Output) -> int:
    params = _grouped_params(args)
    selection = args.suite or ["all"]
    report = oracle.run_suite(params, selection, cap=args.cap)
    out.record.update(report.to_dict())
    out.line(report.render())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_enumerate(args: argparse.Namespace, out: Output) -> int:
    if args.n is None:
        raise InvalidParams("--n is required for this command")
    params = validate_params(args.r, args.n, require_alternating=args.group == "a")
    if params.order > args.cap:
        raise CapExceeded(f"|G{params}| = {params.order} exceeds the cap {args.cap}")
    items = can.enumerate_alternating(params) if args.group == "a" else enumerate_group(params)
    out.streamed = True
    count = 0
    for pi in items:
        count += 1
        if out.json:
            print(json.dumps({"element": format_window(pi), "digits": list(pi.digits), "colors": list(pi.colors)}),
                  file=out.stream)
        else:
            print(format_window(pi), file=out.stream)
    if not out.json:
        print(f"# {count} elements", file=out.stream)
    return EXIT_OK


COMMANDS: dict[str, tuple[Callable[[argparse.Namespace, Output], int], str]] = {
    "stats": (cmd_stats, "statistics of an element"),
    "decompose": (cmd_decompose, "canonical S-word, A-word and factorization"),
    "project": (cmd_project, "image under the covering map to G(r/2, n)"),
    "section": (cmd_section, "lift an element of G(r/2, n) to its coset representative"),
    "fiber": (cmd_fiber, "fiber of an element with fibral lengths"),
    "genfun": (cmd_genfun, "closed-form and brute-force generating functions"),
    "verify": (cmd_verify, "run exhaustive verification suites"),
    "enumerate": (cmd_enumerate, "list every element in rank order"),
}

_ELEMENT_COMMANDS = {"stats", "decompose", "project", "section", "fiber"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="altperm", description="Alternating colored permutation groups A(r, n).")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        if name in _ELEMENT_COMMANDS:
            p.add_argument("element", nargs="*" if name == "fiber" else "+",
                           help='window text, e.g. "1 2^2 4 5^1 3^3"')
        p.add_argument("--r", type=int, required=True, help="number of colors (r = 2 mod 4 for A(r, n))")
        p.add_argument("--n", type=int, default=None, help="rank; inferred from the element when omitted")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP, help="largest group order to enumerate")
        if name == "genfun":
            p.add_argument("--stat", choices=STATISTICS, default="length")
        if name == "verify":
            p.add_argument("--suite", action="append", help="presentation, order, decomposition, covering, genfun or all")
        if name == "enumerate":
            p.add_argument("--group", choices=("a", "g"), default="a")
    return parser


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "suite", None):
        args.suite = [s.strip() for item in args.suite for s in item.split(",") if s.strip()]
    out = Output(args.format, stdout)
    handler = COMMANDS[args.command][0]
    try:
        code = handler(args, out)
    except (ParseError, InvalidParams, UnknownSuite, CapExceeded) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except NotAlternating as exc:
        out.flush()
        print(f"error: {exc}", file=stderr)
        return EXIT_FAIL
    except AltPermError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
