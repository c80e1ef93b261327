"""Command-line front end.

Input files look like::

    # genus 3, completely degenerate spectrum
    N = 4
    A = [[1, 1, 1, 1]]

Exit codes: 0 success or inconclusive, 1 input error, 2 verification
failure, 3 group-size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import oracle
from .errors import AbelCoverError, SizeCapError, ValidationError
from .flat import genus, holonomy_cover, ramification_orders, stratum
from .hodge import eigen_table, spectrum
from .modspan import DEFAULT_CAP
from .origami import build_model, export
from .presentation import Presentation, covers, degree, isomorphic, validate

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_CAP = 0, 1, 2, 3


class ParseError(AbelCoverError, ValueError):
    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


@dataclass(frozen=True)
class PresentationFile:
    path: str
    N: int
    rows: tuple[tuple[int, ...], ...]

    def presentation(self) -> Presentation:
        return validate(self.N, self.rows)


_TOKEN = re.compile(r"\s*(?:(?P<int>[+-]?\d+)|(?P<name>[A-Za-z_]\w*)|(?P<punct>[=\[\],]))")


def _tokenize(text: str):
    """Yield (kind, value, line, column) tokens; '#' comments run to end of line."""
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        pos = 0
        while pos < len(line):
            if line[pos:].strip() == "":
                break
            m = _TOKEN.match(line, pos)
            if m is None or m.end() == pos:
                col = pos + len(line[pos:]) - len(line[pos:].lstrip()) + 1
                raise ParseError(f"unexpected character {line[col - 1]!r}", lineno, col)
            kind = m.lastgroup
            col = m.start(kind) + 1
            yield kind, m.group(kind), lineno, col
            pos = m.end()
    yield "eof", "", len(text.splitlines()) + 1, 1


class _Parser:
    def __init__(self, text):
        self.tokens = list(_tokenize(text))
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind, value=None, what=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            found = "end of file" if tok[0] == "eof" else repr(tok[1])
            raise ParseError(f"expected {what or value or kind}, found {found}", tok[2], tok[3])
        self.i += 1
        return tok

    def integer(self):
        return int(self.take("int", what="an integer")[1])

    def row(self):
        start = self.take("punct", "[", "'[' opening a row")
        entries = [self.integer()]
        while self.peek()[1] == ",":
            self.i += 1
            entries.append(self.integer())
        self.take("punct", "]", "']' closing a row")
        if len(entries) != 4:
            raise ParseError(f"row has {len(entries)} entries, expected 4", start[2], start[3])
        return tuple(entries)

    def matrix(self):
        self.take("punct", "[", "'[' opening the matrix")
        rows = [self.row()]
        while self.peek()[1] == ",":
            self.i += 1
            if self.peek()[1] == "]":
                break
            rows.append(self.row())
        self.take("punct", "]", "']' closing the matrix")
        return tuple(rows)

    def parse(self):
        values = {}
        while self.peek()[0] != "eof":
            name = self.take("name", what="'N' or 'A'")
            if name[1] not in ("N", "A"):
                raise ParseError(f"unknown key {name[1]!r}", name[2], name[3])
            if name[1] in values:
                raise ParseError(f"key {name[1]!r} given twice", name[2], name[3])
            self.take("punct", "=", "'='")
            values[name[1]] = self.integer() if name[1] == "N" else self.matrix()
        eof = self.peek()
        for key in ("N", "A"):
            if key not in values:
                raise ParseError(f"missing key {key!r}", eof[2], eof[3])
        return values["N"], values["A"]


def parse_presentation_text(text: str, path: str = "<string>") -> PresentationFile:
    N, rows = _Parser(text).parse()
    return PresentationFile(path, N, rows)


def read_presentation_file(path: str) -> PresentationFile:
    raw = Path(path).read_bytes().decode("utf-8")
    return parse_presentation_text(raw, path)


# -- report building ----------------------------------------------------------

def rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def _presentation_dict(P: Presentation) -> dict:
    return {"N": P.N, "A": [list(row) for row in P.A]}


def eigen_dict(rec) -> dict:
    return {
        "r": list(rec.r.entries),
        "t_r": rational(rec.t_of_r),
        "t_minus_r": rational(rec.t_of_minus_r),
        "dim_h10": rec.dim_h10,
        "dim_h1": rec.dim_h1,
        "eligible": rec.eligible,
        "hgde": [rational(x) for x in rec.hgde] if rec.hgde else None,
        "angles": [rational(x) for x in rec.angles] if rec.angles else None,
        "exponent": rational(rec.exponent) if rec.exponent is not None else None,
    }


def verification_dict(rep: oracle.VerificationReport) -> dict:
    return {
        "r": list(rep.r),
        "status": rep.status,
        "checks": [
            {
                "name": c.name,
                "status": c.status,
                "observed": c.observed,
                "expected": c.expected,
                "tolerance": c.tolerance,
                "reason": c.reason,
                "samples": [[complex(s).real, complex(s).imag] for s in c.samples],
            }
            for c in rep.checks
        ],
    }


def build_report(P: Presentation, cap: int = DEFAULT_CAP, verification=None) -> dict:
    st = stratum(P, cap)
    report = {
        "presentation": _presentation_dict(P),
        "degree": degree(P, cap),
        "genus": genus(P, cap),
        "ramification": list(ramification_orders(P)),
        "stratum": {
            "angles": [
                {"branch_point": bp.index, "cone_angle_over_pi": bp.ramification,
                 "count": bp.point_count, "qd_order": bp.qd_order}
                for bp in st.branch_points
            ],
            "marked_points": st.marked_points,
            "trivial_holonomy": st.trivial_holonomy,
            "abelian_zero_orders": list(st.abelian_zero_orders) if st.abelian_zero_orders else None,
            "holonomy_cover": _presentation_dict(holonomy_cover(P)),
        },
        "eigenspaces": [eigen_dict(rec) for rec in eigen_table(P, cap)],
        "spectrum": [rational(x) for x in spectrum(P, cap)],
    }
    if verification is not None:
        report["verification"] = {
            "status": _overall(verification),
            "eigenspaces": [verification_dict(rep) for rep in verification],
        }
    return report


def _overall(reports) -> str:
    statuses = [rep.status for rep in reports]
    if "fail" in statuses:
        return "fail"
    if "pass" in statuses:
        return "pass"
    return "inconclusive"


def _fmt_exp(x: Fraction) -> str:
    return f"{rational(x)} ({float(x):.6f})"


def _fmt_rows(rows) -> str:
    return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in rows) + "]"


def format_report(report: dict) -> str:
    P = report["presentation"]
    st = report["stratum"]
    hol = st["holonomy_cover"]
    lines = [
        f"presentation: N = {P['N']}, A = {_fmt_rows(P['A'])}",
        f"degree: {report['degree']}",
        f"genus: {report['genus']}",
        "ramification: " + ", ".join(str(m) for m in report["ramification"]),
        "stratum:",
    ]
    for a in st["angles"]:
        lines.append(
            f"  z_{a['branch_point']}: {a['count']} point(s) of cone angle "
            f"{a['cone_angle_over_pi']}*pi (order {a['qd_order']})"
        )
    lines.append(f"  marked points: {st['marked_points']}")
    lines.append(f"trivial holonomy: {'yes' if st['trivial_holonomy'] else 'no'}")
    if st["abelian_zero_orders"] is not None:
        lines.append("  abelian zero orders: " + ", ".join(str(k) for k in st["abelian_zero_orders"]))
    lines.append(f"holonomy cover: N = {hol['N']}, A = {_fmt_rows(hol['A'])}")
    lines.append("eigenspaces:")
    for e in report["eigenspaces"]:
        text = (f"  r = ({','.join(str(x) for x in e['r'])}): t(r) = {e['t_r']}, "
                f"t(-r) = {e['t_minus_r']}, dim H10 = {e['dim_h10']}, dim H1 = {e['dim_h1']}")
        if e["eligible"]:
            text += (f", (a,b,c) = ({', '.join(e['hgde'])}), angles = ({', '.join(e['angles'])}), "
                     f"exponent = {_fmt_exp(Fraction(e['exponent']))}")
        lines.append(text)
    lines.append("spectrum: " + format_spectrum(report["spectrum"], floats=True))
    return "\n".join(lines) + "\n"


def format_spectrum(entries, floats=False) -> str:
    if not entries:
        return "(empty)"
    if floats:
        return ", ".join(_fmt_exp(Fraction(x)) for x in entries)
    return ", ".join(entries)


def relation(P: Presentation, Q: Presentation, cap: int = DEFAULT_CAP) -> str:
    if isomorphic(P, Q, cap):
        return "isomorphic"
    if covers(P, Q, cap):
        return "covers"
    if covers(Q, P, cap):
        return "covered-by"
    return "incomparable"


def run_verification(P: Presentation, cap: int, tol_angle: float, tol_residual: float):
    return [
        oracle.verify_eigenspace(rec, tol_angle=tol_angle, tol_residual=tol_residual)
        for rec in eigen_table(P, cap)
        if rec.eligible
    ]


def format_verification(reports) -> str:
    lines = []
    for rep in reports:
        lines.append(f"r = ({','.join(str(x) for x in rep.r)}): {rep.status}")
        for c in rep.checks:
            if c.status == "skipped":
                lines.append(f"  {c.name}: skipped ({c.reason})")
            elif c.expected is not None:
                lines.append(f"  {c.name}: {c.status} (measured {c.observed:.6f}, "
                             f"exact {c.expected:.6f}, tol {c.tolerance:g})")
            elif c.observed is not None:
                lines.append(f"  {c.name}: {c.status} ({c.observed:.3e} < {c.tolerance:g})")
            else:
                lines.append(f"  {c.name}: {c.status} ({c.reason})")
    overall = _overall(reports)
    if not reports:
        lines.append("no eligible eigenspaces")
    lines.append(f"overall: {overall}")
    return "\n".join(lines) + "\n"


# -- commands -----------------------------------------------------------------

def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def cmd_analyze(args) -> int:
    P = read_presentation_file(args.file).presentation()
    report = build_report(P, args.cap)
    sys.stdout.write(_dump(report) if args.json else format_report(report))
    return EXIT_OK


def cmd_spectrum(args) -> int:
    P = read_presentation_file(args.file).presentation()
    entries = [rational(x) for x in spectrum(P, args.cap)]
    if args.json:
        sys.stdout.write(_dump({"genus": genus(P, args.cap), "spectrum": entries}))
    else:
        sys.stdout.write(format_spectrum(entries) + "\n")
    return EXIT_OK


def cmd_covers(args) -> int:
    P = read_presentation_file(args.file_p).presentation()
    Q = read_presentation_file(args.file_q).presentation()
    rel = relation(P, Q, args.cap)
    sys.stdout.write(_dump({"relation": rel}) if args.json else rel + "\n")
    return EXIT_OK


def cmd_origami(args) -> int:
    P = read_presentation_file(args.file).presentation()
    sys.stdout.write(export(build_model(P, args.cap), args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    P = read_presentation_file(args.file).presentation()
    reports = run_verification(P, args.cap, args.tol_angle, args.tol_residual)
    if args.json:
        sys.stdout.write(_dump({
            "status": _overall(reports),
            "eigenspaces": [verification_dict(rep) for rep in reports],
        }))
    else:
        sys.stdout.write(format_verification(reports))
    return EXIT_VERIFY if _overall(reports) == "fail" else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abelcover",
        description="Invariants and Lyapunov spectra of abelian square-tiled surfaces.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="maximum subgroup size before giving up (default: %(default)s)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full report")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("spectrum", parents=[common], help="Lyapunov spectrum only")
    p.add_argument("file")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("covers", parents=[common], help="compare two covers")
    p.add_argument("file_p")
    p.add_argument("file_q")
    p.set_defaults(func=cmd_covers)

    p = sub.add_parser("origami", parents=[common], help="square-tiled model")
    p.add_argument("file")
    p.add_argument("--format", choices=["edge-list", "json"], default="edge-list")
    p.set_defaults(func=cmd_origami)

    p = sub.add_parser("verify", parents=[common], help="numerical check of triangle angles")
    p.add_argument("file")
    p.add_argument("--tol-angle", type=float, default=oracle.TOL_ANGLE)
    p.add_argument("--tol-residual", type=float, default=oracle.TOL_RESIDUAL)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, ValidationError) as exc:
        print(f"error: {args_file(args)}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, UnicodeDecodeError, AbelCoverError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def args_file(args) -> str:
    return getattr(args, "file", None) or f"{args.file_p} / {args.file_q}"


if __name__ == "__main__":
    sys.exit(main())
