"""Command-line front end.

Subcommands:

* ``combined FILE``  - print the combined matrix and the source determinant
* ``reverse FILE``   - print the 180-degree rotation
* ``charpoly FILE``  - monic charpoly, quotient after deflating at 1,
  rational roots, and the Galois tag of the quotient
* ``eigen2 FILE``    - the full closed-form 2x2 report (eigenvalues,
  eigenvectors, P/D/P⁻¹)
* ``sample``         - print a seeded random element of a matrix group
* ``check``          - run property suites and print one report per suite

Matrix files use either the plain text format (header "rows cols", then
rows of rationals) or the JSON object format; the reader sniffs which.
Exit codes: 0 all good, 1 failure (singular input, failing suite), 2
usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .combined import combined
from .errors import (
    DeflationError,
    ParseError,
    SamplingError,
    ShapeError,
    SingularMatrixError,
    UnknownSuiteError,
)
from .harness import (
    DEFAULT_BOUND,
    DEFAULT_TRIALS,
    REGISTRY,
    registry_names,
    run_suite,
)
from .matrices import Matrix
from .rationals import format_rational
from .samplers import GROUPS, SampleSpec, sample
from .spectra import charpoly, combined2_closed_form, deflate_at_one, galois_tag, rational_roots

_DIMS_RE = re.compile(r"^(\d+)(?:\.\.(\d+))?$")


def _read_matrix(path: str) -> Matrix:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror or e}") from None
    if text.lstrip().startswith("{"):
        return Matrix.from_json(text)
    return Matrix.from_text(text)


def _parse_dims(text: str) -> tuple[int, ...]:
    m = _DIMS_RE.match(text.strip())
    if m is None:
        raise argparse.ArgumentTypeError(f"expected 'a..b' or 'n', got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad dimension range {text!r}")
    return tuple(range(lo, hi + 1))


def _render_roots(roots) -> str:
    if not roots:
        return "none"
    return ", ".join(
        format_rational(r) if m == 1 else f"{format_rational(r)} (multiplicity {m})"
        for r, m in roots
    )


def _cmd_combined(args) -> int:
    result = combined(_read_matrix(args.file))
    print(result.render())
    return 0


def _cmd_reverse(args) -> int:
    print(_read_matrix(args.file).reversing().to_text())
    return 0


def _cmd_charpoly(args) -> int:
    m = _read_matrix(args.file)
    p = charpoly(m)
    print(f"charpoly: {p.render()}")
    try:
        quotient = deflate_at_one(p)
    except DeflationError as e:
        print(f"value at 1 is {format_rational(e.value)}, not 0: no deflation")
        print(f"rational roots: {_render_roots(rational_roots(p))}")
        return 0
    print(f"quotient after (λ - 1): {quotient.render()}")
    print(f"rational roots: {_render_roots(rational_roots(p))}")
    print(f"galois tag: {galois_tag(quotient)}")
    return 0


def _cmd_eigen2(args) -> int:
    cf = combined2_closed_form(_read_matrix(args.file))
    print("C(A) =")
    print(cf.combined.to_text())
    print(f"det C(A) = {format_rational(cf.det_combined)}")
    print(f"charpoly: {cf.report.charpoly.render()}")
    print(f"eigenvalues: {_render_roots(cf.report.rational_eigenvalues)}")
    print("eigenvector for 1: (1, 1)ᵀ")
    print(f"eigenvector for {format_rational(cf.det_combined)}: (1, -1)ᵀ")
    print("P =")
    print(cf.p.to_text())
    print("D =")
    print(cf.d.to_text())
    print("P⁻¹ =")
    print(cf.p_inv.to_text())
    return 0


def _cmd_sample(args) -> int:
    spec = SampleSpec(
        group=args.group,
        dim=args.dim,
        seed=args.seed,
        bound=args.bound,
        steps=args.steps,
        det_sign=args.det_sign,
    )
    print(sample(spec).to_text())
    return 0


def _cmd_check(args) -> int:
    if args.suite == "all":
        names = registry_names()
    elif args.suite in REGISTRY:
        names = (args.suite,)
    else:
        raise UnknownSuiteError(args.suite, registry_names())
    reports = [
        run_suite(name, seed=args.seed, trials=args.trials, dims=args.dims, bound=args.bound)
        for name in names
    ]
    if args.json:
        print(json.dumps([r.to_json_obj() for r in reports], indent=2, ensure_ascii=False))
    else:
        for r in reports:
            print(r.render_line())
            if r.counterexample is not None:
                print(json.dumps(r.counterexample, indent=2, ensure_ascii=False))
    return 1 if any(r.verdict == "fail" for r in reports) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="combmat",
        description="Exact combined-matrix construction, spectra, and property checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("combined", help="print C(A) and det A")
    p.add_argument("file", help="matrix file (text or JSON)")
    p.set_defaults(func=_cmd_combined)

    p = sub.add_parser("reverse", help="print the 180-degree rotation of A")
    p.add_argument("file")
    p.set_defaults(func=_cmd_reverse)

    p = sub.add_parser(
        "charpoly", help="print charpoly, deflated quotient, rational roots, galois tag"
    )
    p.add_argument("file")
    p.set_defaults(func=_cmd_charpoly)

    p = sub.add_parser("eigen2", help="full closed-form report for a 2x2 matrix")
    p.add_argument("file")
    p.set_defaults(func=_cmd_eigen2)

    p = sub.add_parser("sample", help="print a seeded random group element")
    p.add_argument("--group", required=True, choices=GROUPS)
    p.add_argument("--dim", required=True, type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--det-sign", type=int, choices=(1, -1), default=1)
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("check", help="run property suites")
    p.add_argument(
        "--suite",
        default="all",
        help=f"suite name or 'all'; suites: {', '.join(registry_names())}",
    )
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--dims", type=_parse_dims, default=(2, 3, 4, 5), metavar="a..b")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--json", action="store_true", help="emit the JSON report array")
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except UnknownSuiteError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SingularMatrixError:
        print("error: singular matrix", file=sys.stderr)
        return 1
    except (ShapeError, DeflationError, SamplingError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
