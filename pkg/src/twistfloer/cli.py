"""Batch command-line interface.

Subcommands: homology, twist, certify, verify, examples.  Reports are
line oriented ("degree: module", ascending) unless --format json is
given.  Exit codes are stable:

    0  success
    1  certificate fails verification
    2  parse failure / unknown example name
    3  the input is not a chain complex (d*d != 0)
    4  insufficient precision for a pivot decision
    5  rank mismatch between complex and twisting
    6  monodromy determinant is not 1
    7  fiber pairing is zero
"""

import argparse
import sys
from fractions import Fraction

from . import serialize
from .certify import (OmegaClassSpec, SL2Matrix, build_certificate,
                      verify_certificate)
from .coefficients import DEFAULT_PRECISION, base_change, omega_system
from .complexes import (homology_field, homology_integer, homology_laurent,
                        verify_complex)
from .errors import (FiberPairingZero, FormatError, InsufficientPrecision,
                     RankMismatch, TwistFloerError)
from .models import (s1xs2_omega, s1xs2_universal,
                     trefoil_zero_surgery_module)
from .modules import GradedModule
from .serialize import format_rational

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_NOT_COMPLEX = 3
EXIT_PRECISION = 4
EXIT_RANK = 5
EXIT_DETERMINANT = 6
EXIT_FIBER_PAIRING = 7

EXAMPLE_NAMES = ("s1xs2-universal", "s1xs2-omega", "trefoil-module",
                 "t3-certificate")


def _fail(code: int, message: str) -> int:
    print(message, file=sys.stderr)
    return code


def _render_graded(H: GradedModule) -> list[str]:
    if not H.entries:
        return ["0"]
    lines = []
    for d, m in H.entries:
        if H.ring.kind == "novikov":
            if m == 0:
                desc = "0"
            elif m == 1:
                desc = "Lambda"
            else:
                desc = f"Lambda^{m}"
        else:
            desc = m.describe()
        lines.append(f"degree {format_rational(d)}: {desc}")
    return lines


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return serialize.loads(fh.read())
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _write_text(path: str, text: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_homology(args) -> int:
    try:
        C, _ = serialize.complex_from_json(_read_json(args.input))
    except FormatError as exc:
        return _fail(EXIT_PARSE, f"parse error: {exc}")
    diag = verify_complex(C)
    if not diag:
        return _fail(EXIT_NOT_COMPLEX,
                     "not a chain complex: " + "; ".join(diag.problems))
    try:
        if C.ring.kind == "novikov":
            H = homology_field(C)
        elif C.ring.kind == "laurent":
            H = homology_laurent(C)
        else:
            H = homology_integer(C)
    except InsufficientPrecision as exc:
        return _fail(EXIT_PRECISION, f"insufficient precision: {exc}")
    if args.format == "json":
        print(serialize.dumps(serialize.graded_module_to_json(H)), end="")
    else:
        for line in _render_graded(H):
            print(line)
    return EXIT_OK


def cmd_twist(args) -> int:
    try:
        C, _ = serialize.complex_from_json(_read_json(args.input))
    except FormatError as exc:
        return _fail(EXIT_PARSE, f"parse error: {exc}")
    diag = verify_complex(C)
    if not diag:
        return _fail(EXIT_NOT_COMPLEX,
                     "not a chain complex: " + "; ".join(diag.problems))
    try:
        omega = [Fraction(part) for part in args.omega.split(",")]
    except (ValueError, ZeroDivisionError):
        return _fail(EXIT_PARSE, f"bad --omega value {args.omega!r}")
    if C.ring.kind != "laurent" or len(omega) != C.ring.rank:
        return _fail(EXIT_RANK,
                     f"twisting needs a Laurent complex whose rank matches "
                     f"the {len(omega)} twisting value(s)")
    try:
        twisted = base_change(C, omega_system(omega), args.precision)
        H = homology_field(twisted)
    except RankMismatch as exc:
        return _fail(EXIT_RANK, f"rank mismatch: {exc}")
    except InsufficientPrecision as exc:
        return _fail(EXIT_PRECISION, f"insufficient precision: {exc}")
    if args.out:
        _write_text(args.out,
                    serialize.dumps(serialize.complex_to_json(twisted)))
    if args.format == "json":
        print(serialize.dumps(serialize.graded_module_to_json(H)), end="")
    else:
        for line in _render_graded(H):
            print(line)
    return EXIT_OK


def cmd_certify(args) -> int:
    try:
        parts = [int(x) for x in args.monodromy.split(",")]
        if len(parts) != 4:
            raise ValueError
    except ValueError:
        return _fail(EXIT_PARSE,
                     f"--monodromy needs four integers a,b,c,d, got "
                     f"{args.monodromy!r}")
    try:
        monodromy = SL2Matrix(*parts)
    except ValueError as exc:
        return _fail(EXIT_DETERMINANT, str(exc))
    if args.fiber_pairing == 0:
        return _fail(EXIT_FIBER_PAIRING,
                     "the theorem needs omega(F) != 0; a zero fiber pairing "
                     "certifies nothing")
    cert = build_certificate(monodromy,
                             OmegaClassSpec(args.fiber_pairing),
                             tower_length=args.tower,
                             precision=args.precision)
    text = serialize.dumps(serialize.certificate_to_json(cert))
    if args.out:
        _write_text(args.out, text)
    else:
        print(text, end="")
    print(f"word: {cert.word or '(empty)'}", file=sys.stderr)
    print(cert.conclusion.describe(), file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        cert = serialize.certificate_from_json(_read_json(args.input))
    except FormatError as exc:
        return _fail(EXIT_PARSE, f"parse error: {exc}")
    result = verify_certificate(cert)
    if result:
        print("certificate OK: " + cert.conclusion.describe())
        return EXIT_OK
    for failure in result.failures:
        print(f"FAIL: {failure}", file=sys.stderr)
    return EXIT_VERIFY_FAILED


def cmd_examples(args) -> int:
    name = args.name
    if name not in EXAMPLE_NAMES:
        return _fail(EXIT_PARSE,
                     f"unknown example {name!r}; choose from "
                     f"{', '.join(EXAMPLE_NAMES)}")
    out = args.out or f"{name}.json"
    if name == "s1xs2-universal":
        model = s1xs2_universal()
        doc = serialize.complex_to_json(model.complex, model.provenance)
    elif name == "s1xs2-omega":
        model = s1xs2_omega(args.fiber_pairing or 1)
        doc = serialize.complex_to_json(model.complex, model.provenance)
    elif name == "trefoil-module":
        doc = serialize.graded_module_to_json(
            trefoil_zero_surgery_module(args.tower))
    else:
        cert = build_certificate(SL2Matrix(1, 0, 0, 1), OmegaClassSpec(1),
                                 tower_length=args.tower)
        doc = serialize.certificate_to_json(cert)
    _write_text(out, serialize.dumps(doc))
    print(f"wrote {out}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistfloer",
        description="Exact twisted-coefficient homology computations over "
                    "the universal Novikov field")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", help="graded homology of a complex file")
    p.add_argument("input")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("twist",
                       help="base change a Laurent complex along a twisting "
                            "and compute its Novikov homology")
    p.add_argument("input")
    p.add_argument("--omega", required=True,
                   help="comma-separated rational twisting values, one per "
                        "variable")
    p.add_argument("--precision", type=Fraction,
                   default=DEFAULT_PRECISION)
    p.add_argument("--out", help="write the twisted complex here")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("certify",
                       help="build the torus-bundle certificate")
    p.add_argument("--monodromy", required=True, help="a,b,c,d")
    p.add_argument("--fiber-pairing", dest="fiber_pairing", type=int,
                   required=True)
    p.add_argument("--tower", type=int, default=3)
    p.add_argument("--precision", type=Fraction,
                   default=DEFAULT_PRECISION)
    p.add_argument("--out", help="write the certificate here")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="re-check a certificate file")
    p.add_argument("input")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("examples", help="write a named example to disk")
    p.add_argument("name")
    p.add_argument("--out")
    p.add_argument("--tower", type=int, default=3)
    p.add_argument("--fiber-pairing", dest="fiber_pairing", type=int,
                   default=1)
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        return _fail(EXIT_PARSE, f"parse error: {exc}")
    except FiberPairingZero as exc:
        return _fail(EXIT_FIBER_PAIRING, str(exc))
    except InsufficientPrecision as exc:
        return _fail(EXIT_PRECISION, f"insufficient precision: {exc}")
    except RankMismatch as exc:
        return _fail(EXIT_RANK, f"rank mismatch: {exc}")
    except TwistFloerError as exc:
        return _fail(EXIT_PARSE, str(exc))


if __name__ == "__main__":
    sys.exit(main())
