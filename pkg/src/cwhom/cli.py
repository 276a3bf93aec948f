"""Command-line interface.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 semantic failure (invalid input object, failed check, undefined
degree), 2 malformed document, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .abgroups import FgAbGroup, GroupSyntaxError, parse_group
from .chainmaps import NotASphereModel, degree, mapping_cone, require_valid_map, validate_map
from .complexes import (
    InvalidComplex,
    ZOO_NAMES,
    euler_characteristic,
    quotient_by_skeleton,
    require_valid,
    suspension,
    validate,
    wedge,
    zoo,
)
from .documents import SchemaError, complex_to_doc, dumps, loads_complex, loads_map
from .homology import chain_group
from .verify import (
    SUITES,
    check_les_exactness,
    check_skeletal_reformulation,
    check_suspension,
    run_battery,
)

__all__ = ["main"]

USAGE_EXIT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        print(f"cannot read {path}: {e.strerror}", file=sys.stderr)
        raise SystemExit(2)


def _load_complex(path: str):
    return loads_complex(_read(path), validate=False)


def _load_map(path: str):
    return loads_map(_read(path), validate=False)


def _coeff(text: str) -> FgAbGroup:
    try:
        return parse_group(text)
    except GroupSyntaxError as e:
        raise argparse.ArgumentTypeError(str(e))


def _emit(doc: dict, out: str | None = None):
    text = dumps(doc)
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")
    if not sep or b < a:
        raise argparse.ArgumentTypeError(f"expected a..b with a <= b, got {text!r}")
    return range(a, b + 1)


def _cmd_validate(args) -> int:
    text = _read(args.file)
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        print(f"$: not valid JSON ({e.msg} at line {e.lineno})", file=sys.stderr)
        return 2
    if isinstance(raw, dict) and "maps" in raw:
        violations = validate_map(loads_map(text, validate=False))
        label = "chain map"
    else:
        violations = validate(loads_complex(text, validate=False))
        label = "complex"
    if violations:
        for v in violations:
            print(v, file=sys.stderr)
        return 1
    print(f"valid {label}")
    return 0


def _cmd_homology(args) -> int:
    x = require_valid(_load_complex(args.file))
    variant = "cohomology" if args.cohomology else "homology"
    sym = "H^" if args.cohomology else "H_"
    dims = [args.dim] if args.dim is not None else list(range(x.dim + 1))
    for n in dims:
        g = chain_group(x, n, args.coeff, variant, args.reduced).group
        print(f"{sym}{n} = {g}")
    return 0


def _cmd_euler(args) -> int:
    x = require_valid(_load_complex(args.file))
    print(euler_characteristic(x))
    return 0


def _cmd_susp(args) -> int:
    _emit(complex_to_doc(suspension(require_valid(_load_complex(args.file)))), args.output)
    return 0


def _cmd_wedge(args) -> int:
    xs = [require_valid(_load_complex(p)) for p in args.files]
    _emit(complex_to_doc(wedge(xs)), args.output)
    return 0


def _cmd_quotient(args) -> int:
    x = require_valid(_load_complex(args.file))
    try:
        _emit(complex_to_doc(quotient_by_skeleton(x, args.below)), args.output)
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return 1
    return 0


def _cmd_cone(args) -> int:
    f = require_valid_map(_load_map(args.file), pointed=True)
    _emit(complex_to_doc(mapping_cone(f).cone), args.output)
    return 0


def _cmd_zoo(args) -> int:
    try:
        x = zoo(args.name, *args.params)
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return 1
    _emit(complex_to_doc(x), args.output)
    return 0


def _cmd_degree(args) -> int:
    f = _load_map(args.file)
    try:
        print(degree(f))
    except (NotASphereModel, ValueError) as e:
        print(str(e), file=sys.stderr)
        return 1
    return 0


def _cmd_check(args) -> int:
    suites = set(args.suite) if args.suite else {"all"}
    if args.file is None:
        reports = run_battery(suites=suites)
    else:
        text = _read(args.file)
        raw = json.loads(text) if text.strip().startswith("{") else None
        run_all = "all" in suites
        reports = []
        g = args.coeff
        if isinstance(raw, dict) and "maps" in raw:
            f = require_valid_map(loads_map(text), pointed=True)
            if run_all or "les" in suites:
                reports.append(check_les_exactness(f, g, args.range))
        else:
            x = require_valid(loads_complex(text))
            if run_all or "suspension" in suites:
                reports.append(check_suspension(x, g, args.range))
            if run_all or "reformulation" in suites:
                reports.append(check_skeletal_reformulation(x, g))
    failed = 0
    for rep in reports:
        print(rep.render())
        failed += not rep.passed
    if failed:
        print(f"{failed} of {len(reports)} checks failed", file=sys.stderr)
        return 1
    return 0


def build_parser() -> _Parser:
    p = _Parser(prog="cwhom", description="finite CW complexes, exact (co)homology, axiom checks")
    sub = p.add_subparsers(dest="command", required=True)

    def filearg(sp):
        sp.add_argument("file", help="JSON document, or - for stdin")

    sp = sub.add_parser("validate", help="validate a complex or chain map document")
    filearg(sp)
    sp.set_defaults(func=_cmd_validate)

    sp = sub.add_parser("homology", help="(co)homology groups")
    filearg(sp)
    sp.add_argument("--coeff", type=_coeff, default=FgAbGroup.free(1),
                    help="coefficient group, e.g. 'Z', 'Z/2', 'Z + Z/4' (default Z)")
    sp.add_argument("--cohomology", action="store_true", help="cohomology instead of homology")
    sp.add_argument("--reduced", action="store_true")
    sp.add_argument("--dim", type=int, default=None, help="single dimension only")
    sp.set_defaults(func=_cmd_homology)

    sp = sub.add_parser("euler", help="Euler characteristic")
    filearg(sp)
    sp.set_defaults(func=_cmd_euler)

    def outarg(sp):
        sp.add_argument("-o", "--output", default=None, help="output file (default stdout)")

    sp = sub.add_parser("susp", help="reduced suspension")
    filearg(sp)
    outarg(sp)
    sp.set_defaults(func=_cmd_susp)

    sp = sub.add_parser("wedge", help="one-point union of complexes")
    sp.add_argument("files", nargs="+")
    outarg(sp)
    sp.set_defaults(func=_cmd_wedge)

    sp = sub.add_parser("quotient", help="collapse a skeleton to the basepoint")
    filearg(sp)
    sp.add_argument("--below", type=int, required=True,
                    help="collapse the skeleton of this dimension")
    outarg(sp)
    sp.set_defaults(func=_cmd_quotient)

    sp = sub.add_parser("cone", help="mapping cone of a chain map document")
    filearg(sp)
    outarg(sp)
    sp.set_defaults(func=_cmd_cone)

    sp = sub.add_parser("zoo", help="standard complexes: " + ", ".join(ZOO_NAMES))
    sp.add_argument("name", choices=ZOO_NAMES)
    sp.add_argument("params", type=int, nargs="*")
    outarg(sp)
    sp.set_defaults(func=_cmd_zoo)

    sp = sub.add_parser("degree", help="degree of a sphere self-map document")
    filearg(sp)
    sp.set_defaults(func=_cmd_degree)

    sp = sub.add_parser("check", help="axiom checks (no file: full corpus battery)")
    sp.add_argument("file", nargs="?", default=None)
    sp.add_argument("--coeff", type=_coeff, default=FgAbGroup.free(1))
    sp.add_argument("--range", type=_parse_range, default=None,
                    help="dimension range a..b for suspension/les checks")
    sp.add_argument("--suite", action="append", choices=SUITES + ("all",),
                    help="restrict to a suite (repeatable; default all)")
    sp.set_defaults(func=_cmd_check)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as e:
        print(str(e), file=sys.stderr)
        return 2
    except InvalidComplex as e:
        print(str(e), file=sys.stderr)
        return 1
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
