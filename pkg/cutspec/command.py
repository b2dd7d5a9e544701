"""
CUTSPEC - Cut monoids, quasi-valuations and prime spectra
MIT License

Copyright (c) 2026 cutspec developers

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""
import argparse
import json
import logging
import sys

from . import __version__
from .exceptions import (
    BoundExceededError,
    CutExpressionError,
    HypothesisError,
    InstanceSpecError,
    InvalidAlgebraError,
    MembershipError,
    NotFinitelyGeneratedError,
)
from .expression import parse_cut
from .instances import fixture_names, load_instance, read_instance_spec
from .quasival import entry_min_qv, filter_quasi_valuation, min_formula_qv
from .spectrum import DEFAULT_BOUND, base_map, enumerate_spec, property_report
from .verify import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    build_run_report,
    verify_all,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NONCONFORMANT = 1
EXIT_ERROR = 2

USER_ERRORS = (
    BoundExceededError,
    CutExpressionError,
    FileNotFoundError,
    HypothesisError,
    InstanceSpecError,
    InvalidAlgebraError,
    MembershipError,
    NotFinitelyGeneratedError,
    json.JSONDecodeError,
)

QV_BUILDERS = {
    "filter": filter_quasi_valuation,
    "min_formula": min_formula_qv,
    "entry_min": entry_min_qv,
}


def dump(obj, output=None) -> None:
    output = output or sys.stdout
    output.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _cut(args) -> int:
    dump(parse_cut(args.expression, args.rank).to_json())
    return EXIT_OK


def _qv(args) -> int:
    R = load_instance(args.instance, args.fixture_dir)
    x = R.element_from_json(json.loads(args.element))
    R.check_member(x)
    which = list(QV_BUILDERS) if args.which == "all" else [args.which]
    values = {}
    for name in which:
        try:
            w = QV_BUILDERS[name](R)
        except (HypothesisError, NotFinitelyGeneratedError) as err:
            if args.which != "all":
                raise
            logger.info("%s: %s not defined: %s", R, name, err)
            continue
        values[name] = w(x).to_json()
    dump(
        {
            "instance": R.name,
            "element": R.element_to_json(x),
            "values": values,
        }
    )
    return EXIT_OK


def _spec(args) -> int:
    if args.instance is None:
        if args.rank is None:
            raise InstanceSpecError("spec needs --instance or --rank")
        m = base_map(args.rank)
        report = {"instance": None, **m.to_json()}
        report["properties"] = property_report(None, m)
    else:
        R = load_instance(args.instance, args.fixture_dir)
        m = enumerate_spec(R, args.bound)
        report = {"instance": R.name, **m.to_json()}
        report["properties"] = property_report(R, m)
    dump(report)
    return EXIT_OK


def _verify(args) -> int:
    if args.target == "all":
        sources = fixture_names(args.fixture_dir)
    else:
        sources = [args.target]
    specs = [read_instance_spec(src, args.fixture_dir) for src in sources]
    reports = verify_all(
        specs,
        samples=args.samples,
        seed=args.seed,
        bound=args.bound,
        timing=args.timing,
        jobs=args.jobs,
    )
    run = build_run_report(
        reports, args.samples, args.seed, args.bound, __version__
    )
    if args.report:
        with open(args.report, "w") as fp:
            dump(run, fp)
    else:
        dump(run)
    for name in run["failures"]:
        sys.stderr.write(f"{name}: theorem conformance failure\n")
    return EXIT_OK if run["passed"] else EXIT_NONCONFORMANT


def _add_instance_args(parser, required=True):
    parser.add_argument(
        "-i",
        "--instance",
        required=required,
        help="instance JSON file or fixture name",
    )
    parser.add_argument(
        "--fixture-dir",
        default=None,
        help="fixture directory, overrides $CUTSPEC_FIXTURES",
    )


def parse(argv=None):
    parser = argparse.ArgumentParser(
        prog="cutspec",
        description=(
            "cutspec checks quasi-valuations and prime spectra of "
            "algebras over valuation domains."
        ),
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="increase log verbosity (repeatable)",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"cutspec v{__version__}",
        help="Software version",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    cut = commands.add_parser("cut", help="evaluates a cut expression")
    cut.add_argument("expression", help='e.g. "prefix([3]) + Hplus(1)"')
    cut.add_argument("-r", "--rank", type=int, required=True)
    cut.set_defaults(func=_cut)

    qv = commands.add_parser("qv", help="evaluates quasi-valuations")
    _add_instance_args(qv)
    qv.add_argument(
        "-e", "--element", required=True, help="element as JSON"
    )
    qv.add_argument(
        "-w",
        "--which",
        choices=[*QV_BUILDERS, "all"],
        default="all",
        help="quasi-valuation to evaluate",
    )
    qv.set_defaults(func=_qv)

    spec = commands.add_parser("spec", help="enumerates a prime spectrum")
    _add_instance_args(spec, required=False)
    spec.add_argument(
        "-r", "--rank", type=int, help="base chain only, at this rank"
    )
    spec.add_argument("-b", "--bound", type=int, default=DEFAULT_BOUND)
    spec.set_defaults(func=_spec)

    verify = commands.add_parser("verify", help="runs the check suites")
    verify.add_argument(
        "target",
        nargs="?",
        default="all",
        help='instance file, fixture name or "all"',
    )
    verify.add_argument(
        "--fixture-dir",
        default=None,
        help="fixture directory, overrides $CUTSPEC_FIXTURES",
    )
    verify.add_argument(
        "-n", "--samples", type=int, default=DEFAULT_SAMPLES
    )
    verify.add_argument("-s", "--seed", type=int, default=DEFAULT_SEED)
    verify.add_argument("-b", "--bound", type=int, default=DEFAULT_BOUND)
    verify.add_argument("-o", "--report", help="report output file")
    verify.add_argument("-j", "--jobs", type=int, default=1)
    verify.add_argument(
        "--timing", action="store_true", help="adds wall-clock timings"
    )
    verify.set_defaults(func=_verify)

    return parser.parse_args(argv)


def main(args) -> int:
    level = [logging.WARNING, logging.INFO, logging.DEBUG][
        min(args.verbose, 2)
    ]
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
    )
    logging.captureWarnings(True)
    try:
        return args.func(args)
    except USER_ERRORS as err:
        sys.stderr.write(f"cutspec {args.command}: {err}\n")
        return EXIT_ERROR
