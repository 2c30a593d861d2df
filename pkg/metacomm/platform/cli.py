# -*- coding: utf-8 -*-

# ------------------------------------------------------------------------------
#
#   Copyright 2019 The metacomm Authors
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.
#
# ------------------------------------------------------------------------------

"""
This module implements the command line front end of metacomm.

Subcommands: primes, permute, cycles, search, construct, fixed, common-divisors, verify.
Every subcommand accepts --format json|csv|table and --seed N. Quaternions are written a,b,c,d
with integer or n/2 entries; a negative first entry needs the form --xi=-1,2,1,1.

Exit codes: 0 success, 1 a check failed, 2 usage error.

    python3 -m metacomm permute --p 19 --xi 3,-2,-2,0 --format cycles
    python3 -m metacomm verify --p-max 50 --jobs 4

"""

import argparse
import csv
import io
import json
import logging
import pprint
import sys
from typing import Any, Dict, List, Optional, Sequence

from metacomm.algebra.fp import f_poly
from metacomm.algebra.hurwitz import HurwitzInt, is_integer_mod, norm
from metacomm.helpers.misc import DomainError, MetacommError
from metacomm.platform.classes import DEFAULT_MAX_P, enumerate_prime_classes
from metacomm.platform.cycles import cycle_structure, predicted_cycle_length, predicted_fixed_count
from metacomm.platform.fixed_points import DEFAULT_MAX_M, Method, common_left_right_divisors, fixed_classes
from metacomm.platform.metacommutation import Engine, compute_permutation, require_prime_xi
from metacomm.platform.search import construct_p_cycle_xi, distinct_p_cycle_pair, search_xi_with_length
from metacomm.platform.stats import VerifyStats
from metacomm.platform.verify import ALL_CHECKS, VerifyConfig, run_verify

logger = logging.getLogger(__name__)

FORMATS = ["json", "csv", "table"]


def quaternion(text: str) -> HurwitzInt:
    """Argument type for quaternion literals; a DomainError is a ValueError, reported by argparse."""
    return HurwitzInt.parse(text)


def checks(text: str) -> List[str]:
    """Argument type for comma-separated check names."""
    return [c.strip() for c in text.split(",") if c.strip()]


def parse_arguments(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """Arguments parsing."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", default=1, type=int, help="The random seed.")
    common.add_argument("--verbose", action="store_true", help="Log debug messages.")
    common.add_argument("--max-p", default=DEFAULT_MAX_P, type=int, help="The largest p enumerated exhaustively.")

    parser = argparse.ArgumentParser("metacomm", description="Metacommutation of Hurwitz primes.")
    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True

    primes = subparsers.add_parser("primes", parents=[common], help="List the prime classes above p.")
    primes.add_argument("--p", required=True, type=int, help="An odd prime.")

    permute = subparsers.add_parser("permute", parents=[common], help="Compute the metacommutation permutation.")
    permute.add_argument("--p", required=True, type=int, help="An odd prime.")
    permute.add_argument("--xi", required=True, type=quaternion, help="A prime quaternion a,b,c,d.")
    permute.add_argument("--engine", default="direct", choices=[e.value for e in Engine], help="The engine.")

    cycles = subparsers.add_parser("cycles", parents=[common], help="Analyse the cycles of the permutation.")
    cycles.add_argument("--p", required=True, type=int, help="An odd prime.")
    cycles.add_argument("--xi", required=True, type=quaternion, help="A prime quaternion a,b,c,d.")
    cycles.add_argument("--predict-only", action="store_true", help="Skip the permutation, only predict.")

    search = subparsers.add_parser("search", parents=[common], help="Search xi with a given cycle length.")
    search.add_argument("--p", required=True, type=int, help="An odd prime.")
    search.add_argument("--length", required=True, type=int, help="The cycle length sought.")
    search.add_argument("--bounds", default=2, type=int, help="The coordinate box |a|,|b|,|c|,|d| <= B.")

    construct = subparsers.add_parser("construct", parents=[common], help="Construct xi with a p-cycle.")
    construct.add_argument("--p", required=True, type=int, help="An odd prime.")
    construct.add_argument("--pair", action="store_true", help="Construct two such xi with different fixed classes.")

    fixed = subparsers.add_parser("fixed", parents=[common], help="List the classes fixed by xi.")
    fixed.add_argument("--p", required=True, type=int, help="An odd prime.")
    fixed.add_argument("--xi", required=True, type=quaternion, help="A prime quaternion a,b,c,d.")
    fixed.add_argument("--method", default="direct", choices=[m.value for m in Method], help="The test used.")

    common_divisors = subparsers.add_parser("common-divisors", parents=[common],
                                            help="List the elements of norm m dividing alpha on both sides.")
    common_divisors.add_argument("--alpha", required=True, type=quaternion, help="A primitive quaternion a,b,c,d.")
    common_divisors.add_argument("--m", required=True, type=int, help="An odd divisor of N(alpha).")
    common_divisors.add_argument("--max-m", default=DEFAULT_MAX_M, type=int, help="The largest m enumerated.")

    verify = subparsers.add_parser("verify", parents=[common], help="Sweep primes and check every law.")
    verify.add_argument("--p-min", default=3, type=int, help="The smallest prime.")
    verify.add_argument("--p-max", default=100, type=int, help="The largest prime.")
    verify.add_argument("--samples", default=20, type=int, help="The number of quaternions sampled per prime.")
    verify.add_argument("--q-bound", default=2000, type=int, help="The norm bound of the sampled quaternions.")
    verify.add_argument("--checks", default=None, type=checks,
                        help="Comma-separated checks among: {}. Default: all.".format(", ".join(ALL_CHECKS)))
    verify.add_argument("--jobs", default=1, type=int, help="The number of worker processes.")
    verify.add_argument("--plot", default=None, type=str, help="Save the cycle length histogram to this path.")
    verify.add_argument("--config", default=None, type=str, help="The path for a config file (in JSON format). "
                                                                 "The config file overrides the command line options.")

    for name, subparser in subparsers.choices.items():
        formats = FORMATS + ["cycles"] if name == "permute" else FORMATS
        subparser.add_argument("--format", default="json", choices=formats, help="The output format.")

    arguments = parser.parse_args(argv)
    logger.debug("Arguments: {}".format(pprint.pformat(arguments.__dict__)))
    return arguments


def build_verify_config(arguments: argparse.Namespace) -> VerifyConfig:
    """From argparse output, and the optional JSON config, build an instance of VerifyConfig."""
    args_dict = {
        "p_min": arguments.p_min,
        "p_max": arguments.p_max,
        "samples_per_p": arguments.samples,
        "seed": arguments.seed,
        "q_bound": arguments.q_bound,
        "checks": arguments.checks,
        "jobs": arguments.jobs
    }  # type: Dict[str, Any]
    if arguments.config is not None:
        with open(arguments.config) as f:
            args_dict.update(json.load(f))
    return VerifyConfig.from_dict(args_dict)


def render(records: List[Dict[str, Any]], fmt: str) -> str:
    """
    Render flat records as json, csv or an aligned table.

    >>> print(render([{"p": 3, "xi": "1,1,1,0"}], "table"))
    p  xi
    3  1,1,1,0

    :param records: the records, all with the same keys.
    :param fmt: json, csv or table.
    :return: the rendered text.
    """
    if fmt == "json":
        return json.dumps(records, indent=2)
    if not records:
        return ""
    columns = list(records[0].keys())
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
        return buffer.getvalue().rstrip("\n")
    cells = [[str(c) for c in columns]] + [["" if r[c] is None else str(r[c]) for c in columns] for r in records]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in cells)


def _check_p_bound(p: int, arguments: argparse.Namespace) -> None:
    if p > arguments.max_p:
        raise DomainError("p = {} exceeds the enumeration bound --max-p {}.".format(p, arguments.max_p))


def run_primes(arguments: argparse.Namespace) -> int:
    """Run the primes subcommand."""
    _check_p_bound(arguments.p, arguments)
    records = [cls.to_dict() for cls in enumerate_prime_classes(arguments.p)]
    print(render(records, arguments.format))
    return 0


def run_permute(arguments: argparse.Namespace) -> int:
    """Run the permute subcommand."""
    _check_p_bound(arguments.p, arguments)
    perm = compute_permutation(arguments.xi, arguments.p, Engine(arguments.engine))
    if arguments.format == "cycles":
        print(str(perm))
        return 0
    classes = enumerate_prime_classes(arguments.p)
    records = [{"index": cls.index, "rep": str(cls.rep), "point": str(cls.point), "image": perm.image[cls.index]}
               for cls in classes]
    print(render(records, arguments.format))
    return 0


def run_cycles(arguments: argparse.Namespace) -> int:
    """Run the cycles subcommand."""
    p, xi = arguments.p, arguments.xi
    require_prime_xi(xi, p)
    identity = is_integer_mod(xi, p)
    record = {
        "p": p,
        "xi": str(xi),
        "q": norm(xi),
        "f_poly": str(f_poly(xi, p)),
        "predicted_fixed_count": predicted_fixed_count(xi, p),
        "matched_cyclotomic_t": None if identity else predicted_cycle_length(xi, p)
    }  # type: Dict[str, Any]
    if not arguments.predict_only:
        _check_p_bound(p, arguments)
        structure = cycle_structure(compute_permutation(xi, p, Engine.CONIC))
        record.update(structure.to_dict())
    print(render([record], arguments.format))
    return 0


def run_search(arguments: argparse.Namespace) -> int:
    """Run the search subcommand."""
    report = search_xi_with_length(arguments.p, arguments.length, arguments.bounds)
    print(render([report.to_dict()], arguments.format))
    return 1 if report.xi is not None and not report.verified else 0


def run_construct(arguments: argparse.Namespace) -> int:
    """Run the construct subcommand."""
    if arguments.pair:
        reports = list(distinct_p_cycle_pair(arguments.p, seed=arguments.seed))
    else:
        reports = [construct_p_cycle_xi(arguments.p)]
    print(render([r.to_dict() for r in reports], arguments.format))
    return 0 if all(r.verified for r in reports) else 1


def run_fixed(arguments: argparse.Namespace) -> int:
    """Run the fixed subcommand."""
    _check_p_bound(arguments.p, arguments)
    classes = enumerate_prime_classes(arguments.p)
    indices = fixed_classes(arguments.xi, arguments.p, Method(arguments.method))
    print(render([classes[i].to_dict() for i in indices], arguments.format))
    return 0


def run_common_divisors(arguments: argparse.Namespace) -> int:
    """Run the common-divisors subcommand."""
    divisors = common_left_right_divisors(arguments.alpha, arguments.m, arguments.max_m)
    print(render([{"beta": str(beta), "norm": norm(beta)} for beta in divisors], arguments.format))
    return 0


def run_verify_command(arguments: argparse.Namespace) -> int:
    """Run the verify subcommand."""
    cfg = build_verify_config(arguments)
    logger.info("Verify configuration: {}".format(pprint.pformat(cfg.to_dict())))
    report = run_verify(cfg)
    print(render(report.to_records(), arguments.format))
    if arguments.plot is not None:
        VerifyStats(report).plot_cycle_lengths(arguments.plot)
    return report.exit_code


COMMANDS = {
    "primes": run_primes,
    "permute": run_permute,
    "cycles": run_cycles,
    "search": run_search,
    "construct": run_construct,
    "fixed": run_fixed,
    "common-divisors": run_common_divisors,
    "verify": run_verify_command,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line.

    :param argv: the arguments, without the program name. If None, use sys.argv.
    :return: the exit code.
    """
    arguments = parse_arguments(argv)
    logging.getLogger("metacomm").setLevel(logging.DEBUG if arguments.verbose else logging.INFO)
    try:
        return COMMANDS[arguments.command](arguments)
    except DomainError as e:
        logger.error(str(e))
        print("error: {}".format(e), file=sys.stderr)
        return 2
    except MetacommError as e:
        logger.error("{}: {}".format(type(e).__name__, e))
        print("error: {}".format(e), file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
