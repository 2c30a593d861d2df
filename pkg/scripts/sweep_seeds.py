#!/usr/bin/env python3
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

"""A script to run several verification sweeps in a row, one per seed."""

import argparse
import json
import logging
import os
import pprint
import shutil
from collections import defaultdict
from typing import Any, Dict, List

from metacomm.platform.stats import VerifyStats
from metacomm.platform.verify import VerifyConfig, run_verify

logging.basicConfig(level=logging.INFO)


def parse_args() -> argparse.Namespace:
    """Argument parsing."""
    parser = argparse.ArgumentParser("sweep_seeds",
                                     description="Run the verification sweep for several seeds and aggregate the outcomes.")
    parser.add_argument("--seeds", nargs="+", type=int, default=[1, 2, 3], help="The list of seeds, one sweep each.")
    parser.add_argument("--p_min", type=int, default=3, help="The smallest prime.")
    parser.add_argument("--p_max", type=int, default=100, help="The largest prime.")
    parser.add_argument("--samples_per_p", type=int, default=20, help="The number of quaternions sampled per prime.")
    parser.add_argument("--q_bound", type=int, default=2000, help="The norm bound of the sampled quaternions.")
    parser.add_argument("--jobs", type=int, default=1, help="The number of worker processes per sweep.")
    parser.add_argument("--output_dir", type=str, default=None, help="If given, dump the report and plot of every sweep there.")
    parser.add_argument("--config", type=str, default=None, help="The path for a config file (in JSON format). "
                                                                 "If None, use only command line arguments. "
                                                                 "The config file overrides the command line options.")

    arguments = parser.parse_args()
    return arguments


def run_sweeps(base: Dict[str, Any], seeds: List[int], output_dir: str = None) -> List[VerifyStats]:
    """
    Run a verification sweep for every seed.

    :param base: the configuration shared by the sweeps, as a dictionary.
    :param seeds: the seeds.
    :param output_dir: the directory where every sweep is dumped, if any.
    :return: the statistics of every sweep.
    """
    result = []
    for i, seed in enumerate(seeds):
        cfg = VerifyConfig.from_dict(dict(base, seed=seed))
        logging.info("Start sweep {:02d} with seed {}...".format(i + 1, seed))
        stats = VerifyStats(run_verify(cfg))
        logging.info("Sweep {:02d}: {} failures.".format(i + 1, len(stats.report.failures)))
        if output_dir is not None:
            stats.dump(output_dir, "seed_{:04d}".format(seed))
        result.append(stats)
    return result


def compute_aggregate_counts(all_stats: List[VerifyStats]) -> Dict[str, Dict[str, int]]:
    """
    Sum the pass, fail and skip counts of every check over the sweeps.

    :param all_stats: the VerifyStats object of every sweep.
    :return: a dictionary "check" -> "status" -> count
    """
    result = defaultdict(lambda: defaultdict(int))  # type: Dict[str, Dict[str, int]]
    for stats in all_stats:
        for check, counts in stats.counts_by_check().items():
            for status, count in counts.items():
                result[check][status] += count
    return result


def print_aggregate_counts(counts_by_check: Dict[str, Dict[str, int]]) -> None:
    """
    Print the aggregate counts.

    :param counts_by_check: a dictionary mapping the checks to their counts by status.
    """
    if len(counts_by_check) == 0:
        print("No checks.")
    else:
        print("Aggregate outcomes:")
        for check, counts in counts_by_check.items():
            print(check, dict(counts))


def main():
    """Run the script."""
    arguments = parse_args()

    # process input
    args_dict = vars(arguments)
    json_dict = json.load(open(arguments.config)) if arguments.config is not None else {}
    args_dict.update(json_dict)

    logging.info("Arguments: {}".format(pprint.pformat(args_dict)))

    output_dir = args_dict["output_dir"]
    if output_dir is not None:
        logging.info("Removing directory {}...".format(repr(output_dir)))
        shutil.rmtree(output_dir, ignore_errors=True)
        os.makedirs(output_dir)

    base = {k: args_dict[k] for k in ("p_min", "p_max", "samples_per_p", "q_bound", "jobs")}
    all_stats = run_sweeps(base, args_dict["seeds"], output_dir)
    print_aggregate_counts(compute_aggregate_counts(all_stats))


if __name__ == '__main__':
    main()
