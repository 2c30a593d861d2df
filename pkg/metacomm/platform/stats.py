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

"""This module contains a class to query statistics about a verification sweep."""

import json
import os
from typing import Dict, List, Optional, Tuple

import matplotlib
import numpy as np

from metacomm.platform.verify import ALL_CHECKS, FAIL, PASS, SKIP, VerifyReport

matplotlib.use('agg')

import matplotlib.pyplot as plt  # noqa: E402

STATUSES = (PASS, FAIL, SKIP)


class VerifyStats:
    """A class to query statistics about a verification sweep."""

    def __init__(self, report: VerifyReport) -> None:
        """
        Instantiate verification stats.

        :param report: the report of the sweep.

        :return: None
        """
        self.report = report

    def status_matrix(self) -> Tuple[List[str], np.ndarray]:
        """
        Count the records by check and status.

        :return: the check names and a matrix of shape (nb_checks, 3) counting pass, fail and skip.
        """
        checks = [c for c in ALL_CHECKS if any(r.check == c for r in self.report.records)]
        result = np.zeros((len(checks), len(STATUSES)), dtype=np.int64)
        for record in self.report.records:
            result[checks.index(record.check), STATUSES.index(record.status)] += 1
        return checks, result

    def counts_by_check(self) -> Dict[str, Dict[str, int]]:
        """Count the records by check and status, as nested dictionaries."""
        checks, matrix = self.status_matrix()
        return {c: {s: int(matrix[i, j]) for j, s in enumerate(STATUSES)} for i, c in enumerate(checks)}

    def cycle_length_histogram(self) -> np.ndarray:
        """
        Count the sampled permutations by non-trivial cycle length.

        :return: an array h where h[l] is the number of permutations with cycle length l (identities are excluded).
        """
        lengths = [o.structure.cycle_length for o in self.report.observations if o.structure.cycle_length is not None]
        return np.bincount(np.asarray(lengths, dtype=np.int64), minlength=2)

    def fixed_count_histogram(self) -> np.ndarray:
        """
        Count the non-identity sampled permutations by number of fixed classes.

        :return: an array of length 3 indexed by the fixed count 0, 1, 2.
        """
        counts = [o.structure.fixed_count for o in self.report.observations if not o.structure.is_identity]
        return np.bincount(np.asarray(counts, dtype=np.int64), minlength=3)

    def identity_fraction(self) -> float:
        """Fraction of the sampled permutations that are the identity."""
        if not self.report.observations:
            return 0.0
        return float(np.mean([o.structure.is_identity for o in self.report.observations]))

    def plot_cycle_lengths(self, output_path: Optional[str] = None) -> None:
        """
        Plot the histogram of the observed cycle lengths.

        :param output_path: an optional output path where to save the figure generated.

        :return: None
        """
        histogram = self.cycle_length_histogram()
        lengths = np.nonzero(histogram)[0]

        plt.clf()
        plt.bar(lengths, histogram[lengths])
        plt.xlabel("Cycle length")
        plt.ylabel("Permutations")

        plt.gca().xaxis.set_major_locator(plt.MaxNLocator(integer=True))

        if output_path is None:
            plt.show()
        else:
            plt.savefig(output_path)

    def dump(self, directory: str, experiment_name: str) -> None:
        """
        Dump the report and the plot.

        :param directory: the directory where experiments details are listed.
        :param experiment_name: the name of the folder where the data about the sweep will be saved.

        :return: None.
        """
        experiment_dir = os.path.join(directory, experiment_name)
        os.makedirs(experiment_dir, exist_ok=True)
        with open(os.path.join(experiment_dir, "report.json"), "w") as f:
            json.dump({"records": self.report.to_records(), "counts": self.counts_by_check()}, f, indent=2)
        self.plot_cycle_lengths(os.path.join(experiment_dir, "cycle_lengths.png"))
