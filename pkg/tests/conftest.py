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

"""This module contains the tests configuration."""

import logging
import random
from typing import List

import pytest

from metacomm.algebra.hurwitz import HurwitzInt

logger = logging.getLogger(__name__)


ODD_PRIMES_BELOW_100 = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]


def random_hurwitz(rng: random.Random, bound: int) -> HurwitzInt:
    """Draw a Hurwitz integer with coordinates in [-bound, bound], either parity."""
    parity = rng.randrange(2)
    return HurwitzInt(*(2 * rng.randint(-bound, bound - parity) + parity for _ in range(4)))


def random_nonzero_hurwitz(rng: random.Random, bound: int) -> HurwitzInt:
    """Draw a nonzero Hurwitz integer with coordinates in [-bound, bound]."""
    while True:
        alpha = random_hurwitz(rng, bound)
        if not alpha.is_zero:
            return alpha


@pytest.fixture
def rng() -> random.Random:
    """A seeded random generator."""
    return random.Random(20190731)


@pytest.fixture(scope="session")
def odd_primes() -> List[int]:
    """The odd primes below 100."""
    return ODD_PRIMES_BELOW_100


@pytest.fixture(scope="session")
def xi_three() -> HurwitzInt:
    """xi = 3-2i-2j, of norm 17: cycle length 3 above 19."""
    return HurwitzInt.from_coords(3, -2, -2, 0)


@pytest.fixture(scope="session")
def xi_five() -> HurwitzInt:
    """xi = 1+2i+j+k, of norm 7: cycle length 5 above 19."""
    return HurwitzInt.from_coords(1, 2, 1, 1)
