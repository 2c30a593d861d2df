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

"""This module contains the tests of the platform.search module."""

import pytest

from metacomm.algebra.hurwitz import HurwitzInt, norm
from metacomm.helpers.misc import DomainError, SearchFailure, is_prime
from metacomm.platform.cycles import closed_form_criterion, cycle_structure, resultant_check
from metacomm.platform.metacommutation import Engine, permutation_direct
from metacomm.platform.search import Goal, SearchReport, construct_p_cycle_xi, distinct_p_cycle_pair, \
    satisfies_p_cycle_congruence, search_xi_with_length, three_squares


class TestThreeSquares:
    """Class to test three-squares decompositions."""

    def test_examples(self):
        """Test the lexicographically first admissible triples."""
        assert three_squares(9) == (1, 2, 2)
        assert three_squares(25) == (3, 4, 0)
        assert three_squares(7) is None

    def test_constraints(self):
        """Test that the constraints can be relaxed."""
        assert three_squares(1) is None
        assert three_squares(1, require_b_nonzero=False, require_c_nonzero=False) == (0, 0, 1)
        assert three_squares(8) is None
        assert three_squares(8, require_coprime=False) == (2, 2, 0)

    def test_non_positive_raises_exception(self):
        """Test that n must be positive."""
        with pytest.raises(DomainError):
            three_squares(0)


class TestConstructPCycle:
    """Class to test the construction of xi with a p-cycle."""

    def test_p_three(self):
        """Test that p = 3 gives 2+i+2j+2k of norm 13."""
        report = construct_p_cycle_xi(3)
        assert report.xi == HurwitzInt.from_coords(2, 1, 2, 2)
        assert report.q == 13
        assert report.iterations == 1
        assert report.decomposition == (1, 2, 2)
        assert report.verified
        assert report.goal == Goal.P_CYCLE

    def test_p_five(self):
        """Test that p = 5 gives 2+3i+4j of norm 29."""
        report = construct_p_cycle_xi(5)
        assert report.xi == HurwitzInt.from_coords(2, 3, 4, 0)
        assert report.verified

    def test_every_prime_below_two_hundred(self):
        """Test the construction for every odd prime below 200."""
        for p in range(3, 200):
            if not is_prime(p):
                continue
            report = construct_p_cycle_xi(p)
            xi = report.xi
            assert report.verified, p
            assert is_prime(report.q)
            assert xi.coords[0] == 2
            assert sum(x * x for x in report.decomposition) % (8 * p) == (p % 8) * p % (8 * p)
            assert satisfies_p_cycle_congruence(xi, p)
            structure = cycle_structure(permutation_direct(xi, p))
            assert (structure.fixed_count, structure.cycle_length) == (1, p)

    def test_conic_engine(self):
        """Test that the conic engine verifies the same construction."""
        assert construct_p_cycle_xi(7, engine=Engine.CONIC) == construct_p_cycle_xi(7)

    def test_exhausted_budget_raises_exception(self):
        """Test that an empty budget raises a SearchFailure."""
        with pytest.raises(SearchFailure):
            construct_p_cycle_xi(3, max_iterations=0)

    def test_bad_prime_raises_exception(self):
        """Test that p must be an odd prime."""
        with pytest.raises(DomainError):
            construct_p_cycle_xi(2)


class TestDistinctPair:
    """Class to test the construction of two p-cycles with different fixed classes."""

    @pytest.mark.parametrize("p", [3, 5])
    def test_small_primes(self, p):
        """Test the pair for p = 3 and p = 5."""
        first, second = distinct_p_cycle_pair(p)
        assert first.verified and second.verified
        assert first.fixed_class != second.fixed_class
        assert second.goal == Goal.DISTINCT_FIXED

    def test_every_prime_below_one_hundred(self):
        """Test the pair for every odd prime below 100."""
        for p in range(3, 100):
            if not is_prime(p):
                continue
            first, second = distinct_p_cycle_pair(p)
            assert first.verified and second.verified, p
            assert first.fixed_class != second.fixed_class
            for report in (first, second):
                assert is_prime(report.q)
                assert report.xi.coords[0] == 2
                assert permutation_direct(report.xi, p).fixed_points == [report.fixed_class]

    def test_seed_is_reproducible(self):
        """Test that the same seed gives the same pair."""
        assert distinct_p_cycle_pair(11, seed=4) == distinct_p_cycle_pair(11, seed=4)


class TestSearchWithLength:
    """Class to test the bounded search for a cycle length."""

    def test_length_five_above_nineteen(self):
        """Test that the box of radius 2 has an xi with 5-cycles above 19."""
        report = search_xi_with_length(19, 5, bound=2)
        assert report.xi is not None
        assert report.verified
        assert resultant_check(report.xi, 19, 5)
        assert cycle_structure(permutation_direct(report.xi, 19)).cycle_length == 5

    def test_length_three_matches_the_closed_form(self):
        """Test that a hit for t = 3 satisfies N = Tr^2 modulo p."""
        report = search_xi_with_length(19, 3, bound=3)
        assert report.verified
        assert closed_form_criterion(3, report.xi, 19)

    def test_inadmissible_length(self):
        """Test that 5 cannot occur above 7."""
        report = search_xi_with_length(7, 5)
        assert report.xi is None
        assert not report.exhausted
        assert report.iterations == 0

    def test_empty_box_is_exhausted(self):
        """Test that the box of radius 0 has no candidate."""
        report = search_xi_with_length(19, 19, bound=0)
        assert report.xi is None
        assert report.exhausted
        assert report.to_dict()["q"] is None

    def test_bad_arguments_raise_exception(self):
        """Test that t < 2 and negative bounds are rejected."""
        with pytest.raises(DomainError):
            search_xi_with_length(19, 1)
        with pytest.raises(DomainError):
            search_xi_with_length(19, 3, bound=-1)


class TestSearchReport:
    """Class to test the SearchReport object."""

    def test_verified_without_xi_raises_exception(self):
        """Test that a verified report carries a quaternion."""
        with pytest.raises(AssertionError, match="verified report"):
            SearchReport(3, Goal.LENGTH, verified=True)

    def test_to_dict(self):
        """Test the dictionary form."""
        xi = HurwitzInt.from_coords(2, 1, 2, 2)
        report = SearchReport(3, Goal.P_CYCLE, xi=xi, target_length=3, iterations=1, decomposition=(1, 2, 2),
                              verified=True, fixed_class=0)
        assert report.to_dict() == {
            "p": 3,
            "goal": "p-cycle",
            "target_length": 3,
            "xi": "2,1,2,2",
            "q": norm(xi),
            "iterations": 1,
            "decomposition": [1, 2, 2],
            "verified": True,
            "exhausted": False,
            "fixed_class": 0
        }

    def test_congruence(self):
        """Test Re(xi)^2 = N(xi) modulo p."""
        assert satisfies_p_cycle_congruence(HurwitzInt.from_coords(2, 1, 2, 2), 3)
        assert not satisfies_p_cycle_congruence(HurwitzInt.from_coords(1, 2, 1, 1), 19)
