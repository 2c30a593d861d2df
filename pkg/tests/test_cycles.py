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

"""This module contains the tests of the platform.cycles module."""

import random

import pytest

from metacomm.algebra.fp import FpPoly, f_poly, legendre
from metacomm.algebra.hurwitz import HurwitzInt, norm
from metacomm.helpers.misc import DomainError, TheoremViolation
from metacomm.platform.cycles import CycleStructure, admissible_lengths, closed_form_criterion, cycle_structure, \
    is_admissible_length, length5_condition, permutation_sign, predicted_cycle_length, predicted_fixed_count, \
    resultant_check, root_order_oracle
from metacomm.platform.metacommutation import Permutation, permutation_direct
from metacomm.platform.verify import sample_xi
from tests.conftest import ODD_PRIMES_BELOW_100


class TestCycleStructure:
    """Class to test the decomposition of permutations."""

    def test_sign(self):
        """Test the sign of small permutations."""
        assert permutation_sign(Permutation.identity(5)) == 1
        assert permutation_sign(Permutation(3, [1, 0, 2, 3])) == -1
        assert permutation_sign(Permutation(3, [1, 2, 0, 3])) == 1

    def test_example_of_length_three(self, xi_three):
        """Test 3-2i-2j above 19: two fixed classes and six 3-cycles."""
        structure = cycle_structure(permutation_direct(xi_three, 19))
        assert structure.to_dict() == {"fixed_count": 2, "length": 3, "cycle_count": 6, "sign": 1}

    def test_example_of_length_five(self, xi_five):
        """Test 1+2i+j+k above 19: no fixed class and four 5-cycles."""
        structure = cycle_structure(permutation_direct(xi_five, 19))
        assert structure.to_dict() == {"fixed_count": 0, "length": 5, "cycle_count": 4, "sign": 1}

    def test_identity(self):
        """Test the structure of the identity."""
        structure = cycle_structure(Permutation.identity(7))
        assert structure.is_identity
        assert structure.cycle_length is None
        assert structure.fixed_count == 8

    def test_mixed_lengths_raise_exception(self):
        """Test that non-trivial cycles of different lengths are reported."""
        with pytest.raises(TheoremViolation):
            cycle_structure(Permutation(5, [1, 0, 3, 4, 2, 5]))

    def test_inconsistent_structure_raises_exception(self):
        """Test that the fixed points and the cycles must cover the classes."""
        with pytest.raises(AssertionError, match="cover the p\\+1 classes"):
            CycleStructure(5, 1, 2, 1, 1)


class TestPredictions:
    """Class to test the predicted fixed count and cycle length."""

    def test_predicted_fixed_count(self, xi_three, xi_five):
        """Test 1 + ((Tr^2 - 4q)/p) on the reference examples."""
        assert predicted_fixed_count(xi_three, 19) == 2
        assert predicted_fixed_count(xi_five, 19) == 0
        assert predicted_fixed_count(HurwitzInt.from_coords(2, 1, 2, 2), 3) == 1
        assert predicted_fixed_count(HurwitzInt.from_coords(2, 3, 3, 3), 3) is None

    def test_predicted_cycle_length(self, xi_three, xi_five):
        """Test the cyclotomic prediction on the reference examples."""
        assert predicted_cycle_length(xi_three, 19) == 3
        assert predicted_cycle_length(xi_five, 19) == 5
        assert predicted_cycle_length(HurwitzInt.from_coords(2, 2, 2, 1), 3) == 3

    def test_length_p_example(self):
        """Test that 2+2i+2j+k induces a 3-cycle and a fixed class above 3."""
        structure = cycle_structure(permutation_direct(HurwitzInt.from_coords(2, 2, 2, 1), 3))
        assert (structure.fixed_count, structure.cycle_length) == (1, 3)

    def test_integer_xi_raises_exception(self):
        """Test that the length of the identity is not predicted."""
        with pytest.raises(DomainError):
            predicted_cycle_length(HurwitzInt.from_coords(2, 3, 3, 3), 3)

    def test_bad_prime_raises_exception(self, xi_five):
        """Test that p = 2 and p | N(xi) are rejected."""
        with pytest.raises(DomainError):
            predicted_fixed_count(xi_five, 2)
        with pytest.raises(DomainError):
            predicted_fixed_count(xi_five, 7)

    def test_composite_norm_raises_exception(self):
        """Test that the predictions need a prime norm."""
        xi = HurwitzInt.from_coords(1, 1, 1, 1)
        with pytest.raises(DomainError, match="not prime"):
            predicted_fixed_count(xi, 19)
        with pytest.raises(DomainError, match="not prime"):
            predicted_cycle_length(xi, 19)

    def test_admissible_lengths(self):
        """Test the possible cycle lengths above p."""
        assert admissible_lengths(19) == [2, 3, 4, 5, 6, 9, 10, 18, 19, 20]
        assert is_admissible_length(5, 19)
        assert not is_admissible_length(5, 7)
        assert is_admissible_length(7, 7)
        assert not is_admissible_length(1, 7)

    def test_random_samples(self):
        """Test the cycle laws on random (xi, p)."""
        rng = random.Random(11)
        for _ in range(500):
            p = rng.choice(ODD_PRIMES_BELOW_100)
            xi = sample_xi(p, rng, 2000)
            structure = cycle_structure(permutation_direct(xi, p))
            predicted = predicted_fixed_count(xi, p)
            if predicted is None:
                assert structure.is_identity
                continue
            assert structure.fixed_count == predicted
            assert structure.sign == legendre(norm(xi), p)
            length = structure.cycle_length
            assert {0: (p + 1) % length == 0, 1: length == p, 2: (p - 1) % length == 0}[predicted]
            assert predicted_cycle_length(xi, p) == length
            f = f_poly(xi, p)
            if f != FpPoly([1, -2, 1], p):
                assert root_order_oracle(f, p) == length
            assert [t for t in admissible_lengths(p) if resultant_check(xi, p, t)] == [length]


class TestCriteria:
    """Class to test the congruence criteria for small cycle lengths."""

    def test_resultant_check(self, xi_five):
        """Test the resultant criterion for 1+2i+j+k above 19."""
        assert resultant_check(xi_five, 19, 5)
        assert not resultant_check(xi_five, 19, 10)
        assert not resultant_check(xi_five, 19, 2)

    def test_closed_forms(self, xi_three):
        """Test the closed-form criteria on 3-2i-2j above 19."""
        assert closed_form_criterion(3, xi_three, 19)
        assert not closed_form_criterion(2, xi_three, 19)
        assert not closed_form_criterion(4, xi_three, 19)
        assert not closed_form_criterion(6, xi_three, 19)

    def test_pure_xi(self):
        """Test that a pure xi satisfies the criterion for length 2."""
        assert closed_form_criterion(2, HurwitzInt.from_coords(0, 1, 1, 1), 19)

    def test_length_four(self):
        """Test 2N = Tr^2 and the shape of the permutations of length 4."""
        for p, xi, expected in [(5, HurwitzInt.from_coords(1, 2, 1, 1), (2, 1)),
                                (7, HurwitzInt.from_coords(1, 1, 0, 0), (0, 2)),
                                (13, HurwitzInt.from_coords(1, 1, 0, 0), (2, 3))]:
            assert closed_form_criterion(4, xi, p)
            structure = cycle_structure(permutation_direct(xi, p))
            assert structure.cycle_length == 4
            assert (structure.fixed_count, structure.cycle_count) == expected

    def test_length_six_is_not_admissible_above_three(self):
        """Test that 3N = Tr^2 modulo 3 does not mean length 6."""
        xi = HurwitzInt.from_coords(3, 2, 0, 0)
        assert not closed_form_criterion(6, xi, 3)
        assert closed_form_criterion(2, xi, 3)
        assert cycle_structure(permutation_direct(xi, 3)).cycle_length == 2

    def test_other_lengths_raise_exception(self, xi_three):
        """Test that closed forms exist for 2, 3, 4 and 6 only."""
        with pytest.raises(DomainError):
            closed_form_criterion(5, xi_three, 19)

    def test_length5_condition(self, xi_three, xi_five):
        """Test alpha^2 - alpha - 1 = 0 modulo p."""
        assert length5_condition(xi_five, 19)
        assert not length5_condition(xi_three, 19)
        assert not length5_condition(HurwitzInt.from_coords(1, 1, 0, 0), 7)

    def test_length5_second_root(self):
        """Test N = 5 modulo 19 with real part 1: the other root of alpha^2 - alpha - 1."""
        xi = HurwitzInt.from_coords(1, 1, 4, 5)
        assert length5_condition(xi, 19)
        assert cycle_structure(permutation_direct(xi, 19)).cycle_length == 5


class TestRootOrderOracle:
    """Class to test the multiplicative order of a root."""

    def test_orders(self):
        """Test small quadratics."""
        assert root_order_oracle(FpPoly([1, 1, 1], 19), 19) == 3
        assert root_order_oracle(FpPoly([1, 0, 1], 13), 13) == 4
        assert root_order_oracle(FpPoly([1, 2, 1], 7), 7) == 2
        assert root_order_oracle(FpPoly([1, 15, 1], 19), 19) == 5

    def test_parabolic_raises_exception(self):
        """Test that (x-1)^2 has no root order."""
        with pytest.raises(DomainError):
            root_order_oracle(FpPoly([1, -2, 1], 7), 7)

    def test_non_quadratic_raises_exception(self):
        """Test that the oracle needs a quadratic."""
        with pytest.raises(DomainError):
            root_order_oracle(FpPoly([1, 1], 7), 7)

    def test_sign_law(self, xi_three):
        """Test that the sign of the permutation is the Legendre symbol of the norm."""
        assert permutation_sign(permutation_direct(xi_three, 19)) == legendre(17, 19)
