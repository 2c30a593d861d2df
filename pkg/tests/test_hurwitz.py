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

"""This module contains the tests of the algebra.hurwitz module."""

from fractions import Fraction

import numpy as np
import pytest

from metacomm.algebra.hurwitz import HurwitzInt, I, J, K, ONE, UNITS, canonical_left_associate, \
    canonical_left_associates, conj, content, div_round, div_round_left, doubled_of_norm, elements_of_norm, gcld, \
    gcrd, is_integer_mod, is_primitive, left_associates, left_quotient, norm, \
    right_divide_exact, right_quotient, trace, vector_part
from metacomm.helpers.misc import DomainError, InvariantViolation, divisors
from tests.conftest import random_hurwitz, random_nonzero_hurwitz


class TestHurwitzInt:
    """Class to test the HurwitzInt object."""

    def test_from_coords_doubles_the_coordinates(self):
        """Test that from_coords stores doubled coordinates."""
        alpha = HurwitzInt.from_coords(3, -2, -2, 0)
        assert alpha.doubled == (6, -4, -4, 0)
        assert alpha.is_lipschitz
        assert alpha.coords == (3, -2, -2, 0)

    def test_mixed_parity_raises_exception(self):
        """Test that doubled coordinates of mixed parity are rejected."""
        with pytest.raises(AssertionError, match="same parity"):
            HurwitzInt(1, 2, 1, 1)

    def test_parse(self):
        """Test parsing of integer and half-integer literals."""
        assert HurwitzInt.parse("1,2,1,1") == HurwitzInt.from_coords(1, 2, 1, 1)
        assert HurwitzInt.parse(" -1/2, 1/2 ,1/2,3/2") == HurwitzInt(-1, 1, 1, 3)
        assert HurwitzInt.parse("2/2,0,0,0") == ONE

    @pytest.mark.parametrize("text", ["1,2,3", "1,2,3,4,5", "1/2,1,1,1", "1/3,0,0,0", "a,b,c,d", "1/0,0,0,0"])
    def test_parse_malformed_raises_exception(self, text):
        """Test that malformed literals raise a DomainError."""
        with pytest.raises(DomainError):
            HurwitzInt.parse(text)

    def test_str_is_parseable(self):
        """Test that the text format of an element reads back to the same element."""
        for alpha in (HurwitzInt(-1, 1, 3, 1), HurwitzInt.from_coords(3, -2, -2, 0), HurwitzInt(0, 0, 0, 0)):
            assert HurwitzInt.parse(str(alpha)) == alpha

    def test_ordering_is_lexicographic(self):
        """Test the ordering on doubled coordinates."""
        assert HurwitzInt(-2, 0, 0, 0) < HurwitzInt(-1, 1, 1, 1) < ONE
        assert sorted([ONE, I, -ONE]) == [-ONE, I, ONE]

    def test_hash_matches_equality(self):
        """Test that equal elements hash equally."""
        assert len({HurwitzInt(1, 1, 1, 1), HurwitzInt.parse("1/2,1/2,1/2,1/2")}) == 1


class TestArithmetic:
    """Class to test products, norms and traces."""

    def test_basis_products(self):
        """Test the Hamilton relations."""
        assert I * J == K
        assert J * K == I
        assert K * I == J
        assert J * I == -K
        assert I * I == -ONE

    def test_half_unit_square(self):
        """Test ((1+i+j+k)/2)^2 = (-1+i+j+k)/2."""
        omega = HurwitzInt(1, 1, 1, 1)
        assert omega * omega == HurwitzInt(-1, 1, 1, 1)

    def test_norm_and_trace(self):
        """Test the norm and the reduced trace."""
        assert norm(HurwitzInt.from_coords(1, 2, 1, 1)) == 7
        assert norm(HurwitzInt.from_coords(3, -2, -2, 0)) == 17
        assert norm(HurwitzInt(1, 1, 1, 1)) == 1
        assert trace(HurwitzInt(1, 1, 1, 1)) == 1
        assert trace(HurwitzInt.from_coords(3, -2, -2, 0)) == 6

    def test_conj(self):
        """Test that alpha * conj(alpha) is the norm."""
        alpha = HurwitzInt.from_coords(1, 1, 1, 0)
        assert conj(I) == -I
        assert alpha * conj(alpha) == HurwitzInt.scalar(3)

    def test_norm_is_multiplicative(self, rng):
        """Test N(alpha beta) = N(alpha) N(beta) on random pairs."""
        for _ in range(300):
            alpha, beta = random_hurwitz(rng, 50), random_hurwitz(rng, 50)
            assert norm(alpha * beta) == norm(alpha) * norm(beta)

    def test_conj_is_an_anti_homomorphism(self, rng):
        """Test conj(alpha beta) = conj(beta) conj(alpha)."""
        for _ in range(300):
            alpha, beta = random_hurwitz(rng, 20), random_hurwitz(rng, 20)
            assert conj(alpha * beta) == conj(beta) * conj(alpha)

    def test_product_is_associative(self, rng):
        """Test associativity on random triples."""
        for _ in range(100):
            alpha, beta, gamma = (random_hurwitz(rng, 10) for _ in range(3))
            assert (alpha * beta) * gamma == alpha * (beta * gamma)

    def test_vector_part_is_rational(self):
        """Test that the pure part is always given as fractions."""
        assert vector_part(HurwitzInt.from_coords(3, -2, -2, 0)) == (0, -2, -2, 0)
        assert vector_part(HurwitzInt(1, 1, -1, 3)) == (0, Fraction(1, 2), Fraction(-1, 2), Fraction(3, 2))
        assert all(isinstance(x, Fraction) for x in vector_part(ONE))

    def test_content(self):
        """Test the content of some elements."""
        assert content(HurwitzInt.from_coords(3, 3, 3, 3)) == 6
        assert content(HurwitzInt.from_coords(1, 2, 1, 1)) == 1
        assert content(HurwitzInt(3, 3, 3, 3)) == 3
        assert content(HurwitzInt.from_coords(3, 0, 0, 0)) == 3

    def test_is_primitive(self):
        """Test primitivity."""
        assert is_primitive(HurwitzInt.from_coords(1, 2, 1, 1))
        assert is_primitive(HurwitzInt(1, 1, 1, 1))
        assert not is_primitive(HurwitzInt.from_coords(1, 1, 1, 1))

    def test_content_of_zero_raises_exception(self):
        """Test that the content of zero is undefined."""
        with pytest.raises(DomainError):
            is_primitive(HurwitzInt(0, 0, 0, 0))

    def test_is_integer_mod(self):
        """Test the congruence to a rational integer."""
        assert is_integer_mod(HurwitzInt.from_coords(2, 3, 3, 3), 3)
        assert not is_integer_mod(HurwitzInt.from_coords(2, 3, 3, 1), 3)
        assert is_integer_mod(HurwitzInt(5, 3, 3, 3), 3)


class TestDivision:
    """Class to test divisions with remainder and exact divisions."""

    def test_div_round_contract(self, rng):
        """Test alpha = q beta + r with N(r) < N(beta) on random pairs."""
        for _ in range(300):
            alpha, beta = random_hurwitz(rng, 40), random_nonzero_hurwitz(rng, 8)
            q, r = div_round(alpha, beta)
            assert alpha == q * beta + r
            assert norm(r) < norm(beta)

    def test_div_round_left_contract(self, rng):
        """Test alpha = beta q + r with N(r) < N(beta) on random pairs."""
        for _ in range(300):
            alpha, beta = random_hurwitz(rng, 40), random_nonzero_hurwitz(rng, 8)
            q, r = div_round_left(alpha, beta)
            assert alpha == beta * q + r
            assert norm(r) < norm(beta)

    def test_div_round_by_itself(self):
        """Test that alpha / alpha gives (1, 0)."""
        alpha = HurwitzInt.from_coords(1, 2, 1, 1)
        assert div_round(alpha, alpha) == (ONE, HurwitzInt(0, 0, 0, 0))

    def test_div_round_by_a_unit_is_exact(self):
        """Test that dividing by a unit leaves no remainder."""
        alpha = HurwitzInt.from_coords(5, -3, 2, 7)
        for u in UNITS:
            _, r = div_round(alpha, u)
            assert r.is_zero

    def test_division_by_zero_raises_exception(self):
        """Test that beta = 0 raises a DomainError."""
        zero = HurwitzInt(0, 0, 0, 0)
        with pytest.raises(DomainError):
            div_round(ONE, zero)
        with pytest.raises(DomainError):
            div_round_left(ONE, zero)
        with pytest.raises(DomainError):
            right_quotient(ONE, zero)

    def test_exact_quotients(self, rng):
        """Test that right and left quotients recover the cofactor."""
        for _ in range(200):
            alpha, beta = random_nonzero_hurwitz(rng, 10), random_nonzero_hurwitz(rng, 10)
            assert right_quotient(alpha * beta, beta) == alpha
            assert left_quotient(alpha * beta, alpha) == beta

    def test_non_divisor_gives_none(self):
        """Test that a non-divisor is detected."""
        assert right_quotient(HurwitzInt.from_coords(1, 2, 1, 1), HurwitzInt.from_coords(1, 1, 1, 0)) is None
        with pytest.raises(InvariantViolation):
            right_divide_exact(HurwitzInt.from_coords(1, 2, 1, 1), HurwitzInt.from_coords(1, 1, 1, 0))


class TestGcd:
    """Class to test greatest common divisors."""

    def test_gcrd_right_divides_both(self, rng):
        """Test that the gcrd right-divides its arguments."""
        for _ in range(200):
            alpha, beta = random_nonzero_hurwitz(rng, 30), random_nonzero_hurwitz(rng, 30)
            delta = gcrd(alpha, beta)
            assert right_quotient(alpha, delta) is not None
            assert right_quotient(beta, delta) is not None

    def test_gcld_left_divides_both(self, rng):
        """Test that the gcld left-divides its arguments."""
        for _ in range(200):
            alpha, beta = random_nonzero_hurwitz(rng, 30), random_nonzero_hurwitz(rng, 30)
            delta = gcld(alpha, beta)
            assert left_quotient(alpha, delta) is not None
            assert left_quotient(beta, delta) is not None

    def test_gcrd_is_maximal(self, rng):
        """Test that every common right divisor of maximal norm is a left-unit multiple of the gcrd."""
        for _ in range(30):
            alpha, beta = random_nonzero_hurwitz(rng, 4), random_nonzero_hurwitz(rng, 4)
            delta = gcrd(alpha, beta)
            n = norm(delta)
            g = norm(alpha)
            common = [d for m in divisors(g) if norm(beta) % m == 0 for d in elements_of_norm(m)
                      if right_quotient(alpha, d) is not None and right_quotient(beta, d) is not None]
            assert max(norm(d) for d in common) == n
            assert {canonical_left_associate(d) for d in common if norm(d) == n} == {canonical_left_associate(delta)}

    def test_gcrd_with_a_unit(self):
        """Test that gcrd(alpha, 1) is a unit."""
        assert norm(gcrd(HurwitzInt.from_coords(3, -2, -2, 0), ONE)) == 1

    def test_gcrd_of_p_with_itself(self):
        """Test that gcrd(p, p) has norm p^2."""
        assert norm(gcrd(HurwitzInt.scalar(19), HurwitzInt.scalar(19))) == 361

    def test_gcrd_recovers_a_right_factor(self):
        """Test that gcrd(pi xi, p) is a left associate of the prime of norm p on the right."""
        xi = HurwitzInt.from_coords(1, 2, 1, 1)
        pi = HurwitzInt.from_coords(1, 1, 1, 0)
        delta = gcrd(xi * pi, HurwitzInt.scalar(3))
        assert norm(delta) == 3
        assert canonical_left_associate(delta) == canonical_left_associate(pi)

    def test_gcd_of_zeros_raises_exception(self):
        """Test that gcrd(0, 0) and gcld(0, 0) are undefined."""
        zero = HurwitzInt(0, 0, 0, 0)
        with pytest.raises(DomainError):
            gcrd(zero, zero)
        with pytest.raises(DomainError):
            gcld(zero, zero)


class TestUnitsAndAssociates:
    """Class to test the units, left associates and enumerations by norm."""

    def test_units(self):
        """Test that the 24 units have norm 1 and form a group."""
        assert len(set(UNITS)) == 24
        assert all(norm(u) == 1 for u in UNITS)
        unit_set = set(UNITS)
        assert all(u * v in unit_set for u in UNITS for v in UNITS)
        assert all(conj(u) in unit_set for u in UNITS)

    def test_canonical_left_associate_is_constant_on_orbits(self):
        """Test that every left associate has the same canonical representative."""
        pi = HurwitzInt.from_coords(1, 1, 1, 0)
        canonical = canonical_left_associate(pi)
        assert all(canonical_left_associate(a) == canonical for a in left_associates(pi))
        assert canonical_left_associate(canonical) == canonical
        assert canonical in left_associates(pi)

    def test_canonical_left_associate_of_zero_raises_exception(self):
        """Test that zero has no canonical associate."""
        with pytest.raises(DomainError):
            canonical_left_associate(HurwitzInt(0, 0, 0, 0))

    @pytest.mark.parametrize("n, count", [(1, 24), (2, 24), (3, 96), (5, 144), (7, 192), (19, 480)])
    def test_elements_of_norm_count(self, n, count):
        """Test 24 times the sum of the odd divisors of n."""
        elements = elements_of_norm(n)
        assert len(elements) == count
        assert all(norm(e) == n for e in elements)
        assert elements == sorted(set(elements))

    def test_elements_of_norm_one_are_the_units(self):
        """Test that the elements of norm 1 are the units."""
        assert set(elements_of_norm(1)) == set(UNITS)

    def test_elements_of_non_positive_norm_raises_exception(self):
        """Test that n < 1 raises a DomainError."""
        with pytest.raises(DomainError):
            elements_of_norm(0)

    def test_doubled_of_norm_matches_elements_of_norm(self):
        """Test that the array rows are the doubled coordinates of the sorted elements."""
        for n in (1, 2, 3, 19, 97):
            rows = doubled_of_norm(n)
            assert rows.shape == (len(elements_of_norm(n)), 4)
            assert [tuple(row) for row in rows.tolist()] == [e.doubled for e in elements_of_norm(n)]
            assert np.all((rows * rows).sum(axis=1) == 4 * n)

    def test_canonical_left_associates_agrees_with_the_scalar_version(self, rng):
        """Test the vectorised canonical associates on random nonzero elements and on a full norm shell."""
        elements = [random_nonzero_hurwitz(rng, 20) for _ in range(300)] + elements_of_norm(29)
        result = canonical_left_associates(np.array([e.doubled for e in elements]))
        assert [HurwitzInt(*row) for row in result.tolist()] == [canonical_left_associate(e) for e in elements]

    def test_canonical_left_associates_of_an_empty_array(self):
        """Test that no rows give no rows."""
        assert canonical_left_associates(np.zeros((0, 4), dtype=np.int64)).shape == (0, 4)

    def test_canonical_left_associates_of_huge_coordinates_raises_exception(self):
        """Test that coordinates too large to pack are rejected."""
        with pytest.raises(DomainError, match="too large"):
            canonical_left_associates(np.array([[2 ** 20, 0, 0, 0]]))
