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
This module analyses the cycles of metacommutation permutations and predicts them.

Classes:

- CycleStructure: fixed points, common cycle length, cycle count and sign of a permutation. Immutable.

Three independent engines give the non-trivial cycle length: the empirical decomposition,
the gcd of f_{xi,p} with cyclotomic polynomials, and the multiplicative order of a root of f_{xi,p}.
"""

import logging
from typing import Any, Dict, List, Optional

from metacomm.algebra.fp import FpPoly, cyclotomic, f_alpha, f_poly, legendre, poly_gcd, resultant
from metacomm.algebra.hurwitz import HurwitzInt, is_integer_mod, trace
from metacomm.helpers.misc import DomainError, TheoremViolation, divisors, require_odd_prime
from metacomm.platform.metacommutation import Permutation, require_prime_xi

logger = logging.getLogger(__name__)

CLOSED_FORM_LENGTHS = (2, 3, 4, 6)


class CycleStructure:
    """The cycle type of a metacommutation permutation."""

    def __init__(self, p: int, fixed_count: int, cycle_length: Optional[int], cycle_count: int, sign: int):
        """
        Instantiate a cycle structure.

        :param p: the odd prime; the permutation acts on p+1 classes.
        :param fixed_count: the number of fixed classes.
        :param cycle_length: the common length of the non-trivial cycles, None for the identity.
        :param cycle_count: the number of non-trivial cycles.
        :param sign: the sign of the permutation.
        """
        self._p = p
        self._fixed_count = fixed_count
        self._cycle_length = cycle_length
        self._cycle_count = cycle_count
        self._sign = sign
        self._check_consistency()

    @property
    def p(self) -> int:
        """The odd prime."""
        return self._p

    @property
    def fixed_count(self) -> int:
        """The number of fixed classes."""
        return self._fixed_count

    @property
    def cycle_length(self) -> Optional[int]:
        """The common length of the non-trivial cycles; None for the identity."""
        return self._cycle_length

    @property
    def cycle_count(self) -> int:
        """The number of non-trivial cycles."""
        return self._cycle_count

    @property
    def sign(self) -> int:
        """The sign of the permutation."""
        return self._sign

    @property
    def is_identity(self) -> bool:
        """Whether all the classes are fixed."""
        return self._cycle_length is None

    def _check_consistency(self) -> None:
        """
        Check the consistency of the cycle structure.

        :return: None
        :raises: AssertionError: if some constraint is not satisfied.
        """
        assert self._sign in (1, -1), "The sign must be +1 or -1."
        if self._cycle_length is None:
            assert self._fixed_count == self._p + 1 and self._cycle_count == 0, "Only the identity has no cycle length."
        else:
            assert self._cycle_length > 1, "Non-trivial cycles have length at least 2."
            assert self._fixed_count + self._cycle_count * self._cycle_length == self._p + 1, \
                "Fixed points and cycles must cover the p+1 classes."

    def to_dict(self) -> Dict[str, Any]:
        """Get a dictionary from the object."""
        return {
            "fixed_count": self._fixed_count,
            "length": self._cycle_length,
            "cycle_count": self._cycle_count,
            "sign": self._sign
        }

    def __eq__(self, other):
        """Compare two cycle structures."""
        return isinstance(other, CycleStructure) and self._p == other.p and self.to_dict() == other.to_dict()


def permutation_sign(perm: Permutation) -> int:
    """
    Compute the sign (-1)^(n - number of cycles).

    >>> permutation_sign(Permutation(3, [1, 0, 2, 3]))
    -1
    """
    return -1 if (len(perm.image) - len(perm.cycles())) % 2 else 1


def cycle_structure(perm: Permutation) -> CycleStructure:
    """
    Decompose a permutation and check that its non-trivial cycles share one length.

    :param perm: a permutation.
    :return: the cycle structure.
    :raises TheoremViolation: if two non-trivial cycles have different lengths.
    """
    cycles = perm.cycles()
    fixed_count = sum(1 for c in cycles if len(c) == 1)
    lengths = sorted({len(c) for c in cycles if len(c) > 1})
    if len(lengths) > 1:
        raise TheoremViolation("The non-trivial cycles of {} have lengths {}.".format(perm, lengths))
    cycle_length = lengths[0] if lengths else None
    cycle_count = len(cycles) - fixed_count
    return CycleStructure(perm.p, fixed_count, cycle_length, cycle_count, permutation_sign(perm))


def _check_xi(xi: HurwitzInt, p: int) -> int:
    if p == 2:
        raise DomainError("The metacommutation map above 2 is the identity and is not analysed.")
    return require_prime_xi(xi, p)


def predicted_fixed_count(xi: HurwitzInt, p: int) -> Optional[int]:
    """
    Predict the number of fixed classes as 1 + ((Tr(xi)^2 - 4q) / p).

    :param xi: a prime of norm q != p.
    :param p: an odd prime.
    :return: 0, 1 or 2; None when xi is congruent to an integer and the map is the identity.
    :raises DomainError: if p = 2 or N(xi) is not a prime other than p.
    """
    q = _check_xi(xi, p)
    if is_integer_mod(xi, p):
        return None
    return 1 + legendre(trace(xi) ** 2 - 4 * q, p)


def _parabolic(p: int) -> FpPoly:
    """(x-1)^2 over F_p."""
    return FpPoly([1, -2, 1], p)


def admissible_lengths(p: int) -> List[int]:
    """
    List the possible non-trivial cycle lengths above p: p and the divisors > 1 of p-1 and p+1.

    >>> admissible_lengths(7)
    [2, 3, 4, 6, 7, 8]
    """
    return sorted({p} | {t for t in divisors(p - 1) + divisors(p + 1) if t > 1})


def is_admissible_length(t: int, p: int) -> bool:
    """Whether t = p or t > 1 divides p-1 or p+1."""
    return t == p or (t > 1 and ((p - 1) % t == 0 or (p + 1) % t == 0))


def predicted_cycle_length(xi: HurwitzInt, p: int) -> int:
    """
    Predict the common length of the non-trivial cycles from f_{xi,p}.

    If f = (x-1)^2 the length is p. Otherwise the length is the unique divisor t > 1 of p-1
    (two fixed points) or of p+1 (no fixed point) such that f and the t-th cyclotomic polynomial
    have a common factor.

    :param xi: a prime of norm q != p, not congruent to an integer modulo p.
    :param p: an odd prime.
    :return: the predicted length.
    :raises DomainError: if xi is congruent to an integer modulo p.
    :raises TheoremViolation: if no divisor or several divisors match.
    """
    _check_xi(xi, p)
    if is_integer_mod(xi, p):
        raise DomainError("{} is congruent to an integer modulo {}: the map is the identity.".format(xi, p))
    f = f_poly(xi, p)
    if f == _parabolic(p):
        return p
    fixed = predicted_fixed_count(xi, p)
    if fixed == 2:
        candidates = divisors(p - 1)
    elif fixed == 0:
        candidates = divisors(p + 1)
    else:
        raise TheoremViolation("One fixed point for {} above {} but f = {} is not (x-1)^2.".format(xi, p, f))

    matches = [t for t in candidates if t > 1 and not poly_gcd(f, cyclotomic(t, p)).is_one]
    if len(matches) != 1:
        raise TheoremViolation("f = {} shares a factor with the cyclotomic polynomials of orders {}.".format(f, matches))
    return matches[0]


def resultant_check(xi: HurwitzInt, p: int, t: int) -> bool:
    """
    Test whether the resultant of f_{xi,p} and the t-th cyclotomic polynomial vanishes modulo p.

    :param xi: a prime of norm q != p.
    :param p: an odd prime.
    :param t: a candidate length.
    :return: True if the resultant is zero.
    """
    return resultant(f_poly(xi, p), cyclotomic(t, p)) == 0


def closed_form_criterion(t: int, xi: HurwitzInt, p: int) -> bool:
    """
    Evaluate the congruence characterising the cycle length t in {2, 3, 4, 6}.

    - t = 2: Tr(xi) = 0, i.e. xi is pure modulo p;
    - t = 3: N(xi) = Tr(xi)^2;
    - t = 4: 2N(xi) = Tr(xi)^2;
    - t = 6: 3N(xi) = Tr(xi)^2;

    all modulo p. A length t that is neither p nor a divisor of p-1 or p+1 never occurs.

    >>> closed_form_criterion(3, HurwitzInt.from_coords(3, -2, -2, 0), 19)
    True

    :param t: the length, one of 2, 3, 4, 6.
    :param xi: a prime of norm q != p.
    :param p: an odd prime.
    :return: whether the criterion holds; False when xi is congruent to an integer.
    :raises DomainError: if t is not one of 2, 3, 4, 6.
    """
    if t not in CLOSED_FORM_LENGTHS:
        raise DomainError("Closed-form criteria exist for t in {}, got {}.".format(CLOSED_FORM_LENGTHS, t))
    q = _check_xi(xi, p)
    if is_integer_mod(xi, p) or not is_admissible_length(t, p):
        return False
    tr2 = trace(xi) ** 2
    if t == 2:
        return trace(xi) % p == 0
    factor = {3: 1, 4: 2, 6: 3}[t]
    return (factor * q - tr2) % p == 0


def length5_condition(xi: HurwitzInt, p: int) -> bool:
    """
    Test alpha^2 - alpha - 1 = 0 modulo p, with alpha = 2 - Tr(xi)^2 / N(xi).

    >>> length5_condition(HurwitzInt.from_coords(1, 2, 1, 1), 19)
    True

    :param xi: a prime of norm q != p.
    :param p: an odd prime.
    :return: whether the condition holds; False when 5 is not an admissible length above p.
    """
    _check_xi(xi, p)
    if is_integer_mod(xi, p) or not is_admissible_length(5, p):
        return False
    alpha = f_alpha(xi, p)
    return (alpha * alpha - alpha - 1) % p == 0


def root_order_oracle(f: FpPoly, p: int) -> int:
    """
    Compute the multiplicative order of a root of the quadratic f, in F_p or F_{p^2}.

    The order is the least divisor d of p^2 - 1 with x^d = 1 in F_p[x]/(f).

    >>> root_order_oracle(FpPoly([1, 1, 1], 19), 19)
    3

    :param f: a quadratic polynomial over F_p.
    :param p: an odd prime.
    :return: the order.
    :raises DomainError: if f is not quadratic, is (x-1)^2, or has no root of finite order coprime to p.
    """
    require_odd_prime(p)
    if f.p != p or f.degree != 2:
        raise DomainError("The root order oracle needs a quadratic polynomial over F_{}, got {}.".format(p, f))
    f = f.monic()
    if f == _parabolic(p):
        raise DomainError("(x-1)^2 has the order-p parabolic case: no root order applies.")
    if f == FpPoly([1, 2, 1], p):
        return 2
    x = FpPoly.x(p)
    for d in divisors(p * p - 1):
        if x.powmod(d, f).is_one:
            return d
    raise DomainError("No root of {} has an order dividing p^2 - 1.".format(f))
