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
This module characterises the fixed classes of the metacommutation map by congruences.

Classes:

- DoubledCoords: the integer coordinates a' used by the proportionality congruences. Immutable.
- Method: the ways of listing fixed classes.

A class [pi] is fixed by xi exactly when pi divides pi * xi on both sides. For an odd m this
happens for some beta of norm m exactly when the coordinates of alpha and beta are proportional
modulo m.
"""

import logging
from enum import Enum
from typing import List, Tuple

from metacomm.algebra.hurwitz import HurwitzInt, UNITS, elements_of_norm, is_primitive, left_quotient, norm, \
    right_quotient
from metacomm.helpers.misc import DomainError, InvariantViolation, is_prime, require_odd_prime
from metacomm.platform.classes import enumerate_prime_classes
from metacomm.platform.metacommutation import permutation_direct

logger = logging.getLogger(__name__)

DEFAULT_MAX_M = 10 ** 6


class Method(Enum):
    """The method used to list fixed classes."""

    DIRECT = "direct"
    CONGRUENCE = "congruence"
    TRACE = "trace"


class DoubledCoords:
    """Coordinates a_i' = a_i for Lipschitz elements and a_i' = 2a_i otherwise."""

    def __init__(self, alpha: HurwitzInt):
        """
        Derive the coordinates of alpha.

        >>> DoubledCoords(HurwitzInt(1, 3, -1, 1)).values
        (1, 3, -1, 1)
        >>> DoubledCoords(HurwitzInt.from_coords(1, 2, 0, 0)).values
        (1, 2, 0, 0)
        """
        if alpha.is_lipschitz:
            self._values = tuple(x // 2 for x in alpha.doubled)
        else:
            self._values = alpha.doubled

    @property
    def values(self) -> Tuple[int, int, int, int]:
        """The coordinates (a0', a1', a2', a3')."""
        return self._values

    def proportional(self, other: 'DoubledCoords', m: int) -> bool:
        """Whether a_i' b_j' = a_j' b_i' modulo m for the six pairs i < j."""
        a, b = self._values, other.values
        return all((a[i] * b[j] - a[j] * b[i]) % m == 0 for i in range(4) for j in range(i + 1, 4))

    def proportional_to_real_part(self, other: 'DoubledCoords', m: int) -> bool:
        """
        Whether a_0' b_i' = a_i' b_0' modulo m for i = 1, 2, 3.

        When b_0' is invertible modulo m these three imply the other three.

        >>> a = DoubledCoords(HurwitzInt.from_coords(1, 2, 0, 0))
        >>> a.proportional_to_real_part(DoubledCoords(HurwitzInt.from_coords(0, 0, 1, 0)), 7)
        False
        """
        a, b = self._values, other.values
        return all((a[0] * b[i] - a[i] * b[0]) % m == 0 for i in range(1, 4))


def common_left_right_divisors(alpha: HurwitzInt, m: int, max_m: int = DEFAULT_MAX_M) -> List[HurwitzInt]:
    """
    List every beta of norm m that divides alpha both on the left and on the right.

    The elements of norm m are filtered by the proportionality congruences; each survivor is
    checked by exact division on both sides.

    :param alpha: a primitive element.
    :param m: an odd divisor of N(alpha).
    :param max_m: the largest m accepted.
    :return: the common divisors, sorted by doubled coordinates.
    :raises DomainError: if alpha is not primitive, m is even or does not divide N(alpha), or m > max_m.
    :raises InvariantViolation: if a survivor of the congruences fails to divide alpha.
    """
    if not is_primitive(alpha):
        raise DomainError("{} is not primitive.".format(alpha))
    if m < 1 or m % 2 == 0:
        raise DomainError("m must be a positive odd integer, got {}.".format(m))
    if norm(alpha) % m != 0:
        raise DomainError("m = {} does not divide N({}) = {}.".format(m, alpha, norm(alpha)))
    if m > max_m:
        raise DomainError("m = {} exceeds the enumeration cap {}.".format(m, max_m))

    a = DoubledCoords(alpha)
    result = []
    for beta in elements_of_norm(m):
        if not a.proportional(DoubledCoords(beta), m):
            continue
        if right_quotient(alpha, beta) is None or left_quotient(alpha, beta) is None:
            raise InvariantViolation("{} satisfies the congruences modulo {} but does not divide {} on both sides."
                                     .format(beta, m, alpha))
        result.append(beta)
    return result


def _check_pair(pi: HurwitzInt, xi: HurwitzInt, p: int) -> None:
    require_odd_prime(p)
    if norm(pi) != p:
        raise DomainError("N({}) = {} is not {}.".format(pi, norm(pi), p))
    q = norm(xi)
    if q == p or not is_prime(q):
        raise DomainError("N({}) = {} must be a prime other than {}.".format(xi, q, p))


def is_fixed_proportionality(pi: HurwitzInt, xi: HurwitzInt, p: int) -> bool:
    """
    Test whether [pi] is fixed by xi through the proportionality of pi * xi and pi modulo p.

    :param pi: a prime of norm p.
    :param xi: a prime of norm q != p.
    :param p: an odd prime.
    :return: True if the class of pi is fixed.
    """
    _check_pair(pi, xi, p)
    return DoubledCoords(pi * xi).proportional(DoubledCoords(pi), p)


def lipschitz_representative(pi: HurwitzInt, p: int) -> HurwitzInt:
    """
    Pick the smallest left associate of pi with integer coordinates and real part not divisible by p.

    :raises InvariantViolation: if no such associate exists.
    """
    candidates = sorted(u * pi for u in UNITS)
    for candidate in candidates:
        if candidate.is_lipschitz and (candidate.da // 2) % p != 0:
            return candidate
    raise InvariantViolation("No Lipschitz associate of {} has a real part prime to {}.".format(pi, p))


def is_fixed_trace_conditions(pi: HurwitzInt, xi: HurwitzInt, p: int) -> bool:
    """
    Test whether [pi] is fixed by xi through Re(delta_i pi xi) = 0 modulo p, i = 1, 2, 3.

    With pi = b0+b1i+b2j+b3k a Lipschitz associate, delta_1 = b1+b0i, delta_2 = b2+b0j and
    delta_3 = b3+b0k. When xi has half-integer coordinates the conditions read 2Re(delta_i pi xi) = 0.
    The associate is chosen with b0 prime to p.

    :param pi: a prime of norm p.
    :param xi: a prime of norm q != p.
    :param p: an odd prime.
    :return: True if the class of pi is fixed.
    """
    _check_pair(pi, xi, p)
    rep = lipschitz_representative(pi, p)
    b0, b1, b2, b3 = (x // 2 for x in rep.doubled)
    alpha = rep * xi
    deltas = (HurwitzInt.from_coords(b1, b0, 0, 0),
              HurwitzInt.from_coords(b2, 0, b0, 0),
              HurwitzInt.from_coords(b3, 0, 0, b0))
    for delta in deltas:
        product = delta * alpha
        value = product.da // 2 if xi.is_lipschitz else product.da
        if value % p != 0:
            return False
    return True


def fixed_classes(xi: HurwitzInt, p: int, method: Method = Method.DIRECT) -> List[int]:
    """
    List the indices of the classes fixed by xi above p.

    :param xi: a prime of norm q != p.
    :param p: an odd prime.
    :param method: direct permutation, proportionality congruences or trace conditions.
    :return: the sorted class indices.
    """
    if method == Method.DIRECT:
        return permutation_direct(xi, p).fixed_points
    test = is_fixed_proportionality if method == Method.CONGRUENCE else is_fixed_trace_conditions
    return [cls.index for cls in enumerate_prime_classes(p) if test(cls.rep, xi, p)]
