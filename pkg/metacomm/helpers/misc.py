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

"""A module containing miscellaneous methods and classes."""

import logging
from math import gcd
from typing import List

logger = logging.getLogger(__name__)

# The first twelve primes make Miller-Rabin deterministic below this bound.
MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
MILLER_RABIN_DETERMINISTIC_BOUND = 3317044064679887385961981


class MetacommError(Exception):
    """General purpose exception to detect exceptions associated with the logic of metacomm."""


class DomainError(MetacommError, ValueError):
    """An input violates the precondition of an operation."""


class InvariantViolation(MetacommError):
    """An internal invariant does not hold. This signals a bug."""


class TheoremViolation(MetacommError):
    """An empirical computation contradicts a proven statement."""


class SearchFailure(MetacommError):
    """A bounded search exhausted its budget."""


def is_prime(n: int) -> bool:
    """
    Test primality with the Miller-Rabin test on a fixed set of bases.

    The answer is exact below MILLER_RABIN_DETERMINISTIC_BOUND.

    >>> [x for x in range(30) if is_prime(x)]
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    >>> is_prime(3215031751)
    False

    :param n: the integer to test.
    :return: True if n is prime, False otherwise.
    """
    if n < 2:
        return False
    for b in MILLER_RABIN_BASES:
        if n % b == 0:
            return n == b

    if n >= MILLER_RABIN_DETERMINISTIC_BOUND:
        logger.warning("{} is beyond the deterministic range: strong probable prime test only.".format(n))

    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1

    for b in MILLER_RABIN_BASES:
        x = pow(b, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_odd_prime(p: int, name: str = "p") -> None:
    """
    Check that p is an odd prime.

    :param p: the value to check.
    :param name: the name used in the error message.
    :return: None
    :raises DomainError: if p is not an odd prime.
    """
    if not isinstance(p, int) or p == 2 or not is_prime(p):
        raise DomainError("{} must be an odd prime, got {}.".format(name, p))


def divisors(n: int) -> List[int]:
    """
    List the positive divisors of n in ascending order.

    >>> divisors(18)
    [1, 2, 3, 6, 9, 18]

    :param n: a positive integer.
    :return: the sorted list of divisors.
    """
    if n < 1:
        raise DomainError("Divisors are defined for positive integers only, got {}.".format(n))
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(n: int) -> int:
    """
    Compute the Moebius function.

    >>> [mobius(n) for n in range(1, 11)]
    [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    """
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def inverse_mod(a: int, p: int) -> int:
    """
    Invert a modulo a prime.

    :param a: the element to invert.
    :param p: a prime modulus.
    :return: the inverse of a modulo p.
    :raises DomainError: if p divides a.
    """
    if a % p == 0:
        raise DomainError("{} is not invertible modulo {}.".format(a, p))
    return pow(a % p, p - 2, p)


def gcd_all(*values: int) -> int:
    """Compute the gcd of all the values (0 for no nonzero value)."""
    result = 0
    for v in values:
        result = gcd(result, v)
    return result
