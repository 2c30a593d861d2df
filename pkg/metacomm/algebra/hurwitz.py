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
This module implements exact arithmetic in the Hurwitz order.

Classes:

- HurwitzInt: an element of the Hurwitz order, stored by doubled coordinates. Immutable.

Elements are written a+bi+cj+dk where either all of a, b, c, d are integers
(Lipschitz elements) or all of them are halves of odd integers. Storing
(2a, 2b, 2c, 2d) keeps every operation in the integers.
"""

import itertools
import logging
import math
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from metacomm.helpers.misc import DomainError, InvariantViolation, gcd_all

logger = logging.getLogger(__name__)

Doubled = Tuple[int, int, int, int]


class HurwitzInt:
    """An element of the Hurwitz order, stored by its doubled coordinates (2a, 2b, 2c, 2d)."""

    def __init__(self, da: int, db: int, dc: int, dd: int):
        """
        Instantiate a Hurwitz integer from doubled coordinates.

        >>> HurwitzInt(1, 1, 1, 1)
        HurwitzInt('1/2,1/2,1/2,1/2')

        :param da: twice the real part.
        :param db: twice the i coordinate.
        :param dc: twice the j coordinate.
        :param dd: twice the k coordinate.
        """
        self._doubled = (da, db, dc, dd)  # type: Doubled
        self._check_consistency()

    @classmethod
    def from_coords(cls, a: int, b: int, c: int, d: int) -> 'HurwitzInt':
        """
        Build a Lipschitz element a+bi+cj+dk from integer coordinates.

        >>> str(HurwitzInt.from_coords(3, -2, -2, 0))
        '3,-2,-2,0'
        """
        return cls(2 * a, 2 * b, 2 * c, 2 * d)

    @classmethod
    def scalar(cls, n: int) -> 'HurwitzInt':
        """Build the rational integer n."""
        return cls(2 * n, 0, 0, 0)

    @classmethod
    def parse(cls, text: str) -> 'HurwitzInt':
        """
        Parse the text format 'a,b,c,d', where every entry is an integer or a half-integer 'n/2'.

        >>> HurwitzInt.parse("1/2,-1/2,1/2,3/2").doubled
        (1, -1, 1, 3)

        :param text: the quaternion literal.
        :return: the Hurwitz integer.
        :raises DomainError: if the literal is malformed or not in the Hurwitz order.
        """
        entries = [e.strip() for e in text.split(",")]
        if len(entries) != 4:
            raise DomainError("A quaternion literal needs four comma-separated entries, got {!r}.".format(text))
        doubled = []
        for entry in entries:
            try:
                value = 2 * Fraction(entry)
            except (ValueError, ZeroDivisionError):
                raise DomainError("Cannot read {!r} as an integer or a half-integer.".format(entry))
            if value.denominator != 1:
                raise DomainError("{!r} is neither an integer nor a half-integer.".format(entry))
            doubled.append(value.numerator)
        if len({x % 2 for x in doubled}) != 1:
            raise DomainError("Coordinates of {!r} must be all integers or all halves of odd integers.".format(text))
        return cls(*doubled)

    @property
    def da(self) -> int:
        """Twice the real part."""
        return self._doubled[0]

    @property
    def db(self) -> int:
        """Twice the i coordinate."""
        return self._doubled[1]

    @property
    def dc(self) -> int:
        """Twice the j coordinate."""
        return self._doubled[2]

    @property
    def dd(self) -> int:
        """Twice the k coordinate."""
        return self._doubled[3]

    @property
    def doubled(self) -> Doubled:
        """The doubled coordinates as a tuple."""
        return self._doubled

    @property
    def coords(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        """The coordinates (a, b, c, d) as fractions."""
        return tuple(Fraction(x, 2) for x in self._doubled)

    @property
    def is_lipschitz(self) -> bool:
        """Whether all the coordinates are integers."""
        return self.da % 2 == 0

    @property
    def is_zero(self) -> bool:
        """Whether the element is zero."""
        return not any(self._doubled)

    def _check_consistency(self) -> None:
        """
        Check the consistency of the doubled coordinates.

        :return: None
        :raises: AssertionError: if some constraint is not satisfied.
        """
        assert all(isinstance(x, int) for x in self._doubled), "Doubled coordinates must be integers."
        assert len({x % 2 for x in self._doubled}) == 1, "Doubled coordinates must share the same parity."

    def __add__(self, other: 'HurwitzInt') -> 'HurwitzInt':
        """Add two elements."""
        return HurwitzInt(*(x + y for x, y in zip(self._doubled, other.doubled)))

    def __sub__(self, other: 'HurwitzInt') -> 'HurwitzInt':
        """Subtract two elements."""
        return HurwitzInt(*(x - y for x, y in zip(self._doubled, other.doubled)))

    def __neg__(self) -> 'HurwitzInt':
        """Negate the element."""
        return HurwitzInt(*(-x for x in self._doubled))

    def __mul__(self, other: 'HurwitzInt') -> 'HurwitzInt':
        """Multiply two elements (quaternion product, not commutative)."""
        return mul(self, other)

    def __eq__(self, other):
        """Compare two elements."""
        return isinstance(other, HurwitzInt) and self._doubled == other.doubled

    def __hash__(self):
        """Hash the doubled coordinates."""
        return hash(self._doubled)

    def __lt__(self, other: 'HurwitzInt') -> bool:
        """Order elements lexicographically on the doubled coordinates."""
        return self._doubled < other.doubled

    def __str__(self):
        """Format the element as 'a,b,c,d'."""
        return format_hurwitz(self)

    def __repr__(self):
        """Represent the element by its literal."""
        return "HurwitzInt({!r})".format(format_hurwitz(self))


def format_hurwitz(alpha: HurwitzInt) -> str:
    """
    Format an element in the 'a,b,c,d' text format.

    >>> format_hurwitz(HurwitzInt(-1, 1, 3, 1))
    '-1/2,1/2,3/2,1/2'
    """
    if alpha.is_lipschitz:
        return ",".join(str(x // 2) for x in alpha.doubled)
    return ",".join("{}/2".format(x) for x in alpha.doubled)


def mul(alpha: HurwitzInt, beta: HurwitzInt) -> HurwitzInt:
    """
    Multiply two Hurwitz integers.

    >>> str(HurwitzInt.from_coords(0, 1, 0, 0) * HurwitzInt.from_coords(0, 0, 1, 0))
    '0,0,0,1'

    :param alpha: the left factor.
    :param beta: the right factor.
    :return: the product alpha * beta.
    """
    a, b, c, d = alpha.doubled
    e, f, g, h = beta.doubled
    p = a * e - b * f - c * g - d * h
    q = a * f + b * e + c * h - d * g
    r = a * g - b * h + c * e + d * f
    s = a * h + b * g - c * f + d * e
    # the product of doubled coordinates is four times the product; all four entries are even
    return HurwitzInt(p // 2, q // 2, r // 2, s // 2)


def conj(alpha: HurwitzInt) -> HurwitzInt:
    """Conjugate: a+bi+cj+dk -> a-bi-cj-dk."""
    return HurwitzInt(alpha.da, -alpha.db, -alpha.dc, -alpha.dd)


def norm(alpha: HurwitzInt) -> int:
    """
    Compute the norm a^2+b^2+c^2+d^2.

    >>> norm(HurwitzInt.from_coords(1, 2, 1, 1))
    7
    """
    return sum(x * x for x in alpha.doubled) // 4


def trace(alpha: HurwitzInt) -> int:
    """Compute the reduced trace 2a."""
    return alpha.da


def vector_part(alpha: HurwitzInt) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """
    Compute the pure part bi+cj+dk as rational coordinates.

    The pure part of a non-Lipschitz element is not in the Hurwitz order,
    hence the rational representation.

    >>> vector_part(HurwitzInt(1, 1, 1, 1))
    (Fraction(0, 1), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))
    """
    _, b, c, d = alpha.coords
    return Fraction(0), b, c, d


def content(alpha: HurwitzInt) -> int:
    """
    Compute the largest m such that alpha = m * beta with beta in the Hurwitz order.

    >>> content(HurwitzInt.from_coords(1, 1, 1, 1))
    2
    >>> content(HurwitzInt.from_coords(2, 2, 0, 0))
    2

    :param alpha: a nonzero element.
    :return: the content.
    :raises DomainError: if alpha is zero.
    """
    if alpha.is_zero:
        raise DomainError("The content of zero is undefined.")
    g = gcd_all(*alpha.doubled)
    if len({(x // g) % 2 for x in alpha.doubled}) == 1:
        return g
    return g // 2


def is_primitive(alpha: HurwitzInt) -> bool:
    """
    Check that alpha is not a multiple m * beta with m > 1.

    :param alpha: a nonzero element.
    :return: True if alpha is primitive.
    :raises DomainError: if alpha is zero.
    """
    return content(alpha) == 1


def _round_half_down(u: int, v: int) -> int:
    """Round u / v (v > 0) to the nearest integer, ties going down."""
    return (2 * u + v - 1) // (2 * v)


def _nearest_hurwitz(u: Doubled, n: int) -> HurwitzInt:
    """
    Round the rational quaternion with doubled coordinates u / n to a nearest Hurwitz integer.

    The nearest Lipschitz point and the nearest half-odd point are compared;
    ties go to the lexicographically smaller doubled tuple.
    """
    lipschitz = tuple(2 * _round_half_down(x, 2 * n) for x in u)
    half_odd = tuple(2 * _round_half_down(x - n, 2 * n) + 1 for x in u)

    def distance(candidate):
        return sum((y * n - x) ** 2 for x, y in zip(u, candidate))

    best = min((lipschitz, half_odd), key=lambda c: (distance(c), c))
    return HurwitzInt(*best)


def div_round(alpha: HurwitzInt, beta: HurwitzInt) -> Tuple[HurwitzInt, HurwitzInt]:
    """
    Divide with right remainder: alpha = q * beta + r with N(r) < N(beta).

    :param alpha: the dividend.
    :param beta: the divisor.
    :return: the pair (q, r).
    :raises DomainError: if beta is zero.
    """
    if beta.is_zero:
        raise DomainError("Division by zero.")
    n = norm(beta)
    q = _nearest_hurwitz((alpha * conj(beta)).doubled, n)
    r = alpha - q * beta
    if norm(r) >= n:
        raise InvariantViolation("Remainder {} of {} by {} is not smaller than the divisor.".format(r, alpha, beta))
    return q, r


def div_round_left(alpha: HurwitzInt, beta: HurwitzInt) -> Tuple[HurwitzInt, HurwitzInt]:
    """
    Divide with left remainder: alpha = beta * q + r with N(r) < N(beta).

    :param alpha: the dividend.
    :param beta: the divisor.
    :return: the pair (q, r).
    :raises DomainError: if beta is zero.
    """
    if beta.is_zero:
        raise DomainError("Division by zero.")
    n = norm(beta)
    q = _nearest_hurwitz((conj(beta) * alpha).doubled, n)
    r = alpha - beta * q
    if norm(r) >= n:
        raise InvariantViolation("Remainder {} of {} by {} is not smaller than the divisor.".format(r, alpha, beta))
    return q, r


def gcrd(alpha: HurwitzInt, beta: HurwitzInt) -> HurwitzInt:
    """
    Compute a greatest common right divisor, i.e. a generator of the left ideal H*alpha + H*beta.

    :param alpha: the first element.
    :param beta: the second element.
    :return: delta with H*alpha + H*beta = H*delta, defined up to a unit on the left.
    :raises DomainError: if both are zero.
    """
    if alpha.is_zero and beta.is_zero:
        raise DomainError("gcrd(0, 0) is undefined.")
    while not beta.is_zero:
        _, r = div_round(alpha, beta)
        alpha, beta = beta, r
    return alpha


def gcld(alpha: HurwitzInt, beta: HurwitzInt) -> HurwitzInt:
    """
    Compute a greatest common left divisor, i.e. a generator of the right ideal alpha*H + beta*H.

    :param alpha: the first element.
    :param beta: the second element.
    :return: delta with alpha*H + beta*H = delta*H, defined up to a unit on the right.
    :raises DomainError: if both are zero.
    """
    if alpha.is_zero and beta.is_zero:
        raise DomainError("gcld(0, 0) is undefined.")
    while not beta.is_zero:
        _, r = div_round_left(alpha, beta)
        alpha, beta = beta, r
    return alpha


def _exact_quotient(u: Doubled, n: int) -> Optional[HurwitzInt]:
    if any(x % n for x in u):
        return None
    doubled = [x // n for x in u]
    if len({x % 2 for x in doubled}) != 1:
        return None
    return HurwitzInt(*doubled)


def right_quotient(gamma: HurwitzInt, delta: HurwitzInt) -> Optional[HurwitzInt]:
    """
    Find epsilon with gamma = epsilon * delta.

    :param gamma: the dividend.
    :param delta: a nonzero divisor.
    :return: epsilon, or None if delta does not right-divide gamma.
    """
    if delta.is_zero:
        raise DomainError("Division by zero.")
    return _exact_quotient((gamma * conj(delta)).doubled, norm(delta))


def left_quotient(gamma: HurwitzInt, delta: HurwitzInt) -> Optional[HurwitzInt]:
    """
    Find epsilon with gamma = delta * epsilon.

    :param gamma: the dividend.
    :param delta: a nonzero divisor.
    :return: epsilon, or None if delta does not left-divide gamma.
    """
    if delta.is_zero:
        raise DomainError("Division by zero.")
    return _exact_quotient((conj(delta) * gamma).doubled, norm(delta))


def right_divide_exact(gamma: HurwitzInt, delta: HurwitzInt) -> HurwitzInt:
    """
    Divide gamma on the right by delta, which must divide it exactly.

    :raises InvariantViolation: if the division is not exact.
    """
    result = right_quotient(gamma, delta)
    if result is None:
        raise InvariantViolation("{} does not right-divide {}.".format(delta, gamma))
    return result


def left_divide_exact(gamma: HurwitzInt, delta: HurwitzInt) -> HurwitzInt:
    """
    Divide gamma on the left by delta, which must divide it exactly.

    :raises InvariantViolation: if the division is not exact.
    """
    result = left_quotient(gamma, delta)
    if result is None:
        raise InvariantViolation("{} does not left-divide {}.".format(delta, gamma))
    return result


def _build_units() -> Tuple[HurwitzInt, ...]:
    units = []  # type: List[HurwitzInt]
    for position in range(4):
        for sign in (1, -1):
            doubled = [0, 0, 0, 0]
            doubled[position] = 2 * sign
            units.append(HurwitzInt(*doubled))
    for signs in itertools.product((1, -1), repeat=4):
        units.append(HurwitzInt(*signs))
    return tuple(units)


UNITS = _build_units()
ONE = HurwitzInt.scalar(1)
I = HurwitzInt.from_coords(0, 1, 0, 0)  # noqa: E741
J = HurwitzInt.from_coords(0, 0, 1, 0)
K = HurwitzInt.from_coords(0, 0, 0, 1)


def left_associates(alpha: HurwitzInt) -> List[HurwitzInt]:
    """List u * alpha for the 24 units u, in unit order."""
    return [u * alpha for u in UNITS]


def canonical_left_associate(pi: HurwitzInt) -> HurwitzInt:
    """
    Pick the left associate u * pi with the lexicographically smallest doubled coordinates.

    >>> canonical_left_associate(HurwitzInt.scalar(2))
    HurwitzInt('-2,0,0,0')

    :param pi: a nonzero element.
    :return: the canonical representative of the class of pi.
    :raises DomainError: if pi is zero.
    """
    if pi.is_zero:
        raise DomainError("Zero has no canonical left associate.")
    return min(left_associates(pi))


def is_integer_mod(alpha: HurwitzInt, p: int) -> bool:
    """Whether alpha is congruent to a rational integer modulo the odd integer p."""
    return alpha.db % p == 0 and alpha.dc % p == 0 and alpha.dd % p == 0


def doubled_of_norm(n: int) -> np.ndarray:
    """
    Enumerate the doubled coordinates of every Hurwitz integer of norm n.

    The doubled coordinates solve x0^2 + x1^2 + x2^2 + x3^2 = 4n with a common parity.
    The last coordinate is found by a vectorised square test over a grid of the middle two.

    :param n: a positive integer.
    :return: an (N, 4) integer array, rows in lexicographic order.
    """
    if n < 1:
        raise DomainError("Norm must be positive, got {}.".format(n))
    total = 4 * n
    bound = math.isqrt(total)
    found = []  # type: List[Doubled]
    for parity in (0, 1):
        values = np.array([v for v in range(-bound, bound + 1) if v % 2 == parity], dtype=np.int64)
        if values.size == 0:
            continue
        grid_b, grid_c = np.meshgrid(values, values, indexing="ij")
        partial = grid_b * grid_b + grid_c * grid_c
        for x0 in values.tolist():
            rest = total - x0 * x0 - partial
            roots = np.rint(np.sqrt(np.maximum(rest, 0))).astype(np.int64)
            mask = (rest >= 0) & (roots * roots == rest) & (roots % 2 == parity)
            for x1, x2, x3 in zip(grid_b[mask].tolist(), grid_c[mask].tolist(), roots[mask].tolist()):
                found.append((x0, x1, x2, x3))
                if x3 != 0:
                    found.append((x0, x1, x2, -x3))
    return np.array(sorted(found), dtype=np.int64).reshape(-1, 4)


def elements_of_norm(n: int) -> List[HurwitzInt]:
    """
    Enumerate every Hurwitz integer of norm n, in lexicographic order of doubled coordinates.

    >>> len(elements_of_norm(1))
    24

    :param n: a positive integer.
    :return: the sorted list of elements.
    """
    return [HurwitzInt(*row) for row in doubled_of_norm(n).tolist()]


def _left_multiplication_matrix(u: HurwitzInt) -> np.ndarray:
    """The matrix M with M @ doubled(alpha) = 2 * doubled(u * alpha)."""
    a, b, c, d = u.doubled
    return np.array([[a, -b, -c, -d],
                     [b, a, -d, c],
                     [c, d, a, -b],
                     [d, -c, b, a]], dtype=np.int64)


UNIT_MATRICES = np.stack([_left_multiplication_matrix(u) for u in UNITS])


def canonical_left_associates(doubled: np.ndarray) -> np.ndarray:
    """
    Apply canonical_left_associate to every row of an array of doubled coordinates.

    Each 4-tuple is packed into one integer whose order is the lexicographic order,
    so the minimum over the 24 associates is a single argmin.

    >>> canonical_left_associates(np.array([[4, 0, 0, 0], [0, 2, 2, 0]])).tolist()
    [[-4, 0, 0, 0], [-2, -2, 0, 0]]

    :param doubled: an (N, 4) integer array of nonzero elements.
    :return: the (N, 4) array of their canonical representatives.
    :raises DomainError: if the coordinates are too large to pack.
    """
    doubled = np.asarray(doubled, dtype=np.int64).reshape(-1, 4)
    if doubled.shape[0] == 0:
        return doubled
    images = np.einsum("uij,nj->uni", UNIT_MATRICES, doubled) // 2
    offset = int(np.abs(images).max()) + 1
    base = 2 * offset + 1
    if base ** 4 >= 2 ** 62:
        raise DomainError("Coordinates up to {} are too large to compare in packed form.".format(offset - 1))
    keys = np.zeros(images.shape[:2], dtype=np.int64)
    for column in range(4):
        keys = keys * base + (images[:, :, column] + offset)
    best = np.argmin(keys, axis=0)
    return images[best, np.arange(doubled.shape[0])]
