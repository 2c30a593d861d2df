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
This module implements the algebra over F_p used by the cycle analysis.

Classes:

- FpPoly: a dense univariate polynomial over F_p. Immutable.
- Matrix3: a 3x3 matrix over F_p. Immutable.

Functions of note: legendre, poly_gcd, resultant, cyclotomic, f_poly, phi_matrix, rref.
"""

import logging
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np

from metacomm.algebra.hurwitz import HurwitzInt, is_integer_mod, norm, trace
from metacomm.helpers.misc import DomainError, divisors, inverse_mod, mobius, require_odd_prime

logger = logging.getLogger(__name__)


def legendre(n: int, p: int) -> int:
    """
    Compute the Legendre symbol (n/p) by Euler's criterion.

    >>> legendre(-1, 19), legendre(31, 3), legendre(0, 7)
    (-1, 1, 0)

    :param n: any integer.
    :param p: an odd prime.
    :return: -1, 0 or +1.
    :raises DomainError: if p is not an odd prime.
    """
    require_odd_prime(p)
    if n % p == 0:
        return 0
    return 1 if pow(n % p, (p - 1) // 2, p) == 1 else -1


class FpPoly:
    """A polynomial over F_p with coefficients in ascending degree and no trailing zeros."""

    def __init__(self, coeffs: Sequence[int], p: int):
        """
        Instantiate a polynomial.

        :param coeffs: the coefficients, constant term first. They are reduced modulo p.
        :param p: the modulus.
        """
        reduced = [c % p for c in coeffs]
        while reduced and reduced[-1] == 0:
            reduced.pop()
        self._coeffs = tuple(reduced)  # type: Tuple[int, ...]
        self._p = p
        self._check_consistency()

    @classmethod
    def x(cls, p: int) -> 'FpPoly':
        """The monomial x."""
        return cls([0, 1], p)

    @classmethod
    def constant(cls, c: int, p: int) -> 'FpPoly':
        """The constant polynomial c."""
        return cls([c], p)

    @property
    def p(self) -> int:
        """The modulus."""
        return self._p

    @property
    def coeffs(self) -> Tuple[int, ...]:
        """The coefficients, constant term first."""
        return self._coeffs

    @property
    def degree(self) -> int:
        """The degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def lc(self) -> int:
        """The leading coefficient (0 for the zero polynomial)."""
        return self._coeffs[-1] if self._coeffs else 0

    @property
    def is_zero(self) -> bool:
        """Whether this is the zero polynomial."""
        return not self._coeffs

    @property
    def is_one(self) -> bool:
        """Whether this is the constant 1."""
        return self._coeffs == (1,)

    def _check_consistency(self) -> None:
        assert self._p > 1, "Modulus must be at least 2."
        assert not self._coeffs or self._coeffs[-1] != 0, "Leading coefficient must be nonzero."

    def _check_same_field(self, other: 'FpPoly') -> None:
        if self._p != other.p:
            raise DomainError("Polynomials over F_{} and F_{} cannot be combined.".format(self._p, other.p))

    def __add__(self, other: 'FpPoly') -> 'FpPoly':
        """Add two polynomials."""
        self._check_same_field(other)
        size = max(len(self._coeffs), len(other.coeffs))
        a = self._coeffs + (0,) * (size - len(self._coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return FpPoly([x + y for x, y in zip(a, b)], self._p)

    def __neg__(self) -> 'FpPoly':
        """Negate."""
        return FpPoly([-c for c in self._coeffs], self._p)

    def __sub__(self, other: 'FpPoly') -> 'FpPoly':
        """Subtract two polynomials."""
        return self + (-other)

    def __mul__(self, other: 'FpPoly') -> 'FpPoly':
        """Multiply two polynomials."""
        self._check_same_field(other)
        if self.is_zero or other.is_zero:
            return FpPoly([], self._p)
        result = [0] * (len(self._coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                result[i + j] += a * b
        return FpPoly(result, self._p)

    def scale(self, c: int) -> 'FpPoly':
        """Multiply by the constant c."""
        return FpPoly([c * x for x in self._coeffs], self._p)

    def monic(self) -> 'FpPoly':
        """Scale to leading coefficient 1. The zero polynomial is returned unchanged."""
        if self.is_zero:
            return self
        return self.scale(inverse_mod(self.lc, self._p))

    def __divmod__(self, other: 'FpPoly') -> Tuple['FpPoly', 'FpPoly']:
        """
        Divide with remainder.

        :return: (quotient, remainder) with deg(remainder) < deg(other).
        :raises DomainError: if other is zero.
        """
        self._check_same_field(other)
        if other.is_zero:
            raise DomainError("Polynomial division by zero.")
        p = self._p
        remainder = list(self._coeffs)
        quotient = [0] * max(len(remainder) - other.degree, 0)
        inv_lc = inverse_mod(other.lc, p)
        for shift in range(len(remainder) - 1 - other.degree, -1, -1):
            factor = remainder[shift + other.degree] * inv_lc % p
            if factor == 0:
                continue
            quotient[shift] = factor
            for i, c in enumerate(other.coeffs):
                remainder[shift + i] = (remainder[shift + i] - factor * c) % p
        return FpPoly(quotient, p), FpPoly(remainder, p)

    def __mod__(self, other: 'FpPoly') -> 'FpPoly':
        """Remainder of the division by other."""
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        """Evaluate at x by Horner's rule."""
        result = 0
        for c in reversed(self._coeffs):
            result = (result * x + c) % self._p
        return result

    def powmod(self, exponent: int, modulus: 'FpPoly') -> 'FpPoly':
        """Compute self^exponent modulo the given polynomial by square-and-multiply."""
        result = FpPoly.constant(1, self._p) % modulus
        base = self % modulus
        while exponent > 0:
            if exponent & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            exponent >>= 1
        return result

    def __eq__(self, other):
        """Compare two polynomials."""
        return isinstance(other, FpPoly) and self._p == other.p and self._coeffs == other.coeffs

    def __hash__(self):
        """Hash the polynomial."""
        return hash((self._p, self._coeffs))

    def __str__(self):
        """
        Format the polynomial, highest degree first.

        >>> str(FpPoly([1, 15, 1], 19))
        'x^2 + 15x + 1'
        """
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                coefficient = "" if c == 1 else str(c)
                terms.append(coefficient + ("x" if i == 1 else "x^{}".format(i)))
        return " + ".join(terms)

    def __repr__(self):
        """Represent the polynomial."""
        return "FpPoly({}, {})".format(list(self._coeffs), self._p)


def poly_gcd(f: FpPoly, g: FpPoly) -> FpPoly:
    """
    Compute the monic gcd over F_p.

    >>> str(poly_gcd(FpPoly([1, 1, 1], 19), FpPoly([-1, 0, 0, 1], 19)))
    'x^2 + x + 1'

    :raises DomainError: on a modulus mismatch or if both are zero.
    """
    if f.p != g.p:
        raise DomainError("Polynomials over F_{} and F_{} have no common gcd.".format(f.p, g.p))
    if f.is_zero and g.is_zero:
        raise DomainError("gcd(0, 0) is undefined.")
    while not g.is_zero:
        f, g = g, f % g
    return f.monic()


def resultant(f: FpPoly, g: FpPoly) -> int:
    """
    Compute the resultant over F_p by the Euclidean recurrence.

    Res(f, g) = (-1)^(deg f * deg g) * lc(g)^(deg f - deg r) * Res(g, r) where r = f mod g.

    >>> resultant(FpPoly([-1, 1], 7), FpPoly([-1, 1], 7))
    0

    :raises DomainError: on a modulus mismatch.
    """
    if f.p != g.p:
        raise DomainError("Polynomials over F_{} and F_{} have no resultant.".format(f.p, g.p))
    p = f.p
    if f.is_zero or g.is_zero:
        return 0
    result = 1
    while True:
        m, n = f.degree, g.degree
        if n == 0:
            return result * pow(g.lc, m, p) % p
        if m == 0:
            return result * pow(f.lc, n, p) % p
        r = f % g
        if r.is_zero:
            return 0
        if (m * n) % 2 == 1:
            result = -result
        result = result * pow(g.lc, m - r.degree, p) % p
        f, g = g, r


def _times_x_power_minus_one(coeffs: List[int], d: int) -> List[int]:
    """Multiply an integer polynomial by x^d - 1."""
    result = [0] * (len(coeffs) + d)
    for i, c in enumerate(coeffs):
        result[i + d] += c
        result[i] -= c
    return result


def _divide_by_x_power_minus_one(coeffs: List[int], d: int) -> List[int]:
    """Divide an integer polynomial by x^d - 1, which must divide it exactly."""
    size = len(coeffs) - d
    quotient = [0] * size
    for i in range(size):
        quotient[i] = (quotient[i - d] if i >= d else 0) - coeffs[i]
    return quotient


@lru_cache(maxsize=None)
def integer_cyclotomic(t: int) -> Tuple[int, ...]:
    """
    Compute the t-th cyclotomic polynomial over the integers, as the product of (x^d - 1)^mu(t/d).

    >>> integer_cyclotomic(6)
    (1, -1, 1)

    :param t: a positive integer.
    :return: the coefficients, constant term first.
    """
    if t < 1:
        raise DomainError("Cyclotomic polynomials are indexed by positive integers, got {}.".format(t))
    numerator = [1]
    denominators = []
    for d in divisors(t):
        mu = mobius(t // d)
        if mu == 1:
            numerator = _times_x_power_minus_one(numerator, d)
        elif mu == -1:
            denominators.append(d)
    for d in denominators:
        numerator = _divide_by_x_power_minus_one(numerator, d)
    return tuple(numerator)


def cyclotomic(t: int, p: int) -> FpPoly:
    """
    Reduce the t-th cyclotomic polynomial modulo p.

    >>> str(cyclotomic(4, 19))
    'x^2 + 1'

    :param t: a positive integer.
    :param p: an odd prime.
    :raises DomainError: if t < 1 or p is not an odd prime.
    """
    require_odd_prime(p)
    return FpPoly(integer_cyclotomic(t), p)


def reduce_mod_p(xi: HurwitzInt, p: int) -> Tuple[int, int, int, int]:
    """
    Reduce the coordinates (a, b, c, d) modulo an odd p; halves become multiples of 2^-1.

    >>> reduce_mod_p(HurwitzInt(1, 1, 1, 1), 5)
    (3, 3, 3, 3)
    """
    half = (p + 1) // 2
    return tuple(x * half % p for x in xi.doubled)


def f_alpha(xi: HurwitzInt, p: int) -> int:
    """
    Compute the middle coefficient 2 - Tr(xi)^2 / N(xi) of f_{xi,p}.

    :raises DomainError: if p divides N(xi).
    """
    q = norm(xi)
    if q % p == 0:
        raise DomainError("p = {} divides N(xi) = {}.".format(p, q))
    return (2 - trace(xi) ** 2 * inverse_mod(q, p)) % p


def f_poly(xi: HurwitzInt, p: int) -> FpPoly:
    """
    Build x^2 + (2 - Tr(xi)^2 / q) x + 1 over F_p, with q = N(xi).

    >>> str(f_poly(HurwitzInt.from_coords(1, 2, 1, 1), 19))
    'x^2 + 15x + 1'

    :param xi: an element whose norm is not divisible by p.
    :param p: an odd prime.
    :raises DomainError: if p divides N(xi).
    """
    require_odd_prime(p)
    if is_integer_mod(xi, p):
        logger.warning("{} is congruent to a rational integer modulo {}.".format(xi, p))
    return FpPoly([1, f_alpha(xi, p), 1], p)


class Matrix3:
    """A 3x3 matrix over F_p, stored as a numpy object array."""

    def __init__(self, entries: Sequence[Sequence[int]], p: int):
        """
        Instantiate a matrix.

        :param entries: three rows of three integers; they are reduced modulo p.
        :param p: the modulus.
        """
        self._p = p
        self._array = np.array([[int(x) % p for x in row] for row in entries], dtype=object)
        self._check_consistency()

    @classmethod
    def identity(cls, p: int) -> 'Matrix3':
        """The identity matrix."""
        return cls([[1, 0, 0], [0, 1, 0], [0, 0, 1]], p)

    @property
    def p(self) -> int:
        """The modulus."""
        return self._p

    @property
    def entries(self) -> Tuple[Tuple[int, ...], ...]:
        """The entries, row-major."""
        return tuple(tuple(row) for row in self._array.tolist())

    def _check_consistency(self) -> None:
        assert self._array.shape == (3, 3), "A Matrix3 has three rows of three entries."

    def apply(self, v: Sequence[int]) -> Tuple[int, int, int]:
        """Multiply the column vector v."""
        return tuple(int(x) % self._p for x in self._array.dot(np.array(list(v), dtype=object)))

    def __matmul__(self, other: 'Matrix3') -> 'Matrix3':
        """Multiply two matrices."""
        return Matrix3(self._array.dot(other._array).tolist(), self._p)

    def transpose(self) -> 'Matrix3':
        """Transpose."""
        return Matrix3(self._array.T.tolist(), self._p)

    def trace(self) -> int:
        """Sum of the diagonal entries."""
        return sum(self._array[i, i] for i in range(3)) % self._p

    def det(self) -> int:
        """Determinant by cofactor expansion."""
        m = self._array
        value = (m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
                 - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
                 + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0]))
        return value % self._p

    def char_poly(self) -> FpPoly:
        """
        Characteristic polynomial x^3 - tr x^2 + s x - det, s being the sum of the principal 2x2 minors.

        >>> str(Matrix3.identity(5).char_poly())
        'x^3 + 2x^2 + 3x + 4'
        """
        m = self._array
        minors = (m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
                  + m[0, 0] * m[2, 2] - m[0, 2] * m[2, 0]
                  + m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        return FpPoly([-self.det(), minors, -self.trace(), 1], self._p)

    @property
    def is_identity(self) -> bool:
        """Whether this is the identity matrix."""
        return self == Matrix3.identity(self._p)

    def __eq__(self, other):
        """Compare two matrices."""
        return isinstance(other, Matrix3) and self._p == other.p and self.entries == other.entries

    def __hash__(self):
        """Hash the matrix."""
        return hash((self._p, self.entries))

    def __repr__(self):
        """Represent the matrix."""
        return "Matrix3({}, {})".format([list(row) for row in self.entries], self._p)


def phi_matrix(xi: HurwitzInt, p: int) -> Matrix3:
    """
    Build the matrix of v -> xi^-1 v xi on pure quaternions modulo p, acting on column vectors (x, y, z).

    >>> phi_matrix(HurwitzInt.from_coords(0, 1, 0, 0), 5).entries
    ((1, 0, 0), (0, 4, 0), (0, 0, 4))

    :param xi: an element whose norm q is not divisible by p.
    :param p: an odd prime.
    :raises DomainError: if p divides q.
    """
    require_odd_prime(p)
    q = norm(xi)
    if q % p == 0:
        raise DomainError("p = {} divides N(xi) = {}.".format(p, q))
    a, b, c, d = reduce_mod_p(xi, p)
    rows = [
        [a * a + b * b - c * c - d * d, 2 * a * d + 2 * b * c, -2 * a * c + 2 * b * d],
        [-2 * a * d + 2 * b * c, a * a - b * b + c * c - d * d, 2 * a * b + 2 * c * d],
        [2 * a * c + 2 * b * d, -2 * a * b + 2 * c * d, a * a - b * b - c * c + d * d],
    ]
    inverse_q = inverse_mod(q, p)
    return Matrix3([[x * inverse_q for x in row] for row in rows], p)


def rref(rows: Sequence[Sequence[int]], p: int) -> Tuple[List[List[int]], List[int]]:
    """
    Row-reduce a matrix over F_p.

    >>> rref([[1, 2], [2, 4]], 5)
    ([[1, 2]], [0])

    :param rows: the rows of the matrix.
    :param p: a prime modulus.
    :return: the nonzero rows of the reduced row echelon form and their pivot columns.
    """
    matrix = [[x % p for x in row] for row in rows]
    pivots = []  # type: List[int]
    rank = 0
    width = len(matrix[0]) if matrix else 0
    for column in range(width):
        pivot_row = next((r for r in range(rank, len(matrix)) if matrix[r][column] != 0), None)
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        inv = inverse_mod(matrix[rank][column], p)
        matrix[rank] = [x * inv % p for x in matrix[rank]]
        for r in range(len(matrix)):
            if r != rank and matrix[r][column] != 0:
                factor = matrix[r][column]
                matrix[r] = [(x - factor * y) % p for x, y in zip(matrix[r], matrix[rank])]
        pivots.append(column)
        rank += 1
    return matrix[:rank], pivots
