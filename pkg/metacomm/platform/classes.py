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
This module contains the classes of Hurwitz primes above an odd prime p and the conic they live on.

Classes:

- ConicPoint: a normalized point of the conic x^2+y^2+z^2 = 0 in the projective plane over F_p. Immutable.
- PrimeClass: a class of left-associate primes of norm p, with its canonical representative and conic point. Immutable.

The p+1 classes are indexed by the sort order of their conic points.
"""

import logging
from functools import lru_cache
from typing import Any, Dict, List, Tuple

import numpy as np

from metacomm.algebra.fp import reduce_mod_p, rref
from metacomm.algebra.hurwitz import HurwitzInt, I, J, K, ONE, canonical_left_associate, canonical_left_associates, \
    doubled_of_norm, gcrd, norm
from metacomm.helpers.misc import DomainError, InvariantViolation, inverse_mod, require_odd_prime

logger = logging.getLogger(__name__)

DEFAULT_MAX_P = 20000


class ConicPoint:
    """A point [x:y:z] of the conic x^2+y^2+z^2 = 0 over F_p, scaled so its first nonzero coordinate is 1."""

    def __init__(self, x: int, y: int, z: int, p: int):
        """
        Instantiate a conic point from normalized coordinates.

        :param x: the first coordinate.
        :param y: the second coordinate.
        :param z: the third coordinate.
        :param p: the modulus.
        """
        self._x = x
        self._y = y
        self._z = z
        self._p = p
        self._check_consistency()

    @classmethod
    def normalize(cls, x: int, y: int, z: int, p: int) -> 'ConicPoint':
        """
        Scale (x, y, z) so that the first nonzero coordinate is 1.

        >>> ConicPoint.normalize(2, 2, 2, 3)
        ConicPoint(1, 1, 1, p=3)

        :raises DomainError: if the vector is zero modulo p.
        """
        vector = [x % p, y % p, z % p]
        leading = next((v for v in vector if v != 0), None)
        if leading is None:
            raise DomainError("The zero vector is not a projective point.")
        inv = inverse_mod(leading, p)
        return cls(*(v * inv % p for v in vector), p=p)

    @property
    def x(self) -> int:
        """The first coordinate."""
        return self._x

    @property
    def y(self) -> int:
        """The second coordinate."""
        return self._y

    @property
    def z(self) -> int:
        """The third coordinate."""
        return self._z

    @property
    def p(self) -> int:
        """The modulus."""
        return self._p

    @property
    def vector(self) -> Tuple[int, int, int]:
        """The coordinates (x, y, z)."""
        return self._x, self._y, self._z

    def _check_consistency(self) -> None:
        """
        Check the consistency of the point.

        :return: None
        :raises: AssertionError: if some constraint is not satisfied.
        """
        assert all(0 <= v < self._p for v in self.vector), "Coordinates must be reduced modulo p."
        assert any(v != 0 for v in self.vector), "The zero vector is not a projective point."
        assert next(v for v in self.vector if v != 0) == 1, "The first nonzero coordinate must be 1."
        assert (self._x ** 2 + self._y ** 2 + self._z ** 2) % self._p == 0, "The point must lie on the conic."

    def to_dict(self) -> Dict[str, Any]:
        """Get a dictionary from the object."""
        return {"x": self._x, "y": self._y, "z": self._z, "p": self._p}

    def __eq__(self, other):
        """Compare two points."""
        return isinstance(other, ConicPoint) and self._p == other.p and self.vector == other.vector

    def __hash__(self):
        """Hash the point."""
        return hash((self._p, self.vector))

    def __lt__(self, other: 'ConicPoint') -> bool:
        """Order points lexicographically."""
        return self.vector < other.vector

    def __str__(self):
        """Format as [x:y:z]."""
        return "[{}:{}:{}]".format(*self.vector)

    def __repr__(self):
        """Represent the point."""
        return "ConicPoint({}, {}, {}, p={})".format(self._x, self._y, self._z, self._p)


class PrimeClass:
    """A left-associate class of Hurwitz primes of norm p."""

    def __init__(self, p: int, rep: HurwitzInt, point: ConicPoint, index: int):
        """
        Instantiate a prime class.

        :param p: the odd prime.
        :param rep: the canonical left associate of the class.
        :param point: the conic point of the class.
        :param index: the position of the class in the enumeration.
        """
        self._p = p
        self._rep = rep
        self._point = point
        self._index = index
        self._check_consistency()

    @property
    def p(self) -> int:
        """The odd prime."""
        return self._p

    @property
    def rep(self) -> HurwitzInt:
        """The canonical representative."""
        return self._rep

    @property
    def point(self) -> ConicPoint:
        """The conic point."""
        return self._point

    @property
    def index(self) -> int:
        """The ordinal of the class."""
        return self._index

    def _check_consistency(self) -> None:
        assert norm(self._rep) == self._p, "The representative must have norm p."
        assert canonical_left_associate(self._rep) == self._rep, "The representative must be canonical."
        assert self._point.p == self._p, "The conic point must live over F_p."

    def to_dict(self) -> Dict[str, Any]:
        """Get a dictionary from the object."""
        return {"index": self._index, "rep": str(self._rep), "point": str(self._point)}

    def __eq__(self, other):
        """Compare two classes."""
        return isinstance(other, PrimeClass) and self.to_dict() == other.to_dict() and self._p == other.p

    def __hash__(self):
        """Hash the class."""
        return hash((self._p, self._rep))

    def __repr__(self):
        """Represent the class."""
        return "PrimeClass(p={}, index={}, rep={}, point={})".format(self._p, self._index, self._rep, self._point)


def _square_roots(p: int) -> Dict[int, List[int]]:
    """Map every square of F_p to its square roots."""
    roots = {}  # type: Dict[int, List[int]]
    for r in range(p):
        roots.setdefault(r * r % p, []).append(r)
    return roots


def enumerate_conic(p: int) -> List[ConicPoint]:
    """
    List the p+1 normalized points of x^2+y^2+z^2 = 0 over F_p, sorted lexicographically.

    >>> [str(c) for c in enumerate_conic(3)]
    ['[1:1:1]', '[1:1:2]', '[1:2:1]', '[1:2:2]']

    :param p: an odd prime.
    :return: the sorted points.
    :raises DomainError: if p is not an odd prime.
    """
    require_odd_prime(p)
    return list(_conic_points(p))


@lru_cache(maxsize=64)
def _conic_points(p: int) -> Tuple[ConicPoint, ...]:
    roots = _square_roots(p)
    points = []  # type: List[ConicPoint]
    for z in roots.get(p - 1, []):
        points.append(ConicPoint(0, 1, z, p))
    for y in range(p):
        for z in roots.get((-1 - y * y) % p, []):
            points.append(ConicPoint(1, y, z, p))
    points.sort()
    if len(points) != p + 1:
        raise InvariantViolation("Found {} conic points over F_{}, expected {}.".format(len(points), p, p + 1))
    return tuple(points)


def class_to_conic(pi: HurwitzInt, p: int) -> ConicPoint:
    """
    Find the conic point of the class of pi.

    The left ideal H_p pi_p is the row space of the reductions of pi, i pi, j pi and k pi.
    It has dimension 2 and contains a unique line of trace-zero elements xi+yj+zk.

    :param pi: a prime of norm p.
    :param p: an odd prime.
    :return: the normalized point [x:y:z].
    :raises DomainError: if N(pi) != p.
    :raises InvariantViolation: if the ideal has no unique trace-zero line.
    """
    if norm(pi) != p:
        raise DomainError("N({}) = {} is not {}.".format(pi, norm(pi), p))
    rows, pivots = rref([reduce_mod_p(u * pi, p) for u in (ONE, I, J, K)], p)
    if len(rows) != 2 or pivots[0] != 0:
        raise InvariantViolation("The ideal of {} modulo {} has no unique trace-zero line (pivots {}).".format(pi, p, pivots))
    _, x, y, z = rows[1]
    point = ConicPoint.normalize(x, y, z, p)
    return point


def conic_to_class(c: ConicPoint) -> HurwitzInt:
    """
    Lift the point c to t = xi+yj+zk and generate the left ideal H t + H p.

    :param c: a point of the conic.
    :return: the canonical representative of the prime class of c.
    :raises InvariantViolation: if the generator does not have norm p.
    """
    t = HurwitzInt.from_coords(0, c.x, c.y, c.z)
    result = canonical_left_associate(gcrd(t, HurwitzInt.scalar(c.p)))
    if norm(result) != c.p:
        raise InvariantViolation("gcrd({}, {}) has norm {}.".format(t, c.p, norm(result)))
    return result


@lru_cache(maxsize=64)
def enumerate_prime_classes(p: int) -> Tuple[PrimeClass, ...]:
    """
    Enumerate the p+1 classes of Hurwitz primes of norm p.

    :param p: an odd prime.
    :return: the classes, indexed by the sort order of their conic points.
    :raises DomainError: if p is not an odd prime.
    :raises InvariantViolation: if the counts differ from 24(p+1) elements and p+1 classes.
    """
    require_odd_prime(p)
    logger.debug("Enumerating the Hurwitz primes of norm {}...".format(p))
    doubled = doubled_of_norm(p)
    if len(doubled) != 24 * (p + 1):
        raise InvariantViolation("Found {} elements of norm {}, expected {}.".format(len(doubled), p, 24 * (p + 1)))

    reps = [HurwitzInt(*row) for row in np.unique(canonical_left_associates(doubled), axis=0).tolist()]
    if len(reps) != p + 1:
        raise InvariantViolation("Found {} classes of norm {}, expected {}.".format(len(reps), p, p + 1))

    classes_by_point = sorted((class_to_conic(rep, p), rep) for rep in reps)
    result = tuple(PrimeClass(p, rep, point, index) for index, (point, rep) in enumerate(classes_by_point))
    if [cls.point for cls in result] != enumerate_conic(p):
        raise InvariantViolation("Prime classes above {} do not match the conic points.".format(p))
    logger.debug("Found {} classes above {}.".format(len(result), p))
    return result


@lru_cache(maxsize=64)
def index_by_rep(p: int) -> Dict[HurwitzInt, int]:
    """Map the canonical representatives above p to their class index."""
    return {cls.rep: cls.index for cls in enumerate_prime_classes(p)}


@lru_cache(maxsize=64)
def index_by_point(p: int) -> Dict[ConicPoint, int]:
    """Map the conic points over F_p to their class index."""
    return {cls.point: cls.index for cls in enumerate_prime_classes(p)}
