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
This module computes the metacommutation map on the classes of Hurwitz primes above p.

Classes:

- Engine: the two ways to compute the map.
- Permutation: the map induced by xi on the p+1 classes. Immutable.

Rewriting pi * xi = xi' * pi', with N(pi) = p and N(xi) = q, sends the class of pi to the class of pi'.
The direct engine refactors pi * xi for every class; the conic engine applies the matrix of
v -> xi^-1 v xi to the conic points.
"""

import logging
from enum import Enum
from typing import Any, Dict, List, Sequence, Tuple

from metacomm.algebra.fp import phi_matrix
from metacomm.algebra.hurwitz import HurwitzInt, canonical_left_associate, gcrd, norm, right_divide_exact
from metacomm.helpers.misc import DomainError, InvariantViolation, is_prime, require_odd_prime
from metacomm.platform.classes import ConicPoint, enumerate_prime_classes, index_by_point, index_by_rep

logger = logging.getLogger(__name__)


class Engine(Enum):
    """The engine computing a metacommutation permutation."""

    DIRECT = "direct"
    CONIC = "conic"


class Permutation:
    """A permutation of the p+1 prime classes above p: image[i] is the index of the image of class i."""

    def __init__(self, p: int, image: Sequence[int], provenance: Engine = Engine.DIRECT):
        """
        Instantiate a permutation.

        :param p: the odd prime.
        :param image: the image of every class index.
        :param provenance: the engine that computed the permutation.
        """
        self._p = p
        self._image = tuple(image)
        self._provenance = provenance
        self._check_consistency()

    @classmethod
    def identity(cls, p: int, provenance: Engine = Engine.DIRECT) -> 'Permutation':
        """The identity on the p+1 classes."""
        return cls(p, range(p + 1), provenance)

    @property
    def p(self) -> int:
        """The odd prime."""
        return self._p

    @property
    def image(self) -> Tuple[int, ...]:
        """The image of every class index."""
        return self._image

    @property
    def provenance(self) -> Engine:
        """The engine that computed the permutation."""
        return self._provenance

    @property
    def is_identity(self) -> bool:
        """Whether every class is fixed."""
        return all(i == j for i, j in enumerate(self._image))

    @property
    def fixed_points(self) -> List[int]:
        """The fixed class indices."""
        return [i for i, j in enumerate(self._image) if i == j]

    def _check_consistency(self) -> None:
        """
        Check that the image is a bijection of the p+1 classes.

        :return: None
        :raises: AssertionError: if some constraint is not satisfied.
        """
        assert len(self._image) == self._p + 1, "A permutation acts on exactly p+1 classes."
        assert sorted(self._image) == list(range(self._p + 1)), "The image must be a bijection on the classes."

    def cycles(self) -> List[Tuple[int, ...]]:
        """
        Decompose into disjoint cycles, each starting at its smallest index, ordered by that index.

        >>> Permutation(3, [1, 0, 2, 3]).cycles()
        [(0, 1), (2,), (3,)]
        """
        visited = [False] * len(self._image)
        result = []
        for start in range(len(self._image)):
            if visited[start]:
                continue
            cycle = []
            i = start
            while not visited[i]:
                visited[i] = True
                cycle.append(i)
                i = self._image[i]
            result.append(tuple(cycle))
        return result

    def to_dict(self) -> Dict[str, Any]:
        """Get a dictionary from the object."""
        return {"p": self._p, "image": list(self._image), "provenance": self._provenance.value}

    def __eq__(self, other):
        """Compare the maps; the provenance is not part of the comparison."""
        return isinstance(other, Permutation) and self._p == other.p and self._image == other.image

    def __hash__(self):
        """Hash the map."""
        return hash((self._p, self._image))

    def __str__(self):
        """Format in disjoint-cycle notation."""
        return "".join("(" + " ".join(str(i) for i in cycle) + ")" for cycle in self.cycles())

    def __repr__(self):
        """Represent the permutation."""
        return "Permutation(p={}, image={}, provenance={})".format(self._p, list(self._image), self._provenance.value)


def require_prime_xi(xi: HurwitzInt, p: int) -> int:
    """
    Check that p is an odd prime and N(xi) is a prime other than p.

    :return: the norm q of xi.
    :raises DomainError: otherwise.
    """
    require_odd_prime(p)
    q = norm(xi)
    if not is_prime(q):
        raise DomainError("N({}) = {} is not prime.".format(xi, q))
    if q == p:
        raise DomainError("N({}) must differ from p = {}.".format(xi, p))
    return q


def metacommute(pi: HurwitzInt, xi: HurwitzInt) -> Tuple[HurwitzInt, HurwitzInt]:
    """
    Rewrite pi * xi as xi' * pi' with N(pi') = N(pi) and N(xi') = N(xi).

    :param pi: a prime of norm p.
    :param xi: a prime of norm q != p.
    :return: the pair (xi', pi'), pi' being the canonical left associate of its class.
    :raises DomainError: if a norm is not prime or p = q.
    :raises InvariantViolation: if p divides pi * xi or a division is not exact.
    """
    p, q = norm(pi), norm(xi)
    if not is_prime(p):
        raise DomainError("N({}) = {} is not prime.".format(pi, p))
    if not is_prime(q):
        raise DomainError("N({}) = {} is not prime.".format(xi, q))
    if p == q:
        raise DomainError("The two norms must differ, both are {}.".format(p))

    gamma = pi * xi
    if all(x % p == 0 for x in gamma.doubled):
        raise InvariantViolation("{} divides {} * {}.".format(p, pi, xi))
    pi_prime = canonical_left_associate(gcrd(gamma, HurwitzInt.scalar(p)))
    if norm(pi_prime) != p:
        raise InvariantViolation("gcrd({}, {}) has norm {}.".format(gamma, p, norm(pi_prime)))
    xi_prime = right_divide_exact(gamma, pi_prime)
    return xi_prime, pi_prime


def permutation_direct(xi: HurwitzInt, p: int) -> Permutation:
    """
    Compute the metacommutation permutation by refactoring pi * xi for every class representative pi.

    :param xi: a prime of norm q != p.
    :param p: an odd prime.
    :return: the permutation.
    """
    require_prime_xi(xi, p)
    lookup = index_by_rep(p)
    image = []
    for cls in enumerate_prime_classes(p):
        _, pi_prime = metacommute(cls.rep, xi)
        image.append(lookup[pi_prime])
    return Permutation(p, image, Engine.DIRECT)


def permutation_conic(xi: HurwitzInt, p: int) -> Permutation:
    """
    Compute the metacommutation permutation as the action of the conjugation matrix on the conic.

    :param xi: a prime of norm q != p.
    :param p: an odd prime.
    :return: the permutation.
    :raises DomainError: if N(xi) is not a prime other than p.
    :raises InvariantViolation: if the matrix sends a conic point off the conic.
    """
    require_prime_xi(xi, p)
    matrix = phi_matrix(xi, p)
    lookup = index_by_point(p)
    image = []
    for cls in enumerate_prime_classes(p):
        x, y, z = matrix.apply(cls.point.vector)
        if (x * x + y * y + z * z) % p != 0 or (x, y, z) == (0, 0, 0):
            raise InvariantViolation("The conjugation matrix of {} sends {} to ({}, {}, {}), off the conic.".format(
                xi, cls.point, x, y, z))
        target = ConicPoint.normalize(x, y, z, p)
        image.append(lookup[target])
    try:
        return Permutation(p, image, Engine.CONIC)
    except AssertionError as e:
        raise InvariantViolation("The conic image of {} is not a bijection: {}".format(xi, e))


def compute_permutation(xi: HurwitzInt, p: int, engine: Engine = Engine.DIRECT) -> Permutation:
    """Compute the permutation with the given engine."""
    if engine == Engine.DIRECT:
        return permutation_direct(xi, p)
    return permutation_conic(xi, p)
