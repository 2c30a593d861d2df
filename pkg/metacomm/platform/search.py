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
This module constructs and searches quaternions xi with a prescribed metacommutation behaviour above p.

Classes:

- Goal: what a search is after.
- SearchReport: the outcome of a construction or a search. Immutable.
"""

import itertools
import logging
import math
import random
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from metacomm.algebra.hurwitz import HurwitzInt, is_integer_mod, norm, trace
from metacomm.helpers.misc import DomainError, InvariantViolation, SearchFailure, gcd_all, is_prime, \
    require_odd_prime
from metacomm.platform.cycles import cycle_structure, is_admissible_length, resultant_check
from metacomm.platform.metacommutation import Engine, compute_permutation

logger = logging.getLogger(__name__)

DEFAULT_MAX_ITERATIONS = 10 ** 6
DEFAULT_PAIR_ATTEMPTS = 200000

Triple = Tuple[int, int, int]


class Goal(Enum):
    """The goal of a search."""

    P_CYCLE = "p-cycle"
    DISTINCT_FIXED = "distinct-fixed"
    LENGTH = "length"


class SearchReport:
    """The outcome of a constructive procedure or a bounded search."""

    def __init__(self,
                 p: int,
                 goal: Goal,
                 xi: Optional[HurwitzInt] = None,
                 target_length: Optional[int] = None,
                 iterations: int = 0,
                 decomposition: Optional[Triple] = None,
                 verified: bool = False,
                 exhausted: bool = False,
                 fixed_class: Optional[int] = None):
        """
        Instantiate a search report.

        :param p: the odd prime.
        :param goal: the goal of the search.
        :param xi: the quaternion found, if any.
        :param target_length: the cycle length sought.
        :param iterations: the number of candidates examined.
        :param decomposition: the three-squares decomposition (b, c, d) used, if any.
        :param verified: whether the goal was re-checked on the computed permutation.
        :param exhausted: whether the search space was exhausted without a hit.
        :param fixed_class: the index of the fixed class of xi, when unique.
        """
        self._p = p
        self._goal = goal
        self._xi = xi
        self._target_length = target_length
        self._iterations = iterations
        self._decomposition = decomposition
        self._verified = verified
        self._exhausted = exhausted
        self._fixed_class = fixed_class
        self._check_consistency()

    @property
    def p(self) -> int:
        """The odd prime."""
        return self._p

    @property
    def goal(self) -> Goal:
        """The goal of the search."""
        return self._goal

    @property
    def xi(self) -> Optional[HurwitzInt]:
        """The quaternion found."""
        return self._xi

    @property
    def q(self) -> Optional[int]:
        """The norm of the quaternion found."""
        return norm(self._xi) if self._xi is not None else None

    @property
    def target_length(self) -> Optional[int]:
        """The cycle length sought."""
        return self._target_length

    @property
    def iterations(self) -> int:
        """The number of candidates examined."""
        return self._iterations

    @property
    def decomposition(self) -> Optional[Triple]:
        """The three-squares decomposition used."""
        return self._decomposition

    @property
    def verified(self) -> bool:
        """Whether the goal was re-checked on the computed permutation."""
        return self._verified

    @property
    def exhausted(self) -> bool:
        """Whether the search space was exhausted without a hit."""
        return self._exhausted

    @property
    def fixed_class(self) -> Optional[int]:
        """The index of the unique fixed class, if any."""
        return self._fixed_class

    def _check_consistency(self) -> None:
        """
        Check the consistency of the report.

        :return: None
        :raises: AssertionError: if some constraint is not satisfied.
        """
        assert not self._verified or self._xi is not None, "A verified report must carry a quaternion."
        assert not self._exhausted or self._xi is None, "An exhausted search has no quaternion."

    def to_dict(self) -> Dict[str, Any]:
        """Get a dictionary from the object."""
        return {
            "p": self._p,
            "goal": self._goal.value,
            "target_length": self._target_length,
            "xi": str(self._xi) if self._xi is not None else None,
            "q": self.q,
            "iterations": self._iterations,
            "decomposition": list(self._decomposition) if self._decomposition is not None else None,
            "verified": self._verified,
            "exhausted": self._exhausted,
            "fixed_class": self._fixed_class
        }

    def __eq__(self, other):
        """Compare two reports."""
        return isinstance(other, SearchReport) and self.to_dict() == other.to_dict()


def three_squares(n: int,
                  require_coprime: bool = True,
                  require_b_nonzero: bool = True,
                  require_c_nonzero: bool = True) -> Optional[Triple]:
    """
    Find the lexicographically first non-negative (b, c, d) with b^2 + c^2 + d^2 = n.

    >>> three_squares(9), three_squares(25), three_squares(7)
    ((1, 2, 2), (3, 4, 0), None)

    :param n: a positive integer.
    :param require_coprime: require gcd(b, c, d) = 1.
    :param require_b_nonzero: require b != 0.
    :param require_c_nonzero: require c != 0.
    :return: the triple, or None if no triple satisfies the constraints.
    """
    if n < 1:
        raise DomainError("Three-squares decompositions need a positive integer, got {}.".format(n))
    for b in range(0 if not require_b_nonzero else 1, math.isqrt(n) + 1):
        rest_b = n - b * b
        for c in range(0 if not require_c_nonzero else 1, math.isqrt(rest_b) + 1):
            rest = rest_b - c * c
            d = math.isqrt(rest)
            if d * d != rest:
                continue
            if require_coprime and gcd_all(b, c, d) != 1:
                continue
            return b, c, d
    return None


def _verify_p_cycle(xi: HurwitzInt, p: int, engine: Engine) -> Tuple[bool, Optional[int]]:
    """Check that xi fixes exactly one class and permutes the other p in a single cycle."""
    perm = compute_permutation(xi, p, engine)
    structure = cycle_structure(perm)
    verified = structure.fixed_count == 1 and structure.cycle_length == p
    fixed_class = perm.fixed_points[0] if structure.fixed_count == 1 else None
    if not verified:
        logger.error("{} does not induce one fixed point and a {}-cycle: {}.".format(xi, p, structure.to_dict()))
    return verified, fixed_class


def construct_p_cycle_xi(p: int,
                         max_iterations: int = DEFAULT_MAX_ITERATIONS,
                         engine: Engine = Engine.DIRECT) -> SearchReport:
    """
    Construct xi = 2+bi+cj+dk with a p-cycle above p.

    With r = p mod 8, look for the first k such that q = 4 + (8k+r)p is prime and write
    (8k+r)p = b^2+c^2+d^2 with gcd(b, c, d) = 1 and b, c != 0. Then N(xi) = q = Re(xi)^2 mod p.

    :param p: an odd prime.
    :param max_iterations: the maximum number of values of k.
    :param engine: the engine used to verify the result.
    :return: the report.
    :raises SearchFailure: if no k below the cap works.
    """
    require_odd_prime(p)
    r = p % 8
    for k in range(max_iterations):
        n = (8 * k + r) * p
        if n % 8 != 1:
            raise InvariantViolation("(8k+r)p = {} is not 1 modulo 8.".format(n))
        if not is_prime(4 + n):
            continue
        decomposition = three_squares(n)
        if decomposition is None:
            logger.warning("No admissible three-squares decomposition of {}.".format(n))
            continue
        b, c, d = decomposition
        xi = HurwitzInt.from_coords(2, b, c, d)
        verified, fixed_class = _verify_p_cycle(xi, p, engine)
        logger.debug("p={}: k={} gives xi={} of norm {}.".format(p, k, xi, norm(xi)))
        return SearchReport(p, Goal.P_CYCLE, xi=xi, target_length=p, iterations=k + 1, decomposition=decomposition,
                            verified=verified, fixed_class=fixed_class)
    raise SearchFailure("No prime 4 + (8k+{})*{} for k < {}.".format(r, p, max_iterations))


def _base_triple(p: int, triple: Triple) -> Triple:
    """Rotate (b, c, d) so that p does not divide the first entry."""
    for candidate in (triple, (triple[1], triple[0], triple[2]), (triple[2], triple[0], triple[1])):
        if candidate[0] % p != 0:
            return candidate
    raise InvariantViolation("{} divides every entry of {}.".format(p, triple))


def _derived_candidates(p: int, triple: Triple) -> List[HurwitzInt]:
    """The sign-and-swap variants of 2+bi+cj+dk with the same norm and real part."""
    b, c, d = triple
    reflected = HurwitzInt.from_coords(2, -b, c, d)
    if p % 4 == 3:
        return [reflected]
    candidates = [HurwitzInt.from_coords(2, b, -c, d)]
    if c % p == 0:
        candidates.append(HurwitzInt.from_coords(2, -c, -b, d))
    candidates.append(reflected)
    return candidates


def distinct_p_cycle_pair(p: int,
                          max_attempts: int = DEFAULT_PAIR_ATTEMPTS,
                          seed: int = 0,
                          engine: Engine = Engine.DIRECT) -> Tuple[SearchReport, SearchReport]:
    """
    Build two quaternions inducing p-cycles above p whose fixed classes differ.

    The first one comes from construct_p_cycle_xi, with its coordinates rotated if p divides b.
    The second one is a sign-and-swap variant of it; if none fixes another class, a seeded
    random search over xi with Re(xi) = 2, N(xi) = 4 mod p and N(xi) prime takes over.

    :param p: an odd prime.
    :param max_attempts: the number of random candidates of the fallback search.
    :param seed: the seed of the fallback search.
    :param engine: the engine used to verify the results.
    :return: the two reports.
    :raises SearchFailure: if the fallback search is exhausted.
    """
    constructed = construct_p_cycle_xi(p, engine=engine)
    triple = _base_triple(p, constructed.decomposition)
    if triple == constructed.decomposition:
        first = constructed
    else:
        logger.debug("p={} divides b in {}: rotating to {}.".format(p, constructed.decomposition, triple))
        xi = HurwitzInt.from_coords(2, *triple)
        verified, fixed_class = _verify_p_cycle(xi, p, engine)
        first = SearchReport(p, Goal.P_CYCLE, xi=xi, target_length=p, iterations=constructed.iterations,
                             decomposition=triple, verified=verified, fixed_class=fixed_class)

    for iteration, candidate in enumerate(_derived_candidates(p, triple), start=1):
        verified, fixed_class = _verify_p_cycle(candidate, p, engine)
        if verified and fixed_class != first.fixed_class:
            second = SearchReport(p, Goal.DISTINCT_FIXED, xi=candidate, target_length=p, iterations=iteration,
                                  verified=True, fixed_class=fixed_class)
            return first, second
        logger.warning("p={}: derived candidate {} fixes the same class.".format(p, candidate))

    rng = random.Random("{}:{}".format(seed, p))
    box = max(p, 10)
    for attempt in range(1, max_attempts + 1):
        b, c, d = (rng.randint(-box, box) for _ in range(3))
        rest = b * b + c * c + d * d
        if rest % p != 0 or not is_prime(4 + rest):
            continue
        candidate = HurwitzInt.from_coords(2, b, c, d)
        verified, fixed_class = _verify_p_cycle(candidate, p, engine)
        if verified and fixed_class != first.fixed_class:
            second = SearchReport(p, Goal.DISTINCT_FIXED, xi=candidate, target_length=p, iterations=attempt,
                                  decomposition=(b, c, d), verified=True, fixed_class=fixed_class)
            return first, second
    raise SearchFailure("No second p-cycle quaternion with another fixed class above {} in {} attempts.".format(
        p, max_attempts))


def _box(bound: int):
    """Iterate the doubled coordinates of the box |coordinate| <= bound, both parities, in lexicographic order."""
    values = range(-2 * bound, 2 * bound + 1)
    for doubled in itertools.product(values, repeat=4):
        if len({x % 2 for x in doubled}) == 1:
            yield HurwitzInt(*doubled)


def search_xi_with_length(p: int, t: int, bound: int = 2, engine: Engine = Engine.CONIC) -> SearchReport:
    """
    Scan a coordinate box for a prime xi whose non-trivial cycles above p have length t.

    Candidates are tested with the resultant criterion; the first hit is verified on its permutation.

    :param p: an odd prime.
    :param t: the cycle length sought, t > 1.
    :param bound: the box |a|, |b|, |c|, |d| <= bound.
    :param engine: the engine used to verify the hit.
    :return: the report; xi is None when t is not admissible or the box is exhausted.
    """
    require_odd_prime(p)
    if t < 2:
        raise DomainError("Cycle lengths sought must be at least 2, got {}.".format(t))
    if bound < 0:
        raise DomainError("The box bound must be non-negative, got {}.".format(bound))
    if not is_admissible_length(t, p):
        logger.info("{} is neither {} nor a divisor of {} or {}.".format(t, p, p - 1, p + 1))
        return SearchReport(p, Goal.LENGTH, target_length=t)

    iterations = 0
    for xi in _box(bound):
        q = norm(xi)
        if q % p == 0 or not is_prime(q) or is_integer_mod(xi, p):
            continue
        iterations += 1
        if not resultant_check(xi, p, t):
            continue
        structure = cycle_structure(compute_permutation(xi, p, engine))
        verified = structure.cycle_length == t
        if not verified:
            logger.error("{} passes the resultant test for t={} but has cycle length {}.".format(
                xi, t, structure.cycle_length))
        return SearchReport(p, Goal.LENGTH, xi=xi, target_length=t, iterations=iterations, verified=verified)
    return SearchReport(p, Goal.LENGTH, target_length=t, iterations=iterations, exhausted=True)


def satisfies_p_cycle_congruence(xi: HurwitzInt, p: int) -> bool:
    """Whether Re(xi)^2 = N(xi) modulo p, i.e. Tr(xi)^2 = 4N(xi)."""
    return (trace(xi) ** 2 - 4 * norm(xi)) % p == 0
