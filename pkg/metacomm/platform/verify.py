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
This module sweeps primes and sampled quaternions and checks every law of the metacommutation map.

Classes:

- VerifyConfig: the parameters of a sweep.
- CheckRecord: the outcome of one check on one (p, xi). Immutable.
- VerifyReport: the ordered records of a sweep, plus the observed cycle types.
"""

import logging
import math
import multiprocessing
import random
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from metacomm.algebra.fp import f_poly, legendre
from metacomm.algebra.hurwitz import HurwitzInt, UNITS, elements_of_norm, is_integer_mod, left_quotient, norm, \
    right_quotient
from metacomm.helpers.misc import DomainError, MetacommError, SearchFailure, is_prime
from metacomm.platform.classes import conic_to_class, enumerate_conic, enumerate_prime_classes
from metacomm.platform.cycles import CLOSED_FORM_LENGTHS, CycleStructure, admissible_lengths, \
    closed_form_criterion, cycle_structure, length5_condition, permutation_sign, predicted_cycle_length, \
    predicted_fixed_count, resultant_check, root_order_oracle
from metacomm.platform.fixed_points import DoubledCoords, Method, common_left_right_divisors, fixed_classes, \
    lipschitz_representative
from metacomm.platform.metacommutation import Permutation, permutation_conic, permutation_direct
from metacomm.platform.search import construct_p_cycle_xi, distinct_p_cycle_pair, satisfies_p_cycle_congruence

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
SKIP = "skip"

PER_PRIME_CHECKS = ("classes", "construct", "pair")
PER_SAMPLE_CHECKS = ("engines", "sign", "fixed-count", "uniform-length", "cycle-length", "closed-form",
                     "length-five", "length-four", "fixed-points", "common-divisors")
ALL_CHECKS = PER_PRIME_CHECKS + PER_SAMPLE_CHECKS

MAX_SAMPLING_ATTEMPTS = 100000


class VerifyConfig(object):
    """This class contains the parameters of a verification sweep."""

    def __init__(self, p_min: int = 3,
                 p_max: int = 100,
                 samples_per_p: int = 20,
                 seed: int = 1,
                 q_bound: int = 2000,
                 checks: Optional[Sequence[str]] = None,
                 jobs: int = 1):
        """
        Initialize the parameters of a sweep.

        :param p_min: the smallest prime considered.
        :param p_max: the largest prime considered.
        :param samples_per_p: the number of quaternions sampled for every prime.
        :param seed: the seed fixing every random choice.
        :param q_bound: the norm bound of the sampled quaternions (enlarged for large p).
        :param checks: the names of the checks to run. If None, run all of them.
        :param jobs: the number of worker processes.
        """
        self._p_min = p_min
        self._p_max = p_max
        self._samples_per_p = samples_per_p
        self._seed = seed
        self._q_bound = q_bound
        self._checks = tuple(ALL_CHECKS if checks is None else checks)
        self._jobs = jobs
        self._check_values()

    def _check_values(self) -> None:
        """
        Check constructor parameters.

        :raises DomainError: if some parameter has not the right value.
        """
        if self._p_min > self._p_max:
            raise DomainError("Empty prime range [{}, {}].".format(self._p_min, self._p_max))
        if not self.primes:
            raise DomainError("No odd prime in [{}, {}].".format(self._p_min, self._p_max))
        if self._samples_per_p < 0:
            raise DomainError("samples_per_p must be non-negative.")
        if self._q_bound < 5:
            raise DomainError("q_bound must be at least 5.")
        if self._jobs < 1:
            raise DomainError("jobs must be positive.")
        unknown = [c for c in self._checks if c not in ALL_CHECKS]
        if unknown:
            raise DomainError("Unknown checks {}; available: {}.".format(unknown, ", ".join(ALL_CHECKS)))

    @property
    def p_min(self) -> int:
        """Smallest prime considered."""
        return self._p_min

    @property
    def p_max(self) -> int:
        """Largest prime considered."""
        return self._p_max

    @property
    def primes(self) -> List[int]:
        """The odd primes of the range."""
        return [p for p in range(max(self._p_min, 3), self._p_max + 1) if is_prime(p)]

    @property
    def samples_per_p(self) -> int:
        """Number of quaternions sampled per prime."""
        return self._samples_per_p

    @property
    def seed(self) -> int:
        """Seed of the sweep."""
        return self._seed

    @property
    def q_bound(self) -> int:
        """Norm bound of the sampled quaternions."""
        return self._q_bound

    @property
    def checks(self) -> Tuple[str, ...]:
        """Names of the checks to run."""
        return self._checks

    @property
    def jobs(self) -> int:
        """Number of worker processes."""
        return self._jobs

    def to_dict(self) -> Dict[str, Any]:
        """Get a dictionary from the object."""
        return {
            "p_min": self._p_min,
            "p_max": self._p_max,
            "samples_per_p": self._samples_per_p,
            "seed": self._seed,
            "q_bound": self._q_bound,
            "checks": list(self._checks),
            "jobs": self._jobs
        }

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> 'VerifyConfig':
        """Get an object from a dictionary."""
        return cls(p_min=d.get("p_min", 3),
                   p_max=d.get("p_max", 100),
                   samples_per_p=d.get("samples_per_p", 20),
                   seed=d.get("seed", 1),
                   q_bound=d.get("q_bound", 2000),
                   checks=d.get("checks"),
                   jobs=d.get("jobs", 1))

    def __eq__(self, other):
        """Compare two configurations."""
        return isinstance(other, VerifyConfig) and self.to_dict() == other.to_dict()


class CheckRecord:
    """The outcome of one check."""

    def __init__(self, check: str, p: int, xi: Optional[HurwitzInt], status: str, detail: str = ""):
        """
        Instantiate a record.

        :param check: the name of the check.
        :param p: the odd prime.
        :param xi: the quaternion checked, None for checks on p alone.
        :param status: pass, fail or skip.
        :param detail: a counterexample or a note.
        """
        self._check = check
        self._p = p
        self._xi = xi
        self._status = status
        self._detail = detail
        assert status in (PASS, FAIL, SKIP), "Unknown status {}.".format(status)

    @property
    def check(self) -> str:
        """The name of the check."""
        return self._check

    @property
    def p(self) -> int:
        """The odd prime."""
        return self._p

    @property
    def xi(self) -> Optional[HurwitzInt]:
        """The quaternion checked."""
        return self._xi

    @property
    def status(self) -> str:
        """pass, fail or skip."""
        return self._status

    @property
    def detail(self) -> str:
        """A counterexample or a note."""
        return self._detail

    def to_dict(self) -> Dict[str, Any]:
        """Get a dictionary from the object."""
        return {
            "check": self._check,
            "p": self._p,
            "xi": str(self._xi) if self._xi is not None else None,
            "q": norm(self._xi) if self._xi is not None else None,
            "status": self._status,
            "detail": self._detail
        }

    def __eq__(self, other):
        """Compare two records."""
        return isinstance(other, CheckRecord) and self.to_dict() == other.to_dict()


class Observation:
    """The cycle type observed for one sampled (p, xi)."""

    def __init__(self, p: int, xi: HurwitzInt, structure: CycleStructure):
        """Instantiate an observation."""
        self.p = p
        self.xi = xi
        self.structure = structure


class VerifyReport:
    """The records of a sweep, ordered by (p, sample index)."""

    def __init__(self, records: List[CheckRecord], observations: Optional[List[Observation]] = None):
        """
        Instantiate a report.

        :param records: the check records.
        :param observations: the observed cycle types of the sampled quaternions.
        """
        self.records = records
        self.observations = observations if observations is not None else []

    @property
    def failures(self) -> List[CheckRecord]:
        """The failed records."""
        return [r for r in self.records if r.status == FAIL]

    @property
    def ok(self) -> bool:
        """Whether no check failed."""
        return not self.failures

    @property
    def exit_code(self) -> int:
        """0 if every check passed, 1 otherwise."""
        return 0 if self.ok else 1

    def to_records(self) -> List[Dict[str, Any]]:
        """The records as dictionaries."""
        return [r.to_dict() for r in self.records]


def sample_xi(p: int, rng: random.Random, q_bound: int) -> HurwitzInt:
    """
    Draw xi uniformly from a box of doubled coordinates, until N(xi) is a prime other than p.

    :param p: the odd prime.
    :param rng: the random generator.
    :param q_bound: the norm bound; the box grows with p so that samples exist.
    :return: the sampled quaternion.
    :raises SearchFailure: if no sample is accepted.
    """
    box = max(3, math.isqrt(max(q_bound, 4 * p)) // 2)
    for _ in range(MAX_SAMPLING_ATTEMPTS):
        parity = rng.randrange(2)
        doubled = [2 * rng.randint(-box, box - parity) + parity for _ in range(4)]
        xi = HurwitzInt(*doubled)
        q = norm(xi)
        if q != p and is_prime(q):
            return xi
    raise SearchFailure("No prime-norm quaternion sampled above {}.".format(p))


def _run(check: str, p: int, xi: Optional[HurwitzInt], body: Callable[[], Tuple[str, str]]) -> CheckRecord:
    """Run one check; errors of the package become failures."""
    try:
        status, detail = body()
    except (MetacommError, AssertionError) as e:
        status, detail = FAIL, "{}: {}".format(type(e).__name__, e)
    if status == FAIL:
        logger.error("Check {} failed for p={}, xi={}: {}".format(check, p, xi, detail))
    return CheckRecord(check, p, xi, status, detail)


def _verdict(condition: bool, detail: str) -> Tuple[str, str]:
    return (PASS, "") if condition else (FAIL, detail)


def _check_classes(p: int) -> Tuple[str, str]:
    classes = enumerate_prime_classes(p)
    points = enumerate_conic(p)
    if len(classes) != p + 1 or len(points) != p + 1:
        return FAIL, "{} classes and {} conic points above {}".format(len(classes), len(points), p)
    if len(elements_of_norm(p)) != 24 * (p + 1):
        return FAIL, "wrong number of elements of norm {}".format(p)
    for cls in classes:
        if conic_to_class(cls.point) != cls.rep:
            return FAIL, "round trip of {} gives {}".format(cls.point, conic_to_class(cls.point))
    return PASS, ""


def _check_construct(p: int) -> Tuple[str, str]:
    report = construct_p_cycle_xi(p)
    return _verdict(report.verified and satisfies_p_cycle_congruence(report.xi, p), str(report.to_dict()))


def _check_pair(p: int) -> Tuple[str, str]:
    first, second = distinct_p_cycle_pair(p)
    ok = first.verified and second.verified and first.fixed_class != second.fixed_class
    ok = ok and predicted_cycle_length(first.xi, p) == p and predicted_cycle_length(second.xi, p) == p
    return _verdict(ok, "{} / {}".format(first.to_dict(), second.to_dict()))


class _Sample:
    """The permutations and predictions of one sampled (p, xi), computed once."""

    def __init__(self, p: int, xi: HurwitzInt):
        self.p = p
        self.xi = xi
        self.q = norm(xi)
        self.identity = is_integer_mod(xi, p)
        self.direct = permutation_direct(xi, p)  # type: Permutation
        self.structure = cycle_structure(self.direct)
        self.length = self.structure.cycle_length


def _check_engines(s: _Sample) -> Tuple[str, str]:
    conic = permutation_conic(s.xi, s.p)
    return _verdict(conic == s.direct, "direct {} != conic {}".format(list(s.direct.image), list(conic.image)))


def _check_sign(s: _Sample) -> Tuple[str, str]:
    sign, expected = permutation_sign(s.direct), legendre(s.q, s.p)
    return _verdict(sign == expected, "sign {} != ({}/{}) = {}".format(sign, s.q, s.p, expected))


def _check_fixed_count(s: _Sample) -> Tuple[str, str]:
    predicted = predicted_fixed_count(s.xi, s.p)
    if predicted is None:
        return _verdict(s.direct.is_identity, "xi is an integer modulo p but the map is {}".format(s.direct))
    ok = not s.direct.is_identity and s.structure.fixed_count == predicted
    return _verdict(ok, "{} fixed classes, predicted {}".format(s.structure.fixed_count, predicted))


def _check_uniform_length(s: _Sample) -> Tuple[str, str]:
    if s.structure.is_identity:
        return SKIP, "identity"
    fixed, length, p = s.structure.fixed_count, s.length, s.p
    expected = {0: (p + 1) % length == 0, 1: length == p, 2: (p - 1) % length == 0}.get(fixed, False)
    return _verdict(expected, "{} fixed classes with cycle length {}".format(fixed, length))


def _check_cycle_length(s: _Sample) -> Tuple[str, str]:
    if s.identity:
        return SKIP, "identity"
    predicted = predicted_cycle_length(s.xi, s.p)
    f = f_poly(s.xi, s.p)
    oracle = s.p if f.coeffs == (1, s.p - 2, 1) else root_order_oracle(f, s.p)
    if not s.length == predicted == oracle:
        return FAIL, "observed {}, predicted {}, root order {}".format(s.length, predicted, oracle)
    for t in admissible_lengths(s.p):
        if resultant_check(s.xi, s.p, t) != (t == s.length):
            return FAIL, "resultant test for t={} disagrees with length {}".format(t, s.length)
    return PASS, ""


def _check_closed_form(s: _Sample) -> Tuple[str, str]:
    for t in CLOSED_FORM_LENGTHS:
        if closed_form_criterion(t, s.xi, s.p) != (s.length == t):
            return FAIL, "criterion for t={} disagrees with length {}".format(t, s.length)
    return PASS, ""


def _check_length_five(s: _Sample) -> Tuple[str, str]:
    condition = length5_condition(s.xi, s.p)
    return _verdict(condition == (s.length == 5), "condition {} with length {}".format(condition, s.length))


def _check_length_four(s: _Sample) -> Tuple[str, str]:
    if s.length != 4:
        return SKIP, "length {}".format(s.length)
    if s.p % 4 == 1:
        expected = (2, (s.p - 1) // 4)
    else:
        expected = (0, (s.p + 1) // 4)
    observed = (s.structure.fixed_count, s.structure.cycle_count)
    return _verdict(observed == expected, "observed {}, expected {}".format(observed, expected))


def _check_fixed_points(s: _Sample) -> Tuple[str, str]:
    direct = s.direct.fixed_points
    congruence = fixed_classes(s.xi, s.p, Method.CONGRUENCE)
    trace_based = fixed_classes(s.xi, s.p, Method.TRACE)
    if not direct == congruence == trace_based:
        return FAIL, "direct {}, congruence {}, trace {}".format(direct, congruence, trace_based)
    for cls in enumerate_prime_classes(s.p):
        rep = lipschitz_representative(cls.rep, s.p)
        a, b = DoubledCoords(rep * s.xi), DoubledCoords(rep)
        if a.proportional_to_real_part(b, s.p) and not a.proportional(b, s.p):
            return FAIL, "class {}: the real part congruences hold but the others do not".format(cls.index)
    predicted = predicted_fixed_count(s.xi, s.p)
    expected = s.p + 1 if predicted is None else predicted
    return _verdict(len(direct) == expected, "{} fixed classes, predicted {}".format(len(direct), expected))


def _check_common_divisors(s: _Sample, rng: random.Random) -> Tuple[str, str]:
    cls = rng.choice(enumerate_prime_classes(s.p))
    alpha = cls.rep * s.xi
    found = common_left_right_divisors(alpha, s.p)
    brute = [beta for beta in elements_of_norm(s.p)
             if right_quotient(alpha, beta) is not None and left_quotient(alpha, beta) is not None]
    if found != brute:
        return FAIL, "alpha={}: congruences give {} divisors, exhaustive division {}".format(alpha, len(found), len(brute))
    is_fixed = cls.index in s.direct.fixed_points
    contains_pi = any(u * cls.rep in found for u in UNITS)
    return _verdict(is_fixed == contains_pi, "alpha={}: class {} fixed={} but listed={}".format(
        alpha, cls.index, is_fixed, contains_pi))


_SAMPLE_CHECKS = {
    "engines": _check_engines,
    "sign": _check_sign,
    "fixed-count": _check_fixed_count,
    "uniform-length": _check_uniform_length,
    "cycle-length": _check_cycle_length,
    "closed-form": _check_closed_form,
    "length-five": _check_length_five,
    "length-four": _check_length_four,
    "fixed-points": _check_fixed_points,
}  # type: Dict[str, Callable[[_Sample], Tuple[str, str]]]

_PRIME_CHECKS = {
    "classes": _check_classes,
    "construct": _check_construct,
    "pair": _check_pair,
}  # type: Dict[str, Callable[[int], Tuple[str, str]]]


def _run_task(task: Tuple[int, int, Optional[HurwitzInt], Tuple[str, ...], int]) -> Tuple[List[CheckRecord], Optional[Observation]]:
    """
    Run the checks of one task: the per-prime checks when xi is None, the per-sample checks otherwise.

    :param task: (p, sample index, xi, checks, seed).
    :return: the records and the observed cycle type.
    """
    p, index, xi, checks, seed = task
    if xi is None:
        return [_run(c, p, None, lambda c=c: _PRIME_CHECKS[c](p)) for c in PER_PRIME_CHECKS if c in checks], None

    try:
        sample = _Sample(p, xi)
    except (MetacommError, AssertionError) as e:
        detail = "{}: {}".format(type(e).__name__, e)
        return [CheckRecord(c, p, xi, FAIL, detail) for c in PER_SAMPLE_CHECKS if c in checks], None

    records = []
    for c in PER_SAMPLE_CHECKS:
        if c not in checks:
            continue
        if c == "common-divisors":
            rng = random.Random("{}:{}:{}".format(seed, p, index))
            records.append(_run(c, p, xi, lambda: _check_common_divisors(sample, rng)))
        else:
            records.append(_run(c, p, xi, lambda c=c: _SAMPLE_CHECKS[c](sample)))
    return records, Observation(p, xi, sample.structure)


def build_tasks(cfg: VerifyConfig) -> List[Tuple[int, int, Optional[HurwitzInt], Tuple[str, ...], int]]:
    """
    List the tasks of a sweep in report order: for every prime, the per-prime task then one task per sample.

    The quaternions of a prime p are drawn from random.Random("seed:p"), so they do not depend on the other primes.
    """
    tasks = []
    run_prime_checks = any(c in cfg.checks for c in PER_PRIME_CHECKS)
    run_sample_checks = any(c in cfg.checks for c in PER_SAMPLE_CHECKS)
    for p in cfg.primes:
        if run_prime_checks:
            tasks.append((p, -1, None, cfg.checks, cfg.seed))
        if run_sample_checks:
            rng = random.Random("{}:{}".format(cfg.seed, p))
            for index in range(cfg.samples_per_p):
                tasks.append((p, index, sample_xi(p, rng, cfg.q_bound), cfg.checks, cfg.seed))
    return tasks


def run_verify(cfg: VerifyConfig) -> VerifyReport:
    """
    Run a verification sweep.

    :param cfg: the sweep parameters.
    :return: the report; records are ordered by (p, sample index) whatever the number of jobs.
    """
    if not cfg.checks:
        return VerifyReport([])
    tasks = build_tasks(cfg)
    logger.info("Running {} tasks over {} primes with {} job(s)...".format(len(tasks), len(cfg.primes), cfg.jobs))

    if cfg.jobs > 1:
        with multiprocessing.Pool(cfg.jobs) as pool:
            results = pool.map(_run_task, tasks)
    else:
        results = [_run_task(task) for task in tasks]

    records = []  # type: List[CheckRecord]
    observations = []  # type: List[Observation]
    for task_records, observation in results:
        records.extend(task_records)
        if observation is not None:
            observations.append(observation)
    report = VerifyReport(records, observations)
    logger.info("{} checks run, {} failed.".format(len(records), len(report.failures)))
    return report
