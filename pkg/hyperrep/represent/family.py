# This file is part of hyperrep
# Copyright (C) 2024 The hyperrep developers

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.
__doc__ = """
Random set families with concentrated intersections.

A family of ``count`` subsets of a segment ``[0, t)`` is sampled by
including every element in every set independently with probability ``p``.
A family is *certified* when, for every ``1 <= l <= m`` and every ``l``
distinct members, the common intersection has size within
``(1 - eps) p^l t`` and ``(1 + eps) p^l t`` (both inclusive). Certification
is exhaustive, so every family handed out by :func:`gen_verified_family`
has the property, not just with high probability.
"""

import logging
import math

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple, Union

import numpy as np

from hyperrep.errors import RetriesExhaustedError
from hyperrep.represent.sets import set_backend
from hyperrep.stream import CounterStream

__all__ = [
    'FamilyParams', 'ChernoffFamily', 'FamilyViolation', 'CertificateReport',
    'sample_family', 'verify_family', 'gen_verified_family',
    'failure_probability_bound', 'DENSE_THRESHOLD'
]

logger = logging.getLogger(__name__)

Number = Union[int, float, Fraction]

DENSE_THRESHOLD = 1 << 24
"""Segments up to this size are checked with bit vectors, larger ones by
merging sorted arrays."""


@dataclass(frozen=True)
class FamilyParams:
    """Parameters of a family: segment size ``t``, inclusion probability
    ``p``, tolerance ``epsilon`` and maximum intersection order ``m``.

    :raises ValueError: if a value is out of its range
    """

    t: int
    p: Number
    epsilon: Number
    m: int

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError(f'Segment size must be positive - got {self.t}')
        if not 0 <= self.p <= 1:
            raise ValueError(f'Probability must lie in [0, 1] - got {self.p}')
        if not 0 < self.epsilon < 1:
            raise ValueError(f'Tolerance must lie in (0, 1) - got {self.epsilon}')
        if self.m < 2:
            raise ValueError(f'Intersection order must be at least 2 - got {self.m}')

    def interval(self, l: int) -> Tuple[Number, Number]:
        """Returns the allowed size range ``((1-eps) p^l t, (1+eps) p^l t)``
        for intersections of ``l`` members."""
        centre = self.p ** l * self.t
        return (1 - self.epsilon) * centre, (1 + self.epsilon) * centre

    def required_segment(self, n: int) -> float:
        """Returns ``3 (m + 1) ln n / (eps^2 p^m)``, the segment size above which
        a sampled family of up to ``n`` members fails with probability below
        ``sum_l C(n, l) 2 n^-(m+1)``.

        :raises ValueError: if ``p`` is zero
        """
        if self.p == 0:
            raise ValueError('Requirement is undefined for p = 0')
        return 3 * (self.m + 1) * math.log(n) / (float(self.epsilon) ** 2 * float(self.p) ** self.m)

    def meets_requirement(self, n: int) -> bool:
        """Returns whether ``t`` satisfies :meth:`required_segment`."""
        return self.t >= self.required_segment(n)


@dataclass(frozen=True, eq=False)
class ChernoffFamily:
    """A sampled family: one sorted element array per member."""

    params: FamilyParams
    sets: Tuple[np.ndarray, ...] = field(repr=False)
    seed: int
    attempts: int = 1

    def __len__(self) -> int:
        return len(self.sets)


@dataclass(frozen=True)
class FamilyViolation:
    """An intersection whose size lies outside the allowed interval."""

    l: int
    members: Tuple[int, ...]
    size: int
    low: Number
    high: Number


@dataclass(frozen=True)
class CertificateReport:
    """Outcome of :func:`verify_family`.

    ``violations`` is ordered by ``l`` and then lexicographically by members.
    """

    certified: bool
    checked: int
    violations: Tuple[FamilyViolation, ...]


def sample_family(count: int, params: FamilyParams, seed: int) -> ChernoffFamily:
    """Samples ``count`` independent random subsets of ``[0, t)``.

    :param count: number of members
    :type count: int
    :param params: the family parameters
    :type params: FamilyParams
    :param seed: the seed
    :type seed: int
    :return: the (uncertified) family
    :rtype: ChernoffFamily
    """
    if count < 0:
        raise ValueError(f'Member count must be non-negative - got {count}')

    stream = CounterStream(seed, 'family')
    sets = tuple(
        np.flatnonzero(stream.bernoulli(params.t, params.p)).astype(np.int64)
        for _ in range(count)
    )
    return ChernoffFamily(params, sets, seed)


def verify_family(family: ChernoffFamily,
                  dense_threshold: int = DENSE_THRESHOLD) -> CertificateReport:
    """Checks every intersection of ``l`` distinct members, ``1 <= l <= m``.

    Intersections are computed depth first, reusing the intersection of the
    common prefix of member indices.

    :param family: the family to check
    :type family: ChernoffFamily
    :param dense_threshold: largest segment checked with bit vectors
    :type dense_threshold: int, optional
    :return: the report listing all violations
    :rtype: CertificateReport
    """
    params = family.params
    count = len(family.sets)
    depth = min(params.m, count)
    intervals = [None] + [params.interval(l) for l in range(1, depth + 1)]

    members, meet, size = set_backend(family.sets, params.t, params.t <= dense_threshold)

    violations: List[FamilyViolation] = []
    checked = 0
    # (level, chosen members, prefix intersection)
    stack = [(1, (j,), members[j]) for j in reversed(range(count))] if depth else []
    while stack:
        l, chosen, current = stack.pop()
        checked += 1
        value = int(size(current))
        low, high = intervals[l]
        if not low <= value <= high:
            violations.append(FamilyViolation(l, chosen, value, low, high))
        if l < depth:
            for j in reversed(range(chosen[-1] + 1, count)):
                stack.append((l + 1, chosen + (j,), meet(current, members[j])))

    violations.sort(key=lambda v: (v.l, v.members))
    return CertificateReport(not violations, checked, tuple(violations))


def gen_verified_family(count: int, params: FamilyParams, seed: int,
                        max_retries: int) -> ChernoffFamily:
    """Samples families with seeds ``seed ^ 0, seed ^ 1, ...`` until one is
    certified.

    :param count: number of members
    :type count: int
    :param params: the family parameters
    :type params: FamilyParams
    :param seed: the base seed
    :type seed: int
    :param max_retries: maximum number of attempts, at least 1
    :type max_retries: int
    :raises ValueError: if ``max_retries < 1``
    :raises RetriesExhaustedError: if no attempt is certified; the error
                                   carries the last report
    :return: the certified family; ``attempts`` holds the attempt count
    :rtype: ChernoffFamily
    """
    if max_retries < 1:
        raise ValueError(f'At least one attempt is required - got {max_retries}')

    report = None
    for attempt in range(max_retries):
        family = sample_family(count, params, seed ^ attempt)
        report = verify_family(family)
        if report.certified:
            return ChernoffFamily(params, family.sets, family.seed, attempt + 1)
        logger.debug('family attempt %d rejected (%d violations)',
                     attempt + 1, len(report.violations))

    raise RetriesExhaustedError(
        f'No certified family of {count} sets after {max_retries} attempts '
        f'(t={params.t}, p={params.p}, eps={params.epsilon}, m={params.m})',
        report, max_retries)


def failure_probability_bound(count: int, params: FamilyParams) -> float:
    """Returns the union bound on the probability that a sampled family is
    not certified: ``sum_l C(count, l) * 2 exp(-eps^2 p^l t / 3)``.

    :return: the bound (may exceed 1)
    :rtype: float
    """
    eps = float(params.epsilon)
    p = float(params.p)
    return math.fsum(
        math.comb(count, l) * 2 * math.exp(-eps * eps * p ** l * params.t / 3)
        for l in range(1, min(params.m, count) + 1)
    )
