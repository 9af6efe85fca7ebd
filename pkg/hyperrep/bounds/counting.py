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
The counting argument behind the lower bound for unions of matchings.

Let ``M(n)`` be the number of almost perfect matchings of r-tuples on
``n`` vertices. Unions of ``Delta`` such matchings have maximum degree at
most ``Delta``, and there are at least ``(M(n) / n)^Delta`` distinct ones.
A representation with ``t`` elements is determined by ``n`` subsets of the
ground set, so at most ``2^(t n)`` hypergraphs admit one; once
``(M(n) / n)^Delta > 2^(t n)``, some union needs more than ``t`` elements.

Everything is compared in natural-log space. Exact counts use big
integers; log-factorials are compensated sums of logarithms.
"""

import logging
import math

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

__all__ = [
    'count_almost_perfect_matchings_exact', 'count_matchings_by_enumeration',
    'log_factorial', 'log_factorial_table', 'log_matchings_exact',
    'matchings_log_lower_bound', 'graphs_log_lower_bound', 'CountReport',
    'verify_counting_argument', 'ScanReport', 'scan_counting_argument', 'EXACT_LIMIT'
]

logger = logging.getLogger(__name__)

EXACT_LIMIT = 2000
"""Largest ``n`` for which reports carry the exact matching count."""


def _check_nr(n: int, r: int) -> Tuple[int, int]:
    if r < 2:
        raise ValueError(f'Uniformity must be at least 2 - got {r}')
    if n < r:
        raise ValueError(f'Need n >= r - got n={n}, r={r}')
    return divmod(n, r)


def count_almost_perfect_matchings_exact(n: int, r: int) -> int:
    """Returns ``n! / ((r!)^q q! s!)`` with ``n = q r + s``: the number of
    ways to choose ``q`` disjoint r-tuples on ``n`` vertices.

    >>> count_almost_perfect_matchings_exact(12, 3)
    15400

    :raises ValueError: unless ``n >= r >= 2``
    """
    q, s = _check_nr(n, r)
    return math.factorial(n) // (math.factorial(r) ** q * math.factorial(q) * math.factorial(s))


def count_matchings_by_enumeration(n: int, r: int) -> int:
    """Counts almost perfect matchings by walking through them.

    The lowest unassigned vertex either stays uncovered (at most ``n mod r``
    vertices may) or starts an edge with ``r - 1`` higher vertices. Only
    practical for small ``n``.
    """
    q, s = _check_nr(n, r)

    def count(vertices: Tuple[int, ...], skips: int) -> int:
        if not vertices:
            return 1
        rest = vertices[1:]
        total = count(rest, skips - 1) if skips else 0
        for partners in combinations(rest, r - 1):
            left = tuple(v for v in rest if v not in partners)
            total += count(left, skips)
        return total

    return count(tuple(range(n)), s)


def log_factorial(n: int) -> float:
    """Returns ``ln n!`` as a compensated sum of ``ln 2 .. ln n``."""
    if n < 2:
        return 0.0
    return math.fsum(np.log(np.arange(2, n + 1, dtype=np.float64)))


def log_factorial_table(stop: int) -> np.ndarray:
    """Returns ``ln x!`` for ``x = 0 .. stop-1`` as running sums of logs
    with Neumaier compensation.

    :param stop: the table length (at least 2 entries are always returned)
    :type stop: int
    :return: the table, entry ``x`` holding ``ln x!``
    :rtype: np.ndarray
    """
    table = np.zeros(max(stop, 2))
    total = compensation = 0.0
    for x in range(2, stop):
        term = math.log(x)
        partial = total + term
        if abs(total) >= abs(term):
            compensation += (total - partial) + term
        else:
            compensation += (term - partial) + total
        total = partial
        table[x] = total + compensation
    return table


def _log_matchings(n: int, r: int, log_fact: Callable[[int], float]) -> float:
    q, s = _check_nr(n, r)
    return log_fact(n) - q * log_fact(r) - log_fact(q) - log_fact(s)


def log_matchings_exact(n: int, r: int) -> float:
    """Returns the natural logarithm of
    :func:`count_almost_perfect_matchings_exact` without forming the
    integer."""
    return _log_matchings(n, r, log_factorial)


def matchings_log_lower_bound(n: int, r: int) -> float:
    """Returns ``(n/2) ln(n / (e r))``, the logarithm of the lower bound
    ``(n / (e r))^(n/2)`` on the number of almost perfect matchings.

    :raises ValueError: unless ``n >= r >= 2``
    """
    _check_nr(n, r)
    return n / 2 * (math.log(n) - 1 - math.log(r))


def graphs_log_lower_bound(n: int, r: int, delta: int, use_exact: bool = False) -> float:
    """Returns ``Delta (ln M - ln n)``, the logarithm of ``(M / n)^Delta``,
    where ``M`` is the exact matching count (``use_exact``) or its lower
    bound.

    :raises ValueError: if ``delta`` is negative or exceeds ``n``
    """
    if not 0 <= delta <= n:
        raise ValueError(f'Need 0 <= delta <= n - got delta={delta}, n={n}')
    if delta == 0:
        return 0.0
    matchings = log_matchings_exact(n, r) if use_exact else matchings_log_lower_bound(n, r)
    return delta * (matchings - math.log(n))


@dataclass(frozen=True)
class CountReport:
    """All quantities of the counting argument for one ``(n, r, Delta)``.

    ``threshold`` is ``t* = (Delta/4) ln n`` and ``ln_representable`` is
    ``t* n ln 2``, the logarithm of the number of hypergraphs with a
    representation of ``t*`` elements. ``exact_matchings`` is None above
    :data:`EXACT_LIMIT`.
    """

    n: int
    r: int
    delta: int
    exact_matchings: Optional[int]
    ln_matchings_exact: float
    ln_matchings_lb: float
    ln_graphs_lb: float
    threshold: float
    ln_representable: float
    intermediate: float
    claim_holds: bool
    intermediate_holds: bool
    argument_holds: bool


def _count_report(n: int, r: int, delta: int,
                  log_fact: Callable[[int], float]) -> CountReport:
    if not 1 <= delta <= n:
        raise ValueError(f'Need 1 <= delta <= n - got delta={delta}, n={n}')

    ln_n = math.log(n)
    ln_exact = _log_matchings(n, r, log_fact)
    ln_lb = matchings_log_lower_bound(n, r)
    ln_graphs = delta * (ln_lb - ln_n)
    threshold = delta / 4 * ln_n
    ln_representable = threshold * n * math.log(2)
    intermediate = delta * n / 4 * ln_n
    claim = ln_exact >= ln_lb

    return CountReport(
        n=n, r=r, delta=delta,
        exact_matchings=count_almost_perfect_matchings_exact(n, r) if n <= EXACT_LIMIT else None,
        ln_matchings_exact=ln_exact,
        ln_matchings_lb=ln_lb,
        ln_graphs_lb=ln_graphs,
        threshold=threshold,
        ln_representable=ln_representable,
        intermediate=intermediate,
        claim_holds=claim,
        intermediate_holds=claim and ln_graphs >= intermediate,
        argument_holds=claim and ln_graphs > ln_representable
    )


def verify_counting_argument(n: int, r: int, delta: int) -> CountReport:
    """Evaluates the counting argument at one point.

    The argument holds when the matching lower bound is valid at ``n`` and
    ``Delta (ln M_lb - ln n) > t* n ln 2`` with ``t* = (Delta/4) ln n``.

    :param n: the vertex count, at least ``r``
    :type n: int
    :param r: the uniformity, at least 2
    :type r: int
    :param delta: the number of matchings, ``1 <= delta <= n``
    :type delta: int
    :raises ValueError: if an argument is out of range
    :return: the report
    :rtype: CountReport
    """
    return _count_report(n, r, delta, log_factorial)


@dataclass(frozen=True)
class ScanReport:
    """First ``n`` in ``[start, stop)`` at which each inequality holds
    (None if never), and every later ``n`` at which the full argument fails
    again."""

    r: int
    delta: int
    start: int
    stop: int
    first_claim: Optional[int]
    first_intermediate: Optional[int]
    first_argument: Optional[int]
    regressions: Tuple[int, ...]
    reports: Sequence[CountReport]


def scan_counting_argument(r: int, delta: int, start: Optional[int] = None,
                           stop: int = 1000, keep_reports: bool = False) -> ScanReport:
    """Evaluates :func:`verify_counting_argument` for ``n = start .. stop-1``.

    Log-factorials come from one running table instead of a fresh sum per
    ``n``.

    :param r: the uniformity
    :type r: int
    :param delta: the number of matchings
    :type delta: int
    :param start: first ``n``, defaults to ``max(r, delta)``
    :type start: int, optional
    :param stop: end of the range (exclusive)
    :type stop: int, optional
    :param keep_reports: whether to keep every per-``n`` report
    :type keep_reports: bool, optional
    :return: the summary
    :rtype: ScanReport
    """
    start = max(r, delta) if start is None else max(start, r, delta)
    table = log_factorial_table(stop)

    first_claim = first_intermediate = first_argument = None
    regressions = []
    reports = []
    for n in range(start, stop):
        report = _count_report(n, r, delta, lambda x: float(table[x]))
        if keep_reports:
            reports.append(report)
        if first_claim is None and report.claim_holds:
            first_claim = n
        if first_intermediate is None and report.intermediate_holds:
            first_intermediate = n
        if first_argument is None:
            if report.argument_holds:
                first_argument = n
        elif not report.argument_holds:
            regressions.append(n)

    if regressions:
        logger.warning('argument fails again after n=%d at %d points', first_argument,
                       len(regressions))
    return ScanReport(r, delta, start, stop, first_claim, first_intermediate,
                      first_argument, tuple(regressions), tuple(reports))
