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
Exact and sampled verification of k-representations.

A representation ``(S_v)`` with threshold ``k`` represents ``G`` when an
r-set ``T`` is an edge exactly if ``|cap_{v in T} S_v| >= k``. The
exhaustive check visits all ``C(n, r)`` tuples in lexicographic order and
reuses the intersection of each common prefix.
"""

import logging
import math

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from hyperrep.core.base import Edge, Hypergraph
from hyperrep.represent.base import Representation
from hyperrep.represent.sets import intersection_size, set_backend
from hyperrep.stream import CounterStream

__all__ = [
    'Violation', 'VerificationReport', 'intersection_count',
    'verify_representation', 'sampled_verify', 'format_report',
    'VIOLATION_LIMIT', 'BITSET_BUDGET'
]

logger = logging.getLogger(__name__)

VIOLATION_LIMIT = 100

BITSET_BUDGET = 1 << 30
"""Largest total size in bytes of the per-vertex bit vectors; larger
representations are checked on sorted arrays."""


@dataclass(frozen=True)
class Violation:
    """A tuple on which the representation disagrees with the hypergraph."""

    tuple: Edge
    count: int
    is_edge: bool


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a verification run.

    ``valid`` covers the checked tuples; together with ``exhaustive`` it
    states that the representation is correct. ``violations`` keeps at
    most the configured number of entries, in lexicographic tuple order;
    ``violation_count`` is never capped.
    ``min_edge_count`` is None without edges and ``max_nonedge_count`` is
    None when no non-edge was checked.
    """

    valid: bool
    exhaustive: bool
    checked_tuples: int
    total_tuples: int
    violations: Tuple[Violation, ...]
    violation_count: int
    min_edge_count: Optional[int]
    max_nonedge_count: Optional[int]
    k: int


class _Tally:

    def __init__(self, graph: Hypergraph, k: int, limit: int) -> None:
        self.graph = graph
        self.k = k
        self.limit = limit
        self.checked = 0
        self.violations: List[Violation] = []
        self.violation_count = 0
        self.min_edge = None
        self.max_nonedge = None

    def add(self, tuple_: Edge, count: int) -> None:
        self.checked += 1
        is_edge = tuple_ in self.graph
        if is_edge:
            self.min_edge = count if self.min_edge is None else min(self.min_edge, count)
            ok = count >= self.k
        else:
            self.max_nonedge = count if self.max_nonedge is None else max(self.max_nonedge, count)
            ok = count < self.k

        if not ok:
            self.violation_count += 1
            if len(self.violations) < self.limit:
                self.violations.append(Violation(tuple_, count, is_edge))

    def report(self, exhaustive: bool, total: int) -> VerificationReport:
        return VerificationReport(
            valid=self.violation_count == 0,
            exhaustive=exhaustive,
            checked_tuples=self.checked,
            total_tuples=total,
            violations=tuple(self.violations),
            violation_count=self.violation_count,
            min_edge_count=self.min_edge,
            max_nonedge_count=self.max_nonedge,
            k=self.k
        )


def _check_tuple(rep: Representation, tuple_: Sequence[int], r: Optional[int]) -> Edge:
    key = tuple(sorted(int(v) for v in tuple_))
    if r is None and rep.metadata is not None:
        r = rep.metadata.r
    if not key or (r is not None and len(key) != r):
        raise ValueError(f'Expected a tuple of {r} vertices - got {key}')
    if len(set(key)) != len(key):
        raise ValueError(f'Repeated vertex in tuple {key}')
    if key[0] < 0 or key[-1] >= rep.n:
        raise ValueError(f'Vertex index out of range [0, {rep.n}) in tuple {key}')
    return key


def intersection_count(rep: Representation, tuple_: Iterable[int],
                       r: Optional[int] = None) -> int:
    """Returns ``|cap_{v in T} S_v|``.

    >>> rep = Representation.from_sets(1, [{0, 1, 2}, {1, 2, 3}, {2, 3, 4}])
    >>> intersection_count(rep, (0, 1, 2))
    1

    :param rep: the representation
    :type rep: Representation
    :param tuple_: distinct vertices
    :type tuple_: Iterable[int]
    :param r: the expected arity, defaults to the uniformity recorded in the
              metadata (if any)
    :type r: int, optional
    :raises ValueError: on an arity mismatch, a repeated vertex or a vertex
                        out of range
    :return: the intersection size
    :rtype: int
    """
    key = _check_tuple(rep, tuple(tuple_), r)
    return intersection_size([rep.vertex_sets[v] for v in key])


def _backend(rep: Representation):
    dense = rep.ground_size * rep.n <= 8 * BITSET_BUDGET
    return set_backend(rep.vertex_sets, rep.ground_size, dense)


def _walk(members: list, meet, r: int) -> Iterator[Tuple[Edge, object]]:
    # yields (tuple, intersection) for all r-subsets in lexicographic order
    n = len(members)

    def descend(prefix: Edge, current, start: int):
        depth = len(prefix) + 1
        for v in range(start, n - (r - depth)):
            value = members[v] if current is None else meet(current, members[v])
            if depth == r:
                yield prefix + (v,), value
            else:
                yield from descend(prefix + (v,), value, v + 1)

    yield from descend((), None, 0)


def verify_representation(graph: Hypergraph, rep: Representation,
                          violation_limit: int = VIOLATION_LIMIT) -> VerificationReport:
    """Checks every r-subset of the vertex set.

    The result is valid exactly when every edge has an intersection of at
    least ``k`` elements and every non-edge one of fewer than ``k``.

    :param graph: the hypergraph
    :type graph: Hypergraph
    :param rep: the candidate representation
    :type rep: Representation
    :param violation_limit: how many violations to keep in the report
    :type violation_limit: int, optional
    :raises ValueError: if the vertex counts differ
    :return: the full report
    :rtype: VerificationReport
    """
    if rep.n != graph.n:
        raise ValueError(f'Vertex count mismatch: hypergraph has {graph.n}, '
                         f'representation has {rep.n}')

    members, meet, size = _backend(rep)
    tally = _Tally(graph, rep.k, violation_limit)
    for tuple_, current in _walk(members, meet, graph.r):
        tally.add(tuple_, int(size(current)))

    report = tally.report(True, math.comb(graph.n, graph.r))
    logger.debug('verified %d tuples: %d violations', report.checked_tuples,
                 report.violation_count)
    return report


def sampled_verify(graph: Hypergraph, rep: Representation, sample_count: int,
                   seed: int, violation_limit: int = VIOLATION_LIMIT) -> VerificationReport:
    """Checks all edges and ``sample_count`` distinct random non-edges.

    Non-edges are drawn uniformly without replacement. If ``sample_count``
    reaches the number of non-edges, all of them are checked and the report
    is exhaustive. Otherwise ``valid`` only states that no checked tuple
    violates the representation.

    :param graph: the hypergraph
    :type graph: Hypergraph
    :param rep: the candidate representation
    :type rep: Representation
    :param sample_count: number of non-edges to check, at least 1
    :type sample_count: int
    :param seed: the sampling seed
    :type seed: int
    :raises ValueError: if ``sample_count < 1`` or the vertex counts differ
    :return: the report
    :rtype: VerificationReport
    """
    if sample_count < 1:
        raise ValueError(f'Sample count must be positive - got {sample_count}')
    if rep.n != graph.n:
        raise ValueError(f'Vertex count mismatch: hypergraph has {graph.n}, '
                         f'representation has {rep.n}')

    total = math.comb(graph.n, graph.r)
    non_edge_total = total - len(graph)
    exhaustive = sample_count >= non_edge_total
    if exhaustive:
        chosen = set(graph.non_edges())
    else:
        stream = CounterStream(seed, 'sampled-verify')
        chosen = set()
        while len(chosen) < sample_count:
            candidate = tuple(sorted(stream.sample(graph.n, graph.r)))
            if candidate not in graph:
                chosen.add(candidate)

    tally = _Tally(graph, rep.k, violation_limit)
    for tuple_ in sorted(chosen.union(graph.edges)):
        tally.add(tuple_, intersection_size([rep.vertex_sets[v] for v in tuple_]))

    return tally.report(exhaustive, total)


def format_report(report: VerificationReport) -> str:
    """Renders the report as text: one ``RESULT`` line followed by one
    ``VIOLATION <v1 .. vr> <count> <edge|nonedge>`` line per kept violation.
    """
    def show(value):
        return '-' if value is None else str(value)

    lines = [
        f'RESULT valid={str(report.valid).lower()} '
        f'exhaustive={str(report.exhaustive).lower()} '
        f'checked={report.checked_tuples} total={report.total_tuples} '
        f'k={report.k} min_edge={show(report.min_edge_count)} '
        f'max_nonedge={show(report.max_nonedge_count)} '
        f'violations={report.violation_count}'
    ]
    for violation in report.violations:
        vertices = ' '.join(map(str, violation.tuple))
        kind = 'edge' if violation.is_edge else 'nonedge'
        lines.append(f'VIOLATION {vertices} {violation.count} {kind}')
    return '\n'.join(lines) + '\n'
