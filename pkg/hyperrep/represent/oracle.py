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
Exact representation numbers of tiny hypergraphs.

A ground element is identified with its *support*, the set of vertices
whose set contains it. The intersection count of a tuple ``T`` is then the
number of supports containing ``T``, so a representation with ``t``
elements is a multiset of ``t`` supports. Supports with fewer than ``r``
vertices contain no tuple and are never used.

The search deepens ``t`` one step at a time and enumerates multisets as
nondecreasing sequences of candidate indices; candidates are ordered by
decreasing size and then lexicographically. The first solution found is
returned, so results are deterministic.

Conventions: an edgeless hypergraph has value 0 (with ``k = 1``).
"""

import logging

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, List, Optional, Tuple

from hyperrep.core.base import Hypergraph
from hyperrep.errors import CapExceededError
from hyperrep.represent.base import Representation

__all__ = [
    'OracleLimits', 'OracleResult', 'theta_k_exact', 'theta_tilde_exact', 'theta_exact'
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleLimits:
    """Search caps: largest vertex count and largest ground set size."""

    max_n: int = 8
    max_t: int = 8


@dataclass(frozen=True)
class OracleResult:
    """Minimal ground set size with a witness.

    ``supports`` holds one vertex set per ground element; tuple ``T`` is an
    edge exactly when at least ``witness_k`` supports contain it.
    """

    value: int
    witness_k: int
    supports: Tuple[Tuple[int, ...], ...]
    limits: OracleLimits = field(default_factory=OracleLimits)

    def to_representation(self, n: int) -> Representation:
        """Converts the witness into per-vertex sets over ``[0, value)``.

        :param n: the vertex count
        :type n: int
        :return: the representation with threshold ``witness_k``
        :rtype: Representation
        """
        sets = [[j for j, support in enumerate(self.supports) if v in support]
                for v in range(n)]
        return Representation.from_sets(self.witness_k, sets, ground_size=self.value)


class _Space:
    """Tuples, candidate supports and the per-tuple counters of a search."""

    def __init__(self, graph: Hypergraph, clique_only: bool) -> None:
        r, n = graph.r, graph.n
        self.tuples = list(combinations(range(n), r))
        index = {T: i for i, T in enumerate(self.tuples)}
        self.is_edge = [T in graph for T in self.tuples]
        self.edges = [i for i, e in enumerate(self.is_edge) if e]
        self.non_edges = [i for i, e in enumerate(self.is_edge) if not e]

        supports = []
        for size in range(n, r - 1, -1):
            for support in combinations(range(n), size):
                contained = [index[T] for T in combinations(support, r)]
                if clique_only and not all(self.is_edge[i] for i in contained):
                    continue
                supports.append((support, contained))
        self.supports = supports
        self.counts = [0] * len(self.tuples)

    def min_edge(self) -> int:
        return min(self.counts[i] for i in self.edges)

    def max_nonedge(self) -> int:
        return max((self.counts[i] for i in self.non_edges), default=0)

    def search(self, depth: int, prune: Callable[[int, int], bool],
               accept: Callable[[], bool]) -> Optional[List[int]]:
        chosen: List[int] = []

        def descend(start: int) -> bool:
            remaining = depth - len(chosen)
            if remaining == 0:
                return accept()
            for c in range(start, len(self.supports)):
                contained = self.supports[c][1]
                for i in contained:
                    self.counts[i] += 1
                chosen.append(c)
                if not prune(c, remaining - 1) and descend(c):
                    return True
                chosen.pop()
                for i in contained:
                    self.counts[i] -= 1
            return False

        if prune(-1, depth) or not descend(0):
            return None
        found = list(chosen)
        for c in chosen:
            for i in self.supports[c][1]:
                self.counts[i] -= 1
        return found


def _deepen(graph: Hypergraph, limits: OracleLimits, space: _Space, label: str,
            prune: Callable[[int, int], bool], accept: Callable[[], bool]) -> Tuple[int, list]:
    for depth in range(limits.max_t + 1):
        logger.debug('%s: trying t=%d over %d candidate supports', label, depth,
                     len(space.supports))
        found = space.search(depth, prune, accept)
        if found is not None:
            return depth, [space.supports[c][0] for c in found]
    raise CapExceededError(f'{label}: no representation with at most {limits.max_t} '
                           f'elements for n={graph.n}', limits)


def _check_size(graph: Hypergraph, limits: OracleLimits) -> None:
    if graph.n > limits.max_n:
        raise CapExceededError(f'Vertex count {graph.n} exceeds the cap {limits.max_n}', limits)


def theta_k_exact(graph: Hypergraph, k: int, limits: Optional[OracleLimits] = None,
                  restrict: Optional[bool] = None) -> OracleResult:
    """Returns the size of the smallest set that k-represents ``graph``.

    With ``restrict`` (the default for ``k = 1``) only cliques, i.e. vertex
    sets all of whose r-subsets are edges, are used as supports. For
    ``k = 1`` a support containing a non-edge can never occur in a solution,
    so the restriction does not change the value.

    >>> theta_k_exact(Hypergraph(3, 4, [(0, 1, 2)]), 1).value
    1

    :param graph: the hypergraph
    :type graph: Hypergraph
    :param k: the threshold, at least 1
    :type k: int
    :param limits: search caps, defaults to ``OracleLimits()``
    :type limits: OracleLimits, optional
    :param restrict: whether to search cliques only; only allowed for ``k = 1``
    :type restrict: bool, optional
    :raises ValueError: if ``k < 1`` or ``restrict`` is requested for ``k > 1``
    :raises CapExceededError: if ``n`` or the solution size exceed the caps
    :return: the value and a witness
    :rtype: OracleResult
    """
    limits = limits or OracleLimits()
    if k < 1:
        raise ValueError(f'Threshold must be positive - got {k}')
    if restrict is None:
        restrict = k == 1
    if restrict and k != 1:
        raise ValueError('Clique restriction is only valid for k = 1')
    _check_size(graph, limits)

    if len(graph) == 0:
        return OracleResult(0, k, (), limits)

    space = _Space(graph, restrict)

    def prune(c: int, remaining: int) -> bool:
        if c >= 0 and any(space.counts[i] >= k for i in space.supports[c][1]
                          if not space.is_edge[i]):
            return True
        return max(k - space.counts[i] for i in space.edges) > remaining

    def accept() -> bool:
        return space.min_edge() >= k

    value, supports = _deepen(graph, limits, space, f'theta_{k}', prune, accept)
    return OracleResult(value, k, tuple(supports), limits)


def theta_tilde_exact(graph: Hypergraph, limits: Optional[OracleLimits] = None) -> OracleResult:
    """Returns the minimum over all ``k`` of the k-representation number.

    For a fixed multiset of supports some threshold separates edges from
    non-edges exactly when the smallest edge count is positive and exceeds
    the largest non-edge count; the witness threshold is the largest
    non-edge count plus one.

    :param graph: the hypergraph
    :type graph: Hypergraph
    :param limits: search caps, defaults to ``OracleLimits()``
    :type limits: OracleLimits, optional
    :raises CapExceededError: if ``n`` or the solution size exceed the caps
    :return: the value, the witness threshold and the supports
    :rtype: OracleResult
    """
    limits = limits or OracleLimits()
    _check_size(graph, limits)

    if len(graph) == 0:
        return OracleResult(0, 1, (), limits)

    space = _Space(graph, False)

    def prune(c: int, remaining: int) -> bool:
        return space.min_edge() + remaining <= space.max_nonedge()

    def accept() -> bool:
        low = space.min_edge()
        return low >= 1 and low > space.max_nonedge()

    value, supports = _deepen(graph, limits, space, 'theta_tilde', prune, accept)

    counts = [sum(1 for s in supports if set(T) <= set(s)) for T in space.tuples]
    witness_k = max((counts[i] for i in space.non_edges), default=0) + 1
    return OracleResult(value, witness_k, tuple(supports), limits)


def theta_exact(graph: Hypergraph, limits: Optional[OracleLimits] = None) -> OracleResult:
    """Returns the plain representation number, ``theta_k_exact(graph, 1)``."""
    return theta_k_exact(graph, 1, limits)
