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
Seeded random instance generators.

Both generators are pure functions of their parameters and the seed; all
randomness comes from a :class:`~hyperrep.stream.CounterStream`.
"""

import logging

from itertools import combinations
from typing import List, Optional, Tuple

from hyperrep.core.base import Edge, Hypergraph
from hyperrep.stream import CounterStream

__all__ = [
    'random_matching', 'gen_union_of_matchings', 'union_of_matchings_labelled',
    'gen_random_linear'
]

logger = logging.getLogger(__name__)


def random_matching(stream: CounterStream, n: int, r: int) -> List[Edge]:
    """Draws a uniform almost perfect matching of r-tuples on ``[0, n)``.

    A random permutation is cut into ``n // r`` consecutive blocks of size
    ``r``; the ``n % r`` trailing vertices stay uncovered.

    :param stream: the random source
    :type stream: CounterStream
    :return: the ``n // r`` edges of the matching
    :rtype: List[Edge]
    """
    order = stream.permutation(n).tolist()
    return [tuple(sorted(order[i * r:(i + 1) * r])) for i in range(n // r)]


def union_of_matchings_labelled(n: int, r: int, delta: int,
                                seed: int) -> Tuple[Hypergraph, Tuple[Tuple[Edge, ...], ...]]:
    """Same as :func:`gen_union_of_matchings` but also returns the drawn
    matchings (before duplicate edges are merged).

    :return: the hypergraph and the ``delta`` constituent matchings
    :rtype: Tuple[Hypergraph, Tuple[Tuple[Edge, ...], ...]]
    """
    if r < 2:
        raise ValueError(f'Uniformity must be at least 2 - got {r}')
    if n < r:
        raise ValueError(f'Need at least r={r} vertices - got n={n}')
    if delta < 1:
        raise ValueError(f'Degree bound must be positive - got {delta}')

    stream = CounterStream(seed, 'union-of-matchings', n, r, delta)
    matchings = tuple(tuple(random_matching(stream, n, r)) for _ in range(delta))
    graph = Hypergraph.merged(r, n, (e for m in matchings for e in m))
    return graph, matchings


def gen_union_of_matchings(n: int, r: int, delta: int, seed: int) -> Hypergraph:
    """Returns the union of ``delta`` independent uniform almost perfect
    matchings. Edges drawn more than once are merged, so the maximum degree
    is at most ``delta``.

    :param n: the vertex count, at least ``r``
    :type n: int
    :param r: the uniformity
    :type r: int
    :param delta: the number of matchings
    :type delta: int
    :param seed: the seed
    :type seed: int
    :raises ValueError: if ``n < r``
    :return: the hypergraph
    :rtype: Hypergraph
    """
    graph, _ = union_of_matchings_labelled(n, r, delta, seed)
    return graph


def gen_random_linear(n: int, r: int, delta: int, seed: int,
                      max_rejections: Optional[int] = None) -> Hypergraph:
    """Greedy random partial Steiner system.

    Random r-subsets are proposed one at a time. A proposal is accepted if it
    shares no vertex pair with an accepted edge and all of its vertices still
    have degree below ``delta``. The process stops after ``max_rejections``
    consecutive rejections (default ``50 * n * delta``).

    :param n: the vertex count, at least ``r``
    :type n: int
    :param r: the uniformity
    :type r: int
    :param delta: the degree cap
    :type delta: int
    :param seed: the seed
    :type seed: int
    :param max_rejections: the rejection cap, defaults to ``50 * n * delta``
    :type max_rejections: int, optional
    :return: a linear hypergraph with maximum degree at most ``delta``
    :rtype: Hypergraph
    """
    if r < 2:
        raise ValueError(f'Uniformity must be at least 2 - got {r}')
    if n < r:
        raise ValueError(f'Need at least r={r} vertices - got n={n}')
    if delta < 1:
        raise ValueError(f'Degree bound must be positive - got {delta}')
    if max_rejections is None:
        max_rejections = 50 * n * delta

    stream = CounterStream(seed, 'random-linear', n, r, delta)
    degrees = [0] * n
    pairs = set()
    edges = []
    rejections = 0
    while rejections < max_rejections:
        edge = tuple(sorted(stream.sample(n, r)))
        if any(degrees[v] >= delta for v in edge) or any(
                pair in pairs for pair in combinations(edge, 2)):
            rejections += 1
            continue

        rejections = 0
        edges.append(edge)
        pairs.update(combinations(edge, 2))
        for v in edge:
            degrees[v] += 1

    logger.debug('random linear instance: n=%d r=%d delta=%d -> %d edges',
                 n, r, delta, len(edges))
    return Hypergraph(r, n, edges)
