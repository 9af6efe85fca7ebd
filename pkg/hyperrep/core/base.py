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
Basic data model for r-uniform hypergraphs.

Vertices are the dense integers ``0..n-1``. Every edge is stored as a sorted
tuple and the edge list itself is kept in lexicographic order, so two
hypergraphs with the same edge set compare (and hash) equal.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Tuple

__all__ = [
    'Edge', 'Hypergraph', 'DegreeProfile', 'degree_profile', 'is_linear'
]

Edge = Tuple[int, ...]
"""An edge: a strictly increasing tuple of vertex indices."""


class Hypergraph:
    """Immutable r-uniform hypergraph on the vertex set ``[0, n)``.

    >>> G = Hypergraph(3, 4, [(2, 1, 0)])
    >>> G.edges
    ((0, 1, 2),)
    >>> (0, 1, 2) in G
    True

    :param r: the uniformity, at least 2
    :type r: int
    :param n: the vertex count
    :type n: int
    :param edges: the edges, each given as an iterable of ``r`` distinct vertices
    :type edges: Iterable[Iterable[int]], optional
    :raises ValueError: if ``r < 2``, ``n < 0``, an edge has the wrong arity,
                        repeats a vertex, leaves ``[0, n)`` or occurs twice
    """

    def __init__(self, r: int, n: int, edges: Iterable[Iterable[int]] = ()) -> None:
        if r < 2:
            raise ValueError(f'Uniformity must be at least 2 - got {r}')
        if n < 0:
            raise ValueError(f'Vertex count must be non-negative - got {n}')

        self.__r = int(r)
        self.__n = int(n)
        canonical = set()
        for raw in edges:
            edge = tuple(sorted(int(v) for v in raw))
            if len(edge) != r:
                raise ValueError(f'Expected {r} vertices per edge - got {len(edge)} in {edge}')
            if len(set(edge)) != r:
                raise ValueError(f'Repeated vertex in edge {edge}')
            if edge[0] < 0 or edge[-1] >= n:
                raise ValueError(f'Vertex index out of range [0, {n}) in edge {edge}')
            if edge in canonical:
                raise ValueError(f'Duplicate edge {edge}')
            canonical.add(edge)

        self.__edges = tuple(sorted(canonical))
        self.__edge_set = frozenset(canonical)
        self.__incidence = None

    @classmethod
    def merged(cls, r: int, n: int, edges: Iterable[Iterable[int]]) -> 'Hypergraph':
        """Creates a hypergraph and silently drops repeated edges.

        :return: the hypergraph with the union of the given edges
        :rtype: Hypergraph
        """
        return cls(r, n, {tuple(sorted(e)) for e in edges})

    @property
    def r(self) -> int:
        """Returns the uniformity."""
        return self.__r

    @property
    def n(self) -> int:
        """Returns the vertex count."""
        return self.__n

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Returns the canonical (lexicographically sorted) edge list.

        :return: the edges as sorted tuples
        :rtype: Tuple[Edge, ...]
        """
        return self.__edges

    @property
    def incidence(self) -> Tuple[Tuple[int, ...], ...]:
        """Returns, per vertex, the indices of the edges containing it.

        Indices refer to positions in :attr:`edges`.
        """
        if self.__incidence is None:
            lists = [[] for _ in range(self.__n)]
            for index, edge in enumerate(self.__edges):
                for v in edge:
                    lists[v].append(index)
            self.__incidence = tuple(tuple(x) for x in lists)
        return self.__incidence

    @property
    def max_degree(self) -> int:
        """Returns the maximum degree (zero for an edgeless hypergraph)."""
        return degree_profile(self).max_degree

    def index(self, edge: Iterable[int]) -> int:
        """Returns the position of the given edge in :attr:`edges`.

        :raises KeyError: if the edge is not part of this hypergraph
        """
        key = tuple(sorted(edge))
        if key not in self.__edge_set:
            raise KeyError(key)
        lo, hi = 0, len(self.__edges)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.__edges[mid] < key:
                lo = mid + 1
            else:
                hi = mid
        return lo

    def non_edges(self) -> Iterator[Edge]:
        """Yields all r-subsets of the vertex set that are not edges, in
        lexicographic order."""
        for candidate in combinations(range(self.__n), self.__r):
            if candidate not in self.__edge_set:
                yield candidate

    def __contains__(self, edge) -> bool:
        return tuple(sorted(edge)) in self.__edge_set

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.__edges)

    def __len__(self) -> int:
        return len(self.__edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.__r, self.__n, self.__edges) == (other.r, other.n, other.edges)

    def __hash__(self) -> int:
        return hash((self.__r, self.__n, self.__edges))

    def __repr__(self) -> str:
        return f'Hypergraph(r={self.__r}, n={self.__n}, edges={len(self.__edges)})'


@dataclass(frozen=True)
class DegreeProfile:
    """Vertex degrees of a hypergraph together with their maximum."""

    degrees: Tuple[int, ...]
    max_degree: int


def degree_profile(graph: Hypergraph) -> DegreeProfile:
    """Computes ``d(v)`` for every vertex and the maximum degree.

    :param graph: the hypergraph
    :type graph: Hypergraph
    :return: the degree profile
    :rtype: DegreeProfile
    """
    degrees = [0] * graph.n
    for edge in graph.edges:
        for v in edge:
            degrees[v] += 1
    return DegreeProfile(tuple(degrees), max(degrees, default=0))


def is_linear(graph: Hypergraph) -> bool:
    """Returns whether every two distinct edges share at most one vertex.

    Two edges share two vertices exactly when some vertex pair occurs in
    both, so it is enough to look for a repeated pair.

    :param graph: the hypergraph
    :type graph: Hypergraph
    :return: True, if the hypergraph is linear
    :rtype: bool
    """
    seen = set()
    for edge in graph.edges:
        for pair in combinations(edge, 2):
            if pair in seen:
                return False
            seen.add(pair)
    return True
