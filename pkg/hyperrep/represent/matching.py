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
Decomposition of the edge set into matchings.

The edges are coloured greedily in lexicographic order; two edges conflict
when they share a vertex. Each edge has at most ``(d - 1) * r`` conflicting
edges, where ``d`` is the maximum degree, so at most ``(d - 1) * r + 1``
colours are used. Each colour class is a matching.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Optional, Tuple

from hyperrep.core.base import Edge, Hypergraph

__all__ = [
    'MatchingDecomposition', 'decompose', 'verify_decomposition'
]


@dataclass(frozen=True)
class MatchingDecomposition:
    """Partition of the edges of an r-uniform hypergraph into matchings.

    :param r: the uniformity of the decomposed hypergraph
    :param n: its vertex count
    :param matchings: the matchings ``M_0 .. M_{L-1}``; each one is a tuple
                      of sorted edges
    """

    r: int
    n: int
    matchings: Tuple[Tuple[Edge, ...], ...]

    @property
    def L(self) -> int:
        """Returns the number of matchings."""
        return len(self.matchings)

    @cached_property
    def assignment(self) -> Dict[Edge, int]:
        """Maps every edge to the index of its matching.

        If an edge is listed more than once, the last index wins.
        """
        return {edge: i for i, matching in enumerate(self.matchings) for edge in matching}

    @cached_property
    def cover(self) -> Tuple[Dict[int, int], ...]:
        """Per matching, maps each covered vertex to the position of the
        edge containing it."""
        result = []
        for matching in self.matchings:
            owner = {}
            for position, edge in enumerate(matching):
                for v in edge:
                    owner[v] = position
            result.append(owner)
        return tuple(result)

    def edge_of(self, i: int, v: int) -> Optional[int]:
        """Returns the position in ``M_i`` of the edge containing ``v``, or
        None if ``M_i`` leaves ``v`` uncovered."""
        return self.cover[i].get(v)


def decompose(graph: Hypergraph) -> MatchingDecomposition:
    """Greedily colours the edges of ``graph`` so that intersecting edges get
    distinct colours.

    Edges are visited in canonical order; each one receives the smallest
    colour not used by an already coloured edge it intersects. Neighbours
    are found through the per-vertex incidence lists.

    :param graph: the hypergraph
    :type graph: Hypergraph
    :return: the decomposition, without empty matchings
    :rtype: MatchingDecomposition
    """
    colour = [-1] * len(graph)
    incidence = graph.incidence
    classes = []
    for index, edge in enumerate(graph.edges):
        used = set()
        for v in edge:
            for other in incidence[v]:
                if colour[other] != -1:
                    used.add(colour[other])

        c = 0
        while c in used:
            c += 1
        colour[index] = c
        if c == len(classes):
            classes.append([])
        classes[c].append(edge)

    return MatchingDecomposition(graph.r, graph.n, tuple(tuple(m) for m in classes))


def verify_decomposition(graph: Hypergraph, decomposition: MatchingDecomposition) -> bool:
    """Checks that the matchings partition ``E(G)`` and that the edges within
    each matching are pairwise disjoint.

    :param graph: the hypergraph
    :type graph: Hypergraph
    :param decomposition: the candidate decomposition
    :type decomposition: MatchingDecomposition
    :return: True, if the decomposition is valid
    :rtype: bool
    """
    seen = set()
    for matching in decomposition.matchings:
        if not matching:
            return False
        covered = set()
        for edge in matching:
            key = tuple(sorted(edge))
            if key in seen or key not in graph:
                return False
            seen.add(key)
            if covered.intersection(key):
                return False
            covered.update(key)

    return len(seen) == len(graph)
