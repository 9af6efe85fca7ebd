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
Writers producing the text formats, and helpers that walk an object
through a visitor in file order.
"""

from typing import Iterable, List

from hyperrep.core.base import Hypergraph
from hyperrep.represent.base import RepMetadata, Representation
from hyperrep.represent.family import ChernoffFamily
from hyperrep.represent.matching import MatchingDecomposition
from hyperrep.text.base import COMMENT, METADATA_KEYS, format_number
from hyperrep.text.visitor import (
    DecompositionVisitor,
    HypergraphVisitor,
    RepresentationVisitor
)

__all__ = [
    'HypergraphWriter', 'RepresentationWriter', 'DecompositionWriter',
    'visit_hypergraph', 'visit_representation', 'visit_decomposition',
    'metadata_items', 'dump_family'
]


class _LineCache:
    """Accumulates output lines."""

    def __init__(self) -> None:
        self.__lines: List[str] = []

    def add(self, line: str) -> None:
        self.__lines.append(line)

    def clear(self) -> None:
        self.__lines.clear()

    def get_code(self) -> str:
        """Returns the lines joined, newline terminated."""
        if not self.__lines:
            return ''
        return '\n'.join(self.__lines) + '\n'


class _WriterMixin:

    cache: _LineCache

    @property
    def code(self) -> str:
        """Returns the text written so far.

        :return: the complete text
        :rtype: str
        """
        return self.cache.get_code()

    def reset(self) -> None:
        """Clears the buffer; call before reusing the writer."""
        self.cache.clear()

    def visit_comment(self, text: str) -> None:
        super().visit_comment(text)
        self.cache.add(f'{COMMENT} {text}' if text else COMMENT)


def _join(values: Iterable[int]) -> str:
    return ' '.join(map(str, values))


class HypergraphWriter(_WriterMixin, HypergraphVisitor):
    """Writes ``.hg`` text.

    >>> writer = HypergraphWriter()
    >>> visit_hypergraph(Hypergraph(3, 4, [(0, 1, 2)]), writer)
    >>> writer.code
    '3 4 1\\n0 1 2\\n'
    """

    def __init__(self, delegate: HypergraphVisitor = None) -> None:
        super().__init__(delegate)
        self.cache = _LineCache()

    def visit_header(self, r: int, n: int, m: int) -> None:
        super().visit_header(r, n, m)
        self.cache.add(f'{r} {n} {m}')

    def visit_edge(self, vertices) -> None:
        super().visit_edge(vertices)
        self.cache.add(_join(vertices))


class RepresentationWriter(_WriterMixin, RepresentationVisitor):
    """Writes ``.rep`` text."""

    def __init__(self, delegate: RepresentationVisitor = None) -> None:
        super().__init__(delegate)
        self.cache = _LineCache()

    def visit_metadata(self, key: str, value: str) -> None:
        super().visit_metadata(key, value)
        self.cache.add(f'{COMMENT} {key} {value}')

    def visit_header(self, n: int, k: int, ground_size: int) -> None:
        super().visit_header(n, k, ground_size)
        self.cache.add(f'{n} {k} {ground_size}')

    def visit_vertex(self, v: int, elements) -> None:
        super().visit_vertex(v, elements)
        line = f'{v} {len(elements)}'
        if len(elements):
            line = f'{line} {_join(elements)}'
        self.cache.add(line)


class DecompositionWriter(_WriterMixin, DecompositionVisitor):
    """Writes ``.dec`` text."""

    def __init__(self, delegate: DecompositionVisitor = None) -> None:
        super().__init__(delegate)
        self.cache = _LineCache()

    def visit_header(self, L: int) -> None:
        super().visit_header(L)
        self.cache.add(str(L))

    def visit_assignment(self, edge: int, matching: int) -> None:
        super().visit_assignment(edge, matching)
        self.cache.add(f'{edge} {matching}')


def visit_hypergraph(graph: Hypergraph, visitor: HypergraphVisitor,
                     comments: Iterable[str] = ()) -> None:
    """Feeds ``graph`` to ``visitor`` as a reader would: comments, header,
    edges in canonical order, end."""
    for text in comments:
        visitor.visit_comment(text)
    visitor.visit_header(graph.r, graph.n, len(graph))
    for edge in graph.edges:
        visitor.visit_edge(edge)
    visitor.visit_end()


def metadata_items(metadata: RepMetadata) -> List[tuple]:
    """Returns the metadata as ``(key, text)`` pairs in file order."""
    values = {
        'mode': str(metadata.mode),
        'r': str(metadata.r),
        'L': str(metadata.L),
        't': str(metadata.t),
        'm': str(metadata.m),
        'p': format_number(metadata.p),
        'epsilon': format_number(metadata.epsilon),
        'seed': str(metadata.seed),
        'scale': format_number(float(metadata.scale)),
        'family_attempts': _join(metadata.family_attempts),
        'build_attempts': str(metadata.build_attempts),
    }
    return [(key, values[key]) for key in METADATA_KEYS if values[key]]


def visit_representation(rep: Representation, visitor: RepresentationVisitor,
                         comments: Iterable[str] = ()) -> None:
    """Feeds ``rep`` to ``visitor``: comments, metadata, header, vertex
    sets, end."""
    for text in comments:
        visitor.visit_comment(text)
    if rep.metadata is not None:
        for key, value in metadata_items(rep.metadata):
            visitor.visit_metadata(key, value)
    visitor.visit_header(rep.n, rep.k, rep.ground_size)
    for v, elements in enumerate(rep.vertex_sets):
        visitor.visit_vertex(v, elements.tolist())
    visitor.visit_end()


def visit_decomposition(graph: Hypergraph, decomposition: MatchingDecomposition,
                        visitor: DecompositionVisitor, comments: Iterable[str] = ()) -> None:
    """Feeds the assignment of every edge of ``graph`` (by edge index) to
    ``visitor``.

    :raises KeyError: if an edge of ``graph`` is missing from the decomposition
    """
    for text in comments:
        visitor.visit_comment(text)
    assignment = decomposition.assignment
    visitor.visit_header(decomposition.L)
    for index, edge in enumerate(graph.edges):
        visitor.visit_assignment(index, assignment[edge])
    visitor.visit_end()


def dump_family(family: ChernoffFamily) -> str:
    """Renders a family as lines ``j: e1 e2 ...`` (debug output)."""
    lines = [f'{j}: {_join(s.tolist())}'.rstrip() for j, s in enumerate(family.sets)]
    return '\n'.join(lines) + '\n' if lines else ''
