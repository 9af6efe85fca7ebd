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
Line-based readers for the ``.hg``, ``.rep`` and ``.dec`` formats, and the
collecting visitors that turn a parsed file into objects.

Blank lines are skipped everywhere. Comment lines are reported through
``visit_comment`` when the reader was created with ``comments=True``;
metadata comments of ``.rep`` files are always reported.
"""

import io

from typing import Dict, List, Optional

import numpy as np

from hyperrep.core.base import Hypergraph
from hyperrep.represent.base import Mode, RepMetadata, Representation
from hyperrep.represent.matching import MatchingDecomposition
from hyperrep.text.base import METADATA_KEYS, Line, parse_number
from hyperrep.text.visitor import (
    DecompositionVisitor,
    HypergraphVisitor,
    RepresentationVisitor,
    VisitorBase
)

__all__ = [
    'TextReader', 'HypergraphReader', 'RepresentationReader', 'DecompositionReader',
    'HypergraphCollector', 'RepresentationCollector', 'DecompositionCollector'
]


class TextReader:
    """Base class of the readers.

    :param validate: Indicates the reader should validate the input, defaults to True
    :type validate: bool, optional
    :param comments: With this option enabled, the reader will also notify about
                     comments in the source, defaults to False
    :type comments: bool, optional
    """

    validate: bool = True
    """Indicates the reader should validate the input."""

    comments: bool = False
    """With this option enabled, the reader will also notify about comments."""

    line: Line
    """The current line. (Mainly used for error messages)"""

    source: io.IOBase
    """The source to read from."""

    def __init__(self, validate: bool = True, comments: bool = False) -> None:
        self.validate = validate
        self.comments = comments
        self.line = Line()
        self.source = None
        self._visitor = None
        self._number = 0

    def visit(self, source, visitor: VisitorBase) -> None:
        """Parses the given input which can be any readable source.

        :param source: the text
        :type source: io.IOBase | str | bytes
        :param visitor: the visitor to notify
        :type visitor: VisitorBase
        :raises ValueError: if no visitor is given or the source is not readable
        :raises TypeError: if the source type is not accepted
        :raises SyntaxError: if the input is malformed
        """
        if visitor is None or source is None:
            raise ValueError('Invalid source or visitor (nullptr)')

        if isinstance(source, str):
            source = io.StringIO(source)
        elif isinstance(source, bytes):
            source = io.BytesIO(source)
        elif not isinstance(source, io.IOBase):
            raise TypeError(f'Invalid source type: {source.__class__}')

        if not source.readable():
            raise ValueError('Source object is not readable!')

        self.source = source
        self._visitor = visitor
        self._number = 0
        self._do_visit()
        visitor.visit_end()

    def _do_visit(self) -> None:
        raise NotImplementedError

    def _next_line(self) -> Optional[Line]:
        """Returns the next line with tokens, or None at the end of input.

        Comment lines are handed to :meth:`_on_comment` on the way.

        :meta public:
        """
        while True:
            raw_line = self.source.readline()
            if len(raw_line) == 0:
                return None

            self._number += 1
            self.line.reset(raw_line, self._number)
            if self.line.is_blank():
                continue
            if self.line.is_comment():
                self._on_comment(self.line.eol_comment)
                continue
            return self.line

    def _on_comment(self, text: str) -> None:
        if self.comments:
            self._visitor.visit_comment(text)

    def _expect_line(self, what: str) -> Line:
        line = self._next_line()
        if line is None:
            raise SyntaxError(f'Unexpected end of input - expected {what}')
        return line

    def _expect_end(self) -> None:
        line = self._next_line()
        if line is not None and self.validate:
            raise line.error(f"Unexpected trailing content '{line.cleaned}'")

    def _expect_no_tokens(self, line: Line) -> None:
        if self.validate and line.has_next():
            raise line.error(f"Unexpected token '{line.peek()}'")

    def _check_increasing(self, line: Line, values: List[int], what: str) -> None:
        if self.validate and any(a >= b for a, b in zip(values, values[1:])):
            raise line.error(f'{what} must be strictly increasing - got {values}')


class HypergraphReader(TextReader):
    """Reader for ``.hg`` files: a header ``r n m`` followed by ``m`` lines
    of ``r`` strictly increasing vertices."""

    def _do_visit(self) -> None:
        line = self._expect_line('header "r n m"')
        r, n, m = line.next_int('r'), line.next_int('n'), line.next_int('m')
        self._expect_no_tokens(line)
        if m < 0:
            raise line.error(f'Edge count must be non-negative - got {m}')
        self._visitor.visit_header(r, n, m)

        for _ in range(m):
            line = self._expect_line('edge line')
            vertices = line.ints()
            if self.validate and len(vertices) != r:
                raise line.error(f'Expected {r} vertices - got {len(vertices)}')
            self._check_increasing(line, vertices, 'Edge vertices')
            self._visitor.visit_edge(tuple(vertices))

        self._expect_end()


class RepresentationReader(TextReader):
    """Reader for ``.rep`` files: metadata comments, a header
    ``n k groundSize`` and one line ``v c e1 .. ec`` per vertex."""

    def _on_comment(self, text: str) -> None:
        parts = text.split(None, 1)
        if len(parts) == 2 and parts[0] in METADATA_KEYS:
            self._visitor.visit_metadata(parts[0], parts[1])
        else:
            super()._on_comment(text)

    def _do_visit(self) -> None:
        line = self._expect_line('header "n k groundSize"')
        n, k, ground = line.next_int('n'), line.next_int('k'), line.next_int('groundSize')
        self._expect_no_tokens(line)
        if n < 0:
            raise line.error(f'Vertex count must be non-negative - got {n}')
        self._visitor.visit_header(n, k, ground)

        for expected in range(n):
            line = self._expect_line(f'set of vertex {expected}')
            v, count = line.next_int('vertex'), line.next_int('set size')
            elements = line.ints()
            if self.validate:
                if v != expected:
                    raise line.error(f'Expected vertex {expected} - got {v}')
                if count != len(elements):
                    raise line.error(f'Announced {count} elements - got {len(elements)}')
                if elements and (elements[0] < 0 or elements[-1] >= ground):
                    raise line.error(f'Element out of range [0, {ground})')
            self._check_increasing(line, elements, 'Elements')
            self._visitor.visit_vertex(v, elements)

        self._expect_end()


class DecompositionReader(TextReader):
    """Reader for ``.dec`` files: the number of matchings followed by one
    ``<edge index> <matching index>`` line per edge."""

    def _do_visit(self) -> None:
        line = self._expect_line('matching count')
        L = line.next_int('L')
        self._expect_no_tokens(line)
        self._visitor.visit_header(L)

        while True:
            line = self._next_line()
            if line is None:
                break
            edge, matching = line.next_int('edge index'), line.next_int('matching index')
            self._expect_no_tokens(line)
            self._visitor.visit_assignment(edge, matching)


class HypergraphCollector(HypergraphVisitor):
    """Collects visited edges; :attr:`graph` builds the hypergraph."""

    def __init__(self, delegate: HypergraphVisitor = None) -> None:
        super().__init__(delegate)
        self.r = self.n = None
        self.edges = []

    def visit_header(self, r: int, n: int, m: int) -> None:
        super().visit_header(r, n, m)
        self.r, self.n = r, n

    def visit_edge(self, vertices) -> None:
        super().visit_edge(vertices)
        self.edges.append(tuple(vertices))

    @property
    def graph(self) -> Hypergraph:
        """Returns the collected hypergraph.

        :raises ValueError: if the edges violate the hypergraph invariants
        """
        if self.r is None:
            raise ValueError('No header has been visited')
        return Hypergraph(self.r, self.n, self.edges)


_REQUIRED = ('mode', 'r', 'L', 't', 'm', 'p', 'epsilon', 'seed')


def _metadata_from(values: Dict[str, str]) -> Optional[RepMetadata]:
    if not values:
        return None
    missing = [key for key in _REQUIRED if key not in values]
    if missing:
        raise SyntaxError(f'Incomplete representation metadata - missing {", ".join(missing)}')

    try:
        return RepMetadata(
            mode=Mode(values['mode']),
            r=int(values['r']),
            L=int(values['L']),
            t=int(values['t']),
            m=int(values['m']),
            p=parse_number(values['p']),
            epsilon=parse_number(values['epsilon']),
            seed=int(values['seed']),
            scale=float(values.get('scale', '1.0')),
            family_attempts=tuple(int(x) for x in values.get('family_attempts', '').split()),
            build_attempts=int(values.get('build_attempts', '1'))
        )
    except ValueError as error:
        raise SyntaxError(f'Invalid representation metadata: {error}') from None


class RepresentationCollector(RepresentationVisitor):
    """Collects a visited representation; see :attr:`representation`."""

    def __init__(self, delegate: RepresentationVisitor = None) -> None:
        super().__init__(delegate)
        self.metadata: Dict[str, str] = {}
        self.header = None
        self.sets: Dict[int, np.ndarray] = {}

    def visit_metadata(self, key: str, value: str) -> None:
        super().visit_metadata(key, value)
        self.metadata[key] = value

    def visit_header(self, n: int, k: int, ground_size: int) -> None:
        super().visit_header(n, k, ground_size)
        self.header = (n, k, ground_size)

    def visit_vertex(self, v: int, elements) -> None:
        super().visit_vertex(v, elements)
        self.sets[v] = np.asarray(elements, dtype=np.int64)

    @property
    def representation(self) -> Representation:
        """Returns the collected representation (vertices without a line get
        an empty set).

        :raises SyntaxError: if the metadata is incomplete or malformed
        :raises ValueError: if the sets violate the representation invariants
        """
        if self.header is None:
            raise ValueError('No header has been visited')
        n, k, ground = self.header
        empty = np.empty(0, dtype=np.int64)
        vertex_sets = tuple(self.sets.get(v, empty) for v in range(n))
        return Representation(n, k, ground, vertex_sets, _metadata_from(self.metadata))


class DecompositionCollector(DecompositionVisitor):
    """Rebuilds a decomposition of ``graph`` from edge to matching
    assignments; edges keep their canonical order within each matching.

    :param graph: the decomposed hypergraph
    :type graph: Hypergraph
    """

    def __init__(self, graph: Hypergraph, delegate: DecompositionVisitor = None) -> None:
        super().__init__(delegate)
        self.graph = graph
        self.L = None
        self.assignments: Dict[int, int] = {}

    def visit_header(self, L: int) -> None:
        super().visit_header(L)
        self.L = L

    def visit_assignment(self, edge: int, matching: int) -> None:
        super().visit_assignment(edge, matching)
        if not 0 <= edge < len(self.graph):
            raise ValueError(f'Edge index {edge} out of range [0, {len(self.graph)})')
        if not 0 <= matching < self.L:
            raise ValueError(f'Matching index {matching} out of range [0, {self.L})')
        if edge in self.assignments:
            raise ValueError(f'Edge index {edge} assigned twice')
        self.assignments[edge] = matching

    @property
    def decomposition(self) -> MatchingDecomposition:
        """Returns the collected decomposition."""
        if self.L is None:
            raise ValueError('No header has been visited')
        matchings = [[] for _ in range(self.L)]
        for edge in sorted(self.assignments):
            matchings[self.assignments[edge]].append(self.graph.edges[edge])
        return MatchingDecomposition(self.graph.r, self.graph.n,
                                     tuple(tuple(m) for m in matchings))
