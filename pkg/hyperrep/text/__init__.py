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
Text formats with a line-based reader and writer per format.

``.hg``
    Optional ``#`` comments, a header ``r n m`` and ``m`` lines of ``r``
    strictly increasing 0-based vertices.
``.rep``
    ``# key value`` metadata comments, a header ``n k groundSize`` and one
    line ``v c e1 .. ec`` per vertex.
``.dec``
    The matching count ``L`` and one line ``<edge index> <matching index>``
    per edge.
"""

from typing import Iterable

from hyperrep.core.base import Hypergraph
from hyperrep.represent.base import Representation
from hyperrep.represent.matching import MatchingDecomposition
from hyperrep.text.base import *
from hyperrep.text.visitor import *
from hyperrep.text.reader import *
from hyperrep.text.writer import *


def parse_hypergraph(source, validate: bool = True) -> Hypergraph:
    """Parses ``.hg`` text.

    >>> parse_hypergraph("3 4 1\\n0 1 2\\n").edges
    ((0, 1, 2),)

    :param source: the text or a readable stream
    :type source: str | bytes | io.IOBase
    :param validate: whether to check the layout of every line
    :type validate: bool, optional
    :raises SyntaxError: if the input is malformed
    :raises ValueError: if the edges violate the hypergraph invariants
    :return: the hypergraph
    :rtype: Hypergraph
    """
    collector = HypergraphCollector()
    HypergraphReader(validate=validate).visit(source, collector)
    return collector.graph


def dump_hypergraph(graph: Hypergraph, comments: Iterable[str] = ()) -> str:
    """Returns the ``.hg`` text of ``graph`` with the given comment lines
    on top."""
    writer = HypergraphWriter()
    visit_hypergraph(graph, writer, comments)
    return writer.code


def parse_representation(source, validate: bool = True) -> Representation:
    """Parses ``.rep`` text, including the metadata comments.

    :raises SyntaxError: if the input or its metadata is malformed
    :raises ValueError: if the sets violate the representation invariants
    """
    collector = RepresentationCollector()
    RepresentationReader(validate=validate).visit(source, collector)
    return collector.representation


def dump_representation(rep: Representation, comments: Iterable[str] = ()) -> str:
    """Returns the ``.rep`` text of ``rep``."""
    writer = RepresentationWriter()
    visit_representation(rep, writer, comments)
    return writer.code


def parse_decomposition(source, graph: Hypergraph, validate: bool = True) -> MatchingDecomposition:
    """Parses ``.dec`` text written for ``graph``."""
    collector = DecompositionCollector(graph)
    DecompositionReader(validate=validate).visit(source, collector)
    return collector.decomposition


def dump_decomposition(graph: Hypergraph, decomposition: MatchingDecomposition,
                       comments: Iterable[str] = ()) -> str:
    """Returns the ``.dec`` text of a decomposition of ``graph``."""
    writer = DecompositionWriter()
    visit_decomposition(graph, decomposition, writer, comments)
    return writer.code
