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
Visitor API for the text formats.

Readers call the ``visit_*`` methods in file order; every visitor forwards
the calls to an optional delegate of the same kind, so visitors can be
chained (e.g. a filter in front of a writer).
"""

from typing import Sequence

__all__ = [
    'VisitorBase', 'HypergraphVisitor', 'RepresentationVisitor', 'DecompositionVisitor'
]


class VisitorBase:
    """Base class for all visitors.

    :param delegate: A delegate visitor, defaults to None
    :type delegate: VisitorBase subclass, optional
    :raises TypeError: if the delegate is of a different kind
    """

    def __init__(self, delegate: 'VisitorBase' = None) -> None:
        self.delegate = delegate
        kind = next((c for c in type(self).__mro__ if VisitorBase in c.__bases__), VisitorBase)
        if delegate and not isinstance(delegate, kind):
            raise TypeError(f'Invalid Visitor type - expected subclass of {kind.__name__}')

    def visit_comment(self, text: str) -> None:
        """Visits a comment line.

        :param text: the comment's text without the leading '#'
        :type text: str
        """
        if self.delegate:
            self.delegate.visit_comment(text)

    def visit_end(self) -> None:
        """Called once the input has been read completely."""
        if self.delegate:
            self.delegate.visit_end()


class HypergraphVisitor(VisitorBase):
    """Visitor for ``.hg`` files."""

    def visit_header(self, r: int, n: int, m: int) -> None:
        """Visits the header line.

        :param r: the uniformity
        :type r: int
        :param n: the vertex count
        :type n: int
        :param m: the number of edge lines that follow
        :type m: int
        """
        if self.delegate:
            self.delegate.visit_header(r, n, m)

    def visit_edge(self, vertices: Sequence[int]) -> None:
        """Visits one edge line.

        :param vertices: the vertices as listed in the file
        :type vertices: Sequence[int]
        """
        if self.delegate:
            self.delegate.visit_edge(vertices)


class RepresentationVisitor(VisitorBase):
    """Visitor for ``.rep`` files."""

    def visit_metadata(self, key: str, value: str) -> None:
        """Visits a ``# key value`` metadata comment with a known key.

        :param key: the metadata key, e.g. ``mode``
        :type key: str
        :param value: the raw value text
        :type value: str
        """
        if self.delegate:
            self.delegate.visit_metadata(key, value)

    def visit_header(self, n: int, k: int, ground_size: int) -> None:
        """Visits the ``n k groundSize`` line."""
        if self.delegate:
            self.delegate.visit_header(n, k, ground_size)

    def visit_vertex(self, v: int, elements: Sequence[int]) -> None:
        """Visits the set of vertex ``v``.

        :param v: the vertex
        :type v: int
        :param elements: the sorted element indices
        :type elements: Sequence[int]
        """
        if self.delegate:
            self.delegate.visit_vertex(v, elements)


class DecompositionVisitor(VisitorBase):
    """Visitor for ``.dec`` files."""

    def visit_header(self, L: int) -> None:
        """Visits the line holding the number of matchings."""
        if self.delegate:
            self.delegate.visit_header(L)

    def visit_assignment(self, edge: int, matching: int) -> None:
        """Visits one ``<edge index> <matching index>`` line."""
        if self.delegate:
            self.delegate.visit_assignment(edge, matching)
