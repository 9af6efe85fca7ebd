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
Named constants of the construction and the size bounds built from them.

All logarithms are natural.
"""

import math

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from hyperrep.core.base import Hypergraph

if TYPE_CHECKING:
    from hyperrep.represent.base import Representation

__all__ = [
    'A', 'EPSILON', 'GENERAL_FACTOR', 'LINEAR_FACTOR', 'RATIO_LIMIT',
    'BoundConstants', 'CONSTANTS', 'c_r', 'theorem1_bound', 'matchings_size_bound',
    'general_nonedge_bound', 'check_size_against_bound'
]

A = 577
"""Factor of the per-construction size bound ``A L^3 ln n``."""

EPSILON = Fraction(1, 2)
"""Tolerance of every random family."""

GENERAL_FACTOR = 576
"""``t = ceil(576 L^2 ln n)`` in general mode."""

LINEAR_FACTOR = 384
"""``t = ceil(384 (r+1) L^(r/(r-1)) ln n)`` in linear mode."""

RATIO_LIMIT = Fraction(5, 6)
"""Largest non-edge to edge ratio the linear estimate has to beat."""


def c_r(r: int) -> int:
    """Returns ``r^3 (r+1) A``.

    >>> c_r(3)
    62316
    """
    return r ** 3 * (r + 1) * A


@dataclass(frozen=True)
class BoundConstants:
    """The constants as one record, e.g. for reports."""

    A: int = A
    epsilon: Fraction = EPSILON

    def c_r(self, r: int) -> int:
        return r ** 3 * (r + 1) * self.A


CONSTANTS = BoundConstants()


def _exponent(r: int, linear: bool) -> float:
    return 2 + 1 / (r - 1) if linear else 3


def theorem1_bound(n: int, delta: int, r: int, linear: bool = False) -> float:
    """Returns ``C_r Delta^3 ln n``, or ``C_r Delta^(2 + 1/(r-1)) ln n`` for
    linear hypergraphs.

    :param n: the vertex count, at least 2
    :type n: int
    :param delta: the maximum degree, at least 1
    :type delta: int
    :param r: the uniformity, at least 3
    :type r: int
    :param linear: whether the linear bound is requested
    :type linear: bool, optional
    :raises ValueError: if an argument is out of range
    :return: the bound on the ground set size
    :rtype: float
    """
    if n < 2 or delta < 1 or r < 3:
        raise ValueError(f'Need n >= 2, delta >= 1 and r >= 3 - got n={n}, '
                         f'delta={delta}, r={r}')
    return c_r(r) * delta ** _exponent(r, linear) * math.log(n)


def matchings_size_bound(n: int, L: int, r: int, linear: bool = False) -> float:
    """Returns ``A L^3 ln n``, or ``A (r+1) L^(2 + 1/(r-1)) ln n`` for linear
    hypergraphs: the size of one construction with ``L`` matchings."""
    if n < 2 or L < 1 or r < 3:
        raise ValueError(f'Need n >= 2, L >= 1 and r >= 3 - got n={n}, L={L}, r={r}')
    factor = A * (r + 1) if linear else A
    return factor * L ** _exponent(r, linear) * math.log(n)


def general_nonedge_bound(L: int, t: int, epsilon: Fraction = EPSILON) -> Fraction:
    """Returns ``L (1 + eps) p^2 t`` with ``p = 1/(4L)``, the largest
    intersection count a non-edge can reach in general mode (``3t/(32L)``
    for ``eps = 1/2``)."""
    p = Fraction(1, 4 * L)
    return L * (1 + Fraction(epsilon)) * p * p * t


def check_size_against_bound(rep: 'Representation', graph: Hypergraph) -> bool:
    """Returns whether the ground set of a built representation respects
    :func:`theorem1_bound` for the construction mode it was built with.

    :param rep: a representation produced by the builder for ``graph``
    :type rep: Representation
    :param graph: the hypergraph
    :type graph: Hypergraph
    :raises ValueError: if the representation carries no metadata or was
                        built with a constant scale other than 1
    :return: True, if the size bound holds
    :rtype: bool
    """
    metadata = rep.metadata
    if metadata is None:
        raise ValueError('Representation carries no construction metadata')
    if metadata.scale != 1:
        raise ValueError(f'Size bound only applies at scale 1 - got {metadata.scale}')

    bound = theorem1_bound(graph.n, graph.max_degree, metadata.r, metadata.mode == 'linear')
    return rep.ground_size <= bound
