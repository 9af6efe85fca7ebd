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
Basic component classes shared by the builder, the verifier and the
exact search.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from hyperrep.represent.sets import as_element_array

__all__ = [
    'Mode', 'RepMetadata', 'Representation'
]


class Mode(str, Enum):
    """Parameter regime of the construction.

    Members compare equal to their string value:

    >>> Mode.GENERAL == 'general'
    True
    >>> str(Mode.LINEAR)
    'linear'
    """

    GENERAL = 'general'
    LINEAR = 'linear'

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RepMetadata:
    """Describes how a representation was built.

    ``family_attempts`` holds the number of sampling attempts per matching
    in the successful build. ``decomposition`` and ``families`` are only
    kept when the builder runs with ``retain_families``; they are not
    written to text files.
    """

    mode: Mode
    r: int
    L: int
    t: int
    m: int
    p: Union[float, Fraction]
    epsilon: Fraction
    seed: int
    scale: float = 1.0
    family_attempts: Tuple[int, ...] = ()
    build_attempts: int = 1
    decomposition: Optional[object] = field(default=None, compare=False, repr=False)
    families: Optional[tuple] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True, eq=False)
class Representation:
    """Per-vertex element sets ``S_v`` over ``[0, ground_size)`` and the
    threshold ``k``.

    An r-set ``T`` is represented as an edge exactly when
    ``|cap_{v in T} S_v| >= k``.
    """

    n: int
    k: int
    ground_size: int
    vertex_sets: Tuple[np.ndarray, ...] = field(repr=False)
    metadata: Optional[RepMetadata] = None

    def __post_init__(self) -> None:
        if len(self.vertex_sets) != self.n:
            raise ValueError(f'Expected {self.n} vertex sets - got {len(self.vertex_sets)}')
        if self.k < 1:
            raise ValueError(f'Threshold must be positive - got {self.k}')
        for v, elements in enumerate(self.vertex_sets):
            if len(elements) and (elements[0] < 0 or elements[-1] >= self.ground_size):
                raise ValueError(f'Set of vertex {v} leaves [0, {self.ground_size})')
            # intersections binary-search the arrays
            if len(elements) > 1 and not np.all(np.diff(elements) > 0):
                raise ValueError(f'Set of vertex {v} is not strictly increasing')

    @classmethod
    def from_sets(cls, k: int, sets: Sequence[Iterable[int]],
                  ground_size: Optional[int] = None,
                  metadata: Optional[RepMetadata] = None) -> 'Representation':
        """Creates a representation from plain element collections.

        >>> rep = Representation.from_sets(1, [{0}, {0}, {0}])
        >>> rep.ground_size
        1

        :param k: the threshold
        :type k: int
        :param sets: one collection of elements per vertex
        :type sets: Sequence[Iterable[int]]
        :param ground_size: the ground set size, defaults to the largest
                            element plus one
        :type ground_size: int, optional
        :return: the representation
        :rtype: Representation
        """
        arrays = tuple(as_element_array(list(s)) for s in sets)
        if ground_size is None:
            ground_size = max((int(a[-1]) + 1 for a in arrays if len(a)), default=0)
        return cls(len(arrays), k, ground_size, arrays, metadata)

    def segment(self, v: int, i: int) -> np.ndarray:
        """Returns ``S_v`` restricted to segment ``i`` (``[i*t, (i+1)*t)``).

        :raises ValueError: if no metadata is attached
        """
        if self.metadata is None:
            raise ValueError('Representation carries no segment layout')
        t = self.metadata.t
        elements = self.vertex_sets[v]
        lo, hi = np.searchsorted(elements, [i * t, (i + 1) * t])
        return elements[lo:hi]
