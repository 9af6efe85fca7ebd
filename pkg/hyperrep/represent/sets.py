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
"""Set algebra on sorted integer arrays and dense bit vectors.

Sets of ground elements are stored as sorted ``int64`` numpy arrays. When
many intersections over the same sets are needed, they are converted to
Python integers used as bit vectors; ``a & b`` and :meth:`int.bit_count`
then give intersection sizes without materialising elements.
"""

import operator

from typing import Callable, List, Sequence, Tuple

import numpy as np

__all__ = [
    'as_element_array', 'to_bitset', 'intersect', 'intersection_size', 'set_backend'
]


def as_element_array(elements) -> np.ndarray:
    """Returns the given elements as a sorted, duplicate free ``int64`` array."""
    return np.unique(np.asarray(elements, dtype=np.int64))


def to_bitset(elements: np.ndarray, size: int) -> int:
    """Converts sorted element indices in ``[0, size)`` into a bit vector.

    :param elements: the element indices
    :type elements: np.ndarray
    :param size: the ground set size
    :type size: int
    :return: an integer with bit ``e`` set for every element ``e``
    :rtype: int
    """
    if len(elements) == 0 or size == 0:
        return 0
    mask = np.zeros(size, dtype=bool)
    mask[elements] = True
    return int.from_bytes(np.packbits(mask, bitorder='little').tobytes(), 'little')


def intersect(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """Returns the intersection of two sorted, duplicate free arrays.

    Each element of the smaller array is located in the larger one by binary
    search, so the cost is ``O(small * log(large))``.
    """
    if len(first) > len(second):
        first, second = second, first
    if len(first) == 0:
        return first
    positions = np.searchsorted(second, first)
    positions[positions == len(second)] = len(second) - 1
    return first[second[positions] == first]


def intersection_size(arrays: Sequence[np.ndarray]) -> int:
    """Returns the size of the common intersection of all given sets.

    The smallest set is taken as the pivot and intersected with the others
    in order of increasing size; the loop stops as soon as nothing is left.

    :param arrays: sorted, duplicate free arrays
    :type arrays: Sequence[np.ndarray]
    :return: the intersection size
    :rtype: int
    """
    if not arrays:
        raise ValueError('Intersection over an empty collection is undefined')

    ordered = sorted(arrays, key=len)
    current = ordered[0]
    for other in ordered[1:]:
        if len(current) == 0:
            break
        current = intersect(current, other)
    return int(len(current))


def set_backend(sets: Sequence[np.ndarray], size: int,
                dense: bool) -> Tuple[List, Callable, Callable]:
    """Prepares sets for repeated intersections.

    :param sets: sorted element arrays over ``[0, size)``
    :type sets: Sequence[np.ndarray]
    :param size: the ground set size
    :type size: int
    :param dense: whether to convert the sets to bit vectors
    :type dense: bool
    :return: the converted members, a binary intersection and a size function
    :rtype: Tuple[List, Callable, Callable]
    """
    if dense:
        return [to_bitset(s, size) for s in sets], operator.and_, int.bit_count
    return list(sets), intersect, len
