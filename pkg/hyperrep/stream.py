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
"""Reproducible random source.

Every random choice in this package is drawn from a :class:`CounterStream`:
the keystream of AES-128 in counter mode, keyed by a SHA-256 digest of the
seed and a list of labels. The generator is fully specified by the seed,
needs no global state and gives the same bits on every platform.
"""

from fractions import Fraction

import numpy as np

from cryptography.hazmat.primitives import hashes
from cryptography.hazmat.primitives.ciphers import (
    Cipher,
    algorithms,
    modes
)

__all__ = [
    'derive_key', 'derive_seed', 'CounterStream'
]

MAX_SEED = 1 << 128
"""Seeds must lie in ``[0, MAX_SEED)``."""


def _digest(seed: int, labels: tuple) -> bytes:
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise TypeError(f'Unexpected seed type: {type(seed)}')
    if not 0 <= seed < MAX_SEED:
        raise ValueError(f'Seed out of range [0, 2^128) - got {seed}')

    digest = hashes.Hash(hashes.SHA256())
    digest.update(seed.to_bytes(16, 'big'))
    for label in labels:
        digest.update(b'\x1f' + str(label).encode())
    return digest.finalize()


def derive_key(seed: int, *labels) -> bytes:
    """Derives the 16 byte AES key for the given seed and labels.

    :param seed: the seed, ``0 <= seed < 2**128``
    :type seed: int
    :raises TypeError: if the seed is not an integer
    :raises ValueError: if the seed is out of range
    :return: the key
    :rtype: bytes
    """
    return _digest(seed, labels)[:16]


def derive_seed(seed: int, *labels) -> int:
    """Derives a 64-bit child seed, e.g. ``derive_seed(master, attempt, i)``.

    :return: the child seed
    :rtype: int
    """
    return int.from_bytes(_digest(seed, ('seed',) + labels)[16:24], 'big')


class CounterStream:
    """AES-128/CTR keystream with helpers for the draws this package needs.

    >>> stream = CounterStream(7, 'matchings')
    >>> stream.below(10) in range(10)
    True

    :param seed: the seed, defaults to 0
    :type seed: int, optional
    :param labels: additional labels mixed into the key
    """

    def __init__(self, seed: int = 0, *labels) -> None:
        self.__encryptor = None
        self.set_seed(seed, *labels)

    def set_seed(self, seed: int, *labels) -> None:
        """Restarts the stream at counter zero under a new key.

        :param seed: the seed
        :type seed: int
        """
        key = derive_key(seed, *labels)
        cipher = Cipher(algorithms.AES(key), modes.CTR(bytes(16)))
        self.__encryptor = cipher.encryptor()

    def read(self, size: int) -> bytes:
        """Returns the next ``size`` bytes of the keystream."""
        if size < 0:
            raise ValueError(f'Invalid size: {size}')
        return self.__encryptor.update(bytes(size))

    def uint64(self, count: int) -> np.ndarray:
        """Returns ``count`` uniform 64-bit unsigned integers."""
        return np.frombuffer(self.read(8 * count), dtype='<u8').astype(np.uint64)

    def bernoulli(self, count: int, p) -> np.ndarray:
        """Returns a boolean mask where each entry is True with probability ``p``.

        The draw compares a 64-bit word with ``floor(p * 2**64)``; ``p`` may be
        a float or a :class:`~fractions.Fraction`.

        :param count: the number of trials
        :type count: int
        :param p: the success probability in ``[0, 1]``
        :type p: float | Fraction
        :return: the outcome mask
        :rtype: np.ndarray
        """
        if p <= 0:
            return np.zeros(count, dtype=bool)
        if p >= 1:
            return np.ones(count, dtype=bool)

        threshold = int(Fraction(p) * (1 << 64))
        return self.uint64(count) < np.uint64(threshold)

    def below(self, bound: int) -> int:
        """Returns a uniform integer in ``[0, bound)`` (rejection sampling).

        :raises ValueError: if the bound is not positive
        """
        if bound <= 0:
            raise ValueError(f'Bound must be positive - got {bound}')
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            value = int.from_bytes(self.read(8), 'little')
            if value < limit:
                return value % bound

    def permutation(self, n: int) -> np.ndarray:
        """Returns a uniform random permutation of ``range(n)``.

        The permutation orders ``n`` random 64-bit keys; ties (probability
        below ``n**2 / 2**65``) fall back to index order.
        """
        return np.argsort(self.uint64(n), kind='stable').astype(np.int64)

    def sample(self, n: int, k: int) -> list:
        """Returns ``k`` distinct values from ``range(n)`` (partial Fisher-Yates).

        :raises ValueError: if ``k > n``
        """
        if not 0 <= k <= n:
            raise ValueError(f'Cannot sample {k} values from {n}')
        pool = list(range(n))
        for i in range(k):
            j = i + self.below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]
