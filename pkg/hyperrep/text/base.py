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
Line tokenizer shared by all text readers.
"""

import re

from fractions import Fraction
from typing import List

__all__ = [
    'Line', 'COMMENT', 'METADATA_KEYS', 'format_number', 'parse_number'
]

COMMENT = '#'
"""Lines starting with this character are comments."""

METADATA_KEYS = (
    'mode', 'r', 'L', 't', 'm', 'p', 'epsilon', 'seed', 'scale',
    'family_attempts', 'build_attempts'
)
"""Keys of the ``# key value`` comments that describe a representation."""


class Line:
    """Peekable iterator over the whitespace separated tokens of one line.

    >>> line = Line("3 4 1  # header")
    >>> line.ints()
    [3, 4, 1]
    >>> line.eol_comment
    'header'
    """

    RE_EOL_COMMENT = re.compile(r"\s*#.*")
    """Pattern for EOL (end of line) comments"""

    _default = object()

    raw: str
    """The raw line without trailing whitespace."""

    cleaned: str
    """The line without surrounding whitespace and EOL comment."""

    eol_comment: str
    """The removed trailing comment (if present)."""

    number: int
    """One-based position of the line in its source."""

    def __init__(self, line: str = None, number: int = 0) -> None:
        self._it = None
        self._head = self._default
        self.reset(line, number)

    def _get_next(self) -> str:
        try:
            return next(self._it)
        except StopIteration:
            return self._default

    def __next__(self) -> str:
        value = self._head
        if value is self._default:
            raise StopIteration()

        self._head = self._get_next()
        return value

    def __iter__(self) -> 'Line':
        return self

    def reset(self, line: str = None, number: int = 0) -> None:
        """Re-initializes this line with a new value.

        :param line: the next line, defaults to None
        :type line: str, optional
        :param number: its line number, defaults to 0
        :type number: int, optional
        """
        if isinstance(line, (bytearray, bytes)):
            line = line.decode()

        self.number = number
        self.eol_comment = None
        self.raw = (line or '').rstrip()
        self.cleaned = self.raw.strip()
        if self.is_comment():
            self.eol_comment = self.cleaned[1:].strip()
            self.cleaned = ''
        else:
            eol_match = Line.RE_EOL_COMMENT.search(self.cleaned)
            if eol_match is not None:
                self.eol_comment = eol_match.group(0).lstrip().lstrip(COMMENT).strip()
                self.cleaned = self.cleaned[:eol_match.start()]

        self._it = iter(self.cleaned.split())
        self._head = self._get_next()

    def is_comment(self) -> bool:
        """Returns whether the whole line is a comment."""
        return self.raw.lstrip().startswith(COMMENT)

    def is_blank(self) -> bool:
        """Returns whether the line has neither tokens nor a comment."""
        return not self.raw.strip()

    def peek(self, default: str = _default) -> str:
        """Returns the current token without moving forwards.

        :param default: value returned at the end of the line
        :type default: str, optional
        :raises StopIteration: at the end of the line if no default is given
        :return: the current token
        :rtype: str
        """
        if self._head is self._default:
            if default is not self._default:
                return default
            raise StopIteration()
        return self._head

    def next_int(self, what: str = 'value') -> int:
        """Consumes the current token as a decimal integer.

        :raises SyntaxError: at the end of the line or on a non-integer token
        """
        token = self.peek(None)
        if token is None:
            raise self.error(f'Expected {what} - got end of line')
        try:
            value = int(token, 10)
        except ValueError:
            raise self.error(f"Expected integer {what} - got '{token}'") from None
        next(self)
        return value

    def ints(self) -> List[int]:
        """Consumes all remaining tokens as integers."""
        values = []
        while self.has_next():
            values.append(self.next_int())
        return values

    def error(self, message: str) -> SyntaxError:
        """Creates a :class:`SyntaxError` pointing at this line."""
        return SyntaxError(f'line {self.number}: {message}')

    def has_eol(self) -> bool:
        """Returns whether this line carries a trailing comment."""
        return self.eol_comment is not None

    def has_next(self) -> bool:
        """Returns whether another token follows."""
        return self._head is not self._default

    def __bool__(self) -> bool:
        return self.has_next()

    def __len__(self) -> int:
        return len(self.cleaned)


def format_number(value) -> str:
    """Renders an exact fraction as ``a/b`` and a float with 17 significant
    digits."""
    if isinstance(value, float):
        return format(value, '.17g')
    return str(value)


def parse_number(text: str):
    """Inverse of :func:`format_number`: ``a/b`` becomes a
    :class:`~fractions.Fraction`, integers stay integers, anything else is a
    float."""
    if '/' in text:
        return Fraction(text)
    try:
        return int(text, 10)
    except ValueError:
        return float(text)
