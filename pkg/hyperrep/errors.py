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
Exceptions raised by the construction, search and verification routines.

Violations found while verifying a family or a representation are never
raised; they are reported as data. The classes below cover the cases where
a routine cannot produce a result at all.
"""

__all__ = [
    'HyperrepError', 'NotLinearError', 'ParameterUnderflowError',
    'RetriesExhaustedError', 'CapExceededError'
]


class HyperrepError(Exception):
    """Base class of all package specific errors."""


class NotLinearError(HyperrepError, ValueError):
    """Raised when the linear construction is requested for a hypergraph
    with two edges sharing more than one vertex."""


class ParameterUnderflowError(HyperrepError, ValueError):
    """Raised when the selected parameters yield a threshold ``k`` of zero."""


class RetriesExhaustedError(HyperrepError, RuntimeError):
    """Raised when a Las Vegas loop gives up.

    :param message: the error message
    :type message: str
    :param report: the report of the last failed attempt, defaults to None
    :type report: CertificateReport | VerificationReport, optional
    :param attempts: number of attempts made, defaults to 0
    :type attempts: int, optional
    """

    def __init__(self, message: str, report=None, attempts: int = 0) -> None:
        super().__init__(message)
        self.report = report
        self.attempts = attempts


class CapExceededError(HyperrepError, RuntimeError):
    """Raised by the exact search when no solution exists within its limits.

    :param message: the error message
    :type message: str
    :param limits: the limits that were applied, defaults to None
    :type limits: OracleLimits, optional
    """

    def __init__(self, message: str, limits=None) -> None:
        super().__init__(message)
        self.limits = limits
