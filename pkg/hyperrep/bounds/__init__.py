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
Named constants with the size bounds they enter, and the counting argument
behind the lower bound for unions of matchings.
"""

from hyperrep.bounds.constants import *
from hyperrep.bounds.counting import *
