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
Matching decompositions, certified random families, the representation
builder, verification and the exact search for tiny instances.
"""

from hyperrep.represent.sets import *
from hyperrep.represent.base import *
from hyperrep.represent.matching import *
from hyperrep.represent.family import *
from hyperrep.represent.verifier import *
from hyperrep.represent.builder import *
from hyperrep.represent.oracle import *
