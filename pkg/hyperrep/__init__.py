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
k-representations of bounded-degree r-uniform hypergraphs.

Subpackages:

* :mod:`hyperrep.core` - the hypergraph model and random generators
* :mod:`hyperrep.represent` - matchings, certified families, the builder,
  the verifier and the exact oracle
* :mod:`hyperrep.bounds` - size bounds and the counting lower bound
* :mod:`hyperrep.text` - ``.hg``, ``.rep`` and ``.dec`` readers and writers
"""

__version__ = '0.0.1'
