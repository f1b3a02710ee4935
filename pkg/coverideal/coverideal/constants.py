# Copyright (C) 2026: The coverideal developers
#
# This file is part of coverideal.
#
# coverideal is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# coverideal is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with coverideal.  If not, see <http://www.gnu.org/licenses/>.

import numpy as np

# Vertex sets are single Python integers used as bitmasks; keep graphs
# within one 64-bit machine word
MAX_VERTICES = 64

# Exponent vectors of monomials
exponenttype = np.int64

# Default variable name prefix, i.e. x1, x2, ...
variableprefix = 'x'

# Algorithms for irreducible decomposition
DECOMPOSITION_METHODS = ('split', 'dual')
DEFAULT_DECOMPOSITION_METHOD = 'dual'

# Algorithms for minimal vertex cover enumeration
COVER_METHODS = ('branch', 'dual')

# Command line verbs
VERBS = ('odd-holes', 'odd-cycles', 'perfect', 'ass', 'decompose', 'covers',
         'symbolic-square', 'secant', 'adeg', 'degree', 'saturation-test', 'bounds')

# Verbs that can read a monomial ideal document instead of a graph
IDEAL_VERBS = ('ass', 'decompose', 'adeg', 'degree')

# Default minimum cycle length (t) for verbs that take one
DEFAULT_MIN_LENGTH = {'odd-holes': 5, 'odd-cycles': 3, 'saturation-test': 4}

# Exit statuses
EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3
