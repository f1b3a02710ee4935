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

"""Vertex covers of order k, the cover ideal J = I(G)^vee and its symbolic square.

A cover vector a in N^n is a k-cover when a_i + a_j >= k on every edge; the
0/1 vectors of the minimal vertex covers generate J.
"""

from collections import namedtuple
import itertools

from coverideal.constants import COVER_METHODS
from coverideal.exceptions import ConsistencyError
from coverideal.exceptions import CoverError
from coverideal.graph_core import induced_subgraph
from coverideal.graph_core import is_bipartite
from coverideal.graph_core import is_independent
from coverideal.graph_core import neighbors
from coverideal.monomial_algebra import IrreducibleComponent
from coverideal.monomial_algebra import MonomialIdeal
from coverideal.monomial_algebra import alexander_dual_squarefree
from coverideal.monomial_algebra import intersect
from coverideal.monomial_algebra import power
from coverideal.monomial_algebra import zero_ideal
from coverideal.utilities import bits_from_indices
from coverideal.utilities import iter_bits


CoverSplit = namedtuple('CoverSplit', ['kind', 'b', 'c'])
CoverSplit.__doc__ = """Verdict of decompose_2cover.

    kind (str): '1+1' (two 1-covers), '2+0' (a 2-cover and a 0-cover) or 'irreducible'.
    b (tuple): First summand, None when irreducible.
    c (tuple): Second summand, None when irreducible.
"""

IrreducibleCoverCertificate = namedtuple('IrreducibleCoverCertificate', ['A', 'B', 'C'])
IrreducibleCoverCertificate.__doc__ = """Shape of an irreducible 2-cover as vertex set bitmasks.

    A (int): Entries 0; an independent set.
    B (int): Entries 2; exactly N(A).
    C (int): Entries 1; induces a non-bipartite graph without isolated vertices.
"""


def _require_edges(g, what):
    if not g.num_edges:
        raise CoverError('{} needs a graph with at least one edge'.format(what))


def _check_vector(g, a):
    if len(a) != g.n:
        raise CoverError('Cover vector has {} entries, the graph has {} vertices'.format(len(a), g.n))
    if any(e < 0 for e in a):
        raise CoverError('Cover vector entries must be non-negative')


def mask_to_vector(g, mask):
    """0/1 indicator vector of a vertex set."""
    return tuple(mask >> i & 1 for i in range(g.n))


def vector_to_mask(a):
    return bits_from_indices(i for i, e in enumerate(a) if e > 0)


def parse_cover_vector(g, text):
    """Reads a cover vector given as space separated integers in vertex order."""

    try:
        a = tuple(int(token) for token in text.split())
    except ValueError:
        raise CoverError("Cover vector '{}' must consist of integers".format(text.strip()))
    _check_vector(g, a)

    return a


def format_cover_vector(a):
    return ' '.join(str(e) for e in a)


def edge_ideal(g):
    """I(G) = (x_i x_j : {i, j} an edge); the zero ideal for an edgeless graph."""

    if not g.num_edges:
        return zero_ideal(g.n)
    rows = []
    for i, j in g.edges:
        m = [0] * g.n
        m[i] = m[j] = 1
        rows.append(m)

    return MonomialIdeal(g.n, rows)


def _covers_branch(g):
    found = set()
    stack = [0]
    while stack:
        cover = stack.pop()
        uncovered = next(((i, j) for i, j in g.edges if not (cover >> i & 1 or cover >> j & 1)), None)
        if uncovered is None:
            found.add(cover)
            continue
        i = uncovered[0]
        # Either i is in the cover, or all of its neighbours are
        stack.append(cover | g.adjacency[i])
        stack.append(cover | (1 << i))

    # Minimal iff every member has a neighbour outside the cover
    return [c for c in found if all(g.adjacency[v] & ~c for v in iter_bits(c))]


def minimal_vertex_covers(g, method='branch'):
    """All inclusion-minimal vertex covers.

    Args:
        g (Graph): Graph with at least one edge.
        method (str): 'branch' branches on the endpoint of an uncovered edge;
                'dual' reads the generators of the squarefree Alexander dual
                of the edge ideal.

    Returns:
        (tuple): Vertex set bitmasks in increasing order of their index tuples.
    """

    _require_edges(g, 'Minimal vertex cover enumeration')
    if method == 'branch':
        covers = _covers_branch(g)
    elif method == 'dual':
        covers = [vector_to_mask(m) for m in alexander_dual_squarefree(edge_ideal(g)).gens]
    else:
        raise CoverError("Unknown cover method '{}', expected one of {}".format(method, ', '.join(COVER_METHODS)))

    return tuple(sorted(covers, key=lambda c: tuple(iter_bits(c))))


def cover_ideal(g, method='branch'):
    """J = I(G)^vee, generated by the minimal vertex covers."""

    covers = minimal_vertex_covers(g, method)
    return MonomialIdeal(g.n, [mask_to_vector(g, c) for c in covers])


def is_k_cover(g, a, k):
    """True iff a is nonzero and a_i + a_j >= k on every edge."""

    _check_vector(g, a)
    if k < 0:
        raise CoverError('Cover order must be non-negative, not {}'.format(k))
    if not any(a):
        return False

    return all(a[i] + a[j] >= k for i, j in g.edges)


def _split_one_one(g, a):
    # Entries >= 2 give 1 to both summands; the entries equal to 1 must
    # alternate along every edge inside them, i.e. be properly 2-coloured
    ones = bits_from_indices(i for i, e in enumerate(a) if e == 1)
    verdict = is_bipartite(induced_subgraph(g, ones))
    if not verdict.bipartite:
        return None
    members = list(iter_bits(ones))
    first = {members[k] for k in iter_bits(verdict.parts[0])}
    b = tuple(1 if e >= 2 or i in first else 0 for i, e in enumerate(a))
    c = tuple(e - f for e, f in zip(a, b))
    if not (is_k_cover(g, b, 1) and is_k_cover(g, c, 1)):
        return None

    return CoverSplit('1+1', b, c)


def _split_two_zero(g, a):
    for i, e in enumerate(a):
        if e > 0:
            b = a[:i] + (e - 1,) + a[i + 1:]
            if is_k_cover(g, b, 2):
                c = tuple(1 if k == i else 0 for k in range(g.n))
                return CoverSplit('2+0', b, c)

    return None


def _split_exhaustive(g, a):
    splits = []
    for b in itertools.product(*[range(e + 1) for e in a]):
        c = tuple(e - f for e, f in zip(a, b))
        if is_k_cover(g, b, 1) and is_k_cover(g, c, 1):
            return CoverSplit('1+1', b, c)
        if is_k_cover(g, b, 2) and is_k_cover(g, c, 0):
            splits.append(CoverSplit('2+0', b, c))

    return splits[0] if splits else None


def decompose_2cover(g, a, method='coloring'):
    """Writes a 2-cover as a sum of two 1-covers, or of a 2-cover and a
    0-cover, preferring the first kind.

    Args:
        g (Graph): Graph with at least one edge.
        a (tuple): 2-cover.
        method (str): 'coloring' decides the 1+1 case by 2-colouring the
                entries equal to 1 and the 2+0 case by lowering one entry;
                'exhaustive' tries every b <= a componentwise.

    Returns:
        (CoverSplit): Witness split, or kind 'irreducible'.
    """

    a = tuple(int(e) for e in a)
    _require_edges(g, '2-cover decomposition')
    if not is_k_cover(g, a, 2):
        raise CoverError('({}) is not a 2-cover'.format(format_cover_vector(a)))

    if method == 'coloring':
        split = _split_one_one(g, a) or _split_two_zero(g, a)
    elif method == 'exhaustive':
        split = _split_exhaustive(g, a)
    else:
        raise CoverError("Unknown split method '{}'".format(method))

    return split if split is not None else CoverSplit('irreducible', None, None)


def classify_irreducible_2cover(g, a):
    """Certificate A (entries 0), B (entries 2), C (entries 1) of an irreducible 2-cover.

    Args:
        g (Graph): Graph.
        a (tuple): Irreducible 2-cover.

    Returns:
        (IrreducibleCoverCertificate): Checked certificate.
    """

    a = tuple(int(e) for e in a)
    if decompose_2cover(g, a).kind != 'irreducible':
        raise CoverError('({}) is reducible'.format(format_cover_vector(a)))
    if any(e > 2 for e in a):
        raise ConsistencyError('Irreducible 2-cover ({}) has an entry above 2'.format(format_cover_vector(a)))

    A = bits_from_indices(i for i, e in enumerate(a) if e == 0)
    B = bits_from_indices(i for i, e in enumerate(a) if e == 2)
    C = bits_from_indices(i for i, e in enumerate(a) if e == 1)
    induced = induced_subgraph(g, C)

    failures = []
    if not is_independent(g, A):
        failures.append('A is not independent')
    if neighbors(g, A) != B:
        failures.append('B differs from N(A)')
    if all(B >> i & 1 or B >> j & 1 for i, j in g.edges):
        failures.append('B is a vertex cover')
    if not C:
        failures.append('C is empty')
    if is_bipartite(induced).bipartite:
        failures.append('C induces a bipartite graph')
    if any(not induced.adjacency[v] for v in range(induced.n)):
        failures.append('C induces a graph with an isolated vertex')
    if failures:
        raise ConsistencyError('Certificate of irreducible 2-cover ({}) fails: {}'.format(format_cover_vector(a), '; '.join(failures)))

    return IrreducibleCoverCertificate(A, B, C)


def symbolic_square(g):
    """J^(2): intersection over the edges of (x_i, x_j)^2 = (x_i^2, x_j) cap (x_i, x_j^2)."""

    _require_edges(g, 'The symbolic square')
    result = None
    for i, j in g.edges:
        left = [0] * g.n
        right = [0] * g.n
        left[i], left[j] = 2, 1
        right[i], right[j] = 1, 2
        square = intersect(IrreducibleComponent(tuple(left)).ideal(), IrreducibleComponent(tuple(right)).ideal())
        result = square if result is None else intersect(result, square)

    return result


def irreducible_2covers(g, square=None):
    """Minimal generators of J^(2) that do not lie in J^2.

    Args:
        g (Graph): Graph with at least one edge.
        square (MonomialIdeal): J^2, if already computed.

    Returns:
        (tuple): Exponent tuples in lexicographic order.
    """

    if square is None:
        square = power(cover_ideal(g), 2)
    return tuple(m for m in symbolic_square(g).gens if not square.contains(m))
