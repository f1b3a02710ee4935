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

"""Odd induced cycles, odd holes and perfection read off the square of the
cover ideal J = I(G)^vee.

The irredundant irreducible components of J^2 are the two components
(x_i^2, x_j), (x_i, x_j^2) per edge and one all-2 component per odd induced
cycle, so the associated primes of height two are the edges and those of
odd height three or more are the odd induced cycles. No other heights occur.
"""

from collections import namedtuple

from coverideal.constants import DEFAULT_DECOMPOSITION_METHOD
from coverideal.constants import exponenttype
from coverideal.covers import cover_ideal
from coverideal.covers import mask_to_vector
from coverideal.exceptions import ConsistencyError
from coverideal.exceptions import CoverError
from coverideal.exceptions import GeneralError
from coverideal.graph_core import complement
from coverideal.graph_core import count_triangles
from coverideal.graph_core import enumerate_induced_odd_cycles
from coverideal.graph_core import is_chordless_cycle
from coverideal.monomial_algebra import IrreducibleComponent
from coverideal.monomial_algebra import MonomialIdeal
from coverideal.monomial_algebra import arithmetic_degree
from coverideal.monomial_algebra import associated_primes
from coverideal.monomial_algebra import degree
from coverideal.monomial_algebra import generalized_dual
from coverideal.monomial_algebra import irreducible_decomposition
from coverideal.monomial_algebra import power
from coverideal.monomial_algebra import prime_multiplicity
from coverideal.utilities import iter_bits
from coverideal.utilities import popcount


OddCycleReport_tuple = namedtuple('OddCycleReport', ['edges_found', 'odd_cycles', 'components', 'primes', 'square'])


class OddCycleReport(OddCycleReport_tuple):
    """Structure of Ass(R/J^2).

    edges_found (tuple): Height-2 MonomialPrimes, one per edge.
    odd_cycles (tuple): Vertex set bitmasks of the odd induced cycles, by size.
    components (tuple): Irreducible components of J^2.
    primes (tuple): All associated primes of J^2.
    square (MonomialIdeal): J^2.
    """

    @property
    def triangles(self):
        return tuple(c for c in self.odd_cycles if popcount(c) == 3)

    @property
    def holes(self):
        return tuple(c for c in self.odd_cycles if popcount(c) >= 5)

    @property
    def largest(self):
        return max((popcount(c) for c in self.odd_cycles), default=0)


PerfectionVerdict = namedtuple('PerfectionVerdict', ['perfect', 'witness', 'holes', 'complement_holes'])
PerfectionVerdict.__doc__ = """Outcome of the perfection test.

    perfect (bool): No odd hole on the searched sides.
    witness (tuple): (vertex set, in_complement) of the first hole, or None.
    holes (tuple): Odd holes of G (empty when G was not searched).
    complement_holes (tuple): Odd holes of the complement.
"""

AdegRecord = namedtuple('AdegRecord', ['adeg', 'expected', 'odd_hole_free'])

DepthBounds = namedtuple('DepthBounds', ['depth_upper', 'projdim_lower', 't'])
DepthBounds.__doc__ = """Bounds depth(R/J^2) <= n - t and projdim(R/J^2) >= t, both None when t = 0."""


def _require_edges(g):
    if not g.num_edges:
        raise CoverError('The cover ideal of an edgeless graph is not defined')


def _report(g, report, method):
    return report if report is not None else odd_induced_cycles_algebraic(g, method)


def odd_induced_cycles_algebraic(g, method=DEFAULT_DECOMPOSITION_METHOD):
    """Edges and odd induced cycles from the associated primes of J^2.

    Args:
        g (Graph): Graph with at least one edge.
        method (str): Decomposition method for J^2.

    Returns:
        (OddCycleReport): Report whose every entry has been checked against
            the graph.
    """

    _require_edges(g)
    square = power(cover_ideal(g), 2)
    components = irreducible_decomposition(square, method)
    primes = associated_primes(square, components=components)

    edges = []
    cycles = []
    for prime in primes:
        variables = prime.variables
        if prime.height == 2:
            if not g.has_edge(*variables):
                raise ConsistencyError('Height-2 prime on {} is not an edge'.format(g.format_set(prime.support)))
            edges.append(prime)
        elif prime.height % 2 == 0 or prime.height < 3:
            raise ConsistencyError('Associated prime of height {} on {}'.format(prime.height, g.format_set(prime.support)))
        else:
            if not is_chordless_cycle(g, prime.support):
                raise ConsistencyError('{} does not induce a chordless cycle'.format(g.format_set(prime.support)))
            cycles.append(prime.support)

    cycles.sort(key=lambda c: (popcount(c), tuple(iter_bits(c))))
    return OddCycleReport(tuple(edges), tuple(cycles), components, primes, square)


def has_odd_hole(g, method=DEFAULT_DECOMPOSITION_METHOD, report=None):
    """True iff some associated prime of J^2 has height at least 5."""

    report = _report(g, report, method)
    above_four = any(p.height >= 5 for p in report.primes)
    above_three = any(p.height >= 4 for p in report.primes)
    if above_four != above_three:
        raise ConsistencyError('Height thresholds 4 and 5 disagree')

    return above_four


def saturation_test(g, t, method=DEFAULT_DECOMPOSITION_METHOD, report=None):
    """Truth of J^2 : (L_t) = J^2, L_t the product of all sums of t distinct variables.

    A monomial prime contains L_t iff it contains t variables, so equality
    fails iff some associated prime of J^2 has height at least t. No colon
    ideal is formed.

    Args:
        g (Graph): Graph with at least one edge.
        t (int): Length threshold, at least 2.

    Returns:
        (bool): True iff G has no odd induced cycle of length >= t (t > 2).
    """

    if t <= 1:
        raise GeneralError('Saturation threshold t must exceed 1, not {}'.format(t))
    report = _report(g, report, method)
    return not any(p.height >= t for p in report.primes)


def is_perfect(g, side='both', method=DEFAULT_DECOMPOSITION_METHOD):
    """Perfection test on G and its complement.

    Args:
        g (Graph): Graph on at least 2 vertices.
        side (str): 'both', 'G' or 'complement'; the sides searched for holes.
        method (str): Decomposition method.

    Returns:
        (PerfectionVerdict): Verdict with the lexicographically least hole
            among the smallest ones, G searched before the complement.
    """

    if g.n < 2:
        raise GeneralError('The perfection test needs at least 2 vertices')
    if side not in ('both', 'G', 'complement'):
        raise GeneralError("Unknown side '{}'".format(side))

    holes = ()
    complement_holes = ()
    if side in ('both', 'G') and g.num_edges:
        holes = odd_induced_cycles_algebraic(g, method).holes
    if side in ('both', 'complement'):
        gc = complement(g)
        if gc.num_edges:
            complement_holes = odd_induced_cycles_algebraic(gc, method).holes

    witness = None
    if holes:
        witness = (holes[0], False)
    elif complement_holes:
        witness = (complement_holes[0], True)

    return PerfectionVerdict(witness is None, witness, holes, complement_holes)


def adeg_test(g, method=DEFAULT_DECOMPOSITION_METHOD, report=None):
    """Compares adeg(J^2) with 3|E| + t(G), t(G) the number of triangles.

    Returns:
        (AdegRecord): Equality holds exactly when G has no odd hole.
    """

    report = _report(g, report, method)
    adeg = arithmetic_degree(report.square, primes=report.primes)
    expected = 3 * g.num_edges + count_triangles(g)
    if adeg < expected:
        raise ConsistencyError('adeg(J^2)={} below 3|E|+t={}'.format(adeg, expected))
    odd_hole_free = adeg == expected
    if odd_hole_free == has_odd_hole(g, report=report):
        raise ConsistencyError('Arithmetic degree and associated primes disagree on odd holes')

    return AdegRecord(adeg, expected, odd_hole_free)


def degree_check(g, method=DEFAULT_DECOMPOSITION_METHOD, report=None):
    """deg(J^2), checked to equal 3|E|."""

    report = _report(g, report, method)
    value = degree(report.square, primes=report.primes)
    if value != 3 * g.num_edges:
        raise ConsistencyError('deg(J^2)={} differs from 3|E|={}'.format(value, 3 * g.num_edges))

    return value


def secant_ideal(g, method=DEFAULT_DECOMPOSITION_METHOD, report=None):
    """Second secant ideal of I(G): the generators of (J^2)^[2] without a square factor.

    Returns:
        (MonomialIdeal): Generated by the vertex products of the odd induced
            cycles, the zero ideal when G is bipartite.
    """

    report = _report(g, report, method)
    dual = generalized_dual(report.square, (2,) * g.n, components=report.components)
    if len(dual.gens):
        squarefree = dual.matrix[(dual.matrix <= 1).all(axis=1)]
    else:
        squarefree = dual.matrix
    # A subset of an antichain stays an antichain
    return MonomialIdeal(g.n, squarefree.astype(exponenttype))


def depth_bounds(g, method=DEFAULT_DECOMPOSITION_METHOD, report=None):
    """depth(R/J^2) <= n - t and projdim(R/J^2) >= t, t the largest odd induced cycle."""

    report = _report(g, report, method)
    t = report.largest
    if not t:
        return DepthBounds(None, None, 0)

    return DepthBounds(g.n - t, t, t)


def multiplicity_profile(g, method=DEFAULT_DECOMPOSITION_METHOD, report=None):
    """Multiplicity of J^2 at each associated prime.

    Edge primes must have multiplicity 3 and triangle primes 1; holes are
    reported as computed.

    Returns:
        (tuple): (MonomialPrime, multiplicity) pairs in prime order.
    """

    report = _report(g, report, method)
    profile = []
    for prime in report.primes:
        mult = prime_multiplicity(report.square, prime)
        if prime.height == 2 and mult != 3:
            raise ConsistencyError('Edge prime {} has multiplicity {}, not 3'.format(g.format_set(prime.support), mult))
        if prime.height == 3 and mult != 1:
            raise ConsistencyError('Triangle prime {} has multiplicity {}, not 1'.format(g.format_set(prime.support), mult))
        if mult < 1:
            raise ConsistencyError('Associated prime {} has multiplicity 0'.format(g.format_set(prime.support)))
        profile.append((prime, mult))

    return tuple(profile)


def expected_decomposition(g):
    """Components of J^2 predicted from the graph alone: (x_i^2, x_j) and
    (x_i, x_j^2) per edge, and the all-2 component per odd induced cycle.
    """

    _require_edges(g)
    components = []
    for i, j in g.edges:
        for ei, ej in ((2, 1), (1, 2)):
            a = [0] * g.n
            a[i], a[j] = ei, ej
            components.append(tuple(a))
    for cycle in enumerate_induced_odd_cycles(g, 3):
        components.append(tuple(2 * e for e in mask_to_vector(g, cycle)))

    return tuple(IrreducibleComponent(c) for c in sorted(components))
