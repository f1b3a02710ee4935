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

"""Monomial ideals in k[x_1, ..., x_n].

A monomial is an exponent vector, held as a tuple of ints. A monomial
ideal keeps its minimal generators both as a lexicographically sorted tuple
of tuples (for hashing and stable output) and as a read-only numpy matrix
with one generator per row (for the vectorised kernels).
"""

from collections import namedtuple
import itertools
import re

import numpy as np

from coverideal.constants import DECOMPOSITION_METHODS
from coverideal.constants import DEFAULT_DECOMPOSITION_METHOD
from coverideal.constants import exponenttype
from coverideal.constants import variableprefix
from coverideal.exceptions import GraphInputError
from coverideal.exceptions import IdealError
from coverideal.utilities import bits_from_indices
from coverideal.utilities import iter_bits
from coverideal.utilities import popcount

# Upper bound on booleans materialised by one broadcast divisibility test
_broadcastlimit = 1 << 22


IrreducibleComponent_tuple = namedtuple('IrreducibleComponent', ['exponents'])


class IrreducibleComponent(IrreducibleComponent_tuple):
    """Irreducible ideal m^a = (x_i^{a_i} : a_i > 0)."""

    @property
    def support(self):
        return bits_from_indices(i for i, e in enumerate(self.exponents) if e > 0)

    @property
    def height(self):
        return sum(1 for e in self.exponents if e > 0)

    def contains(self, m):
        """True iff the monomial m lies in m^a."""
        return any(0 < e <= mi for e, mi in zip(self.exponents, m))

    def is_subset_of(self, other):
        """m^a is inside m^b iff 0 < b_i <= a_i wherever a_i > 0."""
        return all(0 < b <= a for a, b in zip(self.exponents, other.exponents) if a > 0)

    def ideal(self):
        """The component as a MonomialIdeal generated by its pure powers."""
        n = len(self.exponents)
        gens = []
        for i, e in enumerate(self.exponents):
            if e > 0:
                m = [0] * n
                m[i] = e
                gens.append(m)
        return minimalize(gens, n)


MonomialPrime_tuple = namedtuple('MonomialPrime', ['support'])


class MonomialPrime(MonomialPrime_tuple):
    """Prime ideal generated by the variables in a bitmask."""

    @property
    def height(self):
        return popcount(self.support)

    @property
    def variables(self):
        return tuple(iter_bits(self.support))


StandardPair = namedtuple('StandardPair', ['m', 'z'])
StandardPair.__doc__ = """Standard pair (M, Z): M an exponent tuple, Z a bitmask of variables."""


class MonomialIdeal(object):
    """Monomial ideal given by its minimal generators.

    The empty generator set is the zero ideal; the single generator 1 (the
    zero exponent vector) is the unit ideal. Build instances through
    minimalize() unless the rows are already minimal.
    """

    def __init__(self, n, rows):
        """
        Args:
            n (int): Number of variables.
            rows (iterable): Minimal generators as exponent sequences.
        """

        self.n = n
        self.gens = tuple(sorted(tuple(int(e) for e in row) for row in rows))
        self.matrix = np.array(self.gens, dtype=exponenttype).reshape(len(self.gens), n)
        self.matrix.flags.writeable = False

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        return len(self.gens) == 1 and not any(self.gens[0])

    def is_proper_nonzero(self):
        return not self.is_zero() and not self.is_unit()

    def is_squarefree(self):
        return not self.gens or int(self.matrix.max()) <= 1

    def max_exponents(self):
        """Largest exponent of each variable over the generators (the lcm)."""
        if not self.gens:
            return np.zeros(self.n, dtype=exponenttype)
        return self.matrix.max(axis=0)

    def contains(self, m):
        """Monomial membership: some generator divides m."""
        _check_length(m, self.n)
        if not self.gens:
            return False
        return bool(np.all(self.matrix <= np.asarray(m, dtype=exponenttype), axis=1).any())

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.n == other.n and self.gens == other.gens

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self.gens))

    def __repr__(self):
        return 'MonomialIdeal(n={}, gens={})'.format(self.n, len(self.gens))


def _check_length(m, n):
    if len(m) != n:
        raise IdealError('Monomial has {} exponents, the ring has {} variables'.format(len(m), n))


def _check_same_ring(I, K):
    if I.n != K.n:
        raise IdealError('Ideals live in rings with {} and {} variables'.format(I.n, K.n))


def _divisible(candidates, gens):
    """Boolean array: row c of candidates is divisible by some row of gens."""

    result = np.zeros(len(candidates), dtype=bool)
    if len(gens) == 0 or len(candidates) == 0:
        return result
    chunk = max(1, _broadcastlimit // (len(gens) * gens.shape[1] + 1))
    for start in range(0, len(candidates), chunk):
        block = candidates[start:start + chunk]
        result[start:start + chunk] = np.all(gens[None, :, :] <= block[:, None, :], axis=2).any(axis=1)

    return result


def _minimal_rows(arr):
    """Divisibility antichain of the distinct rows of arr."""

    if len(arr) == 0:
        return arr
    arr = np.unique(arr, axis=0)
    degrees = arr.sum(axis=1)
    order = np.argsort(degrees, kind='stable')
    arr = arr[order]
    degrees = degrees[order]

    kept = np.empty_like(arr)
    count = 0
    # Distinct monomials of equal degree never divide each other
    for d in np.unique(degrees):
        block = arr[degrees == d]
        if count:
            block = block[~_divisible(block, kept[:count])]
        kept[count:count + len(block)] = block
        count += len(block)

    return kept[:count]


def minimalize(gens, n=None):
    """Minimal generating set of the ideal generated by gens.

    Args:
        gens (iterable): Monomials as exponent sequences, or a 2D array.
        n (int): Number of variables; required when gens is empty.

    Returns:
        (MonomialIdeal): Ideal with a divisibility antichain of generators.
    """

    if isinstance(gens, np.ndarray):
        arr = gens.astype(exponenttype, copy=False)
        if arr.ndim != 2:
            raise IdealError('Expected a 2D array of exponent vectors')
        lengths = {arr.shape[1]}
    else:
        rows = [tuple(m) for m in gens]
        lengths = {len(m) for m in rows}
        if len(lengths) > 1:
            raise IdealError('Monomials of mixed ambient dimensions {}'.format(sorted(lengths)))
        arr = np.array(rows, dtype=exponenttype)

    if lengths:
        width = lengths.pop()
        if n is not None and n != width:
            raise IdealError('Monomials have {} exponents, the ring has {} variables'.format(width, n))
        n = width
    elif n is None:
        raise IdealError('The number of variables is needed to build the zero ideal')

    if len(arr) == 0:
        return MonomialIdeal(n, [])
    arr = arr.reshape(len(arr), n)
    if (arr < 0).any():
        raise IdealError('Exponents must be non-negative')

    return MonomialIdeal(n, _minimal_rows(arr))


def zero_ideal(n):
    return MonomialIdeal(n, [])


def unit_ideal(n):
    return MonomialIdeal(n, [(0,) * n])


def monomial_ideal(n, gens):
    """Convenience constructor: minimalize gens in n variables."""
    return minimalize(gens, n)


##############################
# Ideal arithmetic           #
##############################

def product(I, K):
    """Product ideal generated by all g*h."""

    _check_same_ring(I, K)
    if I.is_zero() or K.is_zero():
        return zero_ideal(I.n)
    sums = (I.matrix[:, None, :] + K.matrix[None, :, :]).reshape(-1, I.n)
    return minimalize(sums, I.n)


def power(I, s):
    """s-fold product of I with itself; I^0 is the unit ideal."""

    if s < 0:
        raise IdealError('Power must be non-negative, not {}'.format(s))
    result = unit_ideal(I.n)
    for _ in range(s):
        result = product(result, I)

    return result


def intersect(I, K):
    """Intersection, generated by the pairwise lcms."""

    _check_same_ring(I, K)
    if I.is_zero() or K.is_zero():
        return zero_ideal(I.n)
    lcms = np.maximum(I.matrix[:, None, :], K.matrix[None, :, :]).reshape(-1, I.n)
    return minimalize(lcms, I.n)


def contains(I, m):
    """True iff the monomial m lies in I."""
    return I.contains(m)


def colon_by_monomial(I, m):
    """I : m, generated by g / gcd(g, m)."""

    _check_length(m, I.n)
    if I.is_zero():
        return zero_ideal(I.n)
    quotients = np.maximum(I.matrix - np.asarray(m, dtype=exponenttype), 0)
    return minimalize(quotients, I.n)


##############################
# Irreducible decomposition  #
##############################

def _require_proper(I, what):
    if I.is_zero():
        raise IdealError('{} of the zero ideal is not defined'.format(what))
    if I.is_unit():
        raise IdealError('{} of the unit ideal is not defined'.format(what))


def _add_generator(rows, w):
    """Minimal generators of (rows) + (w) when rows is already minimal."""

    if np.all(rows <= w, axis=1).any():
        return rows
    keep = ~np.all(rows >= w, axis=1)
    return np.vstack([rows[keep], w[None, :]])


def _canonical_key(rows):
    order = np.lexsort(rows.T[::-1])
    return rows[order].tobytes()


def _pure_part(rows, n):
    pure = np.zeros(n, dtype=exponenttype)
    single = np.count_nonzero(rows, axis=1) == 1
    for row in rows[single]:
        i = int(np.flatnonzero(row)[0])
        pure[i] = row[i]
    return pure, rows[~single]


def _contains_known(found, pure):
    """True iff some found component m^b lies inside m^pure."""

    if not found:
        return False
    F = np.array(found, dtype=exponenttype)
    inside = (F == 0) | ((pure > 0) & (pure <= F))
    return bool(np.all(inside, axis=1).any())


def _decompose_split(I):
    n = I.n
    found = []
    seen = set()
    stack = [np.array(I.matrix)]

    while stack:
        rows = stack.pop()
        key = _canonical_key(rows)
        if key in seen:
            continue
        seen.add(key)

        pure, mixed = _pure_part(rows, n)
        # Every leaf below this node contains m^pure
        if _contains_known(found, pure):
            continue
        if len(mixed) == 0:
            found.append(tuple(int(e) for e in pure))
            continue

        # Split on the variable shared by most mixed generators, at its smallest exponent
        i = int(np.argmax(np.count_nonzero(mixed, axis=0)))
        withi = mixed[mixed[:, i] > 0]
        withi = withi[np.lexsort(withi.T[::-1])]
        g = withi[np.argmin(withi[:, i])]
        rest = rows[~np.all(rows == g, axis=1)]
        u = np.zeros(n, dtype=exponenttype)
        u[i] = g[i]
        v = g.copy()
        v[i] = 0

        stack.append(_add_generator(rest, u))
        stack.append(_add_generator(rest, v))

    return _irredundant(found)


def _irredundant(found):
    """Drops components containing another component, and duplicates."""

    components = sorted(set(found))
    if not components:
        return []
    F = np.array(components, dtype=exponenttype)
    keep = []
    for k, a in enumerate(F):
        # m^b inside m^a for some other b
        inside = np.all((F == 0) | ((a > 0) & (a <= F)), axis=1)
        inside[k] = False
        if not inside.any():
            keep.append(components[k])

    return keep


def _dual_rows(I, a):
    """Generators of I^[a] = intersection of m^{a\\b} over generators b, built incrementally."""

    n = I.n
    rows = None
    for b in I.matrix:
        c = np.where(b > 0, a + 1 - b, 0)
        support = np.flatnonzero(c)
        if rows is None:
            rows = np.zeros((len(support), n), dtype=exponenttype)
            rows[np.arange(len(support)), support] = c[support]
            continue
        inside = np.any((rows[:, support] >= c[support]) & (c[support] > 0), axis=1)
        kept = rows[inside]
        outside = rows[~inside]
        raised = []
        for i in support:
            h = outside.copy()
            h[:, i] = c[i]
            raised.append(h)
        fresh = np.vstack(raised) if raised else np.zeros((0, n), dtype=exponenttype)
        fresh = _minimal_rows(fresh)
        fresh = fresh[~_divisible(fresh, kept)]
        rows = np.vstack([kept, fresh])

    return rows


def _decompose_dual(I):
    a = I.max_exponents()
    rows = _dual_rows(I, a)
    return [tuple(int(e) for e in np.where(b > 0, a + 1 - b, 0)) for b in rows]


def irreducible_decomposition(I, method=DEFAULT_DECOMPOSITION_METHOD):
    """Irredundant irreducible decomposition I = m^{a_1} cap ... cap m^{a_s}.

    Args:
        I (MonomialIdeal): Proper nonzero monomial ideal.
        method (str): 'split' splits a generator g = x_i^e * v into the
                branches (others, x_i^e) and (others, v) until only pure
                powers remain; 'dual' reads the components off the
                generators of the Alexander dual I^[a], a = lcm of gens.
                The split tree grows exponentially on J^2 of graphs past
                a dozen vertices, so 'dual' is the default and 'split'
                serves as an independent check on small inputs.

    Returns:
        (tuple): IrreducibleComponent instances in lexicographic order.
    """

    _require_proper(I, 'Irreducible decomposition')
    if method == 'split':
        components = _decompose_split(I)
    elif method == 'dual':
        components = _decompose_dual(I)
    else:
        raise IdealError("Unknown decomposition method '{}', expected one of {}".format(method, ', '.join(DECOMPOSITION_METHODS)))

    return tuple(IrreducibleComponent(c) for c in sorted(set(components)))


def intersect_components(components, n):
    """Intersection of irreducible components as a MonomialIdeal."""

    result = unit_ideal(n)
    for component in components:
        result = intersect(result, component.ideal())

    return result


def is_redundant_component(components, k, n):
    """True iff component k contains the intersection of the others (full intersection test)."""

    others = [c for j, c in enumerate(components) if j != k]
    if not others:
        return False
    rest = intersect_components(others, n)
    return all(components[k].contains(g) for g in rest.gens)


def associated_primes(I, method=DEFAULT_DECOMPOSITION_METHOD, components=None):
    """Distinct supports of the irredundant irreducible components.

    Args:
        I (MonomialIdeal): Proper nonzero monomial ideal.
        method (str): Decomposition method.
        components (tuple): Precomputed decomposition of I, if available.

    Returns:
        (tuple): MonomialPrime instances ordered by height then variables.
    """

    if components is None:
        components = irreducible_decomposition(I, method)
    supports = {c.support for c in components}
    return tuple(MonomialPrime(s) for s in sorted(supports, key=lambda s: (popcount(s), tuple(iter_bits(s)))))


def minimal_primes(primes):
    """Associated primes not strictly containing another associated prime."""

    return tuple(p for p in primes
                 if not any(q.support != p.support and q.support & ~p.support == 0 for q in primes))


##############################
# Alexander duality          #
##############################

def alexander_dual_squarefree(I):
    """I^vee: intersection over generators g of the prime on supp(g)."""

    if not I.is_squarefree():
        raise IdealError('Squarefree Alexander dual needs a squarefree ideal')
    _require_proper(I, 'Alexander dual')

    result = None
    for g in I.matrix:
        prime = minimalize(np.diag(g)[g > 0], I.n)
        result = prime if result is None else intersect(result, prime)

    return result


def generalized_dual(I, a, method=DEFAULT_DECOMPOSITION_METHOD, components=None):
    """Alexander dual I^[a] through the irreducible components of I.

    Each component m^b contributes the monomial with exponent a_i - b_i + 1
    where b_i >= 1 and 0 where b_i = 0.

    Args:
        I (MonomialIdeal): Proper nonzero monomial ideal.
        a (sequence): Exponent vector with every generator of I dividing x^a.
        method (str): Decomposition method.
        components (tuple): Precomputed decomposition of I, if available.

    Returns:
        (MonomialIdeal): I^[a].
    """

    _check_length(a, I.n)
    _require_proper(I, 'Generalized Alexander dual')
    a = np.asarray(a, dtype=exponenttype)
    if not np.all(I.matrix <= a):
        raise IdealError('Every generator must divide x^a for the dual with respect to a')

    if components is None:
        components = irreducible_decomposition(I, method)
    rows = []
    for component in components:
        b = np.asarray(component.exponents, dtype=exponenttype)
        rows.append(np.where(b > 0, a - b + 1, 0))

    return minimalize(np.array(rows), I.n)


def generalized_dual_direct(I, a):
    """I^[a] as the intersection of m^{a\\b} over the generators b of I."""

    _check_length(a, I.n)
    _require_proper(I, 'Generalized Alexander dual')
    a = np.asarray(a, dtype=exponenttype)
    if not np.all(I.matrix <= a):
        raise IdealError('Every generator must divide x^a for the dual with respect to a')

    return minimalize(_dual_rows(I, a), I.n)


##############################
# Standard pairs             #
##############################

def _standard_pairs_for(I, z, bounds):
    n = I.n
    free = [i for i in range(n) if not z >> i & 1]
    if not free:
        return []

    localised = np.array(I.matrix)
    localised[:, [i for i in range(n) if z >> i & 1]] = 0

    box = np.array(list(itertools.product(*[range(int(bounds[i]) + 1) for i in free])), dtype=exponenttype)
    candidates = np.zeros((len(box), n), dtype=exponenttype)
    candidates[:, free] = box

    # (b): M k[Z] misses I iff no Z-deleted generator divides M
    candidates = candidates[~_divisible(candidates, localised)]

    # (c): moving any further variable into Z must break (b)
    maximal = np.ones(len(candidates), dtype=bool)
    for i in free:
        deleted = candidates.copy()
        deleted[:, i] = 0
        widened = localised.copy()
        widened[:, i] = 0
        maximal &= _divisible(deleted, widened)

    return [StandardPair(tuple(int(e) for e in row), z) for row in candidates[maximal]]


def _exponent_bounds(I):
    return np.maximum(I.max_exponents() - 1, 0)


def standard_pairs(I, exhaustive=False, method=DEFAULT_DECOMPOSITION_METHOD):
    """Standard pairs (M, Z) of a monomial ideal.

    Args:
        I (MonomialIdeal): Proper nonzero monomial ideal.
        exhaustive (boolean): Search every Z instead of only the Z with
                P_Z associated.
        method (str): Decomposition method used to find the associated primes.

    Returns:
        (tuple): StandardPair instances ordered by Z then M.
    """

    _require_proper(I, 'Standard pairs')
    full = (1 << I.n) - 1
    if exhaustive:
        zs = range(full + 1)
    else:
        zs = [full & ~p.support for p in associated_primes(I, method)]

    bounds = _exponent_bounds(I)
    pairs = []
    for z in zs:
        pairs.extend(_standard_pairs_for(I, z, bounds))

    return tuple(sorted(pairs, key=lambda pair: (pair.z, pair.m)))


def multiplicity(I, z):
    """mult_I(P_Z): the number of standard pairs of the form (., Z).

    Args:
        I (MonomialIdeal): Monomial ideal.
        z (int): Bitmask of the variables in Z, i.e. those outside P_Z.

    Returns:
        (int): Multiplicity, 0 iff P_Z is not associated.
    """

    full = (1 << I.n) - 1
    if z & ~full or z < 0:
        raise IdealError('Variable set contains variables outside x1..x{}'.format(I.n))
    if I.is_unit():
        return 0
    if I.is_zero():
        return 1 if z == full else 0

    return len(_standard_pairs_for(I, z, _exponent_bounds(I)))


def prime_multiplicity(I, prime):
    """mult_I(P) for a monomial prime P."""
    return multiplicity(I, ((1 << I.n) - 1) & ~prime.support)


def arithmetic_degree(I, method=DEFAULT_DECOMPOSITION_METHOD, primes=None):
    """adeg(I): sum of the multiplicities over the associated primes."""

    _require_proper(I, 'Arithmetic degree')
    if primes is None:
        primes = associated_primes(I, method)
    return sum(prime_multiplicity(I, p) for p in primes)


def degree(I, method=DEFAULT_DECOMPOSITION_METHOD, primes=None):
    """deg(I): sum of the multiplicities over the minimal primes."""

    _require_proper(I, 'Degree')
    if primes is None:
        primes = associated_primes(I, method)
    return sum(prime_multiplicity(I, p) for p in minimal_primes(primes))


##############################
# Reading and writing        #
##############################

def default_names(n):
    return ['{}{}'.format(variableprefix, i + 1) for i in range(n)]


def format_monomial(m, names=None, style='human'):
    """Renders a monomial, e.g. x1^2*x3 (human) or '2 0 1' (exponents)."""

    if style == 'exponents':
        return ' '.join(str(e) for e in m)
    if names is None:
        names = default_names(len(m))
    factors = []
    for name, e in zip(names, m):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append('{}^{}'.format(name, e))

    return '*'.join(factors) if factors else '1'


def format_ideal(I, names=None, style='human'):
    """One generator per line, in canonical order."""
    return '\n'.join(format_monomial(m, names, style) for m in I.gens)


def format_prime(prime, names):
    return '(' + ','.join(names[i] for i in prime.variables) + ')'


_factor = re.compile(r'^([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$')
_exponent_line = re.compile(r'^\d+(\s+\d+)*$')


def parse_monomial(text, n=None, names=None, lineno=None):
    """Parses human syntax such as x1^2*x3, with default or custom variable names.

    Args:
        text (str): Monomial text; '1' is the unit monomial.
        n (int): Number of variables (default: largest xN index seen).
        names (list): Custom variable names, e.g. vertex labels.
        lineno (int): Line number for error messages.

    Returns:
        (tuple): Exponent vector.
    """

    powers = {}
    text = text.strip()
    if text != '1':
        for factor in text.split('*'):
            match = _factor.match(factor.strip())
            if not match:
                raise GraphInputError("malformed monomial factor '{}'".format(factor.strip()), lineno)
            name, exponent = match.group(1), int(match.group(2) or 1)
            if names is not None:
                if name not in names:
                    raise GraphInputError("unknown variable '{}'".format(name), lineno)
                index = list(names).index(name)
            else:
                digits = name[len(variableprefix):]
                if not name.startswith(variableprefix) or not digits.isdigit() or int(digits) < 1:
                    raise GraphInputError("variables are named {0}1, {0}2, ..., found '{1}'".format(variableprefix, name), lineno)
                index = int(digits) - 1
            powers[index] = powers.get(index, 0) + exponent

    if names is not None:
        n = len(names)
    if n is None:
        n = max(powers, default=-1) + 1
    if any(i >= n for i in powers):
        raise GraphInputError('variable index beyond the {} variables of the ring'.format(n), lineno)

    return tuple(powers.get(i, 0) for i in range(n))


def parse_ideal(text, n=None, names=None):
    """Parses an ideal document: one monomial per line, either as space
    separated exponents or in human syntax; '#' starts a comment line.

    Args:
        text (str): Document contents.
        n (int): Number of variables, inferred when omitted.
        names (list): Custom variable names for human syntax.

    Returns:
        (MonomialIdeal): Ideal generated by the listed monomials.
    """

    entries = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        if _exponent_line.match(stripped):
            entries.append(('exponents', tuple(int(t) for t in stripped.split()), lineno))
        else:
            entries.append(('human', stripped, lineno))

    widths = {len(value) for kind, value, _ in entries if kind == 'exponents'}
    if len(widths) > 1:
        raise GraphInputError('exponent lines of different lengths {}'.format(sorted(widths)))
    if names is not None:
        n = len(names)
    if widths:
        width = widths.pop()
        if n is not None and width != n:
            raise GraphInputError('exponent lines have {} entries, the ring has {} variables'.format(width, n))
        n = width

    monomials = []
    for kind, value, lineno in entries:
        if kind == 'human':
            monomials.append((parse_monomial(value, None, names, lineno), lineno))
        else:
            monomials.append((value, lineno))

    if n is None:
        n = max((len(m) for m, _ in monomials), default=0)
    gens = []
    for m, lineno in monomials:
        if len(m) > n:
            raise GraphInputError('monomial uses more than the {} variables of the ring'.format(n), lineno)
        gens.append(tuple(m) + (0,) * (n - len(m)))

    return minimalize(gens, n)
