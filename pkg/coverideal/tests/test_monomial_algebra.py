import itertools
import unittest

import numpy as np

from coverideal.covers import cover_ideal
from coverideal.covers import edge_ideal
from coverideal.exceptions import GraphInputError
from coverideal.exceptions import IdealError
from coverideal.graph_core import cycle_graph
from coverideal.monomial_algebra import MonomialPrime
from coverideal.monomial_algebra import StandardPair
from coverideal.monomial_algebra import alexander_dual_squarefree
from coverideal.monomial_algebra import arithmetic_degree
from coverideal.monomial_algebra import associated_primes
from coverideal.monomial_algebra import colon_by_monomial
from coverideal.monomial_algebra import contains
from coverideal.monomial_algebra import degree
from coverideal.monomial_algebra import format_ideal
from coverideal.monomial_algebra import format_monomial
from coverideal.monomial_algebra import generalized_dual
from coverideal.monomial_algebra import generalized_dual_direct
from coverideal.monomial_algebra import intersect
from coverideal.monomial_algebra import intersect_components
from coverideal.monomial_algebra import irreducible_decomposition
from coverideal.monomial_algebra import is_redundant_component
from coverideal.monomial_algebra import minimal_primes
from coverideal.monomial_algebra import minimalize
from coverideal.monomial_algebra import monomial_ideal
from coverideal.monomial_algebra import multiplicity
from coverideal.monomial_algebra import parse_ideal
from coverideal.monomial_algebra import parse_monomial
from coverideal.monomial_algebra import power
from coverideal.monomial_algebra import product
from coverideal.monomial_algebra import standard_pairs
from coverideal.monomial_algebra import unit_ideal
from coverideal.monomial_algebra import zero_ideal
from coverideal.monomial_algebra import _exponent_bounds
from coverideal.monomial_algebra import _standard_pairs_for

from tests.graph_fixtures import random_ideal_gens


def square_of_cover_ideal(n):
    return power(cover_ideal(cycle_graph(n)), 2)


def random_ideals(count, seed=1, max_vars=6, maxexp=3):
    rs = np.random.RandomState(seed)
    ideals = []
    for _ in range(count):
        n = int(rs.randint(2, max_vars + 1))
        gens = random_ideal_gens(rs, n, int(rs.randint(1, 7)), maxexp)
        ideals.append(monomial_ideal(n, gens))

    return ideals


class TestIdealArithmetic(unittest.TestCase):

    def test_minimalize(self):
        I = minimalize([(1, 1), (2, 1), (1, 1), (0, 3)])
        self.assertEqual(I.gens, ((0, 3), (1, 1)))
        self.assertEqual(I.matrix.shape, (2, 2))

    def test_minimalize_errors(self):
        with self.assertRaises(IdealError):
            minimalize([(1, 0), (1, 0, 0)])
        with self.assertRaises(IdealError):
            minimalize([])
        with self.assertRaises(IdealError):
            minimalize([(1, -1)])
        with self.assertRaises(IdealError):
            minimalize([(1, 0)], n=3)

    def test_zero_and_unit(self):
        self.assertTrue(minimalize([], n=3).is_zero())
        self.assertTrue(minimalize([(0, 0), (1, 2)]).is_unit())
        with self.assertRaises(IdealError):
            irreducible_decomposition(zero_ideal(2))
        with self.assertRaises(IdealError):
            irreducible_decomposition(unit_ideal(2))
        with self.assertRaises(IdealError):
            standard_pairs(unit_ideal(2))

    def test_product_and_power(self):
        x1 = monomial_ideal(2, [(1, 0)])
        x2 = monomial_ideal(2, [(0, 1)])
        self.assertEqual(product(x1, x2).gens, ((1, 1),))
        m = monomial_ideal(2, [(1, 0), (0, 1)])
        self.assertEqual(power(m, 2).gens, ((0, 2), (1, 1), (2, 0)))
        self.assertTrue(power(m, 0).is_unit())
        self.assertTrue(product(m, zero_ideal(2)).is_zero())
        with self.assertRaises(IdealError):
            product(m, monomial_ideal(3, [(1, 0, 0)]))

    def test_intersect(self):
        left = monomial_ideal(2, [(2, 0), (0, 1)])
        right = monomial_ideal(2, [(1, 0), (0, 2)])
        self.assertEqual(intersect(left, right).gens, ((0, 2), (1, 1), (2, 0)))

    def test_membership_of_intersection(self):
        rs = np.random.RandomState(4)
        for I in random_ideals(30, seed=2, max_vars=4):
            K = monomial_ideal(I.n, random_ideal_gens(rs, I.n, 3))
            both = intersect(I, K)
            for m in itertools.product(range(4), repeat=I.n):
                self.assertEqual(contains(both, m), contains(I, m) and contains(K, m))

    def test_colon(self):
        I = monomial_ideal(2, [(2, 1)])
        self.assertEqual(colon_by_monomial(I, (1, 0)).gens, ((1, 1),))
        self.assertEqual(colon_by_monomial(I, (0, 0)), I)
        m2 = monomial_ideal(2, [(2, 0), (1, 1), (0, 2)])
        self.assertTrue(colon_by_monomial(m2, (1, 1)).is_unit())


class TestDecomposition(unittest.TestCase):

    def test_single_monomial(self):
        components = irreducible_decomposition(monomial_ideal(2, [(1, 1)]))
        self.assertEqual([c.exponents for c in components], [(0, 1), (1, 0)])

    def test_square_of_triangle_cover_ideal(self):
        components = irreducible_decomposition(square_of_cover_ideal(3))
        self.assertEqual([c.exponents for c in components],
                         [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0), (2, 2, 2)])

    def test_square_of_four_cycle_cover_ideal(self):
        square = square_of_cover_ideal(4)
        self.assertEqual(square.gens, ((0, 2, 0, 2), (1, 1, 1, 1), (2, 0, 2, 0)))
        components = irreducible_decomposition(square)
        self.assertEqual(len(components), 8)
        self.assertTrue(all(c.height == 2 for c in components))

    def test_methods_agree_and_reintersect(self):
        for I in random_ideals(60, seed=11):
            split = irreducible_decomposition(I, 'split')
            self.assertEqual(split, irreducible_decomposition(I, 'dual'))
            self.assertEqual(intersect_components(split, I.n), I)

    def test_irredundant(self):
        for I in random_ideals(25, seed=12, max_vars=5):
            components = irreducible_decomposition(I)
            for k in range(len(components)):
                self.assertFalse(is_redundant_component(components, k, I.n))

    def test_redundancy_detected(self):
        components = irreducible_decomposition(monomial_ideal(2, [(1, 1)]))
        # (x1, x2) contains (x1) cap (x2)
        extra = components + (irreducible_decomposition(monomial_ideal(2, [(1, 0), (0, 1)]))[0],)
        self.assertTrue(is_redundant_component(extra, 2, 2))

    def test_unknown_method(self):
        with self.assertRaises(IdealError):
            irreducible_decomposition(monomial_ideal(1, [(1,)]), 'groebner')


class TestPrimes(unittest.TestCase):

    def test_associated_primes(self):
        primes = associated_primes(monomial_ideal(2, [(1, 1)]))
        self.assertEqual(primes, (MonomialPrime(0b01), MonomialPrime(0b10)))
        primes = associated_primes(square_of_cover_ideal(3))
        self.assertEqual([p.support for p in primes], [0b011, 0b101, 0b110, 0b111])
        primes = associated_primes(square_of_cover_ideal(5))
        self.assertEqual([p.height for p in primes], [2, 2, 2, 2, 2, 5])

    def test_minimal_primes(self):
        primes = associated_primes(square_of_cover_ideal(3))
        self.assertEqual([p.support for p in minimal_primes(primes)], [0b011, 0b101, 0b110])
        # (x1^2, x1 x2) = (x1) cap (x1^2, x2) has an embedded prime
        primes = associated_primes(monomial_ideal(2, [(2, 0), (1, 1)]))
        self.assertEqual([p.support for p in primes], [0b01, 0b11])
        self.assertEqual([p.support for p in minimal_primes(primes)], [0b01])


class TestDuality(unittest.TestCase):

    def test_squarefree_dual(self):
        self.assertEqual(alexander_dual_squarefree(monomial_ideal(2, [(1, 1)])).gens, ((0, 1), (1, 0)))
        self.assertEqual(alexander_dual_squarefree(edge_ideal(cycle_graph(4))).gens, ((0, 1, 0, 1), (1, 0, 1, 0)))
        self.assertEqual(alexander_dual_squarefree(edge_ideal(cycle_graph(3))).gens, ((0, 1, 1), (1, 0, 1), (1, 1, 0)))
        with self.assertRaises(IdealError):
            alexander_dual_squarefree(monomial_ideal(1, [(2,)]))

    def test_squarefree_dual_is_an_involution(self):
        for I in random_ideals(40, seed=13, maxexp=1):
            self.assertEqual(alexander_dual_squarefree(alexander_dual_squarefree(I)), I)

    def test_generalized_dual_of_triangle_square(self):
        dual = generalized_dual(square_of_cover_ideal(3), (2, 2, 2))
        self.assertEqual(dual.gens, ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 1, 1), (1, 2, 0), (2, 0, 1), (2, 1, 0)))

    def test_generalized_dual_of_four_cycle_square(self):
        dual = generalized_dual(square_of_cover_ideal(4), (2, 2, 2, 2))
        self.assertTrue(all(max(m) == 2 for m in dual.gens))

    def test_generalized_dual_specialises(self):
        for I in random_ideals(30, seed=14, maxexp=1):
            self.assertEqual(generalized_dual(I, (1,) * I.n), alexander_dual_squarefree(I))

    def test_generalized_dual_matches_direct_intersection(self):
        for I in random_ideals(40, seed=15):
            a = tuple(int(e) + 1 for e in I.max_exponents())
            self.assertEqual(generalized_dual(I, a), generalized_dual_direct(I, a))

    def test_generalized_dual_precondition(self):
        with self.assertRaises(IdealError):
            generalized_dual(monomial_ideal(2, [(3, 0)]), (2, 2))


class TestStandardPairs(unittest.TestCase):

    def test_pure_power(self):
        I = monomial_ideal(1, [(2,)])
        self.assertEqual(standard_pairs(I), (StandardPair((0,), 0), StandardPair((1,), 0)))
        self.assertEqual(multiplicity(I, 0), 2)

    def test_triangle_square(self):
        square = square_of_cover_ideal(3)
        self.assertEqual(multiplicity(square, 0b100), 3)
        self.assertEqual(multiplicity(square, 0b001), 3)
        self.assertEqual(multiplicity(square, 0), 1)
        self.assertEqual([p.m for p in standard_pairs(square) if p.z == 0], [(1, 1, 1)])
        self.assertEqual(multiplicity(square, 0b011), 0)

    def test_exhaustive_search_agrees(self):
        for I in random_ideals(25, seed=16, max_vars=4):
            self.assertEqual(standard_pairs(I), standard_pairs(I, exhaustive=True))

    def test_exponent_bound_is_wide_enough(self):
        # Pairs found in the max - 1 box are all the pairs found in a box two wider
        for I in random_ideals(40, seed=19, max_vars=4):
            bounds = _exponent_bounds(I)
            for z in range(1 << I.n):
                self.assertEqual(sorted(_standard_pairs_for(I, z, bounds)),
                                 sorted(_standard_pairs_for(I, z, bounds + 2)))

    def test_multiplicity_detects_associated_primes(self):
        for I in random_ideals(25, seed=17, max_vars=4):
            full = (1 << I.n) - 1
            associated = {full & ~p.support for p in associated_primes(I)}
            for z in range(full + 1):
                self.assertEqual(multiplicity(I, z) > 0, z in associated)

    def test_arithmetic_degree_and_degree(self):
        self.assertEqual(arithmetic_degree(square_of_cover_ideal(3)), 10)
        self.assertEqual(arithmetic_degree(square_of_cover_ideal(4)), 12)
        self.assertGreater(arithmetic_degree(square_of_cover_ideal(5)), 15)
        self.assertEqual(degree(square_of_cover_ideal(3)), 9)
        self.assertEqual(degree(square_of_cover_ideal(4)), 12)
        self.assertEqual(degree(square_of_cover_ideal(5)), 15)

    def test_adeg_bounds_degree(self):
        for I in random_ideals(25, seed=18, max_vars=4):
            embedded = len(associated_primes(I)) > len(minimal_primes(associated_primes(I)))
            self.assertGreaterEqual(arithmetic_degree(I), degree(I))
            self.assertEqual(arithmetic_degree(I) > degree(I), embedded)


class TestReadingWriting(unittest.TestCase):

    def test_format_monomial(self):
        self.assertEqual(format_monomial((2, 0, 1)), 'x1^2*x3')
        self.assertEqual(format_monomial((0, 0)), '1')
        self.assertEqual(format_monomial((2, 0, 1), ['a', 'b', 'c']), 'a^2*c')
        self.assertEqual(format_monomial((2, 0, 1), style='exponents'), '2 0 1')

    def test_parse_monomial(self):
        self.assertEqual(parse_monomial('x1^2*x3'), (2, 0, 1))
        self.assertEqual(parse_monomial('a^2*c', names=['a', 'b', 'c']), (2, 0, 1))
        self.assertEqual(parse_monomial('x2', n=3), (0, 1, 0))
        with self.assertRaises(GraphInputError):
            parse_monomial('x1^')
        with self.assertRaises(GraphInputError):
            parse_monomial('y1')

    def test_parse_ideal(self):
        human = parse_ideal('# generators\nx1^2*x3\nx2\n')
        self.assertEqual(human.gens, ((0, 1, 0), (2, 0, 1)))
        self.assertEqual(parse_ideal('2 0 1\n0 1 0\n'), human)
        self.assertEqual(parse_ideal('x1\n0 0 1\n').gens, ((0, 0, 1), (1, 0, 0)))
        self.assertEqual(format_ideal(human), 'x2\nx1^2*x3')
        with self.assertRaises(GraphInputError):
            parse_ideal('1 0\n1 0 0\n')


if __name__ == '__main__':
    unittest.main()
