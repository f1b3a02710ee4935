import unittest
from io import StringIO

import networkx as nx

from coverideal.exceptions import GeneralError
from coverideal.exceptions import GraphInputError
from coverideal.graph_core import Graph
from coverideal.graph_core import complement
from coverideal.graph_core import complete_graph
from coverideal.graph_core import count_triangles
from coverideal.graph_core import cycle_graph
from coverideal.graph_core import empty_graph
from coverideal.graph_core import enumerate_induced_odd_cycles
from coverideal.graph_core import format_graph
from coverideal.graph_core import induced_subgraph
from coverideal.graph_core import is_bipartite
from coverideal.graph_core import is_chordless_cycle
from coverideal.graph_core import is_independent
from coverideal.graph_core import largest_induced_odd_cycle
from coverideal.graph_core import neighbors
from coverideal.graph_core import parse_graph
from coverideal.graph_core import path_graph
from coverideal.graph_core import petersen_graph
from coverideal.graph_core import read_graph
from coverideal.utilities import popcount

from tests.graph_fixtures import C5_EDGES
from tests.graph_fixtures import PETERSEN_DIMACS
from tests.graph_fixtures import captured_output
from tests.graph_fixtures import random_graphs


class TestGraph(unittest.TestCase):

    def test_edges_are_sorted_pairs(self):
        g = Graph(3, [(2, 0), (1, 0)])
        self.assertEqual(g.edges, ((0, 1), (0, 2)))
        self.assertEqual(g.num_edges, 2)
        self.assertTrue(g.has_edge(2, 0))
        self.assertEqual(g.degree(0), 2)

    def test_default_labels(self):
        g = cycle_graph(5)
        self.assertEqual(g.labels, ('1', '2', '3', '4', '5'))
        self.assertEqual(g.format_set(0b11111), '{1,2,3,4,5}')
        self.assertEqual(g.vertex_set(['2', '4']), 0b1010)

    def test_rejects_loops_and_repeats(self):
        with self.assertRaises(GeneralError):
            Graph(2, [(1, 1)])
        with self.assertRaises(GeneralError):
            Graph(2, [(0, 1), (1, 0)])
        with self.assertRaises(GeneralError):
            Graph(65)

    def test_networkx_conversion(self):
        self.assertEqual(Graph.from_networkx(nx.cycle_graph(5)), cycle_graph(5))
        G = petersen_graph().to_networkx()
        self.assertEqual(G.number_of_edges(), 15)
        self.assertEqual(G.nodes[0]['label'], '1')


class TestParsing(unittest.TestCase):

    def test_numeric_edge_list(self):
        g = parse_graph(C5_EDGES)
        self.assertEqual(g, cycle_graph(5))

    def test_label_edge_list(self):
        g = parse_graph('a b\nb c\n')
        self.assertEqual(g.labels, ('a', 'b', 'c'))
        self.assertEqual(g.edges, ((0, 1), (1, 2)))

    def test_isolated_vertex_lines(self):
        g = parse_graph('1 2\n4\n')
        self.assertEqual(g.n, 4)
        self.assertEqual(g.edges, ((0, 1),))

    def test_repeated_edge_is_dropped_with_warning(self):
        with captured_output() as (out, err):
            g = parse_graph('1 2\n2 3\n2 1\n3 2\n')
        self.assertEqual(g.num_edges, 2)
        self.assertIn('2 repeated edge(s) ignored on line(s) 3, 4', err.getvalue())
        self.assertIn('strict mode rejects them', err.getvalue())
        with captured_output() as (out, err):
            g = parse_graph('p edge 2 2\ne 1 2\ne 2 1\n')
        self.assertEqual(g.num_edges, 1)
        self.assertIn('on line(s) 3', err.getvalue())

    def test_repeated_edge_strict(self):
        with self.assertRaises(GraphInputError) as cm:
            parse_graph('1 2\n2 1\n', strict=True)
        self.assertEqual(cm.exception.lineno, 2)

    def test_malformed_lines(self):
        with self.assertRaises(GraphInputError) as cm:
            parse_graph('1 2\n1 2 3\n')
        self.assertIn('line 2', cm.exception.message)
        with self.assertRaises(GraphInputError):
            parse_graph('3 3\n')
        with self.assertRaises(GraphInputError):
            parse_graph('0 1\n')

    def test_dimacs(self):
        g = parse_graph(PETERSEN_DIMACS)
        self.assertEqual(g, petersen_graph())
        g = parse_graph('p edge 3 2\ne 1 2\ne 2 3\n', input_format='dimacs')
        self.assertEqual(g, path_graph(3))

    def test_dimacs_errors(self):
        with self.assertRaises(GraphInputError) as cm:
            parse_graph('p edge 3 1\ne 1 4\n', input_format='dimacs')
        self.assertEqual(cm.exception.lineno, 2)
        with self.assertRaises(GraphInputError):
            parse_graph('e 1 2\n', input_format='dimacs')
        with self.assertRaises(GraphInputError):
            parse_graph('c nothing here\n', input_format='dimacs')

    def test_dimacs_count_mismatch_warns(self):
        with captured_output() as (out, err):
            g = parse_graph('p edge 3 5\ne 1 2\n')
        self.assertEqual(g.num_edges, 1)
        self.assertIn('declares 5 edges', err.getvalue())

    def test_read_graph_from_file_object(self):
        self.assertEqual(read_graph(StringIO(C5_EDGES)), cycle_graph(5))

    def test_format_graph(self):
        self.assertEqual(format_graph(cycle_graph(4), 'dimacs'), 'p edge 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n')
        g = parse_graph('a b\nc\n')
        self.assertEqual(parse_graph(format_graph(g)), g)


class TestStructure(unittest.TestCase):

    def test_complement(self):
        self.assertEqual(complement(cycle_graph(4)).edges, ((0, 2), (1, 3)))
        self.assertEqual(complement(cycle_graph(5)).num_edges, 5)
        self.assertEqual(complement(complete_graph(4)).num_edges, 0)

    def test_induced_subgraph_keeps_labels(self):
        h = induced_subgraph(cycle_graph(5), 0b10101)
        self.assertEqual(h.labels, ('1', '3', '5'))
        self.assertEqual(h.edges, ((0, 2),))

    def test_neighbors_and_independence(self):
        g = cycle_graph(5)
        self.assertEqual(neighbors(g, 0b1), 0b10010)
        self.assertTrue(is_independent(g, 0b101))
        self.assertFalse(is_independent(g, 0b11))
        with self.assertRaises(GeneralError):
            neighbors(g, 1 << 7)

    def test_bipartite(self):
        verdict = is_bipartite(cycle_graph(4))
        self.assertTrue(verdict.bipartite)
        self.assertEqual(verdict.parts, (0b0101, 0b1010))
        verdict = is_bipartite(cycle_graph(5))
        self.assertFalse(verdict.bipartite)
        self.assertEqual(len(verdict.odd_cycle), 5)
        self.assertTrue(is_bipartite(empty_graph(3)).bipartite)

    def test_odd_cycle_of_verdict_is_closed(self):
        for g in random_graphs(40, seed=3):
            verdict = is_bipartite(g)
            if verdict.bipartite:
                continue
            cycle = verdict.odd_cycle
            self.assertEqual(len(cycle) % 2, 1)
            for k in range(len(cycle)):
                self.assertTrue(g.has_edge(cycle[k], cycle[(k + 1) % len(cycle)]))

    def test_chordless_cycle(self):
        self.assertTrue(is_chordless_cycle(cycle_graph(5), 0b11111))
        self.assertFalse(is_chordless_cycle(complete_graph(4), 0b1111))
        self.assertTrue(is_chordless_cycle(complete_graph(4), 0b0111))
        self.assertFalse(is_chordless_cycle(path_graph(3), 0b111))
        two_triangles = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        self.assertFalse(is_chordless_cycle(two_triangles, 0b111111))


class TestOddCycleOracle(unittest.TestCase):

    def test_complete_graph(self):
        self.assertEqual(enumerate_induced_odd_cycles(complete_graph(4)), (0b0111, 0b1011, 0b1101, 0b1110))
        self.assertEqual(len(enumerate_induced_odd_cycles(complete_graph(5))), 10)

    def test_cycles(self):
        self.assertEqual(enumerate_induced_odd_cycles(cycle_graph(7), 5), (0b1111111,))
        self.assertEqual(enumerate_induced_odd_cycles(cycle_graph(7), 8), ())
        self.assertEqual(enumerate_induced_odd_cycles(cycle_graph(6)), ())

    def test_petersen_holes(self):
        holes = enumerate_induced_odd_cycles(petersen_graph(), 3)
        self.assertEqual(len(holes), 12)
        self.assertTrue(all(popcount(h) == 5 for h in holes))
        self.assertEqual(holes[0], 0b11111)

    def test_methods_agree(self):
        for g in random_graphs(60, seed=5):
            self.assertEqual(enumerate_induced_odd_cycles(g, 3, 'paths'), enumerate_induced_odd_cycles(g, 3, 'subsets'))

    @unittest.skipUnless(hasattr(nx, 'chordless_cycles'), 'networkx without chordless_cycles')
    def test_networkx_agrees(self):
        for g in random_graphs(60, seed=7):
            G = g.to_networkx()
            expected = {frozenset(c) for c in nx.chordless_cycles(G) if len(c) % 2 == 1 and len(c) >= 3}
            found = {frozenset(g.set_labels(c)) for c in enumerate_induced_odd_cycles(g, 3)}
            self.assertEqual(found, {frozenset(g.labels[i] for i in c) for c in expected})

    def test_largest_and_triangles(self):
        self.assertEqual(largest_induced_odd_cycle(cycle_graph(4)), 0)
        self.assertEqual(largest_induced_odd_cycle(cycle_graph(7)), 7)
        self.assertEqual(largest_induced_odd_cycle(complete_graph(4)), 3)
        self.assertEqual(count_triangles(complete_graph(4)), 4)
        self.assertEqual(count_triangles(complete_graph(5)), 10)
        self.assertEqual(count_triangles(petersen_graph()), 0)


if __name__ == '__main__':
    unittest.main()
