import os
import tempfile
import unittest

from coverideal.graph_core import petersen_graph
from coverideal.graph_core import read_graph

from tests.graph_fixtures import PETERSEN_DIMACS
from tests.graph_fixtures import captured_output
from tools.graph_convert import convert_graph


class TestGraphConvert(unittest.TestCase):

    def test_dimacs_to_edges_and_back(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, 'petersen.col')
            with open(path, 'w') as f:
                f.write(PETERSEN_DIMACS)
            with captured_output() as (out, err):
                edges = convert_graph(path, 'edges')
                dimacs = convert_graph(edges, 'dimacs', inputformat='edges')
            self.assertEqual(edges, os.path.join(tmpdir, 'petersen.txt'))
            self.assertEqual(dimacs, os.path.join(tmpdir, 'petersen.col'))
            self.assertEqual(read_graph(edges), petersen_graph())
            self.assertEqual(read_graph(dimacs), petersen_graph())
            self.assertIn('10 vertices, 15 edges', out.getvalue())


if __name__ == '__main__':
    unittest.main()
