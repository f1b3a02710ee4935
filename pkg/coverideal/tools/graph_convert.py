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

import argparse
import os
import sys

from coverideal.exceptions import GraphInputError
from coverideal.graph_core import format_graph
from coverideal.graph_core import read_graph
from coverideal.utilities import error


def convert_graph(inputfile, outputformat, inputformat='auto', strict=False, outputfile=None):
    """Converts a graph file between the edge-list and DIMACS formats.

    Args:
        inputfile (str): Name of graph file including path.
        outputformat (str): 'edges' or 'dimacs'.
        inputformat (str): Format of the input, or 'auto' to detect it.
        strict (boolean): Flag to reject duplicate edges.
        outputfile (str): Name of converted file including path; None writes
            next to the input with extension .txt (edges) or .col (dimacs).

    Returns:
        outputfile (str): Name of the written file.
    """

    g = read_graph(inputfile, inputformat, strict)

    if outputfile is None:
        extension = '.col' if outputformat == 'dimacs' else '.txt'
        outputfile = os.path.splitext(inputfile)[0] + extension
        if os.path.abspath(outputfile) == os.path.abspath(inputfile):
            outputfile = os.path.splitext(inputfile)[0] + '_converted' + extension

    with open(outputfile, 'w') as f:
        f.write(format_graph(g, outputformat))

    print('Written {} ({} vertices, {} edges)'.format(outputfile, g.n, g.num_edges))

    return outputfile


if __name__ == "__main__":

    # Parse command line arguments
    parser = argparse.ArgumentParser(description='Converts a graph file between the edge-list and DIMACS .col formats.', usage='cd coverideal; python -m tools.graph_convert inputfile outputformat')
    parser.add_argument('inputfile', help='name of graph file including path')
    parser.add_argument('outputformat', choices=('edges', 'dimacs'), help='format of the converted file')
    parser.add_argument('--input-format', choices=('auto', 'edges', 'dimacs'), default='auto', help='format of the input file')
    parser.add_argument('--strict', action='store_true', default=False, help='flag to reject duplicate edges instead of merging them')
    parser.add_argument('-o', '--output', default=None, help='name of converted file including path')
    args = parser.parse_args()

    try:
        convert_graph(args.inputfile, args.outputformat, args.input_format, args.strict, args.output)
    except GraphInputError as e:
        error(e.message)
        sys.exit(2)
