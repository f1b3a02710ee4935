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

"""Finite simple graphs and the brute-force graph oracle.

Vertices are indexed 0..n-1 and carry string labels. A vertex set is a
single Python integer used as a bitmask (bit i set means vertex i is in the
set), so set algebra in the hot loops is a handful of bitwise operations.
"""

from collections import deque
from collections import namedtuple
import itertools
import re

from coverideal.constants import MAX_VERTICES
from coverideal.exceptions import GeneralError
from coverideal.exceptions import GraphInputError
from coverideal.utilities import bits_from_indices
from coverideal.utilities import iter_bits
from coverideal.utilities import open_path_file
from coverideal.utilities import popcount
from coverideal.utilities import warn

BipartiteVerdict = namedtuple('BipartiteVerdict', ['bipartite', 'parts', 'odd_cycle'])
BipartiteVerdict.__doc__ = """Outcome of a bipartiteness test.

    bipartite (bool): True if the graph has a proper 2-colouring.
    parts (tuple): Two vertex set bitmasks (colour 0, colour 1), or None.
    odd_cycle (tuple): Vertex indices of an odd cycle in traversal order, or None.
"""

_integer_token = re.compile(r'^[+-]?\d+$')


class Graph(object):
    """Finite simple graph with adjacency held as one bitmask per vertex."""

    def __init__(self, n, edges=(), labels=None):
        """
        Args:
            n (int): Number of vertices.
            edges (iterable): Pairs (i, j) of 0-based vertex indices.
            labels (list): Optional vertex labels, default '1'..'n'.
        """

        if n < 0:
            raise GeneralError('Number of vertices must be non-negative, not {}'.format(n))
        if n > MAX_VERTICES:
            raise GeneralError('Graphs with more than {} vertices are not supported ({} given)'.format(MAX_VERTICES, n))

        if labels is None:
            labels = [str(i + 1) for i in range(n)]
        labels = tuple(str(label) for label in labels)
        if len(labels) != n:
            raise GeneralError('Expected {} vertex labels, got {}'.format(n, len(labels)))
        if len(set(labels)) != n:
            raise GeneralError('Vertex labels must be unique')

        adjacency = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise GeneralError('Edge ({}, {}) has a vertex outside 0..{}'.format(i, j, n - 1))
            if i == j:
                raise GeneralError('Loop at vertex {} is not allowed in a simple graph'.format(labels[i]))
            if adjacency[i] >> j & 1:
                raise GeneralError('Duplicate edge {{{}, {}}}'.format(labels[i], labels[j]))
            adjacency[i] |= 1 << j
            adjacency[j] |= 1 << i

        self._setup(n, tuple(adjacency), labels)

    @classmethod
    def from_adjacency(cls, n, adjacency, labels=None):
        """Builds a graph from symmetric, loop-free adjacency bitmasks without re-validating them."""

        g = cls.__new__(cls)
        if labels is None:
            labels = tuple(str(i + 1) for i in range(n))
        g._setup(n, tuple(adjacency), tuple(labels))
        return g

    @classmethod
    def from_networkx(cls, G):
        """Converts a networkx graph; integer nodes are relabelled 1-based as in edge-list files.

        Args:
            G (networkx.Graph): Undirected simple graph.

        Returns:
            g (Graph): Converted graph.
        """

        nodes = list(G.nodes())
        try:
            nodes.sort()
        except TypeError:
            pass
        position = {node: i for i, node in enumerate(nodes)}
        labels = [str(node + 1) if isinstance(node, int) else str(node) for node in nodes]
        edges = [(position[u], position[v]) for u, v in G.edges() if u != v]
        return cls(len(nodes), edges, labels)

    def _setup(self, n, adjacency, labels):
        self.n = n
        self.adjacency = adjacency
        self.labels = labels
        self.vertices = (1 << n) - 1
        self.edges = tuple((i, j) for i in range(n) for j in iter_bits(adjacency[i] >> (i + 1) << (i + 1)))
        self._index = {label: i for i, label in enumerate(labels)}

    @property
    def num_edges(self):
        return len(self.edges)

    def has_edge(self, i, j):
        return bool(self.adjacency[i] >> j & 1)

    def degree(self, i):
        return popcount(self.adjacency[i])

    def index_of(self, label):
        """Vertex index of a label."""
        try:
            return self._index[str(label)]
        except KeyError:
            raise GeneralError('No vertex labelled {}'.format(label))

    def vertex_set(self, labels):
        """Bitmask of the vertices with the given labels."""
        return bits_from_indices(self.index_of(label) for label in labels)

    def format_set(self, mask):
        """Renders a vertex set with labels, e.g. {1,2,5}."""
        return '{' + ','.join(self.labels[i] for i in iter_bits(mask)) + '}'

    def set_labels(self, mask):
        """List of the labels of a vertex set in index order."""
        return [self.labels[i] for i in iter_bits(mask)]

    def to_networkx(self):
        """Converts to a networkx graph on nodes 0..n-1 with a 'label' node attribute."""

        import networkx as nx

        G = nx.Graph()
        for i, label in enumerate(self.labels):
            G.add_node(i, label=label)
        G.add_edges_from(self.edges)
        return G

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adjacency == other.adjacency

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self):
        return 'Graph(n={}, edges={})'.format(self.n, self.num_edges)


#################
# Constructors  #
#################

def empty_graph(n):
    return Graph(n)


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise GeneralError('A cycle needs at least 3 vertices')
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, itertools.combinations(range(n), 2))


def petersen_graph():
    """Outer 5-cycle 1..5, inner pentagram 6..10, spokes i -- i+5."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


###########################
# Reading and writing     #
###########################

def parse_graph(text, input_format='auto', strict=False):
    """Parses an edge-list or DIMACS .col document.

    Edge-list: one edge per line as two whitespace separated tokens, either
    1-based integers or arbitrary labels; a single token declares an
    isolated vertex; lines starting with '#' are comments.
    DIMACS: a 'p edge n m' header and 'e u v' lines; 'c' lines are comments.

    Args:
        text (str): Document contents.
        input_format (str): 'auto', 'edges' or 'dimacs'.
        strict (boolean): Reject repeated edges instead of dropping them.

    Returns:
        g (Graph): Parsed graph.
    """

    lines = text.splitlines()
    if input_format == 'auto':
        input_format = 'dimacs' if _looks_like_dimacs(lines) else 'edges'

    if input_format == 'dimacs':
        n, labels, records, declared = _read_dimacs(lines)
    elif input_format == 'edges':
        n, labels, records = _read_edge_list(lines)
        declared = None
    else:
        raise GeneralError("Unknown graph format '{}', expected 'edges' or 'dimacs'".format(input_format))

    return _build_graph(n, labels, records, declared, strict)


def read_graph(path_or_file, input_format='auto', strict=False):
    """Reads a graph document from a path or an open file object.

    Args:
        path_or_file: path as a string or a file object.
        input_format (str): 'auto', 'edges' or 'dimacs'.
        strict (boolean): Reject repeated edges instead of dropping them.

    Returns:
        g (Graph): Parsed graph.
    """

    with open_path_file(path_or_file) as f:
        text = f.read()

    return parse_graph(text, input_format=input_format, strict=strict)


def format_graph(g, output_format='edges'):
    """Serialises a graph as an edge-list (with labels) or a DIMACS document.

    Args:
        g (Graph): Graph to write.
        output_format (str): 'edges' or 'dimacs'.

    Returns:
        (str): Document text ending in a newline.
    """

    if output_format == 'dimacs':
        lines = ['p edge {} {}'.format(g.n, g.num_edges)]
        lines += ['e {} {}'.format(i + 1, j + 1) for i, j in g.edges]
    elif output_format == 'edges':
        lines = ['{} {}'.format(g.labels[i], g.labels[j]) for i, j in g.edges]
        lines += [g.labels[i] for i in range(g.n) if not g.adjacency[i]]
    else:
        raise GeneralError("Unknown graph format '{}', expected 'edges' or 'dimacs'".format(output_format))

    return '\n'.join(lines) + '\n'


def _looks_like_dimacs(lines):
    for line in lines:
        tokens = line.split()
        if len(tokens) >= 2 and tokens[0] == 'p' and tokens[1] in ('edge', 'col'):
            return True
    return False


def _parse_int(token, lineno):
    if not _integer_token.match(token):
        raise GraphInputError("expected an integer, found '{}'".format(token), lineno)
    return int(token)


def _read_dimacs(lines):
    n = None
    declared = None
    records = []
    skippedweights = False

    for lineno, line in enumerate(lines, 1):
        tokens = line.split()
        if not tokens or tokens[0] == 'c':
            continue
        if tokens[0] == 'p':
            if n is not None:
                raise GraphInputError('second problem line', lineno)
            if len(tokens) != 4 or tokens[1] not in ('edge', 'col'):
                raise GraphInputError("malformed problem line, expected 'p edge <n> <m>'", lineno)
            n = _parse_int(tokens[2], lineno)
            declared = _parse_int(tokens[3], lineno)
            if n < 0 or declared < 0:
                raise GraphInputError('negative size in problem line', lineno)
            if n > MAX_VERTICES:
                raise GraphInputError('{} vertices declared, at most {} are supported'.format(n, MAX_VERTICES), lineno)
        elif tokens[0] == 'e':
            if n is None:
                raise GraphInputError('edge line before the problem line', lineno)
            if len(tokens) != 3:
                raise GraphInputError("malformed edge line, expected 'e <u> <v>'", lineno)
            u = _parse_int(tokens[1], lineno)
            v = _parse_int(tokens[2], lineno)
            for w in (u, v):
                if not 1 <= w <= n:
                    raise GraphInputError('vertex {} outside the declared range 1..{}'.format(w, n), lineno)
            if u == v:
                raise GraphInputError('loop at vertex {}'.format(u), lineno)
            records.append((u - 1, v - 1, lineno))
        elif tokens[0] == 'n':
            skippedweights = True
        else:
            raise GraphInputError("unrecognised line type '{}'".format(tokens[0]), lineno)

    if n is None:
        raise GraphInputError("missing problem line 'p edge <n> <m>'")
    if skippedweights:
        warn('vertex weight lines ignored, weighted graphs are not supported')

    return n, None, records, declared


def _read_edge_list(lines):
    entries = []
    for lineno, line in enumerate(lines, 1):
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        tokens = stripped.split()
        if len(tokens) > 2:
            raise GraphInputError('expected two vertex tokens, found {}'.format(len(tokens)), lineno)
        entries.append((tokens, lineno))

    # Integer documents use 1-based indices; anything else is a list of labels
    numeric = all(_integer_token.match(token) for tokens, _ in entries for token in tokens)
    if numeric:
        for tokens, lineno in entries:
            for token in tokens:
                if int(token) < 1:
                    raise GraphInputError('vertex indices are 1-based, found {}'.format(token), lineno)
        n = max([int(token) for tokens, _ in entries for token in tokens], default=0)
        labels = None
        index = {str(i + 1): i for i in range(n)}
        resolve = lambda token: index[str(int(token))]
    else:
        labels = []
        index = {}
        for tokens, _ in entries:
            for token in tokens:
                if token not in index:
                    index[token] = len(labels)
                    labels.append(token)
        n = len(labels)
        resolve = index.__getitem__

    if n > MAX_VERTICES:
        raise GraphInputError('{} vertices found, at most {} are supported'.format(n, MAX_VERTICES))

    records = []
    for tokens, lineno in entries:
        if len(tokens) == 1:
            continue
        u, v = resolve(tokens[0]), resolve(tokens[1])
        if u == v:
            raise GraphInputError('loop at vertex {}'.format(tokens[0]), lineno)
        records.append((u, v, lineno))

    return n, labels, records


def _build_graph(n, labels, records, declared, strict):
    seen = set()
    edges = []
    duplicates = []
    for u, v, lineno in records:
        key = (min(u, v), max(u, v))
        if key in seen:
            if strict:
                raise GraphInputError('repeated edge, multigraphs are not supported', lineno)
            duplicates.append(lineno)
            continue
        seen.add(key)
        edges.append(key)

    if duplicates:
        warn('{} repeated edge(s) ignored on line(s) {} (strict mode rejects them)'.format(len(duplicates), ', '.join(str(lineno) for lineno in duplicates)))
    if declared is not None and declared != len(records):
        warn('problem line declares {} edges but {} edge lines were read'.format(declared, len(records)))

    return Graph(n, edges, labels)


##############################
# Structural operations      #
##############################

def complement(g):
    """Complementary graph: {i, j} is an edge iff it is not an edge of g (i != j)."""

    adjacency = [g.vertices & ~g.adjacency[i] & ~(1 << i) for i in range(g.n)]
    return Graph.from_adjacency(g.n, adjacency, g.labels)


def _check_subset(g, s):
    if s < 0 or s & ~g.vertices:
        raise GeneralError('Vertex set contains vertices outside 0..{}'.format(g.n - 1))


def induced_subgraph(g, s):
    """Induced subgraph G_S, reindexed in increasing vertex order, labels kept.

    Args:
        g (Graph): Graph.
        s (int): Vertex set bitmask.

    Returns:
        (Graph): Graph on |S| vertices with edge set {e in E : e within S}.
    """

    _check_subset(g, s)
    members = list(iter_bits(s))
    position = {v: k for k, v in enumerate(members)}
    adjacency = []
    for v in members:
        adjacency.append(bits_from_indices(position[w] for w in iter_bits(g.adjacency[v] & s)))

    return Graph.from_adjacency(len(members), adjacency, [g.labels[v] for v in members])


def neighbors(g, a):
    """N(A): vertices outside A adjacent to some vertex of A."""

    _check_subset(g, a)
    union = 0
    for v in iter_bits(a):
        union |= g.adjacency[v]

    return union & ~a


def is_independent(g, a):
    """True iff no edge has both ends in A."""

    _check_subset(g, a)
    return all(not g.adjacency[v] & a for v in iter_bits(a))


def is_bipartite(g):
    """Breadth-first 2-colouring.

    Args:
        g (Graph): Graph.

    Returns:
        (BipartiteVerdict): Colour classes when bipartite, otherwise an odd
            cycle closed by an edge between two vertices of the same layer.
    """

    colour = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g.adjacency[u]):
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    parent[w] = u
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return BipartiteVerdict(False, None, _odd_cycle(u, w, parent))

    parts = (bits_from_indices(i for i in range(g.n) if colour[i] == 0),
             bits_from_indices(i for i in range(g.n) if colour[i] == 1))
    return BipartiteVerdict(True, parts, None)


def _odd_cycle(u, w, parent):
    # u and w lie in the same BFS layer, so climbing in lockstep meets at their common ancestor
    left = [u]
    right = [w]
    while u != w:
        u = parent[u]
        w = parent[w]
        left.append(u)
        right.append(w)

    return tuple(left + right[-2::-1])


def is_chordless_cycle(g, s):
    """True iff the induced subgraph on S is a single cycle (|S| >= 3, 2-regular, connected)."""

    _check_subset(g, s)
    if popcount(s) < 3:
        return False
    for v in iter_bits(s):
        if popcount(g.adjacency[v] & s) != 2:
            return False

    reached = s & -s
    frontier = reached
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adjacency[v] & s
        frontier = nxt & ~reached
        reached |= nxt

    return reached == s


def _odd_floor(min_len):
    min_len = max(min_len, 3)
    return min_len if min_len % 2 else min_len + 1


def _sort_key(mask):
    return popcount(mask), tuple(iter_bits(mask))


def enumerate_induced_odd_cycles(g, min_len=3, method='paths'):
    """All vertex sets inducing a chordless odd cycle of length at least min_len.

    Args:
        g (Graph): Graph.
        min_len (int): Minimum length; raised to 3 and to the next odd value.
        method (str): 'paths' grows chordless paths from each lowest vertex;
                'subsets' tests every odd subset (slow, used to cross-check).

    Returns:
        (tuple): Vertex set bitmasks ordered by size then vertex indices.
    """

    min_len = _odd_floor(min_len)
    if method == 'paths':
        found = []
        for s in range(g.n):
            allowed = g.vertices & ~((1 << (s + 1)) - 1)
            for p1 in iter_bits(g.adjacency[s] & allowed):
                _extend_chordless_path(g.adjacency, s, p1, p1, (1 << s) | (1 << p1), 0, 2, allowed, min_len, found)
    elif method == 'subsets':
        found = []
        for size in range(min_len, g.n + 1, 2):
            for combo in itertools.combinations(range(g.n), size):
                mask = bits_from_indices(combo)
                if is_chordless_cycle(g, mask):
                    found.append(mask)
    else:
        raise GeneralError("Unknown enumeration method '{}'".format(method))

    return tuple(sorted(found, key=_sort_key))


def _extend_chordless_path(adjacency, s, p1, u, path, blocked, length, allowed, min_len, found):
    # path is s, p1, ..., u; blocked holds the closed neighbourhoods of the interior vertices
    candidates = adjacency[u] & allowed & ~path & ~blocked
    for v in iter_bits(candidates):
        if adjacency[s] >> v & 1:
            # v closes the cycle; count each cycle once by direction
            if v > p1 and length % 2 == 0 and length + 1 >= min_len:
                found.append(path | (1 << v))
        else:
            _extend_chordless_path(adjacency, s, p1, v, path | (1 << v), blocked | adjacency[u] | (1 << u),
                                   length + 1, allowed, min_len, found)


def largest_induced_odd_cycle(g):
    """Size of the largest induced odd cycle, 0 if the graph is bipartite."""

    cycles = enumerate_induced_odd_cycles(g, 3)
    return max((popcount(c) for c in cycles), default=0)


def count_triangles(g):
    """Number of 3-vertex sets inducing a triangle."""

    total = 0
    for i in range(g.n):
        for j in iter_bits(g.adjacency[i] >> (i + 1) << (i + 1)):
            total += popcount(g.adjacency[i] & g.adjacency[j] >> (j + 1) << (j + 1))

    return total
