"""
Generate a deterministic corpus of graph files for the odd-cycle checks.

Corpus composition:
- Named graphs: C3..C9, K4, K5, Petersen, complements of C5 and C7
- Every graph of the networkx atlas with at least one edge (all graphs on
  up to 7 vertices, up to isomorphism), unless --no-atlas
- Seeded G(n, p) random graphs, n in [4, --max-nodes], p in {0.3, 0.5, 0.7}

Each graph is written as an edge list (graph_00001.txt, ...) or DIMACS
(--dimacs, graph_00001.col). Graph ids, sources and parameters are recorded in
corpus/manifest.csv, the input of run_corpus_check.py.

Usage:
    python generate_corpus.py
    python generate_corpus.py --random 200 --seed 7 --output corpus_small
"""

import argparse
import csv
import os
import sys

import networkx as nx
import numpy as np
from tqdm import tqdm

from coverideal.graph_core import Graph
from coverideal.graph_core import complement
from coverideal.graph_core import complete_graph
from coverideal.graph_core import cycle_graph
from coverideal.graph_core import format_graph
from coverideal.graph_core import petersen_graph
from coverideal.utilities import get_terminal_width

OUTPUT_DIR = "corpus"
MANIFEST_FILE = "manifest.csv"
RANDOM_GRAPHS = 500
SEED = 2026
MIN_NODES = 4
MAX_NODES = 10
PROBABILITIES = [0.3, 0.5, 0.7]

FIELDNAMES = [
    "graph_id",
    "file",
    "source",
    "vertices",
    "edges",
    "p",
    "seed",
]


def named_graphs():
    graphs = [("C{}".format(n), cycle_graph(n)) for n in range(3, 10)]
    graphs += [("K4", complete_graph(4)), ("K5", complete_graph(5)), ("petersen", petersen_graph())]
    graphs += [("antihole_C{}".format(n), complement(cycle_graph(n))) for n in (5, 7)]
    return graphs


def atlas_graphs():
    return [("atlas_{}".format(k), Graph.from_networkx(G))
            for k, G in enumerate(nx.graph_atlas_g()) if G.number_of_edges()]


def random_graphs(count, seed, max_nodes):
    """Yields (source, graph, p, graph seed) for seeded G(n, p) graphs with at least one edge."""

    rs = np.random.RandomState(seed)
    made = 0
    while made < count:
        n = int(rs.randint(MIN_NODES, max_nodes + 1))
        p = PROBABILITIES[int(rs.randint(len(PROBABILITIES)))]
        graphseed = int(rs.randint(2**31 - 1))
        G = nx.gnp_random_graph(n, p, seed=graphseed)
        if not G.number_of_edges():
            continue
        made += 1
        yield "gnp", Graph.from_networkx(G), p, graphseed


def main():
    parser = argparse.ArgumentParser(
        description="Generate a deterministic corpus of graph files plus a CSV manifest")
    parser.add_argument("--output", default=OUTPUT_DIR,
        help="directory the graph files and manifest are written to")
    parser.add_argument("--random", type=int, default=RANDOM_GRAPHS,
        help="number of seeded G(n, p) random graphs")
    parser.add_argument("--seed", type=int, default=SEED,
        help="seed of the random graph generator")
    parser.add_argument("--max-nodes", type=int, default=MAX_NODES,
        help="largest number of vertices of a random graph")
    parser.add_argument("--no-atlas", action="store_true",
        help="leave out the networkx graph atlas")
    parser.add_argument("--dimacs", action="store_true",
        help="write DIMACS .col files instead of edge lists")
    args = parser.parse_args()

    if args.max_nodes < MIN_NODES:
        print(f"ERROR: --max-nodes must be at least {MIN_NODES}")
        sys.exit(2)

    os.makedirs(args.output, exist_ok=True)
    extension = ".col" if args.dimacs else ".txt"
    outputformat = "dimacs" if args.dimacs else "edges"

    entries = [(source, g, "", "") for source, g in named_graphs()]
    if not args.no_atlas:
        entries += [(source, g, "", "") for source, g in atlas_graphs()]
    entries += list(random_graphs(args.random, args.seed, args.max_nodes))

    rows = []
    for k, (source, g, p, graphseed) in enumerate(tqdm(entries, desc="Writing graphs", ncols=get_terminal_width() - 1, file=sys.stdout), 1):
        filename = f"graph_{k:05d}{extension}"
        with open(os.path.join(args.output, filename), "w") as f:
            f.write(format_graph(g, outputformat))
        rows.append({
            "graph_id": k,
            "file": filename,
            "source": source,
            "vertices": g.n,
            "edges": g.num_edges,
            "p": p,
            "seed": graphseed,
        })

    manifest = os.path.join(args.output, MANIFEST_FILE)
    with open(manifest, "w", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=FIELDNAMES)
        writer.writeheader()
        writer.writerows(rows)

    n_random = sum(1 for r in rows if r["source"] == "gnp")
    print("Generated graph corpus")
    print(f"  Output: {args.output}")
    print(f"  Manifest: {manifest}")
    print(f"  Total: {len(rows)}")
    print(f"  Named: {len(named_graphs())}  Atlas: {len(rows) - n_random - len(named_graphs())}  Random: {n_random}")
    print(f"  Largest graph: {max(r['vertices'] for r in rows)} vertices")


if __name__ == "__main__":
    main()
