"""
Run the cover-ideal checks over a corpus written by generate_corpus.py.

Every graph is decomposed once (J^2, its irreducible components and
associated primes) and the report is checked against the graph oracle:

    1. odd induced cycles and edges read off Ass(R/J^2)
    2. the components re-intersect to J^2 and none is redundant
    3. adeg(J^2) = 3|E| + t exactly when there is no odd hole
    4. deg(J^2) = 3|E|
    5. edge primes have multiplicity 3, triangle primes 1
    6. saturation J^2:(L_t) = J^2 for t in 4, 6, 8
    7. second secant ideal generated by the odd cycle products
    8. J^2 = J^(2) exactly for bipartite graphs
    9. perfection verdict on G and its complement

Prints a ✓/✗ summary per check and exits 0 only when every check passes
on every graph.

Usage:
    python run_corpus_check.py corpus
    python run_corpus_check.py corpus --method dual --max-redundancy 7
    python run_corpus_check.py corpus/graph_00012.txt -v
"""

import argparse
import csv
import glob
import os
import sys

from tqdm import tqdm

from coverideal.constants import DECOMPOSITION_METHODS
from coverideal.constants import DEFAULT_DECOMPOSITION_METHOD
from coverideal.covers import symbolic_square
from coverideal.detection import adeg_test
from coverideal.detection import degree_check
from coverideal.detection import is_perfect
from coverideal.detection import multiplicity_profile
from coverideal.detection import odd_induced_cycles_algebraic
from coverideal.detection import saturation_test
from coverideal.detection import secant_ideal
from coverideal.exceptions import GeneralError
from coverideal.exceptions import GraphInputError
from coverideal.graph_core import complement
from coverideal.graph_core import enumerate_induced_odd_cycles
from coverideal.graph_core import is_bipartite
from coverideal.graph_core import read_graph
from coverideal.monomial_algebra import intersect_components
from coverideal.monomial_algebra import is_redundant_component
from coverideal.utilities import banner
from coverideal.utilities import get_terminal_width
from coverideal.utilities import popcount

MANIFEST_FILE = "manifest.csv"
MAX_REDUNDANCY_VERTICES = 6


# ═══════════════════════════════════════════════════════════════════════════
# INDIVIDUAL CHECKS
# ═══════════════════════════════════════════════════════════════════════════

def check_odd_cycles(g, report, options):
    """Height >= 3 supports are the odd induced cycles, height-2 supports the edges."""
    oracle = enumerate_induced_odd_cycles(g, 3)
    edges = sorted(p.variables for p in report.edges_found)
    ok = report.odd_cycles == oracle and edges == list(g.edges)
    msg = f"{len(oracle)} odd induced cycle(s), {g.num_edges} edge prime(s)"
    if not ok:
        msg = f"algebraic {len(report.odd_cycles)} cycles / {len(edges)} edges vs oracle {len(oracle)} / {g.num_edges}"
    return ok, msg


def check_reintersection(g, report, options):
    """Components intersect back to J^2; irredundancy on small graphs only."""
    ok = intersect_components(report.components, g.n) == report.square
    msg = f"{len(report.components)} components"
    if not ok:
        return False, msg + " do not intersect to J^2"
    if g.n <= options.max_redundancy:
        redundant = [k for k in range(len(report.components)) if is_redundant_component(report.components, k, g.n)]
        if redundant:
            return False, f"components {redundant} are redundant"
        msg += ", irredundant"
    return True, msg


def check_adeg(g, report, options):
    record = adeg_test(g, report=report)
    holes = [c for c in report.odd_cycles if popcount(c) >= 5]
    ok = record.odd_hole_free == (not holes)
    return ok, f"adeg={record.adeg}, 3|E|+t={record.expected}"


def check_degree(g, report, options):
    value = degree_check(g, report=report)
    return value == 3 * g.num_edges, f"deg={value}"


def check_multiplicities(g, report, options):
    profile = multiplicity_profile(g, report=report)
    return True, f"{len(profile)} prime(s)"


def check_saturation(g, report, options):
    wrong = [t for t in (4, 6, 8) if saturation_test(g, t, report=report) != (not enumerate_induced_odd_cycles(g, t))]
    return not wrong, "t = 4, 6, 8 agree" if not wrong else f"disagrees at t = {wrong}"


def check_secant(g, report, options):
    gens = secant_ideal(g, report=report).gens
    expected = sorted(tuple(c >> i & 1 for i in range(g.n)) for c in report.odd_cycles)
    return list(gens) == expected, f"{len(gens)} generator(s)"


def check_symbolic_square(g, report, options):
    equal = symbolic_square(g) == report.square
    bipartite = is_bipartite(g).bipartite
    return equal == bipartite, f"J^2 = J^(2): {equal}, bipartite: {bipartite}"


def check_perfection(g, report, options):
    verdict = is_perfect(g, method=options.method)
    holes = enumerate_induced_odd_cycles(g, 5)
    complement_holes = enumerate_induced_odd_cycles(complement(g), 5)
    ok = verdict.holes == holes and verdict.complement_holes == complement_holes
    ok = ok and verdict.perfect == (not holes and not complement_holes)
    return ok, "perfect" if verdict.perfect else f"witness {g.format_set(verdict.witness[0])}"


# ═══════════════════════════════════════════════════════════════════════════
# CHECK REGISTRY
# ═══════════════════════════════════════════════════════════════════════════

CHECKS = [
    ("Odd cycles from Ass(R/J^2)",   check_odd_cycles),
    ("Re-intersection",              check_reintersection),
    ("adeg(J^2) vs 3|E|+t",          check_adeg),
    ("deg(J^2) = 3|E|",              check_degree),
    ("Edge/triangle multiplicities", check_multiplicities),
    ("Saturation J^2:(L_t)",         check_saturation),
    ("Second secant ideal",          check_secant),
    ("J^2 = J^(2) iff bipartite",    check_symbolic_square),
    ("Perfection",                   check_perfection),
]


# ═══════════════════════════════════════════════════════════════════════════
# CORPUS
# ═══════════════════════════════════════════════════════════════════════════

def corpus_files(path):
    """Graph files of a corpus directory, in manifest order when a manifest exists."""

    manifest = os.path.join(path, MANIFEST_FILE)
    if os.path.isfile(manifest):
        with open(manifest, newline="") as f:
            return [os.path.join(path, row["file"]) for row in csv.DictReader(f)]
    return sorted(glob.glob(os.path.join(path, "*.txt")) + glob.glob(os.path.join(path, "*.col")))


def check_graph(filepath, options, verbose=False):
    """Runs every check on one graph file; returns {check name: (ok, msg)}."""

    g = read_graph(filepath)
    if not g.num_edges:
        return {}
    report = odd_induced_cycles_algebraic(g, options.method)

    results = {}
    for name, fn in CHECKS:
        try:
            ok, msg = fn(g, report, options)
        except GeneralError as e:
            ok, msg = False, f"ERROR during check: {e.message}"
        results[name] = (ok, msg)
        if verbose:
            tqdm.write(f"  {'✓' if ok else '✗'} {name:<30s}  {msg}")
    return results


# ═══════════════════════════════════════════════════════════════════════════
# MAIN
# ═══════════════════════════════════════════════════════════════════════════

def main():
    parser = argparse.ArgumentParser(
        description="Run the cover-ideal checks over a graph corpus")
    parser.add_argument("path",
        help="corpus directory (from generate_corpus.py) OR a single graph file")
    parser.add_argument("--method", choices=DECOMPOSITION_METHODS, default=DEFAULT_DECOMPOSITION_METHOD,
        help="irreducible decomposition algorithm")
    parser.add_argument("--max-redundancy", type=int, default=MAX_REDUNDANCY_VERTICES,
        help="largest graph (vertices) whose decomposition is tested for irredundancy")
    parser.add_argument("--verbose", "-v", action="store_true",
        help="print every check result for every graph")
    args = parser.parse_args()

    if os.path.isdir(args.path):
        files = corpus_files(args.path)
    elif os.path.isfile(args.path):
        files = [args.path]
    else:
        print(f"ERROR: not a file or directory: {args.path}")
        sys.exit(2)
    if not files:
        print(f"No graph files found in {args.path}")
        sys.exit(2)

    print(banner(f"Checking {len(files)} graph(s), method: {args.method}"))

    passed = {name: 0 for name, _ in CHECKS}
    failed = {name: [] for name, _ in CHECKS}
    skipped = 0
    pbar = tqdm(files, desc="Graphs", ncols=get_terminal_width() - 1, file=sys.stdout, disable=args.verbose)
    for filepath in pbar:
        if args.verbose:
            tqdm.write(filepath)
        try:
            results = check_graph(filepath, args, verbose=args.verbose)
        except (GeneralError, GraphInputError) as e:
            tqdm.write(f"  ✗ {filepath}: {e.message}")
            for name in failed:
                failed[name].append(filepath)
            continue
        if not results:
            skipped += 1
            continue
        for name, (ok, msg) in results.items():
            if ok:
                passed[name] += 1
            else:
                failed[name].append(filepath)
                tqdm.write(f"  ✗ {name}: {os.path.basename(filepath)}: {msg}")

    checked = len(files) - skipped
    print(banner("Summary"))
    for name, _ in CHECKS:
        tick = "✓" if not failed[name] else "✗"
        print(f"  {tick} {name:<30s}  {passed[name]}/{checked}")
        for filepath in failed[name][:5]:
            print(f"      {filepath}")
    if skipped:
        print(f"  {skipped} edgeless graph(s) skipped")

    ok = not any(failed.values())
    print(banner("Result: all checks passed ✓" if ok else "Result: PROBLEMS FOUND ✗"))
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
