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

"""coverideal.cli: provides entry point main()."""

import argparse
from collections import namedtuple
import json

from terminaltables import AsciiTable

from coverideal._version import __version__
from coverideal._version import codename
from coverideal.constants import DECOMPOSITION_METHODS
from coverideal.constants import DEFAULT_DECOMPOSITION_METHOD
from coverideal.constants import DEFAULT_MIN_LENGTH
from coverideal.constants import EXIT_FAILS
from coverideal.constants import EXIT_HOLDS
from coverideal.constants import EXIT_INCONSISTENT
from coverideal.constants import EXIT_USAGE
from coverideal.constants import IDEAL_VERBS
from coverideal.constants import VERBS
from coverideal.covers import classify_irreducible_2cover
from coverideal.covers import cover_ideal
from coverideal.covers import decompose_2cover
from coverideal.covers import format_cover_vector
from coverideal.covers import irreducible_2covers
from coverideal.covers import minimal_vertex_covers
from coverideal.covers import symbolic_square
from coverideal.detection import adeg_test
from coverideal.detection import degree_check
from coverideal.detection import depth_bounds
from coverideal.detection import expected_decomposition
from coverideal.detection import is_perfect
from coverideal.detection import odd_induced_cycles_algebraic
from coverideal.detection import saturation_test
from coverideal.detection import secant_ideal
from coverideal.exceptions import ConsistencyError
from coverideal.exceptions import GeneralError
from coverideal.exceptions import GraphInputError
from coverideal.graph_core import complement
from coverideal.graph_core import enumerate_induced_odd_cycles
from coverideal.graph_core import is_bipartite
from coverideal.graph_core import largest_induced_odd_cycle
from coverideal.graph_core import read_graph
from coverideal.monomial_algebra import arithmetic_degree
from coverideal.monomial_algebra import associated_primes
from coverideal.monomial_algebra import default_names
from coverideal.monomial_algebra import degree
from coverideal.monomial_algebra import format_monomial
from coverideal.monomial_algebra import format_prime
from coverideal.monomial_algebra import intersect_components
from coverideal.monomial_algebra import irreducible_decomposition
from coverideal.monomial_algebra import parse_ideal
from coverideal.monomial_algebra import power
import coverideal.utilities as utilities
from coverideal.utilities import error
from coverideal.utilities import open_path_file
from coverideal.utilities import popcount
from coverideal.utilities import timer


Outcome = namedtuple('Outcome', ['status', 'payload', 'lines', 'context'])


def main(argv=None):
    """This is the main function for coverideal."""

    # Parse command line arguments
    parser = argparse.ArgumentParser(prog='coverideal', description='Odd induced cycles, odd holes and perfection through the cover ideal of a graph.', formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.add_argument('--version', action='version', version='{} ({})'.format(__version__, codename))
    parser.add_argument('verb', choices=VERBS, help='analysis to run')
    parser.add_argument('inputfile', help='path to, and name of graph file (edge list or DIMACS .col), or ideal file with --ideal')
    parser.add_argument('--format', dest='output_format', choices=('text', 'json'), default='text', help='report format')
    parser.add_argument('--min-length', type=int, default=None, help='minimum cycle length t for odd-holes (5), odd-cycles (3) and saturation-test (4)')
    parser.add_argument('--oracle', action='store_true', default=False, help='flag to rerun the verb through the brute-force graph oracle and fail on any difference')
    parser.add_argument('--labels', action='store_true', default=False, help='flag to name variables after the vertex labels of the input')
    parser.add_argument('--side', choices=('both', 'G', 'complement'), default='both', help='sides searched for odd holes by perfect')
    parser.add_argument('--monomials', choices=('human', 'exponents'), default='human', help='monomial syntax in reports')
    parser.add_argument('--ideal', action='store_true', default=False, help='flag to read the input as a monomial ideal ({})'.format(', '.join(IDEAL_VERBS)))
    parser.add_argument('--input-format', choices=('auto', 'edges', 'dimacs'), default='auto', help='graph file format')
    parser.add_argument('--strict', action='store_true', default=False, help='flag to reject duplicate edges instead of merging them')
    parser.add_argument('--method', choices=DECOMPOSITION_METHODS, default=DEFAULT_DECOMPOSITION_METHOD, help='irreducible decomposition algorithm')
    parser.add_argument('--quiet', action='store_true', default=False, help='flag to suppress warnings')
    args = parser.parse_args(argv)

    return run_main(args)


def api(
    verb,
    inputfile,
    output_format='text',
    min_length=None,
    oracle=False,
    labels=False,
    side='both',
    monomials='human',
    ideal=False,
    input_format='auto',
    strict=False,
    method=DEFAULT_DECOMPOSITION_METHOD,
    quiet=False
):
    """If installed as a module this is the entry point."""

    class ImportArguments:
        pass

    args = ImportArguments()

    args.verb = verb
    args.inputfile = inputfile
    args.output_format = output_format
    args.min_length = min_length
    args.oracle = oracle
    args.labels = labels
    args.side = side
    args.monomials = monomials
    args.ideal = ideal
    args.input_format = input_format
    args.strict = strict
    args.method = method
    args.quiet = quiet

    return run_main(args)


def run_main(args):
    """
    Top-level function that reads the input, dispatches the verb and prints the report.

    Args:
        args (dict): Namespace with input arguments from command line or api.

    Returns:
        (int): Exit status; 0 property holds, 1 property fails, 2 usage or
            input error, 3 internal inconsistency.
    """

    utilities.quiet = args.quiet

    if args.verb not in VERBS:
        error("Unknown verb '{}', expected one of {}".format(args.verb, ', '.join(VERBS)))
        return EXIT_USAGE
    if args.ideal and args.verb not in IDEAL_VERBS:
        error('--ideal is only valid for {}'.format(', '.join(IDEAL_VERBS)))
        return EXIT_USAGE
    if args.min_length is not None and args.verb not in DEFAULT_MIN_LENGTH:
        utilities.warn('--min-length is ignored by {}'.format(args.verb))
    args.t = args.min_length if args.min_length is not None else DEFAULT_MIN_LENGTH.get(args.verb)
    if args.t is not None and args.t <= 1:
        error('Minimum length must exceed 1, not {}'.format(args.t))
        return EXIT_USAGE

    start = timer()
    try:
        if args.ideal:
            with open_path_file(args.inputfile) as f:
                I = parse_ideal(f.read())
            args.names = default_names(I.n)
            summary = {'variables': I.n, 'generators': len(I.gens)}
            outcome = ideal_verbs[args.verb](I, args)
            if args.oracle:
                _oracle_ideal(I, args, outcome)
        else:
            g = read_graph(args.inputfile, args.input_format, args.strict)
            args.names = list(g.labels) if args.labels else default_names(g.n)
            summary = {'vertices': g.n, 'edges': g.num_edges, 'labels': list(g.labels)}
            if args.verb != 'perfect' and not g.num_edges:
                raise GeneralError('{} needs a graph with at least one edge'.format(args.verb))
            outcome = graph_verbs[args.verb](g, args)
            if args.oracle:
                graph_oracles[args.verb](g, args, outcome)
    except ConsistencyError as e:
        error(e.message)
        return EXIT_INCONSISTENT
    except (GeneralError, GraphInputError) as e:
        error(e.message)
        return EXIT_USAGE
    except (IOError, OSError) as e:
        error('Cannot read {}: {}'.format(args.inputfile, e))
        return EXIT_USAGE

    elapsed = (timer() - start) * 1000

    if args.output_format == 'json':
        document = {'graph': summary, 'verb': args.verb, 'result': outcome.payload, 'timing_ms': round(elapsed, 3)}
        print(json.dumps(document, sort_keys=True, indent=2))
    else:
        for line in outcome.lines:
            print(line)
        if args.oracle:
            print('oracle: agrees')

    return outcome.status


##############################
# Rendering helpers          #
##############################

def _monomial(m, args):
    return format_monomial(m, args.names, args.monomials)


def _component(component, args):
    factors = []
    for i, e in enumerate(component.exponents):
        if e > 0:
            pure = [0] * len(component.exponents)
            pure[i] = e
            factors.append(_monomial(pure, args))
    return '(' + ', '.join(factors) + ')'


def _table(rows):
    table = AsciiTable(rows)
    table.outer_border = False
    return table.table


def _cycle_kind(size):
    return 'edge' if size == 2 else 'triangle' if size == 3 else 'odd hole'


def _listing(g, masks):
    return [g.set_labels(mask) for mask in masks]


##############################
# Graph verbs                #
##############################

def _odd_holes(g, args):
    report = odd_induced_cycles_algebraic(g, args.method)
    holes = [c for c in report.odd_cycles if popcount(c) >= args.t]
    if holes:
        lines = ['odd induced cycles of length >= {}: {}'.format(args.t, len(holes))]
        lines += [g.format_set(c) for c in holes]
    else:
        lines = ['no odd induced cycle of length >= {}'.format(args.t)]
    payload = {'min_length': args.t, 'holes': _listing(g, holes), 'count': len(holes)}

    return Outcome(EXIT_FAILS if holes else EXIT_HOLDS, payload, lines, {'report': report})


def _odd_cycles(g, args):
    report = odd_induced_cycles_algebraic(g, args.method)
    cycles = [c for c in report.odd_cycles if popcount(c) >= args.t]
    lines = ['odd induced cycles of length >= {}: {}'.format(args.t, len(cycles))]
    if cycles:
        lines.append(_table([['Length', 'Kind', 'Vertices']] + [[popcount(c), _cycle_kind(popcount(c)), g.format_set(c)] for c in cycles]))
    payload = {'min_length': args.t, 'cycles': _listing(g, cycles), 'count': len(cycles), 'largest': report.largest}

    return Outcome(EXIT_HOLDS, payload, lines, {'report': report})


def _perfect(g, args):
    verdict = is_perfect(g, args.side, args.method)
    if verdict.perfect:
        lines = ['PERFECT']
        witness = None
    else:
        mask, in_complement = verdict.witness
        lines = ['NOT PERFECT: odd hole {} in {}'.format(g.format_set(mask), 'complement' if in_complement else 'G')]
        witness = {'vertices': g.set_labels(mask), 'in_complement': in_complement}
    if len(verdict.holes) + len(verdict.complement_holes) > 1:
        lines.append('odd holes in G: {}'.format(', '.join(g.format_set(c) for c in verdict.holes) or 'none'))
        lines.append('odd holes in complement: {}'.format(', '.join(g.format_set(c) for c in verdict.complement_holes) or 'none'))
    payload = {'perfect': verdict.perfect, 'witness': witness, 'side': args.side,
               'holes': _listing(g, verdict.holes), 'complement_holes': _listing(g, verdict.complement_holes)}

    return Outcome(EXIT_HOLDS if verdict.perfect else EXIT_FAILS, payload, lines, {'verdict': verdict})


def _ass(g, args):
    report = odd_induced_cycles_algebraic(g, args.method)
    rows = [['Prime', 'Height', 'Kind']]
    rows += [[format_prime(p, args.names), p.height, _cycle_kind(p.height)] for p in report.primes]
    lines = ['associated primes of J^2: {}'.format(len(report.primes)), _table(rows)]
    payload = {'primes': [[args.names[i] for i in p.variables] for p in report.primes]}

    return Outcome(EXIT_HOLDS, payload, lines, {'report': report})


def _decompose(g, args):
    report = odd_induced_cycles_algebraic(g, args.method)
    lines = ['irreducible components of J^2: {}'.format(len(report.components))]
    lines += [_component(c, args) for c in report.components]
    payload = {'components': [list(c.exponents) for c in report.components]}

    return Outcome(EXIT_HOLDS, payload, lines, {'report': report})


def _covers(g, args):
    covers = minimal_vertex_covers(g)
    lines = ['minimal vertex covers: {}'.format(len(covers))]
    lines += [g.format_set(c) for c in covers]

    irreducible = irreducible_2covers(g)
    certificates = [classify_irreducible_2cover(g, a) for a in irreducible]
    lines.append('irreducible 2-covers among the generators of J^(2): {}'.format(len(irreducible)))
    if irreducible:
        rows = [['Cover', 'A (0)', 'B (2)', 'C (1)']]
        rows += [[format_cover_vector(a), g.format_set(c.A), g.format_set(c.B), g.format_set(c.C)] for a, c in zip(irreducible, certificates)]
        lines.append(_table(rows))
    payload = {'covers': _listing(g, covers),
               'irreducible_2covers': [{'cover': list(a), 'A': g.set_labels(c.A), 'B': g.set_labels(c.B), 'C': g.set_labels(c.C)}
                                       for a, c in zip(irreducible, certificates)]}

    return Outcome(EXIT_HOLDS, payload, lines, {'covers': covers, 'irreducible': irreducible})


def _symbolic_square(g, args):
    square = power(cover_ideal(g), 2)
    symbolic = symbolic_square(g)
    extra = [m for m in symbolic.gens if not square.contains(m)]
    equal = symbolic == square
    lines = ['generators of J^(2): {} ({} outside J^2, marked *)'.format(len(symbolic.gens), len(extra))]
    lines += [_monomial(m, args) + (' *' if m in extra else '') for m in symbolic.gens]
    lines.append('J^2 = J^(2): {}'.format('yes' if equal else 'no'))
    payload = {'generators': [list(m) for m in symbolic.gens], 'outside_square': [list(m) for m in extra], 'equal': equal}

    return Outcome(EXIT_HOLDS, payload, lines, {'equal': equal})


def _secant(g, args):
    report = odd_induced_cycles_algebraic(g, args.method)
    ideal = secant_ideal(g, report=report)
    if ideal.is_zero():
        lines = ['second secant ideal of I(G): 0']
    else:
        lines = ['second secant ideal of I(G): {} generators'.format(len(ideal.gens))]
        lines += [_monomial(m, args) for m in ideal.gens]
    payload = {'generators': [list(m) for m in ideal.gens]}

    return Outcome(EXIT_HOLDS, payload, lines, {'ideal': ideal, 'report': report})


def _adeg(g, args):
    record = adeg_test(g, args.method)
    lines = ['adeg(J^2)={}, 3|E|+t={}, {}'.format(record.adeg, record.expected, 'no odd hole' if record.odd_hole_free else 'odd hole present')]
    payload = {'adeg': record.adeg, 'expected': record.expected, 'odd_hole_free': record.odd_hole_free}

    return Outcome(EXIT_HOLDS if record.odd_hole_free else EXIT_FAILS, payload, lines, {'record': record})


def _degree(g, args):
    value = degree_check(g, args.method)
    lines = ['deg(J^2)={}, 3|E|={}'.format(value, 3 * g.num_edges)]

    return Outcome(EXIT_HOLDS, {'degree': value, 'expected': 3 * g.num_edges}, lines, {'degree': value})


def _saturation_test(g, args):
    holds = saturation_test(g, args.t, args.method)
    if holds:
        lines = ['J^2:(L_{0}) = J^2: no odd induced cycle of length >= {0}'.format(args.t)]
    else:
        lines = ['J^2:(L_{0}) != J^2: odd induced cycle of length >= {0} present'.format(args.t)]
    lines.append('(evaluated through the associated primes of J^2, no colon ideal formed)')
    payload = {'min_length': args.t, 'equality': holds}

    return Outcome(EXIT_HOLDS if holds else EXIT_FAILS, payload, lines, {'holds': holds})


def _bounds(g, args):
    bounds = depth_bounds(g, args.method)
    if bounds.t:
        lines = ['depth(R/J^2) <= {}, projdim(R/J^2) >= {} (largest odd induced cycle: {})'.format(bounds.depth_upper, bounds.projdim_lower, bounds.t)]
    else:
        lines = ['depth and projdim bounds not applicable: no odd induced cycle']
    payload = {'depth_upper': bounds.depth_upper, 'projdim_lower': bounds.projdim_lower, 'largest_odd_cycle': bounds.t}

    return Outcome(EXIT_HOLDS, payload, lines, {'bounds': bounds})


graph_verbs = {
    'odd-holes': _odd_holes,
    'odd-cycles': _odd_cycles,
    'perfect': _perfect,
    'ass': _ass,
    'decompose': _decompose,
    'covers': _covers,
    'symbolic-square': _symbolic_square,
    'secant': _secant,
    'adeg': _adeg,
    'degree': _degree,
    'saturation-test': _saturation_test,
    'bounds': _bounds,
}


##############################
# Ideal verbs                #
##############################

def _ideal_ass(I, args):
    primes = associated_primes(I, args.method)
    rows = [['Prime', 'Height']] + [[format_prime(p, args.names), p.height] for p in primes]
    lines = ['associated primes: {}'.format(len(primes)), _table(rows)]

    return Outcome(EXIT_HOLDS, {'primes': [[args.names[i] for i in p.variables] for p in primes]}, lines, {'primes': primes})


def _ideal_decompose(I, args):
    components = irreducible_decomposition(I, args.method)
    lines = ['irreducible components: {}'.format(len(components))]
    lines += [_component(c, args) for c in components]

    return Outcome(EXIT_HOLDS, {'components': [list(c.exponents) for c in components]}, lines, {'components': components})


def _ideal_adeg(I, args):
    value = arithmetic_degree(I, args.method)
    return Outcome(EXIT_HOLDS, {'adeg': value}, ['adeg={}'.format(value)], {'adeg': value})


def _ideal_degree(I, args):
    value = degree(I, args.method)
    return Outcome(EXIT_HOLDS, {'degree': value}, ['deg={}'.format(value)], {'degree': value})


ideal_verbs = {
    'ass': _ideal_ass,
    'decompose': _ideal_decompose,
    'adeg': _ideal_adeg,
    'degree': _ideal_degree,
}


##############################
# Oracle comparisons         #
##############################

def _mismatch(what, algebraic, oracle):
    raise ConsistencyError('oracle mismatch in {}: algebraic {} vs oracle {}'.format(what, algebraic, oracle))


def _check_report(g, report):
    oracle = enumerate_induced_odd_cycles(g, 3)
    if tuple(report.odd_cycles) != oracle:
        _mismatch('odd induced cycles', [g.format_set(c) for c in report.odd_cycles], [g.format_set(c) for c in oracle])
    edges = sorted(p.variables for p in report.edges_found)
    if edges != list(g.edges):
        _mismatch('height-2 primes', edges, list(g.edges))


def _oracle_report(g, args, outcome):
    _check_report(g, outcome.context['report'])


def _oracle_perfect(g, args, outcome):
    verdict = outcome.context['verdict']
    if args.side in ('both', 'G'):
        oracle = enumerate_induced_odd_cycles(g, 5)
        if tuple(verdict.holes) != oracle:
            _mismatch('odd holes of G', verdict.holes, oracle)
    if args.side in ('both', 'complement'):
        oracle = enumerate_induced_odd_cycles(complement(g), 5)
        if tuple(verdict.complement_holes) != oracle:
            _mismatch('odd holes of the complement', verdict.complement_holes, oracle)


def _oracle_decompose(g, args, outcome):
    report = outcome.context['report']
    expected = expected_decomposition(g)
    if tuple(report.components) != expected:
        _mismatch('irreducible components', len(report.components), len(expected))
    if intersect_components(report.components, g.n) != report.square:
        raise ConsistencyError('oracle mismatch: the components do not intersect to J^2')


def _oracle_covers(g, args, outcome):
    dual = minimal_vertex_covers(g, 'dual')
    if outcome.context['covers'] != dual:
        _mismatch('minimal vertex covers', outcome.context['covers'], dual)
    for a in outcome.context['irreducible']:
        if decompose_2cover(g, a, 'exhaustive').kind != 'irreducible':
            raise ConsistencyError('oracle mismatch: exhaustive search splits ({})'.format(format_cover_vector(a)))


def _oracle_symbolic_square(g, args, outcome):
    bipartite = is_bipartite(g).bipartite
    if outcome.context['equal'] != bipartite:
        _mismatch('J^2 = J^(2)', outcome.context['equal'], bipartite)


def _oracle_secant(g, args, outcome):
    _check_report(g, outcome.context['report'])
    expected = sorted(tuple(mask >> i & 1 for i in range(g.n)) for mask in enumerate_induced_odd_cycles(g, 3))
    if list(outcome.context['ideal'].gens) != expected:
        _mismatch('secant generators', outcome.context['ideal'].gens, expected)


def _oracle_adeg(g, args, outcome):
    oracle = not enumerate_induced_odd_cycles(g, 5)
    if outcome.context['record'].odd_hole_free != oracle:
        _mismatch('odd hole freeness', outcome.context['record'].odd_hole_free, oracle)


def _oracle_degree(g, args, outcome):
    if outcome.context['degree'] != 3 * len(g.edges):
        _mismatch('degree', outcome.context['degree'], 3 * len(g.edges))


def _oracle_saturation(g, args, outcome):
    if args.t <= 2:
        oracle = not g.num_edges
    else:
        oracle = not enumerate_induced_odd_cycles(g, args.t)
    if outcome.context['holds'] != oracle:
        _mismatch('saturation equality', outcome.context['holds'], oracle)


def _oracle_bounds(g, args, outcome):
    t = largest_induced_odd_cycle(g)
    if outcome.context['bounds'].t != t:
        _mismatch('largest odd induced cycle', outcome.context['bounds'].t, t)


graph_oracles = {
    'odd-holes': _oracle_report,
    'odd-cycles': _oracle_report,
    'perfect': _oracle_perfect,
    'ass': _oracle_report,
    'decompose': _oracle_decompose,
    'covers': _oracle_covers,
    'symbolic-square': _oracle_symbolic_square,
    'secant': _oracle_secant,
    'adeg': _oracle_adeg,
    'degree': _oracle_degree,
    'saturation-test': _oracle_saturation,
    'bounds': _oracle_bounds,
}


def _oracle_ideal(I, args, outcome):
    # No graph to compare with: the two decomposition methods must agree and re-intersect to I
    other = 'dual' if args.method == 'split' else 'split'
    components = irreducible_decomposition(I, args.method)
    if components != irreducible_decomposition(I, other):
        raise ConsistencyError('oracle mismatch: {} and {} decompositions differ'.format(args.method, other))
    if intersect_components(components, I.n) != I:
        raise ConsistencyError('oracle mismatch: the components do not intersect to the input ideal')
