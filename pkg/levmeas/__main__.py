# -*- coding: utf-8 -*-
'''
    levmeas
    -------

    The command-line interface to the levmeas package.

    :copyright: Copyright 2026 levmeas contributors, see AUTHORS.
    :license: GNU GPL v3.

'''
import argparse
import re

from . import VERSION
from .logger import active_logger
from .additive import AdditiveFamily, oracle_stratified_measure
from .exceptions import LevmeasError, UsageError
from .forest import Index, LevelStatus, index
from .matrix import MatrixFamily, snake_index_check
from .parser import Atom, parse, evaluate
from .utils import Dict


FAMILY_PATTERN = re.compile(r'(additive|gl|sl)(?::(\d+))?$')


def family_spec(text):
    '''argparse type of `--family`: additive, gl:M or sl:M.'''
    match = FAMILY_PATTERN.match(text)
    if match is None or (match.group(1) == 'additive') != \
            (match.group(2) is None):
        raise argparse.ArgumentTypeError(f"invalid family {text!r}, use "
                                         f"additive, gl:M or sl:M")
    if match.group(2) is None:
        return ('additive', None)
    return (match.group(1).upper(), int(match.group(2)))


def make_family(args):
    kind, m = args.family
    if kind == 'additive':
        return AdditiveFamily(args.p, args.dim)
    return MatrixFamily(args.p, args.dim, m, kind)


def forest_of(text, family):
    return evaluate(parse(text, family), family)


def atom_of(text, family):
    expr = parse(text, family)
    if not isinstance(expr, Atom):
        raise UsageError(f"{text!r} is not a single distinguished set")
    return expr.cell


def format_measure(value, args, family):
    '''The value and its letter: Y, or X with Y_k = X_k^d for matrix
    families under `--paper-scaling`.'''
    if args.paper_scaling and isinstance(family, MatrixFamily):
        return value.scaled(family.dimension), 'X'
    return value, 'Y'


def measure_cmd(args, family):
    '''Measure command.'''
    value, letter = format_measure(forest_of(args.expr, family).measure(),
                                   args, family)
    if args.json:
        return value.to_terms()
    return value.format(letter)


def canon_cmd(args, family):
    '''Canon command.'''
    return forest_of(args.expr, family).format()


def level_cmd(args, family):
    '''Level command.'''
    level = forest_of(args.expr, family).level()
    return 'empty' if level is None else '%s' % (level,)


def uniform_level_cmd(args, family):
    '''Uniform-level command.'''
    result = forest_of(args.expr, family).uniform_level()
    if result.status is LevelStatus.EMPTY:
        return 'empty'
    text = '%s %s' % (result.status.value, result.level)
    if result.witness is not None:
        text = '%s, witness %s' % (text, family.format_point(result.witness))
    return text


def index_cmd(args, family):
    '''Index command.'''
    return '%s' % (index(family, atom_of(args.inner, family),
                         atom_of(args.outer, family)),)


def compare_cmd(args, family):
    '''Compare command.'''
    return family.compare(atom_of(args.first, family),
                          atom_of(args.second, family)).value


def classify_cmd(args, family):
    '''Classify command.'''
    kind, level = forest_of(args.expr, family).classify()
    if level is None:
        return kind.value
    return '%s %s' % (kind.value, level)


def progress(args, label, total):
    '''A step callback drawing a progress bar unless `args.debug` is
    True.'''
    if args.debug:
        return None, None
    from progressbar import ProgressBar, Percentage, Bar
    widgets = [label, Percentage(), ' ', Bar()]
    pbar = ProgressBar(widgets=widgets, maxval=total).start()
    steps = [0]

    def update(_):
        steps[0] += 1
        pbar.update(min(steps[0], total))
    return update, pbar


def additive_oracle_check(args, family):
    if args.expr is None or args.i is not None or args.j is not None:
        raise UsageError('the additive oracle check takes one expression '
                         'and no --i/--j')
    forest = forest_of(args.expr, family)
    measure = forest.measure()
    oracle = oracle_stratified_measure(forest)
    report = Dict()
    report['measure'] = measure.to_terms()
    report['oracle'] = oracle.to_terms()
    report['passed'] = measure == oracle
    text = 'measure %s, oracle %s: %s' % (measure, oracle,
                                          'ok' if report['passed'] else
                                          'mismatch')
    return report, text


def matrix_oracle_check(args, family):
    if args.expr is not None or args.i is None or args.j is None:
        raise UsageError('the matrix oracle check takes --i and --j and no '
                         'expression')
    depth = args.j - args.i
    m, p = family.m, family.p
    total = 2 * p ** (m * m * max(depth, 0)) + p ** max(depth, 0)
    update, pbar = progress(args, 'Enumeration: ', total)
    report = snake_index_check(args.i, args.j, m, p, update)
    if pbar is not None:
        pbar.finish()
    expected = Index(family.q, family.dimension * depth)
    found = report['gl'] if family.kind == 'GL' else report['sl']
    report['index'] = found
    report['passed'] = report['passed'] and found == expected.value
    text = 'index %s, enumerated %d: %s\nsnake %d = %d * %d: %s' % (
        expected, found, 'ok' if found == expected.value else 'mismatch',
        report['gl'], report['scalar'], report['sl'],
        'ok' if report['passed'] else 'mismatch')
    return report, text


def oracle_check_cmd(args, family):
    '''Oracle-check command.'''
    if isinstance(family, MatrixFamily):
        report, text = matrix_oracle_check(args, family)
    else:
        report, text = additive_oracle_check(args, family)
    if not report['passed']:
        raise LevmeasError(f"oracle check failed:\n{text}")
    return report if args.json else text


def get_cmd_parser(cmd, subparsers, help, func):
    '''Make a subparser command.'''
    parser = subparsers.add_parser(cmd, help=help, description=help)
    parser.add_argument('--json', action="store_true", default=False,
                        help='Print the result as JSON')
    parser.add_argument('--debug', action="store_true", default=False,
                        help='Display log')
    parser.set_defaults(func=func)
    return parser


def run(args, family):
    '''Execute the selected command and return its output text.'''
    result = args.func(args, family)
    if not args.json:
        return '%s' % result
    kind, m = args.family
    output = Dict()
    output['command'] = args.command
    output['input'] = [text for text in args.inputs(args) if text]
    output['result'] = result
    output['family'] = 'additive' if m is None else '%s:%d' % (kind.lower(),
                                                               m)
    output['p'] = args.p
    output['dim'] = args.dim
    return output.to_json()


def main(argv=None):
    '''Parse command-line arguments and execute a levmeas command.'''

    parser = argparse.ArgumentParser(prog='levmeas',
                                     description='Exact invariant measure '
                                                 'of ddd-sets')
    parser.add_argument('--version', action='version',
                        version='levmeas version %s' % VERSION,
                        help='Print levmeas version number and exit.')
    parser.add_argument('--p', default=2, type=int,
                        help='Prime residue characteristic (default 2)')
    parser.add_argument('--dim', default=2, type=int,
                        help='Dimension n of the local field (default 2)')
    parser.add_argument('--family', default=('additive', None),
                        type=family_spec,
                        help='additive, gl:M or sl:M (default additive)')
    parser.add_argument('--paper-scaling', action='store_true',
                        default=False,
                        help='Print matrix measures in X_k with '
                             'Y_k = X_k^d, d = m^2 (GL) or m^2-1 (SL)')

    subparsers = parser.add_subparsers(title='The levmeas commands',
                                       dest='command')
    subparsers.required = True

    def one(args):
        return [args.expr]

    # measure command
    subparser = get_cmd_parser('measure', subparsers,
                               help='Print the measure of a ddd-set.',
                               func=measure_cmd)
    subparser.add_argument('expr', help='A ddd-set expression')
    subparser.set_defaults(inputs=one)

    # canon command
    subparser = get_cmd_parser('canon', subparsers,
                               help='Print the canonical form of a ddd-set.',
                               func=canon_cmd)
    subparser.add_argument('expr', help='A ddd-set expression')
    subparser.set_defaults(inputs=one)

    # level command
    subparser = get_cmd_parser('level', subparsers,
                               help='Print the level of a ddd-set.',
                               func=level_cmd)
    subparser.add_argument('expr', help='A ddd-set expression')
    subparser.set_defaults(inputs=one)

    # uniform-level command
    subparser = get_cmd_parser('uniform-level', subparsers,
                               help='Decide whether a ddd-set has uniform '
                                    'level.',
                               func=uniform_level_cmd)
    subparser.add_argument('expr', help='A ddd-set expression')
    subparser.set_defaults(inputs=one)

    # index command
    subparser = get_cmd_parser('index', subparsers,
                               help='Print the index of a distinguished set '
                                    'in another.',
                               func=index_cmd)
    subparser.add_argument('inner', help='The smaller distinguished set')
    subparser.add_argument('outer', help='The larger distinguished set')
    subparser.set_defaults(inputs=lambda args: [args.inner, args.outer])

    # compare command
    subparser = get_cmd_parser('compare', subparsers,
                               help='Print how two distinguished sets '
                                    'intersect.',
                               func=compare_cmd)
    subparser.add_argument('first', help='A distinguished set')
    subparser.add_argument('second', help='A distinguished set')
    subparser.set_defaults(inputs=lambda args: [args.first, args.second])

    # classify command
    subparser = get_cmd_parser('classify', subparsers,
                               help='Print the level or levelless type of a '
                                    'ddd-set.',
                               func=classify_cmd)
    subparser.add_argument('expr', help='A ddd-set expression')
    subparser.set_defaults(inputs=one)

    # oracle-check command
    subparser = get_cmd_parser('oracle-check', subparsers,
                               help='Cross-check the measure (additive) or '
                                    'the indices (matrix families) by '
                                    'enumeration.',
                               func=oracle_check_cmd)
    subparser.add_argument('expr', nargs='?', default=None,
                           help='A ddd-set expression (additive family)')
    subparser.add_argument('--i', type=int, default=None,
                           help='Outer t1-index (matrix families)')
    subparser.add_argument('--j', type=int, default=None,
                           help='Inner t1-index (matrix families)')
    subparser.set_defaults(inputs=one)

    # Parse argv arguments
    args = parser.parse_args(argv)

    if args.debug:
        active_logger()
        print(run(args, make_family(args)))
    else:
        try:
            print(run(args, make_family(args)))
        except Exception as e:
            parser.error('%s' % e)


if __name__ == '__main__':
    main()
