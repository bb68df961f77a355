"""Command line interface of the partverify toolkit.
"""
import sys
import os
import argparse
import time
from inspect import getdoc

# this package
from . import __package_name__, __version__
from . import *
from . import util
from .util import PartitionError, DomainError, RecordWriter
from .combinat import partition as pt
from .combinat import bijections as bj
from .combinat import counting
from .combinat import series
from .combinat import verify


def log(*args):
    print(*args, file=sys.stderr)


def die(*args):
    print('Error:', *args, file=sys.stderr)
    sys.exit(2)


def fcopy(fsrc, fdst):
    """Copy a resource file to target

    - Auto generate ancestor directories.
    - Use universal linefeed.
    """
    os.makedirs(os.path.dirname(os.path.abspath(fdst)), exist_ok=True)
    with open(fsrc, 'r', encoding='UTF-8') as fr:
        with open(fdst, 'w', encoding='UTF-8') as fw:
            for line in fr:
                fw.write(line)


def print_infos(infos, debug=False):
    """Log Info records to stderr and return those carrying data."""
    data = []
    for info in infos:
        if info.type != 'debug' or debug:
            log(f'{info.type.upper()}: {info.msg}')
        if info.data is not None:
            data.append(info)
    return data


def get_writer(args):
    format = args['format'] or config['output']['format']
    return RecordWriter(sys.stdout, format)


def write_footer(writer, args, start):
    if args['no_footer'] or not config['output']['footer']:
        return
    writer.footer(time.time() - start)


def get_threads(args):
    threads = args['threads']
    return config['parallel']['threads'] if threads is None else threads


def build_constraint(args):
    kwargs = {
        'odd': args['odd'],
        'distinct': args['distinct'],
        'regular': args['regular'],
        'mult_below': args['mult_below'],
        'no_ones': args['no_ones'],
        'size': args['size_eq'],
        'perimeter': args['perimeter_eq'],
        }
    if args['mod']:
        r, d = util.parse_int_tuple(args['mod'], 2, 2, '--mod')
        kwargs['congruent'] = (d, r)
    for key, flag in (('divisible_values', 'divisible'), ('repeated_values', 'repeated')):
        if args[flag]:
            values = util.parse_int_tuple(args[flag], 2, 3, f'--{flag}')
            kwargs[key] = values + (None,) * (3 - len(values))
    return pt.ConstraintSpec(**kwargs)


def cmd_enumerate(args):
    """List partitions of a given size or perimeter, optionally restricted to
    a class.

    Partitions are listed in lexicographically decreasing order for --size and
    in profile word order for --perimeter.
    """
    c = build_constraint(args)
    writer = get_writer(args)
    if args['size'] is not None:
        params = {'size': args['size']}
        partitions = pt.enumerate_by_size(args['size'], c)
    else:
        params = {'perimeter': args['perimeter']}
        partitions = pt.enumerate_by_perimeter(args['perimeter'], c,
            bound=config['enumerate']['perimeter_bound'])
    params['constraint'] = c.describe()

    for p in partitions:
        writer.write({
            'command': 'enumerate',
            'params': params,
            'value': p,
            'profile': pt.to_profile(p),
            })


MAPS = {
    'glaisher': (bj.glaisher, bj.glaisher_inv, True),
    'theorem1': (bj.theorem1_map, bj.theorem1_inv, True),
    'futang': (bj.fu_tang, bj.fu_tang_inv, False),
    }


def cmd_map(args):
    """Apply a partition bijection or its inverse.

    Partitions are given largest part first, e.g. --partition "4,4,3,1".
    """
    func, inv, needs_r = MAPS[args['name']]
    p = pt.Partition(util.parse_partition(args['partition']))
    params = {'name': args['name'], 'inverse': args['inverse'], 'partition': p}
    if needs_r:
        if args['r'] is None:
            die(f"--r is required for {args['name']}")
        params['r'] = args['r']
        result = (inv if args['inverse'] else func)(p, args['r'])
    else:
        result = (inv if args['inverse'] else func)(p)

    writer = get_writer(args)
    writer.write({
        'command': 'map',
        'params': params,
        'value': result,
        'profile': pt.to_profile(result),
        })


def cmd_count(args):
    """Count partition classes by exhaustive enumeration.
    """
    writer = get_writer(args)
    start = time.time()

    if args['franklin']:
        n, r, j = args['franklin']
        params = {'n': n, 'r': r, 'j': j}
        value = list(counting.franklin_counts(n, r, j))
    elif args['refined']:
        n, r, u = args['refined']
        params = {'n': n, 'r': r, 'u': u}
        value = list(counting.refined_counts(n, r, u))
    elif args['beck'] is not None:
        params = {'n': args['beck']}
        value = list(counting.beck_totals(args['beck']))
    elif args['regular']:
        if len(args['regular']) not in (2, 3):
            die('--regular takes M R [D]')
        M, r, *d = args['regular']
        d = d[0] if d else None
        params = {'M': M, 'r': r}
        if d is not None:
            params['d'] = d
        value = [v for v in counting.regular_perimeter_counts(M, r, d,
            bound=config['enumerate']['perimeter_bound']) if v is not None]
    else:
        M = args['perimeter']
        table = counting.perimeter_table(M, threads=get_threads(args),
            bound=config['enumerate']['perimeter_bound'])
        record = {'command': 'count', 'params': {'perimeter': M}}
        record.update((k, v) for k, v in table._asdict().items() if k != 'M')
        record['template'] = 'table.txt'
        writer.write(record)
        write_footer(writer, args, start)
        return

    writer.write({'command': 'count', 'params': params, 'value': value})


def cmd_series(args):
    """Print leading coefficients c_1..c_N of a catalogued generating function.
    """
    s = series.gf_catalog(args['name'], args['r'], args['d'])
    params = {'name': args['name']}
    if args['r'] is not None:
        params['r'] = args['r']
    if args['d'] is not None:
        params['d'] = args['d']
    params['terms'] = args['terms']

    writer = get_writer(args)
    writer.write({
        'command': 'series',
        'params': params,
        'value': series.series_coeffs(s, args['terms']),
        'gf': str(s),
        })


FORMULA_NAMES = (
    series.CLOSED_FORM_NAMES
    + series.FIB_CONVOLUTION_NAMES
    + ('fib',)
    )


def cmd_formula(args):
    """Evaluate a closed form, a Fibonacci convolution, or a recurrence at M.

    With --recurrence, f(M) is obtained by iterating the recurrence from
    f(0) = 0 (names g, h, g1, h1 only).
    """
    name = args['name']
    M = args['m']
    params = {'name': name, 'm': M}
    if args['recurrence']:
        if name not in series.RECURRENCE_NAMES:
            die(f'no recurrence for "{name}" (choose from {", ".join(series.RECURRENCE_NAMES)})')
        if M < 1:
            raise DomainError(f'perimeter M={M} must be ≥ 1')
        params['recurrence'] = True
        value = series.recurrence_sequence(name, M)[-1]
    elif name == 'fib':
        value = pt.fibonacci(M)
    elif name in series.FIB_CONVOLUTION_NAMES:
        value = series.fib_convolution(name, M)
    else:
        value = series.closed_form(name, M)

    writer = get_writer(args)
    writer.write({'command': 'formula', 'params': params, 'value': value})


def cmd_qpoly(args):
    """Print a Gaussian binomial or the perimeter row polynomial.

    Values are the coefficient lists from the constant term up.
    """
    if args['binomial']:
        m, j = args['binomial']
        params = {'m': m, 'j': j, 'base': args['base']}
        poly = series.q_binomial(m, j, args['base'])
    else:
        params = {'perimeter': args['perimeter_row']}
        poly = series.perimeter_q_row(args['perimeter_row'])

    writer = get_writer(args)
    writer.write({
        'command': 'qpoly',
        'params': params,
        'value': list(poly),
        'poly': str(poly),
        })


def cmd_info(args):
    """Show statistics of a partition given by parts or by profile word.
    """
    if args['profile'] is not None:
        p = pt.from_profile(args['profile'])
        params = {'profile': args['profile']}
    else:
        p = pt.Partition(util.parse_partition(args['partition']))
        params = {'partition': p}

    mults = pt.multiplicities(p)
    writer = get_writer(args)
    writer.write({
        'command': 'info',
        'params': params,
        'partition': p,
        'profile': pt.to_profile(p),
        'size': p.size,
        'length': p.length,
        'perimeter': p.perimeter,
        'index': pt.m2_index(p) if p else None,
        'odd': all(v % 2 for v in p),
        'distinct': all(m == 1 for _, m in mults),
        'even_values': pt.even_prefix_count(pt.to_profile(p)),
        'template': 'table.txt',
        })


def cmd_verify(args):
    """Run identity verification suites over a parameter grid.

    Progress and a summary go to stderr; one report per suite goes to stdout.
    The exit code is 1 if any suite fails.
    """
    start = time.time()
    grid = {
        'n_max': args['n_max'],
        'r_set': util.parse_int_tuple(args['r_set'], 1, 64, '--r-set') if args['r_set'] else None,
        'j_max': args['j_max'],
        'm_max_enum': args['m_max_enum'],
        'm_max_series': args['m_max_series'],
        }
    suites = args['suite'] or ['all']

    writer = get_writer(args)
    infos = verify.run(suites, {s: grid for s in verify.SUITES},
        threads=get_threads(args), fail_fast=args['fail_fast'] or None)

    failed = False
    for info in infos:
        if info.type != 'debug' or args['debug']:
            log(f'{info.type.upper()}: {info.msg}')
        if info.type == 'critical':
            failed = True
        if isinstance(info.data, verify.VerificationReport):
            failed = failed or not info.data.passed
            writer.write(info.data.to_record())

    write_footer(writer, args, start)
    return 1 if failed else 0


def cmd_conjecture(args):
    """Scan h_r(M) − g_r(M) for a sign change.

    Scans the given --r, or every r from 2 to --r-max. The exit code is 1 if
    g_r(M) > h_r(M) anywhere in range.
    """
    start = time.time()
    writer = get_writer(args)
    if args['r'] is not None:
        M_max = config['conjecture']['m_max'] if args['m_max'] is None else args['m_max']
        scans = [verify.conjecture_scan(args['r'], M_max, args['m_cross'])]
    else:
        data = print_infos(verify.scan_all(args['r_max'], args['m_max'], args['m_cross']),
            debug=args['debug'])
        scans = [info.data for info in data]

    violated = False
    for scan in scans:
        violated = violated or scan.first_violation is not None
        writer.write(scan.to_record())

    write_footer(writer, args, start)
    return 1 if violated else 0


def cmd_config(args):
    """Show or generate the config.

    Display the current config when used with no arguments.

    Run `partverify help config` for details about config.
    """
    fsrc = os.path.normpath(os.path.join(__file__, '..', 'resources', 'config.ini'))
    if args['project']:
        fdst = os.path.normpath(os.path.join(args['root'], PV_DIR, PV_CONFIG))
    elif args['user']:
        fdst = PV_USER_CONFIG
    else:
        fdst = None

    if fdst:
        if not os.path.isfile(fdst):
            log(f'Generating "{fdst}"...')
            try:
                fcopy(fsrc, fdst)
            except OSError:
                die(f"Unable to generate {fdst}.")

    elif args['name']:
        value = config.getname(args['name'])

        if value is None:
            die(f"""Config entry "{args['name']}" does not exist""")

        print(value)

    else:
        config.dump(sys.stdout)


def cmd_help(args):
    """Show detailed information about certain topics.
    """
    root = os.path.join(os.path.dirname(__file__), 'resources')

    if args['topic'] == 'config':
        file = os.path.join(root, 'config.md')
        with open(file, 'r', encoding='UTF-8') as f:
            text = f.read()
        print(text)


def add_constraint_arguments(parser):
    group = parser.add_argument_group('constraints')
    group.add_argument('--odd', default=False, action='store_true',
        help="""all parts odd""")
    group.add_argument('--distinct', default=False, action='store_true',
        help="""all parts distinct""")
    group.add_argument('--regular', metavar='R', type=int, default=None,
        help="""no part divisible by R""")
    group.add_argument('--mult-below', metavar='R', type=int, default=None,
        help="""every part occurs fewer than R times""")
    group.add_argument('--mod', metavar='R,D', default=None,
        help="""every part is congruent to D modulo R""")
    group.add_argument('--no-ones', default=False, action='store_true',
        help="""no part equal to 1""")
    group.add_argument('--size-eq', metavar='N', type=int, default=None,
        help="""size equals N""")
    group.add_argument('--perimeter-eq', metavar='M', type=int, default=None,
        help="""perimeter equals M""")
    group.add_argument('--divisible', metavar='R,J[,U]', default=None,
        help="""exactly J part values divisible by R (each occurring exactly U times)""")
    group.add_argument('--repeated', metavar='R,J[,U]', default=None,
        help="""exactly J part values occurring at least R times (that value being U, with J=1)""")


def get_parser():
    parser = argparse.ArgumentParser(prog=__package_name__, description=__doc__)
    parser.add_argument('--version', action='version', version=f'{__package_name__} {__version__}',
        help="""show version information and exit""")
    parser.add_argument('--root', default=".",
        help="""root directory to load the project config from (default: current working directory)""")
    parser.add_argument('--format', default=None, choices=RecordWriter.FORMATS,
        help="""output serialization (default: config output.format)""")
    parser.add_argument('--no-footer', default=False, action='store_true',
        help="""do not print the elapsed time footer""")
    parser.add_argument('--threads', metavar='K', type=int, default=None,
        help="""number of worker processes (default: config parallel.threads)""")
    parser.add_argument('--debug', default=False, action='store_true',
        help="""include debug messages""")
    subparsers = parser.add_subparsers(metavar='COMMAND',
        help="""the sub-command to run. Get usage help with e.g. %(prog)s enumerate -h""")

    # subcommand: enumerate
    parser_enumerate = subparsers.add_parser('enumerate', aliases=['e'],
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=getdoc(cmd_enumerate),
        help="""list partitions of a size or perimeter""")
    parser_enumerate.set_defaults(func=cmd_enumerate)
    group = parser_enumerate.add_mutually_exclusive_group(required=True)
    group.add_argument('--size', metavar='N', type=int, default=None,
        help="""enumerate partitions of N""")
    group.add_argument('--perimeter', metavar='M', type=int, default=None,
        help="""enumerate partitions of perimeter M""")
    add_constraint_arguments(parser_enumerate)

    # subcommand: map
    parser_map = subparsers.add_parser('map', aliases=['m'],
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=getdoc(cmd_map),
        help="""apply a partition bijection""")
    parser_map.set_defaults(func=cmd_map)
    parser_map.add_argument('--name', required=True, choices=list(MAPS),
        help="""the bijection to apply""")
    parser_map.add_argument('--inverse', default=False, action='store_true',
        help="""apply the inverse map""")
    parser_map.add_argument('--r', metavar='R', type=int, default=None,
        help="""the modulus (glaisher and theorem1)""")
    parser_map.add_argument('--partition', metavar='PARTS', required=True,
        help="""the partition, largest part first, e.g. 4,4,3,1""")

    # subcommand: count
    parser_count = subparsers.add_parser('count', aliases=['n'],
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=getdoc(cmd_count),
        help="""count partition classes""")
    parser_count.set_defaults(func=cmd_count)
    group = parser_count.add_mutually_exclusive_group(required=True)
    group.add_argument('--franklin', metavar=('N', 'R', 'J'), type=int, nargs=3,
        help="""(|O(N;R,J)|, |D(N;R,J)|)""")
    group.add_argument('--refined', metavar=('N', 'R', 'U'), type=int, nargs=3,
        help="""(α_U(N), β_U(N)) for modulus R""")
    group.add_argument('--beck', metavar='N', type=int, default=None,
        help="""(a(N), b(N), |O(N;2,1)|, |D(N;2,1)|)""")
    group.add_argument('--perimeter', metavar='M', type=int, default=None,
        help="""all statistics over perimeter-M partitions""")
    group.add_argument('--regular', metavar='M R [D]', type=int, nargs='+',
        help="""(g_R(M), h_R(M)[, g_R^(D)(M)])""")

    # subcommand: series
    parser_series = subparsers.add_parser('series', aliases=['s'],
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=getdoc(cmd_series),
        help="""expand a generating function""")
    parser_series.set_defaults(func=cmd_series)
    parser_series.add_argument('--name', required=True, choices=series.CATALOG_NAMES,
        help="""the generating function""")
    parser_series.add_argument('--r', metavar='R', type=int, default=None,
        help="""the modulus (h_r, g_r, g_r_d, h_r_raw)""")
    parser_series.add_argument('--d', metavar='D', type=int, default=None,
        help="""the residue (g_r_d)""")
    parser_series.add_argument('--terms', metavar='N', type=int, default=8,
        help="""number of coefficients (default: %(default)s)""")

    # subcommand: formula
    parser_formula = subparsers.add_parser('formula', aliases=['f'],
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=getdoc(cmd_formula),
        help="""evaluate a closed form or recurrence""")
    parser_formula.set_defaults(func=cmd_formula)
    parser_formula.add_argument('--name', required=True, choices=FORMULA_NAMES,
        help="""the formula""")
    parser_formula.add_argument('--m', metavar='M', type=int, required=True,
        help="""the perimeter""")
    parser_formula.add_argument('--recurrence', default=False, action='store_true',
        help="""iterate the recurrence instead of the closed form""")

    # subcommand: qpoly
    parser_qpoly = subparsers.add_parser('qpoly', aliases=['q'],
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=getdoc(cmd_qpoly),
        help="""print a q-polynomial""")
    parser_qpoly.set_defaults(func=cmd_qpoly)
    group = parser_qpoly.add_mutually_exclusive_group(required=True)
    group.add_argument('--binomial', metavar=('M', 'J'), type=int, nargs=2,
        help="""the Gaussian binomial [M over J]""")
    group.add_argument('--perimeter-row', metavar='M', type=int, default=None,
        help="""the size generating polynomial of perimeter-M partitions""")
    parser_qpoly.add_argument('--base', metavar='B', type=int, default=1,
        help="""substitute q^B for q (with --binomial, default: %(default)s)""")

    # subcommand: info
    parser_info = subparsers.add_parser('info', aliases=['i'],
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=getdoc(cmd_info),
        help="""show statistics of a partition""")
    parser_info.set_defaults(func=cmd_info)
    group = parser_info.add_mutually_exclusive_group(required=True)
    group.add_argument('--partition', metavar='PARTS', default=None,
        help="""the partition, largest part first""")
    group.add_argument('--profile', metavar='WORD', default=None,
        help="""the profile word, e.g. 101001011100""")

    # subcommand: verify
    parser_verify = subparsers.add_parser('verify', aliases=['v'],
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=getdoc(cmd_verify),
        help="""run verification suites""")
    parser_verify.set_defaults(func=cmd_verify)
    parser_verify.add_argument('--suite', action='append', default=None,
        choices=('all',) + verify.SUITES,
        help="""suite to run; may be repeated (default: all)""")
    parser_verify.add_argument('--n-max', metavar='N', type=int, default=None,
        help="""largest size for franklin, theorem1 and beck""")
    parser_verify.add_argument('--r-set', metavar='R,...', default=None,
        help="""moduli for franklin, theorem1 and regular""")
    parser_verify.add_argument('--j-max', metavar='J', type=int, default=None,
        help="""largest j for franklin""")
    parser_verify.add_argument('--m-max-enum', metavar='M', type=int, default=None,
        help="""largest enumerated perimeter for perimeter and regular""")
    parser_verify.add_argument('--m-max-series', metavar='M', type=int, default=None,
        help="""largest perimeter for formula-only checks""")
    parser_verify.add_argument('--fail-fast', default=False, action='store_true',
        help="""stop a suite at its first failure""")

    # subcommand: conjecture
    parser_conjecture = subparsers.add_parser('conjecture', aliases=['j'],
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=getdoc(cmd_conjecture),
        help="""scan g_r(M) ≤ h_r(M)""")
    parser_conjecture.set_defaults(func=cmd_conjecture)
    parser_conjecture.add_argument('--r', metavar='R', type=int, default=None,
        help="""the modulus to scan (default: every r up to --r-max)""")
    parser_conjecture.add_argument('--r-max', metavar='R', type=int, default=None,
        help="""largest modulus (default: config conjecture.r_max)""")
    parser_conjecture.add_argument('--m-max', metavar='M', type=int, default=None,
        help="""largest perimeter (default: config conjecture.m_max)""")
    parser_conjecture.add_argument('--m-cross', metavar='M', type=int, default=None,
        help="""cross-check against enumeration up to M (default: config conjecture.m_cross)""")

    # subcommand: config
    parser_config = subparsers.add_parser('config', aliases=['c'],
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=getdoc(cmd_config),
        help="""show or generate the config""")
    parser_config.set_defaults(func=cmd_config)
    parser_config.add_argument('name', nargs='?',
        help="""show value of the given config name (in the form of <section>.<key>)""")
    parser_config.add_argument('-u', '--user', default=False, action='store_true',
        help="""generate user config file""")
    parser_config.add_argument('-p', '--project', default=False, action='store_true',
        help="""generate project config file under the root directory""")

    # subcommand: help
    parser_help = subparsers.add_parser('help',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=getdoc(cmd_help),
        help="""show detailed information about certain topics""")
    parser_help.set_defaults(func=cmd_help)
    parser_help.add_argument('topic', default=None, action='store',
        choices=['config'],
        help="""the topic for details""")

    return parser


def run(argv=None):
    """Parse argv, dispatch to a sub-command and return the exit code."""
    parser = get_parser()
    try:
        args = vars(parser.parse_args(argv))
        try:
            func = args.pop('func')
        except KeyError:
            parser.print_help(sys.stderr)
            return 2

        config.load(args['root'])
        return func(args) or 0
    except PartitionError as exc:
        print('Error:', exc, file=sys.stderr)
        return 2
    except SystemExit as exc:
        return exc.code


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
