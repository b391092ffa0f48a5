"""
Command-line surface: invariants, classify, vfunc, strata, series, sweep.

Exit codes: 0 when a report was produced, 1 for unparseable input, 2 when
the input parses but lies outside an operation's domain or violates a
theorem's hypotheses.
"""

import argparse
import csv
import json
import os
import sys

import wild_mckay
from wild_mckay import convergence, digits, loggers, ramification, series
from wild_mckay import representation as rep
from wild_mckay.errors import DomainError, ParseError
from wild_mckay.grothendieck import degree_to_json, format_rational, poly_to_json
from wild_mckay.vfunction import v_formula, v_stratum

options = {}


def set_globals(environ=None):
    """
    Reads the environment into the module-level options. Command-line flags
    override these later in run().
    """
    environ = os.environ if environ is None else environ

    options.clear()
    options['long_name'] = 'Wild McKay Calculator'
    options['name']      = 'wild_mckay'
    options['version']   = wild_mckay.__version__

    try:
        threads = environ.get('WMK_THREADS')
        options['threads'] = max(1, int(threads)) if threads else None
    except ValueError:
        raise ParseError("WMK_THREADS must be an integer, got '{}'".format(environ.get('WMK_THREADS')))
    options['log']       = environ.get('WMK_LOG', '').lower() in ('1', 'true', 'yes', 'on')
    options['log_dest']  = environ.get('WMK_LOG_PATH') or None
    try:
        options['log_level'] = loggers.parse_level(environ.get('WMK_LOG_LEVEL', 'WARNING'))
    except ValueError as e:
        raise ParseError(str(e))


def worker_count(requested):
    """
    The number of worker processes to use: --workers, capped by WMK_THREADS
    when that is set. Either alone decides; neither means 1.
    """
    cap = options.get('threads')
    if cap is None:
        return requested or 1
    return min(requested, cap) if requested else cap


def setup_logger():
    """
    Creates the package logger: a rotating file when logging was asked for,
    otherwise console output on stderr.
    """
    logger = loggers.get_logger(options['name'], log=options['log'],
                                level=options['log_level'], path=options['log_dest'])
    loggers.set_level(options['log_level'])
    return logger


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with status 1."""

    def error(self, message):
        sys.stderr.write("Error: {}\n".format(message))
        self.print_usage(sys.stderr)
        self.exit(1)


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("'{}' is not an integer".format(text))
    if value < 1:
        raise argparse.ArgumentTypeError("'{}' must be positive".format(text))
    return value


def _int_list(text):
    try:
        return [int(x) for x in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError("'{}' is not a comma-separated list of integers".format(text))


def build_parser():
    common = ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help="Print a JSON report.")
    common.add_argument('--workers', type=_positive_int,
                        help="Worker processes for series/sweep, capped by $WMK_THREADS (default: $WMK_THREADS or 1).")
    common.add_argument('--log', nargs='?', const='', default=None, metavar='DIR',
                        help="Also write a rotating log file (optionally inside DIR).")
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help="Log more (repeat for DEBUG and VERBOSE).")

    parser = ArgumentParser(prog='wild_mckay',
                            description="Exact invariants, v-functions, truncated stringy "
                                        "motives and singularity verdicts for Z/p^nZ quotients.")
    parser.add_argument('--version', action='version',
                        version="%(prog)s {}".format(wild_mckay.__version__))
    commands = parser.add_subparsers(dest='command', parser_class=ArgumentParser)
    commands.required = True

    sub = commands.add_parser('invariants', parents=[common], help="Digit sums S and invariants D.")
    sub.add_argument('--rep', required=True, help="p=<prime>,n=<int>,dims=<d1+d2+...>")

    sub = commands.add_parser('classify', parents=[common], help="Convergence report and verdict.")
    sub.add_argument('--rep', required=True)
    sub.add_argument('--sylow', action='store_true',
                     help="Interpret V as the restriction to the p-Sylow subgroup of a larger group.")
    sub.add_argument('--threshold', action='store_true',
                     help="Also apply the indecomposable dimension thresholds.")

    sub = commands.add_parser('vfunc', parents=[common], help="Evaluate the v-function.")
    sub.add_argument('--rep', required=True)
    where = sub.add_mutually_exclusive_group(required=True)
    where.add_argument('--jumps', help="Admissible upper jumps u0,u1,...")
    where.add_argument('--orders', help="Order tuple j0,j1,... with _ for BOTTOM.")

    sub = commands.add_parser('strata', parents=[common], help="List strata, classes and fibers.")
    sub.add_argument('--rep')
    sub.add_argument('--p', type=_positive_int)
    sub.add_argument('--n', type=_positive_int)
    sub.add_argument('--bound', type=_positive_int, required=True)

    sub = commands.add_parser('series', parents=[common], help="Truncated integral of L^(d-v).")
    sub.add_argument('--rep', required=True)
    sub.add_argument('--bound', type=_positive_int)
    sub.add_argument('--bounds', type=_int_list, help="Trajectory bounds b1,b2,... (increasing).")
    sub.add_argument('--per-stratum', action='store_true')
    sub.add_argument('--csv', metavar='PATH')

    sub = commands.add_parser('sweep', parents=[common], help="Classify every indecomposable W_d.")
    sub.add_argument('--p', type=_positive_int, required=True)
    sub.add_argument('--n', type=_positive_int, required=True)
    sub.add_argument('--csv', metavar='PATH')

    return parser


#-------------------------------------------------------------------------------
# Output helpers
#-------------------------------------------------------------------------------

def _emit_json(data):
    sys.stdout.write(json.dumps(data, indent=2, sort_keys=True) + "\n")


def _tuple_text(values):
    return "({})".format(', '.join(str(v) for v in values))


def _rationals_text(values):
    return _tuple_text(format_rational(c) for c in values)


def _yes_no(flag):
    return 'yes' if flag else 'no'


#-------------------------------------------------------------------------------
# Commands
#-------------------------------------------------------------------------------

def do_invariants(args):
    V = rep.parse_representation(args.rep)
    blocks = [(d, digits.digit_sums(d, V.spec)) for d in sorted(set(V.summands), reverse=True)]
    D = rep.invariants_D(V)
    witness = rep.pseudo_reflection_witness(V)
    if args.json:
        _emit_json({
            'rep': rep.representation_to_json(V),
            'S': [[d, list(S)] for d, S in blocks],
            'D': list(D),
            'effective': rep.is_effective(V),
            'pseudo_reflection': witness is not None,
        })
        return 0
    print("representation: {}".format(rep.format_representation(V)))
    print("dimension: {}".format(V.dim))
    print("effective: {}".format(_yes_no(rep.is_effective(V))))
    if witness is None:
        print("pseudo-reflection: no")
    else:
        print("pseudo-reflection: yes (sigma^{})".format(V.spec.p ** witness))
    for d, S in blocks:
        print("W_{}: S={}".format(d, _tuple_text(S)))
    print("D={}".format(_tuple_text(D)))
    return 0


def do_classify(args):
    V = rep.parse_representation(args.rep)
    threshold = convergence.dimension_criterion(V) if args.threshold else None

    if args.sylow:
        verdict = convergence.sylow_classify(V)
    else:
        verdict = convergence.classify_quotient(V)

    if args.json:
        data = verdict.to_json()
        data['rep'] = rep.representation_to_json(V)
        data['mode'] = 'sylow' if args.sylow else 'quotient'
        data['verdict'] = verdict.label
        if threshold is not None:
            data['threshold'] = threshold.to_json()
        _emit_json(data)
        return 0

    report = verdict.report
    print("representation: {}".format(rep.format_representation(V)))
    print("c = {}".format(_rationals_text(report.c_values)))
    print("status: {}".format(report.status.value))
    if args.sylow:
        print("log terminal: {}".format(_yes_no(verdict.log_terminal)))
        print("log canonical: {}".format(_yes_no(verdict.log_canonical)))
    else:
        print("log canonical: {}".format(_yes_no(verdict.log_canonical)))
        print("canonical: {}".format(verdict.canonical.value))
        for note in verdict.notes:
            print("note: {}".format(note))
    print("verdict: {}".format(verdict.label))
    for warning in verdict.warnings:
        print("warning: {}".format(warning))
    if threshold is not None:
        if threshold.canonical_bound is not None:
            print("threshold: canonical if d >= {}, log canonical iff d >= {}".format(
                threshold.canonical_bound, threshold.log_canonical_bound))
        print("threshold verdict: canonical {}, log canonical {}".format(
            threshold.canonical.value, _yes_no(threshold.log_canonical)))
        for note in threshold.notes:
            print("note: {}".format(note))
    return 0


def do_vfunc(args):
    V = rep.parse_representation(args.rep)
    if args.jumps is not None:
        u = ramification.parse_jumps(V.spec, args.jumps)
        value = v_formula(V, u.entries)
        data = {'rep': rep.representation_to_json(V), 'jumps': list(u.entries),
                'lower_jumps': list(ramification.lower_jumps(u)), 'v': value}
    else:
        j = ramification.parse_order_tuple(V.spec, args.orders)
        value = v_stratum(V, j)
        data = {'rep': rep.representation_to_json(V), 'orders': ramification.order_tuple_to_json(j),
                'connected': j.is_connected, 'v': value}
        if j.is_connected:
            data['jumps'] = list(ramification.upper_jumps(j).entries)

    if args.json:
        _emit_json(data)
    else:
        for key in ('orders', 'jumps', 'lower_jumps'):
            if key in data:
                print("{}: {}".format(key, ','.join('_' if e is None else str(e) for e in data[key])))
        print("v = {}".format(value))
    return 0


def do_strata(args):
    if args.rep:
        V = rep.parse_representation(args.rep)
        spec = V.spec
    elif args.p and args.n:
        V = None
        spec = rep.GroupSpec(args.p, args.n)
    else:
        raise ParseError("strata needs --rep or both --p and --n")

    groups = {}
    disconnected = []
    for j in ramification.enumerate_order_tuples(spec, args.bound):
        if j.is_connected:
            groups.setdefault(ramification.upper_jumps(j).entries, []).append(j)
        else:
            disconnected.append(j)

    def describe(j):
        entry = {'orders': ramification.order_tuple_to_json(j),
                 'class': poly_to_json(ramification.stratum_class(j))}
        if V is not None:
            entry['v'] = v_stratum(V, j)
            entry['term'] = poly_to_json(series.term(V, j))
        return entry

    if args.json:
        _emit_json({
            'p': spec.p, 'n': spec.n, 'bound': args.bound,
            'count': ramification.count_order_tuples(spec, args.bound),
            'fibers': [{'jumps': list(u), 'strata': [describe(j) for j in groups[u]]}
                       for u in sorted(groups)],
            'disconnected': [describe(j) for j in disconnected],
        })
        return 0

    def line(j):
        text = "  {:<16} class {}".format(str(j), ramification.stratum_class(j))
        if V is not None:
            text += "   v={}   term {}".format(v_stratum(V, j), series.term(V, j))
        return text

    print("{} strata with entries <= {} for p={}, n={}".format(
        ramification.count_order_tuples(spec, args.bound), args.bound, spec.p, spec.n))
    for u in sorted(groups):
        print("u = {}".format(','.join(str(x) for x in u)))
        for j in groups[u]:
            print(line(j))
    if disconnected:
        print("disconnected (j_0 = _)")
        for j in disconnected:
            print(line(j))
    return 0


_CSV_COLUMNS = ['bound', 'num_strata', 'max_term_dim', 'tail_max_dim',
                'partial_sum_degree', 'partial_sum_json']


def _write_trajectory_csv(path, rows):
    with open(path, 'w') as handle:
        writer = csv.writer(handle)
        writer.writerow(_CSV_COLUMNS)
        for row in rows:
            writer.writerow([row.bound, row.num_strata, degree_to_json(row.max_term_dim),
                             degree_to_json(row.tail_max_dim), degree_to_json(row.partial_sum_degree),
                             json.dumps(poly_to_json(row.partial_sum))])


def do_series(args):
    V = rep.parse_representation(args.rep)
    if args.bounds:
        bounds = args.bounds
    elif args.bound:
        bounds = [args.bound]
    else:
        raise ParseError("series needs --bound or --bounds")
    workers = worker_count(args.workers)

    truncation = series.truncated_integral(V, bounds[-1], per_stratum=args.per_stratum, workers=workers)
    rows = series.dimension_trajectory(V, bounds, workers=workers) if (args.bounds or args.csv) else []
    if args.csv:
        _write_trajectory_csv(args.csv, rows)

    if args.json:
        data = truncation.to_json()
        data['rep'] = rep.representation_to_json(V)
        if args.bounds:
            data['trajectory'] = [row.to_json() for row in rows]
        _emit_json(data)
        return 0

    print("representation: {}".format(rep.format_representation(V)))
    print("bound: {}".format(truncation.bound))
    print("strata: {}".format(truncation.term_count))
    print("partial sum: {}".format(truncation.partial_sum))
    print("max term dimension: {}".format(truncation.max_term_dim))
    print("partial sum degree: {}".format(truncation.partial_sum_degree))
    if args.per_stratum:
        for j, t in truncation.per_stratum:
            print("  {:<16} {}".format(str(j), t))
    if args.bounds:
        print("{:>8} {:>10} {:>14} {:>14}".format('bound', 'strata', 'max_term_dim', 'tail_max_dim'))
        for row in rows:
            print("{:>8} {:>10} {:>14} {:>14}".format(row.bound, row.num_strata,
                                                     str(row.max_term_dim), str(row.tail_max_dim)))
    return 0


def do_sweep(args):
    spec = rep.GroupSpec(args.p, args.n)
    result = convergence.sweep(spec, workers=worker_count(args.workers))
    top = spec.order // spec.p

    if args.csv:
        with open(args.csv, 'w') as handle:
            writer = csv.writer(handle)
            writer.writerow(['d', 'status', 'hypotheses_ok'] + ['c_{}'.format(m) for m in range(spec.n)])
            for row in result.rows:
                writer.writerow([row.d, row.report.status.value, row.hypotheses_ok]
                                + [format_rational(c) for c in row.report.c_values])

    if args.json:
        data = result.to_json()
        data['log_canonical_bound'] = spec.p - 1 + top
        data['canonical_bound'] = spec.p + top
        _emit_json(data)
        return 0

    print("{:>6} {:<18} {:<10} {}".format('d', 'status', 'valid', 'c'))
    for row in result.rows:
        print("{:>6} {:<18} {:<10} {}".format(row.d, row.report.status.value, _yes_no(row.hypotheses_ok),
                                             _rationals_text(row.report.c_values)))
    print("first log canonical d: {}".format(result.first_log_canonical))
    print("first canonical d: {}".format(result.first_canonical))
    print("thresholds p-1+p^(n-1) = {}, p+p^(n-1) = {}".format(spec.p - 1 + top, spec.p + top))
    return 0


COMMANDS = {
    'invariants': do_invariants,
    'classify': do_classify,
    'vfunc': do_vfunc,
    'strata': do_strata,
    'series': do_series,
    'sweep': do_sweep,
}


def run(argv=None):
    """
    Parses argv, runs the command and returns the exit code.
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exit:
        return exit.code if isinstance(exit.code, int) else 1

    try:
        set_globals()
    except ParseError as e:
        sys.stderr.write("Error: {}\n".format(e))
        return 1
    if args.log is not None:
        options['log'] = True
        options['log_dest'] = args.log or options['log_dest']
    if args.verbose:
        options['log_level'] = max(loggers.VERBOSE, loggers.WARNING - 10 * args.verbose)
    try:
        logger = setup_logger()
    except (ValueError, OSError) as e:
        sys.stderr.write("Error: {}\n".format(e))
        return 2

    logger.debug("{} {}: {}".format(options['name'], options['version'], args.command))
    try:
        return COMMANDS[args.command](args)
    except ParseError as e:
        logger.error(str(e), print_out=True, log=False)
        return 1
    except DomainError as e:
        logger.error(str(e), print_out=True, log=False)
        return 2
    except (IOError, OSError) as e:
        logger.error("Could not write output: {}".format(e), print_out=True, log=False)
        return 2


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
