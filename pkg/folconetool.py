#!/usr/bin/env python
# -*- coding: UTF-8
"""
folconetool -- foliation cones of Markov systems, from the command line.

Reads a Markov system (JSON, see folcone/sysfile.py), computes its
minimal loops, homology cone and foliation cone, and classifies rays,
families of cones, disk subcones and simulated orbits against them.

Exit codes: 0 success, 1 validation or usage error, 2 mathematical
failure (no transverse class, overlapping family, failed oracle), 3 the
input could not be read.

Options can be placed in the FOLCONEOPTS environment variable.
FOLCONEOPTS is processed before the CLI options.
"""

import argparse
import logging
import shlex
import sys

PROG_NAME = 'folcone'

try:
    import folcone
except ImportError:
    # PEP8 says local imports last
    sys.stderr.write("%s: failed to import folcone, check PYTHONPATH\n" %
                     PROG_NAME)
    sys.exit(3)

folcone_version = '0.1'
if folcone.__version__ != folcone_version:
    sys.stderr.write("%s: ERROR: need folcone module version %s, got %s\n" %
                     (PROG_NAME, folcone_version, folcone.__version__))
    sys.exit(1)

opts = folcone.opts

# map -v levels onto logging levels
LOG_LEVELS = {
    folcone.VERB_QUIET: logging.ERROR,
    folcone.VERB_NONE: logging.WARNING,
    folcone.VERB_DECODE: logging.INFO,
}


class ArgumentParser(argparse.ArgumentParser):
    "argparse, but usage errors are raised, not printed"

    def error(self, message):
        raise folcone.UsageError(message)


def _common(parser, formats=True):
    parser.add_argument('--out', metavar='PATH',
                        help='write the report to PATH, not stdout')
    if formats:
        parser.add_argument('--format', choices=('text', 'json'),
                            default='text', help='report format')


def build_parser():
    "The folcone command line"
    parser = ArgumentParser(
        prog=PROG_NAME,
        description='Exact foliation cones of Markov systems.',
        epilog='Options can be placed in the FOLCONEOPTS environment '
               'variable. FOLCONEOPTS is processed before the CLI options.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + folcone.__version__)
    parser.add_argument('-v', '--verbosity', type=int, metavar='N',
                        default=opts['verbosity'],
                        help='verbosity level 0..5, default %(default)s')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('check', help='validate a system file')
    p.add_argument('file')
    _common(p)

    p = sub.add_parser('loops', help='minimal loops and periodic strings')
    p.add_argument('file')
    p.add_argument('--max-len', type=int, metavar='L',
                   help='also list periodic strings up to length L')
    _common(p)

    p = sub.add_parser('cone', help='homology and foliation cones')
    p.add_argument('file')
    _common(p)

    p = sub.add_parser('classify', help='classify a rational ray')
    p.add_argument('file')
    p.add_argument('--ray', required=True,
                   help='comma-separated rationals, e.g. 1,-1/2')
    _common(p)

    p = sub.add_parser('verify', help='minimal-loop oracle suite')
    p.add_argument('file')
    p.add_argument('--max-len', type=int, default=10, metavar='L')
    p.add_argument('--integer-max-len', type=int, default=6, metavar='L')
    _common(p)

    p = sub.add_parser('disk', help='disk orthant as a subcone')
    p.add_argument('file')
    _common(p)

    p = sub.add_parser('family', help='pairwise interiors of several cones')
    p.add_argument('files', nargs='+', metavar='file')
    _common(p)

    p = sub.add_parser('simulate', help='orbit convergence report')
    p.add_argument('file')
    p.add_argument('--steps', type=int, required=True, metavar='N')
    p.add_argument('--trials', type=int, default=1, metavar='T')
    p.add_argument('--seed', type=int, default=0, metavar='S')
    p.add_argument('--window', type=int, default=10, metavar='W',
                   help='statistic starts at checkpoint 2**W')
    p.add_argument('--mode', choices=folcone.CLOSE_MODES,
                   default=opts['close_mode'])
    p.add_argument('--extend', action='store_true',
                   help='close the leftover tail by a shortest path')
    _common(p)

    p = sub.add_parser('slice', help='plot data of a 2-plane slice')
    p.add_argument('file')
    p.add_argument('--plane', required=True, help='"v1;v2"')
    _common(p, formats=False)

    p = sub.add_parser('maximal', help='candidate cone against a reference')
    p.add_argument('reference')
    p.add_argument('candidate')
    _common(p)

    p = sub.add_parser('facets', help='lattice rays on each facet')
    p.add_argument('file')
    p.add_argument('--height', type=int, default=opts['facet_height'],
                   metavar='H')
    p.add_argument('--all', action='store_true',
                   help='every lattice point, not only primitive ones')
    _common(p)
    return parser


def _render(args, system, obj, data=None):
    if 'json' == args.format:
        if data is None:
            data = folcone.to_dict(system, obj)
        return folcone.render_json(data)
    return folcone.render_text(system, obj)


def _parse_ray(text, d):
    try:
        return folcone.ray_vector([a.strip() for a in text.split(',')], d)
    except ValueError as err:
        raise folcone.UsageError('bad ray %r: %s' % (text, err))


def cmd_check(args):
    system = folcone.read_system(args.file)
    data = folcone.summary_to_dict(system)
    if 'json' == args.format:
        return folcone.render_json(data)
    return ('%s: rank %d, %d letters, %d transitions, %d minimal loops%s\n'
            % (data['name'], data['rank'], data['letters'],
               data['transitions'], data['loops'],
               ', product type' if data['product_type'] else ''))


def cmd_loops(args):
    system = folcone.read_system(args.file)
    strings = None
    if args.max_len is not None:
        strings = folcone.enumerate_periodic_strings(system, args.max_len)
    if 'json' == args.format:
        return folcone.render_json(folcone.loops_to_dict(system, strings))
    lines = []
    for loop in system.loops:
        lines.append('(%s): %s' % (','.join(system.names(loop.word)),
                                   folcone.fmt_vector(loop.cls)))
    for p in strings or []:
        lines.append('string (%s): %s' % (
            ','.join(system.names(p.word)),
            folcone.fmt_vector(folcone.class_of(system, p))))
    return '\n'.join(lines) + '\n'


def cmd_cone(args):
    system = folcone.read_system(args.file)
    return _render(args, system, folcone.foliation_cone(system))


def cmd_classify(args):
    system = folcone.read_system(args.file)
    ray = _parse_ray(args.ray, system.rank)
    return _render(args, system, folcone.classify_ray(system, ray))


def cmd_verify(args):
    system = folcone.read_system(args.file)
    report = folcone.verify_minimal_loops(system, args.max_len,
                                          args.integer_max_len)
    if not report.ok:
        raise folcone.CertificateError(
            '%s: minimal loops do not span every periodic class' %
            system.name)
    return _render(args, system, report)


def cmd_disk(args):
    system = folcone.read_system(args.file)
    verdict = folcone.verify_disk_subcone(
        system, folcone.DiskBasis.from_system(system))
    return _render(args, system, verdict)


def cmd_family(args):
    systems = [folcone.read_system(f) for f in args.files]
    family = folcone.family_report(systems).check()
    return _render(args, None, family)


def cmd_simulate(args):
    system = folcone.read_system(args.file)
    config = folcone.SimulationConfig(args.steps, args.trials, args.seed,
                                      args.window, args.mode, args.extend)
    return _render(args, system, folcone.convergence_report(system, config))


def cmd_slice(args):
    system = folcone.read_system(args.file)
    plane = folcone.parse_plane(args.plane, system.rank)
    rows = folcone.slice_plot_data(folcone.foliation_cone(system), plane)
    # the caller writes to --out
    return folcone.write_plot_csv(rows)


def cmd_maximal(args):
    reference = folcone.read_system(args.reference)
    candidate = folcone.read_system(args.candidate)
    return _render(args, reference,
                   folcone.maximality_verdict(reference, candidate))


def cmd_facets(args):
    system = folcone.read_system(args.file)
    report = folcone.foliation_cone(system)
    found = []
    for k, facet in enumerate(report.facets):
        rays = folcone.facet_lattice_rays(report, k, args.height,
                                          primitive=not args.all)
        found.append((facet, rays))
    if 'json' == args.format:
        return folcone.render_json({
            'name': system.name,
            'height': args.height,
            'facets': [{'normal': list(f.normal),
                        'rays': [list(r) for r in rays]}
                       for f, rays in found]})
    lines = []
    for f, rays in found:
        lines.append('facet %s: %d rays' % (folcone.fmt_vector(f.normal),
                                            len(rays)))
        lines.extend('  %s' % folcone.fmt_vector(r) for r in rays)
    return '\n'.join(lines) + '\n'


COMMANDS = {
    'check': cmd_check,
    'loops': cmd_loops,
    'cone': cmd_cone,
    'classify': cmd_classify,
    'verify': cmd_verify,
    'disk': cmd_disk,
    'family': cmd_family,
    'simulate': cmd_simulate,
    'slice': cmd_slice,
    'maximal': cmd_maximal,
    'facets': cmd_facets,
}


def setup_logging(verbosity):
    "Route the library loggers to stderr at the level -v asks for."
    level = LOG_LEVELS.get(verbosity, logging.DEBUG)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(
        PROG_NAME + ': %(name)s: %(levelname)s: %(message)s'))
    root = logging.getLogger('folcone')
    root.handlers[:] = [handler]
    root.setLevel(level)
    root.propagate = False


def write_output(text, path):
    "Write text to path, or to stdout when path is None."
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
    except (IOError, OSError) as err:
        raise folcone.FileAccessError('failed to write %s: %s' %
                                      (path, err.strerror))


def main(argv=None):
    "Run one folcone command; returns the exit code."
    if argv is None:
        argv = sys.argv[1:]
    folcone.load_environment()
    if opts['progopts']:
        # grab the FOLCONEOPTS environment variable for options
        argv = shlex.split(opts['progopts']) + list(argv)

    try:
        args = build_parser().parse_args(argv)
    except folcone.UsageError as err:
        sys.stderr.write('%s: %s\n' % (PROG_NAME, err.msg))
        return folcone.EXIT_VALIDATION
    except SystemExit as err:
        # --help and --version
        return err.code or folcone.EXIT_OK

    opts['verbosity'] = args.verbosity
    setup_logging(args.verbosity)

    try:
        text = COMMANDS[args.command](args)
        write_output(text, args.out)
    except folcone.FolconeError as err:
        sys.stderr.write('%s: %s\n' % (PROG_NAME, err.msg))
        return err.exit_code
    except (IOError, OSError) as err:
        sys.stderr.write('%s: %s\n' % (PROG_NAME, err))
        return folcone.EXIT_INPUT
    except KeyboardInterrupt:
        sys.stderr.write('%s: interrupted\n' % PROG_NAME)
        return folcone.EXIT_INPUT
    return folcone.EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
