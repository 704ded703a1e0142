# -*- coding: utf-8 -*-
#
# Copyright (C) 2019 The nolag developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""Command-line interface: runs the trading system of one or all impulse
variants on a price file and writes the report, the trade ledgers, or the
indicator values.

Runs are described by a `RunSpec`, which can be built from a mapping of
options like the one produced by the command line:

>>> spec = RunSpec.from_options({'nolag.input': 'spx.csv',
...                              'nolag.variant': 'nyquist',
...                              'nolag.cost': '0',
...                              'nolag.force_close': 'no'})
>>> spec.variants, spec.config.cost_per_side, spec.config.close_before_end
(('nyquist',), 0.0, False)
>>> RunSpec.from_options({'nolag.input': 'spx.csv', 'nolag.mode': 'chart'})
Traceback (most recent call last):
  ...
nolag.cli.ConfigurationError: Unknown output mode "chart"
"""

import argparse
import io
import logging
import sys

import six

from nolag import __version__
from nolag.backtest import BacktestConfig, BacktestError, compare
from nolag.indicators import VARIANTS, Variant
from nolag.input import ParseError, load_csv, series_from_records
from nolag.output import encode, get_serializer
from nolag.series import SeriesError
from nolag.smoothing import ParameterError
from nolag.util import asbool

__all__ = ['ConfigurationError', 'RunSpec', 'run', 'main']
__docformat__ = 'restructuredtext en'

log = logging.getLogger(__name__)

ALL = 'all'
MODES = ('report', 'ledger', 'series')

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'


class ConfigurationError(ValueError):
    """Exception raised when invalid run options are encountered."""


class RunSpec(object):
    """The description of a run: input file, variants, backtest parameters
    and output.
    """
    __slots__ = ['input_path', 'variant', 'mode', 'config', 'json',
                 'output_path']

    def __init__(self, input_path, variant=ALL, mode='report', config=None,
                 json=False, output_path=None):
        """Create the run description.

        :param input_path: the path to the price file
        :param variant: "classic", "no_lag", "nyquist" or "all"
        :param mode: the output mode, "report", "ledger" or "series"
        :param config: the `BacktestConfig`
        :param json: whether the report is written as JSON
        :param output_path: the file the output is written to, standard
                            output if `None`
        :raises ConfigurationError: if a value is invalid
        """
        if not input_path:
            raise ConfigurationError('no input file given')
        if variant != ALL and variant not in VARIANTS:
            raise ConfigurationError('Unknown variant "%s"' % variant)
        if mode not in MODES:
            raise ConfigurationError('Unknown output mode "%s"' % mode)
        if json and mode != 'report':
            raise ConfigurationError('JSON output is only available in '
                                     'report mode')
        self.input_path = input_path
        self.variant = variant
        self.mode = mode
        self.config = config or BacktestConfig()
        self.json = json
        self.output_path = output_path

    def __repr__(self):
        return '<%s %r variant=%s mode=%s>' % (type(self).__name__,
                                               self.input_path, self.variant,
                                               self.mode)

    @classmethod
    def from_options(cls, options):
        """Create a run description from a mapping of options.

        The recognized keys are ``nolag.input``, ``nolag.output``,
        ``nolag.variant``, ``nolag.mode``, ``nolag.cost``,
        ``nolag.multiplier``, ``nolag.force_close`` and ``nolag.json``. Values
        may be given as strings.

        :raises ConfigurationError: if a value is invalid
        """
        def number(key, default):
            value = options.get(key, default)
            try:
                return float(value)
            except (TypeError, ValueError):
                raise ConfigurationError('Invalid value for %s: "%s"' %
                                         (key.split('.', 1)[1], value))

        def boolean(key, default):
            value = options.get(key, default)
            try:
                return asbool(value)
            except ValueError:
                raise ConfigurationError('Invalid value for %s: "%s"' %
                                         (key.split('.', 1)[1], value))

        try:
            config = BacktestConfig(number('nolag.cost', 3.0),
                                    number('nolag.multiplier', 50.0),
                                    boolean('nolag.force_close', True))
        except BacktestError as e:
            raise ConfigurationError(str(e))
        variant = options.get('nolag.variant', ALL)
        mode = options.get('nolag.mode', 'report')
        if isinstance(variant, six.string_types):
            variant = variant.lower()
        if isinstance(mode, six.string_types):
            mode = mode.lower()
        return cls(options.get('nolag.input'), variant, mode, config,
                   boolean('nolag.json', False), options.get('nolag.output'))

    @property
    def variants(self):
        """The variants the run compares."""
        if self.variant == ALL:
            return VARIANTS
        return (Variant(self.variant),)

    @property
    def method(self):
        """The serialization method of the output."""
        return 'json' if self.json else self.mode


def _error_message(e):
    if isinstance(e, EnvironmentError) and e.filename:
        return '%s: %s' % (e.filename, e.strerror)
    return str(e)


def _fail(e, err=None):
    err = err or sys.stderr
    err.write('nolag: error: %s\n' % _error_message(e))
    return 1


def run(spec, out=None, err=None):
    """Execute a run and write its output.

    :param spec: the `RunSpec`
    :param out: the file-like object the output is written to when the run
                names no output file; standard output by default
    :param err: the file-like object error messages are written to; standard
                error by default
    :return: the exit status, 0 on success and 1 on error
    """
    log.info('running %r', spec)
    try:
        records = load_csv(spec.input_path)
        x = series_from_records(records)
        results = compare(x, spec.variants, spec.config)
        chunks = get_serializer(spec.method)(records, results)
        if spec.output_path:
            with io.open(spec.output_path, 'w', encoding='utf-8',
                         newline='') as fileobj:
                encode(chunks, out=fileobj)
        else:
            encode(chunks, out=out or sys.stdout)
    except (ParseError, ConfigurationError, BacktestError, ParameterError,
            SeriesError, EnvironmentError) as e:
        log.debug('run failed', exc_info=True)
        return _fail(e, err)
    log.info('run finished')
    return 0


def _parser():
    parser = argparse.ArgumentParser(
        prog='nolag',
        description='Compare the classical, no-lag and Nyquist impulse '
                    'systems on a daily price history.'
    )
    parser.add_argument('--input', required=True, metavar='PATH',
                        help='CSV file with a "date,close" header')
    parser.add_argument('--variant', default=ALL,
                        choices=[str(v) for v in VARIANTS] + [ALL],
                        help='impulse system variant (default: %(default)s)')
    parser.add_argument('--mode', default='report', choices=MODES,
                        help='what to write (default: %(default)s)')
    parser.add_argument('--cost', type=float, default=3.0,
                        help='transaction cost of every entry and exit '
                             '(default: %(default)s)')
    parser.add_argument('--multiplier', type=float, default=50.0,
                        help='money value of one index point '
                             '(default: %(default)s)')
    parser.add_argument('--no-force-close', dest='force_close',
                        action='store_false',
                        help='do not close the open position one bar before '
                             'the end')
    parser.add_argument('--json', action='store_true',
                        help='write the report as JSON')
    parser.add_argument('-o', '--output', metavar='PATH',
                        help='write to PATH instead of standard output')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress (twice for debugging output)')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    return parser


def main(argv=None):
    """Run the command-line interface.

    :param argv: the arguments, ``sys.argv[1:]`` by default
    :return: the exit status
    """
    args = _parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose,
                                                      logging.DEBUG)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)

    options = {
        'nolag.input': args.input,
        'nolag.output': args.output,
        'nolag.variant': args.variant,
        'nolag.mode': args.mode,
        'nolag.cost': args.cost,
        'nolag.multiplier': args.multiplier,
        'nolag.force_close': args.force_close,
        'nolag.json': args.json,
    }
    try:
        spec = RunSpec.from_options(options)
    except ConfigurationError as e:
        return _fail(e)
    return run(spec)


if __name__ == '__main__':
    sys.exit(main())
