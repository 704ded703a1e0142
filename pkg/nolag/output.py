# -*- coding: utf-8 -*-
#
# Copyright (C) 2019 The nolag developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""This module provides different kinds of serialization methods for the
results of a run: the report of every variant as aligned text or JSON, the
trade ledgers as CSV, and the indicator values as CSV for plotting.

Every serializer is a callable that takes the price records and the results
of `nolag.backtest.compare`, and returns an iterator of text chunks:

>>> from nolag.backtest import compare
>>> from nolag.indicators import CLASSIC
>>> from nolag.input import CSV, series_from_records
>>> records = CSV('date,close\\n2017-11-01,100\\n2017-11-02,100\\n')
>>> results = compare(series_from_records(records), [CLASSIC])
>>> print(encode(get_serializer('ledger')(records, results)))
variant,direction,entry_index,exit_index,entry_price,exit_price,gross_pnl,net_pnl
<BLANKLINE>
"""

from collections import OrderedDict
import json

import pandas
import six

from nolag.backtest import REPORT_ROWS
from nolag.compat import StringIO
from nolag.indicators import macd_for, impulse_from_lines, fast_line
from nolag.input import series_from_records
from nolag.lag import nyquist_ma
from nolag.series import evaluate
from nolag.util import format_money, format_number, round_number

__all__ = ['encode', 'get_serializer', 'series_frame', 'ReportSerializer',
           'JSONSerializer', 'LedgerSerializer', 'SeriesSerializer']
__docformat__ = 'restructuredtext en'

# Nyquist moving averages plotted with the prices
TREND_LINES = (('n_12_3', (12, 3)), ('n_26_3', (26, 3)), ('n_26_6', (26, 6)))

LEDGER_COLUMNS = ('variant', 'direction', 'entry_index', 'exit_index',
                  'entry_price', 'exit_price', 'gross_pnl', 'net_pnl')


def encode(iterator, out=None):
    """Join serializer output into a string.

    :param iterator: the iterator returned from a serializer
    :param out: a file-like object that the output should be written to
                instead of being returned as one big string
    :return: the text, or `None` if the `out` parameter is provided
    """
    if out is None:
        return ''.join(list(iterator))
    for chunk in iterator:
        out.write(chunk)


def get_serializer(method='report', **kwargs):
    """Return a serializer object for the given method.

    :param method: the serialization method; can be either "report", "json",
                   "ledger", "series", or a custom serializer class

    Any additional keyword arguments are passed to the serializer.

    :see: `ReportSerializer`, `JSONSerializer`, `LedgerSerializer`,
          `SeriesSerializer`
    """
    if isinstance(method, six.string_types):
        method = {'report': ReportSerializer,
                  'json':   JSONSerializer,
                  'ledger': LedgerSerializer,
                  'series': SeriesSerializer}[method.lower()]
    return method(**kwargs)


def _format_value(value, kind):
    if kind == 'count':
        return '%d' % value
    elif kind == 'money':
        return format_money(value)
    elif kind == 'percent':
        return format_money(value) + '%'
    return format_number(value)


class ReportSerializer(object):
    """Produces the reports of the variants side by side, one row per
    statistic.
    """

    def __init__(self, width=None):
        """Create the serializer.

        :param width: the minimum width of a value column
        """
        self.width = width or 0

    def __call__(self, records, results):
        variants = list(results)
        reports = [report for ledger, report in results.values()]
        rows = [(label, [_format_value(getattr(report, name), kind)
                         for report in reports])
                for name, label, kind in REPORT_ROWS]
        rows.append(('Buy and hold profit (TPI)',
                     [format_money(report.tpi) for report in reports]))

        label_width = max(len(label) for label, values in rows)
        widths = [max([self.width, len(variant)] +
                      [len(values[i]) for label, values in rows])
                  for i, variant in enumerate(variants)]

        def line(label, values):
            cells = [value.rjust(width) for value, width in zip(values, widths)]
            return '  '.join([label.ljust(label_width)] + cells).rstrip() + '\n'

        yield line('', variants)
        for label, values in rows:
            yield line(label, values)

        for variant, report in zip(variants, reports):
            if report.undefined:
                yield '%s: reported as 0 for lack of trades: %s\n' % (
                    variant, ', '.join(report.undefined)
                )


def _json_value(value, kind):
    if kind == 'count':
        return int(value)
    elif kind == 'money':
        return round(value, 2)
    return round_number(value)


_JSON_KINDS = dict((name, kind) for name, label, kind in REPORT_ROWS)
_JSON_KINDS.update(n_wins='count', n_losses='count', n_long='count',
                   n_short='count', tpi='money')


class JSONSerializer(object):
    """Produces the reports as one JSON object.

    With a single variant, the object holds the report fields and the name
    of the variant; otherwise it maps every variant to its report.
    """

    def __init__(self, indent=2):
        self.indent = indent

    def _report(self, variant, report):
        data = OrderedDict([('variant', str(variant))])
        for name, value in report.as_dict().items():
            if name in _JSON_KINDS:
                value = _json_value(value, _JSON_KINDS[name])
            data[name] = value
        return data

    def __call__(self, records, results):
        reports = OrderedDict((str(variant), self._report(variant, report))
                              for variant, (ledger, report)
                              in results.items())
        if len(reports) == 1:
            data = list(reports.values())[0]
        else:
            data = reports
        yield json.dumps(data, indent=self.indent)
        yield '\n'


def _to_csv(frame):
    buf = StringIO()
    frame.to_csv(buf, index=False, lineterminator='\n')
    return buf.getvalue()


class LedgerSerializer(object):
    """Produces one CSV row per trade of every variant."""

    def __call__(self, records, results):
        rows = []
        for variant, (ledger, report) in results.items():
            for trade in ledger:
                rows.append((str(variant), str(trade.direction),
                             trade.entry_index, trade.exit_index,
                             format_number(trade.entry_price),
                             format_number(trade.exit_price),
                             format_money(trade.gross_pnl),
                             format_money(trade.net_pnl)))
        yield _to_csv(pandas.DataFrame(rows, columns=list(LEDGER_COLUMNS)))


def series_frame(records, variants):
    """Return the prices, the Nyquist trend lines, the MACD triples and the
    impulse colours of the given variants as a data frame.

    With one variant, the MACD columns are named ``macd``, ``macds``,
    ``macdh`` and ``impulse``; with several, they are suffixed with the name
    of the variant.

    >>> from nolag.input import CSV
    >>> records = CSV('date,close\\n2017-11-01,100\\n2017-11-02,101\\n')
    >>> list(series_frame(records, ['classic']).columns)
    ['index', 'date', 'close', 'n_12_3', 'n_26_3', 'n_26_6', 'macd', 'macds', 'macdh', 'impulse']
    """
    x = series_from_records(records)
    columns = OrderedDict()
    columns['index'] = list(range(len(x)))
    columns['date'] = [record.date.isoformat() for record in records]
    columns['close'] = x.tolist()
    for name, periods in TREND_LINES:
        columns[name] = evaluate(nyquist_ma(periods), x).tolist()

    variants = list(variants)
    impulses = OrderedDict()
    for variant in variants:
        suffix = '' if len(variants) == 1 else '_' + variant
        triple = macd_for(x, variant)
        columns['macd' + suffix] = triple.macd.tolist()
        columns['macds' + suffix] = triple.signal.tolist()
        columns['macdh' + suffix] = triple.histogram.tolist()
        signal = impulse_from_lines(fast_line(x, variant), triple.histogram)
        impulses['impulse' + suffix] = [str(color) for color in signal]
    columns.update(impulses)
    return pandas.DataFrame(columns)


class SeriesSerializer(object):
    """Produces the indicator values as CSV, with numbers printed to 12
    significant digits.
    """

    def __call__(self, records, results):
        frame = series_frame(records, list(results))
        for name in frame.columns:
            if frame[name].dtype.kind == 'f':
                frame[name] = frame[name].map(format_number)
        yield _to_csv(frame)
