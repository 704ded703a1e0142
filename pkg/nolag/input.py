# -*- coding: utf-8 -*-
#
# Copyright (C) 2019 The nolag developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""Support for reading daily price histories from CSV files.

The input has a ``date,close`` header row, followed by one row per bar with
an ISO-8601 date and a closing price:

>>> records = CSV('date,close\\n2017-11-01,2572.625\\n2018-10-31,2706.125\\n')
>>> len(records), records[0].close
(2, 2572.625)
>>> print(records[1].date)
2018-10-31

Dates must be strictly increasing, and prices finite and positive. Errors
name the offending line:

>>> CSV('date,close\\n2017-11-01,1\\n2017-11-01,2\\n')
Traceback (most recent call last):
  ...
nolag.input.ParseError: duplicate date 2017-11-01 (<string>, line 3)
"""

from collections import namedtuple
import logging
import math
import re

import pandas

from nolag.compat import StringIO, isstring
from nolag.series import Series

__all__ = ['ParseError', 'PriceRecord', 'CSV', 'load_csv',
           'series_from_records']
__docformat__ = 'restructuredtext en'

log = logging.getLogger(__name__)

HEADER = ('date', 'close')
DATE_FORMAT = '%Y-%m-%d'

_LINE_RE = re.compile(r'line (\d+)')


class ParseError(Exception):
    """Exception raised when a price file is malformed or fails validation."""

    def __init__(self, message, filename=None, lineno=-1):
        """Create the exception.

        :param message: the error message
        :param filename: the path to the file that was parsed
        :param lineno: the number of the line on which the error was
                       encountered
        """
        if filename is None:
            filename = '<string>'
        self.msg = message #: the error message string
        if filename != '<string>' or lineno >= 0:
            if lineno >= 0:
                message = '%s (%s, line %d)' % (self.msg, filename, lineno)
            else:
                message = '%s, in %s' % (self.msg, filename)
        Exception.__init__(self, message)
        self.filename = filename #: the name of the parsed file
        self.lineno = lineno #: the number of the line containing the error


class PriceRecord(namedtuple('PriceRecord', ['date', 'close'])):
    """The closing price of one bar."""
    __slots__ = ()


def _missing(value):
    return not isstring(value) or not value.strip()


def _read_rows(source, filename):
    try:
        return pandas.read_csv(source, header=None, dtype=str,
                               keep_default_na=False, skip_blank_lines=False)
    except UnicodeDecodeError:
        raise ParseError('file is not valid UTF-8', filename)
    except pandas.errors.EmptyDataError:
        raise ParseError('no records', filename)
    except pandas.errors.ParserError as e:
        match = _LINE_RE.search(str(e))
        lineno = int(match.group(1)) if match else -1
        raise ParseError('malformed row', filename, lineno)


def _parse_date(text, filename, lineno):
    try:
        return pandas.to_datetime(text.strip(), format=DATE_FORMAT).date()
    except (ValueError, TypeError):
        raise ParseError('malformed date %r' % text, filename, lineno)


def _parse_close(text, filename, lineno):
    try:
        close = float(text)
    except ValueError:
        raise ParseError('malformed price %r' % text, filename, lineno)
    if not math.isfinite(close) or close <= 0:
        raise ParseError('price must be finite and positive, not %r' % text,
                         filename, lineno)
    return close


def load_csv(source, filename=None):
    """Read the price records of a CSV file.

    :param source: the path to the file, or a file-like object
    :param filename: the name of the file, used in error messages; defaults
                     to the path
    :return: a list of `PriceRecord` instances, in chronological order
    :raises ParseError: if the file is empty, malformed, or its dates are not
                        strictly increasing
    :raises EnvironmentError: if the file cannot be read
    """
    if filename is None:
        filename = source if isstring(source) else getattr(source, 'name',
                                                           None)
    rows = _read_rows(source, filename)
    header = tuple(str(name).strip().lower() for name in rows.iloc[0])
    if header != HEADER:
        raise ParseError('expected header %r, not %r' % (','.join(HEADER),
                                                        ','.join(header)),
                         filename, 1)

    records = []
    previous = None
    for i, (date, close) in enumerate(rows.iloc[1:].itertuples(index=False)):
        lineno = i + 2
        if _missing(date) and _missing(close):
            continue
        if _missing(date) or _missing(close):
            raise ParseError('malformed row', filename, lineno)
        record = PriceRecord(_parse_date(date, filename, lineno),
                             _parse_close(close, filename, lineno))
        if previous is not None:
            if record.date == previous.date:
                raise ParseError('duplicate date %s' % record.date, filename,
                                 lineno)
            if record.date < previous.date:
                raise ParseError('date %s is not after %s' %
                                 (record.date, previous.date), filename,
                                 lineno)
        records.append(record)
        previous = record

    if not records:
        raise ParseError('no records', filename)
    log.info('read %d records from %s', len(records), filename or '<string>')
    return records


def CSV(text):
    """Parse the given CSV text and return the price records.

    :param text: the CSV text
    :return: a list of `PriceRecord` instances
    :raises ParseError: if the text is not a valid price history
    """
    return load_csv(StringIO(text), '<string>')


def series_from_records(records):
    """Return the `Series` of the closing prices of the records, with one bar
    as time step.

    >>> print(series_from_records(CSV('date,close\\n2017-11-01,2.5\\n')))
    [2.5]
    """
    return Series([record.close for record in records])
