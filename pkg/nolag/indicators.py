# -*- coding: utf-8 -*-
#
# Copyright (C) 2019 The nolag developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""MACD indicators and impulse systems, in their classical, no-lag and
Nyquist variants.

The MACD line is the difference between a fast and a slow moving average,
the signal line a smoothing of the MACD line, and the histogram the
difference of both:

>>> from nolag.series import Series
>>> triple = macd_classic(Series.constant(100.0, 30))
>>> print(triple.histogram[:3])
[0, 0, 0]

The impulse system colours every bar green when both the fast moving average
and the MACD histogram rise, red when both fall, and blue otherwise:

>>> x = Series([0, 3, 6, 3, 0])
>>> print(impulse(x, CLASSIC, periods=(2, 3, 2)))
BGGRR

The three variants differ only in the moving averages used: exponential
moving averages with 12, 26 and 9 periods for `CLASSIC`, their no-lag
versions for `NO_LAG`, and the Nyquist moving averages with periods (12, 3),
(26, 6) and (9, 3) for `NYQUIST`.
"""

import numpy

from nolag.series import LinComb, Series, SeriesError, evaluate
from nolag.smoothing import EMA, EmaParam, ParameterError
from nolag.lag import no_lag_ema, nyquist_ma

__all__ = ['SignalColor', 'R', 'G', 'B', 'Variant', 'CLASSIC', 'NO_LAG',
           'NYQUIST', 'VARIANTS', 'MacdTriple', 'SignalSeries', 'legs',
           'macd', 'macd_classic', 'macd_no_lag', 'macd_nyquist', 'macd_for',
           'fast_line', 'impulse', 'impulse_from_lines']
__docformat__ = 'restructuredtext en'

HISTOGRAM_TOLERANCE = 1e-12


class SignalColor(str):
    """The colour of a bar in an impulse system."""
    __slots__ = []
    _instances = {}

    def __new__(cls, val):
        return cls._instances.setdefault(val, str.__new__(cls, val))


R = SignalColor('R') #: red: fast line and histogram both fall
G = SignalColor('G') #: green: fast line and histogram both rise
B = SignalColor('B') #: blue: anything else

COLORS = (R, G, B)


class Variant(str):
    """The name of an indicator variant."""
    __slots__ = []
    _instances = {}

    def __new__(cls, val):
        return cls._instances.setdefault(val, str.__new__(cls, val))


CLASSIC = Variant('classic') #: exponential moving averages
NO_LAG = Variant('no_lag') #: exponential moving averages without lag
NYQUIST = Variant('nyquist') #: Nyquist moving averages

VARIANTS = (CLASSIC, NO_LAG, NYQUIST)

_DEFAULT_PERIODS = {
    CLASSIC: (12, 26, 9),
    NO_LAG: (12, 26, 9),
    NYQUIST: ((12, 3), (26, 6), (9, 3)),
}

_LEG_FACTORIES = {
    CLASSIC: lambda p: EMA(EmaParam.from_periods(p)),
    NO_LAG: no_lag_ema,
    NYQUIST: nyquist_ma,
}


def _check_variant(variant):
    if variant not in VARIANTS:
        raise ParameterError('unknown variant %r (expected one of %s)' %
                             (variant, ', '.join(VARIANTS)))
    return Variant(variant)


class MacdTriple(object):
    """The MACD line, its signal line, and the histogram (the difference of
    both).

    >>> triple = MacdTriple(Series([1.0, 2.0]), Series([0.5, 0.5]))
    >>> print(triple.histogram)
    [0.5, 1.5]
    >>> macd_line, signal, histogram = triple
    """
    __slots__ = ['macd', 'signal', 'histogram']

    def __init__(self, macd, signal, histogram=None):
        """Create the triple.

        :param macd: the MACD line
        :param signal: the signal line
        :param histogram: the histogram; computed from the two lines if
                          omitted, otherwise checked against them
        :raises SeriesError: if the series do not match
        """
        difference = macd - signal
        if histogram is None:
            histogram = difference
        elif len(histogram) != len(difference) or numpy.abs(
                (histogram - difference).values).max() > HISTOGRAM_TOLERANCE:
            raise SeriesError('histogram is not the difference of the MACD '
                              'and signal lines')
        self.macd = macd
        self.signal = signal
        self.histogram = histogram

    def __iter__(self):
        return iter((self.macd, self.signal, self.histogram))

    def __repr__(self):
        return '<%s of %d values>' % (type(self).__name__, len(self.macd))


class SignalSeries(object):
    """The sequence of colours produced by an impulse system.

    >>> signal = SignalSeries('BGGRB')
    >>> signal[1] is G, len(signal)
    (True, 5)
    >>> print(signal)
    BGGRB
    >>> SignalSeries('GB')
    Traceback (most recent call last):
      ...
    nolag.series.SeriesError: signal series must start with B, not 'G'
    """
    __slots__ = ['colors']

    def __init__(self, colors):
        """Create the signal series.

        :param colors: a non-empty sequence of colours (`SignalColor`
                       instances or the strings "R", "G" and "B"), starting
                       with `B`
        :raises SeriesError: if a colour is unknown or the first one is not
                             `B`
        """
        colors = tuple(_check_color(c) for c in colors)
        if not colors:
            raise SeriesError('signal series is empty')
        if colors[0] is not B:
            raise SeriesError('signal series must start with B, not %r' %
                              str(colors[0]))
        self.colors = colors

    def __len__(self):
        return len(self.colors)

    def __iter__(self):
        return iter(self.colors)

    def __getitem__(self, index):
        return self.colors[index]

    def __repr__(self):
        return '<%s %s>' % (type(self).__name__, self)

    def __str__(self):
        return ''.join(self.colors)

    def counts(self):
        """Return the number of bars of each colour.

        >>> sorted(SignalSeries('BGGRB').counts().items())
        [('B', 2), ('G', 2), ('R', 1)]
        """
        return dict((color, self.colors.count(color)) for color in COLORS)


def _check_color(color):
    if color not in COLORS:
        raise SeriesError('unknown signal colour %r' % (color,))
    return SignalColor(color)


def legs(variant, periods=None):
    """Return the fast, slow and signal moving averages of a MACD variant.

    >>> legs(CLASSIC)
    (<EMA p=12>, <EMA p=26>, <EMA p=9>)
    >>> legs(NYQUIST, ((4, 2), (8, 2), (4, 2)))[1]
    <LinComb [(8.0, <WeightedMA p=8>), (-7.0, <Compose <WeightedMA p=2> <WeightedMA p=8>>)]>

    :param variant: one of `CLASSIC`, `NO_LAG` or `NYQUIST`
    :param periods: the ``(fast, slow, signal)`` periods; numbers of periods
                    for the exponential variants, ``(p1, p2)`` tuples for the
                    Nyquist variant; defaults to the standard periods
    :return: a tuple of three operator expressions
    """
    variant = _check_variant(variant)
    if periods is None:
        periods = _DEFAULT_PERIODS[variant]
    factory = _LEG_FACTORIES[variant]
    return tuple(factory(p) for p in periods)


def macd(x, fast, slow, signal):
    """Compute the MACD triple of a series for the given moving averages.

    :param x: the input `Series`
    :param fast: the fast moving average operator
    :param slow: the slow moving average operator
    :param signal: the moving average operator applied to the MACD line
    :return: a `MacdTriple`
    """
    if not isinstance(x, Series):
        x = Series(x)
    line = evaluate(LinComb([(1.0, fast), (-1.0, slow)]), x)
    return MacdTriple(line, evaluate(signal, line))


def macd_classic(x, fast=12, slow=26, signal=9):
    """Compute the classical MACD, based on exponential moving averages."""
    return macd(x, *legs(CLASSIC, (fast, slow, signal)))


def macd_no_lag(x, fast=12, slow=26, signal=9):
    """Compute the MACD without lag, based on exponential moving averages
    without lag.
    """
    return macd(x, *legs(NO_LAG, (fast, slow, signal)))


def macd_nyquist(x, fast=(12, 3), slow=(26, 6), signal=(9, 3)):
    """Compute the Nyquist MACD, based on Nyquist moving averages."""
    return macd(x, *legs(NYQUIST, (fast, slow, signal)))


def macd_for(x, variant, periods=None):
    """Compute the MACD triple of the given variant.

    :see: `legs`
    """
    return macd(x, *legs(variant, periods))


def fast_line(x, variant, periods=None):
    """Return the fast moving average of the given variant applied to `x`,
    which is the trend line of the impulse system.
    """
    return evaluate(legs(variant, periods)[0], x)


def impulse_from_lines(fast_line, histogram):
    """Compute the colours of an impulse system from its fast line and its
    MACD histogram.

    The first bar is always blue. Ties count as neither rising nor falling:

    >>> print(impulse_from_lines([1, 2, 2, 1], [0, 1, 2, 1]))
    BGBR

    :param fast_line: the fast moving average values
    :param histogram: the MACD histogram values, of the same length
    :return: a `SignalSeries`
    """
    line = list(fast_line)
    hist = list(histogram)
    if len(line) != len(hist):
        raise SeriesError('fast line and histogram lengths differ (%d != %d)'
                          % (len(line), len(hist)))
    if not line:
        raise SeriesError('impulse system of an empty series')
    colors = [B]
    for n in range(1, len(line)):
        if line[n] > line[n - 1] and hist[n] > hist[n - 1]:
            colors.append(G)
        elif line[n] < line[n - 1] and hist[n] < hist[n - 1]:
            colors.append(R)
        else:
            colors.append(B)
    return SignalSeries(colors)


def impulse(x, variant=CLASSIC, periods=None):
    """Compute the impulse system of the given variant.

    :param x: the price `Series`
    :param variant: one of `CLASSIC`, `NO_LAG` or `NYQUIST`
    :param periods: the ``(fast, slow, signal)`` periods, see `legs`
    :return: a `SignalSeries` of the same length as `x`
    """
    if not isinstance(x, Series):
        x = Series(x)
    fast, slow, signal = legs(variant, periods)
    triple = macd(x, fast, slow, signal)
    return impulse_from_lines(evaluate(fast, x), triple.histogram)
