# -*- coding: utf-8 -*-
#
# Copyright (C) 2019 The nolag developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""The base smoothers: weighted moving averages and exponential moving
averages.

A weighted moving average is defined by a vector of strictly positive weights
summing to one, the first weight applying to the oldest sample of the window:

>>> from nolag.series import Series
>>> print(weighted_ma(Weights([1/3., 1/3., 1/3.]), Series([3, 6, 9])))
[3, 4.5, 6]

On the first ``p - 1`` indices the window is incomplete; the average is then
taken over the available samples, with the corresponding weights
renormalized. The exponential moving average starts from the first sample
and follows its recursion:

>>> print(ema(EmaParam(0.5), Series([2, 4])))
[2, 3]
"""

import math

import numpy

from nolag.compat import isinteger, isnumber
from nolag.series import BaseSmoother, Series, evaluate
from nolag.util import format_number

__all__ = ['ParameterError', 'Weights', 'EmaParam', 'WeightedMA', 'EMA',
           'classical_weights', 'simple_weighted_weights', 'weighted_ma',
           'ema', 'ema_closed_form', 'moving_average']
__docformat__ = 'restructuredtext en'

WEIGHTS_TOLERANCE = 1e-12


class ParameterError(ValueError):
    """Exception raised when the parameters of a smoother (weights, smoothing
    factor, number of periods) are invalid.
    """


def _normalized(values):
    # divide by a power of two close to the largest magnitude, which is exact
    # and bounds the intermediate values by 4
    top = float(numpy.max(numpy.abs(values))) if len(values) else 0.0
    if top == 0.0:
        return numpy.array(values, dtype=float), 1.0
    scale = math.ldexp(1.0, math.frexp(top)[1] - 1)
    return values / scale, scale


def _check_periods(p):
    if not isinteger(p) or p < 1:
        raise ParameterError('number of periods must be a positive integer, '
                             'not %r' % (p,))
    return int(p)


class Weights(object):
    """Weights of a weighted moving average: strictly positive numbers summing
    to one.

    >>> w = Weights([0.25, 0.75])
    >>> len(w), w[1]
    (2, 0.75)

    A sum that differs from one by no more than rounding errors is accepted,
    and the weights are renormalized:

    >>> abs(Weights([0.5, 0.5 + 1e-13]).total() - 1.0) < 1e-15
    True
    >>> Weights([0.5, 0.6])
    Traceback (most recent call last):
      ...
    nolag.smoothing.ParameterError: weights sum to 1.1, not 1
    """
    __slots__ = ['w']

    def __init__(self, w):
        """Create the weights.

        :param w: a sequence of ``p >= 1`` strictly positive numbers whose sum
                  is one
        :raises ParameterError: if the weights are not valid
        """
        w = list(w)
        if not w:
            raise ParameterError('weights must not be empty')
        for value in w:
            if not isnumber(value) or not math.isfinite(value) or value <= 0:
                raise ParameterError('weights must be strictly positive, not '
                                     '%r' % (value,))
        total = sum(float(value) for value in w)
        if abs(total - 1.0) > WEIGHTS_TOLERANCE:
            raise ParameterError('weights sum to %s, not 1' %
                                 format_number(total))
        w = numpy.array(w, dtype=float) / total
        w.flags.writeable = False
        self.w = w

    def __len__(self):
        return len(self.w)

    def __iter__(self):
        return iter(self.w.tolist())

    def __getitem__(self, index):
        return float(self.w[index])

    def __repr__(self):
        return '<%s %s>' % (type(self).__name__,
                            ', '.join(format_number(v) for v in self.w))

    @property
    def p(self):
        """The number of periods."""
        return len(self.w)

    def total(self):
        """Return the sum of the weights, one up to rounding."""
        return sum(self)


def classical_weights(p):
    """Return the weights of the classical moving average with `p` periods.

    >>> list(classical_weights(4))
    [0.25, 0.25, 0.25, 0.25]
    """
    p = _check_periods(p)
    return Weights([1.0 / p] * p)


def simple_weighted_weights(p):
    """Return the weights of the simple weighted moving average with `p`
    periods, which grow linearly towards the newest sample.

    >>> [format_number(v) for v in simple_weighted_weights(3)]
    ['0.166666666667', '0.333333333333', '0.5']
    """
    p = _check_periods(p)
    return Weights([2.0 * (j + 1) / (p * (p + 1)) for j in range(p)])


class EmaParam(object):
    """Smoothing factor of an exponential moving average.

    >>> EmaParam.from_periods(12)
    <EmaParam alpha=0.153846153846 p=12>
    >>> EmaParam(1.0)
    Traceback (most recent call last):
      ...
    nolag.smoothing.ParameterError: smoothing factor must lie in (0, 1), not 1.0
    """
    __slots__ = ['alpha', 'periods']

    def __init__(self, alpha, periods=None):
        """Create the parameter.

        :param alpha: the smoothing factor, in the open interval (0, 1)
        :param periods: the number of periods ``p``, if the factor was
                        derived from it; then ``alpha`` must be ``2 / (p + 1)``
        """
        if not isnumber(alpha) or not 0 < alpha < 1:
            raise ParameterError('smoothing factor must lie in (0, 1), not %r'
                                 % (alpha,))
        if periods is not None:
            periods = _check_periods(periods)
            if alpha != 2.0 / (periods + 1):
                raise ParameterError('smoothing factor %r does not match %d '
                                     'periods' % (alpha, periods))
        self.alpha = float(alpha)
        self.periods = periods

    @classmethod
    def from_periods(cls, p):
        """Return the parameter ``alpha = 2 / (p + 1)`` of an exponential
        moving average with `p` periods; `p` must be at least 2.

        >>> EmaParam.from_periods(1)
        Traceback (most recent call last):
          ...
        nolag.smoothing.ParameterError: exponential moving average needs at least 2 periods, not 1
        """
        p = _check_periods(p)
        if p < 2:
            raise ParameterError('exponential moving average needs at least '
                                 '2 periods, not %d' % p)
        return cls(2.0 / (p + 1), p)

    def __repr__(self):
        if self.periods is None:
            return '<EmaParam alpha=%s>' % format_number(self.alpha)
        return '<EmaParam alpha=%s p=%d>' % (format_number(self.alpha),
                                             self.periods)


class WeightedMA(BaseSmoother):
    """Weighted moving average operator."""
    __slots__ = ['weights']

    def __init__(self, weights):
        """Create the operator.

        :param weights: a `Weights` instance, or a sequence of numbers that is
                        accepted by the `Weights` constructor
        """
        if not isinstance(weights, Weights):
            weights = Weights(weights)
        self.weights = weights

    def __repr__(self):
        return '<WeightedMA p=%d>' % self.weights.p

    def apply(self, values):
        # x_n plus the weighted deviations of the window from x_n: the same
        # as the weighted sum, but constants are reproduced exactly
        w = self.weights.w
        values, scale = _normalized(values)
        p, n = len(w), len(values)
        deviation = numpy.zeros(n)
        den = numpy.zeros(n)
        for j in range(p):
            shift = p - 1 - j
            if shift >= n:
                continue
            deviation[shift:] += w[j] * (values[:n - shift] - values[shift:])
            den[shift:] += w[j]
        warm = min(p - 1, n)
        deviation[:warm] /= den[:warm]
        return (values + deviation) * scale

    def kernel(self):
        return tuple(self.weights)


class EMA(BaseSmoother):
    """Exponential moving average operator."""
    __slots__ = ['param']

    def __init__(self, param):
        """Create the operator.

        :param param: an `EmaParam`, or a smoothing factor
        """
        if not isinstance(param, EmaParam):
            param = EmaParam(param)
        self.param = param

    def __repr__(self):
        if self.param.periods is not None:
            return '<EMA p=%d>' % self.param.periods
        return '<EMA alpha=%s>' % format_number(self.param.alpha)

    def apply(self, values):
        # alpha x_n + (1 - alpha) y_(n-1), written so that y_n = y_(n-1)
        # whenever x_n = y_(n-1)
        alpha = self.param.alpha
        values, scale = _normalized(values)
        result = values.tolist()
        previous = result[0]
        for n in range(1, len(result)):
            previous += alpha * (result[n] - previous)
            result[n] = previous
        return numpy.array(result) * scale


def weighted_ma(w, x):
    """Apply the weighted moving average with weights `w` to the series `x`.

    >>> print(weighted_ma(Weights([1.0]), Series([5, -1, 2])))
    [5, -1, 2]

    :param w: the `Weights` (or a sequence accepted by its constructor)
    :param x: the input `Series`
    :return: the smoothed `Series`
    :raises ParameterError: if the weights are not valid
    """
    return evaluate(WeightedMA(w), x)


def ema(param, x):
    """Apply the exponential moving average to the series `x`, using the
    recursion ``y_0 = x_0``, ``y_n = alpha x_n + (1 - alpha) y_(n-1)``.

    :param param: the `EmaParam` (or a smoothing factor)
    :param x: the input `Series`
    :return: the smoothed `Series`
    """
    return evaluate(EMA(param), x)


def ema_closed_form(param, x):
    """Compute the exponential moving average with the explicit formula

        y_n = (1 - alpha)^n x_0 + alpha sum_(j=1..n) (1 - alpha)^(n-j) x_j

    It produces the same values as `ema` up to rounding, and serves as an
    independent check of the recursion.

    >>> print(ema_closed_form(EmaParam(0.5), Series([2, 4])))
    [2, 3]
    """
    if not isinstance(param, EmaParam):
        param = EmaParam(param)
    if not isinstance(x, Series):
        x = Series(x)
    alpha = param.alpha
    values = x.values
    decay = (1.0 - alpha) ** numpy.arange(len(values))
    result = numpy.empty(len(values))
    for n in range(len(values)):
        tail = numpy.dot(decay[:n][::-1], values[1:n + 1]) if n else 0.0
        result[n] = decay[n] * values[0] + alpha * tail
    return Series(result, x.tau)


_KINDS = {
    'classical': lambda p: WeightedMA(classical_weights(p)),
    'weighted': lambda p: WeightedMA(simple_weighted_weights(p)),
    'ema': lambda p: EMA(EmaParam.from_periods(p)),
}


def moving_average(kind, p):
    """Return the moving average operator of the given kind with `p` periods.

    >>> moving_average('weighted', 4)
    <WeightedMA p=4>
    >>> moving_average('ema', 26)
    <EMA p=26>

    :param kind: one of "classical", "weighted" (simple weighted) or "ema"
    :param p: the number of periods
    :raises ParameterError: if the kind is unknown or `p` is invalid
    """
    try:
        factory = _KINDS[kind]
    except KeyError:
        raise ParameterError('unknown moving average kind %r' % (kind,))
    return factory(p)
