# -*- coding: utf-8 -*-
#
# Copyright (C) 2019 The nolag developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""The lag of moving averages, and moving averages without lag.

The lag of an operator that computes, once its window is complete,

    y_n = w_0 x_(n-p+1) + ... + w_(p-1) x_n

is ``tau * sum_j w_j (p - 1 - j)``. On a linear trend ``x_n = n tau``, such an
operator (with weights summing to one) outputs the trend delayed by exactly
its lag:

>>> from nolag.series import Series
>>> from nolag.smoothing import WeightedMA, classical_weights
>>> M = WeightedMA(classical_weights(5))
>>> lag_of_weights(classical_weights(5))
LagValue(2)
>>> measure_ramp_lag(M)
LagValue(2)

Applying a polynomial ``P`` to such an operator multiplies the lag by
``P'(1)``; the polynomials ``2X - X^2`` and ``3X - 3X^2 + X^3`` therefore
cancel it:

>>> lag_of_poly(NO_LAG_QUADRATIC, lag_of_weights(classical_weights(5)))
LagValue(0)
>>> abs(measure_ramp_lag(no_lag_quadratic(M))) < 1e-9
True

The Nyquist moving average reaches the same result by combining two simple
weighted moving averages:

>>> N = nyquist_ma(NyquistParams(12, 3))
>>> abs(lag_of(N)) < 1e-12
True
"""

import math

from nolag.compat import isinteger, isnumber
from nolag.series import Compose, LinComb, Poly, Series, evaluate, kernel, \
                         warmup
from nolag.smoothing import EMA, EmaParam, ParameterError, WeightedMA, \
                            simple_weighted_weights
from nolag.util import format_number

__all__ = ['LagValue', 'NyquistParams', 'NO_LAG_QUADRATIC', 'NO_LAG_CUBIC',
           'lag_of_weights', 'lag_of_poly', 'lag_of', 'measure_ramp_lag',
           'poly_derivative_at_one', 'no_lag_coefficients',
           'no_lag_quadratic', 'no_lag_cubic', 'no_lag_ema', 'nyquist_ma']
__docformat__ = 'restructuredtext en'

DEFAULT_RAMP_LENGTH = 512


class LagValue(float):
    """A lag, expressed in units of time (multiples of the time step when
    ``tau`` is one).
    """
    __slots__ = []

    def __new__(cls, value):
        value = float(value)
        if not math.isfinite(value):
            raise ParameterError('lag must be finite, not %r' % value)
        return float.__new__(cls, value)

    def __repr__(self):
        return 'LagValue(%s)' % format_number(self)

    @property
    def value(self):
        return float(self)


def _check_tau(tau):
    if not isnumber(tau) or not math.isfinite(tau) or tau <= 0:
        raise ParameterError('time step must be a positive number, not %r' %
                             (tau,))
    return float(tau)


def lag_of_weights(w, tau=1.0):
    """Return the lag of an operator whose steady-state weights are `w`.

    The weights may be any real numbers, not only the weights of a moving
    average:

    >>> lag_of_weights([0, 0, 1], tau=5.0)
    LagValue(0)
    >>> lag_of_weights([-0.25, 0.5, 0.75])
    LagValue(0)

    :param w: the weights ``w_0, ..., w_(p-1)``, oldest sample first
    :param tau: the time between two samples
    :return: the `LagValue`
    :raises ParameterError: if `w` is empty or `tau` is not positive
    """
    w = [float(value) for value in w]
    if not w:
        raise ParameterError('weights must not be empty')
    tau = _check_tau(tau)
    p = len(w)
    return LagValue(tau * sum(w_j * (p - 1 - j) for j, w_j in enumerate(w)))


def poly_derivative_at_one(coeffs):
    """Return ``P'(1)`` for the polynomial with coefficients `coeffs`, lowest
    degree first.

    >>> poly_derivative_at_one([0, 3, -3, 1])
    0.0
    """
    return float(sum(k * a for k, a in enumerate(coeffs)))


def lag_of_poly(coeffs, base_lag):
    """Return the lag of ``P(M)`` given the lag of ``M``, where ``P`` has the
    coefficients `coeffs` and the weights of ``M`` sum to one.

    >>> lag_of_poly([0, 1], LagValue(1.5))
    LagValue(1.5)
    >>> lag_of_poly([0, 0, 1], LagValue(1.5))
    LagValue(3)
    """
    return LagValue(float(base_lag) * poly_derivative_at_one(coeffs))


def no_lag_coefficients(degree):
    """Return the coefficients of the polynomial that cancels the lag.

    For degree 2, the polynomial ``aX + bX^2`` with ``a + b = 1``; for degree
    3, the polynomial ``aX + bX^2 + X^3`` with ``a + b = 0``. In both cases the
    lag condition is ``P'(1) = 0``.

    >>> no_lag_coefficients(2)
    (0.0, 2.0, -1.0)
    >>> no_lag_coefficients(3)
    (0.0, 3.0, -3.0, 1.0)
    """
    if degree == 2:
        # a + b = 1 and a + 2b = 0
        total, derivative, cubic = 1.0, 0.0, ()
    elif degree == 3:
        # a + b = 0 and a + 2b + 3 = 0
        total, derivative, cubic = 0.0, -3.0, (1.0,)
    else:
        raise ParameterError('no lag cancellation polynomial of degree %r' %
                             (degree,))
    b = derivative - total
    a = total - b
    return (0.0, a, b) + cubic


NO_LAG_QUADRATIC = no_lag_coefficients(2)
NO_LAG_CUBIC = no_lag_coefficients(3)


def no_lag_quadratic(base):
    """Return the operator ``2 M - M^2`` for the operator `base`."""
    return Poly(NO_LAG_QUADRATIC, base)


def no_lag_cubic(base):
    """Return the operator ``3 M - 3 M^2 + M^3`` for the operator `base`."""
    return Poly(NO_LAG_CUBIC, base)


def no_lag_ema(param):
    """Return the exponential moving average without lag, ``2 E - E^2``.

    >>> no_lag_ema(12)
    <Poly [0.0, 2.0, -1.0] <EMA p=12>>

    :param param: an `EmaParam`, or the number of periods
    """
    if isinteger(param):
        param = EmaParam.from_periods(param)
    return no_lag_quadratic(EMA(param))


class NyquistParams(object):
    """Periods of a Nyquist moving average.

    >>> NyquistParams(12, 3).alpha
    5.5
    >>> NyquistParams(4, 3)
    Traceback (most recent call last):
      ...
    nolag.smoothing.ParameterError: periods 4 and 3 violate the stability criterion p1 >= 2 p2
    """
    __slots__ = ['p1', 'p2', 'alpha']

    def __init__(self, p1, p2):
        """Create the parameters.

        :param p1: the periods of the first simple weighted moving average
        :param p2: the periods of the second one; at least 2, and at most
                   half of `p1`
        :raises ParameterError: if the periods are invalid
        """
        for p in (p1, p2):
            if not isinteger(p) or p < 1:
                raise ParameterError('number of periods must be a positive '
                                     'integer, not %r' % (p,))
        if p2 < 2:
            raise ParameterError('second period must be at least 2, not %d' %
                                 p2)
        if p1 < 2 * p2:
            raise ParameterError('periods %d and %d violate the stability '
                                 'criterion p1 >= 2 p2' % (p1, p2))
        self.p1 = int(p1)
        self.p2 = int(p2)
        self.alpha = float(p1 - 1) / (p2 - 1)

    def __repr__(self):
        return '<NyquistParams p1=%d p2=%d>' % (self.p1, self.p2)


def nyquist_ma(params):
    """Return the Nyquist moving average
    ``(1 + alpha) M1 - alpha M2 o M1`` for the simple weighted moving averages
    ``M1`` and ``M2`` with `p1` and `p2` periods.

    >>> nyquist_ma((12, 3))
    <LinComb [(6.5, <WeightedMA p=12>), (-5.5, <Compose <WeightedMA p=3> <WeightedMA p=12>>)]>

    :param params: the `NyquistParams`, or a ``(p1, p2)`` tuple
    :raises ParameterError: if the periods are invalid
    """
    if not isinstance(params, NyquistParams):
        params = NyquistParams(*params)
    first = WeightedMA(simple_weighted_weights(params.p1))
    second = WeightedMA(simple_weighted_weights(params.p2))
    return LinComb([(1.0 + params.alpha, first),
                    (-params.alpha, Compose(second, first))])


def lag_of(op, tau=1.0):
    """Return the lag of a finite-window operator expression, computed from
    its steady-state weights.

    >>> from nolag.smoothing import moving_average
    >>> lag_of(moving_average('weighted', 4) ** 2, tau=2.0)
    LagValue(4)
    >>> lag_of(moving_average('ema', 12))
    Traceback (most recent call last):
      ...
    nolag.smoothing.ParameterError: lag is only defined for operators with a finite window

    :raises ParameterError: if the expression contains an exponential moving
                            average
    """
    weights = kernel(op)
    if weights is None:
        raise ParameterError('lag is only defined for operators with a '
                             'finite window')
    return lag_of_weights(weights, tau)


def measure_ramp_lag(op, length=None, tau=1.0):
    """Measure the lag of an operator on the linear trend ``x_n = n tau``:
    the difference between the trend and the output at the last index.

    For finite-window operators, the default length is the shortest one
    reaching steady state, where the measure is exact up to rounding. Other
    operators are evaluated on `DEFAULT_RAMP_LENGTH` samples, and the result
    is only an estimate:

    >>> abs(measure_ramp_lag(no_lag_ema(12))) < 1e-6
    True

    :param op: the operator expression
    :param length: the number of samples of the trend
    :param tau: the time step
    :return: the measured `LagValue`
    """
    if length is None:
        span = warmup(op)
        length = DEFAULT_RAMP_LENGTH if span is None else span + 1
    x = Series.ramp(length, _check_tau(tau))
    y = evaluate(op, x)
    return LagValue(x.values[-1] - y.values[-1])
