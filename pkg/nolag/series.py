# -*- coding: utf-8 -*-
#
# Copyright (C) 2019 The nolag developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""Core classes for sequences of measures and the linear operators acting on
them.

A price history is represented by a `Series`: a finite prefix of a bounded
real sequence, together with the time step ``tau`` between two consecutive
values:

>>> x = Series([0, 2, 4, 6])
>>> len(x), x.tau
(4, 1.0)

Indicators are built from operator expressions. The base smoothers (the
weighted and exponential moving averages of `nolag.smoothing`) can be
combined by composition, linear combination and polynomial application,
which produces a new expression that can again be applied to a series:

>>> from nolag.smoothing import WeightedMA, classical_weights
>>> M = WeightedMA(classical_weights(2))
>>> op = 2 * M - M * M
>>> op
<LinComb [(2.0, <WeightedMA p=2>), (-1.0, <Compose <WeightedMA p=2> <WeightedMA p=2>>)]>

Applying an expression to a series returns a series of the same length. The
pipe notation can be used as well:

>>> print(op(x))
[0, 1.5, 4, 6]
>>> print(x | M)
[0, 1, 3, 5]

Every stage of an expression applies its own warm-up rule on the first
indices, so the output is defined for every index of the input.
"""

from functools import reduce
import itertools
import math
import operator

import numpy

from nolag.compat import isinteger, isnumber
from nolag.util import format_number

__all__ = ['Series', 'SeriesError', 'OperatorExpr', 'BaseSmoother',
           'Identity', 'IDENTITY', 'Compose', 'LinComb', 'Poly', 'evaluate',
           'sup_norm', 'kernel', 'warmup', 'power_closed_form']
__docformat__ = 'restructuredtext en'


class SeriesError(ValueError):
    """Exception raised when a series, or an operator expression applied to
    a series, is invalid.
    """


def _check_tau(tau):
    if not isnumber(tau) or not math.isfinite(tau) or tau <= 0:
        raise SeriesError('time step must be a positive number, not %r' %
                          (tau,))
    return float(tau)


class Series(object):
    """Finite prefix of a bounded real sequence.

    Series are immutable: the underlying array is read-only, and all
    operations return new series.

    >>> x = Series([1, -3, 2], tau=0.5)
    >>> x[1], x.tau
    (-3.0, 0.5)
    >>> print(2 * x + 1)
    [3, -5, 5]

    Empty series and non-finite values are rejected:

    >>> Series([])
    Traceback (most recent call last):
      ...
    nolag.series.SeriesError: series is empty
    >>> Series([1.0, float('nan')])
    Traceback (most recent call last):
      ...
    nolag.series.SeriesError: series values must be finite
    """
    __slots__ = ['values', 'tau']

    # let numpy defer binary operations to the methods below
    __array_ufunc__ = None

    def __init__(self, values, tau=1.0):
        """Create the series.

        :param values: a sequence of real numbers
        :param tau: the time difference between two consecutive values
        :raises SeriesError: if the series is empty, contains non-finite
                             values, or if `tau` is not positive
        """
        try:
            values = numpy.array(values, dtype=float)
        except (TypeError, ValueError):
            raise SeriesError('series values must be real numbers')
        if values.ndim != 1:
            raise SeriesError('series values must be one-dimensional')
        if not len(values):
            raise SeriesError('series is empty')
        if not numpy.all(numpy.isfinite(values)):
            raise SeriesError('series values must be finite')
        values.flags.writeable = False
        self.values = values #: read-only array of the values
        self.tau = _check_tau(tau) #: time between two consecutive values

    @classmethod
    def _wrap(cls, values, tau):
        # no validation: used for results of operators on valid series
        series = cls.__new__(cls)
        values.flags.writeable = False
        series.values = values
        series.tau = tau
        return series

    @classmethod
    def ramp(cls, length, tau=1.0, slope=1.0):
        """Return the linear trend ``x_n = slope * n * tau``.

        >>> print(Series.ramp(4, tau=2.0))
        [0, 2, 4, 6]
        """
        tau = _check_tau(tau)
        return cls(slope * tau * numpy.arange(length, dtype=float), tau)

    @classmethod
    def constant(cls, value, length, tau=1.0):
        """Return the constant series of the given length.

        >>> print(Series.constant(2.5, 3))
        [2.5, 2.5, 2.5]
        """
        return cls(numpy.full(length, float(value)), tau)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values.tolist())

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Series(self.values[index], self.tau)
        return float(self.values[index])

    def __repr__(self):
        return '<%s of %d values, tau=%s>' % (type(self).__name__, len(self),
                                              format_number(self.tau))

    def __str__(self):
        return '[%s]' % ', '.join(format_number(v) for v in self.values)

    def __or__(self, function):
        """Apply an operator (or any callable accepting a series) using the
        pipe notation, similar to pipes on Unix shells.

        >>> from nolag.smoothing import EMA, EmaParam
        >>> print(Series([2, 4]) | EMA(EmaParam(0.5)))
        [2, 3]
        """
        return function(self)

    def _operand(self, other):
        if isinstance(other, Series):
            if len(other) != len(self):
                raise SeriesError('series lengths differ (%d != %d)' %
                                  (len(self), len(other)))
            if other.tau != self.tau:
                raise SeriesError('series time steps differ (%s != %s)' %
                                  (self.tau, other.tau))
            return other.values
        if isnumber(other):
            return float(other)
        return NotImplemented

    def __add__(self, other):
        other = self._operand(other)
        if other is NotImplemented:
            return other
        return Series._wrap(self.values + other, self.tau)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._operand(other)
        if other is NotImplemented:
            return other
        return Series._wrap(self.values - other, self.tau)

    def __rsub__(self, other):
        other = self._operand(other)
        if other is NotImplemented:
            return other
        return Series._wrap(other - self.values, self.tau)

    def __mul__(self, other):
        if not isnumber(other):
            return NotImplemented
        return Series._wrap(float(other) * self.values, self.tau)

    __rmul__ = __mul__

    def __neg__(self):
        return Series._wrap(-self.values, self.tau)

    def tolist(self):
        """Return the values as a list of floats."""
        return self.values.tolist()


class OperatorExpr(object):
    """Base class for linear operators acting on series.

    Operator expressions form an algebra: ``a + b`` and ``c * a`` build
    linear combinations, ``a * b`` is the composition (``b`` is applied
    first), and ``a ** k`` is the k-th power of ``a``. Calling an expression
    with a series evaluates it.

    Subclasses implement `apply()`, which maps a read-only float array to a
    new array of the same length.
    """
    __slots__ = []

    __array_ufunc__ = None

    def __call__(self, series):
        return evaluate(self, series)

    def apply(self, values):
        """Apply the operator to a one-dimensional float array.

        :param values: the input values; must not be modified
        :return: a new array of the same length
        """
        raise NotImplementedError

    def kernel(self):
        """Return the weights of the operator in steady state, oldest sample
        first, or `None` if the operator does not have a finite window.
        """
        return None

    def __add__(self, other):
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return LinComb(_scaled_terms(self, 1.0) + _scaled_terms(other, 1.0))

    def __sub__(self, other):
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return LinComb(_scaled_terms(self, 1.0) + _scaled_terms(other, -1.0))

    def __neg__(self):
        return LinComb(_scaled_terms(self, -1.0))

    def __mul__(self, other):
        if isinstance(other, OperatorExpr):
            return Compose(self, other)
        if isnumber(other):
            return LinComb(_scaled_terms(self, other))
        return NotImplemented

    def __rmul__(self, other):
        if isnumber(other):
            return LinComb(_scaled_terms(self, other))
        return NotImplemented

    def __pow__(self, exponent):
        if not isinteger(exponent) or exponent < 0:
            raise SeriesError('operator powers must be non-negative '
                              'integers, not %r' % (exponent,))
        return Poly([0.0] * exponent + [1.0], self)


class BaseSmoother(OperatorExpr):
    """Base class for the elementary operators: the identity and the
    moving averages of `nolag.smoothing`.
    """
    __slots__ = []


class Identity(BaseSmoother):
    """The identity operator.

    >>> print(IDENTITY(Series([1, 2])))
    [1, 2]
    """
    __slots__ = []

    def __repr__(self):
        return '<Identity>'

    def apply(self, values):
        return numpy.array(values, dtype=float)

    def kernel(self):
        return (1.0,)


IDENTITY = Identity()


def _check_operator(op):
    if not isinstance(op, OperatorExpr):
        raise SeriesError('%r is not an operator expression' % (op,))
    return op


def _check_coefficient(value):
    if not isnumber(value) or not math.isfinite(value):
        raise SeriesError('coefficients must be finite numbers, not %r' %
                          (value,))
    return float(value)


def _scaled_terms(op, scale):
    # nested linear combinations are flattened
    if isinstance(op, LinComb):
        return [(scale * coeff, operand) for coeff, operand in op.terms]
    return [(scale, op)]


def _combine_kernels(pairs):
    # sum of coefficient * kernel, with the kernels aligned on the newest
    # sample
    size = max(len(k) for _, k in pairs)
    total = numpy.zeros(size)
    for coeff, k in pairs:
        total[size - len(k):] += coeff * numpy.asarray(k, dtype=float)
    return tuple(total.tolist())


class Compose(OperatorExpr):
    """Composition of two operators: ``inner`` is applied first, then
    ``outer``.
    """
    __slots__ = ['outer', 'inner']

    def __init__(self, outer, inner):
        self.outer = _check_operator(outer)
        self.inner = _check_operator(inner)

    def __repr__(self):
        return '<Compose %r %r>' % (self.outer, self.inner)

    def apply(self, values):
        return self.outer.apply(self.inner.apply(values))

    def kernel(self):
        outer, inner = self.outer.kernel(), self.inner.kernel()
        if outer is None or inner is None:
            return None
        return tuple(numpy.convolve(outer, inner).tolist())


class LinComb(OperatorExpr):
    """Linear combination of operators.

    >>> from nolag.smoothing import WeightedMA
    >>> op = LinComb([(1.5, WeightedMA([0.5, 0.5])), (-0.5, IDENTITY)])
    >>> op.kernel()
    (0.75, 0.25)
    """
    __slots__ = ['terms']

    def __init__(self, terms):
        """Create the linear combination.

        :param terms: a non-empty sequence of ``(coefficient, operand)``
                      tuples
        """
        terms = tuple((_check_coefficient(coeff), _check_operator(op))
                      for coeff, op in terms)
        if not terms:
            raise SeriesError('linear combination without terms')
        self.terms = terms

    def __repr__(self):
        return '<LinComb %r>' % (list(self.terms),)

    def apply(self, values):
        result = None
        for coeff, operand in self.terms:
            term = coeff * operand.apply(values)
            result = term if result is None else result + term
        return result

    def kernel(self):
        pairs = []
        for coeff, operand in self.terms:
            k = operand.kernel()
            if k is None:
                return None
            pairs.append((coeff, k))
        return _combine_kernels(pairs)


class Poly(OperatorExpr):
    """Polynomial ``a_0 + a_1 X + ... + a_d X^d`` applied to an operator,
    where ``X^0`` is the identity and ``X^k`` the k-fold composition.

    >>> from nolag.smoothing import WeightedMA
    >>> M = WeightedMA([0.5, 0.5])
    >>> print(Poly([0, 2, -1], M)(Series([0, 2, 4, 6])))
    [0, 1.5, 4, 6]
    >>> Poly([0, 2, -1], M).kernel()
    (-0.25, 0.5, 0.75)
    """
    __slots__ = ['coeffs', 'operand']

    def __init__(self, coeffs, operand):
        """Create the polynomial expression.

        :param coeffs: the coefficients ``a_0, ..., a_d``, lowest degree first
        :param operand: the operator the polynomial is applied to
        """
        coeffs = tuple(_check_coefficient(a) for a in coeffs)
        if not coeffs:
            raise SeriesError('polynomial without coefficients')
        self.coeffs = coeffs
        self.operand = _check_operator(operand)

    def __repr__(self):
        return '<Poly %r %r>' % (list(self.coeffs), self.operand)

    @property
    def degree(self):
        """The degree of the polynomial (-1 for the zero polynomial)."""
        nonzero = [k for k, a in enumerate(self.coeffs) if a]
        return nonzero[-1] if nonzero else -1

    def apply(self, values):
        result = None
        power = values
        for k, coeff in enumerate(self.coeffs[:self.degree + 1]):
            if k:
                power = self.operand.apply(power)
            if coeff:
                term = coeff * power
                result = term if result is None else result + term
        if result is None:
            return numpy.zeros(len(values))
        return result

    def kernel(self):
        base = self.operand.kernel()
        if base is None:
            return None
        pairs = []
        power = (1.0,)
        for k, coeff in enumerate(self.coeffs[:self.degree + 1]):
            if k:
                power = tuple(numpy.convolve(power, base).tolist())
            pairs.append((coeff, power))
        if not pairs:
            return (0.0,)
        return _combine_kernels(pairs)


def evaluate(op, x):
    """Evaluate an operator expression on a series.

    The result has the length and the time step of the input.

    >>> from nolag.smoothing import WeightedMA, classical_weights
    >>> M = WeightedMA(classical_weights(2))
    >>> print(evaluate(M, Series([0, 2, 4, 6])))
    [0, 1, 3, 5]

    :param op: the `OperatorExpr` to evaluate
    :param x: a `Series`, or a sequence of numbers
    :return: the resulting `Series`
    :raises SeriesError: if the series is empty or invalid
    """
    _check_operator(op)
    if not isinstance(x, Series):
        x = Series(x)
    return Series._wrap(op.apply(x.values), x.tau)


def sup_norm(x):
    """Return the supremum norm of a series, the largest absolute value.

    >>> sup_norm(Series([1, -3, 2]))
    3.0
    >>> sup_norm([-0.5, 0.25])
    0.5
    """
    if not isinstance(x, Series):
        x = Series(x)
    return float(numpy.max(numpy.abs(x.values)))


def kernel(op):
    """Return the steady-state weights of a finite-window operator
    expression, oldest sample first, or `None` if the expression contains an
    exponential moving average.

    >>> from nolag.smoothing import WeightedMA
    >>> M = WeightedMA([0.5, 0.5])
    >>> kernel(M * M)
    (0.25, 0.5, 0.25)
    """
    return _check_operator(op).kernel()


def warmup(op):
    """Return the number of leading indices on which the output of a
    finite-window expression still depends on warm-up values, or `None` for
    expressions without a finite window.

    >>> from nolag.smoothing import WeightedMA, classical_weights
    >>> warmup(WeightedMA(classical_weights(5)) ** 2)
    8
    """
    k = kernel(op)
    if k is None:
        return None
    return len(k) - 1


def power_closed_form(weights, k, x):
    """Compute the k-th power of a weighted moving average with the explicit
    multi-index sum

        y_n = sum over i_1..i_k of w_i1 ... w_ik x_(n - k(p-1) + i_1 + ... + i_k)

    which is valid for every ``n >= k(p - 1)``.

    >>> power_closed_form([0.5, 0.5], 2, Series([0, 2, 4, 6])).tolist()
    [2.0, 4.0]

    :param weights: the weights ``w_0, ..., w_(p-1)``
    :param k: the exponent
    :param x: the input series
    :return: an array holding ``y_n`` for ``n = k(p-1), ..., len(x) - 1``
    """
    w = [float(v) for v in weights]
    p = len(w)
    if not isinstance(x, Series):
        x = Series(x)
    values = x.values
    start = k * (p - 1)
    result = []
    for n in range(start, len(values)):
        total = 0.0
        for indices in itertools.product(range(p), repeat=k):
            coeff = reduce(operator.mul, (w[i] for i in indices), 1.0)
            total += coeff * values[n - start + sum(indices)]
        result.append(total)
    return numpy.array(result)
