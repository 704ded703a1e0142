# -*- coding: utf-8 -*-
#
# Copyright (C) 2019 The nolag developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""This package provides technical indicators built as bounded linear
operators on price series: weighted and exponential moving averages, their
versions without lag, the Nyquist moving average, the MACD and the impulse
system in each of these flavours, and a very simple trading system to compare
them.

The design is centered around operator expressions, which are combined with
the usual arithmetic operators and applied uniformly to any `Series`.
"""

__docformat__ = 'restructuredtext en'
__version__ = '0.1'

from nolag.series import *
from nolag.smoothing import ParameterError, Weights, EmaParam, WeightedMA, \
                            EMA, moving_average
from nolag.lag import NyquistParams, lag_of, no_lag_ema, nyquist_ma
from nolag.indicators import CLASSIC, NO_LAG, NYQUIST, impulse, macd_for
from nolag.backtest import BacktestConfig, run_backtest, compute_report, \
                           compare
from nolag.input import ParseError, load_csv
