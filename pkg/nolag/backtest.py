# -*- coding: utf-8 -*-
#
# Copyright (C) 2019 The nolag developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""A very simple trading system driven by an impulse system, and the
statistics of its trades.

The system holds at most one contract. A green bar closes a short position
and opens a long one, a red bar closes a long position and opens a short
one, and a blue bar changes nothing. Every fill happens at the close of the
signal bar:

>>> from nolag.series import Series
>>> x = Series([100, 101, 99, 99, 99, 99])
>>> ledger = run_backtest(x, 'BGRBBB')
>>> for trade in ledger:
...     print(trade)
long 1-2 @ 101 -> 99: gross -100.00, net -106.00
short 2-4 @ 99 -> 99: gross 0.00, net -6.00

By default, the open position is closed one bar before the end of the
series, at index ``d - 1`` for a series of ``d + 1`` values. The statistics
of the trades are then gathered in a report:

>>> report = compute_report(ledger, x)
>>> report.n_trades, report.total_net_profit, report.TL
(2, -112.0, -112.0)
"""

from collections import OrderedDict, namedtuple
import logging
import math

from nolag.compat import isnumber
from nolag.indicators import COLORS, G, R, SignalSeries, VARIANTS, impulse
from nolag.series import Series
from nolag.util import asbool, format_money, format_number

__all__ = ['BacktestError', 'Direction', 'LONG', 'SHORT', 'BacktestConfig',
           'Trade', 'OpenPosition', 'TradeLedger', 'BacktestReport',
           'REPORT_ROWS', 'run_backtest', 'compute_report', 'compare']
__docformat__ = 'restructuredtext en'

log = logging.getLogger(__name__)

DEFAULT_COST_PER_SIDE = 3.0
DEFAULT_CONTRACT_MULTIPLIER = 50.0


class BacktestError(ValueError):
    """Exception raised when a backtest cannot be run on its inputs."""


class Direction(str):
    """The direction of a position."""
    __slots__ = []
    _instances = {}

    def __new__(cls, val):
        return cls._instances.setdefault(val, str.__new__(cls, val))


LONG = Direction('long') #: bought, profits from rising prices
SHORT = Direction('short') #: sold short, profits from falling prices

_SIGNS = {LONG: 1.0, SHORT: -1.0}


class BacktestConfig(namedtuple('BacktestConfig', ['cost_per_side',
                                                   'contract_multiplier',
                                                   'close_before_end'])):
    """The parameters of a backtest.

    >>> BacktestConfig()
    BacktestConfig(cost_per_side=3.0, contract_multiplier=50.0, close_before_end=True)
    >>> BacktestConfig(cost_per_side=-1)
    Traceback (most recent call last):
      ...
    nolag.backtest.BacktestError: cost per side must be a non-negative number, not -1
    """
    __slots__ = ()

    def __new__(cls, cost_per_side=DEFAULT_COST_PER_SIDE,
                contract_multiplier=DEFAULT_CONTRACT_MULTIPLIER,
                close_before_end=True):
        """Create the configuration.

        :param cost_per_side: the transaction cost of every entry and every
                              exit, in money
        :param contract_multiplier: the money value of one index point for
                                    one contract
        :param close_before_end: whether the open position is closed one bar
                                 before the end of the series
        :raises BacktestError: if a parameter is invalid
        """
        if not isnumber(cost_per_side) or not math.isfinite(cost_per_side) \
                or cost_per_side < 0:
            raise BacktestError('cost per side must be a non-negative '
                                'number, not %r' % (cost_per_side,))
        if not isnumber(contract_multiplier) \
                or not math.isfinite(contract_multiplier) \
                or contract_multiplier <= 0:
            raise BacktestError('contract multiplier must be a positive '
                                'number, not %r' % (contract_multiplier,))
        return super(BacktestConfig, cls).__new__(cls, float(cost_per_side),
                                                  float(contract_multiplier),
                                                  asbool(close_before_end))

    @property
    def round_trip_cost(self):
        """The cost of one entry and one exit."""
        return 2.0 * self.cost_per_side


class OpenPosition(namedtuple('OpenPosition', ['direction', 'entry_index',
                                               'entry_price'])):
    """A position that has been entered but not yet exited."""
    __slots__ = ()

    def __str__(self):
        return '%s %d- @ %s' % (self.direction, self.entry_index,
                                format_number(self.entry_price))


class Trade(namedtuple('Trade', ['direction', 'entry_index', 'exit_index',
                                 'entry_price', 'exit_price', 'gross_pnl',
                                 'net_pnl'])):
    """A round trip: the entry into a position and its exit."""
    __slots__ = ()

    @classmethod
    def close(cls, position, exit_index, exit_price, config):
        """Return the trade that exits the open `position` at the given index
        and price.

        >>> position = OpenPosition(SHORT, 3, 2600.0)
        >>> Trade.close(position, 5, 2590.5, BacktestConfig())
        Trade(direction='short', entry_index=3, exit_index=5, entry_price=2600.0, exit_price=2590.5, gross_pnl=475.0, net_pnl=469.0)
        """
        if exit_index <= position.entry_index:
            raise BacktestError('trade exits at index %d, not after its entry '
                                'at index %d' % (exit_index,
                                                 position.entry_index))
        move = exit_price - position.entry_price
        gross = _SIGNS[position.direction] * move * config.contract_multiplier
        net = gross - config.round_trip_cost
        return cls(position.direction, position.entry_index, exit_index,
                   position.entry_price, exit_price, gross, net)

    def __str__(self):
        return '%s %d-%d @ %s -> %s: gross %s, net %s' % (
            self.direction, self.entry_index, self.exit_index,
            format_number(self.entry_price), format_number(self.exit_price),
            format_money(self.gross_pnl), format_money(self.net_pnl)
        )

    @property
    def is_win(self):
        """Whether the trade made a strictly positive net profit."""
        return self.net_pnl > 0


class TradeLedger(object):
    """The ordered list of the trades of a backtest."""
    __slots__ = ['trades', 'config', 'open_position']

    def __init__(self, trades, config, open_position=None):
        """Create the ledger.

        :param trades: the `Trade` instances, in chronological order
        :param config: the `BacktestConfig` of the run
        :param open_position: the `OpenPosition` still held at the end of the
                              series, if it was not closed
        :raises BacktestError: if trades overlap in time
        """
        trades = tuple(trades)
        previous = None
        for trade in trades:
            if trade.entry_index >= trade.exit_index:
                raise BacktestError('trade exits at index %d, not after its '
                                    'entry at index %d' % (trade.exit_index,
                                                           trade.entry_index))
            if previous is not None and trade.entry_index < previous.exit_index:
                raise BacktestError('trade entered at index %d overlaps the '
                                    'trade exited at index %d' %
                                    (trade.entry_index, previous.exit_index))
            previous = trade
        if open_position is not None and previous is not None and \
                open_position.entry_index < previous.exit_index:
            raise BacktestError('open position overlaps the last trade')
        self.trades = trades
        self.config = config
        self.open_position = open_position

    def __len__(self):
        return len(self.trades)

    def __iter__(self):
        return iter(self.trades)

    def __getitem__(self, index):
        return self.trades[index]

    def __repr__(self):
        return '<%s of %d trades>' % (type(self).__name__, len(self.trades))

    def total_net(self):
        """Return the sum of the net profits of all trades."""
        return sum(trade.net_pnl for trade in self.trades)


def _signal_colors(signal):
    if isinstance(signal, SignalSeries):
        return signal.colors
    colors = tuple(signal)
    for color in colors:
        if color not in COLORS:
            raise BacktestError('unknown signal colour %r' % (color,))
    return colors


def run_backtest(x, signal, config=None):
    """Run the trading system on the prices `x` for the colours `signal`.

    :param x: the price `Series`, of length ``d + 1 >= 2``
    :param signal: the `SignalSeries` of the same length (any sequence of the
                   colours "R", "G" and "B" is accepted as well)
    :param config: the `BacktestConfig`, the default one if omitted
    :return: a `TradeLedger`
    :raises BacktestError: if the lengths differ or the series is too short
    """
    if config is None:
        config = BacktestConfig()
    if not isinstance(x, Series):
        x = Series(x)
    colors = _signal_colors(signal)
    if len(x) != len(colors):
        raise BacktestError('price series and signal lengths differ (%d != '
                            '%d)' % (len(x), len(colors)))
    if len(x) < 2:
        raise BacktestError('backtest needs at least 2 prices, not %d' %
                            len(x))

    prices = x.tolist()
    last = len(prices) - 1
    trades = []
    position = None

    def exit_at(n):
        trade = Trade.close(position, n, prices[n], config)
        log.debug('exit %s at %d: net %s', trade.direction, n,
                  format_money(trade.net_pnl))
        trades.append(trade)

    for n, color in enumerate(colors):
        if config.close_before_end and n == last - 1:
            if position is not None:
                exit_at(n)
                position = None
            break
        if color == G:
            if position is not None and position.direction == SHORT:
                exit_at(n)
                position = None
            if position is None:
                position = OpenPosition(LONG, n, prices[n])
                log.debug('enter long at %d @ %s', n,
                          format_number(prices[n]))
        elif color == R:
            if position is not None and position.direction == LONG:
                exit_at(n)
                position = None
            if position is None:
                position = OpenPosition(SHORT, n, prices[n])
                log.debug('enter short at %d @ %s', n,
                          format_number(prices[n]))

    ledger = TradeLedger(trades, config, position)
    log.info('backtest over %d bars: %d trades, net %s', len(prices),
             len(trades), format_money(ledger.total_net()))
    return ledger


# Rows of the report, in the order they are printed, with their labels and
# the way their values are formatted
REPORT_ROWS = (
    ('n_trades', 'Number of trades', 'count'),
    ('total_net_profit', 'Total net profit', 'money'),
    ('pct_winning', 'Percentage of winning trades', 'percent'),
    ('avg_net_per_trade', 'Average net profit per trade', 'money'),
    ('TP', 'Total net profit of winning trades (TP)', 'money'),
    ('AP', 'Average net profit per winning trade (AP)', 'money'),
    ('TL', 'Total net lost of losing trades (TL)', 'money'),
    ('AL', 'Average net lost per losing trade (AL)', 'money'),
    ('greatest_loss_between_wins', 'Greatest lost between two winning trades',
     'money'),
    ('long_total_net', 'Total net profit of long trades', 'money'),
    ('long_avg_net', 'Average net profit per long trade', 'money'),
    ('short_total_net', 'Total net profit of short trades', 'money'),
    ('short_avg_net', 'Average net profit per short trade', 'money'),
    ('profit_factor', 'Profit factor TP/|TL|', 'ratio'),
    ('ratio_AP_AL', 'Ratio AP/|AL|', 'ratio'),
    ('ratio_TP_TPI', 'Ratio TP/TPI', 'ratio'),
)


class BacktestReport(object):
    """The statistics of the trades of a backtest.

    Statistics whose denominator is empty (an average over no trades, a ratio
    to a zero total) are reported as zero, and their names are listed in
    `undefined`.
    """
    FIELDS = tuple(row[0] for row in REPORT_ROWS) + (
        'n_wins', 'n_losses', 'n_long', 'n_short', 'tpi'
    )
    __slots__ = FIELDS + ('undefined',)

    def __init__(self, undefined=(), **values):
        missing = set(self.FIELDS).difference(values)
        if missing:
            raise TypeError('missing report fields: %s' %
                            ', '.join(sorted(missing)))
        for name in self.FIELDS:
            setattr(self, name, values.pop(name))
        if values:
            raise TypeError('unknown report fields: %s' %
                            ', '.join(sorted(values)))
        self.undefined = tuple(undefined)

    def __repr__(self):
        return '<%s: %d trades, net %s>' % (type(self).__name__,
                                            self.n_trades,
                                            format_money(self.total_net_profit))

    def as_dict(self):
        """Return the statistics as an ordered mapping, suitable for JSON
        serialization.
        """
        data = OrderedDict((name, getattr(self, name)) for name in self.FIELDS)
        data['undefined'] = list(self.undefined)
        return data


def _greatest_loss_between_wins(trades):
    worst = 0.0
    run = 0.0
    for trade in trades:
        if trade.is_win:
            run = 0.0
        else:
            run += trade.net_pnl
            worst = min(worst, run)
    return worst


def compute_report(ledger, x):
    """Compute the statistics of the trades of a ledger.

    >>> from nolag.series import Series
    >>> config = BacktestConfig(cost_per_side=0, contract_multiplier=1)
    >>> ledger = TradeLedger([Trade(LONG, 0, 1, 0, 10, 10, 10),
    ...                       Trade(SHORT, 1, 2, 0, 4, -4, -4),
    ...                       Trade(LONG, 2, 3, 0, -6, -6, -6),
    ...                       Trade(SHORT, 3, 4, 2, 0, 2, 2)], config)
    >>> report = compute_report(ledger, Series([1, 2, 3, 4, 5]))
    >>> report.TP, report.TL, report.profit_factor
    (12.0, -10.0, 1.2)
    >>> report.greatest_loss_between_wins
    -10.0

    :param ledger: the `TradeLedger` of the run
    :param x: the price `Series` the backtest was run on, used for the
              buy-and-hold benchmark ``TPI = (x_d - x_0) * multiplier``
    :return: a `BacktestReport`
    """
    if not isinstance(x, Series):
        x = Series(x)
    trades = ledger.trades
    undefined = []

    def ratio(name, numerator, denominator):
        if denominator == 0:
            undefined.append(name)
            return 0.0
        return numerator / denominator

    wins = [t.net_pnl for t in trades if t.is_win]
    losses = [t.net_pnl for t in trades if not t.is_win]
    longs = [t.net_pnl for t in trades if t.direction == LONG]
    shorts = [t.net_pnl for t in trades if t.direction == SHORT]

    TP = float(sum(wins))
    TL = float(sum(losses))
    total = TP + TL
    AP = ratio('AP', TP, len(wins))
    AL = ratio('AL', TL, len(losses))
    long_total = float(sum(longs))
    short_total = float(sum(shorts))
    tpi = (x[-1] - x[0]) * ledger.config.contract_multiplier

    values = dict(
        n_trades=len(trades),
        total_net_profit=total,
        pct_winning=ratio('pct_winning', 100.0 * len(wins), len(trades)),
        avg_net_per_trade=ratio('avg_net_per_trade', total, len(trades)),
        TP=TP,
        AP=AP,
        TL=TL,
        AL=AL,
        greatest_loss_between_wins=_greatest_loss_between_wins(trades),
        long_total_net=long_total,
        long_avg_net=ratio('long_avg_net', long_total, len(longs)),
        short_total_net=short_total,
        short_avg_net=ratio('short_avg_net', short_total, len(shorts)),
        profit_factor=ratio('profit_factor', TP, abs(TL)),
        ratio_AP_AL=ratio('ratio_AP_AL', AP, abs(AL)),
        ratio_TP_TPI=ratio('ratio_TP_TPI', TP, tpi),
        n_wins=len(wins),
        n_losses=len(losses),
        n_long=len(longs),
        n_short=len(shorts),
        tpi=tpi,
    )
    return BacktestReport(undefined, **values)


def compare(x, variants=VARIANTS, config=None):
    """Run the trading system with the impulse system of every variant.

    :param x: the price `Series`
    :param variants: the variants to compare, in output order
    :param config: the `BacktestConfig`
    :return: an ordered mapping from variant to ``(ledger, report)`` pairs
    """
    if not isinstance(x, Series):
        x = Series(x)
    results = OrderedDict()
    for variant in variants:
        log.info('running the %s impulse system', variant)
        ledger = run_backtest(x, impulse(x, variant), config)
        results[variant] = (ledger, compute_report(ledger, x))
    return results
