# -*- coding: utf-8 -*-
#
# Copyright (C) 2019 The nolag developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

from collections import OrderedDict
import itertools
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st
import numpy
import pandas

from nolag.backtest import BacktestConfig, BacktestError, LONG, \
                           OpenPosition, REPORT_ROWS, SHORT, Trade, \
                           TradeLedger, compare, compute_report, run_backtest
from nolag.indicators import SignalSeries, VARIANTS, impulse
from nolag.input import load_csv, series_from_records
from nolag.series import Series
from nolag.tests import oracles
from nolag.tests.utils import data_path, doctest_suite

colors = st.text(alphabet='RGB', min_size=2, max_size=40)


def as_tuples(ledger):
    return [(t.direction, t.entry_index, t.exit_index, t.gross_pnl, t.net_pnl)
            for t in ledger]


def quarter_prices(rng, length):
    return numpy.round(rng.uniform(2500, 2700, length) * 4) / 4


class BacktestConfigTestCase(unittest.TestCase):

    def test_defaults(self):
        config = BacktestConfig()
        self.assertEqual(3.0, config.cost_per_side)
        self.assertEqual(50.0, config.contract_multiplier)
        self.assertEqual(True, config.close_before_end)
        self.assertEqual(6.0, config.round_trip_cost)

    def test_invalid(self):
        self.assertRaises(BacktestError, BacktestConfig, -0.5)
        self.assertRaises(BacktestError, BacktestConfig, 3.0, 0)
        self.assertRaises(BacktestError, BacktestConfig, 3.0, -50.0)
        self.assertRaises(BacktestError, BacktestConfig, float('nan'))
        self.assertRaises(BacktestError, BacktestConfig, '3')

    def test_immutable(self):
        config = BacktestConfig()
        self.assertRaises(AttributeError, setattr, config, 'cost_per_side',
                          0.0)

    def test_boolean_option(self):
        self.assertEqual(False, BacktestConfig(close_before_end='no')
                         .close_before_end)


class RunBacktestTestCase(unittest.TestCase):

    def test_all_blue(self):
        x = Series([100, 101, 99, 102, 98])
        ledger = run_backtest(x, 'BBBBB')
        self.assertEqual(0, len(ledger))
        self.assertEqual(None, ledger.open_position)

    def test_stop_and_reverse(self):
        x = Series([100, 101, 99, 98, 97, 96])
        ledger = run_backtest(x, SignalSeries('BGRBBB'))
        self.assertEqual(2, len(ledger))
        first, second = ledger
        self.assertEqual(Trade(LONG, 1, 2, 101.0, 99.0, -100.0, -106.0),
                         first)
        self.assertEqual(SHORT, second.direction)
        self.assertEqual(2, second.entry_index)
        self.assertEqual(4, second.exit_index)
        self.assertEqual(100.0, second.gross_pnl)

    def test_degenerate_config(self):
        x = Series([100, 101, 99, 99, 99])
        config = BacktestConfig(cost_per_side=0, contract_multiplier=1)
        ledger = run_backtest(x, 'BGRBB', config)
        self.assertEqual(-2.0, ledger[0].net_pnl)

    def test_signal_repeats_are_held(self):
        x = Series([10, 11, 12, 13, 14, 15])
        ledger = run_backtest(x, 'BGGGGG')
        self.assertEqual([(LONG, 1, 4, 150.0, 144.0)], as_tuples(ledger))

    def test_force_close_index(self):
        x = Series([10, 11, 12, 13, 14, 15])
        ledger = run_backtest(x, 'BBBBGG')
        self.assertEqual(0, len(ledger))
        ledger = run_backtest(x, 'BBBGRG')
        self.assertEqual([(LONG, 3, 4, 50.0, 44.0)], as_tuples(ledger))

    def test_without_force_close(self):
        x = Series([10, 11, 12, 13, 14, 15])
        config = BacktestConfig(close_before_end=False)
        ledger = run_backtest(x, 'BGBBRG', config)
        self.assertEqual([(LONG, 1, 4, 150.0, 144.0),
                          (SHORT, 4, 5, -50.0, -56.0)], as_tuples(ledger))
        self.assertEqual(OpenPosition(LONG, 5, 15.0), ledger.open_position)

    def test_open_position_excluded_from_report(self):
        x = Series([10, 11, 12, 13])
        config = BacktestConfig(close_before_end=False)
        ledger = run_backtest(x, 'BGBB', config)
        self.assertEqual(0, len(ledger))
        self.assertEqual(LONG, ledger.open_position.direction)
        self.assertEqual(0, compute_report(ledger, x).n_trades)

    def test_two_values(self):
        ledger = run_backtest(Series([1.0, 2.0]), 'BG')
        self.assertEqual(0, len(ledger))

    def test_too_short(self):
        self.assertRaises(BacktestError, run_backtest, Series([1.0]), 'B')

    def test_length_mismatch(self):
        self.assertRaises(BacktestError, run_backtest, Series([1, 2, 3]), 'BG')

    def test_unknown_color(self):
        self.assertRaises(BacktestError, run_backtest, Series([1, 2]), 'BX')

    def test_deterministic(self):
        rng = numpy.random.RandomState(4)
        x = Series(quarter_prices(rng, 50))
        signal = impulse(x)
        self.assertEqual(as_tuples(run_backtest(x, signal)),
                         as_tuples(run_backtest(x, signal)))

    def test_exhaustive_against_simulator(self):
        prices = quarter_prices(numpy.random.RandomState(2018), 10).tolist()
        x = Series(prices)
        for close_before_end in (True, False):
            config = BacktestConfig(3.0, 50.0, close_before_end)
            for signal in itertools.product('RGB', repeat=10):
                ledger = run_backtest(x, signal, config)
                trades, open_position = oracles.simulate(
                    prices, signal, 3.0, 50.0, close_before_end)
                self.assertEqual(trades, as_tuples(ledger))
                if open_position is None:
                    self.assertEqual(None, ledger.open_position)
                else:
                    self.assertEqual(open_position,
                                     ledger.open_position[:2])

    @settings(max_examples=100, deadline=None)
    @given(colors, st.booleans())
    def test_invariants(self, signal, close_before_end):
        rng = numpy.random.RandomState(len(signal))
        x = Series(quarter_prices(rng, len(signal)))
        config = BacktestConfig(close_before_end=close_before_end)
        ledger = run_backtest(x, signal, config)
        d = len(x) - 1
        previous_exit = 0
        for trade in ledger:
            self.assertTrue(trade.entry_index < trade.exit_index)
            self.assertTrue(trade.entry_index >= previous_exit)
            previous_exit = trade.exit_index
            if close_before_end:
                self.assertTrue(trade.exit_index <= d - 1)
        if close_before_end:
            self.assertEqual(None, ledger.open_position)
        report = compute_report(ledger, x)
        gross = sum(t.gross_pnl for t in ledger)
        self.assertAlmostEqual(gross - 6.0 * len(ledger),
                               report.total_net_profit, delta=1e-6)
        self.assertEqual(report.n_trades, report.n_wins + report.n_losses)
        self.assertEqual(report.n_trades, report.n_long + report.n_short)


class TradeLedgerTestCase(unittest.TestCase):

    def test_overlap(self):
        config = BacktestConfig()
        trades = [Trade(LONG, 0, 3, 1.0, 2.0, 50.0, 44.0),
                  Trade(SHORT, 2, 4, 2.0, 1.0, 50.0, 44.0)]
        self.assertRaises(BacktestError, TradeLedger, trades, config)

    def test_exit_before_entry(self):
        self.assertRaises(BacktestError, TradeLedger,
                          [Trade(LONG, 3, 3, 1.0, 1.0, 0.0, -6.0)],
                          BacktestConfig())

    def test_close(self):
        position = OpenPosition(LONG, 0, 2572.625)
        trade = Trade.close(position, 4, 2706.125, BacktestConfig())
        self.assertEqual(6675.0, trade.gross_pnl)
        self.assertEqual(6669.0, trade.net_pnl)
        self.assertRaises(BacktestError, Trade.close, position, 0, 1.0,
                          BacktestConfig())


class ReportTestCase(unittest.TestCase):

    def ledger(self, nets, config=None):
        trades = []
        for i, net in enumerate(nets):
            direction = LONG if i % 2 == 0 else SHORT
            trades.append(Trade(direction, i, i + 1, 0.0, 0.0, net, net))
        return TradeLedger(trades, config or BacktestConfig(0, 1))

    def test_constructed_ledger(self):
        report = compute_report(self.ledger([10, -4, -6, 2]),
                                Series([0, 1, 2, 3, 4]))
        self.assertEqual(4, report.n_trades)
        self.assertEqual(12.0, report.TP)
        self.assertEqual(-10.0, report.TL)
        self.assertEqual(2.0, report.total_net_profit)
        self.assertEqual(1.2, report.profit_factor)
        self.assertEqual(-10.0, report.greatest_loss_between_wins)
        self.assertEqual(50.0, report.pct_winning)
        self.assertEqual(6.0, report.AP)
        self.assertEqual(-5.0, report.AL)
        self.assertEqual(1.2, report.ratio_AP_AL)
        self.assertEqual(4.0, report.long_total_net)
        self.assertEqual(-2.0, report.short_total_net)
        self.assertEqual(4.0, report.tpi)
        self.assertEqual(3.0, report.ratio_TP_TPI)
        self.assertEqual((), report.undefined)

    def test_empty_ledger(self):
        report = compute_report(self.ledger([]), Series([1, 2]))
        self.assertEqual(0, report.n_trades)
        for name, label, kind in REPORT_ROWS:
            if name not in ('ratio_TP_TPI',):
                self.assertEqual(0, getattr(report, name))
        self.assertTrue('profit_factor' in report.undefined)
        self.assertTrue('pct_winning' in report.undefined)
        self.assertTrue('AL' in report.undefined)

    def test_zero_net_counts_as_loss(self):
        report = compute_report(self.ledger([0.0, 5.0]), Series([1, 2]))
        self.assertEqual(1, report.n_losses)
        self.assertEqual(1, report.n_wins)
        self.assertEqual(50.0, report.pct_winning)
        self.assertEqual(0.0, report.profit_factor)
        self.assertTrue('profit_factor' in report.undefined)

    def test_no_losses(self):
        report = compute_report(self.ledger([3.0, 5.0]), Series([1, 2]))
        self.assertEqual(0.0, report.greatest_loss_between_wins)
        self.assertEqual(0.0, report.AL)
        self.assertEqual(('AL', 'profit_factor', 'ratio_AP_AL'),
                         report.undefined)

    def test_loss_runs(self):
        report = compute_report(self.ledger([-1, -2, 5, -4, 1, -1, -1, -1]),
                                Series([1, 2]))
        self.assertEqual(-4.0, report.greatest_loss_between_wins)

    def test_tpi(self):
        x = Series([2572.625, 2600.0, 2706.125])
        report = compute_report(self.ledger([], BacktestConfig()), x)
        self.assertEqual(6675.0, report.tpi)

    def test_as_dict(self):
        report = compute_report(self.ledger([10, -4]), Series([1, 2]))
        data = report.as_dict()
        self.assertTrue(isinstance(data, OrderedDict))
        self.assertEqual([row[0] for row in REPORT_ROWS],
                         list(data)[:len(REPORT_ROWS)])
        self.assertEqual([], data['undefined'])
        self.assertEqual(1, data['n_wins'])

    def test_matches_spreadsheet(self):
        rng = numpy.random.RandomState(12)
        for i in range(50):
            prices = quarter_prices(rng, 60).tolist()
            signal = ''.join(rng.choice(list('RGB'), 60))
            x = Series(prices)
            ledger = run_backtest(x, signal)
            trades, open_position = oracles.simulate(prices, signal)
            expected = oracles.report(trades, prices[0], prices[-1])
            report = compute_report(ledger, x)
            for name, value in expected.items():
                self.assertAlmostEqual(value, getattr(report, name),
                                       delta=1e-6)


class CompareTestCase(unittest.TestCase):

    def test_order_and_content(self):
        x = Series(quarter_prices(numpy.random.RandomState(3), 80))
        results = compare(x)
        self.assertEqual(list(VARIANTS), list(results))
        for variant, (ledger, report) in results.items():
            expected = run_backtest(x, impulse(x, variant))
            self.assertEqual(as_tuples(expected), as_tuples(ledger))
            self.assertEqual(len(ledger), report.n_trades)

    def test_constant_prices(self):
        results = compare(Series.constant(2600.0, 60))
        for ledger, report in results.values():
            self.assertEqual(0, report.n_trades)


class GoldenTestCase(unittest.TestCase):

    def setUp(self):
        self.records = load_csv(data_path('prices.csv'))
        self.x = series_from_records(self.records)

    def test_prices(self):
        self.assertEqual(250, len(self.records))
        self.assertEqual('2017-11-01', self.records[0].date.isoformat())

    def test_impulse(self):
        for variant in VARIANTS:
            with open(data_path('impulse_%s.txt' % variant)) as fileobj:
                expected = fileobj.read().strip()
            self.assertEqual(expected, str(impulse(self.x, variant)))

    def test_ledgers(self):
        results = compare(self.x)
        for variant, (ledger, report) in results.items():
            expected = pandas.read_csv(data_path('ledger_%s.csv' % variant))
            self.assertEqual(len(expected), len(ledger))
            for row, trade in zip(expected.itertuples(index=False), ledger):
                self.assertEqual(row.direction, trade.direction)
                self.assertEqual(row.entry_index, trade.entry_index)
                self.assertEqual(row.exit_index, trade.exit_index)
                self.assertEqual(row.entry_price, trade.entry_price)
                self.assertEqual(row.exit_price, trade.exit_price)
                self.assertEqual(row.gross_pnl, trade.gross_pnl)
                self.assertEqual(row.net_pnl, trade.net_pnl)

    def test_reports(self):
        expected = pandas.read_csv(data_path('report.csv'), index_col='field')
        results = compare(self.x)
        for variant, (ledger, report) in results.items():
            for name, value in expected[variant].items():
                self.assertAlmostEqual(value, getattr(report, name),
                                       delta=1e-9, msg=name)


def suite():
    suite = unittest.TestSuite()
    suite.addTest(doctest_suite(Trade.__module__))
    suite.addTest(unittest.defaultTestLoader.loadTestsFromTestCase(BacktestConfigTestCase))
    suite.addTest(unittest.defaultTestLoader.loadTestsFromTestCase(RunBacktestTestCase))
    suite.addTest(unittest.defaultTestLoader.loadTestsFromTestCase(TradeLedgerTestCase))
    suite.addTest(unittest.defaultTestLoader.loadTestsFromTestCase(ReportTestCase))
    suite.addTest(unittest.defaultTestLoader.loadTestsFromTestCase(CompareTestCase))
    suite.addTest(unittest.defaultTestLoader.loadTestsFromTestCase(GoldenTestCase))
    return suite

if __name__ == '__main__':
    unittest.main(defaultTest='suite')
