# -*- coding: utf-8 -*-
#
# Copyright (C) 2019 The nolag developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

from contextlib import redirect_stderr, redirect_stdout
import io
import json
import os
import shutil
import tempfile
import unittest

from nolag.backtest import BacktestConfig
from nolag.cli import ConfigurationError, RunSpec, main, run
from nolag.indicators import VARIANTS
from nolag.tests.utils import data_path, doctest_suite

CONSTANT_CSV = 'date,close\n' + ''.join('2017-11-%02d,2600\n' % day
                                        for day in range(1, 31))


class RunSpecTestCase(unittest.TestCase):

    def test_defaults(self):
        spec = RunSpec.from_options({'nolag.input': 'spx.csv'})
        self.assertEqual(VARIANTS, spec.variants)
        self.assertEqual('report', spec.method)
        self.assertEqual(BacktestConfig(), spec.config)
        self.assertEqual(None, spec.output_path)

    def test_json_method(self):
        spec = RunSpec('spx.csv', json=True)
        self.assertEqual('json', spec.method)

    def test_case_insensitive(self):
        spec = RunSpec.from_options({'nolag.input': 'spx.csv',
                                     'nolag.variant': 'No_Lag',
                                     'nolag.mode': 'LEDGER'})
        self.assertEqual(('no_lag',), spec.variants)
        self.assertEqual('ledger', spec.method)

    def test_no_input(self):
        self.assertRaises(ConfigurationError, RunSpec.from_options, {})

    def test_unknown_variant(self):
        self.assertRaises(ConfigurationError, RunSpec, 'spx.csv', 'hull')

    def test_json_needs_report_mode(self):
        self.assertRaises(ConfigurationError, RunSpec, 'spx.csv',
                          mode='series', json=True)

    def test_invalid_numbers(self):
        self.assertRaises(ConfigurationError, RunSpec.from_options,
                          {'nolag.input': 'spx.csv', 'nolag.cost': 'cheap'})
        self.assertRaises(ConfigurationError, RunSpec.from_options,
                          {'nolag.input': 'spx.csv', 'nolag.cost': '-3'})
        self.assertRaises(ConfigurationError, RunSpec.from_options,
                          {'nolag.input': 'spx.csv', 'nolag.multiplier': 0})

    def test_invalid_boolean(self):
        self.assertRaises(ConfigurationError, RunSpec.from_options,
                          {'nolag.input': 'spx.csv',
                           'nolag.force_close': 'maybe'})


class RunTestCase(unittest.TestCase):

    def setUp(self):
        self.dirname = tempfile.mkdtemp(suffix='nolag_test')

    def tearDown(self):
        shutil.rmtree(self.dirname)

    def write(self, name, text):
        path = os.path.join(self.dirname, name)
        with open(path, 'w') as fileobj:
            fileobj.write(text)
        return path

    def run_spec(self, spec):
        out, err = io.StringIO(), io.StringIO()
        status = run(spec, out, err)
        return status, out.getvalue(), err.getvalue()

    def test_constant_prices(self):
        path = self.write('flat.csv', CONSTANT_CSV)
        status, out, err = self.run_spec(RunSpec(path, json=True))
        self.assertEqual(0, status)
        self.assertEqual('', err)
        data = json.loads(out)
        self.assertEqual(list(VARIANTS), sorted(data))
        for variant in VARIANTS:
            self.assertEqual(0, data[variant]['n_trades'])
            self.assertEqual(0.0, data[variant]['total_net_profit'])

    def test_report(self):
        status, out, err = self.run_spec(RunSpec(data_path('prices.csv')))
        self.assertEqual(0, status)
        self.assertTrue(out.startswith(' '))
        self.assertTrue('Ratio TP/TPI' in out)

    def test_ledger(self):
        spec = RunSpec(data_path('prices.csv'), 'nyquist', 'ledger')
        status, out, err = self.run_spec(spec)
        self.assertEqual(0, status)
        self.assertEqual(53 + 1, len(out.splitlines()))

    def test_output_file(self):
        output = os.path.join(self.dirname, 'series.csv')
        spec = RunSpec(data_path('prices.csv'), 'classic', 'series',
                       output_path=output)
        status, out, err = self.run_spec(spec)
        self.assertEqual(0, status)
        self.assertEqual('', out)
        with open(output) as fileobj:
            self.assertEqual(251, len(fileobj.read().splitlines()))

    def test_missing_file(self):
        path = os.path.join(self.dirname, 'missing.csv')
        status, out, err = self.run_spec(RunSpec(path))
        self.assertEqual(1, status)
        self.assertEqual('', out)
        self.assertTrue(err.startswith('nolag: error: '))
        self.assertTrue(path in err, err)

    def test_not_utf8(self):
        path = os.path.join(self.dirname, 'latin.csv')
        with open(path, 'wb') as fileobj:
            fileobj.write(b'date,close\n2017-11-01,1\n2017-11-02,\xff\xfe2\n')
        status, out, err = self.run_spec(RunSpec(path))
        self.assertEqual(1, status)
        self.assertEqual('', out)
        self.assertEqual('nolag: error: file is not valid UTF-8, in %s\n' % path,
                         err)

    def test_parse_error(self):
        path = self.write('bad.csv', 'date,close\n2017-11-02,1\n2017-11-01,2\n')
        status, out, err = self.run_spec(RunSpec(path))
        self.assertEqual(1, status)
        self.assertTrue('line 3' in err, err)


class MainTestCase(unittest.TestCase):

    def setUp(self):
        self.dirname = tempfile.mkdtemp(suffix='nolag_test')
        self.path = os.path.join(self.dirname, 'flat.csv')
        with open(self.path, 'w') as fileobj:
            fileobj.write(CONSTANT_CSV)

    def tearDown(self):
        shutil.rmtree(self.dirname)

    def main(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            status = main(list(argv))
        return status, out.getvalue(), err.getvalue()

    def test_json_single_variant(self):
        status, out, err = self.main('--input', self.path, '--variant',
                                     'classic', '--json', '--cost', '0')
        self.assertEqual(0, status)
        data = json.loads(out)
        self.assertEqual('classic', data['variant'])
        self.assertEqual(0, data['n_trades'])

    def test_json_with_ledger(self):
        status, out, err = self.main('--input', self.path, '--mode', 'ledger',
                                     '--json')
        self.assertEqual(1, status)
        self.assertTrue('report mode' in err, err)

    def test_negative_cost(self):
        status, out, err = self.main('--input', self.path, '--cost', '-1')
        self.assertEqual(1, status)
        self.assertTrue('cost per side' in err, err)

    def test_missing_input(self):
        status, out, err = self.main('--input',
                                     os.path.join(self.dirname, 'none.csv'))
        self.assertEqual(1, status)
        self.assertTrue('none.csv' in err, err)

    def test_no_force_close(self):
        status, out, err = self.main('--input', data_path('prices.csv'),
                                     '--variant', 'nyquist', '--json',
                                     '--no-force-close')
        self.assertEqual(0, status)
        self.assertTrue(json.loads(out)['n_trades'] >= 52)

    def test_bad_variant(self):
        err = io.StringIO()
        with redirect_stderr(err):
            self.assertRaises(SystemExit, main, ['--input', self.path,
                                                 '--variant', 'hull'])
        self.assertTrue('hull' in err.getvalue())


def suite():
    suite = unittest.TestSuite()
    suite.addTest(doctest_suite(RunSpec.__module__))
    suite.addTest(unittest.defaultTestLoader.loadTestsFromTestCase(RunSpecTestCase))
    suite.addTest(unittest.defaultTestLoader.loadTestsFromTestCase(RunTestCase))
    suite.addTest(unittest.defaultTestLoader.loadTestsFromTestCase(MainTestCase))
    return suite

if __name__ == '__main__':
    unittest.main(defaultTest='suite')
