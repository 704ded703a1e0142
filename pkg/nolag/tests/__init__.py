# -*- coding: utf-8 -*-
#
# Copyright (C) 2019 The nolag developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

import unittest

def suite():
    from nolag.tests import test_backtest, test_cli, test_compat, \
                            test_indicators, test_input, test_lag, \
                            test_output, test_series, test_smoothing, \
                            test_util

    suite = unittest.TestSuite()
    suite.addTest(test_series.suite())
    suite.addTest(test_smoothing.suite())
    suite.addTest(test_lag.suite())
    suite.addTest(test_indicators.suite())
    suite.addTest(test_backtest.suite())
    suite.addTest(test_input.suite())
    suite.addTest(test_output.suite())
    suite.addTest(test_cli.suite())
    suite.addTest(test_compat.suite())
    suite.addTest(test_util.suite())
    return suite

if __name__ == '__main__':
    unittest.main(defaultTest='suite')
