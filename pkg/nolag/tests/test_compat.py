# -*- coding: utf-8 -*-
#
# Copyright (C) 2019 The nolag developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

import unittest

import numpy

from nolag import compat
from nolag.compat import isinteger, isnumber, isstring
from nolag.tests.utils import doctest_suite


class TypeCheckTestCase(unittest.TestCase):

    def test_numpy_scalars(self):
        self.assertTrue(isnumber(numpy.float64(1.5)))
        self.assertTrue(isnumber(numpy.float32(1.5)))
        self.assertTrue(isinteger(numpy.int32(3)))
        self.assertFalse(isinteger(numpy.float64(3)))

    def test_booleans_are_not_numbers(self):
        self.assertFalse(isnumber(True))
        self.assertFalse(isnumber(numpy.bool_(True)))
        self.assertFalse(isinteger(False))

    def test_isstring(self):
        self.assertTrue(isstring('classic'))
        self.assertFalse(isstring(b'classic'))
        self.assertFalse(isstring(None))


def suite():
    suite = unittest.TestSuite()
    suite.addTest(doctest_suite(compat))
    suite.addTest(unittest.defaultTestLoader.loadTestsFromTestCase(TypeCheckTestCase))
    return suite

if __name__ == '__main__':
    unittest.main(defaultTest='suite')
