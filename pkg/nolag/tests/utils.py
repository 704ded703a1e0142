# -*- coding: utf-8 -*-

import doctest
import os
import re

DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')

# numpy 2 prints scalars as np.float64(1.5); the doctests are written for
# plain numbers
class NumpyScalarChecker(doctest.OutputChecker):
    def check_output(self, want, got, optionflags):
        got = re.sub(r"np\.(?:float|int)\d+\((.*?)\)", r"\1", got)
        return doctest.OutputChecker.check_output(self, want, got, optionflags)

def doctest_suite(module, **kwargs):
    kwargs.setdefault('optionflags', doctest.NORMALIZE_WHITESPACE)
    return doctest.DocTestSuite(module, checker=NumpyScalarChecker(), **kwargs)

def data_path(name):
    return os.path.join(DATA_DIR, name)
