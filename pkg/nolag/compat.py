# -*- coding: utf-8 -*-
#
# Copyright (C) 2019 The nolag developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""Various Python version and numeric type compatibility helpers."""

import numpy
import six

from six import StringIO

__all__ = ['integer_types', 'numeric_types', 'isinteger', 'isnumber',
           'isstring', 'StringIO']

# numpy scalars are not registered with the builtin number types on every
# platform, so they are listed explicitly

integer_types = six.integer_types + (numpy.integer,)

numeric_types = (float, numpy.floating) + integer_types


def isstring(obj):
    return isinstance(obj, six.string_types)


def isinteger(obj):
    """Return whether the object is an integer (booleans excluded).

    >>> isinteger(3), isinteger(numpy.int64(3)), isinteger(True), isinteger(3.0)
    (True, True, False, False)
    """
    return isinstance(obj, integer_types) and not isinstance(obj, bool)


def isnumber(obj):
    """Return whether the object is a real number (booleans excluded).

    >>> isnumber(2.5), isnumber(2), isnumber('2'), isnumber(None)
    (True, True, False, False)
    """
    return isinstance(obj, numeric_types) and not isinstance(obj, bool)
