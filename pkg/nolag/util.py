# -*- coding: utf-8 -*-
#
# Copyright (C) 2019 The nolag developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""Various utility functions for formatting and option parsing."""

import six

__docformat__ = 'restructuredtext en'

SIGNIFICANT_DIGITS = 12


def format_number(value, digits=SIGNIFICANT_DIGITS):
    """Return the text representation of a number using the given number of
    significant digits.
    
    >>> format_number(1.0 / 3)
    '0.333333333333'
    >>> format_number(6675.0)
    '6675'
    >>> format_number(-0.0)
    '0'
    
    :param value: the number to format
    :param digits: the number of significant digits
    :return: the formatted number
    """
    text = '%.*g' % (digits, value)
    if text in ('-0', '-0.0'):
        text = '0'
    return text


def format_money(value):
    """Return the text representation of an amount of money, rounded to
    cents.
    
    >>> format_money(6675)
    '6675.00'
    >>> format_money(-106.0)
    '-106.00'
    >>> format_money(-0.001)
    '0.00'
    """
    text = '%.2f' % value
    if text == '-0.00':
        text = '0.00'
    return text


def round_number(value, digits=SIGNIFICANT_DIGITS):
    """Round a number to the given number of significant digits, as it would
    be printed by `format_number`.
    
    >>> round_number(2.0 / 3)
    0.666666666667
    """
    return float(format_number(value, digits))


def asbool(value):
    """Convert an option value to a boolean.
    
    Strings are interpreted the way configuration files usually spell
    booleans:
    
    >>> asbool('yes'), asbool('On'), asbool('0'), asbool('false')
    (True, True, False, False)
    >>> asbool(1), asbool(None)
    (True, False)
    
    :raises ValueError: if a string cannot be interpreted as a boolean
    """
    if isinstance(value, six.string_types):
        lowered = value.strip().lower()
        if lowered in ('1', 'on', 'yes', 'true'):
            return True
        if lowered in ('0', 'off', 'no', 'false', ''):
            return False
        raise ValueError('not a boolean: %r' % value)
    return bool(value)
