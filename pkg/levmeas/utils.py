# -*- coding: utf-8 -*-
'''
    levmeas.utils
    -------------

    :copyright: Copyright 2026 levmeas contributors, see AUTHORS.
    :license: GNU GPL v3.

'''
import json
from collections import OrderedDict
from fractions import Fraction

#: Largest candidate space an enumeration is allowed to walk.
MAX_CANDIDATES = 2 ** 20


class cached_property(object):
    """A decorator that converts a function into a lazy property.  The
    function wrapped is called the first time to retrieve the result
    and then that calculated result is used the next time you access
    the value::

        class Foo(object):

            @cached_property
            def foo(self):
                # calculate something important here
                return 42

    The class has to have a `__dict__` in order for this property to
    work.
    """

    def __init__(self, func, name=None, doc=None):
        self.__name__ = name or func.__name__
        self.__module__ = func.__module__
        self.__doc__ = doc or func.__doc__
        self.func = func

    def __get__(self, obj, type=None):
        if obj is None:
            return self
        if self.__name__ not in obj.__dict__:
            obj.__dict__[self.__name__] = self.func(obj)
        return obj.__dict__[self.__name__]


def is_prime(value):
    '''Check if `value` is a prime number.

    >>> [n for n in range(12) if is_prime(n)]
    [2, 3, 5, 7, 11]
    '''
    if value < 2:
        return False
    divisor = 2
    while divisor * divisor <= value:
        if value % divisor == 0:
            return False
        divisor += 1
    return True


def format_fraction(value):
    '''Format a rational as `a/b` with b > 0, or `a` when b = 1.

    >>> format_fraction(Fraction(-2, 4))
    '-1/2'
    >>> format_fraction(Fraction(6, 3))
    '2'
    '''
    value = Fraction(value)
    if value.denominator == 1:
        return '%d' % value.numerator
    return '%d/%d' % (value.numerator, value.denominator)


def _to_builtin(value):
    if isinstance(value, (Dict, dict)):
        return OrderedDict((key, _to_builtin(item))
                           for key, item in value.items())
    if isinstance(value, (list, tuple)):
        return [_to_builtin(item) for item in value]
    if isinstance(value, Fraction):
        return format_fraction(value)
    return value


class Dict(OrderedDict):
    '''A report dict serializable to JSON.'''

    def to_json(self, indent=None):
        '''Serialize the dict to JSON, rationals as `a/b` strings.'''
        return json.dumps(_to_builtin(self), indent=indent)


class ListDict(list):
    '''List of report dicts.'''

    def to_json(self, indent=None):
        '''Serialize list of dictionaries to JSON.'''
        return json.dumps(_to_builtin(self), indent=indent)
