# coding: utf8
'''
    levmeas.tests.test_utils
    ------------------------

    Helpers: primality, rational formatting, report containers and the
    cached_property decorator.

    :copyright: Copyright 2026 levmeas contributors, see AUTHORS.
    :license: GNU GPL v3.

'''
import random
from fractions import Fraction

from ..exceptions import LevmeasError, ParsingError, UsageError
from ..utils import Dict, ListDict, cached_property, format_fraction, is_prime


def test_is_prime():
    '''Tests is_prime.'''
    assert [n for n in range(-2, 30) if is_prime(n)] == \
        [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_format_fraction():
    '''Tests a/b formatting.'''
    assert format_fraction(Fraction(3, 12)) == '1/4'
    assert format_fraction(Fraction(-6, 4)) == '-3/2'
    assert format_fraction(7) == '7'
    assert format_fraction(Fraction(0)) == '0'


def test_dict():
    '''Tests Dict.'''
    d = Dict()
    d["f"] = Fraction(2, 3)
    d["a"] = 111
    d["b"] = [Fraction(1, 2), 3]
    assert list(d) == ['f', 'a', 'b']
    assert d.to_json() == '{"f": "2/3", "a": 111, "b": ["1/2", 3]}'
    assert d.to_json(indent=1).startswith('{\n "f": "2/3"')


def test_list_dict():
    '''Tests ListDict.'''
    items = ListDict([Dict([("coeff", Fraction(1, 4)), ("exponent", [3])]),
                      Dict([("coeff", -1), ("exponent", [5])])])
    assert items.to_json() == '[{"coeff": "1/4", "exponent": [3]}, ' \
                              '{"coeff": -1, "exponent": [5]}]'
    assert ListDict().to_json() == '[]'


def test_error_messages():
    '''Errors print their message, or their docstring without one.'''
    assert '%s' % UsageError('arity 2 vs 3') == 'arity 2 vs 3'
    assert '%s' % LevmeasError() == 'Generic levmeas error.'
    assert '%s' % ParsingError('boom', 2, 7) == '2:7: boom'


class TestCachedProperty:
    ''' Tests cached_property decorator.'''

    @cached_property
    def random_bool(self):
        '''Returns random bool'''
        return bool(random.getrandbits(1))

    def test_cached_property(self):
        '''Tests cached_property decorator.'''
        value1 = self.random_bool
        value2 = self.random_bool
        assert value1 == value2
