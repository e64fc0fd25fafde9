# -*- coding: utf-8 -*-
'''
    levmeas.measure
    ---------------

    Measure values: Laurent polynomials with rational coefficients in the
    positive infinitesimals Y2, ..., Yn.

    :copyright: Copyright 2026 levmeas contributors, see AUTHORS.
    :license: GNU GPL v3.

'''
from fractions import Fraction

from .exceptions import DivisionByZeroError, UsageError
from .expvec import ExpVec, Ordering
from .utils import Dict, ListDict, format_fraction


class MeasureValue(object):
    '''An element of the ordered ring Q[Y2^±1, ..., Yn^±1].

    The indeterminates are positive infinitesimals: the smallest exponent of
    the support (lexicographically from the right) carries the sign, hence
    `Y^2 < 3 Y` and `Y^-1 > 5`.

    :param terms: A mapping (or iterable of pairs) from exponent vectors to
        rational coefficients.
    :param elevation: Number of indeterminates; inferred from the terms when
        omitted.
    '''
    __slots__ = ('_terms', 'elevation')

    def __init__(self, terms=(), elevation=None):
        items = terms.items() if isinstance(terms, dict) else terms
        normalized = {}
        for exponent, coeff in items:
            exponent = ExpVec(exponent)
            if elevation is None:
                elevation = len(exponent)
            elif len(exponent) != elevation:
                raise UsageError(f"exponent {exponent} does not have "
                                 f"elevation {elevation}")
            coeff = normalized.get(exponent, 0) + Fraction(coeff)
            if coeff:
                normalized[exponent] = coeff
            else:
                normalized.pop(exponent, None)
        if elevation is None:
            raise UsageError('elevation of an empty measure value is unknown')
        self._terms = normalized
        self.elevation = elevation

    @classmethod
    def zero(cls, elevation):
        return cls((), elevation)

    @classmethod
    def constant(cls, value, elevation):
        return cls([(ExpVec.zero(elevation), value)], elevation)

    @classmethod
    def one(cls, elevation):
        return cls.constant(1, elevation)

    @classmethod
    def monomial(cls, coeff, exponent):
        '''`coeff * Y^exponent`.'''
        exponent = ExpVec(exponent)
        return cls([(exponent, coeff)], len(exponent))

    @property
    def terms(self):
        '''Pairs (exponent, coefficient) in ascending exponent order.'''
        return tuple(sorted(self._terms.items()))

    def coefficient(self, exponent):
        return self._terms.get(ExpVec(exponent), Fraction(0))

    def leading_exponent(self):
        '''The dominant (smallest) exponent; None for zero.'''
        if not self._terms:
            return None
        return min(self._terms)

    def sign(self):
        exponent = self.leading_exponent()
        if exponent is None:
            return 0
        return 1 if self._terms[exponent] > 0 else -1

    def is_positive(self):
        return self.sign() > 0

    def _coerce(self, other):
        if isinstance(other, MeasureValue):
            if other.elevation != self.elevation:
                raise UsageError(f"elevation mismatch: {self.elevation} != "
                                 f"{other.elevation}")
            return other
        if isinstance(other, (int, Fraction)):
            return MeasureValue.constant(other, self.elevation)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for exponent, coeff in other._terms.items():
            terms[exponent] = terms.get(exponent, 0) + coeff
        return MeasureValue(terms, self.elevation)

    __radd__ = __add__

    def __neg__(self):
        return MeasureValue({e: -c for e, c in self._terms.items()},
                            self.elevation)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponent = e1 + e2
                terms[exponent] = terms.get(exponent, 0) + c1 * c2
        return MeasureValue(terms, self.elevation)

    __rmul__ = __mul__

    def __truediv__(self, other):
        '''Divide by a nonzero rational or a single-term value.'''
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            raise DivisionByZeroError('division of a measure value by zero')
        if len(other._terms) != 1:
            raise UsageError(f"{other} is not a unit of the Laurent ring")
        (exponent, coeff), = other._terms.items()
        return MeasureValue({e - exponent: c / coeff
                             for e, c in self._terms.items()},
                            self.elevation)

    def scaled(self, factor):
        '''Substitute Y_k -> X_k^factor.'''
        return MeasureValue({e * factor: c for e, c in self._terms.items()},
                            self.elevation)

    def unscaled(self, factor):
        '''Inverse of `scaled`; every exponent must be divisible.'''
        terms = {}
        for exponent, coeff in self._terms.items():
            if any(a % factor for a in exponent):
                raise UsageError(f"exponent {exponent} is not divisible by "
                                 f"{factor}")
            terms[ExpVec(a // factor for a in exponent)] = coeff
        return MeasureValue(terms, self.elevation)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.elevation, frozenset(self._terms.items())))

    def __lt__(self, other):
        return mv_cmp(self, other) == Ordering.LESS

    def __le__(self, other):
        return mv_cmp(self, other) != Ordering.GREATER

    def __gt__(self, other):
        return mv_cmp(self, other) == Ordering.GREATER

    def __ge__(self, other):
        return mv_cmp(self, other) != Ordering.LESS

    def __bool__(self):
        return bool(self._terms)

    def _format_monomial(self, exponent, letter):
        if self.elevation == 1:
            a = exponent[0]
            if a == 0:
                return ''
            return letter if a == 1 else '%s^%d' % (letter, a)
        factors = []
        for position, a in enumerate(exponent):
            if a == 0:
                continue
            name = '%s%d' % (letter, position + 2)
            factors.append(name if a == 1 else '%s^%d' % (name, a))
        return '*'.join(factors)

    def format(self, letter='Y'):
        '''Render as `1/4 * Y^3 - Y^5`, ascending exponents, `0` for zero.'''
        if not self._terms:
            return '0'
        text = ''
        for exponent, coeff in self.terms:
            monomial = self._format_monomial(exponent, letter)
            magnitude = abs(coeff)
            if not monomial:
                body = format_fraction(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = '%s * %s' % (format_fraction(magnitude), monomial)
            if not text:
                text = '-' + body if coeff < 0 else body
            else:
                text += (' - ' if coeff < 0 else ' + ') + body
        return text

    def to_terms(self):
        '''Structured term list for JSON output.'''
        return ListDict(Dict([('coeff', coeff), ('exponent', list(exponent))])
                        for exponent, coeff in self.terms)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"<MeasureValue {self.format()}>"


def mv_cmp(a, b):
    '''Three-way comparison in the infinitesimal order.'''
    if not isinstance(a, MeasureValue):
        a = b._coerce(a)
    sign = (a - b).sign()
    if sign < 0:
        return Ordering.LESS
    if sign > 0:
        return Ordering.GREATER
    return Ordering.EQUAL
