# -*- coding: utf-8 -*-
'''
    levmeas.expvec
    --------------

    Integer exponent vectors ordered lexicographically from the right, and the
    infinite valuation of zero.

    :copyright: Copyright 2026 levmeas contributors, see AUTHORS.
    :license: GNU GPL v3.

'''
from enum import IntEnum

from .exceptions import UsageError


class Ordering(IntEnum):
    '''Result of a three-way comparison.'''
    LESS = -1
    EQUAL = 0
    GREATER = 1


class ExpVec(tuple):
    '''An element of Z^k. The last coordinate is the most significant one,
    so `(2, 1) < (1, 2)` and `(-3, 1) > (0, 0)`.

    Addition, subtraction and integer scaling act coordinatewise; tuple
    concatenation and repetition are not available.

    >>> ExpVec((2, 1)) < ExpVec((1, 2))
    True
    >>> ExpVec((1, 0)) + ExpVec((0, 1))
    ExpVec(1, 1)
    '''

    def __new__(cls, coords=()):
        return super(ExpVec, cls).__new__(cls, (int(c) for c in coords))

    @classmethod
    def zero(cls, arity):
        '''The zero vector of the given arity.'''
        return cls((0,) * arity)

    @classmethod
    def unit(cls, arity, position=0):
        '''The basis vector with a 1 at `position`.'''
        return cls(1 if i == position else 0 for i in range(arity))

    @property
    def arity(self):
        return len(self)

    @property
    def head(self):
        '''First coordinate, the index along t1.'''
        return self[0]

    @property
    def tail(self):
        '''All coordinates but the first; the level of a distinguished set.'''
        return ExpVec(self[1:])

    def key(self):
        '''Plain tuple sorting in the same order as the vector.'''
        return tuple(reversed(self))

    def _check(self, other):
        if not isinstance(other, ExpVec):
            raise UsageError(f"cannot combine ExpVec with {other!r}")
        if len(self) != len(other):
            raise UsageError(f"arity mismatch: {len(self)} != {len(other)}")

    def __add__(self, other):
        if isinstance(other, Infinity):
            return other + self
        self._check(other)
        return ExpVec(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        if isinstance(other, Infinity):
            return other - self
        self._check(other)
        return ExpVec(a - b for a, b in zip(self, other))

    def __neg__(self):
        return ExpVec(-a for a in self)

    def __mul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return ExpVec(scalar * a for a in self)

    __rmul__ = __mul__

    def _compare(self, other):
        if isinstance(other, Infinity):
            return None
        self._check(other)
        return expvec_cmp(self, other)

    def __eq__(self, other):
        if not isinstance(other, ExpVec):
            return NotImplemented
        self._check(other)
        return tuple.__eq__(self, other)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = tuple.__hash__

    def __lt__(self, other):
        result = self._compare(other)
        return True if result is None else result == Ordering.LESS

    def __le__(self, other):
        result = self._compare(other)
        return True if result is None else result != Ordering.GREATER

    def __gt__(self, other):
        result = self._compare(other)
        return False if result is None else result == Ordering.GREATER

    def __ge__(self, other):
        result = self._compare(other)
        return False if result is None else result != Ordering.LESS

    def is_positive(self):
        '''True when the vector is greater than zero.'''
        return self > ExpVec.zero(len(self))

    def __repr__(self):
        return 'ExpVec(%s)' % ', '.join('%d' % a for a in self)

    def __str__(self):
        return '(%s)' % ', '.join('%d' % a for a in self)


def expvec_cmp(a, b):
    '''Compare at the rightmost differing coordinate.'''
    if len(a) != len(b):
        raise UsageError(f"arity mismatch: {len(a)} != {len(b)}")
    for x, y in zip(reversed(a), reversed(b)):
        if x < y:
            return Ordering.LESS
        if x > y:
            return Ordering.GREATER
    return Ordering.EQUAL


class Infinity(object):
    '''Valuation of zero: greater than every ExpVec, never added.'''
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(Infinity, cls).__new__(cls)
        return cls._instance

    def _reject(self, other):
        raise UsageError('arithmetic with the infinite valuation')

    __add__ = __radd__ = __sub__ = __rsub__ = _reject

    def __neg__(self):
        raise UsageError('arithmetic with the infinite valuation')

    def __eq__(self, other):
        return other is self

    def __ne__(self, other):
        return other is not self

    def __hash__(self):
        return hash('levmeas.INF')

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __repr__(self):
        return 'INF'

    __str__ = __repr__


INF = Infinity()
