# -*- coding: utf-8 -*-
'''
    levmeas.exceptions
    ------------------

    Errors raised by the measure engine and its command-line front end.

    :copyright: Copyright 2026 levmeas contributors, see AUTHORS.
    :license: GNU GPL v3.

'''


class LevmeasError(Exception):
    '''Generic levmeas error.'''
    def __str__(self):
        if self.args:
            return '%s' % self.args[0]
        return self.__doc__


class UsageError(LevmeasError):
    '''Operands do not share arity, elevation or modulus.'''


class DivisionByZeroError(UsageError, ZeroDivisionError):
    '''Division by zero.'''


class PrecisionError(LevmeasError):
    '''Requested precision is not reachable by a finite truncation.'''


class SingularMatrixError(LevmeasError):
    '''Matrix has zero determinant.'''


class DomainError(LevmeasError):
    '''Value lies outside the domain of the family.'''


class ContainmentError(LevmeasError):
    '''Distinguished set is not contained where it must be.'''


class InputsNotEqualError(LevmeasError):
    '''The two ddd-sets are not equal as point sets.'''


class PreconditionError(LevmeasError):
    '''Oracle precondition violated.'''


class GuardError(LevmeasError):
    '''Enumeration exceeds the candidate size guard.'''


class ParsingError(LevmeasError):
    '''Invalid expression.'''
    def __init__(self, message, line=1, column=1):
        super(ParsingError, self).__init__(message)
        self.line = line
        self.column = column

    def __str__(self):
        return '%d:%d: %s' % (self.line, self.column, self.args[0])
