# -*- coding: utf-8 -*-
'''
    levmeas.parser
    --------------

    The ddd-set expression language: tokenizer, recursive-descent parser,
    printer and evaluation to canonical forests. The grammar is in
    docs/grammar.ebnf.

    :copyright: Copyright 2026 levmeas contributors, see AUTHORS.
    :license: GNU GPL v3.

'''
import re
from collections import namedtuple

from .additive import AdditiveFamily
from .exceptions import LevmeasError, ParsingError
from .expvec import ExpVec
from .field import FieldElement
from .forest import DddForest
from .logger import LOGGER
from .matrix import MatrixFamily, determinant


Token = namedtuple('Token', 'kind text pos')

#: An atom D(...) or K(...) holding its validated distinguished set.
Atom = namedtuple('Atom', 'cell')
#: `op` is one of '|', '\\', '&'.
Binary = namedtuple('Binary', 'op left right')
#: The family action of `element` on `operand`.
Translation = namedtuple('Translation', 'element operand')


class Empty(namedtuple('Empty', '')):
    '''The empty ddd-set.'''


TOKEN_PATTERN = re.compile(r'''
    (?P<space>\s+)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<punct>[()\[\];,+\-*^|&\\])
''', re.VERBOSE)

VARIABLE = re.compile(r't([1-9][0-9]*)$')

#: Binding strength of the printed forms, loosest first.
PRECEDENCE = {'|': 1, '\\': 2, '&': 3}
TRANSLATION_PRECEDENCE = 4
ATOM_PRECEDENCE = 5


class Context(object):
    '''Source text with a position, rendered as line:column.'''

    def __init__(self, text):
        self.text = text

    def location(self, pos):
        line = self.text.count('\n', 0, pos) + 1
        column = pos - (self.text.rfind('\n', 0, pos) + 1) + 1
        return line, column

    def error(self, message, pos):
        line, column = self.location(pos)
        return ParsingError(message, line, column)


def tokenize(text):
    '''Split `text` into tokens, ending with an `end` token.'''
    context = Context(text)
    tokens = []
    pos = 0
    while pos < len(text):
        match = TOKEN_PATTERN.match(text, pos)
        if match is None:
            raise context.error(f"unexpected character {text[pos]!r}", pos)
        kind = match.lastgroup
        if kind != 'space':
            tokens.append(Token(kind, match.group(), pos))
        pos = match.end()
    tokens.append(Token('end', '', len(text)))
    return tokens


class ExpressionParser(object):
    '''Recursive-descent parser of one expression for one family.

    :param text: The expression source.
    :param family: An AdditiveFamily or MatrixFamily; atoms are validated
        against it while parsing.
    '''

    def __init__(self, text, family):
        self.context = Context(text)
        self.tokens = tokenize(text)
        self.position = 0
        self.family = family
        self.p = family.p
        self.n = family.n

    @property
    def token(self):
        return self.tokens[self.position]

    def peek(self, offset=1):
        index = min(self.position + offset, len(self.tokens) - 1)
        return self.tokens[index]

    def advance(self):
        token = self.token
        if token.kind != 'end':
            self.position += 1
        return token

    def error(self, message, token=None):
        token = token or self.token
        return self.context.error(message, token.pos)

    def describe(self, token):
        return 'end of input' if token.kind == 'end' else repr(token.text)

    def expect(self, text):
        if self.token.text != text or self.token.kind not in ('punct',
                                                              'name'):
            raise self.error(f"expected {text!r}, found "
                             f"{self.describe(self.token)}")
        return self.advance()

    def accept(self, text):
        if self.token.kind in ('punct', 'name') and self.token.text == text:
            return self.advance()
        return None

    def parse(self):
        expr = self.union()
        if self.token.kind != 'end':
            raise self.error(f"unexpected {self.describe(self.token)}")
        return expr

    def union(self):
        expr = self.difference()
        while self.accept('|'):
            expr = Binary('|', expr, self.difference())
        return expr

    def difference(self):
        expr = self.intersection()
        while self.accept('\\'):
            expr = Binary('\\', expr, self.intersection())
        return expr

    def intersection(self):
        expr = self.unary()
        while self.accept('&'):
            expr = Binary('&', expr, self.unary())
        return expr

    def starts_set(self, token):
        return (token.kind == 'name' and token.text in ('D', 'K', 'empty')
                or token.kind == 'punct' and token.text == '(')

    def unary(self):
        token = self.token
        if self.starts_set(token):
            return self.primary()
        if isinstance(self.family, MatrixFamily):
            element = self.matrix_element()
            self.expect('*')
        else:
            element = self.polynomial(stop_before_set=True)
            self.expect('+')
        return Translation(element, self.unary())

    def primary(self):
        token = self.advance()
        if token.text == '(':
            expr = self.union()
            self.expect(')')
            return expr
        if token.text == 'empty':
            return Empty()
        if token.text == 'D':
            if not isinstance(self.family, AdditiveFamily):
                raise self.error(f"D(...) atoms need the additive family, "
                                 f"not {self.family}", token)
            return self.additive_atom(token)
        if not isinstance(self.family, MatrixFamily):
            raise self.error(f"K(...) atoms need a matrix family, not "
                             f"{self.family}", token)
        return self.matrix_atom(token)

    def additive_atom(self, token):
        self.expect('(')
        shift = self.polynomial()
        self.expect(';')
        idx = self.integers()
        self.expect(')')
        return Atom(self.validated(lambda: self.family.cell(shift, idx),
                                   token))

    def matrix_atom(self, token):
        self.expect('(')
        rows = self.matrix()
        self.expect(';')
        idx = self.integers()
        self.expect(')')
        cell = self.validated(lambda: self.family.cell(rows, idx), token)
        if self.family.kind == 'SL' and determinant(cell.rep) != 1:
            raise self.error('SL representative must have determinant 1',
                             token)
        return Atom(cell)

    def validated(self, build, token):
        try:
            return build()
        except ParsingError:
            raise
        except LevmeasError as error:
            LOGGER.error(f"invalid atom at offset {token.pos}: {error}")
            raise self.error('%s' % error, token) from error

    def matrix_element(self):
        token = self.token
        rows = self.matrix()

        def build():
            g = self.family.matrix(rows)
            det = determinant(g)
            if not det:
                raise self.error('translation by a singular matrix', token)
            if self.family.kind == 'SL' and det != 1:
                raise self.error('SL translation must have determinant 1',
                                 token)
            return g
        return self.validated(build, token)

    def matrix(self):
        self.expect('[')
        rows = [self.row()]
        while self.accept(','):
            rows.append(self.row())
        self.expect(']')
        return rows

    def row(self):
        self.expect('[')
        entries = [self.polynomial()]
        while self.accept(','):
            entries.append(self.polynomial())
        self.expect(']')
        return entries

    def integer(self):
        sign = -1 if self.accept('-') else 1
        token = self.token
        if token.kind != 'int':
            raise self.error(f"expected an integer, found "
                             f"{self.describe(token)}")
        self.advance()
        return sign * int(token.text)

    def integers(self):
        values = [self.integer()]
        while self.accept(','):
            values.append(self.integer())
        return ExpVec(values)

    def polynomial(self, stop_before_set=False):
        '''poly := ['-'] term (('+' | '-') term)*

        With `stop_before_set`, a '+' followed by the start of a set is left
        for the translation rule.
        '''
        sign = -1 if self.accept('-') else 1
        total = self.term() * sign
        while self.token.kind == 'punct' and self.token.text in '+-':
            if stop_before_set and self.token.text == '+' and \
                    self.starts_set(self.peek()):
                break
            sign = -1 if self.advance().text == '-' else 1
            total = total + self.term() * sign
        return total

    def term(self):
        coeff = 1
        if self.token.kind == 'int':
            coeff = int(self.advance().text)
            if not self.accept('*'):
                return FieldElement.constant(coeff, self.p, self.n)
        exponent = self.factor()
        while self.token.text == '*' and self.peek().kind == 'name' and \
                VARIABLE.match(self.peek().text):
            self.advance()
            exponent = exponent + self.factor()
        return FieldElement.monomial(coeff, exponent, self.p)

    def factor(self):
        token = self.token
        match = VARIABLE.match(token.text) if token.kind == 'name' else None
        if match is None:
            raise self.error(f"expected a variable t1..t{self.n}, found "
                             f"{self.describe(token)}")
        k = int(match.group(1))
        if k > self.n:
            raise self.error(f"variable t{k} beyond dimension {self.n}",
                             token)
        self.advance()
        power = self.integer() if self.accept('^') else 1
        return power * ExpVec.unit(self.n, k - 1)


def parse(text, family):
    '''Parse `text` into an expression tree for `family`.

    >>> from levmeas.additive import AdditiveFamily
    >>> parse("D(0;0,0) \\\\ D(0;0,1)", AdditiveFamily(2, 2)).op
    '\\\\'
    '''
    return ExpressionParser(text, family).parse()


def _format_element(family, element):
    if isinstance(family, MatrixFamily):
        return '%s * ' % family.format_point(element)
    return '%s + ' % element.format()


def _precedence(expr):
    if isinstance(expr, Binary):
        return PRECEDENCE[expr.op]
    if isinstance(expr, Translation):
        return TRANSLATION_PRECEDENCE
    return ATOM_PRECEDENCE


def _wrap(text, expr, minimum):
    if _precedence(expr) < minimum:
        return '(%s)' % text
    return text


def format_expr(expr, family):
    '''Print `expr` so that parsing the text gives `expr` back.'''
    if isinstance(expr, Empty):
        return 'empty'
    if isinstance(expr, Atom):
        return family.format_cell(expr.cell)
    if isinstance(expr, Translation):
        operand = format_expr(expr.operand, family)
        # a bare inner translation would fuse with the outer element
        return _format_element(family, expr.element) + \
            _wrap(operand, expr.operand, TRANSLATION_PRECEDENCE + 1)
    strength = PRECEDENCE[expr.op]
    left = _wrap(format_expr(expr.left, family), expr.left, strength)
    right = _wrap(format_expr(expr.right, family), expr.right, strength + 1)
    return '%s %s %s' % (left, expr.op, right)


def evaluate(expr, family):
    '''The canonical forest of `expr`.'''
    if isinstance(expr, Empty):
        return DddForest.empty(family)
    if isinstance(expr, Atom):
        return DddForest.from_cell(family, expr.cell)
    if isinstance(expr, Translation):
        return evaluate(expr.operand, family).translate(expr.element)
    left = evaluate(expr.left, family)
    right = evaluate(expr.right, family)
    if expr.op == '|':
        return left | right
    if expr.op == '&':
        return left & right
    return left - right


def parse_forest(text, family):
    '''Parse and evaluate in one step.'''
    return evaluate(parse(text, family), family)
