# coding: utf8
'''
    levmeas.tests.test_parser
    -------------------------

    The expression language: parsing, diagnostics, printing and evaluation.

    :copyright: Copyright 2026 levmeas contributors, see AUTHORS.
    :license: GNU GPL v3.

'''
import pytest
from hypothesis import given, settings, strategies as st

from ..additive import AdditiveFamily
from ..exceptions import ParsingError
from ..expvec import ExpVec
from ..field import FieldElement
from ..forest import LevelStatus
from ..matrix import MatrixFamily
from ..parser import (Atom, Binary, Empty, Translation, format_expr, parse,
                      parse_forest, tokenize)
from .strategies import ADDITIVE, additive_cells, field_elements


F3 = AdditiveFamily(3, 2)
GL2 = MatrixFamily(2, 2, 2)
SL2 = MatrixFamily(3, 2, 2, 'SL')


def t(k, p=2, n=2):
    return FieldElement.parameter(k, p, n)


def syntax_error(text, family=ADDITIVE):
    with pytest.raises(ParsingError) as error:
        parse(text, family)
    return error.value


def test_tokenize():
    kinds = [token.kind for token in tokenize('D(1 + t1^-2; 0, 1)')]
    assert kinds == ['name', 'punct', 'int', 'punct', 'name', 'punct',
                     'punct', 'int', 'punct', 'int', 'punct', 'int',
                     'punct', 'end']
    with pytest.raises(ParsingError):
        tokenize('D(0; 0, 0) % D(0; 0, 1)')


def test_additive_atom():
    '''Shift and index of a D(...) literal.'''
    expr = parse('D(1 + t1; 2, 1)', F3)
    assert isinstance(expr, Atom)
    assert expr.cell.shift == 1 + t(1, 3)
    assert expr.cell.idx == ExpVec((2, 1))


def test_difference_node():
    expr = parse('D(0;0,0) \\ D(0;0,1)', ADDITIVE)
    assert expr == Binary('\\', Atom(ADDITIVE.cell(0, (0, 0))),
                          Atom(ADDITIVE.cell(0, (0, 1))))


def test_matrix_atom():
    expr = parse('K([[1,0],[t1,1]]; 1, 1)', GL2)
    assert isinstance(expr, Atom)
    assert expr.cell.rep == GL2.matrix([[1, 0], [t(1), 1]])
    assert expr.cell.idx == ExpVec((1, 1))


def test_coefficients_reduced():
    expr = parse('D(3*t1^-1 - t2; 0, 2)', ADDITIVE)
    assert expr.cell.shift == t(1) ** -1 + t(2)
    expr = parse('D(-t1^-1*t2^2; 0, 3)', F3)
    assert expr.cell.shift == FieldElement.monomial(2, (-1, 2), 3)


def test_precedence():
    '''| is loosest, then \\, then &; all left-associative.'''
    A, B, C = (Atom(ADDITIVE.cell(0, (0, k))) for k in range(3))
    text = 'D(0;0,0) | D(0;0,1) \\ D(0;0,2)'
    assert parse(text, ADDITIVE) == Binary('|', A, Binary('\\', B, C))
    text = 'D(0;0,0) \\ D(0;0,1) & D(0;0,2)'
    assert parse(text, ADDITIVE) == Binary('\\', A, Binary('&', B, C))
    text = 'D(0;0,0) \\ D(0;0,1) \\ D(0;0,2)'
    assert parse(text, ADDITIVE) == Binary('\\', Binary('\\', A, B), C)
    text = 'D(0;0,0) \\ (D(0;0,1) \\ D(0;0,2))'
    assert parse(text, ADDITIVE) == Binary('\\', A, Binary('\\', B, C))


def test_translation():
    '''Translation binds tighter than every set operator.'''
    expr = parse('1 + t1 + D(0;1,0) | D(0;0,1)', ADDITIVE)
    assert expr == Binary('|', Translation(1 + t(1),
                                           Atom(ADDITIVE.cell(0, (1, 0)))),
                          Atom(ADDITIVE.cell(0, (0, 1))))
    forest = parse_forest('t2^-1 + D(0;0,1)', ADDITIVE)
    assert forest.format() == 'D(t2^-1; 0, 1)'
    expr = parse('[[1, t1], [0, 1]] * K([[1, 0], [0, 1]]; 1, 0)', GL2)
    assert isinstance(expr, Translation)
    assert expr.element == GL2.matrix([[1, t(1)], [0, 1]])


def test_empty():
    assert parse('empty', ADDITIVE) == Empty()
    assert parse_forest('empty | D(0;0,0)', ADDITIVE).format() == \
        'D(0; 0, 0)'
    assert parse_forest('D(0;0,0) \\ D(0;0,0)', ADDITIVE).is_empty()


def test_error_location():
    '''Diagnostics carry line and column.'''
    error = syntax_error('D(0; 0, 0) | X')
    assert (error.line, error.column) == (1, 14)
    assert '%s' % error == "1:14: expected a variable t1..t2, found 'X'"
    error = syntax_error('D(0; 0, 0)\n  | D(0; 0, @)')
    assert (error.line, error.column) == (2, 13)
    error = syntax_error('(D(0; 0, 0)')
    assert '%s' % error == "1:12: expected ')', found end of input"
    error = syntax_error('D(0; 0, 0))')
    assert '%s' % error == "1:11: unexpected ')'"


def test_variable_bound():
    error = syntax_error('D(t3; 1, 0)')
    assert 'beyond dimension 2' in '%s' % error
    assert error.column == 3


def test_index_arity():
    error = syntax_error('D(0; 1)')
    assert error.column == 1


def test_wrong_family():
    assert 'matrix family' in '%s' % syntax_error('K([[1]]; 1, 0)')
    assert 'additive family' in '%s' % syntax_error('D(0; 1, 0)', GL2)


def test_matrix_literal_errors():
    '''Positive index, invertibility and unit determinant for SL.'''
    syntax_error('K([[1, 0], [0, 1]]; 0, 0)', GL2)
    syntax_error('K([[1, 1], [1, 1]]; 1, 0)', GL2)
    syntax_error('K([[1, 0]]; 1, 0)', GL2)
    error = syntax_error('K([[1 + t1, 0], [0, 1]]; 1, 0)', SL2)
    assert 'determinant 1' in '%s' % error
    syntax_error('[[0, 0], [0, 0]] * K([[1, 0], [0, 1]]; 1, 0)', GL2)
    syntax_error('[[2, 0], [0, 1]] * K([[1, 0], [0, 1]]; 1, 0)', SL2)


def test_format_expr():
    text = 'D(0; 0, 0) | D(1; 1, 0) & D(0; 0, 1)'
    assert format_expr(parse(text, ADDITIVE), ADDITIVE) == text
    text = '(D(0; 0, 0) | D(1; 1, 0)) \\ (D(0; 0, 1) \\ D(0; 0, 2))'
    assert format_expr(parse(text, ADDITIVE), ADDITIVE) == text
    text = 't1 + (1 + D(0; 1, 0))'
    assert format_expr(parse(text, ADDITIVE), ADDITIVE) == text
    text = 'K([[1, 0], [t1, 1]]; 1, 1) | [[1, t1], [0, 1]] * ' \
           'K([[1, 0], [0, 1]]; 2, 0)'
    assert format_expr(parse(text, GL2), GL2) == text


def test_uniform_level_example():
    '''A distinguished set of level 0 glued to a point with none.'''
    text = '(D(0;0,1) | D(t2^-1;0,1)) | (D(0;0,0) \\ D(0;0,1))'
    forest = parse_forest(text, ADDITIVE)
    assert forest.level() == ExpVec((0,))
    result = forest.uniform_level()
    assert result.status is LevelStatus.NOT_UNIFORM
    assert result.witness == t(2) ** -1


atoms = st.one_of(st.just(Empty()),
                  additive_cells().map(Atom))


def extend(children):
    binary = st.builds(Binary, st.sampled_from(['|', '\\', '&']),
                       children, children)
    translation = st.builds(Translation, field_elements(2, 2, -2, 2),
                            children)
    return st.one_of(binary, translation)


@settings(max_examples=200, deadline=None)
@given(st.recursive(atoms, extend, max_leaves=6))
def test_print_parse_round_trip(expr):
    '''Parsing the printed form gives the tree back.'''
    text = format_expr(expr, ADDITIVE)
    assert parse(text, ADDITIVE) == expr
    assert format_expr(parse(text, ADDITIVE), ADDITIVE) == text
