# coding: utf8
'''
    levmeas.tests.test_additive
    ---------------------------

    Cosets of fractional ideals of F_p((t1))...((tn)) and the coset-counting
    oracles.

    :copyright: Copyright 2026 levmeas contributors, see AUTHORS.
    :license: GNU GPL v3.

'''
from fractions import Fraction
from itertools import islice

import pytest
from hypothesis import given, settings, strategies as st

from ..additive import (AdditiveDistSet, AdditiveFamily,
                        oracle_single_level_measure, oracle_stratified_measure)
from ..exceptions import DomainError, GuardError, PreconditionError, UsageError
from ..expvec import ExpVec
from ..field import FieldElement
from ..forest import DddForest, Trichotomy, check_compatible
from ..measure import MeasureValue
from .strategies import (additive_cells, additive_forests, expvecs,
                         field_elements, with_family)


F2 = AdditiveFamily(2, 2)
F3 = AdditiveFamily(3, 2)


def t(k, family=F2):
    return FieldElement.parameter(k, family.p, family.n)


def D(shift, head, tail, family=F2):
    return family.cell(shift, (head, tail))


def test_family_domain():
    with pytest.raises(DomainError):
        AdditiveFamily(4, 2)
    with pytest.raises(DomainError):
        AdditiveFamily(2, 0)
    family = AdditiveFamily(5, 3)
    assert family.q == 5
    assert family.elevation == 2
    assert repr(family) == '<AdditiveFamily p=5 n=3>'


def test_canonical_shift():
    '''Monomials at or above the index are dropped from the shift.'''
    cell = D(1 + t(1) ** 2 + t(2), 2, 0)
    assert cell.shift == FieldElement.one(2, 2)
    assert cell == D(1, 2, 0)
    assert hash(cell) == hash(D(1, 2, 0))
    assert cell.level == ExpVec((0,))
    with pytest.raises(UsageError):
        AdditiveDistSet(FieldElement.one(2, 2), (1, 0, 0))


def test_compare():
    assert F2.compare(D(0, 1, 1), D(0, 0, 0)) is \
        Trichotomy.FIRST_INSIDE_SECOND
    assert F2.compare(D(1, 1, 0), D(0, 1, 0)) is Trichotomy.DISJOINT
    assert F2.compare(D(t(1), 2, 0), D(0, 1, 0)) is \
        Trichotomy.FIRST_INSIDE_SECOND
    assert F2.compare(D(0, 0, 0), D(t(1), 2, 0)) is \
        Trichotomy.SECOND_INSIDE_FIRST
    assert F2.compare(D(1 + t(1), 1, 0), D(1, 1, 0)) is Trichotomy.EQUAL


def test_member():
    O = D(0, 0, 0)
    assert F2.member(t(1) ** -5 * t(2), O)
    assert not F2.member(1, D(0, 0, 1))
    cell = D(1 + t(2) ** -1, 3, 0)
    assert F2.member(cell.shift, cell)


def test_base_measure():
    '''q^-idx1 Y^tail.'''
    assert F2.base_measure(D(0, 0, 0)) == MeasureValue.one(1)
    assert F3.base_measure(D(2, 3, -2, F3)) == \
        MeasureValue.monomial(Fraction(1, 27), (-2,))
    family = AdditiveFamily(2, 3)
    cell = family.cell(0, (1, 2, -1))
    assert family.base_measure(cell) == \
        MeasureValue.monomial(Fraction(1, 2), (2, -1))


def test_split():
    halves = F2.split(D(0, 0, 0), 1)
    assert set(halves) == {D(0, 1, 0), D(1, 1, 0)}
    assert F2.split(D(1, 2, 1), 2) == [D(1, 2, 1)]
    with pytest.raises(UsageError):
        F2.split(D(0, 2, 0), 1)


def test_split_level_one():
    '''t2O splits into 9 cosets of t1^2 t2 O at p = 3.'''
    cell = D(0, 0, 1, F3)
    pieces = F3.split(cell, 2)
    assert len(pieces) == 9
    assert len(set(pieces)) == 9
    for first in pieces:
        assert F3.contains(cell, first)
        for second in pieces:
            if first is not second:
                assert F3.compare(first, second) is Trichotomy.DISJOINT
    tiling = DddForest.from_shells(F3, pieces)
    assert tiling.format() == 'D(0; 0, 1)'


def test_split_guard():
    with pytest.raises(GuardError):
        F2.split(D(0, 0, 0), 40)


def test_parent_and_distinguished():
    assert F2.parent(D(1 + t(1), 2, 0)) == D(1, 1, 0)
    assert F2.distinguished(3, (2,)) == D(0, 3, 2)


def test_sample_and_nearby_points():
    cell = D(t(2) ** -1, 1, 1)
    points = list(islice(F2.sample_points(cell), 7))
    assert points[0] == cell.shift
    assert all(F2.member(x, cell) for x in points)
    assert len(set(points)) == 4
    nearby = list(islice(F2.nearby_points(cell), 3))
    assert not any(F2.member(x, cell) for x in nearby)
    assert nearby[0] == cell.shift + t(2)


def test_format():
    assert F2.format_cell(D(1 + t(1) ** -1 * t(2), 2, 3)) == \
        'D(1 + t1^-1*t2; 2, 3)'
    assert F2.format_point(t(2) ** -1) == 't2^-1'
    assert '%s' % F2 == 'additive'


def test_compatible():
    report = check_compatible(F2, [((2, 0), [(0,), (3,), (-2,)])])
    assert report['passed']
    assert {row['exponent'] for row in report['rows']} == {2}


class TestOracle:
    '''Coset counting, independent of forest canonicalization.'''

    def test_units(self):
        '''O minus 1 + t1O is 2/3 at p = 3.'''
        value = oracle_single_level_measure(F3, [D(0, 0, 0, F3)],
                                            [D(1, 1, 0, F3)])
        assert value == MeasureValue.constant(Fraction(2, 3), 1)

    def test_ideal(self):
        '''t1^2 O has measure q^-2.'''
        value = oracle_single_level_measure(F2, [D(0, 2, 0)])
        assert value == MeasureValue.constant(Fraction(1, 4), 1)
        value = oracle_single_level_measure(F2, [D(0, 2, 0)],
                                            [D(0, 4, 0)])
        assert value == MeasureValue.constant(Fraction(3, 16), 1)

    def test_empty(self):
        value = oracle_single_level_measure(F2, [], gamma=(0,))
        assert value == MeasureValue.zero(1)
        assert oracle_stratified_measure(DddForest.empty(F2)) == \
            MeasureValue.zero(1)

    def test_mixed_levels(self):
        with pytest.raises(PreconditionError):
            oracle_single_level_measure(F2, [D(0, 0, 0)], [D(0, 0, 1)])
        with pytest.raises(PreconditionError):
            oracle_single_level_measure(F2, [D(0, 0, 0)], gamma=(1,))

    def test_overlapping_big_shells(self):
        value = oracle_single_level_measure(F2, [D(0, 0, 0), D(1, 2, 0)])
        assert value == MeasureValue.one(1)

    def test_stratified(self):
        forest = DddForest.from_shells(F2, [D(0, 0, 0)],
                                       [D(0, 0, 1), D(1, 1, 0)])
        assert oracle_stratified_measure(forest) == forest.measure()
        assert forest.measure() == MeasureValue([((0,), Fraction(1, 2)),
                                                 ((1,), -1)])


ORACLE_FAMILIES = [F2, F3, AdditiveFamily(5, 2), AdditiveFamily(2, 3),
                   AdditiveFamily(3, 3)]


@st.composite
def single_level_shells(draw, family):
    '''Big shells of one random level and the small shells inside them.'''
    level = draw(expvecs(family.n - 1, -2, 2))
    cells = additive_cells(family, heads=(0, 3), level=level)
    big = draw(st.lists(cells, min_size=1, max_size=3))
    small = [cell for cell in draw(st.lists(cells, max_size=3))
             if any(family.contains(outer, cell) for outer in big)]
    return big, small


@settings(max_examples=1000, deadline=None)
@given(with_family(ORACLE_FAMILIES, single_level_shells))
def test_oracle_matches_measure(case):
    '''Single-level sets: coset counting equals the forest measure.'''
    family, (big, small) = case
    forest = DddForest.from_shells(family, big, small)
    assert oracle_single_level_measure(family, big, small) == \
        forest.measure()


@settings(max_examples=200, deadline=None)
@given(with_family(ORACLE_FAMILIES, additive_forests))
def test_stratified_oracle_matches_measure(case):
    family, forest = case
    assert oracle_stratified_measure(forest) == forest.measure()


@pytest.mark.parametrize('p, n', [(2, 2), (3, 2), (5, 2), (2, 3), (3, 3),
                                  (5, 3)])
@settings(max_examples=50)
@given(data=st.data())
def test_normalization(p, n, data):
    '''alpha + t1^i t^gamma O has measure q^-i Y^gamma.'''
    family = AdditiveFamily(p, n)
    head = data.draw(st.integers(-5, 5))
    gamma = data.draw(expvecs(n - 1, -5, 5))
    alpha = data.draw(field_elements(p, n))
    cell = family.cell(alpha, (head,) + tuple(gamma))
    assert DddForest.from_cell(family, cell).measure() == \
        MeasureValue.monomial(Fraction(p) ** -head, gamma)
