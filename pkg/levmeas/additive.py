# -*- coding: utf-8 -*-
'''
    levmeas.additive
    ----------------

    The additive group of F = F_p((t1))...((tn)) levelled over F_p((t1)):
    distinguished sets are the cosets shift + t^idx O_F, of level
    (idx_2, ..., idx_n), with Fesenko's measure q^-idx_1 Y^(idx_2, ..., idx_n).

    :copyright: Copyright 2026 levmeas contributors, see AUTHORS.
    :license: GNU GPL v3.

'''
from fractions import Fraction
from itertools import count, product

from .exceptions import DomainError, GuardError, PreconditionError, UsageError
from .expvec import ExpVec
from .field import FieldElement
from .forest import DistinguishedFamily, Trichotomy
from .logger import LOGGER
from .measure import MeasureValue
from .utils import MAX_CANDIDATES, is_prime


class AdditiveDistSet(object):
    '''The coset {x : v(x - shift) >= idx}.

    The shift is reduced: monomials of exponent >= idx are dropped, so two
    equal cosets have equal data.
    '''
    __slots__ = ('shift', 'idx')

    def __init__(self, shift, idx):
        idx = ExpVec(idx)
        if len(idx) != shift.n:
            raise UsageError(f"index {idx} does not have arity {shift.n}")
        self.shift = shift.truncate(idx)
        self.idx = idx

    @property
    def level(self):
        return self.idx.tail

    def __eq__(self, other):
        if not isinstance(other, AdditiveDistSet):
            return NotImplemented
        return self.idx == other.idx and self.shift == other.shift

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.idx, self.shift))

    def __repr__(self):
        return f"<AdditiveDistSet {self.shift.format()} + t^{self.idx} O>"


class AdditiveFamily(DistinguishedFamily):
    '''Cosets of the fractional ideals t^idx O_F.

    :param p: The prime residue characteristic; q = p.
    :param n: The dimension of the local field.
    '''

    def __init__(self, p, n):
        if not is_prime(p):
            raise DomainError(f"p = {p} is not a prime")
        if n < 1:
            raise DomainError(f"dimension {n} is not positive")
        self.p = self.q = p
        self.n = n
        self.elevation = n - 1

    def element(self, value):
        '''Coerce an integer or FieldElement into the field.'''
        if isinstance(value, FieldElement):
            if value.p != self.p or value.n != self.n:
                raise UsageError(f"{value!r} is not in the field of {self}")
            return value
        return FieldElement.constant(value, self.p, self.n)

    def cell(self, shift, idx):
        return AdditiveDistSet(self.element(shift), idx)

    def compare(self, first, second):
        if first.idx >= second.idx:
            if (first.shift - second.shift).valuation >= second.idx:
                if first.idx == second.idx:
                    return Trichotomy.EQUAL
                return Trichotomy.FIRST_INSIDE_SECOND
            return Trichotomy.DISJOINT
        return self.compare(second, first).swapped()

    def member(self, x, cell):
        return (self.element(x) - cell.shift).valuation >= cell.idx

    def level(self, cell):
        return cell.idx.tail

    def base_measure(self, cell):
        return MeasureValue.monomial(Fraction(self.q) ** -cell.idx.head,
                                     cell.idx.tail)

    def index_exponent(self, inner, outer):
        return inner.idx.head - outer.idx.head

    def translate(self, g, cell):
        return AdditiveDistSet(cell.shift + self.element(g), cell.idx)

    def sort_key(self, cell):
        return (cell.idx.key(), cell.shift.sort_key())

    def _digits(self, head, tail, coeffs):
        return FieldElement([(ExpVec((a,) + tuple(tail)), c)
                             for a, c in enumerate(coeffs, start=head)],
                            self.p, self.n)

    def split(self, cell, target_head):
        '''The q^(target_head - idx_1) cosets shift + sum c_a t1^a t^tail
        tiling `cell`.'''
        depth = target_head - cell.idx.head
        if depth < 0:
            raise UsageError(f"cannot split {cell!r} to head {target_head}")
        if self.q ** depth > MAX_CANDIDATES:
            raise GuardError(f"{self.q}^{depth} cosets exceed the guard")
        tail = cell.idx.tail
        idx = ExpVec((target_head,) + tuple(tail))
        return [AdditiveDistSet(cell.shift +
                                self._digits(cell.idx.head, tail, coeffs),
                                idx)
                for coeffs in product(range(self.p), repeat=depth)]

    def parent(self, cell):
        return AdditiveDistSet(cell.shift,
                               cell.idx - ExpVec.unit(self.n))

    def sample_points(self, cell):
        yield cell.shift
        for depth in count(1):
            for sub in self.split(cell, cell.idx.head + depth):
                yield sub.shift

    def nearby_points(self, cell):
        for depth in count(1):
            exponent = cell.idx - depth * ExpVec.unit(self.n)
            for coeff in range(1, self.p):
                yield cell.shift + FieldElement.monomial(coeff, exponent,
                                                         self.p)

    def distinguished(self, head, tail):
        return AdditiveDistSet(FieldElement.zero(self.p, self.n),
                               (head,) + tuple(tail))

    def format_cell(self, cell):
        return 'D(%s; %s)' % (cell.shift.format(),
                              ', '.join('%d' % a for a in cell.idx))

    def format_point(self, x):
        return x.format()

    def __eq__(self, other):
        if not isinstance(other, AdditiveFamily):
            return NotImplemented
        return (self.p, self.n) == (other.p, other.n)

    def __hash__(self):
        return hash(('additive', self.p, self.n))

    def __str__(self):
        return 'additive'

    def __repr__(self):
        return f"<AdditiveFamily p={self.p} n={self.n}>"


def oracle_single_level_measure(family, big, small=(), gamma=None):
    '''Measure of `big` minus `small` by counting cosets.

    Every shell is split to the deepest t1-index among the shells, and the
    pieces whose representative satisfies the shell membership predicate
    are counted. Shares nothing with the forest canonicalization.

    :param family: An AdditiveFamily.
    :param big: Shells of one common level.
    :param small: Shells removed from the big ones.
    :param gamma: The common level, required only when there are no shells.
    '''
    big = list(big)
    small = list(small)
    levels = {family.level(cell) for cell in big + small}
    if gamma is not None:
        levels.add(ExpVec(gamma))
    if len(levels) > 1:
        LOGGER.error(f"oracle called on levels {sorted(levels)}")
        raise PreconditionError(f"shells of mixed levels "
                                f"{', '.join(str(g) for g in sorted(levels))}")
    if not big:
        return MeasureValue.zero(family.elevation)
    gamma = levels.pop()
    lo = min(cell.idx.head for cell in big + small)
    hi = max(cell.idx.head for cell in big + small)
    LOGGER.info(f"oracle over t1-window [{lo}, {hi}] at level {gamma}")
    pieces = set()
    for shell in big:
        pieces.update(family.split(shell, hi))
    found = sum(1 for piece in pieces
                if any(family.member(piece.shift, b) for b in big) and
                not any(family.member(piece.shift, s) for s in small))
    return MeasureValue.monomial(Fraction(found) / Fraction(family.q) ** hi,
                                 gamma)


def oracle_stratified_measure(forest):
    '''Sum of single-level oracle values over the level strata of a forest.

    Each included cell is counted with its excluded children of the same
    level; excluded cells of a higher level than their parent are counted
    on their own.
    '''
    family = forest.family
    total = MeasureValue.zero(family.elevation)
    for node, parent in forest.walk():
        level = family.level(node.cell)
        if node.included:
            same = [child.cell for child in node.children
                    if family.level(child.cell) == level]
            total = total + oracle_single_level_measure(family, [node.cell],
                                                        same)
        elif family.level(parent.cell) != level:
            total = total - oracle_single_level_measure(family, [node.cell])
    return total
