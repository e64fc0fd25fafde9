# -*- coding: utf-8 -*-
'''
    levmeas.forest
    --------------

    The ring of ddd-sets over a family of distinguished sets of ordered type,
    presented as laminar forests with alternating inclusion flags, and the
    invariant measure on it.

    :copyright: Copyright 2026 levmeas contributors, see AUTHORS.
    :license: GNU GPL v3.

'''
from abc import ABC, abstractmethod
from collections import namedtuple
from enum import Enum
from itertools import islice

from .exceptions import ContainmentError, InputsNotEqualError, UsageError
from .logger import LOGGER
from .measure import MeasureValue
from .utils import Dict, ListDict

#: Points tried before a uniform-level witness search gives up.
WITNESS_ATTEMPTS = 256


class Trichotomy(Enum):
    '''How two distinguished sets of an ordered-type family intersect.'''
    EQUAL = 'equal'
    DISJOINT = 'disjoint'
    FIRST_INSIDE_SECOND = 'first-inside-second'
    SECOND_INSIDE_FIRST = 'second-inside-first'

    def swapped(self):
        if self is Trichotomy.FIRST_INSIDE_SECOND:
            return Trichotomy.SECOND_INSIDE_FIRST
        if self is Trichotomy.SECOND_INSIDE_FIRST:
            return Trichotomy.FIRST_INSIDE_SECOND
        return self


class DistinguishedFamily(ABC):
    '''The translates gH of the members H of a level structure.

    A family fixes the elevation `e`, the residue field size `q` and
    everything the forest kernel needs to know about its distinguished sets.
    Any two of them must be equal, disjoint or nested (ordered type), index
    must be finite exactly between sets of equal level (properly suspended)
    and the level must not depend on the translate (rigid).
    '''
    elevation = None
    q = None

    @abstractmethod
    def compare(self, first, second):
        '''Return the Trichotomy of the two sets.'''

    @abstractmethod
    def level(self, cell):
        '''The level, an ExpVec of arity e.'''

    @abstractmethod
    def base_measure(self, cell):
        '''The measure of a single distinguished set.'''

    @abstractmethod
    def index_exponent(self, inner, outer):
        '''k with |outer : inner| = q^k, for nested sets of equal level.'''

    @abstractmethod
    def translate(self, g, cell):
        '''The image of `cell` under the group element `g`.'''

    @abstractmethod
    def sort_key(self, cell):
        '''A deterministic key ordering the sets of the family.'''

    @abstractmethod
    def split(self, cell, target_head):
        '''The disjoint same-level translates of index head `target_head`
        tiling `cell`.'''

    @abstractmethod
    def parent(self, cell):
        '''The same-level set one index step larger, or None.'''

    @abstractmethod
    def member(self, x, cell):
        '''Point membership of the group element `x`.'''

    @abstractmethod
    def sample_points(self, cell):
        '''Iterate over points of `cell`, its representative first.'''

    @abstractmethod
    def nearby_points(self, cell):
        '''Iterate over points outside `cell` whose distance to it has a
        tail at least the level of `cell`.'''

    @abstractmethod
    def distinguished(self, head, tail):
        '''The subgroup member with index (head, *tail).'''

    @abstractmethod
    def format_cell(self, cell):
        '''Expression text of `cell`.'''

    def format_point(self, x):
        return '%s' % x

    def contains(self, outer, inner):
        '''True when `inner` is a subset of `outer`.'''
        return self.compare(inner, outer) in (Trichotomy.EQUAL,
                                              Trichotomy.FIRST_INSIDE_SECOND)


class Node(object):
    '''A forest node: the points of `cell` outside the children belong to the
    set when `included` is True.'''
    __slots__ = ('cell', 'included', 'children')

    def __init__(self, cell, included=True, children=()):
        self.cell = cell
        self.included = included
        self.children = tuple(children)

    def __repr__(self):
        return f"<Node {'+' if self.included else '-'}{self.cell!r} " \
               f"({len(self.children)} children)>"


class _OverlayNode(object):
    '''Node of the laminar tree built from tagged shells.'''
    __slots__ = ('cell', 'tags', 'children')

    def __init__(self, cell, tags):
        self.cell = cell
        self.tags = dict(tags)
        self.children = []


def _insert(family, siblings, cell, tags):
    '''Place `cell` in the laminar tree by trichotomy against `siblings`.'''
    inside = []
    for sibling in siblings:
        relation = family.compare(cell, sibling.cell)
        if relation is Trichotomy.EQUAL:
            sibling.tags.update(tags)
            return
        if relation is Trichotomy.FIRST_INSIDE_SECOND:
            _insert(family, sibling.children, cell, tags)
            return
        if relation is Trichotomy.SECOND_INSIDE_FIRST:
            inside.append(sibling)
    node = _OverlayNode(cell, tags)
    node.children = inside
    siblings[:] = [s for s in siblings
                   if not any(s is t for t in inside)] + [node]


def _overlay(family, tagged):
    '''Laminar tree of `(cell, source, flag)` shells, equal cells merged.'''
    roots = []
    for cell, source, flag in tagged:
        _insert(family, roots, cell, {source: flag})
    return roots


def _regions(nodes, state, combine):
    '''Flag every overlay node by whether its own region is in the result.

    A region belongs to a source when the nearest tagged ancestor-or-self
    for that source is flagged.
    '''
    result = []
    for node in nodes:
        inner = dict(state)
        inner.update(node.tags)
        result.append(Node(node.cell, combine(inner),
                           _regions(node.children, inner, combine)))
    return result


def _alternate(nodes, outer):
    '''Drop nodes repeating the flag of their nearest kept ancestor.'''
    result = []
    for node in nodes:
        children = _alternate(node.children, node.included)
        if node.included == outer:
            result.extend(children)
        else:
            result.append(Node(node.cell, node.included, children))
    return result


def _sorted(family, nodes):
    return sorted(nodes, key=lambda node: family.sort_key(node.cell))


def _merge_siblings(family, nodes):
    '''Replace every complete set of immediate sub-cells of a parent by the
    parent. Return the new list, or None when nothing merged.'''
    groups = []
    for node in nodes:
        parent = family.parent(node.cell)
        if parent is None:
            continue
        for group_parent, members in groups:
            if family.compare(parent, group_parent) is Trichotomy.EQUAL:
                members.append(node)
                break
        else:
            groups.append((parent, [node]))
    for parent, members in groups:
        count = family.q ** family.index_exponent(members[0].cell, parent)
        if len(members) == count:
            LOGGER.info(f"merge {count} cells into {parent!r}")
            children = [child for member in members
                        for child in member.children]
            merged = Node(parent, members[0].included,
                          _sorted(family, children))
            return [node for node in nodes
                    if not any(node is m for m in members)] + [merged]
    return None


def _cancel_twins(family, nodes):
    '''Remove B with its equal child B, promoting the grandchildren. Return
    the new list, or None when nothing cancelled.'''
    for position, node in enumerate(nodes):
        for child in node.children:
            if family.compare(child.cell, node.cell) is Trichotomy.EQUAL:
                return (list(nodes[:position]) + list(child.children) +
                        list(nodes[position + 1:]))
    return None


def _simplify(family, nodes):
    '''Merge and cancel bottom-up to a fixed point, then sort.'''
    nodes = [Node(node.cell, node.included,
                  _simplify(family, node.children)) for node in nodes]
    while True:
        changed = _cancel_twins(family, nodes)
        if changed is None:
            changed = _merge_siblings(family, nodes)
        if changed is None:
            break
        nodes = changed
    return _sorted(family, nodes)


def _resort(family, nodes):
    return _sorted(family, [Node(node.cell, node.included,
                                 _resort(family, node.children))
                            for node in nodes])


def _union(state):
    return state.get('a', False) or state.get('b', False)


def _intersection(state):
    return state.get('a', False) and state.get('b', False)


def _difference(state):
    return state.get('a', False) and not state.get('b', False)


def _shells(state):
    return state.get('big', False) and not state.get('small', False)


class LevelStatus(Enum):
    UNIFORM = 'uniform'
    NOT_UNIFORM = 'not uniform'
    EMPTY = 'empty'


UniformLevel = namedtuple('UniformLevel', 'status level witness')


class ClassKind(Enum):
    '''Levelled sets, or one of the levelless types.'''
    LEVELLED = 'level'
    TYPE_S = 'type S'
    TYPE_L = 'type L'
    TYPE_E = 'type E'


Classification = namedtuple('Classification', 'kind level')


class CellTree(object):
    '''Laminar nodes over a family; each node flags whether the points of
    its cell outside its children belong to the set.'''

    def __init__(self, family, roots=()):
        self.family = family
        self.roots = tuple(roots)

    def walk(self):
        '''Yield (node, parent) pairs depth first; roots have parent None.'''
        stack = [(node, None) for node in reversed(self.roots)]
        while stack:
            node, parent = stack.pop()
            yield node, parent
            stack.extend((child, node) for child in reversed(node.children))

    def nodes(self):
        return [node for node, _ in self.walk()]

    def cells(self):
        return [node.cell for node in self.nodes()]

    def count(self):
        return len(self.nodes())

    def contains(self, x):
        '''Point membership of the group element `x`.'''
        nodes, inside = self.roots, False
        while True:
            for node in nodes:
                if self.family.member(x, node.cell):
                    nodes, inside = node.children, node.included
                    break
            else:
                return inside

    def measure(self):
        '''Sum over nodes of the measure of each included region.

        On canonical forests this is the alternating sum of the base
        measures of all cells.
        '''
        total = MeasureValue.zero(self.family.elevation)
        for node in self.nodes():
            if not node.included:
                continue
            total = total + self.family.base_measure(node.cell)
            for child in node.children:
                total = total - self.family.base_measure(child.cell)
        return total


class Refinement(CellTree):
    '''A common presentation of one set by two forests.

    Every cell of either forest is a node, so flags need not alternate and
    roots may be excluded.
    '''

    def __repr__(self):
        return f"<Refinement of {self.count()} cells>"


class DddForest(CellTree):
    '''A ddd-set presented as a forest of distinguished sets.

    Roots are disjoint and included, children lie strictly inside their
    parent, siblings are disjoint and sorted, and flags alternate. Sets are
    built by `from_shells` and the ring operations, which always return
    canonical forests.

    :param family: The DistinguishedFamily of the cells.
    :param roots: The root nodes.
    '''

    @classmethod
    def empty(cls, family):
        return cls(family)

    @classmethod
    def from_cell(cls, family, cell):
        return cls(family, [Node(cell, True)])

    @classmethod
    def from_shells(cls, family, big, small=()):
        '''The canonical forest of the union of `big` minus the union of
        `small`; each small shell must lie in some big shell.'''
        big = list(big)
        small = list(small)
        for shell in small:
            if not any(family.contains(outer, shell) for outer in big):
                LOGGER.error(f"small shell {shell!r} outside big shells")
                raise ContainmentError(f"small shell "
                                       f"{family.format_cell(shell)} is not "
                                       f"inside any big shell")
        tagged = [(cell, 'big', True) for cell in big] + \
                 [(cell, 'small', True) for cell in small]
        forest = cls._build(family, tagged, _shells)
        LOGGER.info(f"canonical forest of {len(big)} big and {len(small)} "
                    f"small shells has {forest.count()} nodes")
        return forest

    @classmethod
    def _build(cls, family, tagged, combine):
        regions = _regions(_overlay(family, tagged), {}, combine)
        return cls(family, _simplify(family, _alternate(regions, False)))

    def _tagged(self, source):
        return [(node.cell, source, node.included) for node in self.nodes()]

    def _combine(self, other, combine):
        if other.family != self.family:
            raise UsageError(f"family mismatch: {self.family} vs "
                             f"{other.family}")
        return self._build(self.family,
                           self._tagged('a') + other._tagged('b'), combine)

    def union(self, other):
        return self._combine(other, _union)

    def intersect(self, other):
        return self._combine(other, _intersection)

    def difference(self, other):
        return self._combine(other, _difference)

    __or__ = union
    __and__ = intersect
    __sub__ = difference

    def is_empty(self):
        return not self.roots

    def __bool__(self):
        return bool(self.roots)

    def __eq__(self, other):
        if not isinstance(other, DddForest):
            return NotImplemented
        return (self - other).is_empty() and (other - self).is_empty()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def level(self):
        '''The level of the set, or None for the empty set.'''
        levels = [self.family.level(node.cell) for node in self.nodes()
                  if node.included]
        if not levels:
            return None
        return min(levels)

    def uniform_level(self):
        '''Decide whether every point has a distinguished neighbourhood of
        the set's level inside the set.

        In a canonical forest the obstructed points are those of an
        included cell of higher level, and those near an excluded cell of
        higher level. A witness point is searched for when the level is not
        uniform; it is None when the search gives up.
        '''
        gamma = self.level()
        if gamma is None:
            return UniformLevel(LevelStatus.EMPTY, None, None)
        for node, parent in self.walk():
            if self.family.level(node.cell) <= gamma:
                continue
            if node.included:
                witness = self._witness(self.family.sample_points(node.cell),
                                        node)
            else:
                witness = self._witness(
                    self.family.nearby_points(node.cell), parent)
            return UniformLevel(LevelStatus.NOT_UNIFORM, gamma, witness)
        return UniformLevel(LevelStatus.UNIFORM, gamma, None)

    def _witness(self, points, region):
        for point in islice(points, WITNESS_ATTEMPTS):
            if not self.family.member(point, region.cell):
                continue
            if any(self.family.member(point, child.cell)
                   for child in region.children):
                continue
            return point
        LOGGER.info(f"no witness found near {region.cell!r}")
        return None

    def classify(self):
        level = self.level()
        if level is None:
            return Classification(ClassKind.TYPE_S, None)
        return Classification(ClassKind.LEVELLED, level)

    def translate(self, g):
        '''The image of the set under the family action of `g`.'''
        def image(nodes):
            return [Node(self.family.translate(g, node.cell), node.included,
                         image(node.children)) for node in nodes]
        return DddForest(self.family, _resort(self.family, image(self.roots)))

    def format(self):
        '''Expression text, re-readable by the parser.'''
        if not self.roots:
            return 'empty'
        return ' | '.join(self._format_node(node) for node in self.roots)

    def _format_node(self, node):
        text = self.family.format_cell(node.cell)
        if not node.children:
            return text
        inner = ' | '.join(self._format_node(c) for c in node.children)
        if len(node.children) > 1 or node.children[0].children:
            inner = '(%s)' % inner
        return '%s \\ %s' % (text, inner)

    def __repr__(self):
        return f"<DddForest {self.format()}>"


def refine_common(first, second):
    '''A Refinement presenting the common set of both forests by the cells
    of either.'''
    if not (first - second).is_empty() or not (second - first).is_empty():
        LOGGER.error('refinement of different sets requested')
        raise InputsNotEqualError()
    family = first.family
    tagged = first._tagged('a') + second._tagged('b')
    regions = _regions(_overlay(family, tagged), {},
                       lambda state: state.get('a', False))
    refinement = Refinement(family, _resort(family, regions))
    LOGGER.info(f"common refinement has {refinement.count()} nodes")
    return refinement


class Index(namedtuple('Index', 'q exponent')):
    '''|outer : inner| = q^exponent, or infinite when exponent is None.'''

    @property
    def finite(self):
        return self.exponent is not None

    @property
    def value(self):
        if self.exponent is None:
            return None
        return self.q ** self.exponent

    def __str__(self):
        if self.exponent is None:
            return 'infinite'
        return 'q^%d = %d' % (self.exponent, self.value)


def index(family, inner, outer):
    '''The index of `inner` in `outer`: finite exactly for equal levels.'''
    if not family.contains(outer, inner):
        LOGGER.error(f"{inner!r} not inside {outer!r}")
        raise ContainmentError(f"{family.format_cell(inner)} is not inside "
                               f"{family.format_cell(outer)}")
    if family.level(inner) != family.level(outer):
        return Index(family.q, None)
    return Index(family.q, family.index_exponent(inner, outer))


def check_compatible(family, sample):
    '''Check that index exponents do not depend on the level.

    :param family: A DistinguishedFamily.
    :param sample: Pairs `((inner_head, outer_head), gammas)`; each level
        gamma gives the subgroups with indices (head, *gamma).
    '''
    rows = ListDict()
    violations = []
    for (inner_head, outer_head), gammas in sample:
        exponents = set()
        for gamma in gammas:
            inner = family.distinguished(inner_head, gamma)
            outer = family.distinguished(outer_head, gamma)
            result = index(family, inner, outer)
            ratio = family.base_measure(inner) * (result.value or 0)
            ratio_ok = result.finite and family.base_measure(outer) == ratio
            rows.append(Dict([('pair', [inner_head, outer_head]),
                              ('gamma', list(gamma)),
                              ('exponent', result.exponent),
                              ('ratio_ok', ratio_ok)]))
            exponents.add(result.exponent)
            if not ratio_ok:
                violations.append(f"measure ratio of {inner_head} in "
                                  f"{outer_head} at {tuple(gamma)} is not "
                                  f"{result}")
        if len(exponents) > 1:
            violations.append(f"index exponent of {inner_head} in "
                              f"{outer_head} varies: {sorted(exponents)}")
    report = Dict()
    report['family'] = '%s' % family
    report['rows'] = rows
    report['violations'] = violations
    report['passed'] = not violations
    return report
