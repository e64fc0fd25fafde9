# -*- coding: utf-8 -*-
'''
    levmeas.matrix
    --------------

    The groups GL_m(F) and SL_m(F) with the partial level structure
    K_idx = I + t^idx M_m(O_F), idx > 0, their measures, and enumeration
    oracles over F_p[t1]/(t1^j).

    :copyright: Copyright 2026 levmeas contributors, see AUTHORS.
    :license: GNU GPL v3.

'''
from fractions import Fraction
from functools import reduce
from itertools import count, product

from .exceptions import (DomainError, GuardError, SingularMatrixError,
                         UsageError)
from .expvec import ExpVec, INF
from .field import FieldElement, PrecisionElement, fe_invert
from .forest import DistinguishedFamily, Trichotomy
from .logger import LOGGER
from .measure import MeasureValue
from .utils import MAX_CANDIDATES, Dict, cached_property, is_prime


def identity(m, p, n):
    one = FieldElement.one(p, n)
    zero = FieldElement.zero(p, n)
    return tuple(tuple(one if i == j else zero for j in range(m))
                 for i in range(m))


def as_matrix(rows, p, n):
    '''Coerce nested rows of integers or FieldElements to a matrix.'''
    return tuple(tuple(entry if isinstance(entry, FieldElement)
                       else FieldElement.constant(entry, p, n)
                       for entry in row) for row in rows)


def mat_mul(a, b):
    size = len(b)
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(1, size)),
                           a[i][0] * b[0][j])
                       for j in range(len(b[0]))) for i in range(len(a)))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(row_a, row_b))
                 for row_a, row_b in zip(a, b))


def _minor(a, row, column):
    return tuple(tuple(entry for j, entry in enumerate(r) if j != column)
                 for i, r in enumerate(a) if i != row)


def determinant(a):
    '''Laplace expansion along the first row; entries need only be a ring.'''
    if len(a) == 1:
        return a[0][0]
    total = None
    for column, entry in enumerate(a[0]):
        term = entry * determinant(_minor(a, 0, column))
        if column % 2:
            term = -term
        total = term if total is None else total + term
    return total


def adjugate(a):
    '''The transposed cofactor matrix, so that a * adj(a) = det(a) I.'''
    size = len(a)
    if size == 1:
        return ((a[0][0] ** 0,),)
    cofactors = [[None] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            minor = determinant(_minor(a, i, j))
            cofactors[j][i] = -minor if (i + j) % 2 else minor
    return tuple(tuple(row) for row in cofactors)


def mat_valuation(a):
    '''Minimal valuation of the entries; INF for the zero matrix.'''
    return min((entry.valuation for row in a for entry in row), default=INF)


def mat_inverse_to_precision(g, prec):
    '''h with g h = I modulo t^prec M_m(O_F), as PrecisionElements.

    h = adj(g) / det(g); the determinant is inverted to `prec`, so entry
    (i, j) is known modulo t^(prec - v(det g) + v(adj_ij)).
    '''
    det = determinant(g)
    if not det:
        raise SingularMatrixError()
    inverse_det = fe_invert(det, prec)
    return tuple(tuple(PrecisionElement.exact(entry) * inverse_det
                       for entry in row) for row in adjugate(g))


def gl_order(m, q):
    '''|GL_m(F_q)| by the product formula.'''
    order = q ** (m * (m - 1) // 2)
    for k in range(1, m + 1):
        order *= q ** k - 1
    return order


def sl_order(m, q):
    return gl_order(m, q) // (q - 1)


def gl_constant(m, q):
    '''c_m(q) = q^(m(m+1)/2) / prod_k (q^k - 1), so that
    c_m(q) q^(-m^2) = 1 / |GL_m(F_q)|.'''
    denominator = 1
    for k in range(1, m + 1):
        denominator *= q ** k - 1
    return Fraction(q ** (m * (m + 1) // 2), denominator)


def _guard(candidates, what):
    if candidates > MAX_CANDIDATES:
        LOGGER.error(f"{what}: {candidates} candidates exceed the guard")
        raise GuardError(f"{what} needs {candidates} candidates, more than "
                         f"{MAX_CANDIDATES}")


def _count_over_fp(m, p, accept):
    _guard(p ** (m * m), f"enumeration of {m}x{m} matrices over F_{p}")
    found = 0
    for entries in product(range(p), repeat=m * m):
        rows = tuple(entries[i * m:(i + 1) * m] for i in range(m))
        if accept(determinant(rows) % p):
            found += 1
    return found


def count_gl(m, p):
    '''|GL_m(F_p)| by enumeration.'''
    return _count_over_fp(m, p, lambda det: det != 0)


def count_sl(m, p):
    '''|SL_m(F_p)| by enumeration.'''
    return _count_over_fp(m, p, lambda det: det == 1)


class MatCoset(object):
    '''The coset rep K_idx (or K_idx rep for right cosets), intersected with
    SL_m(F) for the SL family.

    Representatives are not canonical: equality of the data is not equality
    of cosets, which the family decides by congruence.
    '''

    def __init__(self, rep, idx):
        self.rep = rep
        self.idx = ExpVec(idx)

    @cached_property
    def det(self):
        return determinant(self.rep)

    @cached_property
    def adjugate(self):
        return adjugate(self.rep)

    @property
    def level(self):
        return self.idx.tail

    def __eq__(self, other):
        if not isinstance(other, MatCoset):
            return NotImplemented
        return self.idx == other.idx and self.rep == other.rep

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.idx, self.rep))

    def __repr__(self):
        rows = '; '.join(', '.join(e.format() for e in row)
                         for row in self.rep)
        return f"<MatCoset [{rows}] K_{self.idx}>"


class MatrixFamily(DistinguishedFamily):
    '''Cosets of the congruence subgroups K_idx of GL_m(F) or SL_m(F).

    :param p: The prime residue characteristic; q = p.
    :param n: The dimension of the local field.
    :param m: The matrix size; GL_1 is the multiplicative group.
    :param kind: `'GL'` or `'SL'`.
    :param side: `'left'` for cosets g K, `'right'` for K g.
    '''

    def __init__(self, p, n, m, kind='GL', side='left'):
        if not is_prime(p):
            raise DomainError(f"p = {p} is not a prime")
        if n < 1 or m < 1:
            raise DomainError(f"dimension {n} and size {m} must be positive")
        if kind not in ('GL', 'SL'):
            raise DomainError(f"unknown group kind {kind!r}")
        if kind == 'SL' and m < 2:
            raise DomainError('SL needs matrix size at least 2')
        if side not in ('left', 'right'):
            raise DomainError(f"unknown coset side {side!r}")
        self.p = self.q = p
        self.n = n
        self.m = m
        self.kind = kind
        self.side = side
        self.elevation = n - 1
        #: index exponent of one step along t1, also the presentation scaling
        self.dimension = m * m if kind == 'GL' else m * m - 1

    def matrix(self, rows):
        rep = as_matrix(rows, self.p, self.n)
        if len(rep) != self.m or any(len(row) != self.m for row in rep):
            raise UsageError(f"expected a {self.m}x{self.m} matrix")
        for row in rep:
            for entry in row:
                if entry.p != self.p or entry.n != self.n:
                    raise UsageError(f"{entry!r} is not in the field of "
                                     f"{self}")
        return rep

    def identity(self):
        return identity(self.m, self.p, self.n)

    def cell(self, rows, idx):
        '''Validated coset; SL representatives need det = 1 modulo t^idx.'''
        rep = self.matrix(rows)
        idx = ExpVec(idx)
        if len(idx) != self.n:
            raise UsageError(f"index {idx} does not have arity {self.n}")
        if not idx.is_positive():
            LOGGER.error(f"K_{idx} requested")
            raise DomainError(f"K_{idx} is only defined for idx > 0")
        cell = MatCoset(rep, idx)
        if not cell.det:
            raise SingularMatrixError()
        if self.kind == 'SL' and not self._unimodular(cell.det, idx):
            raise DomainError(f"determinant {cell.det.format()} is not 1")
        return cell

    def _unimodular(self, det, idx):
        return (det - 1).valuation >= idx

    def _congruent(self, x, cell, idx):
        '''Whether cell.rep^-1 x (or x cell.rep^-1) lies in K_idx, decided
        exactly through adj(rep) x - det(rep) I.'''
        if self.side == 'left':
            twisted = mat_mul(cell.adjugate, x)
        else:
            twisted = mat_mul(x, cell.adjugate)
        scalar = tuple(tuple(entry * cell.det for entry in row)
                       for row in self.identity())
        return mat_valuation(mat_sub(twisted, scalar)) >= \
            idx + cell.det.valuation

    def compare(self, first, second):
        if first.idx >= second.idx:
            if self._congruent(first.rep, second, second.idx):
                if first.idx == second.idx:
                    return Trichotomy.EQUAL
                return Trichotomy.FIRST_INSIDE_SECOND
            return Trichotomy.DISJOINT
        return self.compare(second, first).swapped()

    def member(self, x, cell):
        x = self.matrix(x)
        if self.kind == 'SL' and determinant(x) != 1:
            return False
        return self._congruent(x, cell, cell.idx)

    def level(self, cell):
        return cell.idx.tail

    def _gl_measure(self, size, idx):
        scale = Fraction(self.q) ** (-size * size * idx.head)
        return MeasureValue.monomial(gl_constant(size, self.q) * scale,
                                     idx.tail)

    def gl_base_measure(self, cell):
        '''c_m(q) q^(-m^2 idx_1) Y^tail.'''
        return self._gl_measure(self.m, cell.idx)

    def scalar_base_measure(self, cell):
        '''The measure of the matching subgroup 1 + t^idx O_F of F^x.'''
        return self._gl_measure(1, cell.idx)

    def sl_base_measure(self, cell):
        '''lambda q^(-(m^2-1) idx_1) Y^tail with
        lambda = q^(m^2-1) / |SL_m(F_q)|.

        Derived as the quotient of the GL measure by the scalar measure in
        the presentation Y_k = X_k^(m^2) (GL), X_k (scalars), then read back
        from X_k^(m^2-1).
        '''
        if self.kind != 'SL':
            raise DomainError(f"{self} is not an SL family")
        if not self._unimodular(cell.det, cell.idx):
            LOGGER.error(f"SL measure of {cell!r}")
            raise DomainError(f"determinant {cell.det.format()} is not 1")
        quotient = self.gl_base_measure(cell).scaled(self.m * self.m) / \
            self.scalar_base_measure(cell)
        return quotient.unscaled(self.dimension)

    def base_measure(self, cell):
        if self.kind == 'SL':
            return self.sl_base_measure(cell)
        return self.gl_base_measure(cell)

    def index_exponent(self, inner, outer):
        return self.dimension * (inner.idx.head - outer.idx.head)

    def translate(self, g, cell):
        g = self.matrix(g)
        det = determinant(g)
        if not det:
            raise SingularMatrixError()
        if self.kind == 'SL' and det != 1:
            raise DomainError(f"translation by determinant {det.format()}")
        if self.side == 'left':
            return MatCoset(mat_mul(g, cell.rep), cell.idx)
        return MatCoset(mat_mul(cell.rep, g), cell.idx)

    def sort_key(self, cell):
        return (cell.idx.key(),
                tuple(entry.sort_key() for row in cell.rep for entry in row))

    def _act(self, rep, g):
        if self.side == 'left':
            return mat_mul(rep, g)
        return mat_mul(g, rep)

    def unipotent(self, head, tail, coeffs):
        '''I + sum_a C_a t1^a t^tail for coefficient matrices C_a.'''
        rows = [list(row) for row in self.identity()]
        for a, matrix in enumerate(coeffs, start=head):
            exponent = ExpVec((a,) + tuple(tail))
            for position, c in enumerate(matrix):
                if c:
                    i, j = divmod(position, self.m)
                    rows[i][j] = rows[i][j] + \
                        FieldElement.monomial(c, exponent, self.p)
        return tuple(tuple(row) for row in rows)

    def split(self, cell, target_head):
        '''Sub-cosets of index head `target_head` tiling `cell`.

        SL pieces multiply the representative by matrices of determinant
        exactly 1, so they stay members of their own cosets.
        '''
        depth = target_head - cell.idx.head
        if depth < 0:
            raise UsageError(f"cannot split {cell!r} to head {target_head}")
        _guard(self.q ** (self.dimension * depth), f"split of {cell!r}")
        tail = cell.idx.tail
        idx = ExpVec((target_head,) + tuple(tail))
        if self.kind == 'SL':
            steps = product(*[self._sl_layer(ExpVec((a,) + tuple(tail)))
                              for a in range(cell.idx.head, target_head)])
            return [MatCoset(self._act(cell.rep, reduce(mat_mul, factors,
                                                         self.identity())),
                             idx) for factors in steps]
        matrices = list(product(range(self.p), repeat=self.m * self.m))
        return [MatCoset(self._act(cell.rep, self.unipotent(cell.idx.head,
                                                            tail, coeffs)),
                         idx)
                for coeffs in product(matrices, repeat=depth)]

    def _nilpotent_basis(self):
        '''Square-zero integer matrices spanning the trace-zero matrices:
        E_ij off the diagonal, and E_kk + E_k,k+1 - E_k+1,k - E_k+1,k+1.'''
        basis = []
        for i in range(self.m):
            for j in range(self.m):
                if i != j:
                    basis.append({(i, j): 1})
        for k in range(self.m - 1):
            basis.append({(k, k): 1, (k, k + 1): 1,
                          (k + 1, k): -1, (k + 1, k + 1): -1})
        return basis

    def _sl_layer(self, exponent):
        '''Representatives of determinant 1 for the q^(m^2-1) classes of
        K_exponent modulo the next t1-step: products of I + c t^exponent N.'''
        layer = []
        basis = self._nilpotent_basis()
        for coeffs in product(range(self.p), repeat=len(basis)):
            g = self.identity()
            for c, nilpotent in zip(coeffs, basis):
                if not c:
                    continue
                rows = [list(row) for row in self.identity()]
                for (i, j), entry in nilpotent.items():
                    rows[i][j] = rows[i][j] + \
                        FieldElement.monomial(c * entry, exponent, self.p)
                g = mat_mul(g, tuple(tuple(row) for row in rows))
            layer.append(g)
        return layer

    def parent(self, cell):
        idx = cell.idx - ExpVec.unit(self.n)
        if not idx.is_positive():
            return None
        return MatCoset(cell.rep, idx)

    def _elementary(self, exponent):
        '''Elements I + c t^exponent E_ij of determinant 1 (1 + c t^exponent
        for GL_1).'''
        if self.m == 1:
            return [((FieldElement.one(self.p, self.n) +
                      FieldElement.monomial(c, exponent, self.p),),)
                    for c in range(1, self.p)]
        elements = []
        for i in range(self.m):
            for j in range(self.m):
                if i == j:
                    continue
                for c in range(1, self.p):
                    rows = [list(row) for row in self.identity()]
                    rows[i][j] = FieldElement.monomial(c, exponent, self.p)
                    elements.append(tuple(tuple(row) for row in rows))
        return elements

    def sample_points(self, cell):
        '''The representative, then its products with elementary matrices
        of the cell's subgroup. For SL these are members only when det(rep)
        is exactly 1, which holds for every representative the parser,
        `split`, `parent` and `translate` produce.'''
        yield cell.rep
        for depth in count(0):
            exponent = cell.idx + depth * ExpVec.unit(self.n)
            for g in self._elementary(exponent):
                yield self._act(cell.rep, g)

    def nearby_points(self, cell):
        for depth in count(1):
            exponent = cell.idx - depth * ExpVec.unit(self.n)
            for g in self._elementary(exponent):
                yield self._act(cell.rep, g)

    def distinguished(self, head, tail):
        return self.cell(self.identity(), (head,) + tuple(tail))

    def format_point(self, x):
        return '[%s]' % ', '.join('[%s]' % ', '.join(e.format() for e in row)
                                  for row in x)

    def format_cell(self, cell):
        return 'K(%s; %s)' % (self.format_point(cell.rep),
                              ', '.join('%d' % a for a in cell.idx))

    def __eq__(self, other):
        if not isinstance(other, MatrixFamily):
            return NotImplemented
        return (self.p, self.n, self.m, self.kind, self.side) == \
            (other.p, other.n, other.m, other.kind, other.side)

    def __hash__(self):
        return hash((self.p, self.n, self.m, self.kind, self.side))

    def __str__(self):
        name = '%s:%d' % (self.kind.lower(), self.m)
        return name if self.side == 'left' else name + ' (right)'

    def __repr__(self):
        return f"<MatrixFamily {self} p={self.p} n={self.n}>"


def index_enumeration_oracle(kind, m, p, i, j, progress=None):
    '''|K_(i, gamma) : K_(j, gamma)| by listing matrices over F_p[t1]/(t1^j)
    congruent to I modulo t1^i (of determinant 1 for SL).

    :param progress: Optional callable receiving the candidate number.
    '''
    if not 0 < i <= j:
        raise DomainError(f"need 0 < i <= j, got i = {i}, j = {j}")
    depth = j - i
    _guard(p ** (m * m * depth), f"{kind}_{m} index oracle")
    if depth == 0:
        return 1
    LOGGER.info(f"enumerating {p ** (m * m * depth)} {kind}_{m} candidates")
    family = MatrixFamily(p, 1, m)
    prec = ExpVec((j,))
    found = 0
    matrices = list(product(range(p), repeat=m * m))
    for step, coeffs in enumerate(product(matrices, repeat=depth)):
        if progress is not None:
            progress(step)
        det = determinant(family.unipotent(i, (), coeffs)).truncate(prec)
        if kind == 'GL':
            found += det.coefficient((0,)) != 0
        else:
            found += not (det - 1).truncate(prec)
    LOGGER.info(f"{kind}_{m} index oracle found {found}")
    return found


def snake_index_check(i, j, m, p, progress=None):
    '''Check |G_i : G_j| = |N_i : N_j| |Q_i : Q_j| for scalars N, SL_m and
    GL_m, each factor from its own enumeration.'''
    gl = index_enumeration_oracle('GL', m, p, i, j, progress)
    scalar = index_enumeration_oracle('GL', 1, p, i, j, progress)
    sl = index_enumeration_oracle('SL', m, p, i, j, progress)
    depth = j - i
    report = Dict()
    report['gl'] = gl
    report['scalar'] = scalar
    report['sl'] = sl
    report['expected'] = p ** (m * m * depth)
    report['passed'] = (gl == scalar * sl == report['expected'] and
                        scalar == p ** depth and
                        sl == p ** ((m * m - 1) * depth))
    return report
