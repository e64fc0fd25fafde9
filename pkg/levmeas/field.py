# -*- coding: utf-8 -*-
'''
    levmeas.field
    -------------

    Elements of F = F_p((t1))...((tn)) with finite support, and truncated
    elements known modulo an ideal {v >= prec}.

    :copyright: Copyright 2026 levmeas contributors, see AUTHORS.
    :license: GNU GPL v3.

'''
from .exceptions import DivisionByZeroError, PrecisionError, UsageError
from .expvec import ExpVec, INF
from .logger import LOGGER
from .utils import cached_property


class FieldElement(object):
    '''A finite F_p-linear combination of monomials t^a, a in Z^n.

    :param coeffs: A mapping (or iterable of pairs) from exponents to integer
        coefficients, reduced modulo `p`.
    :param p: The prime modulus.
    :param n: The number of local parameters.
    '''

    def __init__(self, coeffs, p, n):
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        normalized = {}
        for exponent, coeff in items:
            exponent = ExpVec(exponent)
            if len(exponent) != n:
                raise UsageError(f"exponent {exponent} does not have arity "
                                 f"{n}")
            coeff = (normalized.get(exponent, 0) + coeff) % p
            if coeff:
                normalized[exponent] = coeff
            else:
                normalized.pop(exponent, None)
        self._coeffs = normalized
        self.p = p
        self.n = n

    @classmethod
    def zero(cls, p, n):
        return cls((), p, n)

    @classmethod
    def constant(cls, value, p, n):
        return cls([(ExpVec.zero(n), value)], p, n)

    @classmethod
    def one(cls, p, n):
        return cls.constant(1, p, n)

    @classmethod
    def monomial(cls, coeff, exponent, p):
        exponent = ExpVec(exponent)
        return cls([(exponent, coeff)], p, len(exponent))

    @classmethod
    def parameter(cls, k, p, n):
        '''The local parameter t_k, 1 <= k <= n.'''
        return cls.monomial(1, ExpVec.unit(n, k - 1), p)

    @property
    def coeffs(self):
        '''Pairs (exponent, coefficient) in ascending exponent order.'''
        return tuple(sorted(self._coeffs.items()))

    def coefficient(self, exponent):
        return self._coeffs.get(ExpVec(exponent), 0)

    @cached_property
    def valuation(self):
        '''Minimal exponent of the support; INF for zero.'''
        if not self._coeffs:
            return INF
        return min(self._coeffs)

    def leading_term(self):
        '''(coefficient, exponent) at the valuation.'''
        exponent = self.valuation
        if exponent is INF:
            raise DivisionByZeroError('zero has no leading term')
        return self._coeffs[exponent], exponent

    def truncate(self, prec):
        '''Drop every monomial of exponent >= prec.'''
        if prec is INF:
            return self
        return FieldElement([(e, c) for e, c in self._coeffs.items()
                             if e < prec], self.p, self.n)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.p != self.p or other.n != self.n:
                raise UsageError(f"field mismatch: F_{self.p} in {self.n} "
                                 f"variables vs F_{other.p} in {other.n}")
            return other
        if isinstance(other, int):
            return FieldElement.constant(other, self.p, self.n)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(list(self._coeffs.items()) +
                            list(other._coeffs.items()), self.p, self.n)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement([(e, -c) for e, c in self._coeffs.items()],
                            self.p, self.n)

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
        products = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                exponent = e1 + e2
                products[exponent] = (products.get(exponent, 0) + c1 * c2)
        return FieldElement(products, self.p, self.n)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            if len(self._coeffs) != 1:
                raise UsageError('negative powers only for monomials')
            (e, c), = self._coeffs.items()
            inverse = pow(c, self.p - 2, self.p)
            return FieldElement.monomial(inverse, -e, self.p) ** -exponent
        result = FieldElement.one(self.p, self.n)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.p, self.n, frozenset(self._coeffs.items())))

    def __bool__(self):
        return bool(self._coeffs)

    def invert(self, prec):
        return fe_invert(self, prec)

    def sort_key(self):
        return tuple((e.key(), c) for e, c in self.coeffs)

    def format(self):
        '''Render as `1 + 2*t1^-1*t2`, ascending exponents, `0` for zero.'''
        if not self._coeffs:
            return '0'
        terms = []
        for exponent, coeff in self.coeffs:
            factors = []
            for position, a in enumerate(exponent):
                if a == 1:
                    factors.append('t%d' % (position + 1))
                elif a:
                    factors.append('t%d^%d' % (position + 1, a))
            if not factors:
                terms.append('%d' % coeff)
            elif coeff == 1:
                terms.append('*'.join(factors))
            else:
                terms.append('%d*%s' % (coeff, '*'.join(factors)))
        return ' + '.join(terms)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"<FieldElement {self.format()} (p={self.p})>"


class PrecisionElement(object):
    '''A field element known modulo the ideal {v >= prec}.

    Stored monomials all lie below `prec`; an exact element has prec INF.
    Sums keep the smaller precision, and a product of x (prec P) and y
    (prec Q) is known to min(P + v(y), Q + v(x)).
    '''

    def __init__(self, value, prec=INF):
        self.value = value.truncate(prec)
        self.prec = prec

    @classmethod
    def exact(cls, value):
        return cls(value, INF)

    @property
    def p(self):
        return self.value.p

    @property
    def n(self):
        return self.value.n

    def _coerce(self, other):
        if isinstance(other, PrecisionElement):
            return other
        if isinstance(other, (FieldElement, int)):
            return PrecisionElement.exact(self.value._coerce(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PrecisionElement(self.value + other.value,
                                min(self.prec, other.prec))

    __radd__ = __add__

    def __neg__(self):
        return PrecisionElement(-self.value, self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        bounds = []
        if self.prec is not INF and other.value:
            bounds.append(self.prec + other.value.valuation)
        if other.prec is not INF and self.value:
            bounds.append(other.prec + self.value.valuation)
        if self.prec is not INF and other.prec is not INF and \
                not (self.value and other.value):
            # a zero factor known only to its precision
            bounds.append(self.prec + other.prec)
        prec = min(bounds) if bounds else INF
        return PrecisionElement(self.value * other.value, prec)

    __rmul__ = __mul__

    def __repr__(self):
        return f"<PrecisionElement {self.value.format()} mod {self.prec}>"


def _steps_to_reach(w, prec):
    '''Least N >= 1 with N*w >= prec for w > 0, or None if there is none.'''
    top = max(i for i, a in enumerate(w) if a)
    for i in reversed(range(top + 1, len(w))):
        if prec[i] > 0:
            return None
        if prec[i] < 0:
            return 1
    steps = max(1, -(-prec[top] // w[top]))
    while steps * w < prec:
        steps += 1
    return steps


def fe_invert(x, prec):
    '''Invert `x` so that x*y = 1 modulo {v >= prec}.

    Writes x = c t^v (1 + u) with v(u) > 0 and sums the geometric series in
    -u until its tail vanishes modulo `prec`. The result is known modulo
    {v >= prec - v(x)}; a monomial inverts exactly.

    :param x: A nonzero FieldElement.
    :param prec: An ExpVec, the target precision of x*y - 1.
    '''
    if not x:
        raise DivisionByZeroError('zero is not invertible')
    coeff, exponent = x.leading_term()
    leading_inverse = FieldElement.monomial(pow(coeff, x.p - 2, x.p),
                                            -exponent, x.p)
    u = x * leading_inverse - 1
    if not u:
        return PrecisionElement.exact(leading_inverse)
    if prec is INF:
        raise PrecisionError(f"inverse of {x} is an infinite series")
    steps = _steps_to_reach(u.valuation, prec)
    if steps is None:
        LOGGER.error(f"powers of {u} never reach precision {prec}")
        raise PrecisionError(f"inverse of {x} modulo t^{prec} O needs an "
                             f"infinite series in lower parameters")
    series = FieldElement.one(x.p, x.n)
    power = series
    for _ in range(1, steps):
        power = (power * -u).truncate(prec)
        series = series + power
    return PrecisionElement(series * leading_inverse, prec - exponent)
