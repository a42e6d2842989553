""" Exact univariate polynomial arithmetic over the rationals.

A `RatPoly` is an immutable polynomial in `t` holding its coefficients as
`fractions.Fraction` in ascending degree. Products, powers, division, gcds and
squarefree parts are delegated to sympy's dense univariate kernel over QQ.

Text format: sparse `c*t^e` terms joined by `+`/`-`, e.g. `t^2+t+1` or
`-3/2*t^3+t-1`. The `*` between a coefficient and `t` is optional on input.
"""
import re
from collections import namedtuple
from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.densearith import (dup_add, dup_sub, dup_neg, dup_mul,
                                    dup_pow, dup_div)
from sympy.polys.densetools import dup_eval, dup_monic
from sympy.polys.euclidtools import dup_gcd, dup_lcm
from sympy.polys.sqfreetools import dup_sqf_part
from sympy.polys.polyerrors import ExactQuotientFailed

from .errors import (ParseError, PreconditionError, StructuralFailure,
                     UndefinedGcdError)
from .utils import factor_refinement, valuation

import logging
log = logging.getLogger(__name__)

_RATIONAL = re.compile(r"\s*([+-]?)\s*(\d+)(?:\s*/\s*(\d+))?\s*$")

_TERM = re.compile(r"""
    \s*(?P<sign>[+-])?\s*
    (?P<num>\d+)?(?:\s*/\s*(?P<den>\d+))?\s*
    (?P<star>\*)?\s*
    (?P<var>t)?
    (?:\s*(?P<caret>\^)\s*(?P<exp>\d+)?)?\s*
    """, re.VERBOSE)


def parse_rational(text, parameter=None):
    """ Parse `p`, `-p` or `p/q` into a Fraction """
    match = _RATIONAL.match(text)
    if not match:
        raise ParseError("expected a rational number p/q", text, 0, parameter)
    sign, num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ParseError("zero denominator", text, match.start(3), parameter)
    value = Fraction(int(num), int(den or 1))
    return -value if sign == '-' else value


def _torational(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"Can not use {type(value).__name__} as an exact "
                    "rational coefficient")


class RatPoly(object):
    """ Univariate polynomial with exact rational coefficients
    Args:
        coeffs (iterable): coefficients in ascending degree; ints, Fractions
                           or 'p/q' strings. Trailing zeros are dropped, so
                           the zero polynomial has no coefficients.
    """
    __slots__ = ('coeffs',)
    variable = 't'

    def __init__(self, coeffs=()):
        coeffs = [_torational(c) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, value):
        return cls((value,))

    # conversion to and from sympy's dense representation (descending, QQ)
    def _rep(self):
        return [QQ(c.numerator, c.denominator) for c in reversed(self.coeffs)]

    @classmethod
    def _fromrep(cls, rep):
        return cls(Fraction(int(QQ.numer(c)), int(QQ.denom(c)))
                   for c in reversed(rep))

    @property
    def degree(self):
        """ Degree of the polynomial; -1 for the zero polynomial """
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def iszero(self):
        return not self.coeffs

    def isconstant(self):
        return self.degree <= 0

    def ismonic(self):
        return self.leading == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        #constants hash like the numbers they compare equal to
        if self.isconstant():
            return hash(self.leading)
        return hash(self.coeffs)

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return cls.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._fromrep(dup_add(self._rep(), other._rep(), QQ))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._fromrep(dup_sub(self._rep(), other._rep(), QQ))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return self._fromrep(dup_neg(self._rep(), QQ))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._fromrep(dup_mul(self._rep(), other._rep(), QQ))

    __rmul__ = __mul__

    def __pow__(self, k):
        return poly_pow(self, k)

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        q, r = dup_div(self._rep(), other._rep(), QQ)
        return self._fromrep(q), self._fromrep(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other):
        """ Exact quotient self / other; raises sympy's ExactQuotientFailed
        if other does not divide self
        """
        q, r = divmod(self, other)
        if r:
            raise ExactQuotientFailed(self, other)
        return q

    def divides(self, other):
        """ True if self | other """
        if not self:
            return not other
        return not (other % self)

    def monic(self):
        if not self:
            return self
        return self._fromrep(dup_monic(self._rep(), QQ))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"RatPoly('{self}')"


T = RatPoly((0, 1))
ONE = RatPoly((1,))
ZERO = RatPoly()


def format_poly(f):
    """ Canonical text form: descending degree, unit coefficients omitted """
    if not f:
        return '0'
    terms = []
    for exponent in range(f.degree, -1, -1):
        c = f.coeffs[exponent]
        if not c:
            continue
        magnitude = abs(c)
        if exponent == 0:
            body = str(magnitude)
        else:
            mono = f.variable if exponent == 1 else f"{f.variable}^{exponent}"
            body = mono if magnitude == 1 else f"{magnitude}*{mono}"
        if c < 0:
            terms.append('-' + body)
        else:
            terms.append(('+' if terms else '') + body)
    return ''.join(terms)


def parse_poly(text, parameter=None):
    """ Parse the sparse text format into a RatPoly
    Raises:
        ParseError: with the offending position
    """
    if not text or not text.strip():
        raise ParseError("empty polynomial", text or '', 0, parameter)
    coeffs = {}
    pos = 0
    while pos < len(text):
        match = _TERM.match(text, pos)
        start = len(text) - len(text[pos:].lstrip())
        sign, num, den, star, var, caret, exp = match.group(
            'sign', 'num', 'den', 'star', 'var', 'caret', 'exp')
        if pos and sign is None:
            raise ParseError("expected '+' or '-'", text, start, parameter)
        if num is None and var is None:
            raise ParseError("expected a coefficient or 't'", text,
                             match.end('sign') if sign else start, parameter)
        if caret and exp is None:
            raise ParseError("exponent expected", text, match.start('caret'),
                             parameter)
        if den is not None and num is None:
            raise ParseError("denominator without numerator", text,
                             match.start('den'), parameter)
        if den is not None and int(den) == 0:
            raise ParseError("zero denominator", text, match.start('den'),
                             parameter)
        if star and (num is None or var is None):
            raise ParseError("'*' must join a coefficient and t", text,
                             match.start('star'), parameter)
        if exp is not None and var is None:
            raise ParseError("exponent without t", text, match.start('exp'),
                             parameter)
        coeff = Fraction(int(num), int(den or 1)) if num is not None else 1
        if sign == '-':
            coeff = -coeff
        exponent = (int(exp) if exp is not None else 1) if var else 0
        coeffs[exponent] = coeffs.get(exponent, 0) + coeff
        pos = match.end()
    degree = max(coeffs)
    return RatPoly(coeffs.get(e, 0) for e in range(degree + 1))


def poly_gcd(f, g):
    """ Monic greatest common divisor of f and g
    Raises:
        UndefinedGcdError: if both are zero
    """
    if not f and not g:
        raise UndefinedGcdError("gcd of two zero polynomials is undefined")
    h = RatPoly._fromrep(dup_gcd(f._rep(), g._rep(), QQ))
    return h.monic()


def poly_lcm(f, g):
    """ Monic least common multiple; lcm with zero is zero """
    if not f or not g:
        return ZERO
    return RatPoly._fromrep(dup_lcm(f._rep(), g._rep(), QQ)).monic()


def poly_pow(f, k):
    """ Exact k-th power, k >= 0 """
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise PreconditionError(f"exponent must be a nonnegative integer, "
                                f"got {k!r}", 'k')
    return RatPoly._fromrep(dup_pow(f._rep(), k, QQ))


def poly_eval(f, x):
    """ Exact value of f at the rational x """
    x = _torational(x)
    value = dup_eval(f._rep(), QQ(x.numerator, x.denominator), QQ)
    return Fraction(int(QQ.numer(value)), int(QQ.denom(value)))


def squarefree_part(f):
    """ Monic product of the distinct irreducible factors of f """
    if not f:
        raise UndefinedGcdError("squarefree part of the zero polynomial")
    return RatPoly._fromrep(dup_sqf_part(f._rep(), QQ)).monic()


class CoprimeBasis(namedtuple('CoprimeBasis',
                              ('basis', 'exponents', 'constants'))):
    """ Pairwise coprime monic basis with, for each input, its exponent
    sequence over the basis and its constant factor
    """
    __slots__ = ()

    def reconstruct(self, index):
        """ Rebuild input `index` from basis, exponents and constant """
        result = RatPoly.constant(self.constants[index])
        for b, e in zip(self.basis, self.exponents[index]):
            result = result * b**e
        return result


def coprime_basis(inputs):
    """ Factor refinement of `inputs` into a coprime basis (no irreducible
    factorization is attempted)
    Args:
        inputs (list): nonzero, non-constant RatPolys
    Returns:
        CoprimeBasis
    """
    inputs = list(inputs)
    for index, f in enumerate(inputs):
        if f.isconstant():
            raise PreconditionError(f"input {index} ({f}) is constant",
                                    'inputs')
    basis = factor_refinement([f.monic() for f in inputs], poly_gcd,
                              RatPoly.exquo, RatPoly.isconstant)
    exponents, constants = [], []
    for f in inputs:
        rest, exps = f, []
        for b in basis:
            e, rest = valuation(rest, b, divmod)
            exps.append(e)
        if not rest.isconstant():
            raise StructuralFailure(f"{f} is not a product of the refined "
                                    "basis")
        exponents.append(tuple(exps))
        constants.append(rest.leading)
    return CoprimeBasis(tuple(basis), tuple(exponents), tuple(constants))
