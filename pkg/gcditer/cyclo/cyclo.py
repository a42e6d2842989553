""" Arithmetic in Z[zeta_p] on the basis 1, zeta, ..., zeta^(p-2), the
multiplication matrices A(u) and the check that A(u)^k - I is primitive for
every k not divisible by p when u is a non-real unit.

zeta^(p-1) = -1 - zeta - ... - zeta^(p-2) reduces every product to the basis.
"""
import functools
import re
from collections import namedtuple

from sympy import isprime

from ..errors import (ParseError, PreconditionError, StructuralFailure,
                      TheoremViolation)
from ..matgcd.matgcd import content_or_zero
from ..matgcd.matrices import IntMat
from ..utils import chunked, parallel_map, positiveintordie

import logging
log = logging.getLogger(__name__)

_INTEGER = re.compile(r"\s*[+-]?\d+\s*$")


@functools.lru_cache(maxsize=64)
def _checkprime(p):
    if isinstance(p, bool) or not isinstance(p, int):
        raise PreconditionError(f"expected an integer, got {p!r}", 'p')
    if p <= 3 or not isprime(p):
        raise PreconditionError(f"must be a prime > 3, got {p}", 'p')
    return p


def _reduce(p, full):
    """ Basis coefficients of sum full[j]*zeta^j, j = 0..p-1 """
    return [c - full[p-1] for c in full[:p-1]]


class CycloElt(object):
    """ Element of Z[zeta_p]
    Args:
        p (int): odd prime > 3
        coeffs (iterable): p-1 integers, the coefficients of zeta^j for
                           j = 0..p-2
    """
    __slots__ = ('p', 'coeffs')

    def __init__(self, p, coeffs):
        self.p = _checkprime(p)
        coeffs = tuple(coeffs)
        if len(coeffs) != p - 1:
            raise PreconditionError(f"expected {p-1} coefficients, got "
                                    f"{len(coeffs)}", 'coeffs')
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise PreconditionError(f"expected integer coefficients, got "
                                        f"{c!r}", 'coeffs')
        self.coeffs = coeffs

    @classmethod
    def integer(cls, p, n):
        return cls(p, [n] + [0]*(p-2))

    def _check(self, other):
        if not isinstance(other, CycloElt) or other.p != self.p:
            raise PreconditionError(f"can not combine {self!r} and "
                                    f"{other!r}", 'p')

    def __eq__(self, other):
        if not isinstance(other, CycloElt):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __add__(self, other):
        self._check(other)
        return CycloElt(self.p, (a + b for a, b in zip(self.coeffs,
                                                       other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return CycloElt(self.p, (a - b for a, b in zip(self.coeffs,
                                                       other.coeffs)))

    def __neg__(self):
        return CycloElt(self.p, (-a for a in self.coeffs))

    def __mul__(self, other):
        return cyclo_mul(self, other)

    def __pow__(self, k):
        return cyclo_pow(self, k)

    def __str__(self):
        return ','.join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"CycloElt({self.p}, '{self}')"

    @classmethod
    def parse(cls, p, text, parameter='coeffs'):
        """ Parse `c0,c1,...,c_{p-2}` """
        _checkprime(p)
        coeffs, offset = [], 0
        for piece in (text or '').split(','):
            if not _INTEGER.match(piece):
                raise ParseError("expected an integer", text, offset,
                                 parameter)
            coeffs.append(int(piece))
            offset += len(piece) + 1
        if len(coeffs) != p - 1:
            raise ParseError(f"expected {p-1} coefficients for p={p}, got "
                             f"{len(coeffs)}", text, 0, parameter)
        return cls(p, coeffs)


def cyclo_one(p):
    return CycloElt.integer(p, 1)


def zeta_power(p, x):
    """ zeta^x for any integer x """
    _checkprime(p)
    full = [0]*p
    full[x % p] = 1
    return CycloElt(p, _reduce(p, full))


def cyclo_mul(u, v):
    """ Exact product reduced to the basis """
    u._check(v)
    p = u.p
    full = [0]*p
    for i, a in enumerate(u.coeffs):
        if a:
            for j, b in enumerate(v.coeffs):
                full[(i + j) % p] += a*b
    return CycloElt(p, _reduce(p, full))


def cyclo_pow(u, k):
    """ u^k by binary exponentiation, k >= 0 """
    positiveintordie(k, 'k', minimum=0)
    result = cyclo_one(u.p)
    base = u
    while k:
        if k & 1:
            result = cyclo_mul(result, base)
        k >>= 1
        if k:
            base = cyclo_mul(base, base)
    return result


def conj(u):
    """ Complex conjugate, zeta -> zeta^-1 """
    p = u.p
    full = [0]*p
    for j, c in enumerate(u.coeffs):
        full[-j % p] += c
    return CycloElt(p, _reduce(p, full))


def is_real(u):
    return conj(u) == u


def sym_coeffs(u):
    """ alpha with u = sum_{j=1}^{p-1} alpha_j zeta^j, alpha_0 = 0 and
    alpha_j = alpha_{p-j}
    Raises:
        PreconditionError: if u is not real
    """
    if not is_real(u):
        raise PreconditionError(f"{u} is not real", 'u')
    c = u.coeffs
    return (0,) + tuple(c[j] - c[0] for j in range(1, u.p - 1)) + (-c[0],)


def cyclotomic_unit(p, a):
    """ (1 - zeta^a) / (1 - zeta) = 1 + zeta + ... + zeta^(a-1) """
    _checkprime(p)
    if isinstance(a, bool) or not isinstance(a, int) or not 2 <= a <= p - 1:
        raise PreconditionError(f"must be in 2..{p-1}, got {a!r}", 'unit')
    full = [1]*a + [0]*(p - a)
    return CycloElt(p, _reduce(p, full))


def mult_matrix(u):
    """ A(u): column i holds the basis coefficients of u*zeta^i """
    columns = [cyclo_mul(u, zeta_power(u.p, i)).coeffs
               for i in range(u.p - 1)]
    return IntMat(zip(*columns))


def norm_det(u):
    """ Field norm of u as det A(u) """
    return mult_matrix(u).det()


def _checkunit(u):
    norm = norm_det(u)
    if norm not in (1, -1):
        raise PreconditionError(f"{u} is not a unit (norm {norm})", 'u')
    return norm


def zeta_decompose(u):
    """ The x in 0..p-1 with zeta^-x * u real, or None
    Raises:
        PreconditionError: if u is not a unit
    """
    _checkunit(u)
    for x in range(u.p):
        if is_real(cyclo_mul(zeta_power(u.p, -x), u)):
            return x
    return None


def primitivity_witness(p, x, k):
    """ Where A(u)^k - I visibly has coprime entries, for u = zeta^x * (real)
    and k not divisible by p:
    ('equal', j): the zeta^0 and zeta^j coefficients of u^k agree, with
                  j = 2xk mod p, so entries (0,0) and (j,0) differ by 1
    ('vanishing', 0): 2xk = -1 mod p and the zeta^0 coefficient of u^k is 0
    Returns None when p divides xk.
    """
    j = 2*x*k % p
    if j == 0:
        return None
    if j == p - 1:
        return ('vanishing', 0)
    return ('equal', j)


def expansion_coeffs(alpha, x, k):
    """ Basis coefficients alpha_{i-xk} - alpha_{p-1-xk} of
    zeta^(xk) * sum alpha_j zeta^j, indices mod p
    """
    p = len(alpha)
    shift = x*k
    return tuple(alpha[(i - shift) % p] - alpha[(p - 1 - shift) % p]
                 for i in range(p - 1))


def _witness_holds(witness, coeffs):
    kind, j = witness
    if kind == 'vanishing':
        return coeffs[0] == 0
    return coeffs[j] == coeffs[0]


CycReport = namedtuple('CycReport',
                       ('p', 'unit', 'x', 'norm', 'k_max', 'rows',
                        'primitive_ks', 'multiples'))


def _cycchunk(u, x, ks):
    """ (k, content, witness) for a contiguous run of k, cross-checking
    A(u^k) against the matrix power and the expansion formula
    """
    p = u.p
    A = mult_matrix(u)
    inverse = zeta_power(p, -x)
    rows = []
    power = matpower = None
    for k in ks:
        if power is None:
            power, matpower = cyclo_pow(u, k), A**k
        else:
            power, matpower = cyclo_mul(power, u), matpower * A
        if mult_matrix(power) != matpower:
            raise StructuralFailure("A(u^k) differs from A(u)^k", k)
        alpha = sym_coeffs(cyclo_pow(inverse, k) * power)
        if expansion_coeffs(alpha, x, k) != power.coeffs:
            raise StructuralFailure("expansion of u^k does not match its "
                                    "symmetric coefficients", k)
        witness = primitivity_witness(p, x, k)
        if witness is not None and not _witness_holds(witness, power.coeffs):
            raise StructuralFailure(f"witness {witness} does not hold", k)
        rows.append((k, content_or_zero(matpower.minus_identity()), witness))
    return rows


def verify_cyc_theorem(p, u, k_max, workers=1):
    """ content(A(u)^k - I) for k = 1..k_max, asserting it is 1 whenever
    p does not divide k. Contents at multiples of p are recorded only.
    Args:
        p (int): the prime
        u (CycloElt): a non-real unit of Z[zeta_p]
        k_max (int): >= p
        workers (int): processes over chunks of k
    Raises:
        PreconditionError: for real or non-unit u
        TheoremViolation: if some k not divisible by p has content > 1
    """
    if u.p != _checkprime(p):
        raise PreconditionError(f"element is in Z[zeta_{u.p}]", 'p')
    positiveintordie(k_max, 'k_max', minimum=p)
    if is_real(u):
        raise PreconditionError(f"{u} is real", 'u')
    norm = _checkunit(u)
    x = zeta_decompose(u)
    if x is None:
        raise PreconditionError(f"{u} is not zeta^x times a real unit", 'u')
    log.debug("u = zeta^%d * %s", x, cyclo_mul(zeta_power(p, -x), u))

    chunks = chunked(range(1, k_max + 1), workers)
    results = parallel_map(functools.partial(_cycchunk, u, x), chunks,
                           workers)
    rows = []
    for k, content, witness in (row for chunk in results for row in chunk):
        if k % p and content != 1:
            raise TheoremViolation(f"content {content} for k not divisible "
                                   f"by p={p}", k)
        rows.append((k, content, content == 1, witness))
    return CycReport(p=p, unit=u, x=x, norm=norm, k_max=k_max,
                     rows=tuple(rows),
                     primitive_ks=tuple(k for k, _, prim, _ in rows if prim),
                     multiples=tuple((k, c) for k, c, _, _ in rows
                                     if k % p == 0))
