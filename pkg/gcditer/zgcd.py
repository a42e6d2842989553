""" The integer sequence G(k) = gcd(a^k-1, b^k-1): direct computation,
coprimality surveys and an independent multiplicative-order oracle.
"""
import functools
import math
from collections import namedtuple
from fractions import Fraction

import numpy as np
from sympy.ntheory import n_order

from .errors import PreconditionError
from .utils import (factor_refinement, parallel_map, positiveintordie,
                    properdivisors, valuation)

import logging
log = logging.getLogger(__name__)

#the oracle holds a boolean sieve of every integer up to the bound
MAX_PRIME_BOUND = 10**8

IndependenceResult = namedtuple('IndependenceResult',
                                ('independent', 'witness'))


class IntPair(namedtuple('IntPair', ('a', 'b'))):
    """ A pair of nonzero integers, neither of them +-1 """
    __slots__ = ()

    def __new__(cls, a, b):
        for name, value in (('a', a), ('b', b)):
            if isinstance(value, bool) or not isinstance(value, int):
                raise PreconditionError(f"expected an integer, got {value!r}",
                                        name)
            if value in (-1, 0, 1):
                raise PreconditionError(f"must not be -1, 0 or 1, got {value}",
                                        name)
        return super().__new__(cls, a, b)

    @property
    def basegcd(self):
        """ gcd(a-1, b-1), which divides every G(k) """
        return math.gcd(self.a - 1, self.b - 1)


def int_gcd_k(pair, k):
    """ G(k) = gcd(|a^k-1|, |b^k-1|) by exact powers """
    positiveintordie(k, 'k')
    return math.gcd(pair.a**k - 1, pair.b**k - 1)


@functools.lru_cache(maxsize=8)
def _primes(bound):
    """ Primes <= bound as an int64 array, by the sieve of Eratosthenes """
    isprime = np.ones(bound + 1, dtype=bool)
    isprime[:2] = False
    for q in range(2, math.isqrt(bound) + 1):
        if isprime[q]:
            isprime[q*q::q] = False
    return np.flatnonzero(isprime).astype(np.int64)


def _powmod(bases, exponent, moduli):
    """ Elementwise bases**exponent % moduli for int64 arrays """
    result = np.ones_like(moduli)
    bases = bases % moduli
    while exponent:
        if exponent & 1:
            result = result * bases % moduli
        bases = bases * bases % moduli
        exponent >>= 1
    return result % moduli


@functools.lru_cache(maxsize=16)
def _residues(a, bound):
    primes = _primes(bound)
    return np.fromiter((a % int(q) for q in primes), dtype=np.int64,
                       count=len(primes))


def prime_valuation(a, k, q):
    """ v_q(a^k - 1) for a prime q not dividing a, from the multiplicative
    order and the lifting-the-exponent lemma; the full power is never formed
    """
    if q == 2:
        if k % 2:
            return _intvaluation(a - 1, 2)
        return _intvaluation(a*a - 1, 2) + _intvaluation(k, 2) - 1
    order = n_order(a % q, q)
    if k % order:
        return 0
    #v_q(a^order - 1) by lifting modulo increasing powers of q
    base = 1
    modulus = q
    while pow(a, order, modulus*q) == 1:
        modulus *= q
        base += 1
    return base + _intvaluation(k // order, q)


def _intvaluation(n, q):
    return valuation(n, q, divmod)[0]


def order_oracle(pair, k, prime_bound):
    """ The prime_bound-smooth part of G(k), over primes q not dividing ab,
    built from multiplicative orders and prime valuations
    Args:
        pair (IntPair): the bases
        k (int): exponent, >= 1
        prime_bound (int): largest prime to consider, 2 <= bound <
                           MAX_PRIME_BOUND
    """
    positiveintordie(k, 'k')
    positiveintordie(prime_bound, 'prime_bound', minimum=2)
    if prime_bound >= MAX_PRIME_BOUND:
        raise PreconditionError(f"must be < {MAX_PRIME_BOUND}", 'prime_bound')
    primes = _primes(prime_bound)
    ra = _residues(pair.a, prime_bound)
    rb = _residues(pair.b, prime_bound)
    #q | a^k-1 and q | b^k-1, with q coprime to ab
    mask = (ra != 0) & (rb != 0)
    mask &= _powmod(ra, k, primes) == 1
    mask &= _powmod(rb, k, primes) == 1
    result = 1
    for q in primes[mask]:
        q = int(q)
        e = min(prime_valuation(pair.a, k, q), prime_valuation(pair.b, k, q))
        result *= q**e
    return result


def _intbasis(values):
    return factor_refinement(values, math.gcd, lambda x, y: x // y,
                             lambda x: x == 1)


def _exponentrows(values, basis):
    rows = []
    for x in values:
        row = []
        for b in basis:
            e, x = valuation(x, b, divmod)
            row.append(e)
        rows.append(row)
    return rows


def proportional_witness(row_a, row_b):
    """ Minimal (r, s) with r*row_a == s*row_b, or None. Both rows must be
    nonzero.
    """
    for ea, eb in zip(row_a, row_b):
        if ea or eb:
            break
    if not (ea and eb):
        return None
    g = math.gcd(ea, eb)
    r, s = eb // g, ea // g
    if all(r*x == s*y for x, y in zip(row_a, row_b)):
        return r, s
    return None


def mult_indep_int(pair):
    """ Test whether a^r != b^s for all r, s >= 1
    Returns:
        IndependenceResult: (True, None), or (False, (r, s)) with the minimal
                            witness of a^r == b^s
    """
    a, b = abs(pair.a), abs(pair.b)
    basis = _intbasis([a, b])
    row_a, row_b = _exponentrows([a, b], basis)
    witness = proportional_witness(row_a, row_b)
    if witness is None:
        return IndependenceResult(True, None)
    r, s = witness
    #|a|^r == |b|^s; fix signs, doubling makes both sides positive
    for m in (1, 2):
        if _negativepower(pair.a, m*r) == _negativepower(pair.b, m*s):
            return IndependenceResult(False, (m*r, m*s))


def _negativepower(x, e):
    return x < 0 and e % 2 == 1


class GcdSurvey(namedtuple('GcdSurvey', ('pair', 'k_max', 'values',
                                         'coprime_ks', 'density',
                                         'max_log_ratio'))):
    """ The sequence G(1..k_max) with coprimality statistics
    Fields:
        values (tuple): (k, G(k)) pairs ordered by k
        coprime_ks (tuple): k with G(k) == 1
        density (Fraction): len(coprime_ks) / k_max
        max_log_ratio (tuple): (k, log G(k) / k) maximizing the ratio
    """
    __slots__ = ()

    def logratios(self):
        return [(k, math.log(g) / k) for k, g in self.values]

    def divisibility_violations(self):
        """ (k, reason) for every k where gcd(a-1, b-1) or some G(d), d | k,
        fails to divide G(k)
        """
        byk = dict(self.values)
        base = self.pair.basegcd
        violations = []
        for k, g in self.values:
            if g % base:
                violations.append((k, f"gcd(a-1,b-1)={base} does not divide"))
            for d in properdivisors(k):
                if g % byk[d]:
                    violations.append((k, f"G({d}) does not divide"))
        return violations


def coprime_survey(pair, k_max, workers=1):
    """ Compute G(k) for k = 1..k_max and summarize where it equals 1.
    The survey only reports what it sees; it never decides infinitude.
    """
    positiveintordie(k_max, 'k_max')
    independent = mult_indep_int(pair)
    if not independent.independent:
        log.warning("%s and %s are multiplicatively dependent (witness %s)",
                    pair.a, pair.b, independent.witness)
    if pair.basegcd != 1:
        log.warning("gcd(a-1, b-1) = %d divides every G(k)", pair.basegcd)

    ks = range(1, k_max + 1)
    gcds = parallel_map(functools.partial(int_gcd_k, pair), ks, workers)
    values = tuple(zip(ks, gcds))
    coprime_ks = tuple(k for k, g in values if g == 1)
    survey = GcdSurvey(pair, k_max, values, coprime_ks,
                       Fraction(len(coprime_ks), k_max), None)
    best = max(survey.logratios(), key=lambda kr: (kr[1], -kr[0]))
    survey = survey._replace(max_log_ratio=best)
    violations = survey.divisibility_violations()
    for k, reason in violations:
        log.error("Divisibility check failed at k=%d: %s", k, reason)
    log.debug("Survey of (%d, %d) to k=%d: density %s", pair.a, pair.b,
              k_max, survey.density)
    return survey
