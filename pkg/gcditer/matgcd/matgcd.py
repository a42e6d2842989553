""" gcd(A^k - I) for integer and polynomial matrices.

The content of a matrix is the gcd of its entries: a positive integer for
`IntMat`, a monic polynomial for `PolyMat`. A is primitive when the content
of A - I is 1.
"""
import functools
import itertools
import math
from collections import namedtuple
from enum import Enum
from fractions import Fraction

import numpy as np
from sympy import divisors
from uncertainties import ufloat

from ..errors import PreconditionError, StructuralFailure, UndefinedGcdError
from ..polyarith import (ONE, RatPoly, coprime_basis, poly_eval, poly_gcd,
                         poly_lcm, squarefree_part)
from ..polygcd import PolyPair, mult_indep_poly
from ..utils import chunked, parallel_map, positiveintordie, valuation
from .matrices import IntMat, PolyMat

import logging
log = logging.getLogger(__name__)


def mat_content(M):
    """ gcd of all entries of M
    Raises:
        UndefinedGcdError: if M is the zero matrix
    """
    entries = [x for x in M.entries() if x]
    if not entries:
        raise UndefinedGcdError("content of the zero matrix is undefined")
    if isinstance(M, IntMat):
        return math.gcd(*entries)
    return functools.reduce(poly_gcd, entries).monic()


def content_or_zero(M):
    #A^k == I: every modulus divides, recorded as content 0
    if M.iszero():
        return M.zero
    return mat_content(M)


def _divides(a, b):
    if isinstance(a, RatPoly):
        return a.divides(b)
    return b == 0 if a == 0 else b % a == 0


def mat_pow_minus_I(A, k):
    """ A^k - I by binary exponentiation """
    positiveintordie(k, 'k')
    return (A**k).minus_identity()


def _contentchunk(A, ks, checkdet=True):
    """ (k, content(A^k-I), det(A^k-I) or None) for a contiguous run of k.
    The run starts from one binary power and continues by multiplying by A.
    """
    rows = []
    power = None
    for k in ks:
        power = A**k if power is None else power * A
        B = power.minus_identity()
        rows.append((k, content_or_zero(B), B.det() if checkdet else None))
    return rows


def _contents(A, k_max, workers, checkdet=True):
    chunks = chunked(range(1, k_max + 1), workers)
    results = parallel_map(functools.partial(_contentchunk, A,
                                             checkdet=checkdet),
                           chunks, workers)
    rows = [row for chunk in results for row in chunk]
    if checkdet:
        for k, content, det in rows:
            #content(A^k-I) | det(A^k-I)
            if not _divides(content, det):
                raise StructuralFailure(f"content {content} does not divide "
                                        f"det {det}", k)
    bycontent = {k: content for k, content, _ in rows}
    for k in bycontent:
        for d in divisors(k)[:-1]:
            if not _divides(bycontent[d], bycontent[k]):
                raise StructuralFailure(f"content at k={d} does not divide "
                                        "the content", k)
    return [(k, content) for k, content, _ in rows]


def _checknonsingular(A):
    if not A.det():
        log.warning("Matrix %s is singular; every A^k is primitive", A)


PrimitivitySurvey = namedtuple('PrimitivitySurvey',
                               ('matrix', 'k_max', 'rows', 'base_content',
                                'primitive_ks'))


def primitivity_survey(A, k_max, workers=1):
    """ content(A^k - I) for k = 1..k_max over the integers
    Returns:
        PrimitivitySurvey: rows are (k, content, is_primitive)
    """
    if not isinstance(A, IntMat):
        raise PreconditionError("expected an integer matrix", 'matrix')
    positiveintordie(k_max, 'k_max')
    _checknonsingular(A)
    base = mat_content(A.minus_identity())
    if base != 1:
        log.warning("gcd(A-I) = %d divides every gcd(A^k-I)", base)
    contents = _contents(A, k_max, workers)
    rows = tuple((k, c, c == 1) for k, c in contents)
    return PrimitivitySurvey(matrix=A, k_max=k_max, rows=rows,
                             base_content=base,
                             primitive_ks=tuple(k for k, _, p in rows if p))


GrowthReport = namedtuple('GrowthReport',
                          ('trace', 'epsilon', 'samples', 'fitted_slope',
                           'theoretical_slope'))


def hyperbolic_growth(A, k_max, workers=1):
    """ Compare the growth of gcd(A^k - I) for hyperbolic A in SL_2(Z)
    with the rate |epsilon|^(k/2), epsilon the larger eigenvalue.

    The slope of log gcd(A^k-I) against k is fitted by least squares over
    k in [k_max/2, k_max] and carried with its standard error.
    """
    if not isinstance(A, IntMat) or A.size != 2:
        raise PreconditionError("expected a 2x2 integer matrix", 'matrix')
    positiveintordie(k_max, 'k_max', minimum=2)
    if A.det() != 1:
        raise PreconditionError(f"determinant is {A.det()}, not 1", 'matrix')
    trace = A.trace()
    if abs(trace) <= 2:
        raise PreconditionError(f"trace {trace} is not hyperbolic "
                                "(|trace| must exceed 2)", 'matrix')
    epsilon = (abs(trace) + math.sqrt(trace*trace - 4)) / 2
    contents = _contents(A, k_max, workers)
    samples = tuple((k, c, math.log(c)) for k, c in contents)

    fit = [(k, logc) for k, _, logc in samples if 2*k >= k_max]
    x = np.array([k for k, _ in fit], dtype=float)
    y = np.array([logc for _, logc in fit], dtype=float)
    if len(x) > 3:
        coeffs, cov = np.polyfit(x, y, 1, cov=True)
        slope = ufloat(coeffs[0], math.sqrt(cov[0][0]))
    else:
        slope = ufloat(np.polyfit(x, y, 1)[0], 0)
    log.debug("Fitted slope %s against %.4f", slope, math.log(epsilon)/2)
    return GrowthReport(trace=trace, epsilon=epsilon, samples=samples,
                        fitted_slope=slope,
                        theoretical_slope=math.log(epsilon)/2)


PolyMatSurvey = namedtuple('PolyMatSurvey',
                           ('matrix', 'k_max', 'rows', 'H', 'factors',
                            'progressions', 'violations', 'stabilized'))


def pm_survey(A, k_max, stability_window, workers=1):
    """ C(k) = content(A^k - I) over Q[t] for k = 1..k_max.

    H is the lcm of all C(k). The nonconstant C(k) are split by gcd
    refinement into pairwise coprime squarefree factors w; each w gets the
    least d_w with w | C(d_w), and w | C(k) <=> d_w | k is checked over the
    scanned range. Factors are not split into irreducibles, so a w whose
    roots have different periods shows up as violations.
    Returns:
        PolyMatSurvey: rows are (k, C(k), is_primitive); factors are
                       (w, d_w); violations are (k, w)
    """
    if not isinstance(A, PolyMat):
        raise PreconditionError("expected a polynomial matrix", 'matrix')
    positiveintordie(k_max, 'k_max')
    positiveintordie(stability_window, 'stability_window')
    _checknonsingular(A)
    contents = _contents(A, k_max, workers)
    H = functools.reduce(poly_lcm, (c for _, c in contents if c), ONE)

    nonconstant = [c for _, c in contents if not c.isconstant()]
    factors = []
    if nonconstant:
        for b in coprime_basis(nonconstant).basis:
            w = squarefree_part(b)
            if w not in (f for f, _ in factors):
                dw = next(k for k, c in contents if w.divides(c))
                factors.append((w, dw))
    violations = [(k, w) for w, dw in factors for k, c in contents
                  if w.divides(c) != (k % dw == 0)]
    for k, w in violations:
        log.warning("Factor %s divides C(k) off its progression at k=%d",
                    w, k)
    stabilized = not any(dw > k_max - stability_window for _, dw in factors)
    if not stabilized:
        log.warning("Content factors of %s not stabilized by k=%d", A, k_max)
    return PolyMatSurvey(matrix=A, k_max=k_max,
                         rows=tuple((k, c, c == 1) for k, c in contents),
                         H=H,
                         factors=tuple(factors),
                         progressions=tuple(sorted({dw for _, dw in factors
                                                    if dw >= 2})),
                         violations=tuple(violations),
                         stabilized=stabilized)


def charpoly(A):
    """ Coefficients (ascending in y) of det(y*I - A), each in Q[t], by the
    Faddeev-LeVerrier recursion
    """
    n = A.size
    coeffs = [None]*n + [ONE]
    identity = A.identity(n)
    M = identity.scale(0)
    for k in range(1, n + 1):
        M = A*M + identity.scale(coeffs[n-k+1])
        coeffs[n-k] = -(A*M).trace() * Fraction(1, k)
    return coeffs


def _syntheticdivide(chi, lam):
    """ Divide sum chi[i]*y^i by (y - lam); returns (quotient, remainder) """
    n = len(chi) - 1
    quotient = [None]*n
    quotient[n-1] = chi[n]
    for i in range(n - 1, 0, -1):
        quotient[i-1] = chi[i] + lam*quotient[i]
    return quotient, chi[0] + lam*quotient[0]


def _rational_roots(f):
    """ Nonzero rational roots of a RatPoly, ascending """
    denominator = functools.reduce(math.lcm, (c.denominator
                                              for c in f.coeffs), 1)
    ints = [int(c*denominator) for c in f.coeffs]
    low = next(c for c in ints if c)
    high = ints[-1]
    roots = set()
    for p in divisors(abs(low)):
        for q in divisors(abs(high)):
            for r in (Fraction(p, q), Fraction(-p, q)):
                if not poly_eval(f, r):
                    roots.add(r)
    return sorted(roots)


def _scalar_roots(chi, m):
    """ Rational c != 0 with chi(c*m) == 0 identically in t """
    terms = [a * m**i for i, a in enumerate(chi)]
    top = max(p.degree for p in terms)
    G = None
    for j in range(top + 1):
        cpoly = RatPoly(p.coeffs[j] if j <= p.degree else 0 for p in terms)
        if cpoly:
            G = cpoly if G is None else poly_gcd(G, cpoly)
    if G is None or G.isconstant():
        return []
    return _rational_roots(G)


class EigenStatus(Enum):
    INDEPENDENT = 'independent'
    DEPENDENT = 'dependent'
    UNSUPPORTED = 'unsupported'


EigenIndependence = namedtuple('EigenIndependence',
                               ('status', 'pair', 'witness', 'eigenvalues',
                                'notes'))


def eigenvalues(A):
    """ Polynomial eigenvalues of A with multiplicity, or None if the
    characteristic polynomial does not split over the candidates.

    Candidates are c*m with m a monic product of powers of the squarefree
    coprime-basis elements of det A and the entries, and c a rational root
    of the t-coefficients of chi(c*m). Each is confirmed by exact division.
    """
    det = A.det()
    if not det:
        raise PreconditionError("matrix is singular", 'matrix')
    chi = charpoly(A)
    inputs = [x for x in [det] + A.entries() if not x.isconstant()]
    basis = []
    if inputs:
        for b in coprime_basis(inputs).basis:
            w = squarefree_part(b)
            if w not in basis:
                basis.append(w)
    caps = [valuation(det, b, divmod)[0] for b in basis]
    candidates = []
    for exps in itertools.product(*(range(cap + 1) for cap in caps)):
        m = ONE
        for b, e in zip(basis, exps):
            m = m * b**e
        for c in _scalar_roots(chi, m):
            if m*c not in candidates:
                candidates.append(m*c)

    found = []
    rest = chi
    for lam in candidates:
        while len(rest) > 1:
            quotient, remainder = _syntheticdivide(rest, lam)
            if remainder:
                break
            rest = quotient
            found.append(lam)
    if len(rest) > 1:
        return None
    return found


def eigen_mult_indep(A):
    """ Look for two multiplicatively independent eigenvalues of A.

    Only eigenvalues that are polynomials in t are supported; otherwise the
    answer is UNSUPPORTED. Pairs containing a constant eigenvalue are
    skipped and noted.
    Returns:
        EigenIndependence
    """
    if not isinstance(A, PolyMat):
        raise PreconditionError("expected a polynomial matrix", 'matrix')
    found = eigenvalues(A)
    if found is None:
        return EigenIndependence(EigenStatus.UNSUPPORTED, None, None, None,
                                 ("characteristic polynomial does not split "
                                  "into polynomial eigenvalues",))
    notes = []
    dependent = None
    seen = set()
    for i, j in itertools.combinations(range(len(found)), 2):
        pair = (found[i], found[j])
        if pair in seen:
            continue
        seen.add(pair)
        if pair[0].isconstant() or pair[1].isconstant():
            note = f"pair ({pair[0]}, {pair[1]}) skipped: constant eigenvalue"
            log.info(note)
            notes.append(note)
            continue
        result = mult_indep_poly(PolyPair(*pair))
        if result.independent:
            return EigenIndependence(EigenStatus.INDEPENDENT, pair, None,
                                     tuple(found), tuple(notes))
        if dependent is None:
            dependent = (pair, result.witness)
    if dependent is not None:
        return EigenIndependence(EigenStatus.DEPENDENT, dependent[0],
                                 dependent[1], tuple(found), tuple(notes))
    return EigenIndependence(EigenStatus.UNSUPPORTED, None, None,
                             tuple(found), tuple(notes))
