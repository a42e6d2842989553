""" D(k) = gcd(f^k-1, g^k-1) over Q[t]: the torsion level decomposition,
the bounding polynomial and the arithmetic progressions outside of which
D(k) is trivial.

For a parameter s where f(s) and g(s) are both roots of unity, t-s divides
D(k) exactly when k is a multiple of a least period d_s, always with the same
multiplicity. Collecting the factors by period gives the levels P_d with
D(k) = prod_{d | k} P_d.
"""
import functools
from collections import namedtuple

from sympy.polys.polyerrors import ExactQuotientFailed

from .cache import InMemoryCacher
from .errors import PreconditionError, StructuralFailure
from .polyarith import ONE, coprime_basis, poly_gcd, squarefree_part
from .utils import parallel_map, positiveintordie, properdivisors
from .zgcd import IndependenceResult, proportional_witness

import logging
log = logging.getLogger(__name__)

_cacher = InMemoryCacher()


def setcachesize(maxentries):
    """ Bound the number of cached D(k) values """
    _cacher.maxentries = positiveintordie(maxentries, 'CACHE_ENTRIES')


class PolyPair(namedtuple('PolyPair', ('f', 'g'))):
    """ Two non-constant RatPolys """
    __slots__ = ()

    def __new__(cls, f, g):
        for name, value in (('f', f), ('g', g)):
            if value.isconstant():
                raise PreconditionError(f"must be non-constant, got {value}",
                                        name)
        return super().__new__(cls, f, g)

    @property
    def mindegree(self):
        return min(self.f.degree, self.g.degree)


def _rawgcd_k(pair, k):
    return poly_gcd(pair.f**k - 1, pair.g**k - 1)


def poly_gcd_k(pair, k):
    """ Monic gcd of f^k-1 and g^k-1 """
    positiveintordie(k, 'k')
    return _cacher.getorcompute((pair.f, pair.g, k),
                                lambda: _rawgcd_k(pair, k))


def gcd_values(pair, ks, workers=1):
    """ [(k, D(k))] for all ks, computing cache misses in parallel """
    ks = list(ks)
    missing = [k for k in ks if not _cacher.test((pair.f, pair.g, k))]
    computed = parallel_map(functools.partial(_rawgcd_k, pair), missing,
                            workers)
    for k, value in zip(missing, computed):
        _cacher.store((pair.f, pair.g, k), value)
    return [(k, poly_gcd_k(pair, k)) for k in ks]


def _product(polys):
    result = ONE
    for p in polys:
        result = result * p
    return result


class TorsionLevels(namedtuple('TorsionLevels',
                               ('levels', 'h_candidate', 'progressions',
                                'k_scanned', 'stabilized', 'h_bound',
                                'bound_holds', 'gcds'))):
    """ Result of a level scan
    Fields:
        levels (dict): d -> P_d for every nontrivial level, ascending in d
        h_candidate (RatPoly): product of all P_d
        progressions (tuple): moduli d >= 2 with P_d != 1
        k_scanned (int): D(k) known for k <= k_scanned
        stabilized (bool): no new level in the final stability window
        h_bound (RatPoly): squarefree_part(h_candidate)^min(deg f, deg g)
        bound_holds (bool): h_candidate divides h_bound
        gcds (tuple): (k, D(k)) for k = 1..k_scanned
    """
    __slots__ = ()

    def reconstruct(self, k):
        """ prod_{d | k} P_d """
        return _product(p for d, p in self.levels.items() if k % d == 0)

    def minimality_violations(self):
        """ (d, j) where P_d shares a factor with D(j), j a proper divisor
        of d
        """
        byk = dict(self.gcds)
        return [(d, j) for d, p in self.levels.items()
                for j in properdivisors(d)
                if j in byk and poly_gcd(p, byk[j]) != 1]


def torsion_levels(pair, k_max, stability_window, workers=1):
    """ Extract the levels P_d from D(1..k_max)
    Args:
        pair (PolyPair): f, g
        k_max (int): largest k to scan, >= 2
        stability_window (int): the scan counts as stabilized when no level
                                appears among the last `stability_window` d
        workers (int): processes for computing D(k)
    Raises:
        StructuralFailure: on inexact level division or a reconstruction
                           mismatch, carrying the offending k
    """
    positiveintordie(k_max, 'k_max', minimum=2)
    positiveintordie(stability_window, 'stability_window')
    independence = mult_indep_poly(pair)
    if not independence.independent:
        log.warning("f=%s and g=%s are multiplicatively dependent (witness "
                    "%s); levels will not stabilize", pair.f, pair.g,
                    independence.witness)

    gcds = gcd_values(pair, range(1, k_max + 1), workers)
    values = dict(gcds)
    levels = {}
    for d in range(1, k_max + 1):
        known = _product(levels[j] for j in properdivisors(d) if j in levels)
        try:
            level = values[d].exquo(known)
        except ExactQuotientFailed:
            raise StructuralFailure("earlier levels do not divide D(d)", d)
        if level != 1:
            log.debug("New torsion level %d: %s", d, level)
            levels[d] = level

    h_candidate = _product(levels.values())
    for k in range(1, k_max + 1):
        rebuilt = _product(p for d, p in levels.items() if k % d == 0)
        if rebuilt != values[k]:
            raise StructuralFailure(f"D(k)={values[k]} but the levels give "
                                    f"{rebuilt}", k)
        if not values[k].divides(h_candidate):
            raise StructuralFailure("D(k) does not divide h_candidate", k)

    stabilized = not any(d > k_max - stability_window for d in levels)
    if not stabilized:
        log.warning("Torsion levels of (%s, %s) not stabilized by k=%d",
                    pair.f, pair.g, k_max)
    if h_candidate.isconstant():
        h_bound = ONE
    else:
        h_bound = squarefree_part(h_candidate)**pair.mindegree
    return TorsionLevels(levels=levels,
                         h_candidate=h_candidate,
                         progressions=tuple(d for d in levels if d >= 2),
                         k_scanned=k_max,
                         stabilized=stabilized,
                         h_bound=h_bound,
                         bound_holds=h_candidate.divides(h_bound),
                         gcds=tuple(gcds))


def mult_indep_poly(pair):
    """ Test whether f^r != g^s for all r, s >= 1, constants included
    Returns:
        IndependenceResult: (True, None) or (False, (r, s)) with the minimal
                            witness of f^r == g^s
    """
    basis = coprime_basis([pair.f, pair.g])
    row_f, row_g = basis.exponents
    witness = proportional_witness(row_f, row_g)
    if witness is None:
        return IndependenceResult(True, None)
    r, s = witness
    cf, cg = basis.constants
    #the monic parts agree; the constants must agree too
    for m in (1, 2):
        if cf**(m*r) == cg**(m*s):
            return IndependenceResult(False, (m*r, m*s))
    return IndependenceResult(True, None)


ProgressionReport = namedtuple('ProgressionReport',
                               ('verified_through', 'violations',
                                'always_divides', 'precondition_ok'))


def progression_check(pair, levels, k_max, workers=1):
    """ Check that D(k) is trivial exactly outside the progressions
    d*N, d in levels.progressions, for every k <= k_max.

    When gcd(f-1, g-1) != 1 it divides every D(k) with a fixed multiplicity,
    so "trivial" means D(k) == gcd(f-1, g-1); that factor is reported as
    `always_divides`. Violations point at levels that had not yet appeared
    in the scan.
    """
    positiveintordie(k_max, 'k_max')
    always = poly_gcd_k(pair, 1)
    if always != 1:
        log.warning("gcd(f-1, g-1) = %s divides every D(k)", always)
    violations = []
    for k, value in gcd_values(pair, range(1, k_max + 1), workers):
        inprogression = any(k % d == 0 for d in levels.progressions)
        if (value == always) == inprogression:
            violations.append(k)
    if violations:
        log.warning("Progression check failed for %d values of k, first "
                    "k=%d", len(violations), violations[0])
    log.debug("Gcd cache: %r", _cacher)
    return ProgressionReport(verified_through=k_max,
                             violations=tuple(violations),
                             always_divides=always,
                             precondition_ok=(always == 1))
