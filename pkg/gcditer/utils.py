""" Small helpers shared by the engines """
from concurrent.futures import ProcessPoolExecutor
from sympy import divisors

from .errors import PreconditionError

import logging
log = logging.getLogger(__name__)


def positiveintordie(value, name, minimum=1):
    """ Make sure `value` is an integer >= `minimum`, else raise
    PreconditionError naming the parameter
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise PreconditionError(f"expected an integer, got {value!r}", name)
    if value < minimum:
        raise PreconditionError(f"must be >= {minimum}, got {value}", name)
    return value


def properdivisors(n):
    """ All positive divisors of n except n itself, ascending """
    return divisors(n)[:-1]


def factor_refinement(items, gcd, quotient, istrivial):
    """ Refine `items` into a list of pairwise coprime elements such that
    every input is a product of powers of the output (up to a unit)
    Args:
        items (list): normalized (positive / monic) nontrivial elements
        gcd (func): normalized gcd of two elements
        quotient (func): exact quotient of two elements
        istrivial (func): True for units
    Returns:
        list: the refined basis in order of first appearance
    """
    basis = _dedupe(x for x in items if not istrivial(x))
    while True:
        split = _firstsplit(basis, gcd)
        if split is None:
            return basis
        i, j, g = split
        a, b = basis[i], basis[j]
        refined = (basis[:i] + [quotient(a, g), g] + basis[i+1:j]
                   + [quotient(b, g)] + basis[j+1:])
        basis = _dedupe(x for x in refined if not istrivial(x))


def _firstsplit(basis, gcd):
    for i, a in enumerate(basis):
        for j in range(i+1, len(basis)):
            g = gcd(a, basis[j])
            if g != 1:
                return i, j, g
    return None


def _dedupe(items):
    result = []
    for x in items:
        if x not in result:
            result.append(x)
    return result


def valuation(x, b, divmodfunc):
    """ Largest e with b**e | x, together with x / b**e
    Args:
        x: nonzero element
        b: nontrivial element
        divmodfunc (func): returns (quotient, remainder) of two elements
    """
    e = 0
    while True:
        q, r = divmodfunc(x, b)
        if r:
            return e, x
        x = q
        e += 1


def chunked(items, nchunks):
    """ Split `items` into at most `nchunks` contiguous, nonempty runs """
    items = list(items)
    nchunks = max(1, min(nchunks, len(items)))
    size, extra = divmod(len(items), nchunks)
    chunks, start = [], 0
    for index in range(nchunks):
        stop = start + size + (1 if index < extra else 0)
        chunks.append(items[start:stop])
        start = stop
    return [c for c in chunks if c]


def parallel_map(func, items, workers=1):
    """ Evaluate func over items, in order. With workers > 1 the calls are
    spread over a process pool, so func and the items must be picklable.
    """
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [func(item) for item in items]
    log.debug("Mapping %s over %d items with %d workers",
              getattr(func, '__name__', func), len(items), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))
