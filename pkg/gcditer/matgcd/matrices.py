""" Square matrices over Z (`IntMat`) and over Q[t] (`PolyMat`).

Matrices are immutable tuples of rows. Text format: rows separated by `;`,
entries by `,`, e.g. `2,1;1,1` or `t,0;0,t+1`.
"""
import re

from ..errors import ParseError, PreconditionError
from ..polyarith import ONE, ZERO, RatPoly, parse_poly

import logging
log = logging.getLogger(__name__)

_INTEGER = re.compile(r"\s*[+-]?\d+\s*$")


class SquareMatrix(object):
    """ Square matrix with entries in an exact ring. Subclasses define the
    ring through `zero`, `one`, `_coerce_entry`, `_exquo` and `_parse_entry`.
    Args:
        rows (iterable): iterable of equal-length rows
    """
    __slots__ = ('rows',)
    zero = 0
    one = 1

    def __init__(self, rows):
        rows = tuple(tuple(self._coerce_entry(x) for x in row) for row in rows)
        if len(rows) < 2:
            raise PreconditionError(f"need at least 2 rows, got {len(rows)}",
                                    'matrix')
        for index, row in enumerate(rows):
            if len(row) != len(rows):
                raise PreconditionError(f"row {index} has {len(row)} entries,"
                                        f" expected {len(rows)}", 'matrix')
        self.rows = rows

    @classmethod
    def _coerce_entry(cls, value):
        return value

    @staticmethod
    def _exquo(a, b):
        raise NotImplementedError()

    @classmethod
    def _parse_entry(cls, text, parameter):
        raise NotImplementedError()

    @classmethod
    def identity(cls, size):
        return cls([[cls.one if i == j else cls.zero for j in range(size)]
                    for i in range(size)])

    @classmethod
    def diagonal(cls, entries):
        entries = list(entries)
        return cls([[entries[i] if i == j else cls.zero
                     for j in range(len(entries))]
                    for i in range(len(entries))])

    @property
    def size(self):
        return len(self.rows)

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def entries(self):
        """ All entries, row by row """
        return [x for row in self.rows for x in row]

    def column(self, j):
        return [row[j] for row in self.rows]

    def iszero(self):
        return not any(self.entries())

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return type(self) is type(other) and self.rows == other.rows

    def __hash__(self):
        return hash((type(self).__name__, self.rows))

    def _check(self, other):
        if type(other) is not type(self) or other.size != self.size:
            raise PreconditionError(f"can not combine {self!r} and {other!r}",
                                    'matrix')

    def __add__(self, other):
        self._check(other)
        return type(self)([[a + b for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check(other)
        return type(self)([[a - b for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        return type(self)([[-a for a in row] for row in self.rows])

    def __mul__(self, other):
        self._check(other)
        cols = list(zip(*other.rows))
        return type(self)([[sum((a*b for a, b in zip(row, col)), self.zero)
                            for col in cols]
                           for row in self.rows])

    def scale(self, c):
        return type(self)([[c*a for a in row] for row in self.rows])

    def __pow__(self, k):
        """ Binary exponentiation, k >= 0 """
        if isinstance(k, bool) or not isinstance(k, int) or k < 0:
            raise PreconditionError(f"exponent must be a nonnegative "
                                    f"integer, got {k!r}", 'k')
        result = self.identity(self.size)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def minus_identity(self):
        return self - self.identity(self.size)

    def trace(self):
        return sum((self[i, i] for i in range(self.size)), self.zero)

    def det(self):
        """ Determinant by fraction-free (Bareiss) elimination; every
        division is exact
        """
        n = self.size
        m = [list(row) for row in self.rows]
        prev = self.one
        sign = 1
        for k in range(n - 1):
            if not m[k][k]:
                for i in range(k + 1, n):
                    if m[i][k]:
                        m[i], m[k] = m[k], m[i]
                        sign = -sign
                        break
                else:
                    #no nonzero pivot in this column
                    return self.zero
            pivot = m[k][k]
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = self._exquo(m[i][j]*pivot - m[i][k]*m[k][j],
                                          prev)
            prev = pivot
        return m[n-1][n-1] if sign > 0 else -m[n-1][n-1]

    def __str__(self):
        return ';'.join(','.join(str(x) for x in row) for row in self.rows)

    def __repr__(self):
        return f"{type(self).__name__}('{self}')"

    @classmethod
    def parse(cls, text, parameter='matrix'):
        """ Parse `a,b;c,d` into a matrix, reporting the position of any
        malformed entry
        """
        if not text or not text.strip():
            raise ParseError("empty matrix", text or '', 0, parameter)
        rows, offset = [], 0
        for rowtext in text.split(';'):
            row = []
            for entrytext in rowtext.split(','):
                try:
                    row.append(cls._parse_entry(entrytext, parameter))
                except ParseError as e:
                    raise ParseError(e.reason, text,
                                     offset + e.position, parameter)
                offset += len(entrytext) + 1
            rows.append(row)
        widths = {len(row) for row in rows}
        if len(widths) != 1 or len(rows) not in widths:
            raise ParseError(f"matrix is not square ({len(rows)} rows, row "
                             f"lengths {sorted(widths)})", text, 0, parameter)
        return cls(rows)


class IntMat(SquareMatrix):
    """ Square matrix of exact integers """
    __slots__ = ()
    zero = 0
    one = 1

    @classmethod
    def _coerce_entry(cls, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise PreconditionError(f"integer matrix entry expected, got "
                                    f"{value!r}", 'matrix')
        return value

    @staticmethod
    def _exquo(a, b):
        return a // b

    @classmethod
    def _parse_entry(cls, text, parameter):
        if not _INTEGER.match(text):
            raise ParseError("expected an integer", text, 0, parameter)
        return int(text)


class PolyMat(SquareMatrix):
    """ Square matrix of RatPolys """
    __slots__ = ()
    zero = ZERO
    one = ONE

    @classmethod
    def _coerce_entry(cls, value):
        if isinstance(value, RatPoly):
            return value
        return RatPoly.constant(value)

    @staticmethod
    def _exquo(a, b):
        return a.exquo(b)

    @classmethod
    def _parse_entry(cls, text, parameter):
        return parse_poly(text, parameter)
