""" Rendering of experiment results as CSV or JSON.

Exact integers that belong to the mathematics (gcds, contents, bases, traces,
norms) are written as decimal strings so downstream tools never round them;
counters and k stay JSON integers.
"""
import json
from enum import Enum
from fractions import Fraction

from .cyclo.cyclo import CycloElt
from .matgcd.matrices import SquareMatrix
from .polyarith import RatPoly

import logging
log = logging.getLogger(__name__)

FLOAT_DIGITS = 6


def _rounded(obj):
    """ Copy of obj with every float rounded """
    if isinstance(obj, float):
        return round(obj, FLOAT_DIGITS)
    if isinstance(obj, dict):
        return {str(k): _rounded(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_rounded(v) for v in obj]
    return obj


class ReportJSONEncoder(json.JSONEncoder):
    """ Render the domain types in their text formats """
    def default(self, o):
        if isinstance(o, (RatPoly, SquareMatrix, CycloElt)):
            return str(o)
        if isinstance(o, Fraction):
            return f"{o.numerator}/{o.denominator}"
        if isinstance(o, Enum):
            return o.value
        return super().default(o)


def dumpjson(report, stream):
    """ Write `report` (a dict) to `stream` as sorted, indented JSON """
    json.dump(_rounded(report), stream, cls=ReportJSONEncoder,
              sort_keys=True, indent=2)
    stream.write('\n')


def _cell(value):
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return f"{value:.{FLOAT_DIGITS}f}"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if value is None:
        return ''
    return str(value)


def streamcsv(header, rows, sep=','):
    """ Generator of CSV lines: the header, then one line per row
    Args:
        header (list): column names
        rows (iterable): sequences of cells, same length as header
        sep (str): separator (e.g. csv or tsv)
    """
    yield sep.join(header)+'\n'
    for row in rows:
        cells = [_cell(v) for v in row]
        #polynomials and matrices may contain the separator
        yield sep.join(f'"{c}"' if sep in c else c for c in cells)+'\n'
