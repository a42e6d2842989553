""" One experiment per command line command: parse the raw text inputs, run
the engine and shape the result into CSV rows and a JSON summary.
"""
import functools
from collections import namedtuple

from .cyclo.cyclo import CycloElt, cyclotomic_unit, verify_cyc_theorem
from .errors import PreconditionError
from .matgcd.matgcd import (eigen_mult_indep, hyperbolic_growth, pm_survey,
                            primitivity_survey)
from .matgcd.matrices import IntMat, PolyMat
from .polyarith import parse_poly, parse_rational
from .polygcd import (PolyPair, mult_indep_poly, progression_check,
                      torsion_levels)
from .utils import parallel_map, positiveintordie
from .zgcd import IntPair, coprime_survey, mult_indep_int, order_oracle

import logging
log = logging.getLogger(__name__)

OUTPUT_FORMATS = ('csv', 'json')
STABILITY_WINDOW = 12


class Experiment(namedtuple('Experiment', ('name', 'parameters', 'header',
                                           'func'))):
    """ A registered command
    Fields:
        name (str): command name
        parameters (tuple): parameter keys the command accepts
        header (tuple): CSV column names
        func (callable): func(inputs, config) -> ExperimentResult
    """
    __slots__ = ()


ExperimentResult = namedtuple('ExperimentResult', ('rows', 'summary'))


class ExperimentConfig(namedtuple('ExperimentConfig',
                                  ('command', 'parameters', 'k_max',
                                   'output_format', 'output_path',
                                   'workers'))):
    """ Immutable description of one run. Construction validates the
    numeric fields and the output format; unknown parameter keys are
    rejected against the registered experiment in `checkparameters`.
    """
    __slots__ = ()

    def __new__(cls, command, parameters=None, k_max=36, output_format='csv',
                output_path=None, workers=1):
        positiveintordie(k_max, 'k_max')
        positiveintordie(workers, 'workers')
        if output_format not in OUTPUT_FORMATS:
            raise PreconditionError(f"must be one of {OUTPUT_FORMATS}, got "
                                    f"{output_format!r}", 'format')
        parameters = {k: v for k, v in (parameters or {}).items()
                      if v is not None}
        return super().__new__(cls, command, parameters, k_max,
                               output_format, output_path, workers)

    def checkparameters(self, experiment):
        for key in self.parameters:
            if key not in experiment.parameters:
                raise PreconditionError(f"unknown parameter for "
                                        f"{self.command}", key)


def _require(parameters, key):
    value = parameters.get(key)
    if value is None or (isinstance(value, str) and not value.strip()):
        raise PreconditionError("is required", key)
    return value


def _parse_int(text, key):
    if isinstance(text, int) and not isinstance(text, bool):
        return text
    try:
        return int(str(text).strip())
    except ValueError:
        raise PreconditionError(f"expected an integer, got {text!r}", key)


PARSERS = {
    'integer': _parse_int,
    'rational': parse_rational,
    'poly': parse_poly,
    'intmat': IntMat.parse,
    'polymat': PolyMat.parse,
}


def parse_value(kind, text, parameter=None):
    """ Parse one raw value of the given kind (a key of PARSERS) """
    if kind not in PARSERS:
        raise PreconditionError(f"unknown input kind {kind!r}", parameter)
    return PARSERS[kind](text, parameter)


def parse_inputs(command, parameters):
    """ Typed values for the raw text parameters of `command`
    Raises:
        ParseError: position-annotated, for malformed text
        PreconditionError: missing or out-of-domain values
    """
    inputs = {}
    if command == 'intgcd':
        inputs['pair'] = IntPair(_parse_int(_require(parameters, 'a'), 'a'),
                                 _parse_int(_require(parameters, 'b'), 'b'))
        if parameters.get('prime_bound') is not None:
            inputs['prime_bound'] = _parse_int(parameters['prime_bound'],
                                               'prime_bound')
    elif command == 'polygcd':
        f, g = (parse_value('poly', _require(parameters, key), key)
                for key in ('f', 'g'))
        inputs['pair'] = PolyPair(f, g)
    elif command in ('matgcd', 'hyperbolic', 'polymat'):
        kind = 'polymat' if command == 'polymat' else 'intmat'
        inputs['matrix'] = parse_value(kind, _require(parameters, 'matrix'),
                                       'matrix')
    elif command == 'cyclo':
        p = _parse_int(_require(parameters, 'p'), 'p')
        unit, coeffs = parameters.get('unit'), parameters.get('coeffs')
        if (unit is None) == (coeffs is None):
            raise PreconditionError("give exactly one of --unit and --coeffs",
                                    'unit')
        if unit is not None:
            inputs['u'] = cyclotomic_unit(p, _parse_int(unit, 'unit'))
        else:
            inputs['u'] = CycloElt.parse(p, coeffs)
        inputs['p'] = p
    else:
        #experiments registered by callers take the raw text
        inputs.update(parameters)
    if 'stability_window' in parameters:
        inputs['stability_window'] = _parse_int(
            parameters['stability_window'], 'stability_window')
    return inputs


def _witness(result):
    return list(result.witness) if result.witness else None


def _oracle_mismatch(pair, prime_bound, kg):
    k, g = kg
    return None if order_oracle(pair, k, prime_bound) == g else k


def run_intgcd(inputs, config):
    pair = inputs['pair']
    survey = coprime_survey(pair, config.k_max, config.workers)
    independence = mult_indep_int(pair)
    ratios = dict(survey.logratios())
    rows = [(k, g, g == 1, ratios[k]) for k, g in survey.values]
    k_best, ratio = survey.max_log_ratio
    summary = {
        'a': str(pair.a),
        'b': str(pair.b),
        'k_max': config.k_max,
        'base_gcd': str(pair.basegcd),
        'coprime_ks': list(survey.coprime_ks),
        'coprime_count': len(survey.coprime_ks),
        'density': survey.density,
        'max_log_ratio': {'k': k_best, 'ratio': ratio},
        'independent': independence.independent,
        'witness': _witness(independence),
        'divisibility_violations': [{'k': k, 'reason': reason} for k, reason
                                    in survey.divisibility_violations()],
    }
    if 'prime_bound' in inputs:
        mismatches = parallel_map(functools.partial(_oracle_mismatch, pair,
                                                    inputs['prime_bound']),
                                  survey.values, config.workers)
        summary['prime_bound'] = inputs['prime_bound']
        summary['oracle_mismatches'] = [k for k in mismatches if k]
    return ExperimentResult(rows, summary)


def run_polygcd(inputs, config):
    pair = inputs['pair']
    window = inputs.get('stability_window', STABILITY_WINDOW)
    levels = torsion_levels(pair, config.k_max, window, config.workers)
    progression = progression_check(pair, levels, config.k_max,
                                    config.workers)
    independence = mult_indep_poly(pair)
    summary = {
        'f': pair.f,
        'g': pair.g,
        'k_max': config.k_max,
        'levels': {str(d): p for d, p in levels.levels.items()},
        'h_candidate': levels.h_candidate,
        'h_bound': levels.h_bound,
        'bound_holds': levels.bound_holds,
        'progressions': list(levels.progressions),
        'stabilized': levels.stabilized,
        'independent': independence.independent,
        'witness': _witness(independence),
        'always_divides': progression.always_divides,
        'progression_violations': list(progression.violations),
        'minimality_violations': [list(v) for v in
                                  levels.minimality_violations()],
    }
    return ExperimentResult(list(levels.gcds), summary)


def run_matgcd(inputs, config):
    A = inputs['matrix']
    survey = primitivity_survey(A, config.k_max, config.workers)
    summary = {
        'matrix': A,
        'k_max': config.k_max,
        'det': str(A.det()),
        'base_content': str(survey.base_content),
        'primitive_ks': list(survey.primitive_ks),
        'primitive_count': len(survey.primitive_ks),
    }
    rows = [(k, c, prim) for k, c, prim in survey.rows]
    return ExperimentResult(rows, summary)


def run_hyperbolic(inputs, config):
    A = inputs['matrix']
    report = hyperbolic_growth(A, config.k_max, config.workers)
    summary = {
        'matrix': A,
        'k_max': config.k_max,
        'trace': str(report.trace),
        'epsilon': report.epsilon,
        'fitted_slope': report.fitted_slope.nominal_value,
        'slope_stderr': report.fitted_slope.std_dev,
        'theoretical_slope': report.theoretical_slope,
    }
    return ExperimentResult(list(report.samples), summary)


def run_polymat(inputs, config):
    A = inputs['matrix']
    window = inputs.get('stability_window', STABILITY_WINDOW)
    survey = pm_survey(A, config.k_max, window, config.workers)
    summary = {
        'matrix': A,
        'k_max': config.k_max,
        'h': survey.H,
        'factors': [{'factor': w, 'period': d} for w, d in survey.factors],
        'progressions': list(survey.progressions),
        'stabilized': survey.stabilized,
        'violations': [{'k': k, 'factor': w} for k, w in survey.violations],
    }
    if A.det():
        eigen = eigen_mult_indep(A)
        summary['eigenvalues'] = {
            'status': eigen.status,
            'pair': list(eigen.pair) if eigen.pair else None,
            'witness': list(eigen.witness) if eigen.witness else None,
            'values': list(eigen.eigenvalues or ()),
            'notes': list(eigen.notes),
        }
    rows = [(k, c, prim) for k, c, prim in survey.rows]
    return ExperimentResult(rows, summary)


def witnesstext(witness):
    """ `a[j,0]=a[0,0]`, `a[0,0]=0` or empty """
    if witness is None:
        return ''
    kind, j = witness
    if kind == 'vanishing':
        return 'a[0,0]=0'
    return f"a[{j},0]=a[0,0]"


def run_cyclo(inputs, config):
    p, u = inputs['p'], inputs['u']
    report = verify_cyc_theorem(p, u, config.k_max, config.workers)
    summary = {
        'p': p,
        'unit': u,
        'x': report.x,
        'norm': str(report.norm),
        'k_max': config.k_max,
        'primitive_ks': list(report.primitive_ks),
        'primitive_count': len(report.primitive_ks),
        'coprime_to_p_count': sum(1 for k, _, _, _ in report.rows if k % p),
        'multiples': [{'k': k, 'content': str(c)}
                      for k, c in report.multiples],
    }
    rows = [(k, c, prim, witnesstext(w)) for k, c, prim, w in report.rows]
    return ExperimentResult(rows, summary)


DEFAULT_EXPERIMENTS = (
    Experiment('intgcd', ('a', 'b', 'prime_bound'),
               ('k', 'gcd', 'is_coprime', 'log_ratio'), run_intgcd),
    Experiment('polygcd', ('f', 'g', 'stability_window'),
               ('k', 'gcd'), run_polygcd),
    Experiment('matgcd', ('matrix',),
               ('k', 'content', 'is_primitive'), run_matgcd),
    Experiment('hyperbolic', ('matrix',),
               ('k', 'content', 'log_content'), run_hyperbolic),
    Experiment('polymat', ('matrix', 'stability_window'),
               ('k', 'content', 'is_primitive'), run_polymat),
    Experiment('cyclo', ('p', 'unit', 'coeffs'),
               ('k', 'content', 'is_primitive', 'witness'), run_cyclo),
)
