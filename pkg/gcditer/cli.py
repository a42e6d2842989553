""" Command line front end: one click command per experiment.

Every command accepts --k-max, --format, --out and --workers; defaults come
from the runner configuration (config file, then GCDITER_* environment).
"""
import functools
import logging
import sys

import click

from .app import create_app
from .experiments import OUTPUT_FORMATS, ExperimentConfig
from .errors import GcdIterError


def common_options(func):
    """ Options shared by all experiment commands """
    @click.option('--k-max', type=int, default=None,
                  help="Largest exponent k to survey")
    @click.option('--format', 'output_format',
                  type=click.Choice(OUTPUT_FORMATS), default=None,
                  help="Report format")
    @click.option('--out', 'output_path', type=click.Path(dir_okay=False),
                  default=None, help="Write the report here instead of stdout")
    @click.option('--workers', type=int, default=None,
                  help="Worker processes (default: GCDITER_WORKERS or 1)")
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        return func(*args, **kwargs)
    return wrapper


def _runcommand(command, k_max, output_format, output_path, workers,
                **parameters):
    runner = click.get_current_context().obj
    config = runner.config
    try:
        experiment = ExperimentConfig(
            command, parameters,
            k_max=config['K_MAX'] if k_max is None else k_max,
            output_format=output_format or config['OUTPUT_FORMAT'],
            output_path=output_path,
            workers=config['WORKERS'] if workers is None else workers)
    except GcdIterError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(e.exit_code)
    sys.exit(runner.run(experiment))


@click.group()
@click.option('--config', 'config_filename', type=click.Path(exists=True),
              default=None, help="Python configuration file")
@click.option('--log-level', default=None,
              type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR']),
              help="Override LOGLEVEL")
@click.pass_context
def cli(ctx, config_filename, log_level):
    """ Explore gcd(a^k-1, b^k-1), gcd(f^k-1, g^k-1) and gcd(A^k-I) """
    runner = create_app(config_filename, instance_path='.')
    if log_level:
        logging.getLogger().setLevel(log_level)
    ctx.obj = runner


@cli.command()
@click.option('--a', required=True, help="First base, a decimal integer")
@click.option('--b', required=True, help="Second base, a decimal integer")
@click.option('--prime-bound', type=int, default=None,
              help="Cross-check every gcd against the order oracle over "
                   "primes up to this bound")
@common_options
def intgcd(**kwargs):
    """ Survey G(k) = gcd(a^k-1, b^k-1) """
    _runcommand('intgcd', **kwargs)


@cli.command()
@click.option('--f', required=True, help="Polynomial in t, e.g. t^2+1")
@click.option('--g', required=True, help="Polynomial in t")
@click.option('--stability-window', type=int, default=None)
@common_options
def polygcd(**kwargs):
    """ Torsion levels of D(k) = gcd(f^k-1, g^k-1) """
    _runcommand('polygcd', **kwargs)


@cli.command()
@click.option('--matrix', required=True, help="Integer matrix, e.g. 2,1;1,1")
@common_options
def matgcd(**kwargs):
    """ Primitivity of A^k - I for an integer matrix """
    _runcommand('matgcd', **kwargs)


@cli.command()
@click.option('--matrix', required=True, help="2x2 integer matrix, det 1")
@common_options
def hyperbolic(**kwargs):
    """ Growth of gcd(A^k - I) for hyperbolic A in SL_2(Z) """
    _runcommand('hyperbolic', **kwargs)


@cli.command()
@click.option('--matrix', required=True,
              help="Polynomial matrix, e.g. t,0;0,t+1")
@click.option('--stability-window', type=int, default=None)
@common_options
def polymat(**kwargs):
    """ Content of A^k - I for a matrix over Q[t] """
    _runcommand('polymat', **kwargs)


@cli.command()
@click.option('--p', required=True, type=int, help="Prime > 3")
@click.option('--unit', type=int, default=None,
              help="Use the cyclotomic unit 1+zeta+...+zeta^(unit-1)")
@click.option('--coeffs', default=None,
              help="Unit as p-1 comma separated basis coefficients")
@common_options
def cyclo(**kwargs):
    """ Check that A(u)^k - I is primitive for k not divisible by p """
    _runcommand('cyclo', **kwargs)


def main():
    cli(prog_name='gcditer')


if __name__ == '__main__':
    main()
