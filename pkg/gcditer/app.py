import inspect
import logging
import os
import sys

from flask.config import Config

from . import polygcd
from .errors import GcdIterError, PreconditionError
from .experiments import DEFAULT_EXPERIMENTS, parse_inputs
from .reports import dumpjson, streamcsv

log = logging.getLogger(__name__)

DEFAULTS = {
    'WORKERS': 1,
    'K_MAX': 36,
    'PRIME_BOUND': None,
    'STABILITY_WINDOW': 12,
    'OUTPUT_FORMAT': 'csv',
    'CACHE_ENTRIES': 4096,
    'LOGLEVEL': logging.WARNING,
    'LOGFILE': None,
    'DEBUG': False,
}


class GcdIter(object):
    """ Experiment runner holding the configuration and the registered
    experiments.
    """

    def __init__(self, config_filename=None, instance_path=None,
                 experiments=None):
        """ Constructor
        Args:
            config_filename (str): python file with configuration keys. If
                                   relative, it is looked up in instance_path
            instance_path (str): location to look for config files. Defaults
                                 to the directory of the calling script
            experiments (iterable): Experiment records to register instead of
                                    the built-in commands

        Configuration keys are read from the defaults, then the config file,
        then GCDITER_* environment variables (GCDITER_WORKERS=4 sets WORKERS).
        """
        if instance_path is None:
            caller = inspect.stack()[1][1]
            instance_path = os.path.dirname(os.path.abspath(caller))
        self.instance_path = instance_path
        self.config = Config(instance_path, DEFAULTS)
        if config_filename:
            self.config.from_pyfile(config_filename)
        self.config.from_prefixed_env("GCDITER")

        self.experiments = {}
        for experiment in (DEFAULT_EXPERIMENTS if experiments is None
                           else experiments):
            self.addexperiment(experiment)

        self.setuplogging()
        polygcd.setcachesize(self.config['CACHE_ENTRIES'])

    def setuplogging(self):
        logformat = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
        loglevel = self.config.get('LOGLEVEL', logging.WARNING)
        if self.config.get('DEBUG'):
            loglevel = logging.DEBUG

        logfile = self.config.get('LOGFILE')
        if logfile:
            from logging.handlers import RotatingFileHandler

            file_handler = RotatingFileHandler(logfile, maxBytes=1024*1024*100,
                                               backupCount=20)
            file_handler.setLevel(loglevel)
            file_handler.setFormatter(logging.Formatter(logformat))
            logging.getLogger().addHandler(file_handler)
            logging.getLogger().setLevel(loglevel)
        else:
            logging.basicConfig(format=logformat, level=loglevel,
                                stream=sys.stderr)
        log.info("Log level is %s", loglevel)

    def addexperiment(self, experiment):
        """ Register a new command
        Args:
            experiment (Experiment): the command record
        """
        if experiment.name in self.experiments:
            raise KeyError(f"Experiment {experiment.name} is already "
                           "registered")
        self.experiments[experiment.name] = experiment

    def getexperiment(self, name):
        if name not in self.experiments:
            raise PreconditionError(f"no experiment named {name!r}",
                                    'command')
        return self.experiments[name]

    def execute(self, config):
        """ Run the experiment described by an ExperimentConfig
        Returns:
            (Experiment, ExperimentResult)
        """
        experiment = self.getexperiment(config.command)
        config.checkparameters(experiment)
        parameters = dict(config.parameters)
        if 'stability_window' in experiment.parameters:
            parameters.setdefault('stability_window',
                                  self.config['STABILITY_WINDOW'])
        if 'prime_bound' in experiment.parameters and self.config.get(
                'PRIME_BOUND'):
            parameters.setdefault('prime_bound', self.config['PRIME_BOUND'])
        inputs = parse_inputs(config.command, parameters)
        log.debug("Running %s with %s", config.command, parameters)
        return experiment, experiment.func(inputs, config)

    def write(self, config, experiment, result, stream):
        if config.output_format == 'csv':
            for line in streamcsv(experiment.header, result.rows):
                stream.write(line)
            return
        report = {
            'command': config.command,
            'parameters': {k: str(v) for k, v in config.parameters.items()},
            'summary': result.summary,
            'rows': [_jsonrow(experiment.header, row) for row in result.rows],
        }
        dumpjson(report, stream)

    def run(self, config, stream=None):
        """ Execute `config` and write its report to config.output_path, or
        to `stream` (standard output by default)
        Returns:
            int: exit status; 0 on success, else the error's exit_code
        """
        try:
            experiment, result = self.execute(config)
            if config.output_path:
                with open(config.output_path, 'w', newline='') as out:
                    self.write(config, experiment, result, out)
            else:
                self.write(config, experiment, result, stream or sys.stdout)
        except GcdIterError as e:
            log.error("%s failed: %s", config.command, e)
            print(f"Error: {e}", file=sys.stderr)
            return e.exit_code
        return 0


def _jsonrow(header, row):
    """ Row as a dict; exact integers other than k become decimal strings """
    return {name: (str(value) if name != 'k' and isinstance(value, int)
                   and not isinstance(value, bool) else value)
            for name, value in zip(header, row)}


def create_app(*args, **kwargs):
    """ Simple wrapper to make the runner easy to construct from scripts """
    return GcdIter(*args, **kwargs)
