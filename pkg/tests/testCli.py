""" Command line runner: reports, exit statuses and configuration """
import io
import json
import os
import tempfile

from click.testing import CliRunner

from .base import GcdIterTestCase, poly
from gcditer import GcdIter
from gcditer.cli import cli
from gcditer.errors import PreconditionError, TheoremViolation
from gcditer.experiments import (Experiment, ExperimentConfig,
                                 ExperimentResult, parse_value, witnesstext)
from gcditer.matgcd.matrices import IntMat
from gcditer.reports import dumpjson, streamcsv


class CliTestCase(GcdIterTestCase):

    def setUp(self):
        super().setUp()
        self.tmpdir = tempfile.TemporaryDirectory()
        self.runner = CliRunner()

    def tearDown(self):
        self.tmpdir.cleanup()

    def invoke(self, *args, env=None, name='report.out'):
        """ Run the cli writing its report to a file; returns
        (click Result, report text or None)
        """
        path = os.path.join(self.tmpdir.name, name)
        result = self.runner.invoke(cli, list(args) + ['--out', path],
                                    env=env)
        text = None
        if os.path.exists(path):
            with open(path) as f:
                text = f.read()
        return result, text


class TestReports(CliTestCase):

    def test_intgcd_csv(self):
        result, text = self.invoke('intgcd', '--a', '2', '--b', '3',
                                   '--k-max', '10')
        self.assertEqual(result.exit_code, 0, result.output)
        lines = text.splitlines()
        self.assertEqual(lines[0], 'k,gcd,is_coprime,log_ratio')
        self.assertEqual(len(lines), 11)
        self.assertEqual(lines[1], '1,1,true,0.000000')
        self.assertEqual(lines[4], '4,5,false,0.402359')

    def test_intgcd_json_with_oracle(self):
        result, text = self.invoke('intgcd', '--a', '-2', '--b', '3',
                                   '--k-max', '12', '--prime-bound', '1000',
                                   '--format', 'json')
        self.assertEqual(result.exit_code, 0, result.output)
        report = json.loads(text)
        self.assertEqual(report['summary']['a'], '-2')
        self.assertEqual(report['summary']['oracle_mismatches'], [])
        self.assertEqual(report['rows'][0]['k'], 1)
        self.assertIsInstance(report['rows'][0]['gcd'], str)

    def test_polygcd_json(self):
        result, text = self.invoke('polygcd', '--f', 't', '--g', 't+1',
                                   '--format', 'json')
        self.assertEqual(result.exit_code, 0, result.output)
        summary = json.loads(text)['summary']
        self.assertEqual(summary['h_candidate'], 't^2+t+1')
        self.assertEqual(summary['progressions'], [6])
        self.assertEqual(summary['levels'], {'6': 't^2+t+1'})
        self.assertTrue(summary['stabilized'])

    def test_polygcd_csv(self):
        result, text = self.invoke('polygcd', '--f', 't', '--g', 't+1',
                                   '--k-max', '6')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(text.splitlines()[-1], '6,t^2+t+1')

    def test_matgcd(self):
        result, text = self.invoke('matgcd', '--matrix', '2,1;1,1',
                                   '--k-max', '6')
        self.assertEqual(result.exit_code, 0, result.output)
        contents = [line.split(',')[1] for line in text.splitlines()[1:]]
        self.assertEqual(contents, ['1', '1', '4', '3', '11', '8'])

    def test_hyperbolic(self):
        result, text = self.invoke('hyperbolic', '--matrix', '2,1;1,1',
                                   '--k-max', '40', '--format', 'json')
        self.assertEqual(result.exit_code, 0, result.output)
        summary = json.loads(text)['summary']
        self.assertEqual(summary['theoretical_slope'], 0.481212)
        self.assertLess(abs(summary['fitted_slope'] - 0.481212), 0.05)

    def test_polymat(self):
        result, text = self.invoke('polymat', '--matrix', 't,0;0,t+1',
                                   '--format', 'json')
        self.assertEqual(result.exit_code, 0, result.output)
        summary = json.loads(text)['summary']
        self.assertEqual(summary['h'], 't^2+t+1')
        self.assertEqual(summary['eigenvalues']['status'], 'independent')

    def test_cyclo(self):
        result, text = self.invoke('cyclo', '--p', '5', '--unit', '2',
                                   '--k-max', '25', '--format', 'json')
        self.assertEqual(result.exit_code, 0, result.output)
        report = json.loads(text)
        self.assertEqual(report['summary']['coprime_to_p_count'], 20)
        self.assertEqual(report['summary']['primitive_count'], 22)
        self.assertEqual(report['summary']['unit'], '1,1,0,0')
        first = report['rows'][0]
        self.assertEqual(first, {'k': 1, 'content': '1', 'is_primitive': True,
                                 'witness': 'a[1,0]=a[0,0]'})
        self.assertEqual(report['rows'][9]['content'], '11')

    def test_cyclo_coeffs(self):
        result, text = self.invoke('cyclo', '--p', '5', '--coeffs', '1,1,0,0',
                                   '--k-max', '10')
        self.assertEqual(result.exit_code, 0, result.output)
        lines = text.splitlines()
        self.assertEqual(lines[0], 'k,content,is_primitive,witness')
        self.assertEqual(lines[1], '1,1,true,"a[1,0]=a[0,0]"')
        self.assertEqual(lines[2], '2,1,true,"a[2,0]=a[0,0]"')
        self.assertEqual(lines[4], '4,1,true,"a[0,0]=0"')


class TestExitStatus(CliTestCase):

    def test_parse_error(self):
        result, text = self.invoke('matgcd', '--matrix', '2,1;1,x')
        self.assertEqual(result.exit_code, 2)
        self.assertIn('matrix', result.output)
        self.assertIn('position 6', result.output)
        self.assertIsNone(text)

    def test_usage_errors(self):
        result, _ = self.invoke('intgcd', '--a', '2', '--b', '3',
                                '--bogus', '1')
        self.assertEqual(result.exit_code, 2)
        result, _ = self.invoke('intgcd', '--b', '3')
        self.assertEqual(result.exit_code, 2)
        result, _ = self.invoke('intgcd', '--a', '2', '--b', '3',
                                '--format', 'xml')
        self.assertEqual(result.exit_code, 2)

    def test_precondition_errors(self):
        for args in (('intgcd', '--a', '1', '--b', '3'),
                     ('intgcd', '--a', '2', '--b', '3', '--workers', '0'),
                     ('cyclo', '--p', '4', '--unit', '2'),
                     ('cyclo', '--p', '5', '--unit', '2', '--coeffs',
                      '1,1,0,0'),
                     ('cyclo', '--p', '5', '--coeffs', '0,0,1,1'),
                     ('hyperbolic', '--matrix', '1,1;0,1')):
            result, _ = self.invoke(*args)
            self.assertEqual(result.exit_code, 2, args)
            self.assertIn('Error:', result.output)

    def test_theorem_violation(self):
        def fails(inputs, config):
            raise TheoremViolation("content 2 for k not divisible by p", 3)
        app = GcdIter(instance_path='.',
                      experiments=[Experiment('fails', (), ('k',), fails)])
        self.assertEqual(app.run(ExperimentConfig('fails'), io.StringIO()), 3)


class TestConfiguration(CliTestCase):

    def test_environment(self):
        result, text = self.invoke('intgcd', '--a', '2', '--b', '3',
                                   env={'GCDITER_K_MAX': '5'})
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(len(text.splitlines()), 6)
        #flags beat the environment
        result, text = self.invoke('intgcd', '--a', '2', '--b', '3',
                                   '--k-max', '3',
                                   env={'GCDITER_K_MAX': '5'})
        self.assertEqual(len(text.splitlines()), 4)

    def test_config_file(self):
        path = os.path.join(self.tmpdir.name, 'gcditer.cfg')
        with open(path, 'w') as f:
            f.write("K_MAX = 4\nOUTPUT_FORMAT = 'json'\n")
        result, text = self.invoke('--config', path, 'matgcd', '--matrix',
                                   '2,1;1,1')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(len(json.loads(text)['rows']), 4)

    def test_workers_give_identical_bytes(self):
        commands = (
            ('intgcd', '--a', '6', '--b', '-10', '--k-max', '40'),
            ('polygcd', '--f', 't^2', '--g', 't+1', '--k-max', '24'),
            ('matgcd', '--matrix', '1,2,0;0,1,3;1,0,1', '--k-max', '24'),
            ('hyperbolic', '--matrix', '3,1;2,1', '--k-max', '24'),
            ('polymat', '--matrix', 't,1;1,t', '--k-max', '12'),
            ('cyclo', '--p', '7', '--unit', '3', '--k-max', '28'),
        )
        for args in commands:
            for fmt in ('csv', 'json'):
                _, one = self.invoke(*args, '--format', fmt, '--workers', '1',
                                     name='one.out')
                _, four = self.invoke(*args, '--format', fmt, '--workers', '4',
                                      name='four.out')
                self.assertIsNotNone(one, args)
                self.assertEqual(one, four, args)

    def test_experiment_config(self):
        with self.assertRaises(PreconditionError):
            ExperimentConfig('intgcd', k_max=0)
        with self.assertRaises(PreconditionError):
            ExperimentConfig('intgcd', workers=0)
        with self.assertRaises(PreconditionError):
            ExperimentConfig('intgcd', output_format='xml')
        config = ExperimentConfig('intgcd', {'a': '2', 'b': '3', 'c': '4'})
        with self.assertRaises(PreconditionError) as cm:
            self.app.execute(config)
        self.assertEqual(cm.exception.parameter, 'c')
        with self.assertRaises(PreconditionError):
            self.app.execute(ExperimentConfig('nosuchcommand'))

    def test_duplicate_experiment(self):
        with self.assertRaises(KeyError):
            self.app.addexperiment(self.app.getexperiment('intgcd'))


class TestRendering(GcdIterTestCase):

    def test_parse_value(self):
        self.assertEqual(parse_value('integer', ' -12 '), -12)
        self.assertEqual(parse_value('poly', 't^2+1'), poly('t^2+1'))
        self.assertEqual(parse_value('intmat', '1,2;3,4'),
                         IntMat([[1, 2], [3, 4]]))
        self.assertEqual(str(parse_value('rational', '-3/6')), '-1/2')
        with self.assertRaises(PreconditionError):
            parse_value('quaternion', '1')

    def test_streamcsv(self):
        lines = list(streamcsv(('k', 'gcd', 'ok'),
                               [(1, poly('t+1'), True), (2, 0.5, None)]))
        self.assertEqual(lines, ['k,gcd,ok\n', '1,t+1,true\n',
                                 '2,0.500000,\n'])
        self.assertEqual(list(streamcsv(('m',), [(IntMat([[1, 2], [3, 4]]),)],
                                        sep='\t')),
                         ['m\n', '1,2;3,4\n'])

    def test_dumpjson(self):
        stream = io.StringIO()
        dumpjson({'b': poly('t^2+t+1'), 'a': 1/3}, stream)
        self.assertEqual(json.loads(stream.getvalue()),
                         {'a': 0.333333, 'b': 't^2+t+1'})
        self.assertTrue(stream.getvalue().endswith('}\n'))

    def test_witnesstext(self):
        self.assertEqual(witnesstext(None), '')
        self.assertEqual(witnesstext(('vanishing', 0)), 'a[0,0]=0')
        self.assertEqual(witnesstext(('equal', 3)), 'a[3,0]=a[0,0]')

    def test_run_to_stream(self):
        stream = io.StringIO()
        config = ExperimentConfig('intgcd', {'a': '2', 'b': '3'}, k_max=4)
        self.assertEqual(self.app.run(config, stream), 0)
        self.assertEqual(stream.getvalue().splitlines()[-1],
                         '4,5,false,0.402359')
        self.assertIsInstance(ExperimentResult([], {}).rows, list)
