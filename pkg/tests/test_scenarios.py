import json
import math
import os
import shutil
import tempfile
import unittest

from config import Config
from app.control.pursuit import Gains
from app.models.enums import RobotClass
from app.scenarios import canonical_json, load_scenario, parse_scenario
from app.utils.errors import ConfigError

BASEDIR = os.path.abspath(os.path.join(os.path.dirname(__file__), os.pardir))


def parse(text, **overrides):
    return parse_scenario(text, Config.SCENARIO_DEFAULTS, Config.SURFACE_PARAM_DEFAULTS,
                          Config.PATH_PARAM_DEFAULTS, source='test.json', **overrides)


class ScenarioDocumentTestCase(unittest.TestCase):
    """Test loading and validating scenario documents"""

    def test_empty_document_gets_defaults(self):
        """Test that an empty document gets every default"""
        config = parse('{}')
        document = config.document
        self.assertEqual(document['surface'], {'kind': 'sinusoidal', 'params': {'a': 0.2, 'omega': 2.0}})
        self.assertEqual(document['robot']['class'], '3R')
        self.assertEqual(document['robot']['phi_max'], math.pi / 4)
        self.assertEqual(document['path']['name'], 'benchmark')
        self.assertEqual(document['path']['variant'], 'sine-corrected')
        self.assertEqual(document['sim']['dt'], 0.01)
        self.assertIsNone(document['sim']['initial_state']['z'])
        self.assertEqual(config.gains, Gains())

    def test_integers_become_floats(self):
        """Test that integer values are stored as floats"""
        config = parse('{"sim": {"t_end": 10}}')
        self.assertIsInstance(config.document['sim']['t_end'], float)

    def test_defaults_are_not_shared(self):
        """Test that loaded documents do not alias the defaults"""
        config = parse('{}')
        config.document['gains']['k_e'] = 99.0
        self.assertEqual(Config.SCENARIO_DEFAULTS['gains']['k_e'], 1.0)

    def test_robot_class_labels(self):
        """Test the accepted robot class labels"""
        self.assertEqual(parse('{"robot": {"class": "rs"}}').robot_class, RobotClass.RS)
        self.assertEqual(parse('{"robot": {"class": "TWO_R"}}').robot_class, RobotClass.TWO_R)

    def test_unknown_key_names_field_and_line(self):
        """Test that an unknown key is reported with field and line"""
        text = '{\n  "robot": {\n    "class": "3R",\n    "radius": 0.2\n  }\n}\n'
        with self.assertRaises(ConfigError) as context:
            parse(text)
        error = context.exception
        self.assertEqual(error.field, 'robot.radius')
        self.assertEqual(error.line, 4)
        self.assertEqual(str(error), 'test.json:4: robot.radius: unknown key')

    def test_unknown_section(self):
        """Test that an unknown section is rejected"""
        with self.assertRaises(ConfigError) as context:
            parse('{"plotting": {}}')
        self.assertEqual(context.exception.field, 'plotting')

    def test_zero_dt(self):
        """Test that a zero time step is rejected"""
        text = '{\n  "sim": {\n    "dt": 0\n  }\n}'
        with self.assertRaises(ConfigError) as context:
            parse(text)
        self.assertEqual(context.exception.field, 'sim.dt')
        self.assertEqual(context.exception.line, 3)

    def test_dt_longer_than_run(self):
        """Test that a step longer than the run is rejected"""
        with self.assertRaises(ConfigError) as context:
            parse('{"sim": {"dt": 2.0, "t_end": 1.0}}')
        self.assertEqual(context.exception.field, 'sim.dt')

    def test_wrong_types(self):
        """Test that values of the wrong type are rejected"""
        cases = {
            '{"robot": {"R": "big"}}': 'robot.R',
            '{"robot": {"R": true}}': 'robot.R',
            '{"output": {"emit_plot_script": 1}}': 'output.emit_plot_script',
            '{"output": {"plot_extent": [1, 0, 0, 1]}}': 'output.plot_extent',
            '{"gains": []}': 'gains',
        }
        for text, field in cases.items():
            with self.subTest(text=text):
                with self.assertRaises(ConfigError) as context:
                    parse(text)
                self.assertEqual(context.exception.field, field)

    def test_range_checks(self):
        """Test that out-of-range values are rejected"""
        cases = {
            '{"robot": {"R": -0.2}}': 'robot.R',
            '{"robot": {"phi_max": 2.0}}': 'robot.phi_max',
            '{"robot": {"phi_max": 0}}': 'robot.phi_max',
            '{"robot": {"class": "4R"}}': 'robot.class',
            '{"gains": {"k_psi": 0}}': 'gains.k_psi',
            '{"surface": {"kind": "cone"}}': 'surface.kind',
            '{"surface": {"params": {"a": -1}}}': 'surface.params.a',
            '{"path": {"name": "spiral"}}': 'path.name',
            '{"path": {"variant": "corrected"}}': 'path.variant',
            '{"output": {"directory": "  "}}': 'output.directory',
        }
        for text, field in cases.items():
            with self.subTest(text=text):
                with self.assertRaises(ConfigError) as context:
                    parse(text)
                self.assertEqual(context.exception.field, field)

    def test_two_r_must_start_unturned(self):
        """Test that a 2R start with psi set is rejected"""
        with self.assertRaises(ConfigError) as context:
            parse('{"robot": {"class": "2R"}, "sim": {"initial_state": {"psi": 0.5}}}')
        self.assertEqual(context.exception.field, 'sim.initial_state.psi')

    def test_rs_tilt_within_limit(self):
        """Test that an RS start beyond phi_max is rejected"""
        with self.assertRaises(ConfigError) as context:
            parse('{"robot": {"class": "RS", "phi_max": 0.3}, "sim": {"initial_state": {"phi": 0.5}}}')
        self.assertEqual(context.exception.field, 'sim.initial_state.phi')

    def test_explicit_z_must_touch_surface(self):
        """Test that an explicit z must lie on the surface"""
        with self.assertRaises(ConfigError) as context:
            parse('{"sim": {"initial_state": {"x": 0, "y": 0, "z": 1.0}}}')
        self.assertEqual(context.exception.field, 'sim.initial_state.z')
        config = parse('{"sim": {"initial_state": {"x": 0, "y": 0, "z": 0.0}}}')
        self.assertEqual(config.document['sim']['initial_state']['z'], 0.0)

    def test_syntax_error_has_line(self):
        """Test that a JSON syntax error reports its line"""
        with self.assertRaises(ConfigError) as context:
            parse('{\n  "robot": {\n    "class": "3R",\n  }\n}')
        self.assertEqual(context.exception.line, 4)
        self.assertIsNone(context.exception.field)

    def test_top_level_must_be_object(self):
        """Test that the document must be a JSON object"""
        with self.assertRaises(ConfigError):
            parse('[1, 2]')

    def test_path_aliases(self):
        """Test that benchmark-literal expands to name and variant"""
        document = parse('{"path": {"name": "benchmark-literal"}}').document
        self.assertEqual(document['path']['name'], 'benchmark')
        self.assertEqual(document['path']['variant'], 'literal')

    def test_equation_style_path_aliases(self):
        """Test the eq60 names as aliases of the benchmark variants"""
        for alias, variant in (('paper-eq60-literal', 'literal'),
                               ('paper-eq60-sine-corrected', 'sine-corrected')):
            with self.subTest(alias=alias):
                config = parse(f'{{"path": {{"name": "{alias}"}}}}')
                self.assertEqual(config.document['path'], {'name': 'benchmark', 'variant': variant,
                                                           'params': {'amplitude': 2.0, 'rate': 0.05}})
                self.assertEqual(config.build_scenario().path.label, f"benchmark-{variant}")

    def test_path_params_follow_name(self):
        """Test that path params default per path name"""
        document = parse('{"path": {"name": "line", "params": {"speed": 0.3}}}').document
        self.assertEqual(document['path']['params'],
                         {'start_x': 0.0, 'start_y': 0.0, 'heading': 0.0, 'speed': 0.3})
        with self.assertRaises(ConfigError) as context:
            parse('{"path": {"name": "line", "params": {"radius": 1}}}')
        self.assertEqual(context.exception.field, 'path.params.radius')

    def test_overrides(self):
        """Test that command-line overrides win over the document"""
        document = parse('{"sim": {"dt": 0.05}}', dt=0.02, t_end=3, path_variant='literal').document
        self.assertEqual(document['sim']['dt'], 0.02)
        self.assertEqual(document['sim']['t_end'], 3.0)
        self.assertEqual(document['path']['variant'], 'literal')

    def test_bad_override_is_reported_against_command_line(self):
        """Test that bad overrides name the command line"""
        with self.assertRaises(ConfigError) as context:
            parse('{}', dt=-1.0)
        self.assertEqual(context.exception.source, 'command line')
        self.assertIsNone(context.exception.line)
        self.assertEqual(str(context.exception), 'command line: sim.dt: must be positive')

    def test_canonical_form_is_a_fixed_point(self):
        """Test that the canonical form loads back unchanged"""
        config = parse('{"robot": {"class": "rt"}, "path": {"name": "circle"}}')
        text = config.to_json()
        self.assertEqual(parse(text).to_json(), text)
        self.assertEqual(text, canonical_json(json.loads(text)))
        self.assertTrue(text.endswith('}\n'))


class ScenarioAssemblyTestCase(unittest.TestCase):
    """Test turning documents into runnable scenarios"""

    def test_benchmark_scenario(self):
        """Test the scenario built from the defaults"""
        config = parse('{}')
        scenario = config.build_scenario()
        self.assertEqual(scenario.robot_class, RobotClass.THREE_R)
        self.assertEqual(scenario.radius, 0.2)
        self.assertEqual(scenario.step_count, 10000)
        self.assertEqual(scenario.initial_state.z, scenario.surface.eval(0.5, -0.5))
        self.assertEqual(scenario.path.label, 'benchmark-sine-corrected')

    def test_other_class_gets_legal_start(self):
        """Test that building for another class fixes its start"""
        config = parse('{"sim": {"initial_state": {"psi": 1.0}}}')
        scenario = config.build_scenario(RobotClass.TWO_R)
        self.assertEqual(scenario.robot_class, RobotClass.TWO_R)
        self.assertEqual(scenario.initial_state.psi, 0.0)

    def test_plane_surface(self):
        """Test a scenario on a plane"""
        config = parse('{"surface": {"kind": "plane", "params": {"slope_x": 0.5}}}')
        surface = config.surface()
        self.assertEqual(surface.grad(3.0, -1.0), (0.5, 0.0))


class ScenarioFileTestCase(unittest.TestCase):
    """Test loading scenario files"""

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def load(self, path, **overrides):
        return load_scenario(path, Config.SCENARIO_DEFAULTS, Config.SURFACE_PARAM_DEFAULTS,
                             Config.PATH_PARAM_DEFAULTS, **overrides)

    def test_bundled_scenarios_load(self):
        """Test that every bundled scenario loads"""
        for name in ('benchmark.json', 'flat_plane.json', 'incline.json'):
            with self.subTest(name=name):
                config = self.load(os.path.join(BASEDIR, 'scenarios', name))
                config.build_scenario()

    def test_missing_file(self):
        """Test that a missing file is a ConfigError"""
        with self.assertRaises(ConfigError) as context:
            self.load(os.path.join(self.tmp, 'absent.json'))
        self.assertIn('absent.json', str(context.exception))

    def test_error_names_file(self):
        """Test that errors name the file"""
        path = os.path.join(self.tmp, 'bad.json')
        with open(path, 'w') as handle:
            handle.write('{\n  "sim": {"dt": -1}\n}\n')
        with self.assertRaises(ConfigError) as context:
            self.load(path)
        self.assertEqual(str(context.exception), f'{path}:2: sim.dt: must be positive')


if __name__ == '__main__':
    unittest.main()
