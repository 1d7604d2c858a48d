"""Scenario documents: loading, validation, canonical form and scenario assembly.

A document is JSON with the sections ``surface``, ``robot``, ``gains``,
``path``, ``sim`` and ``output``. Missing keys come from the defaults held in
the app config, unknown keys are rejected and every error names the field
and the line it sits on.
"""
import copy
import json
import math
import re
from dataclasses import dataclass

from app.control.pursuit import Gains
from app.models.enums import PathVariant, RobotClass
from app.models.robot import RobotState
from app.scenarios.forms import (
    GainsForm,
    InitialStateForm,
    OutputForm,
    PATH_PARAM_FORMS,
    PathForm,
    RobotForm,
    SURFACE_PARAM_FORMS,
    SimForm,
    SurfaceForm,
)
from app.sim.paths import build_path
from app.sim.scenario import Scenario
from app.terrain.surfaces import build_surface
from app.utils.errors import ConfigError

SECTIONS = ('surface', 'robot', 'gains', 'path', 'sim', 'output')

# config keys that are not valid Python identifiers on a form
FORM_FIELD_NAMES = {'class': 'robot_class'}

PATH_ALIASES = {
    'benchmark-literal': ('benchmark', 'literal'),
    'benchmark-sine-corrected': ('benchmark', 'sine-corrected'),
    'paper-eq60-literal': ('benchmark', 'literal'),
    'paper-eq60-sine-corrected': ('benchmark', 'sine-corrected'),
}

NULLABLE = {
    ('sim', 'initial_state', 'z'): 'number',
    ('output', 'directory'): 'string',
    ('output', 'plot_extent'): 'extent',
}


def canonical_json(document):
    return json.dumps(document, sort_keys=True, indent=2) + '\n'


def locate_line(text, path):
    """Line of the deepest key of ``path`` found in ``text``, searching in nesting order"""
    if not text:
        return None
    position, line = 0, None
    for key in path:
        match = re.compile(r'"%s"\s*:' % re.escape(key)).search(text, position)
        if match is None:
            break
        position = match.end()
        line = text.count('\n', 0, match.start()) + 1
    return line if line is not None else 1


class _Loader:
    def __init__(self, text, source, defaults, surface_params, path_params):
        self.text = text
        self.source = source
        self.defaults = defaults
        self.surface_params = surface_params
        self.path_params = path_params
        self.overridden = set()

    def error(self, path, message):
        if tuple(path) in self.overridden:
            return ConfigError(message, field='.'.join(path), source='command line')
        return ConfigError(message, field='.'.join(path), line=locate_line(self.text, path),
                           source=self.source)

    def check_keys(self, values, allowed, path):
        if not isinstance(values, dict):
            raise self.error(path, 'expected an object')
        for key in values:
            if key not in allowed:
                raise self.error(tuple(path) + (key,), 'unknown key')

    def coerce(self, value, default, path):
        kind = NULLABLE.get(tuple(path))
        if kind is not None and value is None:
            return None
        if kind == 'extent':
            if not isinstance(value, list) or len(value) != 4:
                raise self.error(path, 'expected [xmin, xmax, ymin, ymax] or null')
            extent = [self.number(item, path) for item in value]
            if not (extent[0] < extent[1] and extent[2] < extent[3]):
                raise self.error(path, 'extent must be increasing in x and y')
            return extent
        if kind == 'number' or isinstance(default, float):
            return self.number(value, path)
        if isinstance(default, bool):
            if not isinstance(value, bool):
                raise self.error(path, 'expected true or false')
            return value
        if kind == 'string' or isinstance(default, str):
            if not isinstance(value, str):
                raise self.error(path, 'expected a string')
            return value
        return value

    def number(self, value, path):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise self.error(path, 'expected a number')
        value = float(value)
        if not math.isfinite(value):
            raise self.error(path, 'must be finite')
        return value

    def section(self, raw, defaults, path):
        """Merge one flat section over its defaults and coerce every value"""
        raw = {} if raw is None else raw
        self.check_keys(raw, defaults, path)
        merged = {}
        for key, default in defaults.items():
            value = raw.get(key, copy.deepcopy(default))
            merged[key] = self.coerce(value, default, tuple(path) + (key,))
        return merged

    def validate(self, form_class, values, path):
        data = {FORM_FIELD_NAMES.get(key, key): value for key, value in values.items()}
        form = form_class(data=data)
        if not form.validate():
            reverse = {v: k for k, v in FORM_FIELD_NAMES.items()}
            name, messages = next(iter(form.errors.items()))
            raise self.error(tuple(path) + (reverse.get(name, name),), messages[0])

    def load(self, document, overrides):
        if not isinstance(document, dict):
            raise ConfigError('top level must be an object', line=1, source=self.source)
        self.check_keys(document, SECTIONS, ())
        result = {}

        surface = document.get('surface', {})
        self.check_keys(surface, ('kind', 'params'), ('surface',))
        kind = self.coerce(surface.get('kind', self.defaults['surface']['kind']), '', ('surface', 'kind'))
        self.validate(SurfaceForm, {'kind': kind}, ('surface',))
        params = self.section(surface.get('params'), self.surface_params[kind], ('surface', 'params'))
        self.validate(SURFACE_PARAM_FORMS[kind], params, ('surface', 'params'))
        result['surface'] = {'kind': kind, 'params': params}

        robot = self.section(document.get('robot'), self.defaults['robot'], ('robot',))
        try:
            robot['class'] = RobotClass.from_label(robot['class']).value
        except ValueError:
            raise self.error(('robot', 'class'), f"unknown robot class {robot['class']!r}")
        self.validate(RobotForm, robot, ('robot',))
        result['robot'] = robot

        gains = self.section(document.get('gains'), self.defaults['gains'], ('gains',))
        self.validate(GainsForm, gains, ('gains',))
        result['gains'] = gains

        path = document.get('path', {})
        self.check_keys(path, ('name', 'variant', 'params'), ('path',))
        name = self.coerce(path.get('name', self.defaults['path']['name']), '', ('path', 'name'))
        variant = self.coerce(path.get('variant', self.defaults['path']['variant']), '', ('path', 'variant'))
        if name in PATH_ALIASES:
            name, variant = PATH_ALIASES[name]
        if overrides.get('path_variant') is not None:
            variant = PathVariant(overrides['path_variant']).value
            self.overridden.add(('path', 'variant'))
        self.validate(PathForm, {'name': name, 'variant': variant}, ('path',))
        path_params = self.section(path.get('params'), self.path_params[name], ('path', 'params'))
        self.validate(PATH_PARAM_FORMS[name], path_params, ('path', 'params'))
        result['path'] = {'name': name, 'variant': variant, 'params': path_params}

        sim = document.get('sim', {})
        sim_defaults = self.defaults['sim']
        self.check_keys(sim, sim_defaults, ('sim',))
        flat = {key: value for key, value in sim.items() if key != 'initial_state'}
        flat_defaults = {key: value for key, value in sim_defaults.items() if key != 'initial_state'}
        sim_values = self.section(flat, flat_defaults, ('sim',))
        for key in ('dt', 't_end'):
            if overrides.get(key) is not None:
                sim_values[key] = self.number(overrides[key], ('sim', key))
                self.overridden.add(('sim', key))
        self.validate(SimForm, sim_values, ('sim',))
        initial = self.section(sim.get('initial_state'), sim_defaults['initial_state'],
                               ('sim', 'initial_state'))
        self.validate(InitialStateForm, {k: v for k, v in initial.items() if v is not None},
                      ('sim', 'initial_state'))
        sim_values['initial_state'] = initial
        result['sim'] = sim_values

        output = self.section(document.get('output'), self.defaults['output'], ('output',))
        self.validate(OutputForm, {k: v for k, v in output.items() if k != 'plot_extent'}, ('output',))
        result['output'] = output

        self.check_cross_fields(result)
        return result

    def check_cross_fields(self, document):
        robot_class = document['robot']['class']
        initial = document['sim']['initial_state']
        if robot_class == RobotClass.TWO_R.value and initial['psi'] != 0.0:
            raise self.error(('sim', 'initial_state', 'psi'), '2R robots cannot turn; psi must be 0')
        if robot_class == RobotClass.RS.value and abs(initial['phi']) > document['robot']['phi_max']:
            raise self.error(('sim', 'initial_state', 'phi'), 'initial tilt exceeds robot.phi_max')
        if initial['z'] is not None:
            surface = build_surface(document['surface']['kind'], document['surface']['params'])
            gap = abs(initial['z'] - surface.eval(initial['x'], initial['y']))
            if gap > document['sim']['z_tol']:
                raise self.error(('sim', 'initial_state', 'z'),
                                 f"contact point is {gap:.3e} m off the surface (z_tol {document['sim']['z_tol']:g})")


@dataclass(frozen=True)
class ScenarioConfig:
    """A validated scenario document with every default filled in"""
    document: dict
    source: str = '<string>'

    def to_json(self):
        return canonical_json(self.document)

    @property
    def robot_class(self):
        return RobotClass(self.document['robot']['class'])

    @property
    def output(self):
        return self.document['output']

    @property
    def gains(self):
        return Gains(**self.document['gains'])

    def surface(self):
        section = self.document['surface']
        return build_surface(section['kind'], section['params'])

    def build_scenario(self, robot_class=None):
        robot_class = robot_class or self.robot_class
        surface = self.surface()
        path_section = self.document['path']
        path = build_path(path_section['name'], path_section['variant'], path_section['params'], surface)
        sim = self.document['sim']
        initial = sim['initial_state']
        z = initial['z'] if initial['z'] is not None else surface.eval(initial['x'], initial['y'])
        state = RobotState(p0=(initial['x'], initial['y'], z), theta=initial['theta'],
                           phi=initial['phi'], psi=initial['psi'], alpha=initial['alpha'])
        scenario = Scenario(
            surface=surface,
            robot_class=self.robot_class,
            radius=self.document['robot']['R'],
            path=path,
            initial_state=state,
            gains=self.gains,
            t_end=sim['t_end'],
            dt=sim['dt'],
            phi_max=self.document['robot']['phi_max'],
            z_tol=sim['z_tol'],
            label=path.label,
        )
        if robot_class is not scenario.robot_class:
            scenario = scenario.for_class(robot_class)
        return scenario


def parse_scenario(text, defaults, surface_params, path_params, source='<string>',
                   dt=None, t_end=None, path_variant=None):
    """Validate a JSON scenario document and fill in defaults.

    ``dt``, ``t_end`` and ``path_variant`` override the document before it is
    validated.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(e.msg, line=e.lineno, source=source)
    loader = _Loader(text, source, defaults, surface_params, path_params)
    overrides = {'dt': dt, 't_end': t_end, 'path_variant': path_variant}
    return ScenarioConfig(document=loader.load(document, overrides), source=source)


def load_scenario(path, defaults, surface_params, path_params, **overrides):
    try:
        with open(path, encoding='utf-8') as handle:
            text = handle.read()
    except OSError as e:
        raise ConfigError(f"cannot read config: {e.strerror}", source=str(path))
    return parse_scenario(text, defaults, surface_params, path_params, source=str(path), **overrides)
