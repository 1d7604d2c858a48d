"""WTForms validation for each section of a scenario document.

Values reach these forms already type-checked and converted to float, str
or bool, so the validators only judge ranges and choices.
"""
import math

from wtforms import BooleanField, FloatField, Form, StringField
from wtforms.validators import AnyOf, NumberRange, ValidationError


class Positive:
    def __init__(self, message=None):
        self.message = message or 'must be positive'

    def __call__(self, form, field):
        if field.data is None or not field.data > 0:
            raise ValidationError(self.message)


class SurfaceForm(Form):
    kind = StringField('kind', validators=[AnyOf(['sinusoidal', 'plane'])])


class SinusoidalSurfaceForm(Form):
    a = FloatField('a', validators=[NumberRange(min=0, message='must be non-negative')])
    omega = FloatField('omega')


class PlaneSurfaceForm(Form):
    slope_x = FloatField('slope_x')
    slope_y = FloatField('slope_y')


class RobotForm(Form):
    robot_class = StringField('class', validators=[AnyOf(['3R', '2R', 'RT', 'RS'])])
    R = FloatField('R', validators=[Positive()])
    phi_max = FloatField('phi_max', validators=[
        NumberRange(max=math.pi / 2, message='must not exceed pi/2'),
    ])

    def validate_phi_max(self, field):
        if field.data is None or field.data <= 0:
            raise ValidationError('must be positive')


class GainsForm(Form):
    k_theta = FloatField('k_theta', validators=[Positive()])
    k_theta1 = FloatField('k_theta1', validators=[Positive()])
    k_theta2 = FloatField('k_theta2', validators=[Positive()])
    k_phi1 = FloatField('k_phi1', validators=[Positive()])
    k_phi2 = FloatField('k_phi2', validators=[Positive()])
    k_psi = FloatField('k_psi', validators=[Positive()])
    k_alpha = FloatField('k_alpha', validators=[Positive()])
    k_phi = FloatField('k_phi', validators=[Positive()])
    k_e = FloatField('k_e', validators=[Positive()])
    e_steer = FloatField('e_steer', validators=[Positive()])


class PathForm(Form):
    name = StringField('name', validators=[AnyOf(['benchmark', 'circle', 'line'])])
    variant = StringField('variant', validators=[AnyOf(['literal', 'sine-corrected'])])


class BenchmarkPathForm(Form):
    amplitude = FloatField('amplitude', validators=[Positive()])
    rate = FloatField('rate')


class CirclePathForm(Form):
    center_x = FloatField('center_x')
    center_y = FloatField('center_y')
    radius = FloatField('radius', validators=[Positive()])
    rate = FloatField('rate')
    phase = FloatField('phase')


class LinePathForm(Form):
    start_x = FloatField('start_x')
    start_y = FloatField('start_y')
    heading = FloatField('heading')
    speed = FloatField('speed', validators=[NumberRange(min=0, message='must be non-negative')])


class SimForm(Form):
    dt = FloatField('dt', validators=[Positive()])
    t_end = FloatField('t_end', validators=[Positive()])
    z_tol = FloatField('z_tol', validators=[Positive()])

    def validate_dt(self, field):
        if field.data and self.t_end.data and field.data > self.t_end.data:
            raise ValidationError('must not exceed t_end')


class InitialStateForm(Form):
    x = FloatField('x')
    y = FloatField('y')
    z = FloatField('z')
    theta = FloatField('theta')
    phi = FloatField('phi')
    psi = FloatField('psi')
    alpha = FloatField('alpha')


class OutputForm(Form):
    directory = StringField('directory')
    emit_plot_script = BooleanField('emit_plot_script')

    def validate_directory(self, field):
        if field.data is not None and not field.data.strip():
            raise ValidationError('must not be blank')


SURFACE_PARAM_FORMS = {
    'sinusoidal': SinusoidalSurfaceForm,
    'plane': PlaneSurfaceForm,
}

PATH_PARAM_FORMS = {
    'benchmark': BenchmarkPathForm,
    'circle': CirclePathForm,
    'line': LinePathForm,
}
