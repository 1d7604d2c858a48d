import click
import numpy as np
from flask import current_app
from flask.cli import AppGroup

from app.frames.contact import frames_report
from app.services.simulation_service import SimulationService
from app.terrain.surfaces import SinusoidalParams, make_plane, make_sinusoidal
from app.utils.errors import ConfigError, SpherekinError

sim_cli = AppGroup('sim', help='Spherical robot kinematics simulation.')


def register_commands(app):
    """Register CLI commands with the app"""
    app.cli.add_command(sim_cli)


def _exit(kind, message=None):
    if message:
        click.echo(message, err=True)
    raise click.exceptions.Exit(current_app.config['EXIT_CODES'][kind])


def scenario_options(command):
    command = click.option('--path-variant', type=click.Choice(['literal', 'sine-corrected']),
                           help='Override path.variant.')(command)
    command = click.option('--t-end', 't_end', type=float, help='Override sim.t_end (s).')(command)
    command = click.option('--dt', type=float, help='Override sim.dt (s).')(command)
    command = click.option('--config', 'config_path', required=True,
                           type=click.Path(dir_okay=False), help='Scenario JSON file.')(command)
    return command


def _echo_summary(summary, bound):
    reached = 'never' if summary.time_to_bound is None else f"{summary.time_to_bound:.2f} s"
    click.echo(f"{summary.robot_class.value:>3}  final |e| {summary.final_error:.6f} m  "
               f"mean |e| (last 20%) {summary.tail_mean_error:.6f} m  "
               f"max contact correction {summary.max_correction:.3e} m  "
               f"below {bound:g} m from {reached}")


def _load(service, config_path, dt, t_end, path_variant):
    try:
        return service.load(config_path, dt=dt, t_end=t_end, path_variant=path_variant)
    except ConfigError as e:
        _exit('config_error', f"Config error: {e}")


@sim_cli.command('run')
@scenario_options
@click.option('--out', type=click.Path(file_okay=False), help='Output directory.')
def run_command(config_path, dt, t_end, path_variant, out):
    """Run one scenario and write trajectory.csv"""
    service = SimulationService()
    scenario_config = _load(service, config_path, dt, t_end, path_variant)
    try:
        result = service.run(scenario_config, out)
    except (SpherekinError, ValueError) as e:
        _exit('run_failure', f"Run failed: {e}")
    for summary in result.summaries.values():
        _echo_summary(summary, service.bound)
    click.echo(f"Wrote {len(result.files)} files to {result.output_dir}")


@sim_cli.command('compare')
@scenario_options
@click.option('--out', type=click.Path(file_okay=False), help='Output directory.')
def compare_command(config_path, dt, t_end, path_variant, out):
    """Run all four robot classes on the same scenario"""
    service = SimulationService()
    scenario_config = _load(service, config_path, dt, t_end, path_variant)
    try:
        result = service.compare(scenario_config, out)
    except (SpherekinError, ValueError) as e:
        _exit('run_failure', f"Run failed: {e}")
    for summary in result.summaries.values():
        _echo_summary(summary, service.bound)
    click.echo(f"Wrote {len(result.files)} files to {result.output_dir}")


@sim_cli.command('validate')
@scenario_options
def validate_command(config_path, dt, t_end, path_variant):
    """Check a scenario file and print its canonical form"""
    service = SimulationService()
    scenario_config = _load(service, config_path, dt, t_end, path_variant)
    click.echo(scenario_config.to_json(), nl=False)


def _format_value(value):
    if isinstance(value, np.ndarray):
        with np.printoptions(precision=12, suppress=True, floatmode='maxprec'):
            text = np.array2string(value, separator=', ')
        return '\n' + text if value.ndim > 1 else text
    if isinstance(value, float):
        return f"{value:.15g}"
    return str(value)


@sim_cli.command('frames-check')
@click.option('--surface', 'kind', type=click.Choice(['sinusoidal', 'plane']), default='sinusoidal')
@click.option('--a', type=float, default=0.2, help='Sinusoid amplitude (m).')
@click.option('--omega', type=float, default=2.0, help='Sinusoid spatial frequency (1/m).')
@click.option('--slope-x', type=float, default=0.0)
@click.option('--slope-y', type=float, default=0.0)
@click.option('--x', type=float, default=0.0)
@click.option('--y', type=float, default=0.0)
@click.option('--psi', type=float, default=0.0, help='Heading angle (rad).')
def frames_check_command(kind, a, omega, slope_x, slope_y, x, y, psi):
    """Print the contact-frame quantities at one surface point"""
    try:
        if kind == 'sinusoidal':
            surface = make_sinusoidal(SinusoidalParams(a=a, omega=omega))
        else:
            surface = make_plane(slope_x, slope_y)
    except ValueError as e:
        _exit('config_error', f"Invalid surface: {e}")
    for name, value in frames_report(surface, x, y, psi).items():
        click.echo(f"{name}: {_format_value(value)}")
