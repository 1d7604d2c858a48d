from flask.cli import FlaskGroup

from app import create_app
from app.control.pursuit import Gains
from app.models.enums import RobotClass
from app.sim import compare, run
from app.terrain.surfaces import build_surface

app = create_app()


@app.shell_context_processor
def make_shell_context():
    """Add the simulation entry points to the shell context"""
    return {
        'RobotClass': RobotClass,
        'Gains': Gains,
        'build_surface': build_surface,
        'run': run,
        'compare': compare,
    }


cli = FlaskGroup(create_app=lambda: app)


if __name__ == '__main__':
    # python run.py sim run --config scenarios/benchmark.json
    cli()
