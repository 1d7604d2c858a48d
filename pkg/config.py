import math
import os

from dotenv import load_dotenv

basedir = os.path.abspath(os.path.dirname(__file__))
load_dotenv(os.path.join(basedir, '.env'))


class Config:
    # Output
    SPHEREKIN_OUT = os.environ.get('SPHEREKIN_OUT') or os.path.join(basedir, 'output')

    # Logging
    LOG_LEVEL = os.environ.get('LOG_LEVEL') or 'INFO'

    # Compare mode runs one class per worker thread
    COMPARE_WORKERS = int(os.environ.get('COMPARE_WORKERS') or 4)

    # Tracking error a run must stay under to count as converged (meters)
    CONVERGENCE_BOUND = float(os.environ.get('CONVERGENCE_BOUND') or 0.3)

    EXIT_CODES = {'ok': 0, 'config_error': 2, 'run_failure': 3}

    # Parameter records filled in per surface kind / path name
    SURFACE_PARAM_DEFAULTS = {
        'sinusoidal': {'a': 0.2, 'omega': 2.0},
        'plane': {'slope_x': 0.0, 'slope_y': 0.0},
    }
    PATH_PARAM_DEFAULTS = {
        'benchmark': {'amplitude': 2.0, 'rate': 0.05},
        'circle': {'center_x': 0.0, 'center_y': 0.0, 'radius': 1.0, 'rate': 0.1, 'phase': 0.0},
        'line': {'start_x': 0.0, 'start_y': 0.0, 'heading': 0.0, 'speed': 0.1},
    }

    # Documented scenario defaults; a config file only lists what it changes
    SCENARIO_DEFAULTS = {
        'surface': {'kind': 'sinusoidal', 'params': {}},
        'robot': {'class': '3R', 'R': 0.2, 'phi_max': math.pi / 4},
        'gains': {
            'k_theta': 5.0,
            'k_theta1': 5.0,
            'k_theta2': 0.5,
            'k_phi1': 5.0,
            'k_phi2': 0.5,
            'k_psi': 4.0,
            'k_alpha': 5.0,
            'k_phi': 2.0,
            'k_e': 1.0,
            'e_steer': 0.01,
        },
        'path': {'name': 'benchmark', 'variant': 'sine-corrected', 'params': {}},
        'sim': {
            'dt': 0.01,
            't_end': 100.0,
            'z_tol': 1e-6,
            'initial_state': {'x': 0.5, 'y': -0.5, 'z': None,
                              'theta': 0.0, 'phi': 0.0, 'psi': 0.0, 'alpha': 0.0},
        },
        'output': {'directory': None, 'emit_plot_script': True, 'plot_extent': None},
    }


class DevelopmentConfig(Config):
    DEBUG = True
    LOG_LEVEL = os.environ.get('LOG_LEVEL') or 'DEBUG'


class TestingConfig(Config):
    TESTING = True
    LOG_LEVEL = 'WARNING'
    COMPARE_WORKERS = 2


class ProductionConfig(Config):
    LOG_LEVEL = os.environ.get('LOG_LEVEL') or 'WARNING'


config_by_name = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': DevelopmentConfig,
}
