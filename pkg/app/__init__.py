from flask import Flask

from config import config_by_name


def create_app(config_class='config.DevelopmentConfig'):
    app = Flask(__name__)

    # Load configuration; short names such as 'testing' are accepted too
    app.config.from_object(config_by_name.get(config_class, config_class))

    # Module loggers live under the app logger and share its handler
    app.logger.setLevel(app.config.get('LOG_LEVEL', 'INFO'))

    from app.cli import register_commands
    register_commands(app)

    return app
