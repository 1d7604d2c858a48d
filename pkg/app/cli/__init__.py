from app.cli.commands import register_commands, sim_cli
