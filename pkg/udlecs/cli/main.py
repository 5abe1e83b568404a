import click

from udlecs.core import EnvConfig, init_logger
from .scenario_cmds import scenario_group
from .analyze_cmds import analyze_group
from .mud_cmds import mud_group
from .synth_cmds import synth_group


LOG_LEVELS = ['debug', 'info', 'warning', 'error']


@click.group()
@click.option('--seed', type=int, default=0, show_default=True, help='seed for synthetic data')
@click.option('--log-level', type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None, help='overrides UDLECS_LOG_LEVEL')
@click.option('--report', 'report_path', default=None, type=click.Path(dir_okay=False), help='write the run report as JSON')
@click.pass_context
def cli(ctx, seed, log_level, report_path):
    "ECS user-defined location toolkit"
    ctx.ensure_object(dict)
    ctx.obj['seed'] = seed
    ctx.obj['report_path'] = report_path
    init_logger(log_level or EnvConfig.get_config().LOG_LEVEL)


cli.add_command(scenario_group)
cli.add_command(analyze_group)
cli.add_command(mud_group)
cli.add_command(synth_group)


def main():
    cli(prog_name='udlecs')
