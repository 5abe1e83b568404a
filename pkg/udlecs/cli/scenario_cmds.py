import click
import pandas as pd

from udlecs.constants import ResolverPresets
from udlecs.loggers import ExceptionLogger
from udlecs.resolver_sim import run_scenario_file, transcript_csv, probe_ecs_forwarding, preset_policy
from .options import emit, out_option, record_input, summarize


@click.group('scenario')
def scenario_group():
    "设备到权威服务器的解析流程模拟"


@scenario_group.command('run')
@click.argument('scenario_path', type=click.Path(exists=True, dir_okay=False))
@click.option('--zone', 'zone_path', default=None, type=click.Path(exists=True, dir_okay=False), help='zone file, overrides the scenario')
@out_option
@ExceptionLogger.handle_command_exception
def scenario_run(scenario_path, zone_path, out_path):
    "运行场景文件，输出逐跳的 transcript"
    record_input(scenario_path)
    if zone_path:
        record_input(zone_path)
    transcript = run_scenario_file(scenario_path, zone_path)
    summarize(
        architecture=transcript.architecture,
        delivered=' '.join(str(ip) for ip in transcript.delivered),
        hops=len(transcript.hops)
    )
    emit(transcript_csv(transcript), out_path)


@scenario_group.command('probe')
@click.option('--preset', required=True, type=click.Choice(sorted(ResolverPresets), case_sensitive=False))
@out_option
@ExceptionLogger.handle_command_exception
def scenario_probe(preset, out_path):
    "检查公共解析器预设是否原样转发 111.111.111.0/24"
    probe = probe_ecs_forwarding(preset_policy(preset))
    summarize(preset=preset, forwarded=probe.forwarded)
    frame = pd.DataFrame([{'preset': preset.lower(), **probe.model_dump()}])
    emit(frame.to_csv(index=False, lineterminator='\n'), out_path)
