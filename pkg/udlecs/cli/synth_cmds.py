import os

import click

from udlecs.loggers import ExceptionLogger, current_report
from udlecs.mud import synthesize_region_muds, write_mud, write_groups
from udlecs.traffic import SynthProfile, synthesize_log, format_log
from udlecs.constants import RegionData
from .options import parse_regions, emit, out_option, summarize


def _seed() -> int:
    return click.get_current_context().obj.get('seed', 0)


@click.group('synth')
def synth_group():
    "生成合成数据，随机性由 --seed 决定"


@synth_group.command('log')
@click.option('--devices', type=click.IntRange(min=1), default=8, show_default=True)
@click.option('--regions', default='HK,UK,US', show_default=True, help='comma-separated region codes')
@click.option('--days', type=click.IntRange(min=1), default=7, show_default=True)
@out_option
@ExceptionLogger.handle_command_exception
def synth_log(devices, regions, days, out_path):
    profile = SynthProfile(
        devices=devices,
        regions=tuple(parse_regions(regions)),
        days=days
    )
    log = synthesize_log(_seed(), profile)
    summarize(records=len(log.records), devices=len(log.devices))
    emit(format_log(log), out_path)


@synth_group.command('muds')
@click.option('--out', 'out_dir', required=True, type=click.Path(file_okay=False), help='output directory')
@click.option('--regions', default=None, help='comma-separated region codes, defaults to the built-in list')
@click.option('--services', type=click.IntRange(min=1), default=2, show_default=True)
@click.option('--shared', type=click.IntRange(min=0), default=1, show_default=True)
@ExceptionLogger.handle_command_exception
def synth_muds(out_dir, regions, services, shared):
    "每个地区一个MUD文件(<region>.json)，以及 groups.json"
    region_list = parse_regions(regions) if regions else list(RegionData.DefaultRegions)
    muds, groups = synthesize_region_muds(_seed(), region_list, services, shared)
    report = current_report()
    for mud, region in zip(muds, region_list):
        path = os.path.join(out_dir, f'{region}.json')
        write_mud(mud, path)
        report.add_output(path)
    groups_path = os.path.join(out_dir, 'groups.json')
    write_groups(groups, groups_path)
    report.add_output(groups_path)
    summarize(muds=len(muds), groups=len(groups))
