import click
import pandas as pd

from udlecs.loggers import ExceptionLogger
from udlecs.mud import (
    AceTemplate, generate_mud, unify, ecs_collapse, suggest_groups, domain_count,
    reduction_sweep, overhead_ratio, mud_similarity,
    load_mud, serialize_mud, load_groups, groups_document
)
from udlecs.traffic import ingest_log, domain_set
from udlecs.utils import JsonUtils, StringUtils
from .options import parse_regions, emit, log_option, device_option, out_option, pool_option, record_input, summarize


def _load_muds(paths):
    muds = []
    for path in paths:
        record_input(path)
        muds.append(load_mud(path))
    return muds


def _load_groups(path):
    if path is None:
        return []
    record_input(path)
    return load_groups(path)


@click.group('mud')
def mud_group():
    "MUD 文件的生成、合并与ECS折叠"


@mud_group.command('generate')
@log_option
@device_option
@click.option('--ipl', required=True)
@click.option('--udl', required=True)
@click.option('--protocol', type=click.Choice(['tcp', 'udp', 'icmp', 'any']), default='tcp', show_default=True)
@click.option('--dst-port', type=click.IntRange(0, 65535), default=443, show_default=True)
@click.option('--direction', type=click.Choice(['from_device', 'to_device']), default='from_device', show_default=True)
@pool_option
@out_option
@ExceptionLogger.handle_command_exception
def mud_generate(log_path, device, ipl, udl, protocol, dst_port, direction, pool_threshold, out_path):
    "由一个 (设备, ℓ, ℓ′) 的域名集合生成 MUD 文件"
    record_input(log_path)
    ds = domain_set(ingest_log(log_path), device, ipl, udl, pool_threshold=pool_threshold)
    template = AceTemplate(
        protocol=protocol,
        destination_port=None if protocol == 'icmp' else dst_port,
        direction=direction
    )
    mud = generate_mud(ds, device, template)
    summarize(domains=domain_count(mud))
    emit(serialize_mud(mud).decode('utf-8'), out_path)


@mud_group.command('unify')
@click.argument('mud_paths', nargs=-1, required=True, type=click.Path(exists=True, dir_okay=False))
@out_option
@ExceptionLogger.handle_command_exception
def mud_unify(mud_paths, out_path):
    "多个地区的 MUD 文件取并集"
    unified = unify(_load_muds(mud_paths))
    summarize(domains=domain_count(unified))
    emit(serialize_mud(unified).decode('utf-8'), out_path)


@mud_group.command('collapse')
@click.argument('mud_path', type=click.Path(exists=True, dir_okay=False))
@click.option('--groups', 'groups_path', required=True, type=click.Path(exists=True, dir_okay=False))
@out_option
@ExceptionLogger.handle_command_exception
def mud_collapse(mud_path, groups_path, out_path):
    "地区域名替换为统一域名"
    unified = _load_muds([mud_path])[0]
    collapsed, report = ecs_collapse(unified, _load_groups(groups_path))
    for canonical, region, variant in report.unmatched:
        click.echo(f'unmatched variant {variant} ({region}) of {canonical}', err=True)
    for canonical, count in report.splits:
        click.echo(f'group {canonical} split into {count} entries', err=True)
    summarize(
        unified_domains=domain_count(unified),
        ecs_domains=domain_count(collapsed),
        unmatched=len(report.unmatched),
        splits=len(report.splits)
    )
    emit(serialize_mud(collapsed).decode('utf-8'), out_path)


@mud_group.command('compare')
@click.argument('mud_paths', nargs=-1, required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--groups', 'groups_path', required=True, type=click.Path(exists=True, dir_okay=False))
@out_option
@ExceptionLogger.handle_command_exception
def mud_compare(mud_paths, groups_path, out_path):
    "按给定顺序逐个加入地区，比较统一MUD与ECS MUD的域名数量"
    muds = _load_muds(mud_paths)
    groups = _load_groups(groups_path)
    rows = reduction_sweep(muds, groups)
    unified = unify(muds)
    collapsed, _ = ecs_collapse(unified, groups)
    summarize(
        locations=len(rows),
        final_ratio=StringUtils.fraction_to_decimal(rows[-1].ratio),
        overhead=StringUtils.fraction_to_decimal(overhead_ratio(unified, collapsed))
    )
    frame = pd.DataFrame(
        [
            (row.locations_included, row.unified_domains, row.ecs_domains, StringUtils.fraction_to_decimal(row.ratio))
            for row in rows
        ],
        columns=['locations_included', 'unified_domains', 'ecs_domains', 'ratio']
    )
    emit(frame.to_csv(index=False, lineterminator='\n'), out_path)


@mud_group.command('suggest')
@click.argument('mud_paths', nargs=-1, required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--regions', default=None, help='comma-separated region codes, defaults to the built-in list')
@out_option
@ExceptionLogger.handle_command_exception
def mud_suggest(mud_paths, regions, out_path):
    "根据域名中的地区标签给出分组建议，使用前需要人工确认"
    domains = set()
    for mud in _load_muds(mud_paths):
        domains.update(mud.domains)
    region_list = parse_regions(regions) if regions else None
    groups = suggest_groups(domains, region_list)
    summarize(groups=len(groups))
    emit(JsonUtils.dumps(groups_document(groups)), out_path)


@mud_group.command('similarity')
@click.argument('first_path', type=click.Path(exists=True, dir_okay=False))
@click.argument('second_path', type=click.Path(exists=True, dir_okay=False))
@ExceptionLogger.handle_command_exception
def mud_similarity_cmd(first_path, second_path):
    "两个 MUD 文件规则集合的 Jaccard 相似度"
    first, second = _load_muds([first_path, second_path])
    value = mud_similarity(first, second)
    summarize(similarity=str(value))
    emit(f'similarity\n{StringUtils.fraction_to_decimal(value)}\n')
