import click

from udlecs.loggers import ExceptionLogger
from udlecs.traffic import (
    ingest_log, uds, ipbs, stabilization_time, cumulative_counts,
    similarity_matrix, location_impact
)
from udlecs.traffic.report import (
    to_csv, similarity_frame, stabilization_frame, series_frame,
    matrix_frame, impact_frame, impact_cdf_frame
)
from .options import parse_regions, emit, log_option, device_option, out_option, pool_option, record_input, summarize


def _load(log_path: str):
    record_input(log_path)
    log = ingest_log(log_path)
    for warning in log.warnings:
        click.echo(warning, err=True)
    return log


@click.group('analyze')
def analyze_group():
    "请求记录分析"


@analyze_group.command('uds')
@log_option
@device_option
@click.option('--ipl', required=True, help='IP-based location held fixed')
@click.option('--first', required=True, help='first user-defined location')
@click.option('--second', required=True, help='second user-defined location')
@pool_option
@out_option
@ExceptionLogger.handle_command_exception
def analyze_uds(log_path, device, ipl, first, second, pool_threshold, out_path):
    log = _load(log_path)
    value = uds(log, device, ipl, first, second, pool_threshold)
    summarize(uds=str(value))
    frame = similarity_frame('uds', value, device_id=device, ip_based_location=ipl, first=first, second=second)
    emit(to_csv(frame), out_path)


@analyze_group.command('ipbs')
@log_option
@device_option
@click.option('--udl', required=True, help='user-defined location held fixed')
@click.option('--first', required=True, help='first IP-based location')
@click.option('--second', required=True, help='second IP-based location')
@pool_option
@out_option
@ExceptionLogger.handle_command_exception
def analyze_ipbs(log_path, device, udl, first, second, pool_threshold, out_path):
    log = _load(log_path)
    value = ipbs(log, device, udl, first, second, pool_threshold)
    summarize(ipbs=str(value))
    frame = similarity_frame('ipbs', value, device_id=device, user_defined_location=udl, first=first, second=second)
    emit(to_csv(frame), out_path)


@analyze_group.command('stabilize')
@log_option
@device_option
@click.option('--ipl', required=True)
@click.option('--udl', required=True)
@out_option
@ExceptionLogger.handle_command_exception
def analyze_stabilize(log_path, device, ipl, udl, out_path):
    log = _load(log_path)
    value = stabilization_time(log, device, ipl, udl)
    summarize(stabilization_time=value)
    emit(to_csv(stabilization_frame(device, ipl, udl, value)), out_path)


@analyze_group.command('cumulative')
@log_option
@device_option
@click.option('--ipl', required=True)
@click.option('--udl', required=True)
@click.option('--bucket-seconds', type=click.IntRange(min=1), default=86400, show_default=True)
@out_option
@ExceptionLogger.handle_command_exception
def analyze_cumulative(log_path, device, ipl, udl, bucket_seconds, out_path):
    log = _load(log_path)
    points = cumulative_counts(log, device, ipl, udl, bucket_seconds)
    summarize(points=len(points))
    emit(to_csv(series_frame(points)), out_path)


@analyze_group.command('matrix')
@log_option
@device_option
@click.option('--fixed', required=True, help='IP-based location held fixed')
@click.option('--regions', required=True, help='comma-separated user-defined locations')
@pool_option
@out_option
@ExceptionLogger.handle_command_exception
def analyze_matrix(log_path, device, fixed, regions, pool_threshold, out_path):
    regions = parse_regions(regions)
    if len(regions) < 2:
        raise click.BadParameter('at least two regions are required', param_hint='--regions')
    log = _load(log_path)
    matrix = similarity_matrix(log, device, fixed, regions, pool_threshold)
    summarize(regions=len(regions))
    emit(to_csv(matrix_frame(regions, matrix), index=True), out_path)


@analyze_group.command('impact')
@log_option
@click.option('--first', required=True, help='first region')
@click.option('--second', required=True, help='second region')
@click.option('--cdf-out', 'cdf_path', default=None, type=click.Path(dir_okay=False), help='also write the per-metric CDF table')
@pool_option
@out_option
@ExceptionLogger.handle_command_exception
def analyze_impact(log_path, first, second, cdf_path, pool_threshold, out_path):
    "两个地区之间每个设备的 uds / ipbs"
    log = _load(log_path)
    rows = location_impact(log, first, second, pool_threshold)
    summarize(devices=len(rows))
    if cdf_path:
        emit(to_csv(impact_cdf_frame(rows, first, second)), cdf_path)
    emit(to_csv(impact_frame(rows, first, second)), out_path)
