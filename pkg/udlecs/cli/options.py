import click

from udlecs.loggers import current_report
from udlecs.utils import JsonUtils, StringUtils


# 各子命令共用的参数
log_option = click.option('--log', 'log_path', required=True, type=click.Path(exists=True, dir_okay=False), help='capture log')
device_option = click.option('--device', required=True, help='device id')
out_option = click.option('--out', 'out_path', default=None, type=click.Path(dir_okay=False), help='output file, stdout when omitted')
pool_option = click.option(
    '--pool-threshold', type=click.IntRange(min=0), default=None,
    help='minimum pool size for collapsing numbered names, 0 disables'
)


def emit(text: str, out_path: str = None) -> None:
    "写入结果文件(原子替换)或输出到stdout"
    if out_path:
        JsonUtils.write_text(out_path, text)
        current_report().add_output(out_path)
    else:
        click.echo(text, nl=False)


def record_input(path: str) -> None:
    current_report().add_input(path)


def summarize(**values) -> None:
    current_report().summary.update(values)


def parse_regions(value: str, param_hint: str = '--regions') -> list:
    "逗号分隔的地区代码"
    regions = [item.strip().upper() for item in value.split(',') if item.strip()]
    for region in regions:
        if not StringUtils.is_valid_region(region):
            raise click.BadParameter(f'{region!r} is not a two-letter region code', param_hint=param_hint)
    return regions
