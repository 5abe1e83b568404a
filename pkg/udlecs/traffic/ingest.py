import ipaddress
from typing import Dict, List, Tuple

from pydantic import ValidationError

from udlecs.core import ParseError, toolkit_logger
from udlecs.utils import JsonUtils
from .schemas import CaptureLog, CaptureRecord


# ------------------------------------------------------
# 每行一条记录:
# ts=<int> dev=<id> ipl=<region> udl=<region> q=<name> a=<ip>[,<ip>...]
# 空行和 # 开头的行忽略
# ------------------------------------------------------

REQUIRED_FIELDS = ('ts', 'dev', 'ipl', 'udl', 'q')
KNOWN_FIELDS = REQUIRED_FIELDS + ('a',)


def _split_fields(line: str) -> Dict[str, str]:
    fields: Dict[str, str] = {}
    for token in line.split():
        key, sep, value = token.partition('=')
        if not sep:
            raise ValueError(f'token {token!r} is not key=value')
        if key not in KNOWN_FIELDS:
            raise ValueError(f'unknown field {key!r}')
        if key in fields:
            raise ValueError(f'field {key!r} given twice')
        fields[key] = value
    missing = [key for key in REQUIRED_FIELDS if key not in fields]
    if missing:
        raise ValueError(f'missing field(s) {", ".join(missing)}')
    return fields


def parse_record(line: str) -> CaptureRecord:
    fields = _split_fields(line)
    if not fields['ts'].isdigit():
        raise ValueError(f'timestamp {fields["ts"]!r} is not a non-negative integer')
    ips = tuple(ipaddress.ip_address(text) for text in fields.get('a', '').split(',') if text)
    try:
        return CaptureRecord(
            timestamp=int(fields['ts']),
            device_id=fields['dev'],
            ip_based_location=fields['ipl'],
            user_defined_location=fields['udl'],
            qname=fields['q'],
            resolved_ips=ips
        )
    except ValidationError as e:
        first = e.errors()[0]
        raise ValueError(f'{"/".join(str(part) for part in first["loc"])}: {first["msg"]}')


def parse_log(text: str, source: str = '<log>') -> CaptureLog:
    records: List[CaptureRecord] = []
    errors: List[Tuple[int, str]] = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        try:
            records.append(parse_record(line))
        except ValueError as e:
            errors.append((number, str(e)))
    if errors:
        first_line, first_message = errors[0]
        raise ParseError(
            f'{len(errors)} invalid record(s); first: {first_message}',
            f'{source}: line {first_line}',
            errors=errors
        )
    resorted = any(a.timestamp > b.timestamp for a, b in zip(records, records[1:]))
    if resorted:
        # 稳定排序，相同时间戳保持输入顺序
        records.sort(key=lambda record: record.timestamp)
        toolkit_logger.warning(f'{source}: timestamps are not non-decreasing, records were sorted')
    toolkit_logger.debug(f'Ingested {len(records)} records from {source}')
    return CaptureLog(records=tuple(records), resorted=resorted, source=source)


def ingest_log(path: str) -> CaptureLog:
    try:
        text = JsonUtils.read_text(path)
    except OSError as e:
        raise ParseError(e.strerror or str(e), path)
    return parse_log(text, path)


def format_record(record: CaptureRecord) -> str:
    line = (
        f'ts={record.timestamp} dev={record.device_id} ipl={record.ip_based_location} '
        f'udl={record.user_defined_location} q={record.qname}'
    )
    if record.resolved_ips:
        line += ' a=' + ','.join(str(ip) for ip in record.resolved_ips)
    return line


def format_log(log: CaptureLog) -> str:
    return ''.join(format_record(record) + '\n' for record in log.records)
