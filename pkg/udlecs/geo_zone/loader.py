import json
import ipaddress
from typing import Dict, List, Tuple

from pydantic import ValidationError

from udlecs.core import ParseError, OverlapError, DefaultMismatch, toolkit_logger
from udlecs.dns_wire import canonical_name
from udlecs.utils import JsonUtils, PrefixUtils, IPNetwork
from .prefix_map import make_prefix_map
from .schemas import (
    GeoZone, QnameRecords, RegionalAnswer, LocationPrefixMap,
    ZoneDocument, RecordDocument, AnswerDocument
)


def _error_path(loc: tuple) -> str:
    return '/'.join(str(part) for part in loc)


def _parse_prefix(text: str, field: str) -> IPNetwork:
    try:
        return PrefixUtils.parse_network(text)
    except ValueError as e:
        raise ParseError(str(e), field)


def _parse_address(text: str, field: str):
    try:
        return ipaddress.ip_address(text)
    except ValueError as e:
        raise ParseError(str(e), field)


def _build_records(qname: str, doc: RecordDocument, regions: LocationPrefixMap) -> QnameRecords:
    answers: List[RegionalAnswer] = []
    seen: Dict[IPNetwork, str] = {}
    for key, value in doc.answers.items():
        field = f'records/{qname}/answers/{key}'
        if key in regions.entries:
            prefix, region = regions.entries[key], key
        elif '/' in key:
            prefix, region = _parse_prefix(key, field), regions.region_of(_parse_prefix(key, field).network_address)
        else:
            raise ParseError(f'{key!r} is neither a region in the regions table nor a CIDR prefix', field)
        if prefix in seen:
            raise OverlapError(f'prefix {prefix} listed twice ({seen[prefix]} and {key})', f'records/{qname}')
        seen[prefix] = key
        if isinstance(value, AnswerDocument):
            texts, ttl = value.addresses, value.ttl if value.ttl is not None else doc.ttl
        else:
            texts, ttl = value, doc.ttl
        if not texts:
            raise ParseError('regional answer has no addresses', field)
        addresses = tuple(_parse_address(text, f'{field}/{i}') for i, text in enumerate(texts))
        for address in addresses:
            if address.version != prefix.version:
                raise ParseError(f'address {address} is not in the family of {prefix}', field)
        answers.append(RegionalAnswer(prefix=prefix, addresses=addresses, ttl=ttl, region=region))
    union = tuple(dict.fromkeys(address for answer in answers for address in answer.addresses))
    if doc.default is not None:
        default = tuple(
            _parse_address(text, f'records/{qname}/default/{i}') for i, text in enumerate(doc.default)
        )
        if set(default) != set(union):
            raise DefaultMismatch(
                f'default {sorted(map(str, default))} != union of regional answers {sorted(map(str, union))}',
                f'records/{qname}'
            )
    else:
        default = union
    return QnameRecords(answers=tuple(answers), default=default, ttl=doc.ttl)


def parse_zone(text: str, source: str = '<zone>') -> GeoZone:
    if not text.strip():
        return GeoZone()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, f'{source}: line {e.lineno} column {e.colno}')
    try:
        doc = ZoneDocument.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        raise ParseError(first['msg'], f'{source}: {_error_path(first["loc"])}')
    entries = {region: _parse_prefix(text, f'regions/{region}') for region, text in doc.regions.items()}
    regions = make_prefix_map(entries)
    records: Dict[str, QnameRecords] = {}
    for qname, record_doc in doc.records.items():
        name = canonical_name(qname)
        if name in records:
            raise OverlapError(f'qname {name} defined twice', f'records/{qname}')
        records[name] = _build_records(name, record_doc, regions)
    zone = GeoZone(origin=canonical_name(doc.origin), regions=regions, records=records)
    toolkit_logger.debug(f'Loaded zone {zone.origin or source}: {len(records)} qnames, {len(entries)} regions')
    return zone


def load_zone(path: str) -> GeoZone:
    try:
        text = JsonUtils.read_text(path)
    except OSError as e:
        raise ParseError(e.strerror or str(e), path)
    return parse_zone(text, path)


def zone_to_document(zone: GeoZone) -> dict:
    "GeoZone -> zone 文件文档，用于生成测试数据"
    records = {}
    for qname, record in zone.records.items():
        answers = {}
        for answer in record.answers:
            key = answer.region if answer.region and zone.regions.entries.get(answer.region) == answer.prefix else str(answer.prefix)
            value = [str(address) for address in answer.addresses]
            answers[key] = value if answer.ttl == record.ttl else {'addresses': value, 'ttl': answer.ttl}
        records[qname] = {'ttl': record.ttl, 'answers': answers}
    return {
        'origin': zone.origin,
        'regions': {region: str(prefix) for region, prefix in zone.regions.entries.items()},
        'records': records
    }
