import json
from typing import List, Sequence, Union

from pydantic import ValidationError

from udlecs.core import SchemaError
from udlecs.utils import JsonUtils
from .schemas import (
    Ace, MudFile, RegionDomainGroup,
    MudDocument, GroupsDocument
)


def _schema_error(e: ValidationError, source: str) -> SchemaError:
    first = e.errors()[0]
    path = '/'.join(str(part) for part in first['loc'])
    return SchemaError(first['msg'], f'{source}: {path}' if path else source)


def _load_json(data: Union[bytes, str], source: str):
    if isinstance(data, bytes):
        data = data.decode('utf-8')
    try:
        return json.loads(data)
    except json.JSONDecodeError as e:
        raise SchemaError(e.msg, f'{source}: line {e.lineno} column {e.colno}')


def _port_document(port):
    return 'any' if port is None else port


def mud_document(mud: MudFile) -> dict:
    aces = []
    for index, ace in enumerate(mud.acl):
        aces.append({
            'name': f'ace-{index}',
            'matches': {
                'legitimate_endpoint': {'kind': ace.endpoint_kind, 'value': ace.endpoint},
                'protocol': ace.protocol,
                'source_port': _port_document(ace.source_port),
                'destination_port': _port_document(ace.destination_port),
                'direction': ace.direction
            },
            'actions': {'forwarding': ace.action}
        })
    return {
        'ietf-mud:mud': {
            'mud-version': 1,
            'mud-url': mud.mud_url,
            'device-id': mud.device_id,
            'default-action': mud.default_action
        },
        'ietf-access-control-list:acls': {
            'acl': [{'name': f'{mud.device_id}-acl', 'aces': {'ace': aces}}]
        }
    }


def serialize_mud(mud: MudFile) -> bytes:
    return JsonUtils.dumps(mud_document(mud)).encode('utf-8')


def parse_mud(data: Union[bytes, str], source: str = '<mud>') -> MudFile:
    raw = _load_json(data, source)
    try:
        doc = MudDocument.model_validate(raw)
    except ValidationError as e:
        raise _schema_error(e, source)
    aces = []
    for acl_index, acl in enumerate(doc.acls.acl):
        for ace_index, entry in enumerate(acl.aces.ace):
            matches = entry.matches
            try:
                aces.append(Ace(
                    endpoint=matches.legitimate_endpoint.value,
                    endpoint_kind=matches.legitimate_endpoint.kind,
                    protocol=matches.protocol,
                    source_port=None if matches.source_port == 'any' else matches.source_port,
                    destination_port=None if matches.destination_port == 'any' else matches.destination_port,
                    direction=matches.direction,
                    action=entry.actions.forwarding
                ))
            except ValidationError as e:
                raise SchemaError(
                    e.errors()[0]['msg'],
                    f'{source}: ietf-access-control-list:acls/acl/{acl_index}/aces/ace/{ace_index}'
                )
    try:
        return MudFile(device_id=doc.mud.device_id, mud_url=doc.mud.mud_url, acl=tuple(aces))
    except ValidationError as e:
        raise _schema_error(e, source)


def load_mud(path: str) -> MudFile:
    try:
        text = JsonUtils.read_text(path)
    except OSError as e:
        raise SchemaError(e.strerror or str(e), path)
    return parse_mud(text, path)


def write_mud(mud: MudFile, path: str) -> None:
    JsonUtils.write_text(path, serialize_mud(mud).decode('utf-8'))


# ------------------------------------------------------
# 地区域名分组文件
# {"groups": [{"canonical_domain": ..., "regional_variants": {"UK": ...}}]}
# ------------------------------------------------------

def parse_groups(text: str, source: str = '<groups>') -> List[RegionDomainGroup]:
    if not text.strip():
        return []
    raw = _load_json(text, source)
    try:
        return list(GroupsDocument.model_validate(raw).groups)
    except ValidationError as e:
        raise _schema_error(e, source)


def load_groups(path: str) -> List[RegionDomainGroup]:
    try:
        text = JsonUtils.read_text(path)
    except OSError as e:
        raise SchemaError(e.strerror or str(e), path)
    return parse_groups(text, path)


def groups_document(groups: Sequence[RegionDomainGroup]) -> dict:
    return {'groups': [group.model_dump() for group in groups]}


def write_groups(groups: Sequence[RegionDomainGroup], path: str) -> None:
    JsonUtils.write(path, groups_document(groups))
