import os
import json
import ipaddress
from typing import Optional

import pandas as pd
from pydantic import ValidationError

from udlecs.core import ParseError, InvalidDevice, toolkit_logger
from udlecs.constants import Limits, ProbeSubnet
from udlecs.dns_wire import DnsMessage, EcsOption, canonical_name
from udlecs.geo_zone import (
    GeoZone, LocationPrefixMap, QnameRecords, RegionalAnswer,
    default_prefix_map, load_zone
)
from udlecs.utils import JsonUtils, IPAddress
from .authoritative import Authoritative
from .cache import VirtualClock
from .device import host_address, make_device, validate_device, stub_query, parse_client_address
from .policy import default_rewrite_policy
from .resolver import ResolverState, resolve
from .schemas import (
    Architecture, DeviceConfig, ForwardPolicy, ForwardProbe, Hop,
    ResolverPolicy, ScenarioDocument, ScenarioTranscript, StripPolicy
)
from .transport import InProcessChannel


TRANSCRIPT_COLUMNS = [
    'hop_index', 'sender', 'receiver', 'qname', 'ecs_family',
    'ecs_prefix', 'ecs_address', 'answer_ips', 'scope'
]
PROBE_QNAME = 'ecs-probe.udlecs.test'
PROBE_ANSWER = '192.0.2.111'
PROBE_CLIENT = '198.51.100.7'


def scenario_prefix_map(zone: GeoZone) -> LocationPrefixMap:
    "zone 自带地区表时使用它，否则使用默认地区表"
    return zone.regions if zone.regions.entries else default_prefix_map()


def run_scenario(
    arch: Architecture,
    cfg: DeviceConfig,
    qname: str,
    zone: GeoZone,
    resolver_location: Optional[str] = None,
    policy: Optional[ResolverPolicy] = None,
    prefix_map: Optional[LocationPrefixMap] = None,
    clock: Optional[VirtualClock] = None
) -> ScenarioTranscript:
    '''
    standard          -> 解析器删除ECS，权威服务器按解析器地址应答
    ecs_basic         -> 解析器用设备地址的 /24 生成ECS
    ecs_user_defined  -> 设备在ECS中写入用户选择的地区，解析器原样转发

    policy 不为None时替换该架构默认的解析器策略
    '''
    prefix_map = prefix_map or scenario_prefix_map(zone)
    validate_device(cfg, prefix_map)
    resolver_location = resolver_location or cfg.ip_based_location
    resolver_address = host_address(prefix_map, resolver_location, Limits.ResolverHostOffset)
    if arch == 'standard':
        default_policy, legacy_geo = StripPolicy(), True
        query = DnsMessage.make_query(qname)
    elif arch == 'ecs_basic':
        default_policy, legacy_geo = default_rewrite_policy(), False
        query = DnsMessage.make_query(qname)
    else:
        default_policy, legacy_geo = ForwardPolicy(), False
        query = stub_query(cfg, qname, prefix_map)
    state = ResolverState(
        policy=policy or default_policy,
        resolver_location=resolver_location,
        resolver_address=resolver_address,
        clock=clock,
        legacy_geo=legacy_geo
    )
    hops = [Hop(hop_index=0, sender='device', receiver='resolver', qname=query.question.qname, ecs=query.ecs)]
    response, state = resolve(state, query, zone, cfg.client_address, hops)
    hops.append(Hop(
        hop_index=len(hops),
        sender='resolver',
        receiver='device',
        qname=response.question.qname,
        ecs=response.ecs,
        answer_ips=response.addresses,
        rcode=response.rcode
    ))
    toolkit_logger.info(
        f'Scenario {arch} {cfg.device_id} ip={cfg.ip_based_location} user={cfg.user_defined_location} '
        f'resolver={resolver_location} -> {" ".join(map(str, response.addresses)) or "-"}'
    )
    return ScenarioTranscript(architecture=arch, device_id=cfg.device_id, hops=tuple(hops))


def _probe_zone() -> GeoZone:
    probe = ipaddress.ip_network(ProbeSubnet)
    answer = ipaddress.ip_address(PROBE_ANSWER)
    records = QnameRecords(answers=(RegionalAnswer(prefix=probe, addresses=(answer,)),), default=(answer,))
    return GeoZone(origin='udlecs.test', records={PROBE_QNAME: records})


def _same_subnet(a: Optional[EcsOption], b: Optional[EcsOption]) -> bool:
    if a is None or b is None:
        return False
    return (a.family, a.source_prefix_len, a.address) == (b.family, b.source_prefix_len, b.address)


def probe_ecs_forwarding(policy: ResolverPolicy, client_address: Optional[IPAddress] = None) -> ForwardProbe:
    """
    通过解析器发送携带 111.111.111.0/24 的查询，
    检查权威服务器收到的ECS以及回应中的ECS是否与发送的一致
    """
    sent = EcsOption.from_network(ipaddress.ip_network(ProbeSubnet))
    authoritative = Authoritative(_probe_zone())
    state = ResolverState(policy=policy, resolver_location='', upstream=InProcessChannel(authoritative))
    query = DnsMessage.make_query(PROBE_QNAME, ecs=sent)
    response, _ = resolve(state, query, authoritative.zone, client_address or ipaddress.ip_address(PROBE_CLIENT))
    received = authoritative.received[-1].ecs if authoritative.received else None
    return ForwardProbe(
        policy=policy.kind,
        sent=sent.describe(),
        received=received.describe() if received else None,
        echoed=response.ecs.describe() if response.ecs else None,
        forwarded=_same_subnet(sent, received),
        echo_matches=_same_subnet(sent, response.ecs)
    )


# ------------------------------------------------------
# 场景文件 / transcript 输出
# ------------------------------------------------------

def load_scenario(path: str) -> ScenarioDocument:
    try:
        raw = json.loads(JsonUtils.read_text(path))
    except OSError as e:
        raise ParseError(e.strerror or str(e), path)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, f'{path}: line {e.lineno} column {e.colno}')
    try:
        return ScenarioDocument.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        raise ParseError(first['msg'], f'{path}: ' + '/'.join(str(part) for part in first['loc']))


def device_from_document(doc: ScenarioDocument, prefix_map: LocationPrefixMap) -> DeviceConfig:
    device = doc.device
    try:
        if device.client_address is None:
            return make_device(device.device_id, device.ip_based_location, device.user_defined_location, prefix_map)
        cfg = DeviceConfig(
            device_id=device.device_id,
            ip_based_location=device.ip_based_location,
            user_defined_location=device.user_defined_location,
            client_address=parse_client_address(device.client_address)
        )
    except ValidationError as e:
        first = e.errors()[0]
        raise InvalidDevice(first['msg'], 'device/' + '/'.join(str(part) for part in first['loc']))
    return validate_device(cfg, prefix_map)


def run_scenario_file(path: str, zone_path: Optional[str] = None) -> ScenarioTranscript:
    "zone 的相对路径以场景文件所在目录为基准"
    doc = load_scenario(path)
    if zone_path is None:
        zone_path = os.path.join(os.path.dirname(os.path.abspath(path)), doc.zone)
    zone = load_zone(zone_path)
    prefix_map = scenario_prefix_map(zone)
    cfg = device_from_document(doc, prefix_map)
    return run_scenario(
        doc.architecture,
        cfg,
        canonical_name(doc.qname),
        zone,
        resolver_location=doc.resolver_location,
        policy=doc.policy,
        prefix_map=prefix_map
    )


def transcript_frame(transcript: ScenarioTranscript) -> pd.DataFrame:
    return pd.DataFrame([hop.to_row() for hop in transcript.hops], columns=TRANSCRIPT_COLUMNS)


def transcript_csv(transcript: ScenarioTranscript) -> str:
    return transcript_frame(transcript).to_csv(index=False, lineterminator='\n')
