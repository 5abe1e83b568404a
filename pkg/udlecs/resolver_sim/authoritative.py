from typing import List, Optional

from udlecs.core import NameNotFound, toolkit_logger
from udlecs.constants import DnsCodes
from udlecs.dns_wire import DnsMessage, decode_message, encode_message
from udlecs.geo_zone import GeoZone, lookup, lookup_by_source, response_scope
from udlecs.utils import IPAddress


class Authoritative:
    """
    ECS感知的权威服务器

    legacy_geo: 查询不带ECS时按请求来源(解析器)地址选择应答，
    用于模拟不使用ECS的传统地理解析
    """
    def __init__(self, zone: GeoZone, legacy_geo: bool = False):
        self.zone = zone
        self.legacy_geo = legacy_geo
        # 收到的每一条查询，供转发检查使用
        self.received: List[DnsMessage] = []

    def answer(self, query: DnsMessage, source: Optional[IPAddress] = None) -> DnsMessage:
        self.received.append(query)
        ecs = query.ecs
        try:
            if (ecs is None or ecs.source_prefix_len == 0) and self.legacy_geo and source is not None:
                result = lookup_by_source(self.zone, query.question.qname, source)
            else:
                result = lookup(self.zone, query.question.qname, ecs)
        except NameNotFound:
            toolkit_logger.debug(f'NXDOMAIN {query.question.qname}')
            return query.make_response(rcode=DnsCodes.RCODE_NXDOMAIN, ecs=ecs.with_scope(0) if ecs else None)
        scope = response_scope(self.zone, query.question.qname, ecs, result.scope)
        wanted = 4 if query.question.qtype == 'A' else 6
        addresses = tuple(address for address in result.addresses if address.version == wanted)
        return query.make_response(
            addresses=addresses,
            ttl=result.ttl,
            ecs=ecs.with_scope(scope) if ecs else None
        )

    def handle(self, data: bytes, source: Optional[IPAddress] = None) -> bytes:
        "wire格式的查询 -> wire格式的回应"
        return encode_message(self.answer(decode_message(data), source))
