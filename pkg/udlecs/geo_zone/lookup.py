from typing import NamedTuple, Optional, Tuple

from udlecs.core import NameNotFound
from udlecs.dns_wire import EcsOption
from udlecs.utils import PrefixUtils, IPAddress
from .schemas import GeoZone, QnameRecords


class LookupResult(NamedTuple):
    addresses: Tuple[IPAddress, ...]
    scope: int
    ttl: int


def _records(zone: GeoZone, qname: str) -> QnameRecords:
    records = zone.records.get(qname)
    if records is None:
        raise NameNotFound(f'{qname} is not in zone {zone.origin!r}')
    return records


def lookup(zone: GeoZone, qname: str, ecs: Optional[EcsOption] = None) -> LookupResult:
    """
    ECS感知的应答选择
    1. 没有ECS或 source_prefix_len = 0 -> 所有地区的地址, scope 0
    2. 最长前缀匹配命中 -> 该地区的地址, scope = 匹配前缀长度
    3. 没有匹配 -> 所有地区的地址, scope 0
    """
    records = _records(zone, qname)
    if ecs is None or ecs.source_prefix_len == 0:
        return LookupResult(records.default, 0, records.ttl)
    match = records.longest_match(ecs.network())
    if match is None:
        return LookupResult(records.default, 0, records.ttl)
    network, answer = match
    return LookupResult(answer.addresses, network.prefixlen, answer.ttl)


def lookup_by_source(zone: GeoZone, qname: str, source: IPAddress) -> LookupResult:
    "按请求来源地址应答(不使用ECS的传统地理解析)，结果不随客户端变化，scope 为0"
    records = _records(zone, qname)
    match = records.longest_match(PrefixUtils.network_of(source, source.max_prefixlen))
    if match is None:
        return LookupResult(records.default, 0, records.ttl)
    return LookupResult(match[1].addresses, 0, match[1].ttl)


def response_scope(zone: GeoZone, qname: str, ecs: Optional[EcsOption], scope: int) -> int:
    """
    回应中可以安全缓存的 scope

    匹配前缀内部还有更具体的前缀时，返回不覆盖这些前缀的最短长度；
    source 块本身就与更具体的前缀重叠时，返回大于 source 的长度，
    解析器只会把这样的应答用于相同的 source
    """
    if ecs is None or scope == 0:
        return scope
    records = _records(zone, qname)
    address = ecs.ip_address()
    matched = PrefixUtils.network_of(address, scope)
    nested = [
        answer.prefix for answer in records.answers
        if answer.prefix.version == address.version
        and answer.prefix.prefixlen > scope
        and answer.prefix.subnet_of(matched)
    ]
    if not nested:
        return scope
    for length in range(scope, ecs.source_prefix_len + 1):
        block = PrefixUtils.network_of(address, length)
        if not any(prefix.overlaps(block) for prefix in nested):
            return length
    source_block = ecs.network()
    return min(prefix.prefixlen for prefix in nested if prefix.overlaps(source_block))
