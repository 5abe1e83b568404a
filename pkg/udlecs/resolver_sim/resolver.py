from typing import List, Optional, Tuple

from udlecs.core import toolkit_logger
from udlecs.constants import DnsCodes
from udlecs.dns_wire import DnsMessage, EcsOption, QType, decode_message, encode_message
from udlecs.geo_zone import GeoZone
from udlecs.utils import IPAddress
from .authoritative import Authoritative
from .cache import ScopeCache, VirtualClock
from .policy import apply_policy
from .schemas import Hop, ResolverPolicy
from .transport import Channel, InProcessChannel


class ResolverState:
    '''递归解析器的状态

    同一个实例只允许一个调用方按顺序使用；
    并发模拟请为每个调用方创建独立的实例
    '''
    def __init__(
        self,
        policy: ResolverPolicy,
        resolver_location: str,
        resolver_address: Optional[IPAddress] = None,
        clock: Optional[VirtualClock] = None,
        upstream: Optional[Channel] = None,
        legacy_geo: bool = False
    ):
        self.policy = policy
        self.resolver_location = resolver_location
        self.resolver_address = resolver_address
        self.cache = ScopeCache()
        self.clock = clock or VirtualClock()
        # 没有指定上游时，按调用时传入的 zone 建立进程内通道
        self.upstream = upstream
        self.legacy_geo = legacy_geo
        self.authoritative: Optional[Authoritative] = None
        self.hits = 0
        self.misses = 0

    def channel_for(self, zone: GeoZone) -> Channel:
        if self.upstream is not None:
            return self.upstream
        if self.authoritative is None or self.authoritative.zone is not zone:
            self.authoritative = Authoritative(zone, legacy_geo=self.legacy_geo)
        return InProcessChannel(self.authoritative, self.resolver_address)


def cache_lookup(
    state: ResolverState,
    qname: str,
    qtype: QType,
    effective_ecs: Optional[EcsOption]
) -> Optional[Tuple[IPAddress, ...]]:
    entry = state.cache.find(qname, qtype, effective_ecs, state.clock.now)
    return entry.addresses if entry is not None else None


def _exchange(state: ResolverState, zone: GeoZone, message: DnsMessage) -> bytes:
    return state.channel_for(zone).exchange(encode_message(message))


def _remaining_ttl(expires_at: float, now: float) -> int:
    return max(int(expires_at - now), 0)


def resolve(
    state: ResolverState,
    query: DnsMessage,
    zone: GeoZone,
    client_address: Optional[IPAddress] = None,
    hops: Optional[List[Hop]] = None
) -> Tuple[DnsMessage, ResolverState]:
    """
    按策略处理客户端ECS，先查缓存，未命中时询问权威服务器

    state 原地更新并一起返回
    hops 不为None时记录 解析器 <-> 权威服务器 之间的消息
    """
    qname, qtype = query.question.qname, query.question.qtype
    effective = apply_policy(state.policy, query.ecs, client_address)
    now = state.clock.now
    entry = state.cache.find(qname, qtype, effective, now)
    if entry is not None:
        state.hits += 1
        toolkit_logger.debug(f'Cache hit {qname}/{qtype} {effective.describe() if effective else "-"}')
        echo = effective.with_scope(entry.scope_prefix_len) if effective else None
        response = query.make_response(
            addresses=entry.addresses,
            ttl=_remaining_ttl(entry.expires_at, now),
            ecs=echo,
            recursion_available=True
        )
        return response, state
    state.misses += 1
    toolkit_logger.debug(f'Cache miss {qname}/{qtype} {effective.describe() if effective else "-"}')
    upstream_query = query.with_ecs(effective).model_copy(update={'recursion_desired': False})
    if hops is not None:
        hops.append(Hop(
            hop_index=len(hops), sender='resolver', receiver='authoritative', qname=qname, ecs=effective
        ))
    upstream_response = decode_message(_exchange(state, zone, upstream_query))
    if hops is not None:
        hops.append(Hop(
            hop_index=len(hops),
            sender='authoritative',
            receiver='resolver',
            qname=qname,
            ecs=upstream_response.ecs,
            answer_ips=upstream_response.addresses,
            rcode=upstream_response.rcode
        ))
    scope = upstream_response.ecs.scope_prefix_len if upstream_response.ecs else 0
    if upstream_response.rcode == DnsCodes.RCODE_NOERROR:
        ttl = min((rr.ttl for rr in upstream_response.answers), default=0)
        state.cache.store(qname, qtype, effective, scope, upstream_response.addresses, ttl, now)
    response = query.make_response(
        addresses=upstream_response.addresses,
        ttl=min((rr.ttl for rr in upstream_response.answers), default=0),
        rcode=upstream_response.rcode,
        ecs=effective.with_scope(scope) if effective else None,
        recursion_available=True
    )
    return response, state