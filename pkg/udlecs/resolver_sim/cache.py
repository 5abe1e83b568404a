from typing import Dict, Optional, Tuple

from udlecs.core import toolkit_logger
from udlecs.dns_wire import EcsOption, QType, truncate_to_prefix
from udlecs.utils import IPAddress
from .schemas import CacheEntry


class VirtualClock:
    "模拟时间，只在调用 advance 时前进"
    def __init__(self, now: float = 0.0):
        self.now = float(now)

    def advance(self, seconds: float) -> float:
        if seconds < 0:
            raise ValueError('clock only moves forward')
        self.now += seconds
        return self.now


class ScopeCache:
    """
    按 ECS scope 区分的应答缓存，容量不限，只按TTL过期
    """
    def __init__(self):
        self.entries: Dict[tuple, CacheEntry] = {}

    def __len__(self) -> int:
        return len(self.entries)

    def expire(self, now: float) -> int:
        expired = [key for key, entry in self.entries.items() if entry.expires_at <= now]
        for key in expired:
            del self.entries[key]
        return len(expired)

    def store(
        self,
        qname: str,
        qtype: QType,
        ecs: Optional[EcsOption],
        scope_prefix_len: int,
        addresses: Tuple[IPAddress, ...],
        ttl: int,
        now: float
    ) -> Optional[CacheEntry]:
        if ttl <= 0:
            return None
        if ecs is None or ecs.source_prefix_len == 0:
            entry = CacheEntry(qname=qname, qtype=qtype, addresses=addresses, expires_at=now + ttl)
        else:
            # scope 比 source 更具体时只用于相同的 source
            exact = scope_prefix_len == 0 or scope_prefix_len > ecs.source_prefix_len
            match_len = ecs.source_prefix_len if exact else scope_prefix_len
            entry = CacheEntry(
                qname=qname,
                qtype=qtype,
                family=ecs.family,
                source_prefix_len=ecs.source_prefix_len,
                scope_prefix_len=scope_prefix_len,
                network=truncate_to_prefix(ecs.ip_address(), match_len),
                addresses=addresses,
                expires_at=now + ttl
            )
        self.entries[entry.key] = entry
        return entry

    def find(self, qname: str, qtype: QType, ecs: Optional[EcsOption], now: float) -> Optional[CacheEntry]:
        self.expire(now)
        ecs_less = ecs is None or ecs.source_prefix_len == 0
        best = None
        for entry in self.entries.values():
            if entry.qname != qname or entry.qtype != qtype:
                continue
            if ecs_less or entry.family == 0:
                if ecs_less and entry.family == 0:
                    return entry
                continue
            if entry.family != ecs.family:
                continue
            if entry.exact_source:
                if entry.source_prefix_len != ecs.source_prefix_len:
                    continue
            elif entry.scope_prefix_len > ecs.source_prefix_len:
                continue
            if truncate_to_prefix(ecs.ip_address(), entry.match_prefix_len) != entry.network:
                continue
            if best is None or entry.match_prefix_len > best.match_prefix_len:
                best = entry
        return best
