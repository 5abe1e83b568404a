import re
from collections import defaultdict
from typing import Dict, Iterable, List, Optional, Set, Tuple, Union

from udlecs.core import EnvConfig, UnknownDevice, toolkit_logger
from .schemas import CaptureLog, CaptureRecord, DomainSet, Window


NUMBERED_LABEL = re.compile(r'^([a-z_-]*?)(\d+)$')


def resolve_threshold(pool_threshold: Optional[int]) -> int:
    "None 使用配置值，0 表示不合并"
    if pool_threshold is None:
        return EnvConfig.get_config().POOL_THRESHOLD
    return pool_threshold


def select(
    log: CaptureLog,
    device: str,
    ip_based_location: str,
    user_defined_location: str,
    window: Window = None
) -> List[CaptureRecord]:
    "匹配 (d, ℓ, ℓ′) 的记录，window 为闭区间 [t0, t1]"
    if not any(record.device_id == device for record in log.records):
        raise UnknownDevice(f'device {device!r} is not in the log', log.source or None)
    selected = []
    for record in log.records:
        if record.device_id != device:
            continue
        if record.ip_based_location != ip_based_location or record.user_defined_location != user_defined_location:
            continue
        if window is not None and not window[0] <= record.timestamp <= window[1]:
            continue
        selected.append(record)
    return selected


def _is_pattern(name: str) -> bool:
    return '[' in name


def collapse_pools(
    domains: Union[DomainSet, Iterable[str]],
    pool_threshold: Optional[int] = None
) -> DomainSet:
    """
    只在一个标签上不同、且该标签为 前缀+数字 的域名合并为 prefix[min-max]
    标签位置从左到右依次处理，已经是模式的名称不再参与合并
    """
    if isinstance(domains, DomainSet):
        members, concrete = set(domains.members), set(domains.concrete)
    else:
        members = set(domains)
        concrete = {name for name in members if not _is_pattern(name)}
    threshold = resolve_threshold(pool_threshold)
    if not threshold:
        return DomainSet(members=frozenset(members), concrete=frozenset(concrete))
    depth = max((name.count('.') + 1 for name in members), default=0)
    for position in range(depth):
        groups: Dict[tuple, List[Tuple[str, str]]] = defaultdict(list)
        for name in members:
            if _is_pattern(name):
                continue
            labels = name.split('.')
            if position >= len(labels):
                continue
            match = NUMBERED_LABEL.match(labels[position])
            if match is None:
                continue
            prefix, digits = match.groups()
            key = (len(labels), tuple(labels[:position]), prefix, tuple(labels[position + 1:]))
            groups[key].append((name, digits))
        for (_, before, prefix, after), group in groups.items():
            if len(group) < threshold:
                continue
            digits = sorted((entry[1] for entry in group), key=lambda value: (int(value), value))
            pattern = '.'.join(before + (f'{prefix}[{digits[0]}-{digits[-1]}]',) + after)
            members.difference_update(entry[0] for entry in group)
            members.add(pattern)
            toolkit_logger.debug(f'Pool {pattern} <- {len(group)} names')
    return DomainSet(members=frozenset(members), concrete=frozenset(concrete))


def domain_set(
    log: CaptureLog,
    device: str,
    ip_based_location: str,
    user_defined_location: str,
    window: Window = None,
    pool_threshold: Optional[int] = None
) -> DomainSet:
    records = select(log, device, ip_based_location, user_defined_location, window)
    return collapse_pools({record.qname for record in records}, pool_threshold)


def stabilization_time(
    log: CaptureLog,
    device: str,
    ip_based_location: str,
    user_defined_location: str
) -> Optional[int]:
    "最后一个首次出现的域名的时间戳；选择为空时返回None"
    seen: Set[str] = set()
    last_new = None
    for record in select(log, device, ip_based_location, user_defined_location):
        if record.qname not in seen:
            seen.add(record.qname)
            last_new = record.timestamp
    return last_new
