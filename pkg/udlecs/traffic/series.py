from typing import List, Set

from .domains import select
from .schemas import CaptureLog, CountPoint


def cumulative_counts(
    log: CaptureLog,
    device: str,
    ip_based_location: str,
    user_defined_location: str,
    bucket: int
) -> List[CountPoint]:
    '''
    从第一条记录开始，每隔 bucket 秒统计一次累计的不同域名数和不同IP数

    统计区间为 [start, start + k * bucket)，直到第一个超过最后一条记录的边界
    域名按原始名称统计，不做域名池合并
    '''
    if bucket <= 0:
        raise ValueError(f'bucket must be positive, got {bucket}')
    records = select(log, device, ip_based_location, user_defined_location)
    if not records:
        return []
    start, last = records[0].timestamp, records[-1].timestamp
    domains: Set[str] = set()
    ips: Set[object] = set()
    points = []
    index = 0
    boundary = start + bucket
    while True:
        while index < len(records) and records[index].timestamp < boundary:
            domains.add(records[index].qname)
            ips.update(records[index].resolved_ips)
            index += 1
        points.append(CountPoint(boundary, len(domains), len(ips)))
        if boundary > last:
            break
        boundary += bucket
    return points
