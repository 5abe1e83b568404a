from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from udlecs.core import EmptySelection
from udlecs.utils import SetUtils
from .domains import domain_set
from .schemas import CaptureLog, DomainSet, ImpactRow


def jaccard(a: DomainSet, b: DomainSet) -> Fraction:
    return SetUtils.jaccard(a.members, b.members)


def _required_set(
    log: CaptureLog,
    device: str,
    ip_based_location: str,
    user_defined_location: str,
    pool_threshold: Optional[int]
) -> DomainSet:
    result = domain_set(log, device, ip_based_location, user_defined_location, pool_threshold=pool_threshold)
    if not result.members:
        raise EmptySelection(
            f'no records for ip_based_location={ip_based_location} user_defined_location={user_defined_location}',
            device
        )
    return result


def uds(
    log: CaptureLog,
    device: str,
    location: str,
    first: str,
    second: str,
    pool_threshold: Optional[int] = None
) -> Fraction:
    "IP所在地固定为 location，比较两个用户设置地区下的域名集合"
    return jaccard(
        _required_set(log, device, location, first, pool_threshold),
        _required_set(log, device, location, second, pool_threshold)
    )


def ipbs(
    log: CaptureLog,
    device: str,
    location: str,
    first: str,
    second: str,
    pool_threshold: Optional[int] = None
) -> Fraction:
    "用户设置地区固定为 location，比较两个IP所在地下的域名集合"
    return jaccard(
        _required_set(log, device, first, location, pool_threshold),
        _required_set(log, device, second, location, pool_threshold)
    )


def similarity_matrix(
    log: CaptureLog,
    device: str,
    fixed_location: str,
    regions: Sequence[str],
    pool_threshold: Optional[int] = None
) -> List[List[Fraction]]:
    if len(regions) < 2:
        raise EmptySelection(f'similarity matrix needs at least 2 regions, got {len(regions)}', device)
    sets = []
    missing = []
    for region in regions:
        result = domain_set(log, device, fixed_location, region, pool_threshold=pool_threshold)
        if not result.members:
            missing.append(region)
        sets.append(result)
    if missing:
        raise EmptySelection(
            f'no records for ip_based_location={fixed_location} user_defined_location={",".join(missing)}',
            device
        )
    size = len(regions)
    matrix = [[Fraction(1)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            matrix[i][j] = matrix[j][i] = jaccard(sets[i], sets[j])
    return matrix


def location_impact(
    log: CaptureLog,
    first: str,
    second: str,
    pool_threshold: Optional[int] = None
) -> List[ImpactRow]:
    """
    对比两个地区时每个设备的 uds / ipbs
    四种 (ℓ, ℓ′) 组合中有任何一个没有记录的设备跳过
    """
    rows = []
    for device in log.devices:
        pairs = {
            (ipl, udl): domain_set(log, device, ipl, udl, pool_threshold=pool_threshold)
            for ipl in (first, second) for udl in (first, second)
        }
        if any(not result.members for result in pairs.values()):
            continue
        rows.append(ImpactRow(
            device_id=device,
            uds_first=jaccard(pairs[(first, first)], pairs[(first, second)]),
            uds_second=jaccard(pairs[(second, first)], pairs[(second, second)]),
            ipbs_first=jaccard(pairs[(first, first)], pairs[(second, first)]),
            ipbs_second=jaccard(pairs[(first, second)], pairs[(second, second)]),
            max_domains=max(len(result) for result in pairs.values())
        ))
    return rows


def empirical_cdf(values: Iterable) -> List[Tuple[object, Fraction]]:
    "(取值, 不大于该值的比例)，按取值升序"
    ordered = sorted(values)
    total = len(ordered)
    points = []
    for index, value in enumerate(ordered, start=1):
        if index < total and ordered[index] == value:
            continue
        points.append((value, Fraction(index, total)))
    return points
