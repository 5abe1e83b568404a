import ipaddress
from typing import Dict, Iterable

from udlecs.core import OverlapError, UnknownRegion, ParseError
from udlecs.constants import RegionData
from udlecs.utils import StringUtils, IPNetwork
from .schemas import LocationPrefixMap


def _carving_pool() -> Iterable[IPNetwork]:
    "文档地址段在前，之后是 198.18.0.0/15 中的 /24"
    for text in RegionData.DocumentationPrefixes:
        yield ipaddress.ip_network(text)
    benchmark = ipaddress.ip_network(RegionData.BenchmarkPrefix)
    yield from benchmark.subnets(new_prefix=RegionData.CarvedPrefixLength)


def check_prefix_map(entries: Dict[str, IPNetwork]) -> None:
    "地区代码格式正确，前缀两两不重叠"
    for region in entries:
        if not StringUtils.is_valid_region(region):
            raise ParseError(f'invalid region code {region!r}', 'regions')
    items = sorted(entries.items())
    for i, (region_a, prefix_a) in enumerate(items):
        for region_b, prefix_b in items[i + 1:]:
            if prefix_a.version == prefix_b.version and prefix_a.overlaps(prefix_b):
                raise OverlapError(f'{region_a} {prefix_a} overlaps {region_b} {prefix_b}', 'regions')


def make_prefix_map(entries: Dict[str, IPNetwork]) -> LocationPrefixMap:
    check_prefix_map(entries)
    return LocationPrefixMap(entries=dict(sorted(entries.items())))


def build_prefix_map(regions: Iterable[str] = None) -> LocationPrefixMap:
    """按地区代码字典序依次分配互不重叠的 /24"""
    regions = sorted(set(regions if regions is not None else RegionData.DefaultRegions))
    pool = _carving_pool()
    entries = {}
    for region in regions:
        try:
            entries[region] = next(pool)
        except StopIteration:
            raise OverlapError(f'prefix pool exhausted at region {region}', 'regions')
    return make_prefix_map(entries)


def default_prefix_map() -> LocationPrefixMap:
    return build_prefix_map(RegionData.DefaultRegions)


def region_to_prefix(prefix_map: LocationPrefixMap, region: str) -> IPNetwork:
    if region not in prefix_map.entries:
        raise UnknownRegion(f'region {region!r} is not in the location prefix map')
    return prefix_map.entries[region]
