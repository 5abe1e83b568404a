import random
from typing import List, Optional, Sequence, Tuple

from udlecs.core import toolkit_logger
from udlecs.constants import RegionData
from .builder import generate_mud
from .schemas import MudFile, RegionDomainGroup


# 地区标签在域名中的位置: 最左侧子域 / service 前面的子域
VARIANT_STYLES = ('{region}.{service}.example', 'api.{region}.{service}.example')


def synthesize_region_muds(
    seed: int = 0,
    regions: Optional[Sequence[str]] = None,
    services: int = 2,
    shared: int = 1,
    device_id: str = 'synthetic-device'
) -> Tuple[List[MudFile], List[RegionDomainGroup]]:
    """
    每个地区一个MUD文件
    每个服务在每个地区使用一个带地区标签的域名，另有 shared 个所有地区共用的域名
    返回 (按地区顺序的MUD文件, 对应的地区域名分组)
    """
    rng = random.Random(seed)
    regions = list(regions or RegionData.DefaultRegions)
    styles = [rng.choice(VARIANT_STYLES) for _ in range(services)]
    groups = []
    for number, style in enumerate(styles):
        service = f'svc{number:02d}'
        variants = {region: style.format(region=region.lower(), service=service) for region in regions}
        canonical = style.replace('{region}.', '').format(service=service)
        groups.append(RegionDomainGroup(canonical_domain=canonical, regional_variants=variants))
    shared_domains = [f'shared{number}.common.example' for number in range(shared)]
    muds = []
    for region in regions:
        domains = [group.regional_variants[region] for group in groups] + shared_domains
        muds.append(generate_mud(domains, device_id))
    toolkit_logger.info(f'Synthesized {len(muds)} regional MUD files ({services} services, {shared} shared, seed {seed})')
    return muds, groups
