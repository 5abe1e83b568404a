from fractions import Fraction
from typing import List, Sequence

from udlecs.core import DivisionGuard
from udlecs.utils import SetUtils
from .builder import domain_count, unify
from .collapse import ecs_collapse
from .schemas import MudFile, RegionDomainGroup, SweepRow


def reduction_ratio(unified: MudFile, ecs: MudFile) -> Fraction:
    "(U - E) / U"
    unified_count, ecs_count = domain_count(unified), domain_count(ecs)
    if ecs_count == 0:
        raise DivisionGuard(f'ECS MUD has no domains (unified has {unified_count})', ecs.device_id)
    return Fraction(unified_count - ecs_count, unified_count)


def overhead_ratio(unified: MudFile, ecs: MudFile) -> Fraction:
    "(U - E) / E，统一MUD比ECS MUD多出的比例"
    ecs_count = domain_count(ecs)
    if ecs_count == 0:
        raise DivisionGuard('ECS MUD has no domains', ecs.device_id)
    return Fraction(domain_count(unified) - ecs_count, ecs_count)


def mud_similarity(a: MudFile, b: MudFile) -> Fraction:
    return SetUtils.jaccard(set(a.acl), set(b.acl))


def reduction_sweep(region_muds: Sequence[MudFile], groups: Sequence[RegionDomainGroup]) -> List[SweepRow]:
    "依次加入前 k 个地区的MUD文件，k = 1..n"
    rows = []
    for k in range(1, len(region_muds) + 1):
        unified = unify(region_muds[:k])
        ecs, _ = ecs_collapse(unified, groups)
        rows.append(SweepRow(
            locations_included=k,
            unified_domains=domain_count(unified),
            ecs_domains=domain_count(ecs),
            ratio=reduction_ratio(unified, ecs)
        ))
    return rows
