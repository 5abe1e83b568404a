from collections import defaultdict
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

from udlecs.core import SchemaError, toolkit_logger
from udlecs.constants import RegionData, RegionAliases
from udlecs.traffic import DomainSet
from .schemas import Ace, CollapseReport, MudFile, RegionDomainGroup


def _variant_index(groups: Sequence[RegionDomainGroup]) -> Dict[str, Tuple[str, str]]:
    "variant -> (canonical_domain, region)"
    index: Dict[str, Tuple[str, str]] = {}
    for group in groups:
        for region, variant in group.regional_variants.items():
            known = index.get(variant)
            if known is not None and known[0] != group.canonical_domain:
                raise SchemaError(
                    f'{variant} is listed under both {known[0]} and {group.canonical_domain}',
                    'groups'
                )
            index[variant] = (group.canonical_domain, region)
    return index


def ecs_collapse(unified: MudFile, groups: Sequence[RegionDomainGroup]) -> Tuple[MudFile, CollapseReport]:
    """
    地区域名替换为统一的 canonical_domain
    同一组内规则元组不一致时，每种元组各保留一条(记为 split)
    组内只出现一个变体时也会被替换，domain_count 不变
    """
    index = _variant_index(groups)
    present = {ace.endpoint for ace in unified.acl if ace.endpoint_kind == 'domain'}
    unmatched = tuple(
        (group.canonical_domain, region, variant)
        for group in groups
        for region, variant in group.regional_variants.items()
        if variant not in present
    )
    for canonical, region, variant in unmatched:
        toolkit_logger.warning(f'Variant {variant} ({region}) of {canonical} is not in the MUD file')
    rules: Dict[str, Set[tuple]] = defaultdict(set)
    aces: List[Ace] = []
    for ace in unified.acl:
        if ace.endpoint_kind == 'domain' and ace.endpoint in index:
            canonical = index[ace.endpoint][0]
            rules[canonical].add(ace.rule)
            aces.append(ace.model_copy(update={'endpoint': canonical}))
        else:
            aces.append(ace)
    splits = tuple(sorted((canonical, len(tuples)) for canonical, tuples in rules.items() if len(tuples) > 1))
    for canonical, count in splits:
        toolkit_logger.warning(f'Group {canonical} has {count} distinct rule tuples, kept one entry per tuple')
    collapsed = MudFile(device_id=unified.device_id, mud_url=unified.mud_url, acl=tuple(aces))
    return collapsed, CollapseReport(unmatched=unmatched, splits=splits)


def _region_codes(regions: Optional[Iterable[str]]) -> Set[str]:
    if regions:
        return {region.upper() for region in regions}
    return set(RegionData.DefaultRegions) | set(RegionAliases.values())


def region_of_label(label: str, codes: Set[str]) -> Optional[str]:
    "标签是地区代码或地区别名时返回地区代码"
    if label.upper() in codes:
        return label.upper()
    alias = RegionAliases.get(label.lower())
    if alias in codes:
        return alias
    return None


def suggest_groups(
    ds: Union[DomainSet, Iterable[str]],
    regions: Optional[Iterable[str]] = None
) -> List[RegionDomainGroup]:
    """
    只有一个标签不同、且该标签是地区代码(或别名)的域名归为一组
    去掉该标签后的名称作为 canonical_domain，结果仅供参考
    """
    members = ds.members if isinstance(ds, DomainSet) else set(ds)
    codes = _region_codes(regions)
    candidates: Dict[tuple, Dict[str, str]] = defaultdict(dict)
    for name in sorted(members):
        labels = name.split('.')
        if len(labels) < 2:
            continue
        for position, label in enumerate(labels):
            region = region_of_label(label, codes)
            if region is None:
                continue
            key = (len(labels), position, tuple(labels[:position]), tuple(labels[position + 1:]))
            variants = candidates[key]
            if region in variants:
                toolkit_logger.debug(f'{name} and {variants[region]} both map to {region}, keep the first')
                continue
            variants[region] = name
    groups = []
    for (_, _, before, after), variants in sorted(candidates.items()):
        if len(variants) < 2:
            continue
        canonical = '.'.join(before + after)
        groups.append(RegionDomainGroup(canonical_domain=canonical, regional_variants=variants))
    return sorted(groups, key=lambda group: group.canonical_domain)
