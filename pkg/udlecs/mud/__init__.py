from .schemas import Ace, AceTemplate, MudFile, RegionDomainGroup, CollapseReport, SweepRow
from .builder import generate_mud, unify, domain_count
from .collapse import ecs_collapse, suggest_groups
from .metrics import reduction_ratio, overhead_ratio, mud_similarity, reduction_sweep
from .codec import (
    serialize_mud,
    parse_mud,
    load_mud,
    write_mud,
    parse_groups,
    load_groups,
    write_groups,
    groups_document
)
from .synth import synthesize_region_muds

__all__ = [
    'Ace',
    'AceTemplate',
    'MudFile',
    'RegionDomainGroup',
    'CollapseReport',
    'SweepRow',
    'generate_mud',
    'unify',
    'domain_count',
    'ecs_collapse',
    'suggest_groups',
    'reduction_ratio',
    'overhead_ratio',
    'mud_similarity',
    'reduction_sweep',
    'serialize_mud',
    'parse_mud',
    'load_mud',
    'write_mud',
    'parse_groups',
    'load_groups',
    'write_groups',
    'groups_document',
    'synthesize_region_muds'
]
