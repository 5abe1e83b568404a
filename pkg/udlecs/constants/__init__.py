from .dns import DnsCodes, QTYPE_BY_NAME, QTYPE_BY_CODE, FAMILY_MAX_PREFIX
from .limit import Limits
from .region import RegionData, RegionAliases
from .resolver import ResolverPresets, ProbeSubnet

__all__ = [
    'DnsCodes',
    'QTYPE_BY_NAME',
    'QTYPE_BY_CODE',
    'FAMILY_MAX_PREFIX',
    'Limits',
    'RegionData',
    'RegionAliases',
    'ResolverPresets',
    'ProbeSubnet'
]
