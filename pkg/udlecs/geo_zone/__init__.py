from .schemas import GeoZone, QnameRecords, RegionalAnswer, LocationPrefixMap
from .prefix_map import (
    build_prefix_map,
    default_prefix_map,
    make_prefix_map,
    region_to_prefix
)
from .loader import load_zone, parse_zone, zone_to_document
from .lookup import lookup, lookup_by_source, response_scope, LookupResult

__all__ = [
    'GeoZone',
    'QnameRecords',
    'RegionalAnswer',
    'LocationPrefixMap',
    'build_prefix_map',
    'default_prefix_map',
    'make_prefix_map',
    'region_to_prefix',
    'load_zone',
    'parse_zone',
    'zone_to_document',
    'lookup',
    'lookup_by_source',
    'response_scope',
    'LookupResult'
]
