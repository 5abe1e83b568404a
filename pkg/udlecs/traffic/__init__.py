from .schemas import CaptureRecord, CaptureLog, DomainSet, CountPoint, ImpactRow, SynthProfile
from .ingest import ingest_log, parse_log, parse_record, format_log, format_record
from .domains import select, domain_set, collapse_pools, stabilization_time
from .similarity import jaccard, uds, ipbs, similarity_matrix, location_impact, empirical_cdf
from .series import cumulative_counts
from .synth import synthesize_log

__all__ = [
    'CaptureRecord',
    'CaptureLog',
    'DomainSet',
    'CountPoint',
    'ImpactRow',
    'SynthProfile',
    'ingest_log',
    'parse_log',
    'parse_record',
    'format_log',
    'format_record',
    'select',
    'domain_set',
    'collapse_pools',
    'stabilization_time',
    'jaccard',
    'uds',
    'ipbs',
    'similarity_matrix',
    'location_impact',
    'empirical_cdf',
    'cumulative_counts',
    'synthesize_log'
]
